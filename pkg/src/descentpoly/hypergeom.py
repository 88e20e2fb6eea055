"""Terminating hypergeometric series with integer parameters, exactly.

Every series handled here has all-negative-integer parameters and unit
argument, so it terminates: some numerator Pochhammer hits zero.  The
evaluation is plain Fraction arithmetic; the interesting content is the
validation (no denominator Pochhammer may vanish first) and the identities
the rest of the package checks against descent-polynomial counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .closed_forms import formula_alpha_beta, formula_beta_beta
from .polynomials import poch
from .sets import ALL, IntegerSet, explicit_set

__all__ = [
    "HypergeometricSpec",
    "IllPosedSeriesError",
    "eval_terminating",
    "UVProfile",
    "tau_sequence",
    "verify_balanced_identity",
    "pfaff_saalschutz_lhs",
    "pfaff_saalschutz_rhs",
    "verify_cor35",
]


class IllPosedSeriesError(ValueError):
    """A denominator Pochhammer would vanish at or before termination."""


@dataclass(frozen=True)
class HypergeometricSpec:
    """Parameters of an (m+1)F_m series at argument 1."""

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def termination_index(self) -> int:
        """Last index r with a nonzero term: min of -a over parameters a <= 0."""
        nonpos = [-a for a in self.numerator if a <= 0]
        if not nonpos:
            raise IllPosedSeriesError(
                "series does not terminate: no non-positive numerator parameter"
            )
        return min(nonpos)

    def validate(self):
        r_max = self.termination_index()
        for b in self.denominator:
            # (b)_r is zero for r > -b when b <= 0
            if b <= 0 and -b < r_max:
                raise IllPosedSeriesError(
                    f"denominator parameter {b} vanishes before termination at {r_max}"
                )


def eval_terminating(spec: HypergeometricSpec) -> Fraction:
    spec.validate()
    total = Fraction(0)
    term = Fraction(1)
    for r in range(spec.termination_index() + 1):
        if r > 0:
            num = prod(a + r - 1 for a in spec.numerator)
            den = r * prod(b + r - 1 for b in spec.denominator)
            term *= Fraction(num, den)
        total += term
    return total


@dataclass(frozen=True)
class UVProfile:
    """A weakly increasing array u of offsets and positive lengths v.

    Row i covers columns u_i .. u_i + v_i - 1; f(i) is the column count.
    """

    u: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        if len(self.u) != len(self.v) or not self.u:
            raise ValueError("u and v must be nonempty and equally long")
        if any(x < 0 for x in self.u) or any(x < 1 for x in self.v):
            raise ValueError("need u_i >= 0 and v_i >= 1")
        if any(a > b for a, b in zip(self.u, self.u[1:])):
            raise ValueError("u must be weakly increasing")

    @property
    def k(self) -> int:
        return len(self.u)

    def f(self, i: int) -> int:
        return sum(1 for uj, vj in zip(self.u, self.v) if uj <= i <= uj + vj - 1)

    @property
    def M(self) -> int:
        return max(uj + vj - 1 for uj, vj in zip(self.u, self.v))

    def min_n(self) -> int:
        # large enough both for the leading-zero pad (a >= M) and for the
        # trailing block layout
        return sum(self.v) + max(
            self.M,
            max(uj + vj for uj, vj in zip(self.u, self.v)) - self.u[0],
        )


def tau_sequence(profile: UVProfile, n: int) -> tuple[str, IntegerSet]:
    """The binary word and its support set driving the balanced identity.

    Blocks of 1s of sizes f(M), f(M-1), ..., f(u_1), separated by single
    0s, padded with a - M leading 0s and u_1 trailing 0s, where
    a = n - sum(v).  The leading-pad size makes the total length exactly n.
    """
    if n < profile.min_n():
        raise ValueError(f"need n >= {profile.min_n()} for this profile")
    a = n - sum(profile.v)
    u1, big = profile.u[0], profile.M
    bits = "0" * (a - big)
    bits += "0".join("1" * profile.f(i) for i in range(big, u1 - 1, -1))
    bits += "0" * u1
    assert len(bits) == n
    members = explicit_set(i for i, ch in enumerate(bits, start=1) if ch == "1")
    return bits, members


def _check_balanced(spec: HypergeometricSpec):
    top = sum(spec.numerator)
    bottom = sum(spec.denominator)
    if top + 1 != bottom:
        raise ValueError(
            f"series is not balanced: top sum {top}, bottom sum {bottom}"
        )


def _side(prefactor: int, spec: HypergeometricSpec) -> Fraction:
    if prefactor == 0:
        return Fraction(0)
    _check_balanced(spec)
    return prefactor * eval_terminating(spec)


def verify_balanced_identity(
    profile: UVProfile, n: int, s: int
) -> tuple[Fraction, Fraction, int]:
    """Both balanced series of the transformation, plus the descent count
    they equal.  Returns (left, right, P); callers assert all three agree.
    """
    u, v, k = profile.u, profile.v, profile.k
    a = n - sum(v)
    left_pre = poch(s + 1, a) * prod(poch(s + u[i] + 1, v[i]) for i in range(k))
    left_spec = HypergeometricSpec(
        numerator=(-(n + 1), -s) + tuple(-(s + u[i]) for i in range(k)),
        denominator=(-(s + a),) + tuple(-(s + u[i] + v[i]) for i in range(k)),
    )
    right_pre = (
        (-1) ** n
        * poch(-n + s, a)
        * prod(poch(-n + s + u[i], v[i]) for i in range(k))
    )
    right_spec = HypergeometricSpec(
        numerator=(-(n + 1), -n + s + a)
        + tuple(-n + s + u[i] + v[i] for i in range(k)),
        denominator=(-n + s,) + tuple(-n + s + u[i] for i in range(k)),
    )
    _, members = tau_sequence(profile, n)
    count = formula_alpha_beta(n, s, members, ALL)
    return _side(left_pre, left_spec), _side(right_pre, right_spec), count


def pfaff_saalschutz_lhs(n: int, a: int, b: int, c: int) -> Fraction:
    spec = HypergeometricSpec(
        numerator=(-n, a, b), denominator=(c, a + b - c - n + 1)
    )
    return eval_terminating(spec)


def pfaff_saalschutz_rhs(n: int, a: int, b: int, c: int) -> Fraction:
    den = poch(c, n) * poch(c - a - b, n)
    if den == 0:
        raise IllPosedSeriesError("vanishing denominator Pochhammer")
    return Fraction(poch(c - a, n) * poch(c - b, n), den)


def verify_cor35(k: int, m: int, s: int) -> tuple[Fraction, Fraction, int]:
    """The two sides of the mod-(k+1) specialization, plus the descent count
    over X = {i : i mod (k+1) != 1} in S_{(k+1)m}."""
    n = (k + 1) * m
    left_pre = poch(s + 1, m) ** (k + 1)
    left_spec = HypergeometricSpec(
        numerator=(-(n + 1),) + (-s,) * (k + 1),
        denominator=(-(m + s),) * (k + 1),
    )
    right_pre = poch(k * m + 1 - s, m) ** (k + 1)
    right_spec = HypergeometricSpec(
        numerator=(-(n + 1),) + (-(k * m - s),) * (k + 1),
        denominator=(-((k + 1) * m - s),) * (k + 1),
    )
    members = explicit_set(i for i in range(1, n + 1) if i % (k + 1) != 1)
    count = formula_beta_beta(n, s, members, ALL)
    return _side(left_pre, left_spec), _side(right_pre, right_spec), count
