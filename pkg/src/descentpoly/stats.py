"""Descent statistics: brute-force ground truth and insertion recursions.

The brute-force sweeps here are the oracle everything else is checked
against.  They enumerate all of S_n, so they are capped (default n = 10);
the recursions are exact and polynomially bounded, and serve as the
reference beyond the cap.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .perms import all_permutations, check_permutation
from .polynomials import BivarPolynomial, IntPolynomial
from .sets import ALL, IntegerSet, explicit_set

__all__ = [
    "DescentQuery",
    "CapExceededError",
    "des_set",
    "descent_value_pairs",
    "brute_poly",
    "brute_bivar",
    "recursion_bivar",
    "coefficient_recursion_bivar",
    "q_recursion",
    "complement_reverse",
    "DEFAULT_BRUTE_CAP",
]

DEFAULT_BRUTE_CAP = 10


class CapExceededError(Exception):
    """Raised when a brute-force sweep would exceed its configured size cap."""


@dataclass(frozen=True)
class DescentQuery:
    """A triple of membership conditions on a descent pair (top, bottom):
    top in tops, bottom in bottoms, top - bottom in diffs."""

    tops: IntegerSet
    bottoms: IntegerSet
    diffs: IntegerSet = field(default=ALL)

    def matches(self, top: int, bottom: int) -> bool:
        return (
            top > bottom
            and top in self.tops
            and bottom in self.bottoms
            and (top - bottom) in self.diffs
        )


def des_set(sigma, query: DescentQuery) -> frozenset[int]:
    """Positions i (1-based) where (sigma_i, sigma_{i+1}) matches the query."""
    return frozenset(
        i for i in range(1, len(sigma)) if query.matches(sigma[i - 1], sigma[i])
    )


def descent_value_pairs(seq, query: DescentQuery) -> list[tuple[int, int]]:
    """The matching (top, bottom) value pairs, in position order.

    Works for permutations and words alike; repeated pairs are repeated.
    """
    return [
        (seq[i - 1], seq[i])
        for i in range(1, len(seq))
        if query.matches(seq[i - 1], seq[i])
    ]


def _check_cap(n: int, limit: int):
    if n > limit:
        raise CapExceededError(
            f"brute force over S_{n} exceeds the cap n <= {limit}"
        )


def brute_poly(n: int, query: DescentQuery, limit: int = DEFAULT_BRUTE_CAP) -> IntPolynomial:
    """Sum over all of S_n of x^(number of matching descents)."""
    _check_cap(n, limit)
    counts: dict[int, int] = {}
    for sigma in all_permutations(n):
        s = len(des_set(sigma, query))
        counts[s] = counts.get(s, 0) + 1
    return IntPolynomial(counts)


def brute_bivar(
    n: int, tops: IntegerSet, bottoms: IntegerSet, limit: int = DEFAULT_BRUTE_CAP
) -> BivarPolynomial:
    """Two-variable refinement: x tracks descents, y tracks how many of
    1..n are outside the bottoms set."""
    _check_cap(n, limit)
    t = len(bottoms.complement_in(n))
    query = DescentQuery(tops, bottoms)
    counts: dict[tuple[int, int], int] = {}
    for sigma in all_permutations(n):
        s = len(des_set(sigma, query))
        counts[(s, t)] = counts.get((s, t), 0) + 1
    return BivarPolynomial(counts)


def recursion_bivar(n: int, tops: IntegerSet, bottoms: IntegerSet) -> BivarPolynomial:
    """Insertion recursion for the two-variable polynomial, keys (s, t).

    Builds permutations by inserting 1, 2, ..., n in turn.  Inserting m+1
    when m+1 is not a potential top either destroys one of the s matching
    descents or leaves the count alone; when m+1 is a potential top it
    preserves the count in s + t + 1 slots and creates a descent in the
    remaining m - s - t slots.  A factor y is picked up whenever m+1 is
    not a potential bottom.
    """
    poly = BivarPolynomial.constant(1)
    for m in range(n):
        new: dict[tuple[int, int], int] = {}

        def add(key, v):
            if v:
                new[key] = new.get(key, 0) + v

        in_tops = (m + 1) in tops
        for (s, t), c in poly.items():
            if in_tops:
                add((s, t), c * (s + t + 1))
                add((s + 1, t), c * (m - s - t))
            else:
                if s > 0:
                    add((s - 1, t), c * s)
                add((s, t), c * (m + 1 - s))
        poly = BivarPolynomial(new)
        if (m + 1) not in bottoms:
            poly = poly.shift(0, 1)
    return poly


def coefficient_recursion_bivar(
    n: int, tops: IntegerSet, bottoms: IntegerSet
) -> BivarPolynomial:
    """Same polynomial via the four-case update on raw coefficients.

    Redundant with recursion_bivar on purpose: the two formulations are
    cross-checked against each other in the tests.
    """
    coeffs = {(0, 0): 1}
    for m in range(n):
        in_tops = (m + 1) in tops
        in_bottoms = (m + 1) in bottoms
        new: dict[tuple[int, int], int] = {}
        max_s = max(s for s, _ in coeffs) + 1
        max_t = max(t for _, t in coeffs) + 1
        for s in range(max_s + 1):
            for t in range(max_t + 1):
                def old(si, ti):
                    return coeffs.get((si, ti), 0)

                if not in_tops and not in_bottoms:
                    v = (s + 1) * old(s + 1, t - 1) + (m + 1 - s) * old(s, t - 1)
                elif not in_tops and in_bottoms:
                    v = (s + 1) * old(s + 1, t) + (m + 1 - s) * old(s, t)
                elif in_tops and not in_bottoms:
                    v = (s + t) * old(s, t - 1) + (m + 2 - s - t) * old(s - 1, t - 1)
                else:
                    v = (s + t + 1) * old(s, t) + (m + 1 - s - t) * old(s - 1, t)
                if v:
                    new[(s, t)] = v
        coeffs = new
    return BivarPolynomial(coeffs)


def _q_int(m: int) -> IntPolynomial:
    """The q-integer 1 + q + ... + q^(m-1)."""
    return IntPolynomial({e: 1 for e in range(m)})


def q_recursion(n: int, tops: IntegerSet) -> BivarPolynomial:
    """q-refined insertion recursion, keys (q-exponent, x-exponent).

    Specializing q = 1 collapses every q-integer to its length and recovers
    the single-variable descent polynomial for the given tops set.
    """
    # coefficient of x^s as a polynomial in q
    by_s: dict[int, IntPolynomial] = {0: IntPolynomial({0: 1})}
    for m in range(n):
        new: dict[int, IntPolynomial] = {}

        def add(s, p):
            if p:
                new[s] = new.get(s, IntPolynomial()) + p

        in_tops = (m + 1) in tops
        for s, c in by_s.items():
            if in_tops:
                add(s, c * _q_int(s + 1))
                add(s + 1, c * IntPolynomial.monomial(s + 1) * _q_int(m - s))
            else:
                if s > 0:
                    add(s - 1, c * _q_int(s))
                add(s, c * IntPolynomial.monomial(s) * _q_int(m + 1 - s))
        by_s = new
    return BivarPolynomial(
        {(eq, s): v for s, p in by_s.items() for eq, v in p.items()}
    )


def complement_reverse(tops: IntegerSet, n: int) -> IntegerSet:
    """The set X* with i in X* iff n+1-i is in the restriction of tops.

    Counting descents whose *bottom* lies in the original set equals
    counting descents whose top lies in X*: complement-then-reverse sends
    a descent pair (i, j) to (n+1-j, n+1-i).
    """
    restricted = set(tops.restrict(n))
    return explicit_set(i for i in range(1, n + 1) if n + 1 - i in restricted)
