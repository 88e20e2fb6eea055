"""Descent-pair polynomials for words (multiset permutations).

A word class is given by a composition rho = (rho_1, ..., rho_m): the
rearrangements of rho_1 copies of 1, ..., rho_m copies of m.  The
alternating-sum formulas mirror the permutation ones, with the alpha/beta
gap counts weighted by letter multiplicities and the per-letter factors
turning from linear terms into binomial coefficients.
"""

from __future__ import annotations

from itertools import permutations

from .polynomials import IntPolynomial, binom, multinomial
from .sets import ALL, IntegerSet
from .stats import CapExceededError, DescentQuery, descent_value_pairs

__all__ = [
    "rearrangement_count",
    "enumerate_rearrangements",
    "word_brute_poly",
    "word_alpha",
    "word_beta",
    "x_complement_mass",
    "word_formula_1",
    "word_formula_2",
    "standardize",
    "chi",
    "all_chi_factors",
]

DEFAULT_WORD_CAP = 10**6


def _check_rho(rho) -> tuple[int, ...]:
    rho = tuple(rho)
    if not rho or any(p < 0 for p in rho):
        raise ValueError(f"composition parts must be >= 0: {rho}")
    return rho


def rearrangement_count(rho) -> int:
    """|R(rho)|, the multinomial coefficient."""
    return multinomial(_check_rho(rho))


def enumerate_rearrangements(rho, limit: int = DEFAULT_WORD_CAP):
    """All rearrangements, in lexicographic order, as tuples of letters."""
    rho = _check_rho(rho)
    if rearrangement_count(rho) > limit:
        raise CapExceededError(
            f"|R({rho})| = {rearrangement_count(rho)} exceeds the cap {limit}"
        )

    def gen(remaining, total):
        if total == 0:
            yield ()
            return
        for v in range(1, len(remaining) + 1):
            if remaining[v - 1]:
                rest = list(remaining)
                rest[v - 1] -= 1
                for tail in gen(tuple(rest), total - 1):
                    yield (v,) + tail

    yield from gen(rho, sum(rho))


def word_brute_poly(
    rho,
    tops: IntegerSet,
    bottoms: IntegerSet,
    diffs: IntegerSet = ALL,
    limit: int = DEFAULT_WORD_CAP,
) -> IntPolynomial:
    """Sum over R(rho) of x^(number of matching descents)."""
    query = DescentQuery(tops, bottoms, diffs)
    counts: dict[int, int] = {}
    for w in enumerate_rearrangements(rho, limit):
        s = len(descent_value_pairs(w, query))
        counts[s] = counts.get(s, 0) + 1
    return IntPolynomial(counts)


def word_alpha(s: IntegerSet, rho, x: int) -> int:
    """Multiplicity mass of letters above x that are outside s."""
    rho = _check_rho(rho)
    return sum(rho[z - 1] for z in range(x + 1, len(rho) + 1) if z not in s)


def word_beta(s: IntegerSet, rho, x: int) -> int:
    """Multiplicity mass of letters below x that are outside s."""
    rho = _check_rho(rho)
    return sum(rho[z - 1] for z in range(1, x) if z not in s)


def x_complement_mass(rho, tops: IntegerSet) -> int:
    """Total multiplicity of the letters outside the tops set."""
    rho = _check_rho(rho)
    return sum(rho[v - 1] for v in range(1, len(rho) + 1) if v not in tops)


def _word_context(rho, tops):
    rho = _check_rho(rho)
    m = len(rho)
    xs = [x for x in range(1, m + 1) if x in tops]
    a = x_complement_mass(rho, tops)
    mult = multinomial(rho[v - 1] for v in range(1, m + 1) if v not in tops)
    return rho, xs, a, mult


def word_formula_1(rho, s: int, tops: IntegerSet, bottoms: IntegerSet) -> int:
    """Alternating sum with per-letter factors C(rho_x + r + alpha + beta, rho_x)."""
    if s < 0:
        return 0
    rho, xs, a, mult = _word_context(rho, tops)
    n = sum(rho)
    total = 0
    for r in range(s + 1):
        term = binom(a + r, r) * binom(n + 1, s - r)
        for x in xs:
            term *= binom(
                rho[x - 1] + r + word_alpha(tops, rho, x) + word_beta(bottoms, rho, x),
                rho[x - 1],
            )
        total += (-1) ** (s - r) * term
    return mult * total


def word_formula_2(rho, s: int, tops: IntegerSet, bottoms: IntegerSet) -> int:
    """Alternating sum with per-letter factors C(r + beta - beta', rho_x).

    Upper factors may go negative; those binomials vanish by convention.
    """
    if s < 0:
        return 0
    rho, xs, a, mult = _word_context(rho, tops)
    n = sum(rho)
    total = 0
    for r in range(n - a - s + 1):
        term = binom(a + r, r) * binom(n + 1, n - a - s - r)
        for x in xs:
            term *= binom(
                r + word_beta(tops, rho, x) - word_beta(bottoms, rho, x),
                rho[x - 1],
            )
        total += (-1) ** (n - a - s - r) * term
    return mult * total


def _rho_of(word, m: int | None = None) -> tuple[int, ...]:
    if m is None:
        m = max(word)
    rho = [0] * m
    for v in word:
        rho[v - 1] += 1
    return tuple(rho)


def chi(phis, word) -> tuple[int, ...]:
    """Relabel a word into a permutation, one factor per letter value.

    The i-th occurrence of letter j becomes offset_j + phi^(j)_i, where
    offset_j is the total multiplicity of the letters below j.  With every
    phi the identity this is the standardization of the word.
    """
    word = tuple(word)
    m = len(phis)
    rho = _rho_of(word, m)
    if any(len(phi) != rho[j] for j, phi in enumerate(phis)):
        raise ValueError("factor lengths must match letter multiplicities")
    offsets = [sum(rho[:j]) for j in range(m)]
    seen = [0] * m
    out = []
    for v in word:
        out.append(offsets[v - 1] + phis[v - 1][seen[v - 1]])
        seen[v - 1] += 1
    return tuple(out)


def standardize(word) -> tuple[int, ...]:
    """Replace the i-th occurrence of each letter by consecutive integers,
    smaller letters first."""
    word = tuple(word)
    rho = _rho_of(word)
    return chi([tuple(range(1, p + 1)) for p in rho], word)


def all_chi_factors(rho):
    """Iterator over the cartesian product of S_{rho_1} x ... x S_{rho_m}."""
    rho = _check_rho(rho)

    def gen(j):
        if j == len(rho):
            yield ()
            return
        for phi in permutations(range(1, rho[j] + 1)):
            for rest in gen(j + 1):
                yield (phi,) + rest

    yield from gen(0)
