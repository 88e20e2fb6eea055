"""Alternating-sum closed formulas for descent-pair counts.

Two independent formulas compute the same coefficient: one indexed by how
many non-top elements sit above each top (the alpha/beta form), one purely
by below-counts (the beta/beta form).  Product factors in the second may
be zero or negative for individual terms; all arithmetic is exact so the
cancellations are exact too.
"""

from __future__ import annotations

from math import factorial, prod

from .polynomials import binom
from .sets import ALL, IntegerSet, alpha, beta, explicit_set

__all__ = [
    "formula_alpha_beta",
    "formula_alpha_beta_terms",
    "formula_beta_beta",
    "formula_beta_beta_terms",
    "formula_X_only_1",
    "formula_X_only_2",
    "eulerian_sum",
    "rectangle_product",
    "kn_top_formulas",
    "kn_bottom_formulas",
]


def formula_alpha_beta_terms(
    n: int, s: int, tops: IntegerSet, bottoms: IntegerSet
) -> tuple[int, list[int]]:
    """Returns (prefactor, signed inner terms); their product-sum is the count."""
    xs = tops.restrict(n)
    cx = len(tops.complement_in(n))
    gaps = [alpha(tops, n, x) + beta(bottoms, n, x) for x in xs]
    terms = []
    for r in range(max(s, 0) + 1):
        sign = (-1) ** (s - r)
        terms.append(
            sign
            * binom(cx + r, r)
            * binom(n + 1, s - r)
            * prod(1 + r + g for g in gaps)
        )
    return factorial(cx), terms


def formula_alpha_beta(n: int, s: int, tops: IntegerSet, bottoms: IntegerSet) -> int:
    if s < 0:
        return 0
    pre, terms = formula_alpha_beta_terms(n, s, tops, bottoms)
    return pre * sum(terms)


def formula_beta_beta_terms(
    n: int, s: int, tops: IntegerSet, bottoms: IntegerSet
) -> tuple[int, list[int]]:
    xs = tops.restrict(n)
    cx = len(tops.complement_in(n))
    gaps = [beta(tops, n, x) - beta(bottoms, n, x) for x in xs]
    terms = []
    for r in range(len(xs) - s + 1):
        sign = (-1) ** (len(xs) - s - r)
        terms.append(
            sign
            * binom(cx + r, r)
            * binom(n + 1, len(xs) - s - r)
            * prod(r + g for g in gaps)
        )
    return factorial(cx), terms


def formula_beta_beta(n: int, s: int, tops: IntegerSet, bottoms: IntegerSet) -> int:
    if s < 0:
        return 0
    pre, terms = formula_beta_beta_terms(n, s, tops, bottoms)
    return pre * sum(terms)


def formula_X_only_1(n: int, s: int, tops: IntegerSet) -> int:
    """Specialization with every bottom allowed (below-counts vanish)."""
    return formula_alpha_beta(n, s, tops, ALL)


def formula_X_only_2(n: int, s: int, tops: IntegerSet) -> int:
    return formula_beta_beta(n, s, tops, ALL)


def eulerian_sum(n: int, s: int) -> int:
    """Classical alternating sum for the Eulerian numbers."""
    return sum(
        (-1) ** (s - r) * binom(n + 1, s - r) * (1 + r) ** n for r in range(s + 1)
    )


def rectangle_product(m: int, u: int, v: int, s: int) -> int:
    """Product form for tops {u+2, u+4, ..., u+2m} in S_{2m+u+v}."""
    return (
        binom(m, s)
        * binom(m + u + v, v + s)
        * factorial(m + u)
        * factorial(m + v)
    )


def _k_set(k: int, m: int, j: int) -> IntegerSet:
    # the reversal-image of the multiples of k inside [km+j]
    return explicit_set(1 + j + k * i for i in range(m))


def kn_top_formulas(k: int, m: int, j: int, s: int) -> tuple[int, int]:
    """Both alternating sums for tops = multiples of k, n = km+j."""
    if not 0 <= j <= k - 1:
        raise ValueError("need 0 <= j <= k-1")
    n = k * m + j
    c = (k - 1) * m + j
    f1 = factorial(c) * sum(
        (-1) ** (s - r)
        * binom(c + r, r)
        * binom(n + 1, s - r)
        * prod(1 + r + j + (k - 1) * i for i in range(m))
        for r in range(s + 1)
    )
    f2 = factorial(c) * sum(
        (-1) ** (m - s - r)
        * binom(c + r, r)
        * binom(n + 1, m - s - r)
        * prod(r + (k - 1) * i for i in range(1, m + 1))
        for r in range(m - s + 1)
    )
    return f1, f2


def kn_bottom_formulas(k: int, m: int, j: int, s: int) -> tuple[int, int]:
    """Both alternating sums for bottoms = multiples of k, n = km+j.

    Reduces to a tops-only count over the reversed-complement set
    {1+j, 1+j+k, ..., 1+j+k(m-1)}.
    """
    if not 0 <= j <= k - 1:
        raise ValueError("need 0 <= j <= k-1")
    n = k * m + j
    c = (k - 1) * m + j
    f1 = factorial(c) * sum(
        (-1) ** (s - r)
        * binom(c + r, r)
        * binom(n + 1, s - r)
        * prod(1 + r + (k - 1) * i for i in range(1, m + 1))
        for r in range(s + 1)
    )
    f2 = factorial(c) * sum(
        (-1) ** (m - s - r)
        * binom(c + r, r)
        * binom(n + 1, m - s - r)
        * prod(r + j + (k - 1) * i for i in range(m))
        for r in range(m - s + 1)
    )
    return f1, f2
