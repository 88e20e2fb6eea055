"""Alternating-sum closed formulas against brute force and product forms."""

from math import factorial

import pytest

from descentpoly.closed_forms import (
    eulerian_sum,
    formula_alpha_beta,
    formula_alpha_beta_terms,
    formula_beta_beta,
    formula_X_only_1,
    formula_X_only_2,
    kn_bottom_formulas,
    kn_top_formulas,
    rectangle_product,
)
from descentpoly.polynomials import binom
from descentpoly.sets import ALL, EVENS, explicit_set
from descentpoly.stats import DescentQuery, brute_poly

X6 = explicit_set([2, 3, 4, 6, 7, 9])
Y6 = explicit_set([1, 4, 8])


class TestPinnedValues:
    def test_six_letter_example_value(self):
        # X = {2,3,4,6,7,9}, Y = {1,4,8}, n = 6, s = 2: hand count is 72
        # (the two matching descents are always {(6,4)} plus one of
        # (2,1), (3,1), (4,1); chain 641 gives 24, the two disjoint
        # layouts give 24 each).
        assert formula_alpha_beta(6, 2, X6, Y6) == 72
        assert formula_beta_beta(6, 2, X6, Y6) == 72
        assert brute_poly(6, DescentQuery(X6, Y6)).coeff(2) == 72

    def test_six_letter_example_terms(self):
        pre, terms = formula_alpha_beta_terms(6, 2, X6, Y6)
        assert pre == 2
        assert terms == [2016, -6300, 4320]

    def test_eulerian_specialization(self):
        for n in range(1, 8):
            poly = brute_poly(n, DescentQuery(ALL, ALL))
            for s in range(n + 1):
                assert eulerian_sum(n, s) == poly.coeff(s)
                assert formula_alpha_beta(n, s, ALL, ALL) == poly.coeff(s)


class TestSweep:
    @pytest.mark.parametrize("n", range(6))
    def test_all_pairs_small(self, n):
        from descentpoly.verify import sweep_formulas

        assert sweep_formulas(n) >= 0

    def test_x_only_specializations_match(self):
        for n in range(1, 7):
            for tops in (EVENS, explicit_set([1, 4]), explicit_set([3])):
                brute = brute_poly(n, DescentQuery(tops, ALL))
                for s in range(n + 1):
                    assert formula_X_only_1(n, s, tops) == brute.coeff(s)
                    assert formula_X_only_2(n, s, tops) == brute.coeff(s)


class TestProductForms:
    @pytest.mark.parametrize("n", range(1, 5))
    def test_even_tops_square_product(self, n):
        # tops = even numbers in S_{2n}: coefficient of x^s is (n!)^2 C(n,s)^2
        brute = brute_poly(2 * n, DescentQuery(EVENS, ALL))
        for s in range(n + 1):
            expected = factorial(n) ** 2 * binom(n, s) ** 2
            assert brute.coeff(s) == expected
            assert formula_X_only_1(2 * n, s, EVENS) == expected

    def test_rectangle_product_matches_brute(self):
        for m in range(1, 3):
            for u in range(2):
                for v in range(2):
                    n = 2 * m + u + v
                    tops = explicit_set(u + 2 * i for i in range(1, m + 1))
                    brute = brute_poly(n, DescentQuery(tops, ALL))
                    for s in range(m + 1):
                        assert rectangle_product(m, u, v, s) == brute.coeff(s)

    @pytest.mark.parametrize("k", [2, 3])
    def test_multiples_of_k_formulas(self, k):
        for m in range(0, 4):
            for j in range(k):
                n = k * m + j
                if not 1 <= n <= 7:
                    continue
                top_brute = brute_poly(
                    n, DescentQuery(explicit_set(k * i for i in range(1, m + 1)), ALL)
                )
                bottom_brute = brute_poly(
                    n, DescentQuery(ALL, explicit_set(k * i for i in range(1, m + 1)))
                )
                for s in range(m + 1):
                    f1, f2 = kn_top_formulas(k, m, j, s)
                    assert f1 == f2 == top_brute.coeff(s)
                    g1, g2 = kn_bottom_formulas(k, m, j, s)
                    assert g1 == g2 == bottom_brute.coeff(s)
