"""Sets, permutations, and exact polynomial arithmetic."""

import pytest

from descentpoly.perms import (
    all_permutations,
    check_permutation,
    complement,
    cycles,
    format_permutation,
    from_cycles,
    identity,
    inverse,
    parse_permutation,
    reverse,
)
from descentpoly.polynomials import (
    BivarPolynomial,
    IntPolynomial,
    binom,
    multinomial,
    poch,
)
from descentpoly.sets import (
    ALL,
    EMPTY,
    EVENS,
    ODDS,
    alpha,
    at_least,
    beta,
    explicit_set,
    parse_set,
    residue_set,
)


class TestSets:
    def test_membership_and_restriction(self):
        s = explicit_set([2, 3, 5])
        assert 2 in s and 4 not in s and 0 not in s
        assert s.restrict(4) == (2, 3)
        assert s.complement_in(4) == (1, 4)
        assert EVENS.restrict(7) == (2, 4, 6)
        assert ODDS.restrict(4) == (1, 3)
        assert at_least(4).restrict(6) == (4, 5, 6)
        assert ALL.restrict(3) == (1, 2, 3)
        assert EMPTY.restrict(5) == ()

    def test_nonpositive_integers_never_members(self):
        for s in (ALL, EVENS, ODDS, at_least(1), explicit_set([1])):
            assert 0 not in s and -2 not in s

    def test_parse_round_trip(self):
        for text in ("all", "{2,3,5}", "mod:2:0", "geq:4", "{1}|mod:3:0,1", "{}"):
            s = parse_set(text)
            assert parse_set(str(s)).restrict(12) == s.restrict(12)

    def test_parse_examples(self):
        assert parse_set("mod:2:0").restrict(6) == (2, 4, 6)
        assert parse_set("{2,3,5}|geq:8").restrict(9) == (2, 3, 5, 8, 9)
        with pytest.raises(ValueError):
            parse_set("mod:0:1")
        with pytest.raises(ValueError):
            parse_set("bogus:3")

    def test_alpha_beta_counts(self):
        # alpha: elements outside s strictly between j and n;
        # beta: elements outside s strictly below j.
        x = explicit_set([2, 3, 4, 6])
        assert alpha(x, 6, 2) == 1  # {5}
        assert alpha(x, 6, 6) == 0
        assert beta(x, 6, 6) == 2  # {1, 5}
        y = explicit_set([1, 4])
        assert beta(y, 6, 6) == 3  # {2, 3, 5}
        assert beta(y, 6, 2) == 0


class TestPerms:
    def test_check_and_parse(self):
        assert parse_permutation("54213") == (5, 4, 2, 1, 3)
        assert parse_permutation("10,3,1,2,4,5,6,7,8,9")[0] == 10
        assert format_permutation((5, 4, 2, 1, 3)) == "54213"
        with pytest.raises(ValueError):
            check_permutation((1, 1, 2))
        with pytest.raises(ValueError):
            check_permutation((0, 1))

    def test_group_operations(self):
        p = (3, 1, 4, 2)
        assert inverse(p) == (2, 4, 1, 3)
        assert inverse(inverse(p)) == p
        assert complement(p) == (2, 4, 1, 3)
        assert reverse(p) == (2, 4, 1, 3)
        assert identity(4) == (1, 2, 3, 4)

    def test_cycles_round_trip(self):
        for p in all_permutations(5):
            assert from_cycles(cycles(p), 5) == p

    def test_all_permutations_count(self):
        assert len(list(all_permutations(4))) == 24


class TestScalars:
    def test_poch(self):
        assert poch(3, 4) == 3 * 4 * 5 * 6
        assert poch(-2, 3) == 0
        assert poch(-2, 2) == 2
        assert poch(7, 0) == 1

    def test_binom(self):
        assert binom(7, 3) == 35
        assert binom(-1, 2) == 0  # negative upper index vanishes by convention
        assert binom(3, 0) == 1
        assert binom(2, 5) == 0
        with pytest.raises(ValueError):
            binom(3, -1)

    def test_multinomial(self):
        assert multinomial((2, 2, 2, 2)) == 2520
        assert multinomial((0, 3)) == 1


class TestPolynomials:
    def test_arithmetic(self):
        p = IntPolynomial({0: 1, 1: 2})
        q = IntPolynomial({1: 3})
        assert (p + q).coeff_list() == [1, 5]
        assert (p - q).coeff_list() == [1, -1]
        assert (p * q).coeff_list() == [0, 3, 6]
        assert (p**2).coeff_list() == [1, 4, 4]
        assert p(10) == 21
        assert p.degree == 1
        assert IntPolynomial().degree == -1

    def test_big_coefficients_stay_exact(self):
        p = IntPolynomial({0: 1, 1: 1}) ** 200
        assert p.coeff(100) == binom(200, 100)

    def test_bivariate(self):
        b = BivarPolynomial({(1, 0): 2, (0, 1): 3})
        assert b.shift(0, 1).coeff(1, 1) == 2
        assert b.specialize_second(1).coeff_list() == [3, 2]
        assert b.specialize_first(2).coeff_list() == [4, 3]
        assert BivarPolynomial.constant(7).coeff(0, 0) == 7
