"""Property-based checks with randomly drawn inputs."""

from hypothesis import given, settings
from hypothesis import strategies as st

from descentpoly.rook import board_from_query, foata, foata_inverse, u_excedences
from descentpoly.sets import explicit_set
from descentpoly.stats import DescentQuery, des_set
from descentpoly.words import standardize

permutations_st = st.permutations(range(1, 8)).map(tuple)
subsets_st = st.sets(st.integers(min_value=1, max_value=7)).map(explicit_set)
words_st = st.lists(
    st.integers(min_value=1, max_value=4), min_size=1, max_size=9
).map(tuple)


@given(permutations_st)
def test_cycle_rewriting_round_trips(perm):
    assert foata_inverse(foata(perm)) == perm


@settings(max_examples=50)
@given(permutations_st, subsets_st, subsets_st, subsets_st)
def test_board_hits_become_descents(perm, tops, bottoms, diffs):
    query = DescentQuery(tops, bottoms, diffs)
    board = board_from_query(len(perm), query)
    assert u_excedences(perm, board) == len(des_set(foata(perm), query))


@given(words_st)
def test_standardization_is_an_order_preserving_permutation(word):
    std = standardize(word)
    assert sorted(std) == list(range(1, len(word) + 1))
    # relative order of letters is preserved, ties broken left to right
    for i in range(len(word)):
        for j in range(i + 1, len(word)):
            assert (std[i] < std[j]) == (word[i] <= word[j])
