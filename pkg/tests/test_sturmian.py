"""Mechanical words, factor oracles, and tree labelings."""

from fractions import Fraction

import pytest

from oracles import fibonacci_word
from treeshift.oracle import DepthExceeded
from treeshift.sturmian import (
    MAX_TREE_DEPTH,
    ComplexityViolation,
    PrecisionExhausted,
    SturmianParams,
    build_factor_oracle,
    characteristic_word,
    label_tree_lex,
    label_tree_random,
    left_edge_word,
    mechanical_word,
    minimal_sequence,
    path_words,
    tree_complexity,
)

FIB = SturmianParams.fibonacci()


# ---------------------------------------------------------------------------
# parameters


def test_params_validation():
    with pytest.raises(ValueError):
        SturmianParams(Fraction(0), Fraction(0))
    with pytest.raises(ValueError):
        SturmianParams(Fraction(3, 2), Fraction(0))
    with pytest.raises(ValueError):
        SturmianParams(Fraction(1, 3), Fraction(-1, 10))
    with pytest.raises(ValueError):
        SturmianParams(Fraction(1, 3), Fraction(0), rho=Fraction(1))
    with pytest.raises(ValueError):
        SturmianParams(Fraction(1, 3), Fraction(0), max_len=0)


def test_continued_fraction_convergents():
    p = SturmianParams.from_continued_fraction([0, 2, 1, 1])
    assert p.alpha == Fraction(2, 5)
    assert p.alpha_error == Fraction(1, 25)
    with pytest.raises(ValueError):
        SturmianParams.from_continued_fraction([0])
    with pytest.raises(ValueError):
        SturmianParams.from_continued_fraction([1, 2, 3])
    with pytest.raises(ValueError):
        SturmianParams.from_continued_fraction([0, 2, 0])


def test_fibonacci_convergent_is_deep():
    assert FIB.alpha == Fraction(14472334024676221, 37889062373143906)
    assert FIB.alpha_error == Fraction(1, 37889062373143906**2)
    assert not FIB.approximate


def test_from_decimal():
    p = SturmianParams.from_decimal("0.382")
    assert p.alpha == Fraction(191, 500)
    assert p.alpha_error == Fraction(1, 2000)
    assert p.approximate


# ---------------------------------------------------------------------------
# words


def test_mechanical_word_matches_substitution_fixed_point():
    assert mechanical_word(FIB, 1000) == fibonacci_word(1000)


def test_mechanical_word_starts_at_index_one():
    assert mechanical_word(FIB, 1)[0] == "0"
    with pytest.raises(ValueError):
        mechanical_word(FIB, 0)


def test_intercept_shifts_the_word():
    shifted = SturmianParams(FIB.alpha, FIB.alpha_error, rho=Fraction(1, 2))
    word = mechanical_word(shifted, 30)
    assert word[0] == "1"
    assert word != characteristic_word(FIB, 30)


def test_minimal_sequence_prefixes():
    assert minimal_sequence(FIB, 1) == "0"
    assert minimal_sequence(FIB, 14) == "0" + characteristic_word(FIB, 13)
    assert minimal_sequence(FIB, 13) == "0010010100100"


def test_precision_exhausted_for_coarse_decimal():
    coarse = SturmianParams.from_decimal("0.62")
    with pytest.raises(PrecisionExhausted):
        mechanical_word(coarse, 50)


def test_rational_slope_violates_complexity():
    rational = SturmianParams(Fraction(1, 3), Fraction(0), max_len=5)
    with pytest.raises(ComplexityViolation):
        build_factor_oracle(rational)


# ---------------------------------------------------------------------------
# factor oracle


def test_oracle_complexity_and_factors():
    oracle = build_factor_oracle(FIB)
    for n in range(31):
        assert oracle.complexity(n) == n + 1
    assert oracle.factors(1) == ["0", "1"]
    assert oracle.factors(2) == ["00", "01", "10"]
    assert oracle.successors("") == "01"
    assert oracle.successors("0") == "01"
    assert oracle.successors("1") == "0"
    assert oracle.right_special(1) == "0"
    assert oracle.is_factor("00100")
    assert not oracle.is_factor("11")
    with pytest.raises(ValueError):
        oracle.is_factor("0" * 31)


def test_oracle_successors_close_under_extension():
    oracle = build_factor_oracle(FIB, max_len=12)
    for n in range(12):
        for w in oracle.factors(n):
            for c in oracle.successors(w):
                assert oracle.is_factor(w + c)


# ---------------------------------------------------------------------------
# tree labelings


def test_lex_tree_small_depths():
    assert label_tree_lex(FIB, 0).labels == bytes([0])
    assert label_tree_lex(FIB, 2).labels == bytes([0, 0, 1, 1, 1, 0, 0])
    deep = label_tree_lex(FIB, 3)
    assert deep.labels == bytes([0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1])


def test_lex_tree_left_edge_is_minimal():
    tree = label_tree_lex(FIB, 12)
    assert left_edge_word(tree) == minimal_sequence(FIB, 13)


def test_path_words_levels():
    tree = label_tree_lex(FIB, 2)
    assert path_words(tree, 0) == ["0"]
    assert path_words(tree, 1) == ["00", "01"]
    assert path_words(tree, 2) == ["001", "001", "010", "010"]
    with pytest.raises(ValueError):
        path_words(tree, 3)


def test_every_path_word_is_a_factor():
    oracle = build_factor_oracle(FIB)
    lex = label_tree_lex(FIB, 8)
    rnd = label_tree_random(FIB, 8, seed=3)
    for tree in (lex, rnd):
        for level in range(9):
            for w in path_words(tree, level):
                assert oracle.is_factor(w)


def test_lex_tree_complexity_profile():
    tree = label_tree_lex(FIB, 12)
    assert tree_complexity(tree, 6) == [2, 4, 6, 9, 10, 11, 11]


def test_complexity_bounds_distinct_path_words():
    lex = label_tree_lex(FIB, 12)
    rnd = label_tree_random(FIB, 12, seed=5)
    for tree in (lex, rnd):
        profile = tree_complexity(tree, 6)
        for n in range(7):
            assert profile[n] >= len(set(path_words(tree, n)))


def test_random_labeling_deterministic_per_seed():
    a = label_tree_random(FIB, 10, seed=7)
    b = label_tree_random(FIB, 10, seed=7)
    assert a.labels == b.labels
    c = label_tree_random(FIB, 10, seed=8)
    assert a.labels != c.labels


def test_leaf_multiset_invariant_across_seeds():
    reference = sorted(path_words(label_tree_lex(FIB, 10), 10))
    for seed in range(10):
        tree = label_tree_random(FIB, 10, seed=seed)
        assert sorted(path_words(tree, 10)) == reference, seed


def test_depth_limits():
    with pytest.raises(ValueError):
        label_tree_lex(FIB, MAX_TREE_DEPTH + 1)
    with pytest.raises(ValueError):
        label_tree_lex(FIB, -1)
    tree = label_tree_lex(FIB, 3)
    with pytest.raises(DepthExceeded):
        tree_complexity(tree, 4)
