import pytest

from valkit.errors import IndexOutOfRange, ResourceLimit
from valkit.surd import PHI, PSI, compare, value_of_period
from valkit.words import (
    PeriodicWord, conjunction, even_form, is_markov_word, markov_tree, markov_words, opposite, rotation,
    run_length,
)


def W(*a):
    return PeriodicWord(a)


def test_opposite():
    assert opposite(W(1, 1)) == W(1, 1)
    assert opposite(W(2, 2, 1, 1)) == W(1, 1, 2, 2)
    assert opposite(opposite(W(3, 1, 4))) == W(3, 1, 4)


def test_rotation():
    assert rotation(W(1, 2), 2) == W(2, 1)
    assert rotation(W(2, 2, 1, 1), 3) == W(1, 1, 2, 2)
    assert rotation(W(5, 6, 7), 1) == W(5, 6, 7)
    for i in (0, 4):
        with pytest.raises(IndexOutOfRange):
            rotation(W(1, 2, 3), i)


def test_conjunction_and_even_form():
    assert conjunction(W(2, 2), W(1, 1)) == W(2, 2, 1, 1)
    assert conjunction(W(2, 2, 1, 1), W(1, 1)) == W(2, 2, 1, 1, 1, 1)
    assert conjunction(W(2, 2), W(2, 2, 1, 1)) == W(2, 2, 2, 2, 1, 1)
    assert even_form(W(1)) == W(1, 1)
    assert even_form(W(1, 2)) == W(1, 2)
    assert even_form(W(2, 1, 1)) == W(2, 1, 1, 2, 1, 1)


def test_tree_small():
    root = markov_tree(0)
    assert root.word == W(2, 2, 1, 1) and not root.children
    t = markov_tree(2)
    assert [run_length(c.word) for c in t.children] == ["2_2,1_4", "2_4,1_2"]
    assert t.children[0].children[0].word.letters == (2, 2) + (1,) * 6


def test_tree_counts_and_invariants():
    words = markov_words(8)
    assert len(words) == 511
    assert len({w.letters for w in words}) == 511
    values = [value_of_period(w.letters) for w in words]
    assert len(set(values)) == 511
    for w in words:
        assert is_markov_word(w)
        for i in range(1, len(w) + 1, 2):
            v = value_of_period(rotation(w, i).letters)
            assert compare(PHI, v) < 0 < compare(PSI, v)


def test_tree_cap():
    with pytest.raises(ResourceLimit):
        markov_tree(17)


def test_markov_predicate():
    assert is_markov_word(W(2, 2, 1, 1))
    assert not is_markov_word(W(1, 2))
    assert not is_markov_word(W(2, 2, 3, 3))
