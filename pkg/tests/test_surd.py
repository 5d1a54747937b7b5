import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from valkit.errors import SquareRadicand, ZeroDenominator
from valkit.geometry import PHI_MAT, PSI_MAT, IDENTITY, Mat2
from valkit.surd import (
    PHI, PSI, CFExpansion, QuadSurd, cf_compare, cf_expand, compare, galois_conjugate, mobius_apply,
    normalize, squarefree_split, value_of_period,
)
from valkit.words import even_form

from conftest import mp_period_value, words


def mpval(s: QuadSurd):
    return (mpmath.mpf(s.p) + s.q * mpmath.sqrt(s.d)) / s.r


def test_normalize_examples():
    assert normalize(1, 1, 2, 5) == PHI
    assert normalize(2, 2, 4, 5) == PHI
    assert normalize(1, 1, 1, 2) == PSI
    assert normalize(0, 1, 1, 8) == normalize(0, 2, 1, 2)
    assert normalize(1, 1, -2, 5) == normalize(-1, -1, 2, 5)
    assert normalize(1, 1, 2, 5).r > 0


def test_normalize_errors():
    with pytest.raises(ZeroDenominator):
        normalize(1, 1, 0, 5)
    with pytest.raises(SquareRadicand):
        normalize(1, 1, 2, 9)


@given(st.integers(1, 10**30))
@settings(max_examples=200, deadline=None)
def test_squarefree_split(d):
    k, s = squarefree_split(d)
    assert k * k * s == d
    # s has no square factor below 1000
    assert all(s % (p * p) for p in range(2, 1000))


def test_conjugate():
    assert galois_conjugate(PHI) == normalize(1, -1, 2, 5)
    assert galois_conjugate(PSI) == normalize(1, -1, 1, 2)
    assert galois_conjugate(galois_conjugate(PHI)) == PHI


def test_mobius_examples():
    assert mobius_apply(PHI_MAT, PHI) == PHI
    assert mobius_apply(PSI_MAT, PSI) == PSI
    assert mobius_apply(IDENTITY, PHI) == PHI


@given(st.lists(st.integers(-4, 4), min_size=4, max_size=4), st.lists(st.integers(-4, 4), min_size=4, max_size=4))
def test_mobius_composition_and_conjugation(m1, m2):
    A, B = Mat2(*m1), Mat2(*m2)
    if A.det not in (1, -1) or B.det not in (1, -1):
        return
    w = normalize(1, 1, 2, 3)
    assert mobius_apply(A @ B, w) == mobius_apply(A, mobius_apply(B, w))
    assert galois_conjugate(mobius_apply(A, w)) == mobius_apply(A, galois_conjugate(w))


@given(st.integers(-50, 50), st.integers(-50, 50).filter(bool), st.integers(1, 50), st.integers(2, 200),
       st.integers(-50, 50), st.integers(-50, 50).filter(bool), st.integers(1, 50), st.integers(2, 200))
@settings(max_examples=300)
def test_compare_matches_mpmath(p1, q1, r1, d1, p2, q2, r2, d2):
    try:
        u, v = normalize(p1, q1, r1, d1), normalize(p2, q2, r2, d2)
    except SquareRadicand:
        return
    diff = mpval(u) - mpval(v)
    expected = 0 if abs(diff) < mpmath.mpf(10) ** -40 else (1 if diff > 0 else -1)
    assert compare(u, v) == expected


def test_arithmetic():
    assert PHI * PHI == PHI + 1
    assert PSI * PSI == 2 * PSI + 1
    assert (PHI - 1) == PHI.inverse()
    assert PHI.floor() == 1 and PSI.floor() == 2
    assert PHI.norm() == Fraction(-1) and PHI.trace() == 1
    assert abs(float(PHI) - (1 + 5**0.5) / 2) < 1e-15


def test_cf_expand_examples():
    phi = cf_expand(PHI)
    assert phi.preperiod == () and phi.period == (1,)
    assert even_form(phi.period).letters == (1, 1)
    assert cf_expand(normalize(1, 1, 2, 3)).period == (1, 2)
    assert cf_expand(PSI).period == (2,)
    assert even_form(cf_expand(PSI).period).letters == (2, 2)
    sqrt2 = cf_expand(normalize(0, 1, 1, 2))
    assert sqrt2.preperiod == (1,) and sqrt2.period == (2,)


def test_value_of_period_examples():
    assert value_of_period([1, 1]) == PHI
    assert value_of_period([2, 2]) == PSI
    assert value_of_period([1, 2]) == normalize(1, 1, 2, 3)


@given(words(10, 12, even=False))
@settings(max_examples=200, deadline=None)
def test_round_trip(letters):
    w = value_of_period(letters)
    cf = cf_expand(w)
    assert cf.preperiod == ()
    assert value_of_period(cf.period) == w
    # minimal period divides the input length and repeats to it
    k = len(cf.period)
    assert len(letters) % k == 0 and tuple(cf.period) * (len(letters) // k) == tuple(letters)
    assert abs(mpval(w) - mp_period_value(letters)) < mpmath.mpf(10) ** -30


@given(st.integers(-20, 20), words(6, 6, even=False))
@settings(max_examples=100, deadline=None)
def test_expansion_reconstructs(a0, letters):
    w = a0 + value_of_period(letters).inverse()
    cf = cf_expand(w)
    assert cf.value() == w


def test_cf_compare_examples():
    P = CFExpansion.purely_periodic
    assert cf_compare(P((1, 1)), P((2, 2))) == -1
    assert cf_compare(P((1, 2)), P((1, 2))) == 0
    assert cf_compare(P((1, 2)), P((1, 1))) == -1


@given(words(5, 8, even=False), words(5, 8, even=False))
@settings(max_examples=300, deadline=None)
def test_cf_compare_matches_values(a, b):
    u, v = value_of_period(a), value_of_period(b)
    assert cf_compare(cf_expand(u), cf_expand(v)) == compare(u, v)


def test_large_square_factor_representations_agree():
    # 10007 is above the trial-division bound, so the radicand keeps its square
    big = normalize(0, 1, 1, 3 * 10007**2)
    small = normalize(0, 10007, 1, 3)
    assert big.d != small.d
    assert big == small and hash(big) == hash(small)
    assert big - small == 0
    assert (big * small) == 3 * 10007**2
    assert compare(big + 1, small) == 1
