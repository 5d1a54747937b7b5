import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from scipy.integrate import quad

from conftest import random_even_word, words
from valkit import kernels as kn
from valkit.cycle import (
    D, S_F, S_L, S_L_direct, S_U, S_U_split, hat_S, hat_S_sym, orbit_values, re_val, re_val_extended,
    val_complex, val_of_surd, word_data,
)
from valkit.errors import NotMarkovWord
from valkit.modfunc import constant_function
from valkit.surd import QuadSurd
from valkit.words import PeriodicWord, markov_words, opposite, rotation

PI = math.pi
J11 = 706.3248135408132
J22 = 709.8928909199126


def test_orbit_counts_and_values():
    terms = orbit_values((1, 2))
    assert [(i, m) for i, m, _ in terms] == [(1, 1), (2, 1), (2, 2)]
    assert all(s > 1 for _, _, s in terms)
    phi = (1 + math.sqrt(5)) / 2
    assert np.allclose([float(s) for _, _, s in orbit_values((1, 1))], [phi, phi])


def test_S_L_examples():
    assert abs(S_L((1, 1)) - 2 * math.log((1 + math.sqrt(5)) / 2)) < 1e-14
    assert abs(S_L((2, 2)) - 2 * math.log(1 + math.sqrt(2))) < 1e-14
    t = np.linspace(PI / 3, 2 * PI / 3, 9)
    assert np.allclose(S_F((1, 1), t), 2 * kn.F(kn.PHI, t))


@given(words(max_letter=8, max_len=8))
@settings(max_examples=60, deadline=None)
def test_S_L_matches_log_epsilon(w):
    assert abs(S_L_direct(w) - word_data(w).log_eps) <= 1e-10 * max(1, word_data(w).log_eps)


@pytest.mark.parametrize("w", [(1, 1), (2, 2), (1, 2), (3, 1, 4, 1), (2, 2, 1, 1), (7, 1)])
def test_hat_S_normalization(w):
    total, _ = quad(lambda t: float(hat_S(w, t)), PI / 3, 2 * PI / 3, epsabs=1e-13)
    assert abs(total - 1) < 1e-10
    half, _ = quad(lambda t: float(hat_S_sym(w, t)), PI / 3, PI / 2, epsabs=1e-13)
    assert abs(half - 1) < 1e-10
    dint, _ = quad(lambda t: float(D(w, (1, 1), t)), PI / 3, PI / 2, epsabs=1e-13)
    assert abs(dint) < 1e-10


def test_reference_values(j):
    assert abs(re_val(j, (1, 1)).re_val - J11) < 1e-6
    assert abs(re_val(j, (2, 2)).re_val - J22) < 1e-6
    assert re_val(j, (1,)).re_val == re_val(j, (1, 1)).re_val
    assert abs(re_val(constant_function(1), (3, 1, 4, 1)).re_val - 1) < 1e-10


def test_extended_precision_agrees(j):
    ext = re_val_extended(j, (1, 1), dps=20)
    assert abs(ext.re_val - J11) < 1e-9


def test_formula_vs_oracle(j):
    rng = random.Random(3)
    for _ in range(10):
        w = random_even_word(rng, 6, 6)
        a = re_val(j, w)
        b = val_complex(j, w)
        assert abs(a.re_val - b.re_val) <= 1e-8 * max(1, abs(a.re_val)), w


@pytest.mark.parametrize("tau0", [1.3j, 0.2 + 1.1j, -0.4 + 0.95j])
def test_oracle_independent_of_base_point(j, tau0):
    w = (2, 1, 3, 1)
    ref = val_complex(j, w)
    other = val_complex(j, w, tau0=tau0)
    assert abs(complex(ref.re_val, ref.im_val) - complex(other.re_val, other.im_val)) < 1e-8 * abs(ref.re_val)


def test_constant_function_cycle_integral():
    from valkit.cycle import cycle_integral_direct

    for w in [(1, 1), (1, 2), (4, 1, 2, 3)]:
        I1, _ = cycle_integral_direct(constant_function(1), w)
        assert abs(I1 - 2 * word_data(w).log_eps) < 1e-9


def test_rotation_properties(j):
    w = PeriodicWord((3, 1, 2, 5))
    base = val_complex(j, w)
    z0 = complex(base.re_val, base.im_val)
    for i in (1, 3):
        r = val_complex(j, rotation(w, i))
        assert abs(complex(r.re_val, r.im_val) - z0) < 1e-8 * abs(z0)
    for i in (2, 4):
        r = val_complex(j, rotation(w, i))
        assert abs(complex(r.re_val, r.im_val) - z0.conjugate()) < 1e-8 * abs(z0)
    # reversal keeps the full complex value for real-coefficient f
    r = val_complex(j, opposite(w))
    assert abs(complex(r.re_val, r.im_val) - z0) < 1e-8 * abs(z0)
    assert abs(re_val(j, opposite(w)).re_val - base.re_val) < 1e-8 * abs(base.re_val)


def test_surd_value_regression(j):
    res, cf = val_of_surd(j, QuadSurd(1, 1, 2, 3))
    assert cf.period == (1, 2)
    assert abs(res.re_val - 709.792359008031) < 1e-8


def test_S_U_properties():
    t = np.linspace(PI / 3, PI / 2 - 1e-6, 64)
    assert np.max(np.abs(S_U((2, 2), t))) < 1e-10
    for w in markov_words(3):
        s1, s2 = S_U_split(w, t)
        assert np.allclose(s1 + s2, S_U(w, t), atol=1e-10)
        assert np.min(S_U(w, t)) >= -1e-9
    with pytest.raises(NotMarkovWord):
        S_U_split((1, 2), t)
    with pytest.raises(NotMarkovWord):
        S_U_split((3, 3), t)
