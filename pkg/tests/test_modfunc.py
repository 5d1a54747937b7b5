import json
import math
import random

import numpy as np
import pytest

from valkit.errors import HypothesisViolation, ResourceLimit
from valkit.geometry import Mat2
from valkit.modfunc import (
    ModularFunction, arc_hypotheses, arc_value, constant_function, evaluate, evaluate_mp, j_coefficients,
    j_function, load_function, reduce_to_fundamental_domain,
)


def _divisor_sum(n, k):
    return sum(d**k for d in range(1, n + 1) if n % d == 0)


def _j_oracle(n_terms):
    """1728 E4^3 / (E4^3 - E6^2), with E4^3 - E6^2 = 1728 q + ..., by long division."""
    N = n_terms + 2
    e4 = [1] + [240 * _divisor_sum(n, 3) for n in range(1, N)]
    e6 = [1] + [-504 * _divisor_sum(n, 5) for n in range(1, N)]

    def mul(a, b):
        return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(N)]

    e4c = mul(mul(e4, e4), e4)
    den = [x - y for x, y in zip(e4c, mul(e6, e6))]
    assert den[0] == 0 and den[1] == 1728
    den = [c // 1728 for c in den[1:]] + [0]  # den / (1728 q), exact
    # quotient e4c / den as a series; j = quotient / q
    out = []
    rem = list(e4c)
    for k in range(N - 1):
        c = rem[k] // den[0]
        out.append(c)
        for i in range(N - k):
            if i < len(den):
                rem[k + i] -= c * den[i]
    return out[: n_terms + 2]


def test_j_coefficients_known():
    c = j_coefficients(60)
    assert c[:5] == (1, 744, 196884, 21493760, 864299970)
    ref = _j_oracle(60)
    n = min(len(c), len(ref)) - 2
    assert n >= 58 and c[:n] == tuple(ref[:n])
    with pytest.raises(ResourceLimit):
        j_coefficients(10**6)


def test_reduction():
    tau, M = reduce_to_fundamental_domain(1j)
    assert tau == 1j and M == Mat2(1, 0, 0, 1)
    tau, M = reduce_to_fundamental_domain(1j + 5)
    assert abs(tau - 1j) < 1e-15 and M == Mat2(1, -5, 0, 1)
    z = 0.1 + 0.1j
    tau, M = reduce_to_fundamental_domain(z)
    assert abs(tau) >= 1 - 1e-12 and abs(tau.real) <= 0.5 + 1e-12
    assert abs(M(z) - tau) < 1e-12
    j = j_function()
    assert abs(j(z) - j(tau)) <= 1e-8 * abs(j(tau))


def test_special_values(j):
    assert abs(j(1j) - 1728) < 1e-8
    assert abs(j(complex(0.5, math.sqrt(3) / 2))) < 1e-8
    assert constant_function(1)(0.3 + 2j) == 1
    assert abs(arc_value(j, math.pi / 2) - 1728) < 1e-6
    assert abs(arc_value(j, math.pi / 3)) < 1e-6
    t = np.linspace(math.pi / 3, 2 * math.pi / 3, 50)
    assert np.allclose(arc_value(j, t), arc_value(j, math.pi - t), atol=1e-8, rtol=1e-12)


def test_extended_precision_matches(j):
    for z in (1j, 0.3 + 1.1j, complex(0.5, math.sqrt(3) / 2 + 0.01)):
        assert abs(complex(evaluate_mp(j, z)) - j(z)) < 1e-9 * max(1, abs(j(z)))


def test_arc_reality_and_monotonicity(j):
    t = np.linspace(math.pi / 3, 2 * math.pi / 3, 1000)
    vals = j._sum(np.exp(1j * t), 1e-14)
    assert np.max(np.abs(vals.imag)) <= 1e-8 * np.max(np.abs(vals))
    rep = arc_hypotheses(j)
    assert rep["real"] and rep["nonnegative"] and rep["increasing"]


def test_invariance_random(j):
    rng = random.Random(7)
    gens = [Mat2(1, 1, 0, 1), Mat2(0, -1, 1, 0), Mat2(1, -1, 0, 1)]
    for _ in range(50):
        z = complex(rng.uniform(-0.5, 0.5), rng.uniform(0.9, 2.0))
        if abs(z) < 1:
            continue
        M = Mat2(1, 0, 0, 1)
        for _ in range(rng.randint(1, 5)):
            M = M @ rng.choice(gens)
        w = M(z)
        assert abs(j(w) - j(z)) <= 1e-8 * max(1.0, abs(j(z)))


def test_truncation_honesty():
    q = math.exp(-math.pi * math.sqrt(3))
    short, long = j_function(30), j_function(60)
    n, tail = short.truncation(q, 1e-10)
    t = np.linspace(math.pi / 3, math.pi / 2, 20)
    diff = np.max(np.abs(short._sum(np.exp(1j * t), 1e-10) - long._sum(np.exp(1j * t), 1e-14)))
    assert diff <= tail + 1e-12


def test_load_function(tmp_path):
    good = tmp_path / "j2.json"
    c = list(j_coefficients(40))
    good.write_text(json.dumps({"pole_order": 1, "coeffs": c}))
    f = load_function(good)
    assert f.pole_order == 1 and abs(f(1j) - 1728) < 1e-6
    bad = tmp_path / "neg.json"
    bad.write_text(json.dumps({"pole_order": 1, "coeffs": [1, -2000]}))
    with pytest.raises(HypothesisViolation) as exc:
        load_function(bad)
    assert exc.value.report["nonnegative"] is False
