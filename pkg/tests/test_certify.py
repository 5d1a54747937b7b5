import math

import numpy as np
import pytest

from valkit import certify as cf
from valkit import kernels as kn
from valkit.certify import SearchDomain, bound, check_goodbad, check_monotone_D, extremize, regress
from valkit.errors import NonFinite

PI = math.pi


def test_extremize_quadratic():
    fn = lambda x, t: (x - 0.3) ** 2 + (t - 1.2) ** 2 - 2.0
    rep = extremize(fn, SearchDomain((0, 1), (1, 2), (17, 17)), "min")
    assert abs(rep.value + 2) < 1e-12
    assert np.allclose(rep.location, (0.3, 1.2), atol=1e-6)
    rep = extremize(lambda x, t: -fn(x, t), SearchDomain((0, 1), (1, 2), (17, 17)), "max")
    assert abs(rep.value - 2) < 1e-12


def test_extremize_constant_and_degenerate_axis():
    rep = extremize(lambda x, t: 0 * x + 5.0, SearchDomain((0, 1), (0, 1), (4, 4)), "max")
    assert rep.value == 5.0
    rep = extremize(lambda x, t: np.sin(t), SearchDomain((0, 0), (0, PI), (5, 33)), "max")
    assert abs(rep.value - 1) < 1e-12 and rep.location[0] == 0


def test_refinement_never_worse_than_grid():
    dom = SearchDomain((kn.PHI, kn.PSI), (PI / 3, cf.T_OPEN), (64, 64), 0)
    for fn in (kn.U_lemma_i, kn.Vfun):
        coarse = extremize(fn, dom, "min")
        fine = extremize(fn, dom.with_grid(64, 40), "min")
        assert fine.value <= coarse.value


def test_grid_convergence():
    dom = SearchDomain((4 / 3, kn.PHI), (PI / 3, PI / 2), (64, 64), 40)
    a = extremize(kn.a5_a2_lhs, dom, "max")
    b = extremize(kn.a5_a2_lhs, dom.with_grid(256), "max")
    assert abs(a.value - b.value) < 1e-9


def test_non_finite_is_reported():
    with pytest.raises(NonFinite):
        extremize(lambda x, t: 1 / (x - 0.5), SearchDomain((0, 1), (0, 1), (3, 3)), "min")


def test_regress_truncated_decimals():
    rep = cf.CertReport("x", "min", (0, 0), -0.6149)
    assert regress(rep, "-0.614", "c").verdict == "pass"
    rep = cf.CertReport("x", "min", (0, 0), -0.6139)
    assert regress(rep, "-0.614", "c").verdict == "fail"
    rep = cf.CertReport("x", "min", (0, 0), 8.5 + 1e-6)
    assert regress(rep, "8.5", "c", exact=True).verdict == "fail"
    rep = cf.CertReport("x", "max", (0, 0), 0.1)
    assert bound(rep, "<", 0.0, "c").verdict == "fail"
    rep = cf.CertReport("x", "min", (0, 0), 0.1)
    assert bound(rep, ">=", 0.0, "c", reference=False).verdict == "no-reference"


def test_goodbad_examples():
    t = np.linspace(PI / 3, PI / 2, 65)
    rep = check_goodbad((1, 1), t)
    assert rep.verdict == "pass" and abs(rep.value) < 1e-12
    rep = check_goodbad((1, 2), t)
    assert rep.verdict == "pass" and "1 bad of 3" in rep.note


def test_monotone_examples():
    t = np.linspace(PI / 3, PI / 2, 129)
    assert check_monotone_D((1, 1), (1, 2), t).verdict == "pass"
    assert check_monotone_D((1, 1, 2, 2), (2, 2), t).verdict == "pass"


def test_appendix_constants_reproduced():
    reps = {r.task_id: r for r in cf.check_appendix_bounds(128, 40)}
    assert all(r.ok for r in reps.values()), [r.task_id for r in reps.values() if not r.ok]


def test_unknown_suite():
    with pytest.raises(ValueError):
        cf.run_suite("nope")
