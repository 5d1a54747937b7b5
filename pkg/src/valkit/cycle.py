"""Cycle-integral engine.

Two independent routes to val_f(w):

* the arc formula: Re val_f(w) as an integral over pi/3 <= t <= pi/2 of
  f(e^{it}) against the symmetrized normalized kernel built from the orbit
  values w_{i,m};
* a direct complex path integral of f(tau) sqrt(D) / Q(tau, 1) from tau0 to
  B(tau0), with B the inverse of the word matrix (so I_1 = 2 log eps > 0).
  The path is cut at the prefixes of B and every piece is pulled back by an
  SL(2,Z) element to a horizontal segment, so f is only ever evaluated at
  heights Im(tau0) and Im(-1/tau0).
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import kernels
from .errors import ConsistencyFailure, NotMarkovWord, PathSingularity
from .geometry import S, T, V, Mat2, epsilon, fixed_points, word_to_matrix
from .modfunc import ModularFunction, arc_points, constant_function
from .quadrature import adaptive_gauss_legendre
from .surd import QuadSurd, value_of_period
from .words import PeriodicWord, as_word, even_form, is_markov_word, opposite

S_L_TOL = 1e-10


@dataclass(frozen=True)
class Orbit:
    """Exact and float orbit data of an even word."""

    word: PeriodicWord
    v: tuple[QuadSurd, ...]  # v_i, i = 1..l
    terms: tuple[tuple[int, int, QuadSurd], ...]  # (i, m, w_{i,m})
    x: np.ndarray = field(repr=False, compare=False)


def _orbit(word: PeriodicWord) -> Orbit:
    letters = word.letters
    n = len(letters)
    v = [value_of_period(letters)]
    for i in range(n - 1):
        v.append((v[i] - letters[i]).inverse())
    terms = []
    for i in range(n):
        tail_inv = v[(i + 1) % n].inverse()
        for m in range(1, letters[i] + 1):
            terms.append((i + 1, m, tail_inv + m))
    x = np.array([float(s) for _, _, s in terms])
    return Orbit(word, tuple(v), tuple(terms), x)


@dataclass(frozen=True)
class WordData:
    word: PeriodicWord
    op: PeriodicWord
    orbit: Orbit
    orbit_op: Orbit
    matrix: Mat2
    epsilon: QuadSurd
    log_eps: float


@lru_cache(maxsize=4096)
def _word_data(letters: tuple[int, ...]) -> WordData:
    w = PeriodicWord(letters)
    op = opposite(w)
    A = word_to_matrix(w)
    eps = epsilon(A)
    return WordData(w, op, _orbit(w), _orbit(op), A, eps, eps.log())


def word_data(w) -> WordData:
    """Cached orbit data for ``w`` (odd words are doubled first)."""
    return _word_data(even_form(as_word(w)).letters)


def orbit_values(w) -> list[tuple[int, int, QuadSurd]]:
    """All (i, m, w_{i,m}) with w_{i,m} = [m; a_{i+1}, ..., a_i repeated]."""
    return list(word_data(w).orbit.terms)


def rotation_values(w) -> tuple[QuadSurd, ...]:
    return word_data(w).orbit.v


# ---------------------------------------------------------------------------
# kernel sums
# ---------------------------------------------------------------------------


def _sum_over_orbit(kernel, x: np.ndarray, t):
    t = np.asarray(t, dtype=float)
    vals = kernel(x.reshape((-1,) + (1,) * t.ndim), t)
    return vals.sum(axis=0)


def S_F(w, t):
    return _sum_over_orbit(kernels.F, word_data(w).orbit.x, t)


def S_G(w, t):
    return _sum_over_orbit(kernels.G, word_data(w).orbit.x, t)


def S_H(w, t):
    return _sum_over_orbit(kernels.H, word_data(w).orbit.x, t)


def S_GH(w, t):
    """S_G + S_H, exactly zero at t = pi/2 up to cos(pi/2)."""
    return _sum_over_orbit(kernels.GH, word_data(w).orbit.x, t)


def S_Z(w, t):
    return _sum_over_orbit(kernels.Z, word_data(w).orbit.x, t)


def S_L_direct(w) -> float:
    return math.fsum(kernels.L(word_data(w).orbit.x).tolist())


def S_L(w, tol: float = S_L_TOL) -> float:
    """log(eps) for w, after checking it against the direct sum of L(w_{i,m})."""
    wd = word_data(w)
    direct = S_L_direct(w)
    if abs(direct - wd.log_eps) > tol * max(1.0, wd.log_eps):
        raise ConsistencyFailure(f"S_L direct {direct!r} vs log eps {wd.log_eps!r} for {wd.word}")
    return wd.log_eps


def hat_S(w, t):
    wd = word_data(w)
    t = np.asarray(t, dtype=float)
    num = np.sin(t) * (S_F(wd.word, t) + S_F(wd.op, t))
    return num / (2 * wd.log_eps)


def hat_S_sym(w, t):
    """hat_S(w, t) + hat_S(w, pi - t)."""
    t = np.asarray(t, dtype=float)
    return hat_S(w, t) + hat_S(w, math.pi - t)


def D(w1, w2, t):
    return hat_S_sym(w1, t) - hat_S_sym(w2, t)


def U_psi(x, t):
    """U(x, t) with the psi-data taken from the cycle sums of [2, 2]."""
    psi = PeriodicWord((2, 2))
    return kernels.U(x, t, S_GH(psi, t), S_L(psi))


def S_U(w, t):
    return _sum_over_orbit(U_psi, word_data(w).orbit.x, t)


def S_U_split(w, t):
    """(S_U^(1), S_U^(2)): groups over odd i by the value of a_{i-1}."""
    w = as_word(w)
    if not is_markov_word(w):
        raise NotMarkovWord(f"{w} is not a paired {{1,2}} word of even length")
    t = np.asarray(t, dtype=float)
    wd = word_data(w)
    n = len(w)
    s1 = np.zeros(np.shape(t))
    s2 = np.zeros(np.shape(t))
    for i in range(1, n + 1, 2):
        x = float(wd.orbit.v[i - 1])
        if w[(i - 2) % n] == 2:
            s1 = s1 + U_psi(x, t) + U_psi(kernels.psi_map(x), t) + U_psi(kernels.phi_map(x), t) \
                + U_psi(kernels.phi_psi_map(x), t)
        else:
            s2 = s2 + U_psi(x, t) + U_psi(kernels.phi_map(x), t)
    return s1, s2


# ---------------------------------------------------------------------------
# values
# ---------------------------------------------------------------------------


@dataclass
class ValResult:
    word: list[int]
    re_val: float
    im_val: float | None
    epsilon_log: float
    method: str
    error_estimate: float
    f: str = "j"

    def to_json(self) -> dict:
        return asdict(self)


def re_val(f: ModularFunction, w, tol: float = 1e-9) -> ValResult:
    """Re val_f(w) by the arc formula, integrated on [pi/3, pi/2]."""
    wd = word_data(w)
    x_all = np.concatenate([wd.orbit.x, wd.orbit_op.x])
    scale = 1.0 / (2 * wd.log_eps)
    tail = 0.0
    if not f.is_constant:
        _, tail = f.truncation(math.exp(-math.pi * math.sqrt(3.0)), 1e-13)

    def integrand(t):
        tt = np.concatenate([t, math.pi - t])
        sf = kernels.F(x_all[:, None], tt[None, :]).sum(axis=0) * np.sin(tt) * scale
        sym = sf[: t.size] + sf[t.size:]
        return f._sum(arc_points(t), 1e-14).real * sym

    val, err = adaptive_gauss_legendre(integrand, math.pi / 3, math.pi / 2, tol=tol)
    return ValResult(list(wd.word.letters), float(val), None, wd.log_eps, "formula", err + tail, f.name)


def _path_pieces(w, tau0: complex):
    """Pulled-back horizontal segments (start, length, r1, r2, sign) of the cycle."""
    wd = word_data(w)
    A = wd.matrix
    fp = fixed_points(A)
    letters = wd.word.letters
    # B = A^{-1} = V^{-a_l} T^{-a_{l-1}} ... V^{-a_2} T^{-a_1}
    factors = []
    for k in range(len(letters) - 1, -1, -1):
        factors.append(("V" if k % 2 else "T", -letters[k]))
    start_T = complex(tau0)
    start_V = -1 / start_T
    prefix = Mat2(1, 0, 0, 1)
    pieces = []
    for kind, n in factors:
        M = prefix if kind == "T" else prefix @ S
        start = start_T if kind == "T" else start_V
        length = n if kind == "T" else -n
        Minv = M.inverse()
        r1, r2 = Minv(fp.w), Minv(fp.w_tilde)
        lead = fp.form.compose(M).a
        sign = (1 if lead > 0 else -1) * (r1 - r2).sign()
        pieces.append((start, float(length), float(r1), float(r2), sign))
        prefix = prefix @ (T**n if kind == "T" else V**n)
    return pieces


def cycle_integral_direct(f: ModularFunction, w, tau0: complex = 1j, tol: float = 1e-10):
    """I_f along the closed geodesic of w; returns (value, error estimate)."""
    tau0 = complex(tau0)
    if tau0.imag <= 0:
        raise ValueError("tau0 must lie in the upper half-plane")
    pieces = _path_pieces(w, tau0)
    if min(tau0.imag, (-1 / tau0).imag) < 1e-6:
        raise PathSingularity("path runs within 1e-6 of the real axis")
    total, err = 0j, 0.0
    for start, length, r1, r2, sign in pieces:
        def integrand(s, start=start, r1=r1, r2=r2, sign=sign):
            z = start + s
            kern = sign * (1 / (z - r1) - 1 / (z - r2))
            return f(z, tol=1e-14) * kern if not f.is_constant else f.coeffs[0] * kern

        val, e = adaptive_gauss_legendre(integrand, 0.0, length, tol=tol / len(pieces))
        total += val
        err += e
    if not f.is_constant:
        y = min(tau0.imag, (-1 / tau0).imag)
        qabs = math.exp(-2 * math.pi * max(y, math.sqrt(3) / 2))
        _, tail = f.truncation(qabs, 1e-13)
        err += tail * sum(abs(p[1]) for p in pieces)
    return complex(total), err


def val_complex(f: ModularFunction, w, tau0: complex = 1j, tol: float = 1e-10) -> ValResult:
    wd = word_data(w)
    If, ef = cycle_integral_direct(f, w, tau0, tol)
    I1, e1 = cycle_integral_direct(constant_function(1), w, tau0, tol)
    val = If / I1.real
    err = (ef + abs(val) * e1) / abs(I1.real)
    return ValResult(list(wd.word.letters), val.real, val.imag, wd.log_eps, "oracle", err, f.name)


def val_of_surd(f: ModularFunction, w: QuadSurd, tol: float = 1e-10):
    """val_f at an arbitrary surd via its periodic part.

    ``w = M(v)`` with v the purely periodic tail and det M = (-1)^k for a
    preperiod of length k, so the value is conjugated when k is odd.
    """
    from .surd import cf_expand

    cf = cf_expand(w)
    res = val_complex(f, PeriodicWord(cf.period), tol=tol)
    if len(cf.preperiod) % 2 and res.im_val is not None:
        res.im_val = -res.im_val
    return res, cf


def tabulate_hat_S(w, t: Sequence[float]):
    t = np.asarray(t, dtype=float)
    return hat_S(w, t), 0.5 * hat_S_sym(w, t)


def re_val_extended(f: ModularFunction, w, dps: int = 30) -> ValResult:
    """Arc formula in mpmath arithmetic (slow; for high-accuracy spot checks)."""
    import mpmath

    from .modfunc import evaluate_mp

    wd = word_data(w)
    with mpmath.workdps(dps + 10):
        xs = [s.to_mpf(dps + 10) for _, _, s in wd.orbit.terms + wd.orbit_op.terms]
        log_eps = mpmath.log(wd.epsilon.to_mpf(dps + 10))

        def sym(t):
            tot = mpmath.mpf(0)
            for u in (t, mpmath.pi - t):
                c = mpmath.cos(u)
                tot += mpmath.sin(u) * mpmath.fsum(x / (1 + x * x - 2 * x * c) for x in xs)
            return tot / (2 * log_eps)

        def integrand(t):
            return mpmath.re(evaluate_mp(f, mpmath.expj(t), dps)) * sym(t)

        val, err = mpmath.quad(integrand, [mpmath.pi / 3, mpmath.pi / 2], error=True)
    return ValResult(list(wd.word.letters), float(val), None, float(log_eps), "formula-extended", float(err), f.name)
