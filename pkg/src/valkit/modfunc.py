"""Weakly holomorphic modular functions given by exact q-expansions.

Coefficients of j come from exact integer power series (E4^3 / Delta).
Evaluation reduces tau to the standard fundamental domain, where
|q| <= exp(-pi*sqrt(3)), and sums the truncated series.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import numpy as np

from .errors import (
    HypothesisViolation,
    NonConvergence,
    PrecisionLoss,
    RealityViolation,
    ResourceLimit,
)
from .geometry import IDENTITY, Mat2

J_NMAX_DEFAULT = 60
J_NMAX_CAP = 2000
Q_FUNDAMENTAL = math.exp(-math.pi * math.sqrt(3.0))
TAIL_SAFETY = 2.0
REDUCE_MAX_ITER = 200


# ---------------------------------------------------------------------------
# exact integer power series, truncated at a fixed length
# ---------------------------------------------------------------------------


def series_mul(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * n
    for i, ai in enumerate(a[:n]):
        if ai:
            for k, bk in enumerate(b[: n - i]):
                out[i + k] += ai * bk
    return out


def series_inv(a: list[int], n: int) -> list[int]:
    """Inverse of an integer series with constant term 1."""
    if a[0] != 1:
        raise ValueError("series inverse needs constant term 1")
    inv = [0] * n
    inv[0] = 1
    for k in range(1, n):
        inv[k] = -sum(a[i] * inv[k - i] for i in range(1, min(k, len(a) - 1) + 1))
    return inv


def sigma(n: int, k: int) -> int:
    return sum(d**k for d in range(1, n + 1) if n % d == 0)


def eisenstein_e4(n: int) -> list[int]:
    return [1] + [240 * sigma(m, 3) for m in range(1, n)]


def eisenstein_e6(n: int) -> list[int]:
    return [1] + [-504 * sigma(m, 5) for m in range(1, n)]


def eta_product_24(n: int) -> list[int]:
    """prod_{m>=1} (1 - q^m)^24 truncated to n terms."""
    out = [1] + [0] * (n - 1)
    for m in range(1, n):
        factor = [0] * n
        factor[0] = 1
        factor[m] = -1
        for _ in range(24):
            out = series_mul(out, factor, n)
    return out


@lru_cache(maxsize=8)
def j_coefficients(n_max: int = J_NMAX_DEFAULT) -> tuple[int, ...]:
    """(c_{-1}, c_0, c_1, ..., c_{n_max}) of j = 1/q + 744 + sum c_n q^n."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    if n_max > J_NMAX_CAP:
        raise ResourceLimit(f"n_max {n_max} exceeds cap {J_NMAX_CAP}")
    n = n_max + 2
    e4 = eisenstein_e4(n)
    e4_cubed = series_mul(series_mul(e4, e4, n), e4, n)
    # j = q^{-1} E4^3 / prod (1 - q^m)^24
    coeffs = series_mul(e4_cubed, series_inv(eta_product_24(n), n), n)
    return tuple(coeffs)


# ---------------------------------------------------------------------------
# fundamental domain
# ---------------------------------------------------------------------------


def reduce_to_fundamental_domain(tau: complex, tol: float = 1e-12, max_iter: int = REDUCE_MAX_ITER):
    """Return (tau', M) with tau' = M(tau) in the standard fundamental domain."""
    tau = complex(tau)
    if tau.imag <= 0:
        raise ValueError("tau must lie in the upper half-plane")
    M = IDENTITY
    for _ in range(max_iter):
        n = math.floor(tau.real + 0.5)
        if n:
            tau -= n
            M = Mat2(1, -n, 0, 1) @ M
        if abs(tau) < 1 - tol:
            tau = -1 / tau
            M = Mat2(0, -1, 1, 0) @ M
        else:
            return tau, M
    raise NonConvergence(f"reduction did not converge for tau={tau!r}")


def reduce_array(tau: np.ndarray, tol: float = 1e-12, max_iter: int = REDUCE_MAX_ITER) -> np.ndarray:
    """Vectorized reduction of points (the matrices are not tracked)."""
    z = np.array(tau, dtype=complex, copy=True)
    if np.any(z.imag <= 0):
        raise ValueError("all points must lie in the upper half-plane")
    for _ in range(max_iter):
        z = z - np.floor(z.real + 0.5)
        inside = np.abs(z) < 1 - tol
        if not inside.any():
            return z
        z[inside] = -1 / z[inside]
    raise NonConvergence("vectorized reduction did not converge")


# ---------------------------------------------------------------------------
# modular functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ModularFunction:
    """f = sum_{n >= -pole_order} c_n q^n with exact integer coefficients."""

    name: str
    pole_order: int
    coeffs: tuple[int, ...]
    _float: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.pole_order < 0:
            raise ValueError("pole_order must be >= 0")
        if not self.coeffs:
            raise ValueError("at least one coefficient is needed")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        object.__setattr__(self, "_float", np.array([float(c) for c in self.coeffs]))

    @property
    def n_max(self) -> int:
        return len(self.coeffs) - 1 - self.pole_order

    def coefficient(self, n: int) -> int:
        return self.coeffs[n + self.pole_order]

    @property
    def is_constant(self) -> bool:
        return self.pole_order == 0 and len(self.coeffs) == 1

    def truncation(self, qabs: float, tol: float) -> tuple[int, float]:
        """Smallest N such that the stored tail beyond q^N is below ``tol``.

        The tail bound sums |c_n| qabs^n over the stored coefficients past N and
        multiplies by TAIL_SAFETY to cover the unstored remainder.
        """
        mags = np.abs(self._float) * qabs ** np.arange(-self.pole_order, self.n_max + 1, dtype=float)
        tails = np.concatenate([np.cumsum(mags[::-1])[::-1][1:], [0.0]]) * TAIL_SAFETY
        ok = np.nonzero(tails <= tol)[0]
        if len(ok) == 0:
            raise PrecisionLoss(f"tail bound {tails[-2]:.3g} above tolerance {tol:.3g}")
        idx = int(ok[0])
        if idx == len(mags) - 1 and self.n_max > 0 and mags[-1] > tol:
            raise PrecisionLoss("last stored coefficient still exceeds tolerance")
        return idx - self.pole_order, float(tails[idx])

    def _sum(self, z: np.ndarray, tol: float) -> np.ndarray:
        if self.is_constant:
            return np.full(z.shape, float(self.coeffs[0]), dtype=complex)
        q = np.exp(2j * np.pi * z)
        qabs = float(np.max(np.abs(q))) if q.size else Q_FUNDAMENTAL
        N, _ = self.truncation(max(qabs, 1e-300), tol)
        out = np.zeros(z.shape, dtype=complex)
        # Horner in q, then shift by the pole
        for c in self._float[: N + self.pole_order + 1][::-1]:
            out = out * q + c
        if self.pole_order:
            out = out * q ** (-self.pole_order)
        return out

    def __call__(self, tau, tol: float = 1e-12):
        return evaluate(self, tau, tol)

    def to_json(self) -> dict:
        return {"name": self.name, "pole_order": self.pole_order, "coeffs": list(self.coeffs)}


def j_function(n_max: int = J_NMAX_DEFAULT) -> ModularFunction:
    return ModularFunction("j", 1, j_coefficients(n_max))


def constant_function(value: int = 1) -> ModularFunction:
    return ModularFunction("one" if value == 1 else f"const{value}", 0, (value,))


def load_function(path) -> ModularFunction:
    """Load {"pole_order": k, "coeffs": [c_-k, ..., c_N]} and validate the arc hypotheses."""
    data = json.loads(Path(path).read_text())
    f = ModularFunction(data.get("name", Path(path).stem), int(data["pole_order"]), tuple(data["coeffs"]))
    report = arc_hypotheses(f)
    if not (report["real"] and report["nonnegative"]):
        raise HypothesisViolation(f"{f.name} is not real and non-negative on the arc", report)
    return f


def evaluate(f: ModularFunction, tau, tol: float = 1e-12):
    """f(tau) for a scalar or an array of points in the upper half-plane."""
    arr = np.asarray(tau, dtype=complex)
    z = reduce_array(np.atleast_1d(arr))
    out = f._sum(z, tol)
    return complex(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)


def evaluate_mp(f: ModularFunction, tau, dps: int = 30):
    """Extended-precision evaluation with mpmath (reduction done in mp too)."""
    import mpmath

    with mpmath.workdps(dps + 10):
        z = mpmath.mpc(tau)
        for _ in range(REDUCE_MAX_ITER):
            z -= mpmath.floor(z.real + mpmath.mpf(0.5))
            if abs(z) < 1 - mpmath.mpf(10) ** (-dps):
                z = -1 / z
            else:
                break
        else:
            raise NonConvergence("mp reduction did not converge")
        q = mpmath.exp(2j * mpmath.pi * z)
        total = mpmath.mpc(0)
        for k, c in enumerate(f.coeffs):
            total += c * q ** (k - f.pole_order)
    return +total


def arc_points(t) -> np.ndarray:
    return np.exp(1j * np.asarray(t, dtype=float))


def arc_value(f: ModularFunction, t, tol: float = 1e-8, check_sign: bool | None = None):
    """Real value f(e^{it}) on the arc pi/3 <= t <= 2pi/3.

    Raises RealityViolation if the imaginary part exceeds ``tol`` relative to
    max(1, |f|); for j also rejects values below -tol.
    """
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr < math.pi / 3 - 1e-12) or np.any(t_arr > 2 * math.pi / 3 + 1e-12):
        raise ValueError("arc parameter must lie in [pi/3, 2pi/3]")
    z = arc_points(np.atleast_1d(t_arr))
    # already in the fundamental domain; skip reduction so corner points stay put
    vals = f._sum(z, 1e-14)
    scale = np.maximum(1.0, np.abs(vals))
    if np.any(np.abs(vals.imag) > tol * scale):
        bad = float(np.max(np.abs(vals.imag) / scale))
        raise RealityViolation(f"{f.name} has relative imaginary part {bad:.3g} on the arc")
    if check_sign is None:
        check_sign = f.name == "j"
    if check_sign and np.any(vals.real < -tol * scale):
        raise RealityViolation(f"{f.name} is negative on the arc")
    out = vals.real
    return float(out[0]) if t_arr.ndim == 0 else out.reshape(t_arr.shape)


def arc_hypotheses(f: ModularFunction, n: int = 1000, tol: float = 1e-8) -> dict:
    """Check reality, non-negativity and monotonicity of f(e^{it}) on a grid."""
    t = np.linspace(math.pi / 3, math.pi / 2, n)
    vals = f._sum(arc_points(t), 1e-14)
    scale = np.maximum(1.0, np.abs(vals))
    real = bool(np.all(np.abs(vals.imag) <= tol * scale))
    nonneg = bool(np.all(vals.real >= -tol * scale))
    increasing = bool(np.all(np.diff(vals.real) >= -tol * scale[1:]))
    return {
        "name": f.name,
        "real": real,
        "nonnegative": nonneg,
        "increasing": increasing,
        "max_rel_imag": float(np.max(np.abs(vals.imag) / scale)),
        "min_value": float(np.min(vals.real)),
    }
