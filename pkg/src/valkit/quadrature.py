"""Adaptive Gauss-Legendre quadrature over panels, vectorized across panels."""
from __future__ import annotations

from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import QuadratureFailure


@lru_cache(maxsize=16)
def _rule(n: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(n)


def adaptive_gauss_legendre(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    tol: float = 1e-10,
    order: int = 12,
    initial_panels: int = 4,
    max_panels: int = 1 << 14,
) -> tuple[complex | float, float]:
    """Integrate ``f`` over [a, b]; returns (value, error estimate).

    Each panel is integrated with ``order`` and ``2*order`` Gauss-Legendre
    points; a panel is accepted once the two agree within its share of
    ``tol`` (absolute), otherwise it is halved.  ``f`` receives a 1-D array of
    nodes and must return values of the same shape (real or complex).
    """
    if a == b:
        return 0.0, 0.0
    x1, w1 = _rule(order)
    x2, w2 = _rule(2 * order)
    edges = np.linspace(a, b, initial_panels + 1)
    lo, hi = edges[:-1], edges[1:]
    total, err = 0.0, 0.0
    length = abs(b - a)
    while lo.size:
        if lo.size > max_panels:
            raise QuadratureFailure(f"more than {max_panels} panels needed for tol={tol:g}")
        mid, half = (lo + hi) / 2, (hi - lo) / 2
        nodes = np.concatenate([(mid[:, None] + half[:, None] * x1).ravel(), (mid[:, None] + half[:, None] * x2).ravel()])
        vals = f(nodes)
        k = lo.size * len(x1)
        g1 = (vals[:k].reshape(lo.size, -1) @ w1) * half
        g2 = (vals[k:].reshape(lo.size, -1) @ w2) * half
        diff = np.abs(g2 - g1)
        ok = diff <= tol * np.abs(hi - lo) / length
        if not np.all(np.isfinite(vals)):
            raise QuadratureFailure("integrand is not finite")
        total = total + g2[ok].sum()
        err += float(diff[ok].sum())
        bad = ~ok
        if np.any(np.abs(half[bad]) < 1e-14 * length):
            raise QuadratureFailure("panel width underflow")
        lo, hi = np.concatenate([lo[bad], mid[bad]]), np.concatenate([mid[bad], hi[bad]])
    return total, err
