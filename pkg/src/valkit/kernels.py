"""Scalar kernels in (x, t) used by the value formula and the inequality checks.

All functions broadcast over numpy arrays.  Kernels that are divided by cos(t)
(P, R, Ztilde, Utilde, K) are written in their closed rational forms in cos(2t),
which stay regular at t = pi/2.
"""
from __future__ import annotations

import math

import numpy as np

PHI = (1 + math.sqrt(5)) / 2
PSI = 1 + math.sqrt(2)
SQRT5 = math.sqrt(5)
LOG_PHI = math.log(PHI)
LOG_PSI = math.log(PSI)
T_LO = math.pi / 3
T_MID = math.pi / 2
T_HI = 2 * math.pi / 3


def F(x, t):
    return x / (1 + x * x - 2 * x * np.cos(t))


def L(x):
    """Integral of sin(u) F(x, u) over [pi/3, 2pi/3], in closed form."""
    x = np.asarray(x, dtype=float)
    return 0.5 * np.log1p(2 * x / (1 + x * x - x))


def dL(x):
    return (1 - x * x) / (x**4 + x * x + 1)


def G(x, t):
    c = np.cos(t)
    return x * ((x * x + 1) * c - 2 * x) / (x * x + 1 - 2 * x * c) ** 2


def H(x, t):
    c = np.cos(t)
    return x * ((x * x + 1) * c + 2 * x) / (x * x + 1 + 2 * x * c) ** 2


def GH(x, t):
    """G + H, computed as cos(t) * P so that it vanishes exactly at pi/2."""
    return np.cos(t) * P(x, t)


def dG_dx(x, t):
    c = np.cos(t)
    return -(x * x - 1) * ((x * x + 1) * c + 2 * x * c * c - 4 * x) / (x * x + 1 - 2 * x * c) ** 3


def dH_dx(x, t):
    c = np.cos(t)
    return -(x * x - 1) * ((x * x + 1) * c - 2 * x * c * c + 4 * x) / (x * x + 1 + 2 * x * c) ** 3


def P(x, t):
    """(G + H) / cos(t)."""
    c2 = np.cos(2 * t)
    x2 = x * x
    return 2 * x * (x2 + 1) * (2 * x2 * c2 + x2 * x2 - 4 * x2 + 1) / (x2 * x2 + 1 - 2 * x2 * c2) ** 2


def dP_dx(x, t):
    c2, c4 = np.cos(2 * t), np.cos(4 * t)
    x2 = x * x
    num = 1 + x2**4 + (4 * x2 + 4 * x2**3) * (-2 + 3 * c2) + 2 * x2 * x2 * (-14 + 8 * c2 + c4)
    return 2 * (1 - x2) * num / (1 + x2 * x2 - 2 * x2 * c2) ** 3


def dP_dt(x, t):
    c2, s2 = np.cos(2 * t), np.sin(2 * t)
    x2 = x * x
    num = -8 * x**3 * s2 * (x2 + 1) * (2 * x2 * c2 - 8 * x2 + 3 * x2 * x2 + 3)
    return num / (x2 * x2 - 2 * c2 * x2 + 1) ** 3


def p_poly(x, t):
    c2, c4 = np.cos(2 * t), np.cos(4 * t)
    x2 = x * x
    return 9 + 9 * x2**4 + (4 * x2 + 4 * x2**3) * (-4 + 7 * c2) + 2 * x2 * x2 * (-38 + 16 * c2 + c4)


def dxdtP(x, t):
    c2 = np.cos(2 * t)
    x2 = x * x
    return 8 * x2 * (x2 - 1) * np.sin(2 * t) * p_poly(x, t) / (1 + x2 * x2 - 2 * x2 * c2) ** 4


def q_poly(x, t):
    return 2 * (x - 1) ** 2 * np.cos(2 * t) + 3 * x**4 - 12 * x**3 + 10 * x**2 + 4 * x - 2


def R(x, t):
    c2, c4 = np.cos(2 * t), np.cos(4 * t)
    x2 = x * x
    num = (
        12 * x2**3 * c2 + 16 * x2**2 * c2 + 2 * x2**2 * c4 + 12 * x2 * c2
        + x2**4 - 8 * x2**3 - 28 * x2**2 - 8 * x2 + 1
    )
    return 2 * num / (-2 * x2 * c2 + x2 * x2 + 1) ** 3


def R_from_definition(x, t):
    """R as the 1/cos(t) multiple of the two-term derivative sum (t != pi/2)."""
    c = np.cos(t)
    a = ((x * x + 1) * c + 2 * x * c * c - 4 * x) / (-2 * x * c + x * x + 1) ** 3
    b = ((x * x + 1) * c - 2 * x * c * c + 4 * x) / (2 * x * c + x * x + 1) ** 3
    return (a + b) / c


def M(x, t):
    c, c2 = np.cos(t), np.cos(2 * t)
    num = 12 * x**3 * c + 16 * x**2 * c + 2 * x**2 * c2 + 12 * x * c + x**4 - 8 * x**3 - 28 * x**2 - 8 * x + 1
    return num / (-2 * x * c + x * x + 1) ** 3


def N(x, t):
    c, c2, c3 = np.cos(t), np.cos(2 * t), np.cos(3 * t)
    return (
        19 * x**4 * c + 32 * x**3 * c + 4 * x**3 * c2 + 39 * x**2 * c - 8 * x**2 * c2 - x**2 * c3
        - 14 * x * c2 - 9 * c + x**5 - 12 * x**4 - 58 * x**3 - 16 * x**2 + 19 * x + 4
    )


def Z(x, t):
    return LOG_PHI * GH(x, t) - GH(PHI, t) * L(x)


def Ztilde(x, t):
    """Z(x, t) / cos(t), regular at t = pi/2."""
    return LOG_PHI * P(x, t) - P(PHI, t) * L(x)


_ZT_RATIONAL = {
    1: None,
    2: (320.0, -140.0, 16.0, -25.0, 7 / 3),
    3: (135.0, 105.0, 9.0, -25.0, 13 / 7),
    4: (8704.0, 21896.0, 64.0, -289.0, 21 / 13),
}


def Ztilde_closed(k: int, t):
    """The displayed closed forms of Ztilde(k, t) for k = 1, 2, 3, 4."""
    c2 = np.cos(t) ** 2
    phi_part = SQRT5 * (4 * c2 - 3) / (4 * c2 - 5) ** 2
    if k == 1:
        return LOG_PHI / (c2 - 1) - math.log(3) * phi_part
    a, b, s, u, ratio = _ZT_RATIONAL[k]
    return LOG_PHI * (a * c2 + b) / (s * c2 + u) ** 2 - math.log(ratio) * phi_part


def phi_map(x):
    """Phi(x) = (x + 1) / x."""
    return 1 + 1 / x


def psi_map(x):
    """Psi(x) = (2x + 1) / x."""
    return 2 + 1 / x


def phi_psi_map(x):
    return (3 * x + 1) / (2 * x + 1)


def K(t):
    return P(PSI, t) + P(PSI - 1, t)


def K_closed(t):
    c2 = np.cos(t) ** 2
    num = 7 * math.sqrt(2) * (63 * c2 - 54 * c2**2 + 16 * c2**3 - 24)
    return num / (8 * c2**2 - 25 * c2 + 18) ** 2


def U(x, t, sgh_psi, sl_psi):
    """L(x) (S_G + S_H)(psi, t) - S_L(psi) (G + H)(x, t).

    ``sgh_psi`` is S_G(psi, t) + S_H(psi, t) (broadcastable against t) and
    ``sl_psi`` is S_L(psi); both come from the cycle sums of the word [2, 2].
    """
    return L(x) * sgh_psi - sl_psi * GH(x, t)


def Utilde(x, t):
    """U(x, t) / (2 cos t) = L(x) K(t) - log(psi) P(x, t)."""
    return L(x) * K(t) - LOG_PSI * P(x, t)


def Vfun(x, t):
    return Utilde(x, t) + Utilde(phi_map(x), t) + Utilde(psi_map(x), t) + Utilde(phi_psi_map(x), t)


# -- named expressions from the inequality checks ----------------------------


def a2_lhs(t):
    return 2 * LOG_PHI / (np.cos(t) ** 2 - 1)


def a2_rhs(t):
    return math.log(3) * P(PHI, t)


def a3_gap(x, t):
    """L(phi) R(x, t) - P(phi, t) / (x^4 + x^2 + 1)."""
    return LOG_PHI * R(x, t) - P(PHI, t) / (x**4 + x**2 + 1)


def a3_LR(x, t):
    return LOG_PHI * R(x, t)


def a3_Pq(x, t):
    return P(PHI, t) / (x**4 + x**2 + 1)


def a4_envelope(t):
    return Ztilde(1.0, t) + Ztilde(2.0, t) + np.minimum(Ztilde(3.0, t), Ztilde(4.0, t))


def a5_a(x, t):
    return (LOG_PHI * P(x, t) - P(PHI, t) * L(x)) / (PHI - x)


def a5_b(x, t):
    y = 1 / (x - 1)
    return (P(PHI, t) * L(y) - LOG_PHI * P(y, t)) / (PHI - x)


def a5_a2_lhs(x, t):
    c2 = np.cos(2 * t)
    return LOG_PHI * x * x * p_poly(x, t) / (1 + x**4 - 2 * x * x * c2) ** 4


def a5_a2_rhs(x, t):
    c2 = np.cos(2 * t)
    return -SQRT5 * (2 * c2 + 1) / ((2 * c2 - 3) ** 3 * (1 + x * x + x**4))


def a5_plot_a(x):
    """Lower envelope at t = pi/3 of the (a) function, divided by phi - x."""
    s = SQRT5 / 8 * np.log((x * x + x + 1) / (x * x - x + 1))
    s = s + 2 * x * LOG_PHI * (x * x + 1) * (x**4 - 5 * x * x + 1) / (x**4 + x * x + 1) ** 2
    return s / (PHI - x)


def a5_plot_b(x):
    """Upper envelope at t = pi/2 of the (b) function, divided by phi - x."""
    s = -3 * (47 + 21 * SQRT5) * np.log((x * x - x + 1) / (x * x - 3 * x + 3)) / (525 + 235 * SQRT5)
    s = s - 2 * (x**5 - 5 * x**4 + 4 * x**3 + 8 * x**2 - 12 * x + 4) * LOG_PHI / (x * x - 2 * x + 2) ** 3
    return s / (PHI - x)


def a6_ratio(x):
    return x * x * (2 + 2 * x - 3 * x * x) / (1 + 2 * x + x * x + 3 * x**4)


def a6_b_lhs(y):
    return -1.05 / y


def a6_b_rhs(y, t):
    lp = LOG_PSI
    c2, c4 = np.cos(2 * t), np.cos(4 * t)
    return (
        -lp - 6.3 * c2
        + y * (-12 * lp * c2 + 9 * lp + 12.6 * c2**2 + 3.15)
        + y**2 * (-4 * lp * c2 - 2 * lp * c4 + 20 * lp - 8.4 * c2**3 - 12.6 * c2)
        + y**3 * (4 * lp * c2 + 2 * lp * c4 - 20 * lp + 12.6 * c2**2 + 3.15)
        + y**4 * (12 * lp * c2 - 9 * lp - 6.3 * c2)
        + y**5 * (lp + 1.05)
    )


def a6_c_lhs(w):
    return (LOG_PSI - 0.7) / w


def a6_c_rhs(w, t):
    lp = LOG_PSI
    c2, c4 = np.cos(2 * t), np.cos(4 * t)
    return (
        -12 * lp * c2 + 9 * lp - 4.2 * c2
        + w * (-4 * lp * c2 - 2 * lp * c4 + 20 * lp + 8.4 * c2**2 + 2.1)
        + w**2 * (4 * lp * c2 + 2 * lp * c4 - 20 * lp - 5.6 * c2**3 - 8.4 * c2)
        + w**3 * (12 * lp * c2 - 9 * lp + 8.4 * c2**2 + 2.1)
        + w**4 * (lp - 4.2 * c2)
        + 0.7 * w**5
    )


def a6_bound_a(x, t):
    return a6_ratio(x) * K(t)


def a6_bound_b(x, t):
    return LOG_PSI * x * x * dP_dx(x, t)


def a6_bound_c(x, t):
    return LOG_PSI * dP_dx(phi_map(x), t)


def a7_ratio(x):
    return (9 + 16 * x - 17 * x * x) * x * x / ((1 - x + x * x) * (3 + 15 * x + 19 * x * x))


def a7_bound_a(x, t):
    return a7_ratio(x) * K(t)


def a7_bound_d(x, t):
    return LOG_PSI * dP_dx(psi_map(x), t)


def a7_bound_e(x, t):
    return LOG_PSI * x * x / (2 * x + 1) ** 2 * dP_dx(phi_psi_map(x), t)


def U_lemma_i(x, t):
    return Utilde(x, t) + Utilde(phi_map(x), t)


def Z_lemma_iv(x, t):
    return Ztilde(x, t) + Ztilde(1 / (x - 1), t)


KERNELS = {
    "F": F, "G": G, "H": H, "P": P, "R": R, "M": M, "N": N, "Z": Z, "Ztilde": Ztilde,
    "Utilde": Utilde, "V": Vfun, "p": p_poly, "q": q_poly, "dP_dx": dP_dx, "dP_dt": dP_dt,
}
