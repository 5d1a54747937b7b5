"""Integer 2x2 matrices, fixed points of hyperbolic elements, and their forms."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import NotHyperbolic, OddWord
from .surd import QuadSurd, normalize
from .words import as_word


@dataclass(frozen=True)
class Mat2:
    a: int
    b: int
    c: int
    d: int

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __pow__(self, n: int) -> "Mat2":
        base = self if n >= 0 else self.inverse()
        out = IDENTITY
        n = abs(n)
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def inverse(self) -> "Mat2":
        det = self.det
        if det not in (1, -1):
            raise ValueError(f"matrix with det {det} has no integral inverse")
        return Mat2(self.d * det, -self.b * det, -self.c * det, self.a * det)

    def is_hyperbolic(self) -> bool:
        return self.det == 1 and abs(self.trace) > 2

    def __call__(self, z):
        """Fractional linear action on complex numbers or surds."""
        if isinstance(z, QuadSurd):
            from .surd import mobius_apply

            return mobius_apply(self, z)
        return (self.a * z + self.b) / (self.c * z + self.d)

    def tolist(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]


IDENTITY = Mat2(1, 0, 0, 1)
T = Mat2(1, 1, 0, 1)
V = Mat2(1, 0, 1, 1)
S = Mat2(0, -1, 1, 0)
PHI_MAT = Mat2(1, 1, 1, 0)
PSI_MAT = Mat2(2, 1, 1, 0)
S_TILDE = Mat2(0, 1, 1, 0)


@dataclass(frozen=True)
class IndefiniteForm:
    """Binary quadratic form a x^2 + b x y + c y^2."""

    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def __call__(self, x, y=1):
        return self.a * x * x + self.b * x * y + self.c * y * y

    def compose(self, m: Mat2) -> "IndefiniteForm":
        """The form (x, y) -> Q(m.a x + m.b y, m.c x + m.d y)."""
        a, b, c = self.a, self.b, self.c
        return IndefiniteForm(
            a * m.a * m.a + b * m.a * m.c + c * m.c * m.c,
            2 * a * m.a * m.b + b * (m.a * m.d + m.b * m.c) + 2 * c * m.c * m.d,
            a * m.b * m.b + b * m.b * m.d + c * m.d * m.d,
        )


class FixedPoints(NamedTuple):
    w: QuadSurd  # attracting
    w_tilde: QuadSurd  # repelling
    form: IndefiniteForm


def word_to_matrix(word) -> Mat2:
    """A = T^{a_1} V^{a_2} ... T^{a_{l-1}} V^{a_l} for an even-length word."""
    letters = as_word(word).letters
    if len(letters) % 2:
        raise OddWord(f"word of odd length {len(letters)}; apply even_form first")
    out = IDENTITY
    for k in range(0, len(letters), 2):
        out = out @ Mat2(1 + letters[k] * letters[k + 1], letters[k], letters[k + 1], 1)
    return out


def fixed_points(A: Mat2) -> FixedPoints:
    if not A.is_hyperbolic():
        raise NotHyperbolic(f"{A.tolist()} is not hyperbolic in SL(2,Z)")
    # fixed points solve c z^2 + (d - a) z - b = 0
    g = math.gcd(math.gcd(A.c, A.d - A.a), A.b)
    qa, qb, qc = A.c // g, (A.d - A.a) // g, -A.b // g
    disc = qb * qb - 4 * qa * qc
    r1 = normalize(-qb, 1, 2 * qa, disc)
    r2 = r1.conjugate()
    # attracting iff |A'(z)| = 1/(cz + d)^2 < 1, i.e. |cz + d| > 1
    lam = r1 * A.c + A.d
    attracting_first = (lam * lam - 1).sign() > 0
    w, wt = (r1, r2) if attracting_first else (r2, r1)
    # sign convention: sgn(a) = sgn(w - w_tilde)
    if (w - wt).sign() * qa < 0:
        qa, qb, qc = -qa, -qb, -qc
    return FixedPoints(w, wt, IndefiniteForm(qa, qb, qc))


def epsilon(A: Mat2) -> QuadSurd:
    """Largest eigenvalue (> 1) of a hyperbolic A, exactly."""
    if not A.is_hyperbolic():
        raise NotHyperbolic(f"{A.tolist()} is not hyperbolic in SL(2,Z)")
    t = abs(A.trace)
    return normalize(t, 1, 2, t * t - 4)


def epsilon_float(A: Mat2) -> float:
    return float(epsilon(A))


def log_epsilon(A: Mat2) -> float:
    return epsilon(A).log()
