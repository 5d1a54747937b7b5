"""Exact arithmetic in real quadratic fields and continued fractions of surds.

A :class:`QuadSurd` stores ``(p + q*sqrt(d)) / r`` with arbitrary-precision
integer components.  Rational elements of the field (``q == 0``) are allowed as
intermediate results of arithmetic; the public constructor :func:`normalize`
only refuses a radicand that is a perfect square.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from itertools import chain, cycle, islice
from typing import Iterator, Sequence


from .errors import (
    DegenerateImage,
    InternalOverflow,
    ResourceLimit,
    SquareRadicand,
    ZeroDenominator,
)

SQUAREFREE_LIMIT = 10**6
SQUARE_TRIAL = 2000
CF_MAX_STEPS = 10**6


def squarefree_split(d: int, limit: int = SQUAREFREE_LIMIT) -> tuple[int, int]:
    """Return ``(k, s)`` with ``d == k*k*s``.

    Square factors of primes up to min(limit, SQUARE_TRIAL) are removed, as is
    a square cofactor.  ``s`` is squarefree whenever the trial division
    exhausts it; otherwise it may keep the square of a large prime.  Equality
    never depends on this, since it is decided on the minimal polynomial.
    """
    if d <= 0:
        raise ValueError(f"radicand must be positive, got {d}")
    k, s = 1, d
    f = 2
    bound = min(limit, SQUARE_TRIAL)
    while f <= bound and f * f <= s:
        while s % (f * f) == 0:
            s //= f * f
            k *= f
        f += 1 if f == 2 else 2
    r = math.isqrt(s)
    if r > 1 and r * r == s:
        k, s = k * r, 1
    return k, s


def _sign_single(p: int, q: int, d: int) -> int:
    """Sign of p + q*sqrt(d) for d > 0."""
    sp = (p > 0) - (p < 0)
    sq = (q > 0) - (q < 0)
    if sq == 0:
        return sp
    if sp == 0 or sp == sq:
        return sq
    diff = p * p - q * q * d
    if diff == 0:
        return 0
    return sp if diff > 0 else sq


def _sign_two(a: int, b: int, d1: int, c: int, d2: int) -> int:
    """Sign of a + b*sqrt(d1) + c*sqrt(d2)."""
    # sign of the irrational part X = b*sqrt(d1) + c*sqrt(d2)
    sb = (b > 0) - (b < 0)
    sc = (c > 0) - (c < 0)
    if sb == 0 or sc == 0 or sb == sc:
        sx = sb or sc
    else:
        m = b * b * d1 - c * c * d2
        sx = 0 if m == 0 else (sb if m > 0 else sc)
    sa = (a > 0) - (a < 0)
    if sx == 0:
        return sa
    if sa == 0 or sa == sx:
        return sx
    # compare a^2 with X^2 = b^2 d1 + c^2 d2 + 2bc sqrt(d1 d2)
    s = _sign_single(a * a - b * b * d1 - c * c * d2, -2 * b * c, d1 * d2)
    if s == 0:
        return 0
    return sa if s > 0 else sx


@total_ordering
@dataclass(frozen=True)
class QuadSurd:
    """The number (p + q*sqrt(d)) / r.  Build instances with :func:`normalize`."""

    p: int
    q: int
    r: int
    d: int

    # -- construction helpers -------------------------------------------------
    @classmethod
    def _make(cls, p: int, q: int, r: int, d: int) -> "QuadSurd":
        if r == 0:
            raise ZeroDenominator("denominator of a quadratic surd is zero")
        if r < 0:
            p, q, r = -p, -q, -r
        g = math.gcd(math.gcd(p, q), r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        return cls(p, q, r, d)

    def _coerce(self, other) -> "QuadSurd":
        if isinstance(other, QuadSurd):
            if other.d == self.d or other.q == 0:
                return QuadSurd(other.p, other.q, other.r, self.d)
            # same field iff d1*d2 is a square; then sqrt(d2) = g*sqrt(d1)/d1 with g = isqrt(d1*d2)
            g = math.isqrt(self.d * other.d)
            if g * g != self.d * other.d:
                raise ValueError(f"surds live in different fields: sqrt({self.d}) vs sqrt({other.d})")
            return QuadSurd._make(other.p * self.d, other.q * g, other.r * self.d, self.d)
        if isinstance(other, int):
            return QuadSurd(other, 0, 1, self.d)
        if isinstance(other, Fraction):
            return QuadSurd._make(other.numerator, 0, other.denominator, self.d)
        raise TypeError(f"cannot combine QuadSurd with {type(other).__name__}")

    # -- field structure ------------------------------------------------------
    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def conjugate(self) -> "QuadSurd":
        return QuadSurd(self.p, -self.q, self.r, self.d)

    def norm(self) -> Fraction:
        return Fraction(self.p * self.p - self.q * self.q * self.d, self.r * self.r)

    def trace(self) -> Fraction:
        return Fraction(2 * self.p, self.r)

    def __neg__(self) -> "QuadSurd":
        return QuadSurd(-self.p, -self.q, self.r, self.d)

    def __add__(self, other) -> "QuadSurd":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return QuadSurd._make(self.p * o.r + o.p * self.r, self.q * o.r + o.q * self.r, self.r * o.r, self.d)

    __radd__ = __add__

    def __sub__(self, other) -> "QuadSurd":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "QuadSurd":
        return (-self) + other

    def __mul__(self, other) -> "QuadSurd":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return QuadSurd._make(
            self.p * o.p + self.q * o.q * self.d,
            self.p * o.q + self.q * o.p,
            self.r * o.r,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadSurd":
        n = self.p * self.p - self.q * self.q * self.d
        if n == 0:
            raise ZeroDenominator("inverse of zero")
        # r / (p + q sqrt d) = r (p - q sqrt d) / n
        return QuadSurd._make(self.r * self.p, -self.r * self.q, n, self.d)

    def __truediv__(self, other) -> "QuadSurd":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "QuadSurd":
        return self._coerce(other) * self.inverse()

    # -- order ----------------------------------------------------------------
    def sign(self) -> int:
        return _sign_single(self.p, self.q, self.d)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.q == 0 and self.r == 1 and self.p == other
        if not isinstance(other, QuadSurd):
            return NotImplemented
        if self.q == 0 and other.q == 0:
            return Fraction(self.p, self.r) == Fraction(other.p, other.r)
        if self.q == 0 or other.q == 0:
            return False
        return self.min_poly_key() == other.min_poly_key()

    def __hash__(self) -> int:
        if self.q == 0:
            return hash(Fraction(self.p, self.r))
        return hash(self.min_poly_key())

    def min_poly_key(self) -> tuple[int, int, int, int]:
        """(A, B, C, s): primitive A x^2 + B x + C, A > 0, with x = (-B + s sqrt(disc)) / 2A."""
        a, b, c = self.r * self.r, -2 * self.p * self.r, self.p * self.p - self.q * self.q * self.d
        g = math.gcd(math.gcd(a, b), c)
        return a // g, b // g, c // g, (1 if self.q > 0 else -1)

    def __lt__(self, other) -> bool:
        if isinstance(other, int):
            other = QuadSurd(other, 0, 1, self.d)
        if not isinstance(other, QuadSurd):
            return NotImplemented
        return compare(self, other) < 0

    def floor(self) -> int:
        s = math.isqrt(self.q * self.q * self.d)
        if self.q == 0:
            return self.p // self.r
        # q*sqrt(d) lies strictly between consecutive integers
        n = self.p + s if self.q > 0 else self.p - s - 1
        return n // self.r

    def __floor__(self) -> int:
        return self.floor()

    # -- numeric views --------------------------------------------------------
    def to_fraction(self, bits: int = 64) -> Fraction:
        """Rational approximation with relative error below ``2**-bits``."""
        scale = 2 * max(abs(self.p), abs(self.q), self.r, self.d).bit_length() + bits + 8
        root = math.isqrt(self.q * self.q * self.d << (2 * scale))
        num = (self.p << scale) + (root if self.q >= 0 else -root)
        return Fraction(num, self.r << scale)

    def __float__(self) -> float:
        return float(self.to_fraction())

    def to_mpf(self, dps: int = 50):
        import mpmath

        with mpmath.workdps(dps + 10):
            val = (mpmath.mpf(self.p) + mpmath.mpf(self.q) * mpmath.sqrt(self.d)) / self.r
        return +val

    def log(self) -> float:
        """Natural log of a positive surd, accurate even for huge components."""
        if self.sign() <= 0:
            raise ValueError("log of a non-positive surd")
        fr = self.to_fraction()
        return math.log(fr.numerator) - math.log(fr.denominator)

    def __repr__(self) -> str:
        return f"QuadSurd(({self.p}{self.q:+d}*sqrt({self.d}))/{self.r})"

    def __str__(self) -> str:
        return format_surd(self)

    def as_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "r": self.r, "d": self.d}


def compare(u: QuadSurd, v: QuadSurd) -> int:
    """Exact three-way comparison, also across different radicands."""
    # (u - v) * r_u * r_v = (p_u r_v - p_v r_u) + q_u r_v sqrt(d_u) - q_v r_u sqrt(d_v)
    a = u.p * v.r - v.p * u.r
    if u.d == v.d:
        return _sign_single(a, u.q * v.r - v.q * u.r, u.d)
    return _sign_two(a, u.q * v.r, u.d, -v.q * u.r, v.d)


def normalize(p: int, q: int, r: int, d: int, *, limit: int = SQUAREFREE_LIMIT) -> QuadSurd:
    """Reduced form of (p + q*sqrt(d))/r: small square factors of d pulled out, r > 0, gcd(p, q, r) = 1."""
    if r == 0:
        raise ZeroDenominator("denominator r must be nonzero")
    if d <= 0:
        raise ValueError(f"radicand must be positive, got {d}")
    if math.isqrt(d) ** 2 == d:
        raise SquareRadicand(f"sqrt({d}) is an integer; the value is rational")
    k, s = squarefree_split(d, limit)
    return QuadSurd._make(p, q * k, r, s)


def galois_conjugate(w: QuadSurd) -> QuadSurd:
    return w.conjugate()


def mobius_apply(m, w: QuadSurd) -> QuadSurd:
    """Image (a w + b)/(c w + d) of ``w`` under an integer 2x2 matrix ``m``.

    ``m`` may be any object with integer attributes ``a, b, c, d``.
    """
    den = w * m.c + m.d
    if den.sign() == 0:
        raise DegenerateImage("c*w + d vanishes")
    img = (w * m.a + m.b) / den
    if img.is_rational and not w.is_rational:
        raise DegenerateImage(f"image of irrational {w!r} is rational; matrix must be singular")
    return img


# ---------------------------------------------------------------------------
# Continued fractions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CFExpansion:
    """Eventually periodic expansion [preperiod..., (period...) repeated]."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(int(a) for a in self.preperiod))
        object.__setattr__(self, "period", tuple(int(a) for a in self.period))
        if not self.period:
            raise ValueError("a quadratic irrational has a nonempty period")
        if any(a < 1 for a in self.period) or any(a < 1 for a in self.preperiod[1:]):
            raise ValueError("partial quotients after the first must be positive")

    @classmethod
    def purely_periodic(cls, letters: Sequence[int]) -> "CFExpansion":
        return cls((), tuple(letters))

    def terms(self) -> Iterator[int]:
        return chain(self.preperiod, cycle(self.period))

    def value(self) -> QuadSurd:
        v = value_of_period(self.period)
        for a in reversed(self.preperiod):
            v = a + v.inverse()
        return v


def _floor_sqrt_ratio(P: int, N: int, Q: int, root: int) -> int:
    """floor((P + sqrt(N)) / Q) for non-square N, with root = isqrt(N)."""
    if Q > 0:
        return (P + root) // Q
    return -((P + root) // -Q) - 1


def cf_expand(w: QuadSurd, max_steps: int = CF_MAX_STEPS) -> CFExpansion:
    """Exact continued fraction of an irrational surd, with minimal period."""
    if w.q == 0:
        raise ValueError("cf_expand needs an irrational surd")
    s = 1 if w.q > 0 else -1
    P, Q, N = s * w.p, s * w.r, w.q * w.q * w.d
    if (N - P * P) % Q:
        P, N, Q = P * abs(Q), N * Q * Q, Q * abs(Q)
    root = math.isqrt(N)
    seen: dict[tuple[int, int], int] = {}
    terms: list[int] = []
    for _ in range(max_steps):
        state = (P, Q)
        if state in seen:
            j = seen[state]
            return CFExpansion(tuple(terms[:j]), tuple(terms[j:]))
        seen[state] = len(terms)
        a = _floor_sqrt_ratio(P, N, Q, root)
        terms.append(a)
        P = a * Q - P
        Q = (N - P * P) // Q
    raise InternalOverflow(f"no period detected within {max_steps} steps")


def value_of_period(word: Sequence[int]) -> QuadSurd:
    """The purely periodic value [a1; a2, ..., al, a1, ...] > 1 as an exact surd."""
    letters = tuple(word.letters if hasattr(word, "letters") else word)
    if not letters or any(a < 1 for a in letters):
        raise ValueError("period letters must be positive and nonempty")
    # product of [[a, 1], [1, 0]] gives convergent matrix [[p, p'], [q, q']]
    p, pp, q, qp = 1, 0, 0, 1
    for a in letters:
        p, pp = a * p + pp, p
        q, qp = a * q + qp, q
    # x = (p x + pp) / (q x + qp)  <=>  q x^2 + (qp - p) x - pp = 0
    b = qp - p
    disc = b * b + 4 * q * pp
    return normalize(-b, 1, 2 * q, disc)


def cf_compare(u: CFExpansion, v: CFExpansion) -> int:
    """Order of two expansions via the alternating first-difference rule.

    Returns -1, 0 or 1.  At the first differing index i (1-based) the value
    with the smaller (-1)**(i+1) * a_i is the smaller number.
    """
    horizon = max(len(u.preperiod), len(v.preperiod)) + math.lcm(len(u.period), len(v.period))
    for i, (a, b) in enumerate(islice(zip(u.terms(), v.terms()), horizon), start=1):
        if a != b:
            sa, sb = (a, b) if i % 2 else (-a, -b)
            return -1 if sa < sb else 1
    return 0


def format_surd(w: QuadSurd) -> str:
    return f"({w.p}{w.q:+d}*sqrt({w.d}))/{w.r}"


PHI = normalize(1, 1, 2, 5)
PSI = normalize(1, 1, 1, 2)
