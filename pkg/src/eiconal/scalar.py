"""Exact arithmetic in the real field Q(sqrt2, sqrt3).

Every element is stored as a + b*sqrt2 + c*sqrt3 + d*sqrt6 with rational
components.  The basis (1, sqrt2, sqrt3, sqrt6) is linearly independent over
Q, so the representation is unique, equality is componentwise, and the only
element equal to zero is the one with all four components zero.  This makes
"is this polynomial identically zero?" an exact, trivial test downstream.

Multiplication follows sqrt2*sqrt2 = 2, sqrt3*sqrt3 = 3, sqrt2*sqrt3 = sqrt6.
All four components are always stored (even when zero), so hashing and
equality are structural.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Optional, Union

RationalLike = Union[int, Fraction]

_ZERO = Fraction(0)


def _frac(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class Scalar:
    """Immutable element a + b*sqrt2 + c*sqrt3 + d*sqrt6 of Q(sqrt2, sqrt3)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(
        self,
        a: RationalLike = 0,
        b: RationalLike = 0,
        c: RationalLike = 0,
        d: RationalLike = 0,
    ) -> None:
        self.a = _frac(a)
        self.b = _frac(b)
        self.c = _frac(c)
        self.d = _frac(d)

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rational(cls, num: int, den: int = 1) -> Scalar:
        return cls(Fraction(num, den))

    @classmethod
    def coerce(cls, x: Union[Scalar, RationalLike]) -> Scalar:
        if isinstance(x, Scalar):
            return x
        return cls(_frac(x))

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0 and self.d == 0

    def is_rational(self) -> bool:
        return self.b == 0 and self.c == 0 and self.d == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.a

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: Union[Scalar, RationalLike]) -> Scalar:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        o = Scalar.coerce(other)
        return Scalar(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other: Union[Scalar, RationalLike]) -> Scalar:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other: Union[Scalar, RationalLike]) -> Scalar:
        return (-self) + other

    def __mul__(self, other: Union[Scalar, RationalLike]) -> Scalar:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        o = Scalar.coerce(other)
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        return Scalar(
            a1 * a2 + 2 * b1 * b2 + 3 * c1 * c2 + 6 * d1 * d2,
            a1 * b2 + b1 * a2 + 3 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def conj_sqrt2(self) -> Scalar:
        """Galois conjugate sending sqrt2 -> -sqrt2 (and hence sqrt6 -> -sqrt6)."""
        return Scalar(self.a, -self.b, self.c, -self.d)

    def conj_sqrt3(self) -> Scalar:
        """Galois conjugate sending sqrt3 -> -sqrt3 (and hence sqrt6 -> -sqrt6)."""
        return Scalar(self.a, self.b, -self.c, -self.d)

    def inverse(self) -> Scalar:
        """Exact multiplicative inverse; raises ZeroDivisionError on zero."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(sqrt2, sqrt3)")
        # Rationalize in two stages: first kill sqrt2, then sqrt3.
        t = self * self.conj_sqrt2()          # lands in Q(sqrt3)
        norm = (t * t.conj_sqrt3()).a         # rational field norm piece
        factor = Fraction(1) / norm
        return self.conj_sqrt2() * t.conj_sqrt3() * Scalar(factor)

    def __truediv__(self, other: Union[Scalar, RationalLike]) -> Scalar:
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other: Union[Scalar, RationalLike]) -> Scalar:
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, exp: int) -> Scalar:
        if not isinstance(exp, int):
            return NotImplemented
        if exp < 0:
            return self.inverse() ** (-exp)
        out = ONE
        base = self
        n = exp
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparisons / hashing -----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar(_frac(other))
        if not isinstance(other, Scalar):
            return NotImplemented
        return (
            self.a == other.a
            and self.b == other.b
            and self.c == other.c
            and self.d == other.d
        )

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.c, self.d))

    # -- numeric bridge ------------------------------------------------------

    def _approx(self, prec_bits: int) -> Fraction:
        shift = 1 << prec_bits
        s2 = Fraction(isqrt(2 << (2 * prec_bits)), shift)
        s3 = Fraction(isqrt(3 << (2 * prec_bits)), shift)
        s6 = Fraction(isqrt(6 << (2 * prec_bits)), shift)
        return self.a + self.b * s2 + self.c * s3 + self.d * s6

    def to_float(self) -> float:
        """Nearest double, correct to well within 4 ulp.

        Uses rational surd approximations whose precision is doubled until two
        successive float conversions agree, so cancellation between large
        components cannot poison the result.
        """
        prec = 128
        prev: Optional[float] = None
        while True:
            cur = float(self._approx(prec))
            if cur == prev:
                return cur
            prev = cur
            prec *= 2

    def __float__(self) -> float:
        return self.to_float()

    # -- serialization -------------------------------------------------------

    def to_json(self) -> list[int]:
        """Canonical form: [a_num, a_den, b_num, b_den, c_num, c_den, d_num, d_den]."""
        out: list[int] = []
        for part in (self.a, self.b, self.c, self.d):
            out.append(part.numerator)
            out.append(part.denominator)
        return out

    @classmethod
    def from_json(cls, data: list) -> Scalar:
        if not isinstance(data, (list, tuple)) or len(data) != 8:
            raise ValueError("scalar JSON must be an array of 8 integers")
        if not all(isinstance(v, int) for v in data):
            raise ValueError("scalar JSON entries must be integers")
        return cls(
            Fraction(data[0], data[1]),
            Fraction(data[2], data[3]),
            Fraction(data[4], data[5]),
            Fraction(data[6], data[7]),
        )

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        parts = []
        for coef, tag in (
            (self.a, ""),
            (self.b, "sqrt2"),
            (self.c, "sqrt3"),
            (self.d, "sqrt6"),
        ):
            if coef == 0:
                continue
            if tag == "":
                parts.append((coef, str(abs(coef))))
            elif abs(coef) == 1:
                parts.append((coef, tag))
            else:
                parts.append((coef, f"{abs(coef)}*{tag}"))
        if not parts:
            return "0"
        out = ""
        for i, (coef, text) in enumerate(parts):
            if i == 0:
                out = ("-" if coef < 0 else "") + text
            else:
                out += (" - " if coef < 0 else " + ") + text
        return out

    def __repr__(self) -> str:
        return f"Scalar({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"


ZERO = Scalar()
ONE = Scalar(1)
SQRT2 = Scalar(0, 1)
SQRT3 = Scalar(0, 0, 1)
SQRT6 = Scalar(0, 0, 0, 1)
HALF = Scalar(Fraction(1, 2))


# -- square roots inside the field -------------------------------------------
#
# Used by the exact symmetric-family splitter to normalize eigenvectors.  An
# element of Q(sqrt2, sqrt3) has a square root in the field only sometimes;
# the search below is complete: it returns a root whenever one exists.

def _sqrt_fraction(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    rn = isqrt(q.numerator)
    rd = isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _sqrt_q3(u: Fraction, v: Fraction) -> Optional[tuple[Fraction, Fraction]]:
    """Square root of u + v*sqrt3 inside Q(sqrt3), as a (p, q) pair, or None."""
    if v == 0:
        r = _sqrt_fraction(u)
        if r is not None:
            return (r, _ZERO)
        r = _sqrt_fraction(u / 3)
        if r is not None:
            return (_ZERO, r)
        return None
    disc = _sqrt_fraction(u * u - 3 * v * v)
    if disc is None:
        return None
    for delta in (disc, -disc):
        p_sq = (u + delta) / 2
        p = _sqrt_fraction(p_sq)
        if p is not None and p != 0:
            return (p, v / (2 * p))
    return None


def _k_mul(x: tuple[Fraction, Fraction], y: tuple[Fraction, Fraction]):
    return (x[0] * y[0] + 3 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def field_sqrt(s: Scalar) -> Optional[Scalar]:
    """A square root of s inside Q(sqrt2, sqrt3), or None if no root exists.

    When a root exists the positive one is returned.  Writes s = alpha +
    beta*sqrt2 with alpha, beta in Q(sqrt3) and solves (p + q*sqrt2)^2 = s by
    reducing to square roots in Q(sqrt3) and then in Q.
    """
    if s.is_zero():
        return ZERO
    alpha = (s.a, s.c)
    beta = (s.b, s.d)

    candidates: list[Scalar] = []
    if beta == (_ZERO, _ZERO):
        root = _sqrt_q3(*alpha)
        if root is not None:
            candidates.append(Scalar(root[0], 0, root[1], 0))
        half_alpha = (alpha[0] / 2, alpha[1] / 2)
        root = _sqrt_q3(*half_alpha)
        if root is not None:
            candidates.append(Scalar(0, root[0], 0, root[1]))
    else:
        a2 = _k_mul(alpha, alpha)
        b2 = _k_mul(beta, beta)
        norm = (a2[0] - 2 * b2[0], a2[1] - 2 * b2[1])
        delta = _sqrt_q3(*norm)
        if delta is not None:
            for sign in (1, -1):
                du, dv = delta[0] * sign, delta[1] * sign
                p_sq = ((alpha[0] + du) / 2, (alpha[1] + dv) / 2)
                p = _sqrt_q3(*p_sq)
                if p is None or p == (_ZERO, _ZERO):
                    continue
                p_scalar = Scalar(p[0], 0, p[1], 0)
                q_scalar = Scalar(beta[0], 0, beta[1], 0) * (
                    p_scalar * Scalar(2)
                ).inverse()
                candidates.append(
                    p_scalar + q_scalar * SQRT2
                )
    for y in candidates:
        if (y * y) == s:
            return y if y.to_float() > 0 else -y
    return None
