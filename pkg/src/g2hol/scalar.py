"""Exact arithmetic in the quadratic field Q(sqrt 2).

A :class:`Scalar` is ``rat + irr * sqrt(2)`` with both coefficients held as
reduced ``gmpy2.mpq`` rationals.  Nothing here ever touches floating point
except :meth:`Scalar.to_float`, which exists for display.

Text syntax (used by the structure-equation files and the JSON output)::

    3/4            rational
    -1/2 r2        rational multiple of sqrt 2
    3/4 - 1/2 r2   general element

``r2`` on its own denotes sqrt 2.  :func:`parse_scalar` accepts all of these
and ``str()`` always prints the canonical form, so ``parse -> str`` is the
identity on canonical strings and ``str -> parse`` on values.
"""

from __future__ import annotations

import re
from fractions import Fraction

from gmpy2 import mpq

__all__ = ["Scalar", "ZERO", "ONE", "SQRT2", "as_scalar", "parse_scalar"]

_Q0 = mpq(0)


class Scalar:
    """Element ``rat + irr*sqrt(2)`` of Q(sqrt 2).  Treat instances as immutable."""

    __slots__ = ("rat", "irr")

    def __init__(self, rat=0, irr=0):
        self.rat = rat if type(rat) is type(_Q0) else _to_mpq(rat)
        self.irr = irr if type(irr) is type(_Q0) else _to_mpq(irr)

    @classmethod
    def _raw(cls, rat, irr) -> "Scalar":
        s = object.__new__(cls)
        s.rat = rat
        s.irr = irr
        return s

    # -- predicates --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.rat and not self.irr

    def is_rational(self) -> bool:
        return not self.irr

    def __bool__(self) -> bool:
        return bool(self.rat) or bool(self.irr)

    # -- field operations --------------------------------------------------
    def __add__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return Scalar._raw(self.rat + other.rat, self.irr + other.irr)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return Scalar._raw(self.rat - other.rat, self.irr - other.irr)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        a, b, c, d = self.rat, self.irr, other.rat, other.irr
        if not b and not d:
            return Scalar._raw(a * c, _Q0)
        return Scalar._raw(a * c + 2 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar._raw(-self.rat, -self.irr)

    def __pos__(self):
        return self

    def conjugate(self) -> "Scalar":
        """Galois conjugate ``rat - irr*sqrt(2)``."""
        return Scalar._raw(self.rat, -self.irr)

    def norm(self):
        """Field norm ``rat**2 - 2*irr**2`` (an mpq)."""
        return self.rat * self.rat - 2 * self.irr * self.irr

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(sqrt 2)")
        if not self.irr:
            return Scalar._raw(1 / self.rat, _Q0)
        n = self.norm()
        return Scalar._raw(self.rat / n, -self.irr / n)

    def __truediv__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- order (real embedding with sqrt 2 > 0) ----------------------------
    def sign(self) -> int:
        a, b = self.rat, self.irr
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: the larger of a**2 and 2*b**2 wins
        lhs, rhs = a * a, 2 * b * b
        return sa if lhs > rhs else sb

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- identity ----------------------------------------------------------
    def __eq__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return False
        return self.rat == other.rat and self.irr == other.irr

    def __hash__(self):
        if not self.irr:
            return hash(Fraction(int(self.rat.numerator), int(self.rat.denominator)))
        return hash((int(self.rat.numerator), int(self.rat.denominator),
                     int(self.irr.numerator), int(self.irr.denominator)))

    def to_float(self) -> float:
        """Approximate value; display only."""
        return float(self.rat) + float(self.irr) * 2 ** 0.5

    def __float__(self):
        return self.to_float()

    def __repr__(self):
        return f"Scalar('{self}')"

    def __str__(self):
        if not self.irr:
            return str(self.rat)
        irr = f"{abs(self.irr)} r2" if abs(self.irr) != 1 else "r2"
        if not self.rat:
            return irr if self.irr > 0 else f"-{irr}"
        op = "+" if self.irr > 0 else "-"
        return f"{self.rat} {op} {irr}"


def _to_mpq(x):
    if isinstance(x, bool):
        return mpq(int(x))
    if isinstance(x, (int, Fraction)):
        return mpq(x)
    if type(x) is type(_Q0):
        return x
    if isinstance(x, str):
        return mpq(x)
    try:
        import gmpy2

        if isinstance(x, type(gmpy2.mpz(0))):
            return mpq(x)
    except ImportError:  # pragma: no cover
        pass
    raise TypeError(f"cannot use {type(x).__name__} as a rational coefficient")


def _coerce(x):
    if type(x) is Scalar:
        return x
    if isinstance(x, (int, Fraction)) or type(x) is type(_Q0):
        return Scalar._raw(mpq(x), _Q0)
    return NotImplemented


def as_scalar(x) -> Scalar:
    """Coerce ints, Fractions, mpq and scalar text into a :class:`Scalar`."""
    if type(x) is Scalar:
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    y = _coerce(x)
    if y is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to Scalar")
    return y


ZERO = Scalar._raw(mpq(0), mpq(0))
ONE = Scalar._raw(mpq(1), mpq(0))
SQRT2 = Scalar._raw(mpq(0), mpq(1))

_RAT = r"\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"""^\s*
    (?P<s1>[+-])?\s*
    (?:
        (?P<a>{_RAT})\s*(?P<a_r2>\*?\s*r2)?      # leading rational, maybe times r2
        |
        (?P<lone_r2>r2)                          # bare r2
    )
    (?:\s*(?P<s2>[+-])\s*
        (?:(?P<b>{_RAT})\s*\*?\s*)?r2             # optional second term, must carry r2
    )?
    \s*$""",
    re.VERBOSE,
)


def parse_scalar(text: str) -> Scalar:
    """Parse the scalar text syntax; raises ``ValueError`` on malformed input."""
    m = _SCALAR_RE.match(text)
    if m is None:
        raise ValueError(f"malformed scalar: {text!r}")
    sign = -1 if m.group("s1") == "-" else 1
    if m.group("lone_r2"):
        first = Scalar(0, sign)
    else:
        q = mpq(m.group("a")) * sign
        first = Scalar(0, q) if m.group("a_r2") else Scalar(q, 0)
    if m.group("s2") is None:
        return first
    if first.irr:
        raise ValueError(f"malformed scalar (two sqrt 2 terms): {text!r}")
    coef = mpq(m.group("b")) if m.group("b") else mpq(1)
    if m.group("s2") == "-":
        coef = -coef
    return Scalar._raw(first.rat, coef)
