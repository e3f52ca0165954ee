"""Exact scalars: rationals, the polynomial ring Q[q], and the two Euclidean rings.

Rationals are :class:`fractions.Fraction`.  Polynomials are :class:`Poly`, an
immutable dense coefficient tuple (index i holds the coefficient of q^i).

The rings ``ZZ`` and ``QQq`` carry everything the matrix code needs from a
Euclidean domain: division with remainder, extended gcd, unit normalization
and the Euclidean norm.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = [
    "Poly", "q", "poly_divrem", "poly_xgcd", "poly_eval",
    "format_rational", "parse_rational", "format_poly", "parse_poly",
    "Ring", "IntegerRing", "PolynomialRing", "ZZ", "QQq", "ring_from_name",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, (int, _RationalABC)):
        raise TypeError(f"not an exact rational: {x!r}")
    return Fraction(x)


class Poly:
    """Univariate polynomial in q with rational coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=()):
        c = [_frac(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Poly":
        # coeffs already Fractions without trailing zeros
        p = object.__new__(cls)
        p._c = coeffs
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def coerce(cls, x) -> "Poly":
        if isinstance(x, Poly):
            return x
        return cls((x,))

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self._c) - 1

    @property
    def lc(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._c == Poly.const(other)._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Poly", self._c))
        return self._hash

    def __neg__(self):
        return Poly._raw(tuple(-x for x in self._c))

    def __pos__(self):
        return self

    def __add__(self, other):
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for i, x in enumerate(b):
            c[i] += x
        while c and c[-1] == 0:
            c.pop()
        return Poly._raw(tuple(c))

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Poly):
            a, b = self._c, other._c
            if not a or not b:
                return Poly._raw(())
            c = [Fraction(0)] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        c[i + j] += x * y
            return Poly._raw(tuple(c))
        try:
            s = _frac(other)
        except TypeError:
            return NotImplemented
        if s == 0:
            return Poly._raw(())
        return Poly._raw(tuple(x * s for x in self._c))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = Poly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        return poly_divrem(self, Poly.coerce(other))

    def __floordiv__(self, other):
        return poly_divrem(self, Poly.coerce(other))[0]

    def __mod__(self, other):
        return poly_divrem(self, Poly.coerce(other))[1]

    def __call__(self, q0):
        return poly_eval(self, q0)

    def monic(self) -> "Poly":
        if not self._c:
            return self
        return self * (1 / self.lc)

    def __repr__(self):
        return f"Poly({str(self)!r})"

    def __str__(self):
        return format_poly(self)


q = Poly((0, 1))


def poly_divrem(dividend: Poly, divisor: Poly) -> tuple[Poly, Poly]:
    """Division with remainder in Q[q]: ``dividend = divisor*quot + rem``."""
    if divisor.is_zero():
        raise ZeroDivisionError("zero divisor")
    d = divisor._c
    dn = len(d) - 1
    inv = 1 / d[-1]
    r = list(dividend._c)
    if len(r) <= dn:
        return Poly._raw(()), dividend
    quot = [Fraction(0)] * (len(r) - dn)
    for k in range(len(r) - 1, dn - 1, -1):
        c = r[k]
        if c:
            f = c * inv
            quot[k - dn] = f
            for i in range(dn + 1):
                r[k - dn + i] -= f * d[i]
    del r[dn:]
    return Poly(quot), Poly(r)


def poly_xgcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(d, s, t)`` with ``s*f + t*g = d`` and d monic (or zero)."""
    r0, r1 = f, g
    s0, s1 = Poly.const(1), Poly()
    t0, t1 = Poly(), Poly.const(1)
    while r1:
        quot, rem = poly_divrem(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quot * s1
        t0, t1 = t1, t0 - quot * t1
    if not r0:
        return Poly(), Poly(), Poly()
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def poly_eval(f: Poly, q0) -> Fraction:
    q0 = _frac(q0)
    acc = Fraction(0)
    for c in reversed(f._c):
        acc = acc * q0 + c
    return acc


# -- text grammar -----------------------------------------------------------

def format_rational(x) -> str:
    x = _frac(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    if not re.fullmatch(r"-?\d+(/\d+)?", s):
        raise ValueError(f"malformed rational: {s!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator: {s!r}") from None


def _term(c: Fraction, k: int, leading: bool) -> str:
    if leading:
        sign, mag = "", c
    else:
        sign, mag = (" - " if c < 0 else " + "), abs(c)
    if k == 0:
        return sign + format_rational(mag)
    mono = "q" if k == 1 else f"q^{k}"
    if mag == 1:
        return sign + mono
    if mag == -1:
        return sign + "-" + mono
    if mag.denominator == 1:
        return f"{sign}{mag.numerator}*{mono}"
    return f"{sign}({format_rational(mag)})*{mono}"


def format_poly(p: Poly) -> str:
    if not p._c:
        return "0"
    parts = []
    for k in range(len(p._c) - 1, -1, -1):
        c = p._c[k]
        if c:
            parts.append(_term(c, k, leading=not parts))
    return "".join(parts)


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<coef>\(\s*-?\d+(?:/\d+)?\s*\)|\d+(?:/\d+)?)\s*(?P<star>\*\s*)?
        )?
        (?P<var>q(?:\s*\^\s*(?P<exp>\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_poly(s: str) -> Poly:
    """Parse the polynomial grammar emitted by :func:`format_poly`."""
    text = s.strip()
    if not text:
        raise ValueError("empty polynomial")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"malformed polynomial: {s!r}")
        sign, coef, var = m.group("sign"), m.group("coef"), m.group("var")
        if not first and sign is None:
            raise ValueError(f"malformed polynomial: {s!r}")
        if coef is None and var is None:
            raise ValueError(f"malformed polynomial: {s!r}")
        if m.group("star") and var is None:
            raise ValueError(f"malformed polynomial: {s!r}")
        if coef is not None and var is not None and not m.group("star"):
            raise ValueError(f"malformed polynomial: {s!r}")
        c = Fraction(1)
        if coef is not None:
            c = parse_rational(coef.strip("() "))
        if sign == "-":
            c = -c
        k = 0
        if var is not None:
            k = int(m.group("exp")) if m.group("exp") else 1
        coeffs[k] = coeffs.get(k, Fraction(0)) + c
        pos = m.end()
        first = False
    top = max(coeffs)
    return Poly([coeffs.get(i, 0) for i in range(top + 1)])


# -- rings ------------------------------------------------------------------

class Ring:
    """A Euclidean domain as seen by the matrix algorithms."""

    name: str
    zero: object
    one: object

    def __repr__(self):
        return f"<ring {self.name}>"


class IntegerRing(Ring):
    name = "Z"
    zero = 0
    one = 1

    def contains(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool)

    def convert(self, x) -> int:
        if self.contains(x):
            return x
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        if isinstance(x, Poly) and x.is_constant() and x.lc.denominator == 1:
            return x.lc.numerator
        raise TypeError(f"cannot convert {x!r} to an integer")

    def norm(self, a: int) -> int:
        return abs(a)

    def divmod(self, a: int, b: int):
        return divmod(a, b)

    def xgcd(self, a: int, b: int):
        r0, r1, s0, s1, t0, t1 = a, b, 1, 0, 0, 1
        while r1:
            k = r0 // r1
            r0, r1 = r1, r0 - k * r1
            s0, s1 = s1, s0 - k * s1
            t0, t1 = t1, t0 - k * t1
        if r0 < 0:
            r0, s0, t0 = -r0, -s0, -t0
        return r0, s0, t0

    def normal_unit(self, a: int) -> int:
        """Unit u such that u*a is the normal representative."""
        return -1 if a < 0 else 1

    def unit_inverse(self, u: int) -> int:
        return u

    def reduce(self, a: int, pivot: int) -> int:
        """Multiple of the pivot to subtract so that a lands in [0, pivot)."""
        return a // pivot

    def format(self, a: int) -> str:
        return str(a)

    def parse(self, s: str) -> int:
        s = s.strip()
        if not re.fullmatch(r"-?\d+", s):
            raise ValueError(f"malformed integer: {s!r}")
        return int(s)

    def evaluate(self, a: int, q0) -> int:
        return a


class PolynomialRing(Ring):
    name = "Q[q]"
    zero = Poly()
    one = Poly.const(1)

    def contains(self, x) -> bool:
        return isinstance(x, Poly)

    def convert(self, x) -> Poly:
        return Poly.coerce(x)

    def norm(self, a: Poly) -> int:
        return a.degree

    def divmod(self, a: Poly, b: Poly):
        return poly_divrem(a, b)

    def xgcd(self, a: Poly, b: Poly):
        return poly_xgcd(a, b)

    def normal_unit(self, a: Poly) -> Fraction:
        return 1 / a.lc if a else Fraction(1)

    def unit_inverse(self, u: Fraction) -> Fraction:
        return 1 / u

    def reduce(self, a: Poly, pivot: Poly) -> Poly:
        return poly_divrem(a, pivot)[0]

    def format(self, a: Poly) -> str:
        return format_poly(a)

    def parse(self, s: str) -> Poly:
        return parse_poly(s)

    def evaluate(self, a: Poly, q0) -> Poly:
        return Poly.const(poly_eval(a, q0))


ZZ = IntegerRing()
QQq = PolynomialRing()


def ring_from_name(name: str) -> Ring:
    if name == "Z":
        return ZZ
    if name == "Q[q]":
        return QQq
    raise ValueError(f"unknown ring {name!r}")
