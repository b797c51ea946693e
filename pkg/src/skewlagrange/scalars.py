"""Exact scalars: rationals, rational quaternions, and the commutative field Q.

Both element types implement the same division-ring contract, which is all the
polynomial and interpolation layers rely on:

* ring arithmetic (``+ - *``, ``inverse()``, ``conj()``), mixed with ints and
  ``Fraction`` on either side;
* ``zero()``, ``one()``, ``from_rational()``, ``from_coords()`` constructors and
  ``coords()``, ``left_matrix()``, ``right_matrix()`` for the regular
  representation over the center Q (``DIM`` coordinates);
* conjugacy data: ``is_central()``, ``is_conjugate()``, ``class_data()``,
  ``class_key()``, ``central_minpoly_coeffs()``, ``intertwiners()``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Protocol, Sequence

from .linalg import nullspace, rref

Rational = Fraction

_Scalar = (int, Fraction)


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class LiteralParseError(ValueError):
    """Malformed scalar or polynomial literal; ``column`` is 1-based."""

    def __init__(self, message: str, text: str, column: int) -> None:
        super().__init__(f"{message} at column {column}: {text!r}")
        self.text = text
        self.column = column


@dataclass(frozen=True)
class ConjugacyClassData:
    trace: Fraction
    norm: Fraction
    kappa: int

    @property
    def key(self) -> tuple[Fraction, Fraction]:
        return (self.trace, self.norm)


class DivisionRingElement(Protocol):
    DIM: int

    def inverse(self) -> "DivisionRingElement": ...
    def is_central(self) -> bool: ...
    def is_conjugate(self, other) -> bool: ...
    def class_key(self) -> tuple: ...
    def central_minpoly_coeffs(self) -> tuple[Fraction, ...]: ...
    def intertwiners(self, other) -> list: ...
    def coords(self) -> tuple[Fraction, ...]: ...


def _canonical_span(vectors: Sequence[Sequence[Fraction]], dim: int) -> list[tuple[Fraction, ...]]:
    """Deterministic basis of span(vectors).

    Row reduction runs on reversed coordinates (pivots taken from the last
    coordinate down) and each vector is then scaled so its first nonzero
    coordinate is 1. For the intertwiners of (i, j) this yields 1-k and i+j.
    """
    rows, _ = rref([list(reversed(v)) for v in vectors], dim)
    out = []
    for row in rows:
        v = list(reversed(row))
        lead = next(x for x in v if x)
        out.append(tuple(x / lead for x in v))
    out.sort(key=lambda v: [x == 0 for x in v], reverse=False)
    return out


def reduce_modulo_span(v: Sequence[Fraction], vectors: Sequence[Sequence[Fraction]], dim: int) -> tuple[Fraction, ...]:
    """Canonical representative of ``v`` modulo span(vectors).

    Uses the same reversed-coordinate pivots as ``_canonical_span``, so the
    representative has zeros in the highest pivot coordinates.
    """
    rows, pivots = rref([list(reversed(u)) for u in vectors], dim)
    w = list(reversed([Fraction(x) for x in v]))
    for row, p in zip(rows, pivots):
        if w[p]:
            f = w[p]
            w = [a - f * b for a, b in zip(w, row)]
    return tuple(reversed(w))


class Quaternion:
    """Rational quaternion ``re + im_i*i + im_j*j + im_k*k``; immutable."""

    __slots__ = ("re", "im_i", "im_j", "im_k")
    DIM = 4

    def __init__(self, re=0, im_i=0, im_j=0, im_k=0) -> None:
        self.re = as_rational(re)
        self.im_i = as_rational(im_i)
        self.im_j = as_rational(im_j)
        self.im_k = as_rational(im_k)

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, c: Fraction, d: Fraction) -> Quaternion:
        q = object.__new__(cls)
        q.re, q.im_i, q.im_j, q.im_k = a, b, c, d
        return q

    @classmethod
    def zero(cls) -> Quaternion:
        return _QZERO

    @classmethod
    def one(cls) -> Quaternion:
        return _QONE

    @classmethod
    def from_rational(cls, x) -> Quaternion:
        return cls._raw(as_rational(x), _F0, _F0, _F0)

    @classmethod
    def from_coords(cls, v: Sequence) -> Quaternion:
        a, b, c, d = (as_rational(x) for x in v)
        return cls._raw(a, b, c, d)

    @classmethod
    def basis(cls) -> tuple[Quaternion, ...]:
        return (_QONE, I, J, K)

    @classmethod
    def parse(cls, text: str) -> Quaternion:
        return cls.from_coords(_parse_components(text, "ijk"))

    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.re, self.im_i, self.im_j, self.im_k)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion._raw(self.re + other.re, self.im_i + other.im_i,
                                   self.im_j + other.im_j, self.im_k + other.im_k)
        if isinstance(other, _Scalar):
            return Quaternion._raw(self.re + other, self.im_i, self.im_j, self.im_k)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> Quaternion:
        return Quaternion._raw(-self.re, -self.im_i, -self.im_j, -self.im_k)

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion._raw(self.re - other.re, self.im_i - other.im_i,
                                   self.im_j - other.im_j, self.im_k - other.im_k)
        if isinstance(other, _Scalar):
            return Quaternion._raw(self.re - other, self.im_i, self.im_j, self.im_k)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _Scalar):
            return Quaternion._raw(other - self.re, -self.im_i, -self.im_j, -self.im_k)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            # integer numerators over one common denominator per factor:
            # 16 int products and 4 normalizations instead of 28 Fraction ops
            (a1, b1, c1, d1), s = self._scaled()
            (a2, b2, c2, d2), t = other._scaled()
            st = s * t
            return Quaternion._raw(
                Fraction(a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2, st),
                Fraction(a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2, st),
                Fraction(a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2, st),
                Fraction(a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2, st),
            )
        if isinstance(other, _Scalar):
            return Quaternion._raw(self.re * other, self.im_i * other,
                                   self.im_j * other, self.im_k * other)
        return NotImplemented

    def _scaled(self) -> tuple[tuple[int, int, int, int], int]:
        parts = (self.re, self.im_i, self.im_j, self.im_k)
        den = lcm(*(x.denominator for x in parts))
        return tuple(x.numerator * (den // x.denominator) for x in parts), den

    def __rmul__(self, other):
        if isinstance(other, _Scalar):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, _Scalar):
            if other == 0:
                raise ZeroDivisionError("quaternion division by zero")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int) -> Quaternion:
        if n < 0:
            return self.inverse() ** (-n)
        result, base = _QONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> Quaternion:
        return Quaternion._raw(self.re, -self.im_i, -self.im_j, -self.im_k)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im_i * self.im_i + self.im_j * self.im_j + self.im_k * self.im_k

    def trace(self) -> Fraction:
        return 2 * self.re

    def inverse(self) -> Quaternion:
        n = self.norm()
        if not n:
            raise ZeroDivisionError("zero quaternion has no inverse")
        return Quaternion._raw(self.re / n, -self.im_i / n, -self.im_j / n, -self.im_k / n)

    # -- comparisons --------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.re or self.im_i or self.im_j or self.im_k)

    def is_zero(self) -> bool:
        return not self

    def __eq__(self, other) -> bool:
        if isinstance(other, Quaternion):
            return (self.re == other.re and self.im_i == other.im_i
                    and self.im_j == other.im_j and self.im_k == other.im_k)
        if isinstance(other, _Scalar):
            return self.re == other and not (self.im_i or self.im_j or self.im_k)
        return NotImplemented

    def __hash__(self) -> int:
        if not (self.im_i or self.im_j or self.im_k):
            return hash(self.re)
        return hash(self.coords())

    # -- regular representation ---------------------------------------------
    def left_matrix(self) -> list[list[Fraction]]:
        """Matrix of x -> self * x in the basis 1, i, j, k."""
        a, b, c, d = self.coords()
        return [[a, -b, -c, -d], [b, a, -d, c], [c, d, a, -b], [d, -c, b, a]]

    def right_matrix(self) -> list[list[Fraction]]:
        """Matrix of x -> x * self in the basis 1, i, j, k."""
        a, b, c, d = self.coords()
        return [[a, -b, -c, -d], [b, a, d, -c], [c, -d, a, b], [d, c, -b, a]]

    # -- conjugacy ------------------------------------------------------------
    def is_central(self) -> bool:
        return not (self.im_i or self.im_j or self.im_k)

    def class_data(self) -> ConjugacyClassData:
        return ConjugacyClassData(self.trace(), self.norm(), 1 if self.is_central() else 2)

    def class_key(self) -> tuple[Fraction, Fraction]:
        return (self.trace(), self.norm())

    def is_conjugate(self, other: Quaternion) -> bool:
        # real part and norm determine the class; for central elements this forces equality
        return self.re == other.re and self.norm() == other.norm()

    def central_minpoly_coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients (low to high) of the minimal central polynomial."""
        if self.is_central():
            return (-self.re, Fraction(1))
        return (self.norm(), -self.trace(), Fraction(1))

    def intertwiners(self, other: Quaternion) -> list[Quaternion]:
        """Basis over Q of {x : self*x = x*other}."""
        la, rb = self.left_matrix(), other.right_matrix()
        m = [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(la, rb)]
        return [Quaternion.from_coords(v) for v in _canonical_span(nullspace(m, 4), 4)]

    # -- text -----------------------------------------------------------------
    def __str__(self) -> str:
        return _format_components(self.coords(), ("", "i", "j", "k"))

    def __repr__(self) -> str:
        return f"Quaternion({str(self)!r})"


class Rat:
    """Element of the commutative field Q, packaged with the division-ring contract."""

    __slots__ = ("value",)
    DIM = 1

    def __init__(self, value=0) -> None:
        self.value = as_rational(value.value if isinstance(value, Rat) else value)

    @classmethod
    def zero(cls) -> Rat:
        return cls(0)

    @classmethod
    def one(cls) -> Rat:
        return cls(1)

    @classmethod
    def from_rational(cls, x) -> Rat:
        return cls(x)

    @classmethod
    def from_coords(cls, v: Sequence) -> Rat:
        (x,) = v
        return cls(x)

    @classmethod
    def basis(cls) -> tuple[Rat, ...]:
        return (cls(1),)

    @classmethod
    def parse(cls, text: str) -> Rat:
        return cls(_parse_components(text, "")[0])

    def coords(self) -> tuple[Fraction]:
        return (self.value,)

    def _lift(self, other):
        if isinstance(other, Rat):
            return other.value
        if isinstance(other, _Scalar):
            return other
        return None

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Rat(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Rat(self.value - o)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Rat(o - self.value)

    def __neg__(self) -> Rat:
        return Rat(-self.value)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Rat(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError("division by zero")
        return Rat(self.value / o)

    def __pow__(self, n: int) -> Rat:
        return Rat(self.value ** n)

    def conj(self) -> Rat:
        return self

    def norm(self) -> Fraction:
        return self.value * self.value

    def inverse(self) -> Rat:
        if not self.value:
            raise ZeroDivisionError("zero has no inverse")
        return Rat(1 / self.value)

    def __bool__(self) -> bool:
        return bool(self.value)

    def is_zero(self) -> bool:
        return not self.value

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        return NotImplemented if o is None else self.value == o

    def __hash__(self) -> int:
        return hash(self.value)

    def left_matrix(self) -> list[list[Fraction]]:
        return [[self.value]]

    right_matrix = left_matrix

    def is_central(self) -> bool:
        return True

    def class_data(self) -> ConjugacyClassData:
        return ConjugacyClassData(2 * self.value, self.value * self.value, 1)

    def class_key(self) -> tuple[Fraction, Fraction]:
        return (2 * self.value, self.value * self.value)

    def is_conjugate(self, other: Rat) -> bool:
        return self.value == other.value

    def central_minpoly_coeffs(self) -> tuple[Fraction, ...]:
        return (-self.value, Fraction(1))

    def intertwiners(self, other: Rat) -> list[Rat]:
        return [Rat(1)] if self.value == other.value else []

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"Rat({str(self.value)!r})"


_F0 = Fraction(0)
_F1 = Fraction(1)
_QZERO = Quaternion._raw(_F0, _F0, _F0, _F0)
_QONE = Quaternion._raw(_F1, _F0, _F0, _F0)
I = Quaternion._raw(_F0, _F1, _F0, _F0)
J = Quaternion._raw(_F0, _F0, _F1, _F0)
K = Quaternion._raw(_F0, _F0, _F0, _F1)


def conjugate_test(a, b) -> bool:
    return a.is_conjugate(b)


def intertwiner_basis(a, b) -> list:
    return a.intertwiners(b)


def class_data(a) -> ConjugacyClassData:
    return a.class_data()


# -- literal grammar -----------------------------------------------------------

_TERM = re.compile(r"(\d+(?:/\d+)?)?(\*)?([a-z])?")


def _parse_components(text: str, units: str) -> list[Fraction]:
    """Parse ``a + b*i + c*j + d*k`` style literals (whitespace ignored).

    ``units`` lists the admissible unit letters after the real part; every
    component is a rational ``p`` or ``p/q`` and omitted components are zero.
    """
    # map positions in the squeezed string back to the caller's text for errors
    positions = [n for n, ch in enumerate(text) if not ch.isspace()]
    s = "".join(text[n] for n in positions)

    def fail(msg: str, at: int) -> LiteralParseError:
        col = positions[at] + 1 if at < len(positions) else len(text) + 1
        return LiteralParseError(msg, text, col)

    if s.startswith("(") and s.endswith(")"):
        inner = _parse_components(text[positions[0] + 1: positions[-1]], units)
        return inner
    if not s:
        raise fail("empty literal", 0)
    comps = [Fraction(0)] * (len(units) + 1)
    seen = set()
    pos = 0
    first = True
    while pos < len(s):
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        elif not first:
            raise fail("expected '+' or '-'", pos)
        start = pos
        m = _TERM.match(s, pos)
        number, star, unit = m.group(1), m.group(2), m.group(3)
        if number is None and unit is None:
            raise fail("expected a rational or a unit", start)
        if star and (number is None or unit is None):
            raise fail("'*' must join a rational and a unit", start)
        if number is not None and number.endswith("/0") and set(number.split("/")[1]) == {"0"}:
            raise fail("zero denominator", start)
        if unit is None:
            slot = 0
        elif unit in units:
            slot = units.index(unit) + 1
        else:
            raise fail(f"unknown unit {unit!r}", m.start(3))
        if slot in seen:
            raise fail("component given twice", start)
        seen.add(slot)
        value = Fraction(number) if number is not None else Fraction(1)
        comps[slot] = sign * value
        pos = m.end()
        first = False
        if pos == start:
            raise fail("unexpected character", pos)
    return comps


def _format_components(coords: Sequence[Fraction], units: Sequence[str]) -> str:
    parts = []
    for value, unit in zip(coords, units):
        if not value:
            continue
        if not unit:
            parts.append(str(value))
        elif value == 1:
            parts.append(unit)
        elif value == -1:
            parts.append("-" + unit)
        else:
            parts.append(f"{value}*{unit}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def parse_quaternion(text: str) -> Quaternion:
    return Quaternion.parse(text)
