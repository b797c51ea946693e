"""Polynomials over a division ring with a central variable z.

A ``SkewPoly`` stores f(z) = sum z^j f_j with coefficients written to the right
of the powers of z. Since z is central the placement is only a convention, but
it fixes what "left value" and "right value" mean:

    f^l(a) = sum a^j f_j        f^r(a) = sum f_j a^j

``CentralPoly`` holds polynomials with rational coefficients; they embed into
``SkewPoly`` and their left and right values agree.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .scalars import LiteralParseError, Quaternion, as_rational

NEG_INF = float("-inf")  # degree of the zero polynomial


def _lift(x, ring):
    if isinstance(x, ring):
        return x
    if isinstance(x, (int, Fraction)):
        return ring.from_rational(x)
    if isinstance(x, str):
        return ring.parse(x)
    raise TypeError(f"cannot use {x!r} as a coefficient in {ring.__name__}")


def _infer_ring(items) -> type:
    for x in items:
        if hasattr(x, "DIM"):
            return type(x)
    return Quaternion


class SkewPoly:
    """Immutable polynomial sum z^j f_j over ``ring`` (default: rational quaternions)."""

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Iterable = (), ring: type | None = None) -> None:
        items = list(coeffs)
        ring = ring or _infer_ring(items)
        cs = [_lift(x, ring) for x in items]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple = tuple(cs)
        self.ring = ring

    @classmethod
    def _raw(cls, coeffs: list, ring: type) -> SkewPoly:
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(coeffs)
        p.ring = ring
        return p

    @classmethod
    def zero(cls, ring: type = Quaternion) -> SkewPoly:
        return cls._raw([], ring)

    @classmethod
    def one(cls, ring: type = Quaternion) -> SkewPoly:
        return cls._raw([ring.one()], ring)

    @classmethod
    def constant(cls, c, ring: type | None = None) -> SkewPoly:
        ring = ring or _infer_ring([c])
        return cls._raw([_lift(c, ring)], ring)

    @classmethod
    def monomial(cls, n: int, c=1, ring: type | None = None) -> SkewPoly:
        ring = ring or _infer_ring([c])
        return cls._raw([ring.zero()] * n + [_lift(c, ring)], ring)

    # -- basic queries ----------------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, j: int):
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else self.ring.zero()

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, SkewPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, CentralPoly):
            return self == other.to_skew(self.ring)
        if isinstance(other, (int, Fraction)) or hasattr(other, "DIM"):
            return self == SkewPoly.constant(other, self.ring)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- arithmetic -------------------------------------------------------------
    def _coerce(self, other) -> SkewPoly | None:
        if isinstance(other, SkewPoly):
            return other
        if isinstance(other, CentralPoly):
            return other.to_skew(self.ring)
        if isinstance(other, (int, Fraction)) or isinstance(other, self.ring):
            return SkewPoly.constant(other, self.ring)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, x in enumerate(b):
            out[j] = out[j] + x
        return SkewPoly._raw(out, self.ring)

    __radd__ = __add__

    def __neg__(self) -> SkewPoly:
        return SkewPoly._raw([-c for c in self.coeffs], self.ring)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        """Polynomial product, or right multiplication by a scalar (f_j -> f_j c)."""
        if isinstance(other, (SkewPoly, CentralPoly)):
            o = self._coerce(other)
            a, b = self.coeffs, o.coeffs
            if not a or not b:
                return SkewPoly.zero(self.ring)
            out = [None] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if not x:
                    continue
                for j, y in enumerate(b):
                    t = x * y
                    out[i + j] = t if out[i + j] is None else out[i + j] + t
            zero = self.ring.zero()
            return SkewPoly._raw([zero if t is None else t for t in out], self.ring)
        if isinstance(other, (int, Fraction)) or isinstance(other, self.ring):
            return SkewPoly._raw([c * other for c in self.coeffs], self.ring)
        return NotImplemented

    def __rmul__(self, other):
        """Left multiplication by a scalar (f_j -> c f_j)."""
        if isinstance(other, CentralPoly):
            return other.to_skew(self.ring) * self
        if isinstance(other, (int, Fraction)) or isinstance(other, self.ring):
            return SkewPoly._raw([other * c for c in self.coeffs], self.ring)
        return NotImplemented

    def __pow__(self, n: int) -> SkewPoly:
        out = SkewPoly.one(self.ring)
        for _ in range(n):
            out = out * self
        return out

    def monic_right(self) -> SkewPoly:
        """f * lead^{-1}, the monic associate in the right ideal sense."""
        return self * self.leading.inverse()

    def monic_left(self) -> SkewPoly:
        return self.leading.inverse() * self

    def conj(self) -> SkewPoly:
        """Coefficientwise conjugation; an anti-automorphism of the polynomial ring."""
        return SkewPoly._raw([c.conj() for c in self.coeffs], self.ring)

    # -- evaluation and shifts --------------------------------------------------
    def eval_left(self, a):
        r = self.ring.zero()
        for c in reversed(self.coeffs):
            r = a * r + c
        return r

    def eval_right(self, a):
        r = self.ring.zero()
        for c in reversed(self.coeffs):
            r = r * a + c
        return r

    def shift_left(self, a) -> SkewPoly:
        """L_a f, the quotient in f = f^l(a) + (z - a) * L_a f."""
        cs = self.coeffs
        if len(cs) <= 1:
            return SkewPoly.zero(self.ring)
        g = [None] * (len(cs) - 1)
        g[-1] = cs[-1]
        for j in range(len(cs) - 3, -1, -1):
            g[j] = cs[j + 1] + a * g[j + 1]
        return SkewPoly._raw(g, self.ring)

    def shift_right(self, a) -> SkewPoly:
        """R_a f, the quotient in f = f^r(a) + R_a f * (z - a)."""
        cs = self.coeffs
        if len(cs) <= 1:
            return SkewPoly.zero(self.ring)
        g = [None] * (len(cs) - 1)
        g[-1] = cs[-1]
        for j in range(len(cs) - 3, -1, -1):
            g[j] = cs[j + 1] + g[j + 1] * a
        return SkewPoly._raw(g, self.ring)

    def derivative(self, order: int = 1) -> SkewPoly:
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        cs = self.coeffs
        if order == 0:
            return self
        out = []
        for j in range(order, len(cs)):
            out.append(cs[j] * (factorial(j) // factorial(j - order)))
        return SkewPoly._raw(out, self.ring)

    # -- division ---------------------------------------------------------------
    def divide_left(self, d: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
        """(q, r) with self = d*q + r and deg r < deg d."""
        if not d:
            raise ZeroDivisionError("division by the zero polynomial")
        m = d.degree
        inv = d.leading.inverse()
        r = list(self.coeffs)
        q = [self.ring.zero()] * max(len(r) - m, 0)
        dc = d.coeffs
        for s in range(len(r) - 1 - m, -1, -1):
            top = r[s + m]
            if not top:
                continue
            qs = inv * top
            q[s] = qs
            for t, x in enumerate(dc):
                r[s + t] = r[s + t] - x * qs
        return SkewPoly._raw(q, self.ring), SkewPoly._raw(r[:m], self.ring)

    def divide_right(self, d: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
        """(q, r) with self = q*d + r and deg r < deg d."""
        if not d:
            raise ZeroDivisionError("division by the zero polynomial")
        m = d.degree
        inv = d.leading.inverse()
        r = list(self.coeffs)
        q = [self.ring.zero()] * max(len(r) - m, 0)
        dc = d.coeffs
        for s in range(len(r) - 1 - m, -1, -1):
            top = r[s + m]
            if not top:
                continue
            qs = top * inv
            q[s] = qs
            for t, x in enumerate(dc):
                r[s + t] = r[s + t] - qs * x
        return SkewPoly._raw(q, self.ring), SkewPoly._raw(r[:m], self.ring)

    def left_divides(self, f: SkewPoly) -> bool:
        """True iff f = self*q for some q."""
        return not f.divide_left(self)[1]

    def right_divides(self, f: SkewPoly) -> bool:
        """True iff f = q*self for some q."""
        return not f.divide_right(self)[1]

    # -- central structure -------------------------------------------------------
    def components(self) -> list[CentralPoly]:
        """The DIM rational polynomials obtained coordinatewise."""
        return [CentralPoly([c.coords()[t] for c in self.coeffs]) for t in range(self.ring.DIM)]

    @classmethod
    def from_components(cls, comps: Sequence[CentralPoly], ring: type = Quaternion) -> SkewPoly:
        n = max((len(c.coeffs) for c in comps), default=0)
        return cls._raw([ring.from_coords([c.coeff(j) for c in comps]) for j in range(n)], ring)

    def is_central(self) -> bool:
        return all(c.is_central() for c in self.coeffs)

    def to_central(self) -> CentralPoly:
        if not self.is_central():
            raise ValueError("polynomial has non-central coefficients")
        return CentralPoly([c.coords()[0] for c in self.coeffs])

    # -- text and JSON ----------------------------------------------------------
    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            power = "" if j == 0 else " z" if j == 1 else f" z^{j}"
            parts.append(f"({c}){power}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SkewPoly({str(self)!r})"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str], ring: type = Quaternion) -> SkewPoly:
        return cls([ring.parse(s) if isinstance(s, str) else s for s in data], ring)

    @classmethod
    def parse(cls, text: str, ring: type = Quaternion) -> SkewPoly:
        return parse_poly(text, ring)


def rho(a) -> SkewPoly:
    """The linear polynomial z - a."""
    ring = type(a)
    return SkewPoly._raw([-a, ring.one()], ring)


def eval_left(f: SkewPoly, a):
    return f.eval_left(a)


def eval_right(f: SkewPoly, a):
    return f.eval_right(a)


def shift_left(a, f: SkewPoly) -> SkewPoly:
    return f.shift_left(a)


def shift_right(a, f: SkewPoly) -> SkewPoly:
    return f.shift_right(a)


def derivative(f, order: int = 1):
    return f.derivative(order)


def divide_left(f: SkewPoly, d: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    return f.divide_left(d)


def divide_right(f: SkewPoly, d: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    return f.divide_right(d)


class CentralPoly:
    """Polynomial with rational coefficients, low to high."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()) -> None:
        cs = [as_rational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def one(cls) -> CentralPoly:
        return cls([1])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1]

    def coeff(self, j: int) -> Fraction:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, CentralPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, SkewPoly):
            return other == self
        if isinstance(other, (int, Fraction)):
            return self.coeffs == CentralPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x):
        """Value at x; x may be a rational or any ring element."""
        r = Fraction(0)
        for c in reversed(self.coeffs):
            r = r * x + c
        if hasattr(x, "DIM") and not hasattr(r, "DIM"):
            r = type(x).from_rational(r)
        return r

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CentralPoly([other])
        if not isinstance(other, CentralPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return CentralPoly([self.coeff(j) + other.coeff(j) for j in range(n)])

    __radd__ = __add__

    def __neg__(self) -> CentralPoly:
        return CentralPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CentralPoly([other])
        if not isinstance(other, CentralPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return CentralPoly([other]) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CentralPoly([c * other for c in self.coeffs])
        if isinstance(other, SkewPoly):
            return self.to_skew(other.ring) * other
        if not isinstance(other, CentralPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return CentralPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return CentralPoly(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> CentralPoly:
        out = CentralPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def derivative(self, order: int = 1) -> CentralPoly:
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        cs = self.coeffs
        return CentralPoly([cs[j] * (factorial(j) // factorial(j - order)) for j in range(order, len(cs))])

    def divmod(self, d: CentralPoly) -> tuple[CentralPoly, CentralPoly]:
        if not d:
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        m = d.degree
        q = [Fraction(0)] * max(len(r) - m, 0)
        for s in range(len(r) - 1 - m, -1, -1):
            top = r[s + m]
            if not top:
                continue
            qs = top / d.leading
            q[s] = qs
            for t, x in enumerate(d.coeffs):
                r[s + t] -= x * qs
        return CentralPoly(q), CentralPoly(r[:m])

    def __floordiv__(self, d: CentralPoly) -> CentralPoly:
        return self.divmod(d)[0]

    def __mod__(self, d: CentralPoly) -> CentralPoly:
        return self.divmod(d)[1]

    def divides(self, f: CentralPoly) -> bool:
        return not f.divmod(self)[1]

    def monic(self) -> CentralPoly:
        if not self.coeffs:
            return self
        return self * (1 / self.leading)

    def to_skew(self, ring: type = Quaternion) -> SkewPoly:
        return SkewPoly._raw([ring.from_rational(c) for c in self.coeffs], ring)

    def __str__(self) -> str:
        """Descending form, e.g. ``z^2 - 2 z + 2``."""
        if not self.coeffs:
            return "0"
        out = ""
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            mono = "" if j == 0 else "z" if j == 1 else f"z^{j}"
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag} {mono}"
            if not out:
                out = body if sign == "+" else "-" + body
            else:
                out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"CentralPoly({str(self)!r})"


def poly_gcd(a: CentralPoly, b: CentralPoly) -> CentralPoly:
    """Monic gcd in Q[z]; gcd(0, 0) = 0."""
    while b:
        a, b = b, a % b
    return a.monic()


def minimal_central_polynomial(a) -> CentralPoly:
    return CentralPoly(a.central_minpoly_coeffs())


# -- text parsing ---------------------------------------------------------------

_MONO = re.compile(r"^(\*)?z(?:\^(\d+))?$")


def _split_terms(s: str) -> list[tuple[int, str, int]]:
    """Split at top-level + and - signs; returns (sign, body, offset)."""
    terms = []
    depth = 0
    start = 0
    sign = 1
    for n, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and n > start:
            terms.append((sign, s[start:n], start))
            sign = -1 if ch == "-" else 1
            start = n + 1
        elif ch in "+-" and depth == 0 and n == start:
            sign = -sign if ch == "-" else sign
            start = n + 1
    terms.append((sign, s[start:], start))
    return terms


def parse_poly(text: str, ring: type = Quaternion) -> SkewPoly:
    """Parse ``(c0) + (c1) z + (c2) z^2``, descending central forms like
    ``z^2 - 2 z + 2``, or a bare scalar literal."""
    try:
        return SkewPoly.constant(ring.parse(text), ring)
    except LiteralParseError:
        pass
    positions = [n for n, ch in enumerate(text) if not ch.isspace()]
    s = "".join(text[n] for n in positions)
    coeffs: dict[int, object] = {}
    for sign, body, off in _split_terms(s):
        col = positions[off] + 1 if off < len(positions) else len(text) + 1
        if not body:
            raise LiteralParseError("empty term", text, col)
        if body.startswith("("):
            close = body.find(")")
            if close < 0:
                raise LiteralParseError("unbalanced parenthesis", text, col)
            coef = ring.parse(body[1:close])
            rest = body[close + 1:]
        else:
            m = re.match(r"\d+(?:/\d+)?", body)
            coef = ring.from_rational(Fraction(m.group(0))) if m else ring.one()
            rest = body[m.end():] if m else body
        if rest == "":
            power = 0
        else:
            mm = _MONO.match(rest)
            if not mm:
                raise LiteralParseError("malformed polynomial term", text, col)
            power = int(mm.group(2) or 1)
        coef = -coef if sign < 0 else coef
        coeffs[power] = coeffs[power] + coef if power in coeffs else coef
    top = max(coeffs)
    return SkewPoly([coeffs.get(j, ring.zero()) for j in range(top + 1)], ring)
