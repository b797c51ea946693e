"""Common multiples, minimal polynomials of node sets, and P-independence."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .common import check_distinct
from .linalg import nullspace
from .poly import SkewPoly, rho
from .scalars import Quaternion


@dataclass(frozen=True)
class MinimalPolyResult:
    poly: SkewPoly
    basis_indices: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.basis_indices)


def _ring_of(nodes: Sequence, ring: type | None) -> type:
    if ring is not None:
        return ring
    return type(nodes[0]) if nodes else Quaternion


def minimal_poly_left(nodes: Sequence, ring: type | None = None) -> MinimalPolyResult:
    """Monic P with P^l vanishing on ``nodes``, built one node at a time.

    If v = P^l(a) is nonzero, P * (z - v^{-1} a v) vanishes at a as well as on
    the earlier nodes; otherwise a already is a left zero and is skipped.
    """
    check_distinct(nodes)
    ring = _ring_of(nodes, ring)
    p = SkewPoly.one(ring)
    basis = []
    for n, a in enumerate(nodes):
        v = p.eval_left(a)
        if v:
            p = p * rho(v.inverse() * a * v)
            basis.append(n)
    return MinimalPolyResult(p, tuple(basis))


def minimal_poly_right(nodes: Sequence, ring: type | None = None) -> MinimalPolyResult:
    """Mirror of ``minimal_poly_left``: prepend (z - w a w^{-1}) with w = P^r(a)."""
    check_distinct(nodes)
    ring = _ring_of(nodes, ring)
    p = SkewPoly.one(ring)
    basis = []
    for n, a in enumerate(nodes):
        w = p.eval_right(a)
        if w:
            p = rho(w * a * w.inverse()) * p
            basis.append(n)
    return MinimalPolyResult(p, tuple(basis))


def minimal_poly(nodes: Sequence, side: str, ring: type | None = None) -> MinimalPolyResult:
    if side == "left":
        return minimal_poly_left(nodes, ring)
    if side == "right":
        return minimal_poly_right(nodes, ring)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def _has_duplicates(nodes: Sequence) -> bool:
    return len(set(nodes)) != len(nodes)


def is_p_independent_left(nodes: Sequence) -> bool:
    if _has_duplicates(nodes):
        return False
    return minimal_poly_left(nodes).degree == len(nodes)


def is_p_independent_right(nodes: Sequence) -> bool:
    if _has_duplicates(nodes):
        return False
    return minimal_poly_right(nodes).degree == len(nodes)


def is_p_independent(nodes: Sequence, side: str) -> bool:
    return is_p_independent_left(nodes) if side == "left" else is_p_independent_right(nodes)


def p_independent_by_exclusion(nodes: Sequence, side: str = "left") -> bool:
    """Criterion form: every node is a non-zero of the minimal polynomial of the others."""
    if _has_duplicates(nodes):
        return False
    for n, b in enumerate(nodes):
        rest = list(nodes[:n]) + list(nodes[n + 1:])
        p = minimal_poly(rest, side, type(b)).poly
        v = p.eval_left(b) if side == "left" else p.eval_right(b)
        if not v:
            return False
    return True


def in_left_zero_set(f: SkewPoly, a) -> bool:
    return not f.eval_left(a)


def in_right_zero_set(f: SkewPoly, a) -> bool:
    return not f.eval_right(a)


# -- common multiples by kernel search ----------------------------------------------

def _coords_of_poly(f: SkewPoly, length: int) -> list[Fraction]:
    out = []
    for j in range(length):
        out.extend(f.coeff(j).coords())
    return out


def _poly_of_coords(v: Sequence[Fraction], ring: type) -> SkewPoly:
    d = ring.DIM
    return SkewPoly([ring.from_coords(v[t:t + d]) for t in range(0, len(v), d)], ring)


def _linear_map_columns(fn: Callable[[SkewPoly], SkewPoly], n_coeffs: int, out_len: int, ring: type):
    """Columns of the Q-linear map fn on polynomials with ``n_coeffs`` coefficients."""
    basis = ring.basis()
    cols = []
    for j in range(n_coeffs):
        for e in basis:
            cols.append(_coords_of_poly(fn(SkewPoly.monomial(j, e, ring)), out_len))
    return cols


def _common_multiple(f: SkewPoly, g: SkewPoly, right: bool) -> SkewPoly:
    if not f or not g:
        raise ValueError("common multiples need nonzero polynomials")
    ring = f.ring
    df, dg = f.degree, g.degree
    for deg in range(max(df, dg), df + dg + 1):
        na, nb = deg - df + 1, deg - dg + 1
        if right:
            fa = lambda a: f * a
            gb = lambda b: g * b
        else:
            fa = lambda a: a * f
            gb = lambda b: b * g
        cols = _linear_map_columns(fa, na, deg + 1, ring)
        cols += [[-x for x in c] for c in _linear_map_columns(gb, nb, deg + 1, ring)]
        matrix = [list(r) for r in zip(*cols)]
        kernel = nullspace(matrix, len(cols))
        if kernel:
            a = _poly_of_coords(kernel[0][: na * ring.DIM], ring)
            m = f * a if right else a * f
            return m.monic_right() if right else m.monic_left()
    raise AssertionError("no common multiple found below deg f + deg g")


def lrcm(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Monic generator of f*F[z] intersected with g*F[z]."""
    return _common_multiple(f, g, right=True)


def llcm(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Monic generator of F[z]*f intersected with F[z]*g."""
    return _common_multiple(f, g, right=False)
