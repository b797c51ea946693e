"""Central divisors and multiples, lambda-transforms, and the generalized
Lagrange formula that splits a two-sided problem by conjugacy class.

For nonzero g:
    D_g   greatest central divisor, g = D_g * Q_g = Q_g * D_g
    M_g   least central multiple,   M_g = g * g_dia = g_dia * g
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Sequence

from .common import Inconsistent, PDependentError
from .ideals import minimal_poly_left, minimal_poly_right
from .linalg import nullspace, rref
from .poly import CentralPoly, SkewPoly, poly_gcd
from .twosided import TwoSidedFamily, TwoSidedProblem, solve_two_sided


@dataclass(frozen=True)
class BoundedDecomposition:
    d: CentralPoly
    q: SkewPoly
    m: CentralPoly
    diamond: SkewPoly


def greatest_central_divisor(g: SkewPoly, method: str = "gcd") -> CentralPoly:
    """Monic D_g: a central polynomial divides g exactly when it divides each
    coordinate polynomial of g, so D_g is their gcd.

    ``method="kernel"`` avoids gcds altogether: D_g * M_{g_dia} = M_g, and
    both least central multiples come from kernel searches.

    ``method="span"`` instead finds the lowest-degree monic element of the
    Q-span of z^s * (coordinate polynomial), s <= deg g, which is the same gcd
    reached through Bezout combinations.
    """
    if not g:
        raise ValueError("the zero polynomial has no greatest central divisor")
    comps = [c for c in g.components() if c]
    if method == "gcd":
        d = CentralPoly()
        for c in comps:
            d = poly_gcd(d, c) if d else c.monic()
        return d
    if method == "kernel":
        m, dia = least_central_multiple(g)
        m_dia, _ = least_central_multiple(dia)
        d, r = m.divmod(m_dia)
        if r:
            raise AssertionError("M of the diamond companion does not divide M_g")
        return d.monic()
    if method == "span":
        n = g.degree
        width = 2 * n + 1
        vectors = []
        for c in comps:
            for s in range(n + 1):
                shifted = [Fraction(0)] * s + list(c.coeffs)
                shifted += [Fraction(0)] * (width - len(shifted))
                vectors.append(list(reversed(shifted)))  # highest degree first
        rows, pivots = rref(vectors, width)
        low = list(reversed(rows[-1]))
        return CentralPoly(low).monic()
    raise ValueError(f"unknown method {method!r}")


def central_multiple_kernel(g: SkewPoly, t: int) -> list[SkewPoly]:
    """Basis of {h : deg h <= t, g*h central}."""
    ring = g.ring
    dim = ring.DIM
    if dim == 1:
        return [SkewPoly.monomial(j, 1, ring) for j in range(t + 1)]
    # g * (z^j e) is g * e shifted up by j, so only DIM products are needed
    products = [[(c * e).coords()[1:] for c in g.coeffs] for e in ring.basis()]
    length = g.degree + t + 1
    cols = []
    for j in range(t + 1):
        for prod in products:
            col = [Fraction(0)] * ((dim - 1) * length)
            for s, coords in enumerate(prod):
                base = (s + j) * (dim - 1)
                col[base:base + dim - 1] = coords
            cols.append(col)
    matrix = [list(r) for r in zip(*cols)]
    out = []
    for v in nullspace(matrix, len(cols)):
        out.append(SkewPoly([ring.from_coords(v[s:s + dim]) for s in range(0, len(v), dim)], ring))
    return out


@lru_cache(maxsize=2048)
def _least_central_multiple(g: SkewPoly) -> tuple[CentralPoly, SkewPoly]:
    for t in range(g.degree + 1):
        kernel = central_multiple_kernel(g, t)
        if kernel:
            h = kernel[0]
            m = g * h
            scale = 1 / m.leading.coords()[0]
            return (m * scale).to_central(), h * scale
    raise AssertionError("g * conj(g) is central, so a multiple exists by degree 2 deg g")


def least_central_multiple(g: SkewPoly) -> tuple[CentralPoly, SkewPoly]:
    """(M_g, g_dia): the first degree with a nonzero central multiple wins."""
    if not g:
        raise ValueError("the zero polynomial has no least central multiple")
    return _least_central_multiple(g)


def minimality_certificate(g: SkewPoly) -> bool:
    """True iff no central multiple of g has degree below deg M_g."""
    m, dia = least_central_multiple(g)
    return all(not central_multiple_kernel(g, t) for t in range(dia.degree))


def bounded_decompose(g: SkewPoly) -> BoundedDecomposition:
    if not g:
        raise ValueError("bounded_decompose needs a nonzero polynomial")
    d = greatest_central_divisor(g)
    comps = [c.divmod(d)[0] for c in g.components()]
    q = SkewPoly.from_components(comps, g.ring)
    m, dia = least_central_multiple(g)
    return BoundedDecomposition(d, q, m, dia)


def central_norm(g: SkewPoly) -> CentralPoly:
    """g * conj(g), a central multiple of g."""
    return (g * g.conj()).to_central()


# -- lambda-transforms ------------------------------------------------------------

def lambda_forward_right(h: SkewPoly, delta, beta):
    """delta -> (h delta)^r(beta)."""
    return (h * delta).eval_right(beta)


def lambda_forward_left(h: SkewPoly, delta, beta):
    """delta -> (delta h)^l(beta)."""
    return (delta * h).eval_left(beta)


def _m_at(h: SkewPoly, beta):
    m, dia = least_central_multiple(h)
    mb = m(beta)
    if not mb:
        raise ValueError(f"least central multiple of {h} vanishes at {beta}")
    return mb, dia


def lambda_inverse_right(h: SkewPoly, d, beta):
    """delta with (h delta)^r(beta) = d, as (h_dia d)^r(beta) * M_h(beta)^{-1}."""
    mb, dia = _m_at(h, beta)
    return (dia * d).eval_right(beta) * mb.inverse()


def lambda_inverse_left(h: SkewPoly, d, beta):
    """delta with (delta h)^l(beta) = d, as M_h(beta)^{-1} * (d h_dia)^l(beta)."""
    mb, dia = _m_at(h, beta)
    return mb.inverse() * (d * dia).eval_left(beta)


# -- elementary coefficients ---------------------------------------------------------

def _rho_coefficient(outer_left_value, outer_right: SkewPoly, a, c):
    """rho with (outer_left * rho * outer_right)^l(a) = c, given outer_left^l(a)."""
    if not c:
        return type(a).zero()
    mb, dia = _m_at(outer_right, a)
    return outer_left_value.inverse() * mb.inverse() * (c * dia).eval_left(a)


def _gamma_coefficient(outer_left: SkewPoly, outer_right_value, b, d):
    """gamma with (outer_left * gamma * outer_right)^r(b) = d, given outer_right^r(b)."""
    if not d:
        return type(b).zero()
    mb, dia = _m_at(outer_left, b)
    return (dia * d).eval_right(b) * mb.inverse() * outer_right_value.inverse()


def elementary_coefficient_left(lam: Sequence, omega: Sequence, i: int, c):
    """rho_i making P_{lam minus a_i, l} * rho_i * P_{omega, r} take left value c at a_i."""
    a = lam[i]
    if any(a.is_conjugate(b) for b in omega):
        raise ValueError(f"left node {a} is conjugate to a right node")
    ring = type(a)
    p = minimal_poly_left(list(lam[:i]) + list(lam[i + 1:]), ring).poly
    P_right = minimal_poly_right(list(omega), ring).poly
    v = p.eval_left(a)
    if not v:
        raise PDependentError("left node set is not P-independent")
    return _rho_coefficient(v, P_right, a, c)


def elementary_coefficient_right(lam: Sequence, omega: Sequence, j: int, d):
    """gamma_j making P_{lam, l} * gamma_j * P_{omega minus b_j, r} take right value d at b_j."""
    b = omega[j]
    if any(b.is_conjugate(a) for a in lam):
        raise ValueError(f"right node {b} is conjugate to a left node")
    ring = type(b)
    P_left = minimal_poly_left(list(lam), ring).poly
    q = minimal_poly_right(list(omega[:j]) + list(omega[j + 1:]), ring).poly
    w = q.eval_right(b)
    if not w:
        raise PDependentError("right node set is not P-independent")
    return _gamma_coefficient(P_left, w, b, d)


def elementary_coefficients(lam: Sequence, omega: Sequence, index: int, target, side: str = "left"):
    if side == "left":
        return elementary_coefficient_left(lam, omega, index, target)
    if side == "right":
        return elementary_coefficient_right(lam, omega, index, target)
    raise ValueError("side must be 'left' or 'right'")


# -- class partition and reduction ------------------------------------------------

@dataclass(frozen=True)
class SharedClass:
    key: tuple
    left_indices: tuple[int, ...]
    right_indices: tuple[int, ...]


@dataclass(frozen=True)
class ClassPartition:
    left0: tuple[int, ...]
    right0: tuple[int, ...]
    shared: tuple[SharedClass, ...]


def partition_classes(lam: Sequence, omega: Sequence) -> ClassPartition:
    """Split node indices into those outside the other side's classes and
    per-class groups meeting both sides (sorted by (trace, norm))."""
    lkeys = [a.class_key() for a in lam]
    rkeys = [b.class_key() for b in omega]
    common = sorted(set(lkeys) & set(rkeys))
    shared = tuple(
        SharedClass(key,
                    tuple(n for n, k in enumerate(lkeys) if k == key),
                    tuple(n for n, k in enumerate(rkeys) if k == key))
        for key in common
    )
    left0 = tuple(n for n, k in enumerate(lkeys) if k not in common)
    right0 = tuple(n for n, k in enumerate(rkeys) if k not in common)
    return ClassPartition(left0, right0, shared)


@dataclass(frozen=True)
class ClassReduction:
    """Problem for g_s such that outer_left * g_s * outer_right meets the
    original conditions at ``left_indices`` / ``right_indices``."""

    problem: TwoSidedProblem
    outer_left: SkewPoly
    outer_right: SkewPoly
    left_indices: tuple[int, ...]
    right_indices: tuple[int, ...]

    def lift(self, g: SkewPoly) -> SkewPoly:
        return self.outer_left * g * self.outer_right


def class_reduce(problem: TwoSidedProblem, left_indices: Sequence[int],
                 right_indices: Sequence[int]) -> ClassReduction:
    """Move the conditions at the given (same-class) nodes through the minimal
    polynomials of all remaining nodes.

    Nodes become a~ = u^{-1} a u with u = P_{rest,l}^l(a) and b~ = w b w^{-1}
    with w = P_{rest,r}^r(b); targets are recovered through the
    lambda-transform inverses of the outer polynomials.
    """
    ring = problem.ring
    lam, omega = problem.left_nodes, problem.right_nodes
    chosen = [lam[n] for n in left_indices] + [omega[n] for n in right_indices]
    if chosen and any(not chosen[0].is_conjugate(x) for x in chosen[1:]):
        raise ValueError("class_reduce needs nodes from a single conjugacy class")
    lset, rset = set(left_indices), set(right_indices)
    outer_left = minimal_poly_left([a for n, a in enumerate(lam) if n not in lset], ring).poly
    outer_right = minimal_poly_right([b for n, b in enumerate(omega) if n not in rset], ring).poly
    left, right = [], []
    for n in left_indices:
        a, c = problem.left[n]
        u = outer_left.eval_left(a)
        if not u:
            raise ValueError(f"outer left polynomial vanishes at left node {n}")
        left.append((u.inverse() * a * u, _rho_coefficient(u, outer_right, a, c)))
    for n in right_indices:
        b, d = problem.right[n]
        w = outer_right.eval_right(b)
        if not w:
            raise ValueError(f"outer right polynomial vanishes at right node {n}")
        right.append((w * b * w.inverse(), _gamma_coefficient(outer_left, w, b, d)))
    reduced = TwoSidedProblem(tuple(left), tuple(right))
    return ClassReduction(reduced, outer_left, outer_right, tuple(left_indices), tuple(right_indices))


@dataclass(frozen=True)
class LagrangeDecomposition:
    poly: SkewPoly
    left_pieces: dict = field(default_factory=dict)   # left index -> piece
    right_pieces: dict = field(default_factory=dict)  # right index -> piece
    class_pieces: dict = field(default_factory=dict)  # class key -> piece
    class_families: dict = field(default_factory=dict)  # class key -> reduced family

    @property
    def solved(self) -> bool:
        return True


def generalized_decomposition(problem: TwoSidedProblem) -> LagrangeDecomposition | Inconsistent:
    """Solution of degree < n+k split into per-node and per-class pieces."""
    ring = problem.ring
    lam, omega = problem.left_nodes, problem.right_nodes
    if minimal_poly_left(lam, ring).degree != len(lam):
        raise PDependentError("left node set is not P-independent; reduce it first (CLI: run with --reduce)")
    if minimal_poly_right(omega, ring).degree != len(omega):
        raise PDependentError("right node set is not P-independent; reduce it first (CLI: run with --reduce)")
    part = partition_classes(lam, omega)
    P_left = minimal_poly_left(lam, ring).poly
    P_right = minimal_poly_right(omega, ring).poly
    total = SkewPoly.zero(ring)
    left_pieces, right_pieces, class_pieces, families = {}, {}, {}, {}
    for i in part.left0:
        p = minimal_poly_left(lam[:i] + lam[i + 1:], ring).poly
        rho = _rho_coefficient(p.eval_left(lam[i]), P_right, lam[i], problem.left_values[i])
        piece = p * rho * P_right
        left_pieces[i] = piece
        total = total + piece
    for j in part.right0:
        q = minimal_poly_right(omega[:j] + omega[j + 1:], ring).poly
        gamma = _gamma_coefficient(P_left, q.eval_right(omega[j]), omega[j], problem.right_values[j])
        piece = P_left * (gamma * q)
        right_pieces[j] = piece
        total = total + piece
    for sc in part.shared:
        red = class_reduce(problem, sc.left_indices, sc.right_indices)
        fam = solve_two_sided(red.problem)
        if isinstance(fam, Inconsistent):
            i, j = fam.witness
            pair = (sc.left_indices[i], sc.right_indices[j])
            return Inconsistent(sc.key, f"conjugacy class with trace {sc.key[0]} and norm {sc.key[1]} is "
                                        f"inconsistent at left condition {pair[0]} and right condition {pair[1]}")
        piece = red.lift(fam.base)
        class_pieces[sc.key] = piece
        families[sc.key] = fam
        total = total + piece
    return LagrangeDecomposition(total, left_pieces, right_pieces, class_pieces, families)


def generalized_lagrange(problem: TwoSidedProblem) -> SkewPoly | Inconsistent:
    res = generalized_decomposition(problem)
    return res if isinstance(res, Inconsistent) else res.poly


def generalized_family(problem: TwoSidedProblem) -> TwoSidedFamily | Inconsistent:
    """The generalized solution together with the homogeneous data of the full problem."""
    res = generalized_decomposition(problem)
    if isinstance(res, Inconsistent):
        return res
    fam = solve_two_sided(problem)
    if isinstance(fam, Inconsistent):  # pragma: no cover - per-class checks already passed
        return fam
    return TwoSidedFamily(res.poly, fam.homogeneous_basis, fam.left_modulus, fam.right_modulus)
