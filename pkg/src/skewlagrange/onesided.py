"""One-sided Lagrange interpolation: f^l(a_i) = c_i or f^r(b_i) = d_i."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .common import Inconsistent, PDependentError, check_distinct
from .ideals import minimal_poly, minimal_poly_left, minimal_poly_right
from .linalg import solve_affine
from .poly import CentralPoly, SkewPoly
from .scalars import Quaternion

SIDES = ("left", "right")


@dataclass(frozen=True)
class OneSidedProblem:
    side: str
    conditions: tuple[tuple[object, object], ...]

    def __post_init__(self) -> None:
        if self.side not in SIDES:
            raise ValueError(f"side must be 'left' or 'right', got {self.side!r}")
        conds = tuple((a, c) for a, c in self.conditions)
        ring = type(conds[0][0]) if conds else Quaternion
        object.__setattr__(self, "conditions", tuple((a, _coerce(c, ring)) for a, c in conds))
        check_distinct(self.nodes, f"{self.side} nodes")

    @classmethod
    def from_lists(cls, side: str, nodes: Sequence, values: Sequence) -> OneSidedProblem:
        if len(nodes) != len(values):
            raise ValueError("nodes and values differ in length")
        return cls(side, tuple(zip(nodes, values)))

    @property
    def nodes(self) -> list:
        return [a for a, _ in self.conditions]

    @property
    def values(self) -> list:
        return [c for _, c in self.conditions]

    @property
    def ring(self) -> type:
        return type(self.conditions[0][0]) if self.conditions else Quaternion

    def subproblem(self, indices: Sequence[int]) -> OneSidedProblem:
        return OneSidedProblem(self.side, tuple(self.conditions[n] for n in indices))

    def residuals(self, f: SkewPoly) -> list:
        ev = f.eval_left if self.side == "left" else f.eval_right
        return [ev(a) - c for a, c in self.conditions]

    def is_solved_by(self, f: SkewPoly) -> bool:
        return not any(self.residuals(f))


@dataclass(frozen=True)
class InterpolationFamily:
    """particular + modulus_left*h (+ g*modulus_right) + span(homogeneous_basis)."""

    particular: SkewPoly
    modulus_left: SkewPoly | None = None
    modulus_right: SkewPoly | None = None
    homogeneous_basis: tuple[SkewPoly, ...] = field(default_factory=tuple)

    def member(self, h: SkewPoly | None = None, params: Sequence = ()) -> SkewPoly:
        f = self.particular
        for lam, b in zip(params, self.homogeneous_basis):
            f = f + b * lam
        if h is not None:
            if self.modulus_left is not None and self.modulus_right is not None:
                f = f + self.modulus_left * h * self.modulus_right
            elif self.modulus_left is not None:
                f = f + self.modulus_left * h
            elif self.modulus_right is not None:
                f = f + h * self.modulus_right
        return f


@dataclass(frozen=True)
class Reduced:
    problem: OneSidedProblem
    basis_indices: tuple[int, ...]

    @property
    def solved(self) -> bool:
        return True


def _as_problem(side: str, problem_or_nodes, values) -> OneSidedProblem:
    if isinstance(problem_or_nodes, OneSidedProblem):
        if problem_or_nodes.side != side:
            raise ValueError(f"expected a {side} problem, got {problem_or_nodes.side}")
        return problem_or_nodes
    return OneSidedProblem.from_lists(side, list(problem_or_nodes), list(values))


def _dependent_error(side: str) -> PDependentError:
    return PDependentError(
        f"{side} node set is not P-independent; run consistency_reduce "
        "(CLI: run with --reduce) to pass to a P-basis"
    )


def lagrange_left(problem_or_nodes, values: Sequence | None = None) -> SkewPoly:
    """Unique f of degree < n with f^l(a_i) = c_i: f = sum p_i p_i^l(a_i)^{-1} c_i,
    where p_i is the left minimal polynomial of the other nodes."""
    p = _as_problem("left", problem_or_nodes, values)
    ring = p.ring
    nodes = p.nodes
    f = SkewPoly.zero(ring)
    for n, (a, c) in enumerate(p.conditions):
        pi = minimal_poly_left(nodes[:n] + nodes[n + 1:], ring).poly
        v = pi.eval_left(a)
        if not v:
            raise _dependent_error("left")
        if c:
            f = f + pi * (v.inverse() * _coerce(c, ring))
    return f


def lagrange_right(problem_or_nodes, values: Sequence | None = None) -> SkewPoly:
    """Unique f of degree < k with f^r(b_i) = d_i: f = sum d_i q_i^r(b_i)^{-1} q_i."""
    p = _as_problem("right", problem_or_nodes, values)
    ring = p.ring
    nodes = p.nodes
    f = SkewPoly.zero(ring)
    for n, (b, d) in enumerate(p.conditions):
        qi = minimal_poly_right(nodes[:n] + nodes[n + 1:], ring).poly
        w = qi.eval_right(b)
        if not w:
            raise _dependent_error("right")
        if d:
            f = f + (_coerce(d, ring) * w.inverse()) * qi
    return f


def _coerce(c, ring):
    if isinstance(c, ring):
        return c
    return ring.from_rational(c)


def lagrange(problem: OneSidedProblem) -> SkewPoly:
    return lagrange_left(problem) if problem.side == "left" else lagrange_right(problem)


def one_sided_family(problem: OneSidedProblem) -> InterpolationFamily:
    """All solutions: f_l + P_l*h (left) or f_r + h*P_r (right)."""
    f = lagrange(problem)
    modulus = minimal_poly(problem.nodes, problem.side, problem.ring).poly
    if problem.side == "left":
        return InterpolationFamily(f, modulus_left=modulus)
    return InterpolationFamily(f, modulus_right=modulus)


def group_by_class(nodes: Sequence) -> dict[tuple, list[int]]:
    """Indices grouped by conjugacy class, classes in order of first appearance."""
    groups: dict[tuple, list[int]] = {}
    for n, a in enumerate(nodes):
        groups.setdefault(a.class_key(), []).append(n)
    return groups


def consistency_reduce(problem: OneSidedProblem) -> Reduced | Inconsistent:
    """Pass to a P-basis, checking that the dropped conditions are implied.

    Dependence only occurs inside a conjugacy class, so each class is handled
    alone: its P-basis (earliest nodes kept) determines the values at the
    remaining nodes of the class, which must match the prescribed ones.
    """
    ring = problem.ring
    nodes, values = problem.nodes, problem.values
    keep: list[int] = []
    violations: list[tuple[int, object]] = []
    for idx in group_by_class(nodes).values():
        sub = [nodes[n] for n in idx]
        basis = [idx[t] for t in minimal_poly(sub, problem.side, ring).basis_indices]
        keep.extend(basis)
        if len(basis) == len(idx):
            continue
        f = lagrange(problem.subproblem(basis))
        ev = f.eval_left if problem.side == "left" else f.eval_right
        for n in idx:
            if n in basis:
                continue
            forced = ev(nodes[n])
            if forced != values[n]:
                violations.append((n, forced))
    if violations:
        n, forced = min(violations, key=lambda t: t[0])
        return Inconsistent(n, f"condition {n} prescribes {values[n]} but the P-basis of its "
                               f"conjugacy class forces {forced}")
    keep.sort()
    return Reduced(problem.subproblem(keep), tuple(keep))


def _same_class_basis(nodes: Sequence, side: str) -> None:
    if not nodes:
        raise ValueError("empty basis")
    a0 = nodes[0]
    if any(not a0.is_conjugate(a) for a in nodes[1:]):
        raise ValueError("basis nodes are not in one conjugacy class")
    kappa = a0.class_data().kappa
    res = minimal_poly(list(nodes), side, type(a0))
    if res.degree != len(nodes) or len(nodes) != kappa:
        raise ValueError(f"nodes do not form a {side} P-basis of their conjugacy class "
                         f"(need {kappa} P-independent nodes)")


def extend_in_class(nodes: Sequence, values: Sequence, target, side: str = "left",
                    basis_side: str = "left"):
    """Value at ``target`` shared by every f matching the basis data.

    ``nodes`` must be a ``basis_side`` P-basis of one conjugacy class V carrying
    f^l (or f^r) values; the result is f^l(target) or f^r(target) according to
    ``side``, computed from the one-sided Lagrange polynomial of the basis data.
    """
    if side not in SIDES or basis_side not in SIDES:
        raise ValueError("side must be 'left' or 'right'")
    if len(nodes) != len(values):
        raise ValueError("nodes and values differ in length")
    _same_class_basis(nodes, basis_side)
    if not nodes[0].is_conjugate(target):
        raise ValueError(f"target {target} is not in the conjugacy class of the basis")
    f = lagrange(OneSidedProblem.from_lists(basis_side, nodes, values))
    return f.eval_left(target) if side == "left" else f.eval_right(target)


def two_point_extension(g1, f1, g2, f2, g, side: str = "left"):
    """Closed two-point forms for quaternions: from left values f1, f2 at g1, g2
    (same class) get f^l(g) or f^r(g)."""
    if side == "left":
        return (g - g2) * (g1 - g2).inverse() * f1 + (g - g1) * (g2 - g1).inverse() * f2
    u = (g1 - g2).inverse()
    return u * f1 * g - g2 * u * f1 + g1 * u * f2 - u * f2 * g


def vandermonde_bottom_row(nodes: Sequence) -> list:
    """Row v with sum_i v_i a_i^j = 0 for j < n-1 and = 1 for j = n-1."""
    if not nodes:
        return []
    ring = type(nodes[0])
    dim = ring.DIM
    n = len(nodes)
    powers = []
    for a in nodes:
        row, x = [], ring.one()
        for _ in range(n):
            row.append(x)
            x = x * a
        powers.append(row)
    matrix, rhs = [], []
    for j in range(n):
        blocks = [powers[i][j].right_matrix() for i in range(n)]
        for r in range(dim):
            matrix.append([x for blk in blocks for x in blk[r]])
        target = ring.one() if j == n - 1 else ring.zero()
        rhs.extend(target.coords())
    sol = solve_affine(matrix, rhs, n * dim)
    if sol.is_empty or sol.nullspace_basis:
        raise PDependentError("Vandermonde matrix is singular: nodes are not left P-independent")
    v = sol.particular
    return [ring.from_coords(v[t * dim:(t + 1) * dim]) for t in range(n)]


def classical_lagrange(nodes: Sequence, values: Sequence) -> CentralPoly:
    """Commutative formula sum c_i prod_{j != i} (z - x_j)/(x_i - x_j) over Q."""
    xs = [Fraction(x) for x in nodes]
    if len(set(xs)) != len(xs):
        raise ValueError("nodes must be distinct")
    f = CentralPoly()
    for i, (xi, ci) in enumerate(zip(xs, values)):
        term = CentralPoly([Fraction(ci)])
        for j, xj in enumerate(xs):
            if j != i:
                term = term * CentralPoly([-xj / (xi - xj), 1 / (xi - xj)])
        f = f + term
    return f
