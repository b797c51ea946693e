"""Two-sided interpolation: f^l(a_i) = c_i together with f^r(b_j) = d_j.

The solver augments the problem with the values psi_ij = (L_{a_i} f)^r(b_j),
which must solve a_i psi - psi b_j = c_i - d_j. Given psi the low-degree
solution is unique; letting psi run over all Sylvester solutions gives every
solution of degree < n + k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .common import Inconsistent, PDependentError, check_distinct
from .ideals import minimal_poly_left, minimal_poly_right
from .onesided import extend_in_class, group_by_class, lagrange_left, lagrange_right
from .poly import SkewPoly
from .scalars import Quaternion
from .sylvester import Status, solve_sylvester, sylvester_particular


class SylvesterMismatchError(ValueError):
    """A supplied psi_ij does not solve a_i x - x b_j = c_i - d_j."""

    def __init__(self, pair: tuple[int, int]) -> None:
        super().__init__(f"psi{pair} does not satisfy the Sylvester equation for pair {pair}")
        self.pair = pair


@dataclass(frozen=True)
class TwoSidedProblem:
    left: tuple[tuple[object, object], ...] = ()
    right: tuple[tuple[object, object], ...] = ()

    def __post_init__(self) -> None:
        ring = self.ring
        object.__setattr__(self, "left", tuple((a, _lift(c, ring)) for a, c in self.left))
        object.__setattr__(self, "right", tuple((b, _lift(d, ring)) for b, d in self.right))
        check_distinct(self.left_nodes, "left nodes")
        check_distinct(self.right_nodes, "right nodes")

    @classmethod
    def from_lists(cls, left_nodes: Sequence = (), left_values: Sequence = (),
                   right_nodes: Sequence = (), right_values: Sequence = ()) -> TwoSidedProblem:
        if len(left_nodes) != len(left_values) or len(right_nodes) != len(right_values):
            raise ValueError("nodes and values differ in length")
        return cls(tuple(zip(left_nodes, left_values)), tuple(zip(right_nodes, right_values)))

    @property
    def left_nodes(self) -> list:
        return [a for a, _ in self.left]

    @property
    def left_values(self) -> list:
        return [c for _, c in self.left]

    @property
    def right_nodes(self) -> list:
        return [b for b, _ in self.right]

    @property
    def right_values(self) -> list:
        return [d for _, d in self.right]

    @property
    def ring(self) -> type:
        for a, _ in self.left + self.right:
            return type(a)
        return Quaternion

    @property
    def size(self) -> int:
        return len(self.left) + len(self.right)

    def residuals(self, f: SkewPoly) -> tuple[list, list]:
        return ([f.eval_left(a) - c for a, c in self.left],
                [f.eval_right(b) - d for b, d in self.right])

    def is_solved_by(self, f: SkewPoly) -> bool:
        left, right = self.residuals(f)
        return not any(left) and not any(right)


@dataclass(frozen=True)
class TwoSidedFamily:
    """Solutions base + sum lambda_t basis_t (+ left_modulus * h * right_modulus)."""

    base: SkewPoly
    homogeneous_basis: tuple[SkewPoly, ...]
    left_modulus: SkewPoly
    right_modulus: SkewPoly

    @property
    def solved(self) -> bool:
        return True

    def member(self, params: Sequence = (), h: SkewPoly | None = None) -> SkewPoly:
        if len(params) > len(self.homogeneous_basis):
            raise ValueError(f"got {len(params)} parameters for {len(self.homogeneous_basis)} basis polynomials")
        f = self.base
        for lam, b in zip(params, self.homogeneous_basis):
            if lam:
                f = f + b * lam
        if h is not None:
            f = f + self.left_modulus * h * self.right_modulus
        return f


@dataclass(frozen=True)
class _Frame:
    """Minimal polynomials of both node sets with and without each node."""

    P_left: SkewPoly
    P_right: SkewPoly
    p: list            # p_i: left minimal polynomial of the left nodes without a_i
    p_val_inv: list    # p_i^l(a_i)^{-1}
    q: list            # q_j: right minimal polynomial of the right nodes without b_j
    q_val_inv: list    # q_j^r(b_j)^{-1}


def _frame(lam: Sequence, omega: Sequence, ring: type) -> _Frame:
    P_left = minimal_poly_left(lam, ring)
    P_right = minimal_poly_right(omega, ring)
    if P_left.degree != len(lam):
        raise PDependentError("left node set is not P-independent; reduce it first (CLI: run with --reduce)")
    if P_right.degree != len(omega):
        raise PDependentError("right node set is not P-independent; reduce it first (CLI: run with --reduce)")
    p, pv, q, qv = [], [], [], []
    for n, a in enumerate(lam):
        pi = minimal_poly_left(list(lam[:n]) + list(lam[n + 1:]), ring).poly
        p.append(pi)
        pv.append(pi.eval_left(a).inverse())
    for n, b in enumerate(omega):
        qj = minimal_poly_right(list(omega[:n]) + list(omega[n + 1:]), ring).poly
        q.append(qj)
        qv.append(qj.eval_right(b).inverse())
    return _Frame(P_left.poly, P_right.poly, p, pv, q, qv)


def _lift(x, ring):
    return x if isinstance(x, ring) else ring.from_rational(x)


def _check_psi(problem: TwoSidedProblem, psi) -> None:
    for i, (a, c) in enumerate(problem.left):
        for j, (b, d) in enumerate(problem.right):
            x = psi[i][j]
            if a * x - x * b != c - d:
                raise SylvesterMismatchError((i, j))


def solve_modified(problem: TwoSidedProblem, psi: Sequence[Sequence]) -> SkewPoly:
    """Unique f of degree < n+k with the prescribed left and right values and
    (L_{a_i} f)^r(b_j) = psi[i][j]."""
    ring = problem.ring
    _check_psi(problem, psi)
    lam, omega = problem.left_nodes, problem.right_nodes
    if not lam:
        return lagrange_right(omega, problem.right_values) if omega else SkewPoly.zero(ring)
    if not omega:
        return lagrange_left(lam, problem.left_values)
    fr = _frame(lam, omega, ring)
    f = SkewPoly.zero(ring)
    for i, c in enumerate(problem.left_values):
        if c:
            f = f + fr.p[i] * (fr.p_val_inv[i] * _lift(c, ring))
    inner = SkewPoly.zero(ring)
    for i in range(len(lam)):
        for j in range(len(omega)):
            x = psi[i][j]
            if x:
                inner = inner + (fr.p_val_inv[i] * x * fr.q_val_inv[j]) * fr.q[j]
    return f + fr.P_left * inner


def solve_modified_symmetric(problem: TwoSidedProblem, psi: Sequence[Sequence]) -> SkewPoly:
    """Same polynomial as ``solve_modified``, assembled from the right Lagrange
    polynomial: sum d_j q_j^r(b_j)^{-1} q_j + sum p_i p_i^l(a_i)^{-1} psi_ij q_j^r(b_j)^{-1} P_right."""
    ring = problem.ring
    _check_psi(problem, psi)
    lam, omega = problem.left_nodes, problem.right_nodes
    if not lam:
        return lagrange_right(omega, problem.right_values) if omega else SkewPoly.zero(ring)
    if not omega:
        return lagrange_left(lam, problem.left_values)
    fr = _frame(lam, omega, ring)
    f = SkewPoly.zero(ring)
    for j, d in enumerate(problem.right_values):
        if d:
            f = f + (_lift(d, ring) * fr.q_val_inv[j]) * fr.q[j]
    inner = SkewPoly.zero(ring)
    for i in range(len(lam)):
        for j in range(len(omega)):
            x = psi[i][j]
            if x:
                inner = inner + fr.p[i] * (fr.p_val_inv[i] * x * fr.q_val_inv[j])
    return f + inner * fr.P_right


def psi_matrix(problem: TwoSidedProblem) -> list[list] | Inconsistent:
    """Sylvester particular solutions psi_ij, or the first unsolvable pair (row-major)."""
    rows = []
    for i, (a, c) in enumerate(problem.left):
        row = []
        for j, (b, d) in enumerate(problem.right):
            sol = solve_sylvester(a, b, c - d)
            if sol.status is Status.UNSOLVABLE:
                return Inconsistent((i, j), f"left condition {i} and right condition {j} are in the same "
                                            "conjugacy class and contradict each other")
            row.append(sol.particular)
        rows.append(row)
    return rows


def solve_two_sided(problem: TwoSidedProblem) -> TwoSidedFamily | Inconsistent:
    """All solutions of degree < n+k, or the first inconsistent conjugate pair."""
    ring = problem.ring
    lam, omega = problem.left_nodes, problem.right_nodes
    fr = _frame(lam, omega, ring)
    psi = psi_matrix(problem)
    if isinstance(psi, Inconsistent):
        return psi
    base = solve_modified(problem, psi)
    basis = []
    for i, a in enumerate(lam):
        for j, b in enumerate(omega):
            for v in a.intertwiners(b):
                basis.append(fr.P_left * ((fr.p_val_inv[i] * v * fr.q_val_inv[j]) * fr.q[j]))
    return TwoSidedFamily(base, tuple(basis), fr.P_left, fr.P_right)


def two_sided_p_independent(lam: Sequence, omega: Sequence) -> bool:
    if len(set(lam)) != len(lam) or len(set(omega)) != len(omega):
        return False
    ring = type(lam[0]) if lam else type(omega[0]) if omega else Quaternion
    if minimal_poly_left(lam, ring).degree != len(lam):
        return False
    if minimal_poly_right(omega, ring).degree != len(omega):
        return False
    return not any(a.is_conjugate(b) for a in lam for b in omega)


@dataclass(frozen=True)
class ElementaryPieces:
    left: tuple[SkewPoly, ...]
    right: tuple[SkewPoly, ...]
    rho: tuple = ()
    gamma: tuple = ()


def elementary_pieces(problem: TwoSidedProblem) -> ElementaryPieces:
    """The pieces p_i rho_i P_right and P_left gamma_j q_j of the two-sided formula.

    rho_i = sum_j p_i^l(a_i)^{-1} Psi(a_i, b_j; c_i) q_j^r(b_j)^{-1}
    gamma_j = -sum_i p_i^l(a_i)^{-1} Psi(a_i, b_j; d_j) q_j^r(b_j)^{-1}
    With one side empty the pieces are those of the one-sided formula.
    """
    ring = problem.ring
    lam, omega = problem.left_nodes, problem.right_nodes
    if not two_sided_p_independent(lam, omega):
        raise PDependentError("the two-sided formula needs P-independent node sets in disjoint "
                              "conjugacy classes; use solve_two_sided or generalized_lagrange")
    fr = _frame(lam, omega, ring)
    cs = [_lift(c, ring) for c in problem.left_values]
    ds = [_lift(d, ring) for d in problem.right_values]
    rho, gamma = [], []
    for i, a in enumerate(lam):
        if not omega:
            rho.append(fr.p_val_inv[i] * cs[i])
            continue
        r = ring.zero()
        for j, b in enumerate(omega):
            r = r + fr.p_val_inv[i] * sylvester_particular(a, b, cs[i]) * fr.q_val_inv[j]
        rho.append(r)
    for j, b in enumerate(omega):
        if not lam:
            gamma.append(ds[j] * fr.q_val_inv[j])
            continue
        g = ring.zero()
        for i, a in enumerate(lam):
            g = g - fr.p_val_inv[i] * sylvester_particular(a, b, ds[j]) * fr.q_val_inv[j]
        gamma.append(g)
    left = tuple(fr.p[i] * rho[i] * fr.P_right for i in range(len(lam)))
    right = tuple(fr.P_left * (gamma[j] * fr.q[j]) for j in range(len(omega)))
    return ElementaryPieces(left, right, tuple(rho), tuple(gamma))


def lagrange_two_sided(problem: TwoSidedProblem) -> SkewPoly:
    """Unique f of degree < n+k for P-independent node sets in disjoint classes."""
    pieces = elementary_pieces(problem)
    f = SkewPoly.zero(problem.ring)
    for g in pieces.left + pieces.right:
        f = f + g
    return f


@dataclass(frozen=True)
class ForcedCondition:
    """A condition implied by a saturated conjugacy class on the other side."""

    side: str              # side of the implied condition
    index: int
    class_key: tuple
    prescribed: object
    forced: object

    @property
    def consistent(self) -> bool:
        return self.prescribed == self.forced


def within_class_redundancy(problem: TwoSidedProblem) -> list[ForcedCondition]:
    """Conditions fixed by other-side data that contains a P-basis of their class.

    Left data containing a left P-basis of a class V determines f^r on all of V,
    so every right condition in V is either redundant or contradictory; the
    mirror statement covers left conditions against right data.
    """
    ring = problem.ring
    report: list[ForcedCondition] = []
    directions = (
        ("left", problem.left, problem.right, minimal_poly_left, "right"),
        ("right", problem.right, problem.left, minimal_poly_right, "left"),
    )
    for basis_side, data, other, minpoly, target_side in directions:
        groups = group_by_class([a for a, _ in data])
        for key, idx in groups.items():
            nodes = [data[n][0] for n in idx]
            kappa = nodes[0].class_data().kappa
            res = minpoly(nodes, ring)
            if res.degree < kappa:
                continue
            basis = [idx[t] for t in res.basis_indices]
            bn = [data[n][0] for n in basis]
            bv = [_lift(data[n][1], ring) for n in basis]
            for m, (b, d) in enumerate(other):
                if b.class_key() != key:
                    continue
                forced = extend_in_class(bn, bv, b, side=target_side, basis_side=basis_side)
                report.append(ForcedCondition(target_side, m, key, _lift(d, ring), forced))
    report.sort(key=lambda r: (r.side, r.index))
    return report
