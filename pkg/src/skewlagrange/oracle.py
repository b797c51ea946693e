"""Brute-force reference solvers and seeded random instances.

Everything here goes through coordinates over Q: a polynomial of degree < N is
a vector of N*DIM rationals, and each condition contributes DIM linear
equations. Nothing in this module uses the closed-form interpolation formulas.
"""

from __future__ import annotations

import os
import random
from fractions import Fraction
from typing import Iterator, Sequence

from .linalg import AffineSolutionSet, LinearSystem, mat_mul, rank, solve_affine
from .poly import SkewPoly
from .scalars import Quaternion


def _powers(a, n: int) -> list:
    out, x = [], type(a).one()
    for _ in range(n):
        out.append(x)
        x = x * a
    return out


def _mat_add(a, b):
    return [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(a, b)]


def _zero_block(dim: int):
    return [[Fraction(0)] * dim for _ in range(dim)]


def _rows_from_blocks(blocks: Sequence, dim: int) -> list[list[Fraction]]:
    return [[x for blk in blocks for x in blk[r]] for r in range(dim)]


def left_eval_rows(a, n_coeffs: int) -> list[list[Fraction]]:
    """Rows of f -> f^l(a) = sum a^j f_j."""
    return _rows_from_blocks([p.left_matrix() for p in _powers(a, n_coeffs)], type(a).DIM)


def right_eval_rows(a, n_coeffs: int) -> list[list[Fraction]]:
    """Rows of f -> f^r(a) = sum f_j a^j."""
    return _rows_from_blocks([p.right_matrix() for p in _powers(a, n_coeffs)], type(a).DIM)


def shift_rows(a, b, n_coeffs: int) -> list[list[Fraction]]:
    """Rows of f -> (L_a f)^r(b) = sum_{i+j = t-1} a^i f_t b^j."""
    dim = type(a).DIM
    ap = [p.left_matrix() for p in _powers(a, n_coeffs)]
    bp = [p.right_matrix() for p in _powers(b, n_coeffs)]
    blocks = [_zero_block(dim)]
    for t in range(1, n_coeffs):
        acc = _zero_block(dim)
        for i in range(t):
            acc = _mat_add(acc, mat_mul(ap[i], bp[t - 1 - i]))
        blocks.append(acc)
    return _rows_from_blocks(blocks, dim)


def poly_to_vector(f: SkewPoly, n_coeffs: int) -> list[Fraction]:
    out = []
    for j in range(n_coeffs):
        out.extend(f.coeff(j).coords())
    return out


def vector_to_poly(v: Sequence[Fraction], ring: type = Quaternion) -> SkewPoly:
    d = ring.DIM
    return SkewPoly([ring.from_coords(v[t:t + d]) for t in range(0, len(v), d)], ring)


def build_system(left: Sequence = (), right: Sequence = (), degree_bound: int = 0,
                 shift_conditions: Sequence = (), ring: type | None = None) -> LinearSystem:
    """Linear system in the coefficients of f (deg f < degree_bound) for
    f^l(a) = c over ``left``, f^r(b) = d over ``right`` and
    (L_a f)^r(b) = psi over ``shift_conditions`` given as (a, b, psi)."""
    if degree_bound < 0:
        raise ValueError("degree_bound must be nonnegative")
    if ring is None:
        items = [a for a, _ in left] + [b for b, _ in right] + [a for a, _, _ in shift_conditions]
        ring = type(items[0]) if items else Quaternion
    system = LinearSystem(degree_bound * ring.DIM)
    for a, c in left:
        system.add_rows(left_eval_rows(a, degree_bound), _coords(c, ring))
    for b, d in right:
        system.add_rows(right_eval_rows(b, degree_bound), _coords(d, ring))
    for a, b, psi in shift_conditions:
        system.add_rows(shift_rows(a, b, degree_bound), _coords(psi, ring))
    return system


def _coords(x, ring) -> tuple:
    return x.coords() if isinstance(x, ring) else ring.from_rational(x).coords()


def oracle_interpolate(problem, degree_bound: int, shift_conditions: Sequence = ()) -> AffineSolutionSet:
    """Exact affine set of coefficient vectors of all solutions with deg < degree_bound.

    ``problem`` is a TwoSidedProblem or a OneSidedProblem (anything exposing
    ``left``/``right`` or ``side``/``conditions``).
    """
    if hasattr(problem, "side"):
        left = problem.conditions if problem.side == "left" else ()
        right = problem.conditions if problem.side == "right" else ()
    else:
        left, right = problem.left, problem.right
    ring = getattr(problem, "ring", None)
    return build_system(left, right, degree_bound, shift_conditions, ring).solve()


def solution_polys(sol: AffineSolutionSet, ring: type = Quaternion) -> tuple[SkewPoly | None, list[SkewPoly]]:
    if sol.is_empty:
        return None, []
    return vector_to_poly(sol.particular, ring), [vector_to_poly(v, ring) for v in sol.nullspace_basis]


def oracle_sylvester(a, b, g) -> AffineSolutionSet:
    """All x with a x - x b = g, from the DIM x DIM system (L_a - R_b) x = g."""
    la, rb = a.left_matrix(), b.right_matrix()
    m = [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(la, rb)]
    return solve_affine(m, list(g.coords()), type(a).DIM)


def left_vandermonde_rank(nodes: Sequence) -> int:
    """Rank over Q of f -> (f^l(a))_a on polynomials of degree < len(nodes);
    it equals DIM * (degree of the left minimal polynomial)."""
    if not nodes:
        return 0
    n = len(nodes)
    rows = [r for a in nodes for r in left_eval_rows(a, n)]
    return rank(rows, n * type(nodes[0]).DIM)


def oracle_minimal_degree(nodes: Sequence, side: str = "left") -> int:
    """Smallest degree of a nonzero polynomial vanishing on ``nodes`` (on ``side``)."""
    if not nodes:
        return 0
    ring = type(nodes[0])
    builder = left_eval_rows if side == "left" else right_eval_rows
    for deg in range(1, len(nodes) + 1):
        # monic of degree deg: z^deg plus unknown lower coefficients
        rows, rhs = [], []
        for a in nodes:
            rows.extend(builder(a, deg))
            rhs.extend(-x for x in (a ** deg).coords())
        if not solve_affine(rows, rhs, deg * ring.DIM).is_empty:
            return deg
    return len(nodes)


# -- random instances --------------------------------------------------------------

class RandomInstances:
    """Deterministic generator of rationals, quaternions and node sets."""

    def __init__(self, seed: int | None = None, height: int = 10) -> None:
        self.seed = seed_from_env() if seed is None else seed
        self.height = height
        self.rng = random.Random(self.seed)

    def rational(self, height: int | None = None) -> Fraction:
        h = height or self.height
        return Fraction(self.rng.randint(-h, h), self.rng.randint(1, h))

    def integer(self, height: int | None = None) -> Fraction:
        h = height or self.height
        return Fraction(self.rng.randint(-h, h))

    def quaternion(self, height: int | None = None, integral: bool = False) -> Quaternion:
        draw = self.integer if integral else self.rational
        return Quaternion(*(draw(height) for _ in range(4)))

    def nonzero_quaternion(self, height: int | None = None, integral: bool = False) -> Quaternion:
        while True:
            q = self.quaternion(height, integral)
            if q:
                return q

    def noncentral_quaternion(self, height: int | None = None, integral: bool = False) -> Quaternion:
        while True:
            q = self.quaternion(height, integral)
            if not q.is_central():
                return q

    def conjugate(self, a, height: int | None = None, integral: bool = True):
        h = self.nonzero_quaternion(height, integral)
        return h * a * h.inverse()

    def conjugate_pair(self, height: int | None = None) -> tuple[Quaternion, Quaternion]:
        a = self.quaternion(height, integral=True)
        return a, self.conjugate(a, height)

    def poly(self, degree: int, height: int | None = None, integral: bool = True) -> SkewPoly:
        return SkewPoly([self.quaternion(height, integral) for _ in range(degree + 1)])

    def node_set(self, n: int, conjugate_rate: float = 0.4, height: int | None = None) -> list[Quaternion]:
        """Distinct nodes, with a share of them conjugate to earlier ones."""
        out: list[Quaternion] = []
        while len(out) < n:
            if out and self.rng.random() < conjugate_rate:
                q = self.conjugate(self.rng.choice(out), 3)
            else:
                q = self.quaternion(height, integral=self.rng.random() < 0.7)
            if q not in out:
                out.append(q)
        return out

    def independent_set(self, n: int, side: str = "left", conjugate_rate: float = 0.4,
                        height: int | None = None) -> list[Quaternion]:
        """Rejection sampling until the set is P-independent on ``side``."""
        from .ideals import is_p_independent_left, is_p_independent_right

        test = is_p_independent_left if side == "left" else is_p_independent_right
        while True:
            s = self.node_set(n, conjugate_rate, height)
            if test(s):
                return s

    def choice(self, seq):
        return self.rng.choice(seq)

    def randint(self, a: int, b: int) -> int:
        return self.rng.randint(a, b)

    def random(self) -> float:
        return self.rng.random()


def seed_from_env(default: int = 0) -> int:
    raw = os.environ.get("SKEWLAGRANGE_SEED")
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"SKEWLAGRANGE_SEED must be a decimal integer, got {raw!r}") from None


def stream(seed: int, kind: str = "quaternion", count: int = 10) -> Iterator:
    gen = RandomInstances(seed)
    make = {"quaternion": gen.quaternion, "rational": gen.rational}[kind]
    for _ in range(count):
        yield make()
