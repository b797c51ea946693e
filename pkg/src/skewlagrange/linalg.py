"""Exact linear algebra over Q: row reduction, nullspaces, affine solution sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


def rref(matrix: Sequence[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of ``matrix`` restricted to its first ``ncols`` columns.

    Extra trailing columns (an augmented right-hand side) are carried along but
    never chosen as pivots. Returns the nonzero rows and their pivot columns.
    """
    rows = [[x if isinstance(x, Fraction) else Fraction(x) for x in row] for row in matrix]
    pivots: list[int] = []
    nrows = len(rows)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        lead = prow[c]
        if lead != 1:
            prow = [x / lead if x else x for x in prow]
            rows[r] = prow
        support = [(j, x) for j, x in enumerate(prow) if x]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            factor = row[c]
            if factor:
                for j, x in support:
                    row[j] -= factor * x
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rank(matrix: Sequence[Sequence], ncols: int) -> int:
    return len(rref(matrix, ncols)[1])


def nullspace(matrix: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of {x : matrix @ x = 0}, one vector per free column."""
    rows, pivots = rref(matrix, ncols)
    return _free_basis(rows, pivots, ncols)


def _free_basis(rows: list[list[Fraction]], pivots: list[int], ncols: int) -> list[Vector]:
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, p in zip(rows, pivots):
            v[p] = -row[free]
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class AffineSolutionSet:
    """All solutions of a linear system: ``particular + span(nullspace_basis)``.

    An inconsistent system has ``particular is None``.
    """

    particular: Vector | None
    nullspace_basis: tuple[Vector, ...] = ()

    @property
    def is_empty(self) -> bool:
        return self.particular is None

    @property
    def dimension(self) -> int | None:
        return None if self.particular is None else len(self.nullspace_basis)

    def contains(self, v: Sequence) -> bool:
        if self.particular is None:
            return False
        diff = [Fraction(a) - b for a, b in zip(v, self.particular)]
        return span_contains(self.nullspace_basis, diff)


@dataclass
class LinearSystem:
    """Rational linear system ``matrix @ x = rhs`` assembled row by row."""

    ncols: int
    matrix: list[list[Fraction]] = field(default_factory=list)
    rhs: list[Fraction] = field(default_factory=list)

    def add_row(self, row: Sequence, value=0) -> None:
        if len(row) != self.ncols:
            raise ValueError(f"row has {len(row)} entries, expected {self.ncols}")
        self.matrix.append([Fraction(x) for x in row])
        self.rhs.append(Fraction(value))

    def add_rows(self, rows: Iterable[Sequence], values: Iterable) -> None:
        for row, value in zip(rows, values):
            self.add_row(row, value)

    def solve(self) -> AffineSolutionSet:
        return solve_affine(self.matrix, self.rhs, self.ncols)

    def residual(self, x: Sequence) -> list[Fraction]:
        return [sum((a * b for a, b in zip(row, x)), Fraction(0)) - r
                for row, r in zip(self.matrix, self.rhs)]


def solve_affine(matrix: Sequence[Sequence], rhs: Sequence, ncols: int) -> AffineSolutionSet:
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = rref(augmented, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return AffineSolutionSet(None, ())
    particular = [Fraction(0)] * ncols
    for row, p in zip(rows, pivots):
        particular[p] = row[ncols]
    return AffineSolutionSet(tuple(particular), tuple(_free_basis(rows, pivots, ncols)))


def span_contains(basis: Sequence[Sequence], v: Sequence) -> bool:
    """True iff ``v`` lies in the Q-span of ``basis``."""
    if all(x == 0 for x in v):
        return True
    if not basis:
        return False
    n = len(v)
    return rank(list(basis) + [list(v)], n) == rank(basis, n)


def mat_vec(m: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in m]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols] for row in a]
