"""Closed-form solution of the Sylvester equation a*x - x*b = g over a division ring.

With X the minimal central polynomial of a:

* b not conjugate to a: the unique solution is -((L_a X) g)^r(b) * X(b)^{-1};
* b conjugate to a: solvable iff ((L_a X) g)^r(b) = 0, and then the solutions
  are x0 + (intertwiners of a and b), where x0 comes from a derivative
  expansion of L_a X (see ``sylvester_particular``).
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .linalg import span_contains
from .poly import SkewPoly, minimal_central_polynomial
from .scalars import reduce_modulo_span


class Status(enum.Enum):
    UNIQUE = "unique"
    AFFINE = "affine"
    UNSOLVABLE = "unsolvable"


@dataclass(frozen=True)
class SylvesterSolution:
    status: Status
    particular: object | None = None
    basis: tuple = field(default_factory=tuple)

    @property
    def solvable(self) -> bool:
        return self.status is not Status.UNSOLVABLE

    def contains(self, x) -> bool:
        """True iff x lies in particular + span(basis)."""
        if not self.solvable:
            return False
        diff = (x - self.particular).coords()
        return span_contains([v.coords() for v in self.basis], diff)

    def canonical(self) -> SylvesterSolution:
        """Same solution set with the particular reduced against the basis.

        For the conjugate pair (i, j) with g = i - j this gives particular 1 and
        basis 1 - k, i + j.
        """
        if self.status is not Status.AFFINE:
            return self
        ring = type(self.particular)
        coords = reduce_modulo_span(self.particular.coords(), [v.coords() for v in self.basis], ring.DIM)
        return SylvesterSolution(self.status, ring.from_coords(coords), self.basis)


def _shifted_minpoly_times(a, g) -> SkewPoly:
    chi = minimal_central_polynomial(a).to_skew(type(a))
    return chi.shift_left(a) * g


def solvability_value(a, b, g):
    """((L_a X) g)^r(b); zero exactly when a conjugate pair's equation is solvable."""
    return _shifted_minpoly_times(a, g).eval_right(b)


def solvability_check(a, b, g) -> bool:
    if not a.is_conjugate(b):
        raise ValueError(f"{a} and {b} are not conjugate; the equation is always uniquely solvable")
    return not solvability_value(a, b, g)


def sylvester_particular(a, b, g):
    """Psi_{a,b}(g): the unique solution when a, b are not conjugate, otherwise
    the derivative-expansion particular solution (meaningful when solvable)."""
    ring = type(a)
    chi = minimal_central_polynomial(a)
    if not a.is_conjugate(b):
        value = _shifted_minpoly_times(a, g).eval_right(b)
        return -(value * chi(b).inverse())
    kappa = chi.degree
    if kappa <= 1:
        return ring.zero()
    total = ring.zero()
    a_pows = [ring.one()]
    b_pows = [ring.one()]
    for _ in range(kappa):
        a_pows.append(a_pows[-1] * a)
        b_pows.append(b_pows[-1] * b)
    for j in range(1, kappa):
        dj = chi.derivative(j + 1)(b)
        for i in range(j):
            coef = (-1) ** (i + j) * comb(j - 1, i)
            term = a_pows[i] * g * dj * b_pows[j - i - 1]
            total = total + term * Fraction(coef, factorial(j + 1))
    return total * chi.derivative(1)(b).inverse()


psi = sylvester_particular


def solve_sylvester(a, b, g) -> SylvesterSolution:
    if not a.is_conjugate(b):
        sol = SylvesterSolution(Status.UNIQUE, sylvester_particular(a, b, g), ())
    elif solvability_check(a, b, g):
        sol = SylvesterSolution(Status.AFFINE, sylvester_particular(a, b, g), tuple(a.intertwiners(b)))
    else:
        sol = SylvesterSolution(Status.UNSOLVABLE, None, ())
    if os.environ.get("SKEWLAGRANGE_DEBUG"):
        _cross_check(a, b, g, sol)
    return sol


def _cross_check(a, b, g, sol: SylvesterSolution) -> None:
    from .oracle import oracle_sylvester

    ref = oracle_sylvester(a, b, g)
    if ref.is_empty != (sol.status is Status.UNSOLVABLE):
        raise AssertionError(f"Sylvester status disagrees with the linear-algebra oracle for {a}, {b}, {g}")
    if sol.solvable:
        if a * sol.particular - sol.particular * b != g:
            raise AssertionError(f"Sylvester particular fails the equation for {a}, {b}, {g}")
        if len(sol.basis) != len(ref.nullspace_basis):
            raise AssertionError(f"intertwiner dimension disagrees with the oracle for {a}, {b}")


def sylvester_alternative(a, b, g):
    """Unique solution for non-conjugate a, b via the minimal polynomial of b:
    x = X_b(a)^{-1} * (g * L_b X_b)^l(a)."""
    if a.is_conjugate(b):
        raise ValueError("the alternative formula needs non-conjugate a, b")
    chi = minimal_central_polynomial(b)
    shifted = chi.to_skew(type(b)).shift_left(b)
    return chi(a).inverse() * (g * shifted).eval_left(a)


def batch_sylvester(lam: Sequence, omega: Sequence, c: Sequence, d: Sequence) -> list[list[SylvesterSolution]]:
    """Entry (i, j) solves a_i x - x b_j = c_i - d_j."""
    if len(lam) != len(c) or len(omega) != len(d):
        raise ValueError("node and value lists differ in length")
    return [[solve_sylvester(a, b, ci - dj) for b, dj in zip(omega, d)] for a, ci in zip(lam, c)]
