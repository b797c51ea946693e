"""Result types shared by the solvers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Inconsistent:
    """A problem with no solution.

    ``witness`` locates a violated condition: a 0-based index for one-sided
    problems, an ``(i, j)`` pair for two-sided ones, or a class key.
    """

    witness: Any
    reason: str = ""

    @property
    def solved(self) -> bool:
        return False


class PDependentError(ValueError):
    """Node set is not P-independent where a formula requires it."""


def check_distinct(nodes, what: str = "nodes") -> None:
    seen = set()
    for n, a in enumerate(nodes):
        if a in seen:
            raise ValueError(f"duplicate entry in {what} at index {n}: {a}")
        seen.add(a)
