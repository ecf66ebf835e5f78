"""Brute-force path enumeration used as ground truth for the tables.

Paths are walked one step at a time by depth-first search. Nothing is
memoized, so each complete path is reached exactly once and the counts do
not depend on any recurrence.
"""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass

from .core import DomainError

DEFAULT_BUDGET = 10_000_000
BUDGET_ENV = "LATTICE_ORACLE_BUDGET"


class BudgetExceeded(RuntimeError):
    """The DFS needed more node expansions than allowed."""


class Step(enum.Enum):
    # declaration order is the lexicographic order of listed paths
    RIGHT = (0, 1)
    DOWN = (1, 0)
    DIAGONAL = (1, 1)

    @property
    def letter(self) -> str:
        return _LETTERS[self]


_LETTERS = {Step.RIGHT: "R", Step.DOWN: "D", Step.DIAGONAL: "X"}

HV = frozenset({Step.RIGHT, Step.DOWN})
HVD = frozenset({Step.RIGHT, Step.DOWN, Step.DIAGONAL})


class Constraint(enum.Enum):
    UNRESTRICTED = "none"
    SUBDIAGONAL = "subdiagonal"

    def allows(self, p: int, q: int) -> bool:
        return self is Constraint.UNRESTRICTED or q <= p


@dataclass(frozen=True)
class LatticePoint:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError(f"lattice point coordinates must be >= 0: {self}")


@dataclass(frozen=True)
class PathCount:
    target: LatticePoint
    steps: frozenset
    constraint: Constraint
    count: int


@dataclass(frozen=True)
class PathListing:
    paths: list[tuple[Step, ...]]
    truncated: bool


def _step_order(steps) -> list[Step]:
    steps = frozenset(steps)
    if steps not in (HV, HVD):
        raise ValueError("step set must be {RIGHT, DOWN} or {RIGHT, DOWN, DIAGONAL}")
    return [s for s in Step if s in steps]


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if not raw:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{BUDGET_ENV} must be a decimal integer, got {raw!r}") from None
    if value < 1:
        raise DomainError(f"{BUDGET_ENV} must be positive, got {value}")
    return value


def _as_point(target) -> LatticePoint:
    return target if isinstance(target, LatticePoint) else LatticePoint(*target)


def count_paths(target, steps=HV, constraint=Constraint.UNRESTRICTED, budget=None) -> PathCount:
    target = _as_point(target)
    order = [s.value for s in _step_order(steps)]
    budget = default_budget() if budget is None else budget
    if budget < 1:
        raise ValueError("budget must be positive")
    tp, tq = target.p, target.q
    allows = constraint.allows

    count = 0
    expansions = 0
    if allows(0, 0):
        stack = [(0, 0)]
        while stack:
            p, q = stack.pop()
            expansions += 1
            if expansions > budget:
                raise BudgetExceeded(
                    f"more than {budget} expansions counting paths to ({tp}, {tq})"
                )
            if p == tp and q == tq:
                count += 1
                continue
            for dp, dq in order:
                np_, nq = p + dp, q + dq
                if np_ <= tp and nq <= tq and allows(np_, nq):
                    stack.append((np_, nq))
    return PathCount(target, frozenset(steps), constraint, count)


def list_paths(target, steps=HV, constraint=Constraint.UNRESTRICTED, max_paths: int = 100) -> PathListing:
    """Up to ``max_paths`` paths in lexicographic step order (R < D < X)."""
    if max_paths < 1:
        raise ValueError("max_paths must be >= 1")
    target = _as_point(target)
    order = _step_order(steps)
    tp, tq = target.p, target.q
    found: list[tuple[Step, ...]] = []
    truncated = False
    prefix: list[Step] = []

    def walk(p: int, q: int) -> bool:
        nonlocal truncated
        if p == tp and q == tq:
            if len(found) == max_paths:
                truncated = True
                return False
            found.append(tuple(prefix))
            return True
        for s in order:
            dp, dq = s.value
            np_, nq = p + dp, q + dq
            if np_ <= tp and nq <= tq and constraint.allows(np_, nq):
                prefix.append(s)
                keep_going = walk(np_, nq)
                prefix.pop()
                if not keep_going:
                    return False
        return True

    if constraint.allows(0, 0):
        walk(0, 0)
    return PathListing(found, truncated)


def path_string(path) -> str:
    return "".join(s.letter for s in path)


def replay(path) -> list[tuple[int, int]]:
    """Every visited point of ``path``, starting at the origin."""
    pts = [(0, 0)]
    for s in path:
        p, q = pts[-1]
        pts.append((p + s.value[0], q + s.value[1]))
    return pts
