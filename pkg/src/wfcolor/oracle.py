"""Brute-force cross-checks used by the test suite.  Correctness over speed:
nothing here shares code with the solver paths it verifies."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import factorial

import numpy as np

from .coloring import UNCOLORED
from .graph import Graph


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 12
    max_orderings: int = factorial(8)  # full enumeration up to 8 vertices

    def __post_init__(self) -> None:
        if self.max_vertices < 1 or self.max_orderings < 1:
            raise ValueError("budget caps must be positive")


class BudgetExceededError(ValueError):
    """Exhaustive enumeration would exceed the configured budget."""


def best_greedy_ordering_k(g: Graph, budget: OracleBudget = OracleBudget()) -> int:
    """Minimum color count of first-fit greedy over every vertex ordering.

    Some ordering always achieves the chromatic number, so a complete
    enumeration returns exactly that.  Uses its own inline greedy so it stays
    independent of the library's colorers.
    """
    n = g.n
    if factorial(n) > budget.max_orderings:
        raise BudgetExceededError(
            f"{n}! orderings exceed the budget of {budget.max_orderings}")
    if n == 0:
        return 0
    adj = [g.neighbors(v).tolist() for v in range(n)]
    col = [0] * n
    best = n + 1
    for perm in permutations(range(n)):
        hi = 0
        for v in perm:
            taken = 0
            for w in adj[v]:
                taken |= 1 << col[w]
            c = 1
            while taken >> c & 1:
                c += 1
            col[v] = c
            if c > hi:
                hi = c
        if hi < best:
            best = hi
            if best == 1:
                break
        for v in perm:
            col[v] = 0
    return best


def naive_propagate(g: Graph, colors: np.ndarray, m: int, v: int):
    """Reference re-implementation of the solver's domain cascade.

    Instead of incremental bookkeeping it recomputes every uncolored
    vertex's domain from scratch (all m colors minus the colors of colored
    neighbors) after each forced coloring, taking forced unit domains in
    lowest-id order until none remain.  Returns (colors, domains) at the
    fixed point, or None as the restart signal when a domain empties.

    The final state is order-independent, so this must agree exactly with
    the stack-based cascade started at v.
    """
    if m < 1:
        raise ValueError("need at least one color")
    if colors[v] == UNCOLORED:
        raise ValueError(f"vertex {v} is not colored")
    colors = np.array(colors, dtype=np.int32, copy=True)
    full = set(range(1, m + 1))
    while True:
        domains: list[set[int] | None] = [None] * g.n
        forced = -1
        for u in range(g.n):
            if colors[u] != UNCOLORED:
                continue
            dom = full - {int(colors[w]) for w in g.neighbors(u)
                          if colors[w] != UNCOLORED}
            if not dom:
                return None
            domains[u] = dom
            # a unit domain counts as forced only once a neighbor's color
            # has actually been struck from it; with m == 1 every domain
            # starts as a unit and no removal can have happened
            if len(dom) == 1 and m >= 2 and forced == -1:
                forced = u
        if forced == -1:
            return colors, domains
        colors[forced] = domains[forced].pop()
