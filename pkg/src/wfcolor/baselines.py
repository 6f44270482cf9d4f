"""Reference constructive colorers: single-pass greedy, saturation-driven
greedy (DSatur), and recursive-largest-first (RLF)."""
from __future__ import annotations

from typing import Sequence

import numpy as np

from . import _kernels as _k
from .coloring import Coloring
from .graph import Graph
from .wfc import SolveResult

ORDERINGS = ("degree", "natural")
SATURATION_MODES = ("distinct", "count")
RLF_TIE_BREAKS = ("random", "lowest-id")


def resolve_order(g: Graph, order: str | Sequence[int]) -> np.ndarray:
    """Vertex ordering as an int32 array: "degree" (highest first, lowest id
    on ties), "natural" (0..n-1), or an explicit permutation."""
    if isinstance(order, str):
        if order == "natural":
            return np.arange(g.n, dtype=np.int32)
        if order == "degree":
            degrees = g.degrees
            return np.array(sorted(range(g.n), key=lambda v: (-degrees[v], v)),
                            dtype=np.int32)
        raise ValueError(f"unknown ordering {order!r}; use one of {ORDERINGS}")
    arr = np.asarray(list(order), dtype=np.int32)
    if arr.shape[0] != g.n or not np.array_equal(np.sort(arr), np.arange(g.n)):
        raise ValueError("explicit ordering must be a permutation of 0..n-1")
    return arr


def iterated_greedy(g: Graph, order: str | Sequence[int] = "degree") -> SolveResult:
    """Color vertices in a static order, each with the smallest color absent
    from its colored neighborhood.  One pass, no backtracking; never uses
    more than max_degree + 1 colors."""
    perm = resolve_order(g, order)
    colors = np.zeros(g.n, dtype=np.int32)
    mark = np.zeros(max(g.max_degree, 1) + 2, dtype=np.int32)
    _k.greedy_assign(g.indptr, g.indices, perm, colors, mark)
    coloring = Coloring(colors)
    return SolveResult(coloring=coloring, k=coloring.k)


def dsatur(g: Graph, saturation: str = "distinct") -> SolveResult:
    """Repeatedly color the uncolored vertex of maximum saturation with its
    smallest feasible color; ties go to the highest degree then lowest id.

    saturation="distinct" counts distinct colors in the colored neighborhood
    (the established rule); "count" counts colored neighbors instead.
    """
    if saturation not in SATURATION_MODES:
        raise ValueError(f"saturation must be one of {SATURATION_MODES}")
    colors = np.zeros(g.n, dtype=np.int32)
    if g.n:
        cap = max(g.max_degree, 1) + 2
        adj_used = np.zeros((g.n, cap), dtype=np.uint8)
        sat = np.zeros(g.n, dtype=np.int32)
        _k.dsatur_assign(g.indptr, g.indices, g.degrees, colors,
                         adj_used, sat, saturation == "count")
    coloring = Coloring(colors)
    return SolveResult(coloring=coloring, k=coloring.k)


def rlf(g: Graph, seed: int = 0, tie_break: str = "random") -> SolveResult:
    """Build color classes one independent set at a time: seed each class
    with a highest-degree uncolored vertex, then grow it with the eligible
    vertex having the most neighbors among the parked ones.  Ties are a
    seeded-uniform pick by default; tie_break="lowest-id" makes runs
    seed-independent."""
    if tie_break not in RLF_TIE_BREAKS:
        raise ValueError(f"tie_break must be one of {RLF_TIE_BREAKS}")
    colors = np.zeros(g.n, dtype=np.int32)
    if g.n:
        in_w = np.zeros(g.n, dtype=np.uint8)
        w_count = np.zeros(g.n, dtype=np.int32)
        _k.rlf_assign(g.indptr, g.indices, g.degrees, colors, in_w, w_count,
                      tie_break == "random", _k.seeded_rng_state(seed))
    coloring = Coloring(colors)
    return SolveResult(coloring=coloring, k=coloring.k)
