"""Wave-function-collapse coloring: domain bookkeeping plus the
observe / collapse / propagate loop with restart-on-failure.

The solver keeps, for every uncolored vertex, the set of colors still open
to it (its domain) and the domain's size (its entropy).  Each iteration
picks an uncolored vertex of minimum entropy, fixes it to its smallest
available color, and strikes that color from neighboring domains, cascading
depth-first whenever a domain shrinks to a single color.  If any domain
empties, the whole attempt is abandoned and rerun with one more color.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as _k
from .coloring import Coloring
from .graph import Graph

RESTART = -1

TIE_BREAKS = ("degree", "random")
PROPAGATION_MODES = ("full", "gated")


@dataclass(frozen=True)
class SolveConfig:
    """Solver knobs.

    tie_break: how observe() breaks minimum-entropy ties - "degree" (highest
      degree, then lowest id) or "random" (seeded uniform pick).
    propagation: "full" strikes a new color from every uncolored neighbor;
      "gated" skips neighbors already down to one color, which can let a
      conflicting unit domain survive.  Kept for comparison runs only.
    seed: drives all randomized tie-breaking; fixed seed means identical runs.
    """

    tie_break: str = "degree"
    propagation: str = "full"
    seed: int = 0

    def __post_init__(self) -> None:
        if self.tie_break not in TIE_BREAKS:
            raise ValueError(f"tie_break must be one of {TIE_BREAKS}")
        if self.propagation not in PROPAGATION_MODES:
            raise ValueError(f"propagation must be one of {PROPAGATION_MODES}")


@dataclass(frozen=True)
class SolveResult:
    coloring: Coloring
    k: int
    restarts: int = 0
    final_m: int | None = None
    forced_colorings: int = 0


class DomainState:
    """Working state of one solve attempt at a fixed color budget m.

    Wraps the kernel arrays; see _kernels for their layout.  A state is
    owned by a single run and never shared.
    """

    def __init__(self, g: Graph, m: int, seed: int = 0):
        if m < 1:
            raise ValueError("need at least one color")
        n = g.n
        self.g = g
        self.m = m
        self.degrees = g.degrees
        self.avail = np.empty((n, m), dtype=np.uint8)
        self.entropy = np.empty(n, dtype=np.int32)
        self.colors = np.empty(n, dtype=np.int32)
        # entry pool: one slot per initial vertex plus one per possible
        # entropy decrement (at most one per directed edge)
        self.ent_v = np.empty(n + g.indices.shape[0] + 1, dtype=np.int32)
        self.ent_next = np.empty_like(self.ent_v)
        self.bkt_head = np.empty(m + 1, dtype=np.int32)
        self.meta = np.zeros(4, dtype=np.int64)
        self.stack = np.empty(max(n, 1), dtype=np.int32)
        self.rng_state = _k.seeded_rng_state(seed)
        _k.state_init(self.avail, self.entropy, self.colors,
                      self.ent_v, self.ent_next, self.bkt_head, self.meta)

    @classmethod
    def fresh(cls, g: Graph, m: int, seed: int = 0) -> "DomainState":
        return cls(g, m, seed=seed)

    @classmethod
    def from_domains(cls, g: Graph, m: int,
                     domains: dict[int, set[int]],
                     colors: dict[int, int] | None = None,
                     seed: int = 0) -> "DomainState":
        """Test helper: build a state with explicit per-vertex domains for
        uncolored vertices and explicit colors for the rest."""
        st = cls(g, m, seed=seed)
        colors = colors or {}
        for v, c in colors.items():
            if not 1 <= c <= m:
                raise ValueError(f"color {c} outside 1..{m}")
            st.colors[v] = c
        st.bkt_head[:] = -1
        st.meta[_k._ENTRIES] = 0
        st.meta[_k._FLOOR] = m
        st.meta[_k._FORCED] = 0
        st.meta[_k._COLORED] = len(colors)
        for v in range(g.n):
            if st.colors[v] != 0:
                st.entropy[v] = 0
                st.avail[v, :] = 0
                continue
            dom = domains.get(v, set(range(1, m + 1)))
            if not all(1 <= c <= m for c in dom):
                raise ValueError(f"domain of {v} outside 1..{m}")
            st.avail[v, :] = 0
            for c in dom:
                st.avail[v, c - 1] = 1
            st.entropy[v] = len(dom)
            _k.bucket_push(st.ent_v, st.ent_next, st.bkt_head, st.meta,
                           v, len(dom))
        return st

    # -- counters ---------------------------------------------------------

    @property
    def colored_count(self) -> int:
        return int(self.meta[_k._COLORED])

    @property
    def forced_count(self) -> int:
        return int(self.meta[_k._FORCED])

    def uncolored(self) -> list[int]:
        return np.nonzero(self.colors == 0)[0].tolist()

    def domain(self, v: int) -> set[int]:
        if self.colors[v] != 0:
            raise ValueError(f"vertex {v} is colored")
        return {c + 1 for c in np.nonzero(self.avail[v])[0]}

    def domains(self) -> list[set[int] | None]:
        """Per-vertex domain sets; None for colored vertices."""
        return [None if self.colors[v] != 0 else self.domain(v)
                for v in range(self.g.n)]

    def color_of(self, v: int) -> int | None:
        c = int(self.colors[v])
        return None if c == 0 else c

    # -- operations -------------------------------------------------------

    def set_color(self, v: int, color: int) -> None:
        """Directly assign a color (the seeding step).  No propagation."""
        if self.colors[v] != 0:
            raise ValueError(f"vertex {v} already colored")
        if not 1 <= color <= self.m:
            raise ValueError(f"color {color} outside 1..{self.m}")
        self.colors[v] = color
        self.meta[_k._COLORED] += 1

    def observe(self, tie_break: str = "degree") -> int:
        """Uncolored vertex of minimum entropy under the tie-break, or
        RESTART if that minimum is 0 (some domain has emptied)."""
        if self.colored_count >= self.g.n:
            raise ValueError("observe() called with no uncolored vertices")
        tie = _k.TIE_RANDOM if tie_break == "random" else _k.TIE_DEGREE
        v = _k.observe(self.entropy, self.colors, self.degrees,
                       self.ent_v, self.ent_next, self.bkt_head, self.meta,
                       tie, self.rng_state)
        return RESTART if v == _k.OBSERVE_RESTART else int(v)

    def collapse(self, v: int) -> int:
        """Assign v the smallest color in its domain and return it."""
        if self.colors[v] != 0:
            raise ValueError(f"vertex {v} already colored")
        c = _k.collapse(self.avail, self.entropy, self.colors, self.meta, v)
        if c == 0:
            raise ValueError(f"vertex {v} has an empty domain")
        return c

    def propagate(self, v: int, gated: bool = False) -> bool:
        """Cascade the domain restriction from colored vertex v.  True on
        success, False when the attempt must restart."""
        if self.colors[v] == 0:
            raise ValueError(f"vertex {v} is not colored")
        status = _k.propagate(self.g.indptr, self.g.indices,
                              self.avail, self.entropy, self.colors,
                              self.ent_v, self.ent_next, self.bkt_head,
                              self.meta, self.stack, v, gated)
        return status == _k.OK

    def check_index(self) -> None:
        """Assert the lazy entropy index still describes every uncolored
        vertex (test support)."""
        floor = int(self.meta[_k._FLOOR])
        seen = set()
        for e in range(self.bkt_head.shape[0]):
            k = self.bkt_head[e]
            while k != -1:
                v = int(self.ent_v[k])
                if self.colors[v] == 0 and self.entropy[v] == e:
                    seen.add(v)
                k = self.ent_next[k]
        for v in self.uncolored():
            assert v in seen, f"vertex {v} missing from entropy index"
            assert floor <= self.entropy[v], "entropy floor above a live entry"


def solve(g: Graph, config: SolveConfig | None = None) -> SolveResult:
    """Color g, growing the color budget on demand.

    The budget starts at max(max_degree, 1).  Each attempt seeds the
    lowest-id maximum-degree vertex with color 1, propagates, then loops
    observe/collapse/propagate.  Any dead end restarts from scratch with one
    extra color; a budget of n always succeeds, so this terminates.
    """
    cfg = config or SolveConfig()
    if g.n < 1:
        raise ValueError("cannot color the empty graph")
    degrees = g.degrees
    tie = _k.TIE_RANDOM if cfg.tie_break == "random" else _k.TIE_DEGREE
    gated = cfg.propagation == "gated"
    m0 = max(g.max_degree, 1)
    for m in range(m0, g.n + 1):
        st = DomainState(g, m, seed=cfg.seed)
        status = _k.wfc_attempt(g.indptr, g.indices, degrees,
                                st.avail, st.entropy, st.colors,
                                st.ent_v, st.ent_next, st.bkt_head,
                                st.meta, st.stack, tie, st.rng_state, gated)
        if status == _k.OK:
            coloring = Coloring(st.colors.copy())
            return SolveResult(coloring=coloring, k=coloring.k,
                               restarts=m - m0, final_m=m,
                               forced_colorings=st.forced_count)
    raise AssertionError("a budget of n colors cannot fail")  # pragma: no cover
