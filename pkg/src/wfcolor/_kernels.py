"""Hot solver kernels.

Every kernel below is written as a plain loop over numpy arrays so the same
source runs two ways: JIT-compiled through numba (default), or as pure
Python/numpy when numba is unavailable or ``WFCOLOR_BACKEND=python`` is set.
``benchmarks/backend_bench.py`` compares the two paths.

Kernel state for the collapse solver:
  avail    uint8 (n, M)   avail[v, c] = 1 while color c+1 is still open for v
  entropy  int32 (n,)     row popcount of avail, tracked incrementally
  colors   int32 (n,)     0 = uncolored, else assigned color (1-based)
  meta     int64 (4,)     [entry count, entropy floor, forced count, colored count]

Minimum-entropy lookup uses a bucket array indexed by entropy value with lazy
repair: every entropy change appends a (vertex, entropy) entry to its bucket;
entries whose vertex moved on are unlinked when a lookup walks past them.
Each entry is discarded at most once, so lookups are O(1) amortized.
"""
from __future__ import annotations

import os

import numpy as np

BACKEND = "python"
if os.environ.get("WFCOLOR_BACKEND", "numba").lower() != "python":
    try:
        from numba import njit

        BACKEND = "numba"
    except ImportError:  # pragma: no cover - exercised via env flag instead
        BACKEND = "python"


def _jit(fn):
    if BACKEND == "numba":
        return njit(cache=True)(fn)
    return fn


# status codes shared by kernels and wrappers
OK = 0
RESTART = 1
OBSERVE_RESTART = -1
OBSERVE_EXHAUSTED = -2
TIE_DEGREE = 0
TIE_RANDOM = 1

# meta slots
_ENTRIES = 0
_FLOOR = 1
_FORCED = 2
_COLORED = 3

_MASK32 = np.uint64(0xFFFFFFFF)


@_jit
def rng_next(state):
    """xorshift32 step.  State lives in a uint64 cell so shifts never wrap,
    keeping the stream identical under numba and plain numpy."""
    x = state[0]
    x = x ^ ((x << np.uint64(13)) & _MASK32)
    x = x ^ (x >> np.uint64(17))
    x = x ^ ((x << np.uint64(5)) & _MASK32)
    state[0] = x
    return np.int64(x)


@_jit
def bucket_push(ent_v, ent_next, bkt_head, meta, v, e):
    k = meta[_ENTRIES]
    ent_v[k] = v
    ent_next[k] = bkt_head[e]
    bkt_head[e] = k
    meta[_ENTRIES] = k + 1
    if e < meta[_FLOOR]:
        meta[_FLOOR] = e


@_jit
def state_init(avail, entropy, colors, ent_v, ent_next, bkt_head, meta):
    n = colors.shape[0]
    m_colors = avail.shape[1]
    avail[:, :] = 1
    entropy[:] = m_colors
    colors[:] = 0
    bkt_head[:] = -1
    meta[_ENTRIES] = 0
    meta[_FLOOR] = m_colors
    meta[_FORCED] = 0
    meta[_COLORED] = 0
    for v in range(n):
        bucket_push(ent_v, ent_next, bkt_head, meta, v, m_colors)


@_jit
def observe(entropy, colors, degrees, ent_v, ent_next, bkt_head, meta,
            tie_mode, rng_state):
    """Uncolored vertex of minimum entropy, or OBSERVE_RESTART when that
    minimum is 0.  Ties go to the highest degree then lowest id, or to a
    seeded-uniform pick in TIE_RANDOM mode."""
    n_buckets = bkt_head.shape[0]
    e = meta[_FLOOR]
    if e < 0:
        e = 0
    while e < n_buckets:
        prev = -1
        k = bkt_head[e]
        best = -1
        best_deg = -1
        ties = 0
        while k != -1:
            v = ent_v[k]
            nxt = ent_next[k]
            if colors[v] != 0 or entropy[v] != e:
                # stale entry: unlink for good
                if prev == -1:
                    bkt_head[e] = nxt
                else:
                    ent_next[prev] = nxt
            else:
                prev = k
                if tie_mode == TIE_RANDOM:
                    ties += 1
                    if rng_next(rng_state) % ties == 0:
                        best = v
                else:
                    d = degrees[v]
                    if best == -1 or d > best_deg or (d == best_deg and v < best):
                        best = v
                        best_deg = d
            k = nxt
        if best != -1:
            meta[_FLOOR] = e
            if e == 0:
                return OBSERVE_RESTART
            return best
        e += 1
    return OBSERVE_EXHAUSTED


@_jit
def collapse(avail, entropy, colors, meta, v):
    """Fix v to the smallest color left in its domain.  Returns the color,
    or 0 if the domain was empty (caller contract violation)."""
    m_colors = avail.shape[1]
    for c in range(m_colors):
        if avail[v, c] != 0:
            colors[v] = c + 1
            meta[_COLORED] += 1
            return c + 1
    return 0


@_jit
def propagate(indptr, indices, avail, entropy, colors,
              ent_v, ent_next, bkt_head, meta, stack, start, gated):
    """Depth-first domain restriction from the freshly colored vertex.

    Pops a colored vertex, strikes its color from uncolored neighbors'
    domains, and force-colors any neighbor left with a single color (pushing
    it to cascade further).  Returns RESTART when a domain empties or a
    forced color clashes with an already-colored neighbor.

    With gated=True, neighbors whose entropy is already 1 are skipped before
    the removal, which can leave a unit domain holding a conflicting color.
    Kept for side-by-side comparison; the default restricts every uncolored
    neighbor.
    """
    m_colors = avail.shape[1]
    top = 0
    stack[top] = start
    top += 1
    while top > 0:
        top -= 1
        u = stack[top]
        cu = colors[u] - 1
        for idx in range(indptr[u], indptr[u + 1]):
            w = indices[idx]
            if colors[w] != 0:
                continue
            if gated and entropy[w] <= 1:
                continue
            if avail[w, cu] == 0:
                continue
            avail[w, cu] = 0
            e = entropy[w] - 1
            entropy[w] = e
            if e == 0:
                return RESTART
            if e == 1:
                forced_c = 0
                for c in range(m_colors):
                    if avail[w, c] != 0:
                        forced_c = c + 1
                        break
                for jdx in range(indptr[w], indptr[w + 1]):
                    if colors[indices[jdx]] == forced_c:
                        return RESTART
                colors[w] = forced_c
                meta[_FORCED] += 1
                meta[_COLORED] += 1
                stack[top] = w
                top += 1
            else:
                bucket_push(ent_v, ent_next, bkt_head, meta, w, e)
    return OK


@_jit
def wfc_attempt(indptr, indices, degrees, avail, entropy, colors,
                ent_v, ent_next, bkt_head, meta, stack,
                tie_mode, rng_state, gated):
    """One full solve attempt at a fixed color budget M = avail.shape[1]:
    seed the lowest-id maximum-degree vertex with color 1, then loop
    observe/collapse/propagate until done or RESTART."""
    n = colors.shape[0]
    state_init(avail, entropy, colors, ent_v, ent_next, bkt_head, meta)
    seed = 0
    for v in range(1, n):
        if degrees[v] > degrees[seed]:
            seed = v
    colors[seed] = 1
    meta[_COLORED] += 1
    if propagate(indptr, indices, avail, entropy, colors,
                 ent_v, ent_next, bkt_head, meta, stack, seed, gated) == RESTART:
        return RESTART
    while meta[_COLORED] < n:
        v = observe(entropy, colors, degrees, ent_v, ent_next, bkt_head, meta,
                    tie_mode, rng_state)
        if v < 0:
            return RESTART
        collapse(avail, entropy, colors, meta, v)
        if propagate(indptr, indices, avail, entropy, colors,
                     ent_v, ent_next, bkt_head, meta, stack, v, gated) == RESTART:
            return RESTART
    return OK


@_jit
def greedy_assign(indptr, indices, order, colors, mark):
    """Color vertices in the given order, each with the smallest color not
    used by a colored neighbor.  mark is an int32 scratch row (>= max degree
    + 2 wide), stamped instead of cleared between vertices."""
    n = order.shape[0]
    for i in range(n):
        v = order[i]
        stamp = i + 1
        hi = 0
        for idx in range(indptr[v], indptr[v + 1]):
            c = colors[indices[idx]]
            if c != 0:
                mark[c - 1] = stamp
                if c > hi:
                    hi = c
        c = 1
        while c <= hi and mark[c - 1] == stamp:
            c += 1
        colors[v] = c


@_jit
def dsatur_assign(indptr, indices, degrees, colors, adj_used, sat, literal):
    """Saturation-driven greedy.  sat counts distinct neighbor colors, or
    plain colored-neighbor events when literal=True; adj_used tracks the
    colors seen around each vertex either way (it feeds the smallest-feasible
    scan)."""
    n = colors.shape[0]
    for _ in range(n):
        best = -1
        bs = -1
        bd = -1
        for v in range(n):
            if colors[v] != 0:
                continue
            s = sat[v]
            d = degrees[v]
            if best == -1 or s > bs or (s == bs and (d > bd or (d == bd and v < best))):
                best = v
                bs = s
                bd = d
        c = 0
        while adj_used[best, c] != 0:
            c += 1
        colors[best] = c + 1
        for idx in range(indptr[best], indptr[best + 1]):
            w = indices[idx]
            if colors[w] != 0:
                continue
            if adj_used[w, c] == 0:
                adj_used[w, c] = 1
                if not literal:
                    sat[w] += 1
            if literal:
                sat[w] += 1


@_jit
def _rlf_absorb(indptr, indices, colors, in_w, w_count, v):
    # v just joined the class: move its uncolored candidates into W and
    # bump the W-neighbor counts of the vertices still eligible
    for idx in range(indptr[v], indptr[v + 1]):
        w = indices[idx]
        if colors[w] != 0 or in_w[w] != 0:
            continue
        in_w[w] = 1
        for jdx in range(indptr[w], indptr[w + 1]):
            z = indices[jdx]
            if colors[z] == 0 and in_w[z] == 0:
                w_count[z] += 1


@_jit
def rlf_assign(indptr, indices, degrees, colors, in_w, w_count,
               random_ties, rng_state):
    """Build color classes one at a time: seed each class with a highest-
    degree uncolored vertex, then repeatedly add the eligible vertex with the
    most neighbors in the parked set W.  Ties go to a seeded-uniform pick,
    or to the lowest id when random_ties is off."""
    n = colors.shape[0]
    uncolored = n
    k = 0
    while uncolored > 0:
        k += 1
        in_w[:] = 0
        w_count[:] = 0
        best = -1
        bd = -1
        ties = 0
        for v in range(n):
            if colors[v] != 0:
                continue
            d = degrees[v]
            if best == -1 or d > bd:
                best = v
                bd = d
                ties = 1
            elif d == bd and random_ties:
                ties += 1
                if rng_next(rng_state) % ties == 0:
                    best = v
        colors[best] = k
        uncolored -= 1
        _rlf_absorb(indptr, indices, colors, in_w, w_count, best)
        while True:
            best = -1
            bc = -1
            ties = 0
            for u in range(n):
                if colors[u] != 0 or in_w[u] != 0:
                    continue
                c = w_count[u]
                if best == -1 or c > bc:
                    best = u
                    bc = c
                    ties = 1
                elif c == bc and random_ties:
                    ties += 1
                    if rng_next(rng_state) % ties == 0:
                        best = u
            if best == -1:
                break
            colors[best] = k
            uncolored -= 1
            _rlf_absorb(indptr, indices, colors, in_w, w_count, best)
    return k


def seeded_rng_state(seed: int) -> np.ndarray:
    """32-bit xorshift state from an arbitrary int seed (never zero)."""
    s = (int(seed) * 2654435761 + 0x9E3779B9) & 0xFFFFFFFF
    if s == 0:
        s = 0x9E3779B9
    return np.array([s], dtype=np.uint64)
