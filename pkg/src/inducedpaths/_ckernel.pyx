# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled exploration kernel.

Mirrors inducedpaths.explore._pykernel draw for draw: same splitmix64
stream, same claim ordering, same outputs. Keep the two in sync; the test
suite compares them field by field.
"""

from libc.stdint cimport int8_t, int32_t, int64_t, uint64_t
from libc.stdlib cimport free, malloc

import numpy as np


cdef inline uint64_t _next64(uint64_t* state) noexcept nogil:
    state[0] += <uint64_t>0x9E3779B97F4A7C15u
    cdef uint64_t z = state[0]
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9u
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EBu
    return z ^ (z >> 31)


cdef inline uint64_t _below(uint64_t* state, uint64_t n) noexcept nogil:
    cdef uint64_t v
    cdef int k
    cdef uint64_t r
    if n <= 1:
        return 0
    v = n - 1
    k = 0
    while v:
        v >>= 1
        k += 1
    while True:
        r = _next64(state) >> (64 - k)
        if r < n:
            return r


cdef struct Workspace:
    int64_t* off
    int32_t* vertex_of
    int64_t* pairing
    int64_t* pool
    int64_t* pool_pos
    int64_t pool_size
    int32_t* sleep_pool
    int64_t* sleep_pos
    int64_t sleep_size
    int32_t* rem_deg
    int32_t* claim_event
    int32_t* claim_rem
    int32_t* tree_parent
    int8_t* sleeping
    int32_t* hit_event
    int32_t* hit_old
    int64_t n_hits
    uint64_t rng


cdef inline void _pool_remove(Workspace* ws, int64_t h) noexcept nogil:
    cdef int64_t i = ws.pool_pos[h]
    cdef int64_t last = ws.pool[ws.pool_size - 1]
    ws.pool[i] = last
    ws.pool_pos[last] = i
    ws.pool_size -= 1


cdef inline void _claim(Workspace* ws, int32_t v, int32_t ev, int32_t parent) noexcept nogil:
    cdef int64_t i = ws.sleep_pos[v]
    cdef int32_t last = ws.sleep_pool[ws.sleep_size - 1]
    ws.sleep_pool[i] = last
    ws.sleep_pos[last] = i
    ws.sleep_size -= 1
    ws.sleeping[v] = 0
    ws.claim_event[v] = ev
    ws.claim_rem[v] = ws.rem_deg[v]
    ws.tree_parent[v] = parent


cdef inline int64_t _match(Workspace* ws, int32_t x, int32_t ev, int32_t parent,
                           bint claim_targets, int32_t* out) noexcept nogil:
    """Match every unmatched half-edge of x. Sleeping targets are appended to
    out (deduped when recording); with claim_targets they are claimed with
    the given parent (x when parent < 0 means use x itself upstream)."""
    cdef int64_t h, h2, j, k
    cdef int64_t count = 0
    cdef int32_t w
    cdef bint dup
    for h in range(ws.off[x], ws.off[x + 1]):
        if ws.pairing[h] >= 0:
            continue
        _pool_remove(ws, h)
        j = <int64_t>_below(&ws.rng, <uint64_t>ws.pool_size)
        h2 = ws.pool[j]
        _pool_remove(ws, h2)
        ws.pairing[h] = h2
        ws.pairing[h2] = h
        w = ws.vertex_of[h2]
        ws.rem_deg[x] -= 1
        if w != x:
            ws.rem_deg[w] -= 1
        else:
            ws.rem_deg[x] -= 1
        if ws.sleeping[w]:
            ws.hit_event[ws.n_hits] = ev
            ws.hit_old[ws.n_hits] = ws.rem_deg[w] + 1
            ws.n_hits += 1
            if claim_targets:
                _claim(ws, w, ev, parent)
                out[count] = w
                count += 1
            else:
                dup = False
                for k in range(count):
                    if out[k] == w:
                        dup = True
                        break
                if not dup:
                    out[count] = w
                    count += 1
    return count


def explore_kernel(degrees, seed, m):
    cdef int64_t n = len(degrees)
    cdef int32_t[::1] deg_view = np.ascontiguousarray(degrees, dtype=np.int32)
    offsets_np = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.asarray(deg_view), out=offsets_np[1:])
    cdef int64_t h_total = offsets_np[n] if n else 0
    if h_total % 2:
        raise ValueError("total number of half-edges must be even")

    cdef int64_t max_events = 2 * n
    pairing_np = np.full(h_total, -1, dtype=np.int64)
    contour_np = np.zeros(max_events + 1, dtype=np.int32)
    tag_np = np.zeros(max_events, dtype=np.int8)
    evv_np = np.zeros(max_events, dtype=np.int32)
    claim_ev_np = np.zeros(n, dtype=np.int32)
    claim_rem_np = np.zeros(n, dtype=np.int32)
    parent_np = np.full(n, -2, dtype=np.int32)
    hit_ev_np = np.zeros(h_total // 2 + 1, dtype=np.int32)
    hit_old_np = np.zeros(h_total // 2 + 1, dtype=np.int32)

    cdef int64_t[::1] offv = offsets_np
    cdef int64_t[::1] pairv = pairing_np
    cdef int32_t[::1] contv = contour_np
    cdef int8_t[::1] tagv = tag_np
    cdef int32_t[::1] evvv = evv_np
    cdef int32_t[::1] cevv = claim_ev_np
    cdef int32_t[::1] cremv = claim_rem_np
    cdef int32_t[::1] parv = parent_np
    cdef int32_t[::1] hevv = hit_ev_np
    cdef int32_t[::1] holdv = hit_old_np

    cdef Workspace ws
    cdef int64_t i, v
    cdef int32_t mm = m

    ws.off = &offv[0]
    ws.pairing = &pairv[0] if h_total else NULL
    ws.hit_event = &hevv[0]
    ws.hit_old = &holdv[0]
    ws.claim_event = &cevv[0] if n else NULL
    ws.claim_rem = &cremv[0] if n else NULL
    ws.tree_parent = &parv[0] if n else NULL
    ws.n_hits = 0
    ws.rng = <uint64_t>(seed & 0xFFFFFFFFFFFFFFFF)

    ws.vertex_of = <int32_t*>malloc((h_total + 1) * sizeof(int32_t))
    ws.pool = <int64_t*>malloc((h_total + 1) * sizeof(int64_t))
    ws.pool_pos = <int64_t*>malloc((h_total + 1) * sizeof(int64_t))
    ws.sleep_pool = <int32_t*>malloc((n + 1) * sizeof(int32_t))
    ws.sleep_pos = <int64_t*>malloc((n + 1) * sizeof(int64_t))
    ws.rem_deg = <int32_t*>malloc((n + 1) * sizeof(int32_t))
    ws.sleeping = <int8_t*>malloc((n + 1) * sizeof(int8_t))
    # scratch levels plus the pending arena of [u, k, kids...] groups; live
    # arena size never exceeds 2N header slots plus one slot per draw
    cdef int32_t* level = <int32_t*>malloc((n + 1) * sizeof(int32_t))
    cdef int32_t* nxt = <int32_t*>malloc((n + 1) * sizeof(int32_t))
    cdef int64_t arena_cap = 2 * n + h_total + 64
    cdef int64_t* arena = <int64_t*>malloc(arena_cap * sizeof(int64_t))
    # entry stack: anchor, block_start, block_end, cursor
    cdef int64_t* st_anchor = <int64_t*>malloc((n + 1) * sizeof(int64_t))
    cdef int64_t* st_start = <int64_t*>malloc((n + 1) * sizeof(int64_t))
    cdef int64_t* st_end = <int64_t*>malloc((n + 1) * sizeof(int64_t))
    cdef int64_t* st_cur = <int64_t*>malloc((n + 1) * sizeof(int64_t))

    if (ws.vertex_of == NULL or ws.pool == NULL or ws.pool_pos == NULL or
            ws.sleep_pool == NULL or ws.sleep_pos == NULL or ws.rem_deg == NULL or
            ws.sleeping == NULL or level == NULL or nxt == NULL or arena == NULL or
            st_anchor == NULL or st_start == NULL or st_end == NULL or st_cur == NULL):
        raise MemoryError

    cdef int64_t ev = 0
    cdef int64_t height = 0
    cdef int64_t depth_stack = 0
    cdef int64_t arena_top = 0
    cdef int32_t r, u, w, x
    cdef int64_t lv_count, nxt_count, kid_count, g, cur, blk_start, d
    cdef int64_t kstart

    try:
        for v in range(n):
            ws.sleep_pool[v] = <int32_t>v
            ws.sleep_pos[v] = v
            ws.rem_deg[v] = <int32_t>(offv[v + 1] - offv[v])
            ws.sleeping[v] = 1
            for i in range(offv[v], offv[v + 1]):
                ws.vertex_of[i] = <int32_t>v
        for i in range(h_total):
            ws.pool[i] = i
            ws.pool_pos[i] = i
        ws.pool_size = h_total
        ws.sleep_size = n

        while True:
            if depth_stack == 0:
                if ws.sleep_size == 0:
                    break
                ev += 1
                r = ws.sleep_pool[<int64_t>_below(&ws.rng, <uint64_t>ws.sleep_size)]
                _claim(&ws, r, <int32_t>ev, -1)
                lv_count = _match(&ws, r, <int32_t>ev, r, True, level)
                u = r
            else:
                cur = depth_stack - 1
                if st_cur[cur] >= st_end[cur]:
                    ev += 1
                    height -= 1
                    contv[ev] = <int32_t>height
                    tagv[ev - 1] = 2
                    evvv[ev - 1] = <int32_t>st_anchor[cur]
                    arena_top = st_start[cur]
                    depth_stack -= 1
                    continue
                ev += 1
                g = st_cur[cur]
                u = <int32_t>arena[g]
                kid_count = arena[g + 1]
                st_cur[cur] = g + 2 + kid_count
                lv_count = 0
                for i in range(kid_count):
                    w = <int32_t>arena[g + 2 + i]
                    if ws.sleeping[w]:
                        _claim(&ws, w, <int32_t>ev, u)
                        level[lv_count] = w
                        lv_count += 1
            # grow the ball to depth m, then record pendings of depth-m vertices
            d = 1
            while d < mm:
                nxt_count = 0
                for i in range(lv_count):
                    x = level[i]
                    nxt_count += _match(&ws, x, <int32_t>ev, x, True, nxt + nxt_count)
                lv_count = nxt_count
                for i in range(lv_count):
                    level[i] = nxt[i]
                d += 1
            blk_start = arena_top
            for i in range(lv_count):
                x = level[i]
                arena[arena_top] = x
                kstart = arena_top + 2
                kid_count = _match(&ws, x, <int32_t>ev, -1, False,
                                   <int32_t*>nxt)
                for g in range(kid_count):
                    arena[kstart + g] = nxt[g]
                arena[arena_top + 1] = kid_count
                arena_top = kstart + kid_count
            st_anchor[depth_stack] = u
            st_start[depth_stack] = blk_start
            st_end[depth_stack] = arena_top
            st_cur[depth_stack] = blk_start
            depth_stack += 1
            height += 1
            contv[ev] = <int32_t>height
            tagv[ev - 1] = 1 if ws.tree_parent[u] == -1 else 3
            evvv[ev - 1] = u
            if arena_top > arena_cap - 8:
                raise AssertionError("pending arena overflow")
        if ws.pool_size != 0:
            raise AssertionError("unmatched half-edges left at termination")
    finally:
        free(ws.vertex_of)
        free(ws.pool)
        free(ws.pool_pos)
        free(ws.sleep_pool)
        free(ws.sleep_pos)
        free(ws.rem_deg)
        free(ws.sleeping)
        free(level)
        free(nxt)
        free(arena)
        free(st_anchor)
        free(st_start)
        free(st_end)
        free(st_cur)

    return {
        "offsets": offsets_np,
        "pairing": pairing_np,
        "contour": contour_np[: ev + 1].copy(),
        "event_tag": tag_np[:ev].copy(),
        "event_vertex": evv_np[:ev].copy(),
        "claim_event": claim_ev_np,
        "claim_rem_deg": claim_rem_np,
        "tree_parent": parent_np,
        "hit_event": hit_ev_np[: ws.n_hits].copy(),
        "hit_old_deg": hit_old_np[: ws.n_hits].copy(),
        "n_events": int(ev),
    }
