"""Pure-Python exploration kernel.

Builds a uniform half-edge matching and its depth-first exploration in one
pass. The stack holds anchor entries; an entry created for anchor `a` lists
pairs (u, kids) where u is already fully matched and kids are the sleeping
vertices drawn while matching u. A vertex leaves the sleeping set when it is
claimed into the first level of a new entry (or ball, for m >= 2), not when
it is first drawn, so kid lists are re-filtered against the sleeping set at
advancement time.

The compiled kernel in _ckernel.pyx mirrors this routine draw for draw;
both consume the splitmix64 stream identically and return equal arrays.
"""

from __future__ import annotations

import numpy as np

from ..rng import Rng

TAG_ROOT = 1
TAG_POP = 2
TAG_ADVANCE = 3


def explore_kernel(degrees: np.ndarray, seed: int, m: int) -> dict:
    n = len(degrees)
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(degrees, out=offsets[1:])
    h_total = int(offsets[-1])
    if h_total % 2:
        raise ValueError("total number of half-edges must be even")

    rng = Rng(seed)
    off = offsets.tolist()
    vertex_of = [0] * h_total
    for v in range(n):
        for h in range(off[v], off[v + 1]):
            vertex_of[h] = v

    pairing = [-1] * h_total
    pool = list(range(h_total))
    pos = list(range(h_total))
    sleep_pool = list(range(n))
    sleep_pos = list(range(n))
    rem_deg = [off[v + 1] - off[v] for v in range(n)]

    claim_event = [0] * n
    claim_rem_deg = [0] * n
    tree_parent = [-2] * n
    sleeping = [True] * n

    max_events = 2 * n
    contour = [0] * (max_events + 1)
    event_tag = [0] * max_events
    event_vertex = [0] * max_events
    hit_event = []
    hit_old = []

    def claim(v, ev, parent):
        i = sleep_pos[v]
        last = sleep_pool[-1]
        sleep_pool[i] = last
        sleep_pos[last] = i
        sleep_pool.pop()
        sleeping[v] = False
        claim_event[v] = ev
        claim_rem_deg[v] = rem_deg[v]
        tree_parent[v] = parent

    def pool_remove(h):
        i = pos[h]
        last = pool[-1]
        pool[i] = last
        pos[last] = i
        pool.pop()

    def match_claiming(x, ev, parent_for_targets):
        """Match all unmatched half-edges of x, claiming sleeping targets."""
        out = []
        for h in range(off[x], off[x + 1]):
            if pairing[h] >= 0:
                continue
            pool_remove(h)
            h2 = pool[rng.below(len(pool))]
            pool_remove(h2)
            pairing[h] = h2
            pairing[h2] = h
            w = vertex_of[h2]
            rem_deg[x] -= 1
            if w != x:
                rem_deg[w] -= 1
            else:
                rem_deg[x] -= 1
            if sleeping[w]:
                hit_event.append(ev)
                hit_old.append(rem_deg[w] + 1)
                claim(w, ev, parent_for_targets)
                out.append(w)
        return out

    def match_recording(x, ev):
        """Match all unmatched half-edges of x; sleeping targets stay sleeping
        and are listed once each as future kids."""
        kids = []
        for h in range(off[x], off[x + 1]):
            if pairing[h] >= 0:
                continue
            pool_remove(h)
            h2 = pool[rng.below(len(pool))]
            pool_remove(h2)
            pairing[h] = h2
            pairing[h2] = h
            w = vertex_of[h2]
            rem_deg[x] -= 1
            if w != x:
                rem_deg[w] -= 1
            else:
                rem_deg[x] -= 1
            if sleeping[w]:
                hit_event.append(ev)
                hit_old.append(rem_deg[w] + 1)
                if w not in kids:
                    kids.append(w)
        return kids

    def build_pending(level, ev):
        """Grow the ball to depth m from the claimed first level, then fully
        match the depth-m vertices, recording their sleeping targets."""
        depth = 1
        while depth < m:
            nxt = []
            for x in level:
                nxt.extend(match_claiming(x, ev, x))
            level = nxt
            depth += 1
        return [(x, match_recording(x, ev)) for x in level]

    stack = []  # entries [anchor, pending, cursor]
    ev = 0
    height = 0
    while True:
        if not stack:
            if not sleep_pool:
                break
            ev += 1
            r = sleep_pool[rng.below(len(sleep_pool))]
            claim(r, ev, -1)
            level = match_claiming(r, ev, r)
            pending = build_pending(level, ev)
            stack.append([r, pending, 0])
            height += 1
            contour[ev] = height
            event_tag[ev - 1] = TAG_ROOT
            event_vertex[ev - 1] = r
        else:
            entry = stack[-1]
            if entry[2] >= len(entry[1]):
                ev += 1
                stack.pop()
                height -= 1
                contour[ev] = height
                event_tag[ev - 1] = TAG_POP
                event_vertex[ev - 1] = entry[0]
            else:
                ev += 1
                u, kids = entry[1][entry[2]]
                entry[2] += 1
                level = []
                for w in kids:
                    if sleeping[w]:
                        claim(w, ev, u)
                        level.append(w)
                pending = build_pending(level, ev)
                stack.append([u, pending, 0])
                height += 1
                contour[ev] = height
                event_tag[ev - 1] = TAG_ADVANCE
                event_vertex[ev - 1] = u
        if ev > max_events:
            raise AssertionError("event budget exceeded")
    if pool:
        raise AssertionError("unmatched half-edges left at termination")

    return {
        "offsets": offsets,
        "pairing": np.array(pairing, dtype=np.int64),
        "contour": np.array(contour[: ev + 1], dtype=np.int32),
        "event_tag": np.array(event_tag[:ev], dtype=np.int8),
        "event_vertex": np.array(event_vertex[:ev], dtype=np.int32),
        "claim_event": np.array(claim_event, dtype=np.int32),
        "claim_rem_deg": np.array(claim_rem_deg, dtype=np.int32),
        "tree_parent": np.array(tree_parent, dtype=np.int32),
        "hit_event": np.array(hit_event, dtype=np.int32),
        "hit_old_deg": np.array(hit_old, dtype=np.int32),
        "n_events": ev,
    }
