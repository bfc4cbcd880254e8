"""Turn a long spine into an induced cycle by finding a two-edge bridge
between its ends."""

from __future__ import annotations

import numpy as np

from ..induced import is_induced_cycle
from .result import ExplorationResult


def close_induced_cycle(res: ExplorationResult, eps: float):
    """Search for vertices u, u2 off the spine with spine[j] ~ u2 ~ u ~ spine[i],
    j in the bottom eps-window and i in the top eps-window, such that
    spine[j..i] + [u, u2] is an induced cycle. Returns the cycle or None.

    The scan is capped at O(N) adjacency lookups; every returned cycle is
    verified with is_induced_cycle before being handed back.
    """
    spine = res.spine
    g = res.graph
    h = len(spine)
    if eps <= 0 or h < 3 or h < 3 / eps:
        return None
    n = res.n_vertices
    window = max(1, int(eps * n))
    lo_end = min(window, h - 1)          # bottom indices [0, lo_end)
    hi_start = max(h - window, lo_end)   # top indices [hi_start, h)

    pos = np.full(n, -1, dtype=np.int64)
    for i, v in enumerate(spine):
        pos[v] = i

    # candidate bridge feet u2: off-spine neighbors of the bottom window,
    # keeping the largest bottom index per candidate
    foot = {}
    for j in range(lo_end):
        for u2 in g.neighbors(spine[j]):
            u2 = int(u2)
            if pos[u2] >= 0 or u2 == spine[j]:
                continue
            if foot.get(u2, -1) < j:
                foot[u2] = j

    budget = 4 * n
    for u2, j in foot.items():
        for u in g.neighbors(u2):
            u = int(u)
            budget -= 1
            if budget <= 0:
                return None
            if pos[u] >= 0 or u == u2:
                continue
            # smallest top-window spine index adjacent to u
            best_i = -1
            ok = True
            for x in g.neighbors(u):
                x = int(x)
                px = pos[x]
                if px < 0:
                    continue
                if px >= hi_start:
                    if best_i < 0 or px < best_i:
                        best_i = px
                elif px > j:
                    ok = False   # chord into the middle of the would-be cycle
                    break
                elif px == j:
                    ok = False   # u adjacent to the bottom anchor itself
                    break
            if not ok or best_i < 0:
                continue
            # u2 must touch the cycle only at spine[j]
            good = True
            for x in g.neighbors(u2):
                x = int(x)
                px = pos[x]
                if j < px <= best_i:
                    good = False
                    break
            if not good:
                continue
            cycle = spine[j: best_i + 1] + [u, u2]
            if len(cycle) >= 3 and is_induced_cycle(g, cycle):
                return cycle
    return None
