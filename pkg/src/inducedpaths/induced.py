"""Induced-path, hole, and m-induced checks on half-edge multigraphs.

Adjacency is a yes/no question here: parallel edges count once and
self-loops are ignored, since being induced is about which pairs are linked.

The m-induced predicate follows the distance rule literally: vertices k
apart along the cycle (or path) must be at graph distance at least
min(m, k). At m = 2 this coincides with the plain induced predicate; at
m = 1 every cycle (path) qualifies.
"""

from __future__ import annotations

from collections import deque

from .multigraph import MultiGraph


def _positions(vs) -> dict | None:
    pos = {}
    for i, v in enumerate(vs):
        if v in pos:
            return None
        pos[v] = i
    return pos


def is_induced_path(g: MultiGraph, vs) -> bool:
    """True iff vs are distinct, consecutive pairs are adjacent, and no other
    pair is adjacent."""
    vs = list(vs)
    if len(vs) == 0:
        return False
    pos = _positions(vs)
    if pos is None:
        return False
    if len(vs) == 1:
        return True
    n = len(vs)
    for i, v in enumerate(vs):
        seen_prev = seen_next = False
        for u in g.neighbors(v):
            u = int(u)
            if u == v:
                continue
            j = pos.get(u)
            if j is None:
                continue
            if j == i - 1:
                seen_prev = True
            elif j == i + 1:
                seen_next = True
            else:
                return False
        if (i > 0 and not seen_prev) or (i < n - 1 and not seen_next):
            return False
    return True


def is_induced_cycle(g: MultiGraph, vs) -> bool:
    """Cyclic analogue of is_induced_path; needs length >= 3."""
    vs = list(vs)
    n = len(vs)
    if n < 3:
        return False
    pos = _positions(vs)
    if pos is None:
        return False
    for i, v in enumerate(vs):
        seen_prev = seen_next = False
        for u in g.neighbors(v):
            u = int(u)
            if u == v:
                continue
            j = pos.get(u)
            if j is None:
                continue
            d = (j - i) % n
            if d == n - 1:
                seen_prev = True
            elif d == 1:
                seen_next = True
            else:
                return False
        if not (seen_prev and seen_next):
            return False
    return True


def _bounded_distances(g: MultiGraph, source: int, radius: int) -> dict:
    """BFS distances from source up to `radius`."""
    dist = {source: 0}
    frontier = deque([source])
    while frontier:
        v = frontier.popleft()
        dv = dist[v]
        if dv >= radius:
            continue
        for u in g.neighbors(v):
            u = int(u)
            if u not in dist:
                dist[u] = dv + 1
                frontier.append(u)
    return dist


def _m_separation_ok(g: MultiGraph, vs, m: int, cyclic: bool) -> bool:
    n = len(vs)
    pos = _positions(vs)
    if pos is None:
        return False
    # any violated pair is at graph distance <= m-1, so radius m-1 suffices
    for i, v in enumerate(vs):
        dist = _bounded_distances(g, v, m - 1)
        for u, d in dist.items():
            j = pos.get(u)
            if j is None or j == i:
                continue
            k = abs(j - i)
            if cyclic:
                k = min(k, n - k)
            if d < min(m, k):
                return False
    return True


def is_m_induced_path(g: MultiGraph, vs, m: int) -> bool:
    """Path whose pairs k apart sit at graph distance >= min(m, k)."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    vs = list(vs)
    if not vs:
        return False
    pos = _positions(vs)
    if pos is None:
        return False
    for a, b in zip(vs, vs[1:]):
        if not g.has_edge(a, b):
            return False
    if m == 1:
        return True
    return _m_separation_ok(g, vs, m, cyclic=False)


def is_m_induced_cycle(g: MultiGraph, vs, m: int) -> bool:
    """Cycle whose pairs k apart along the cycle sit at graph distance >= min(m, k)."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    vs = list(vs)
    if len(vs) < 3:
        return False
    pos = _positions(vs)
    if pos is None:
        return False
    for a, b in zip(vs, vs[1:] + vs[:1]):
        if not g.has_edge(a, b):
            return False
    if m == 1:
        return True
    return _m_separation_ok(g, vs, m, cyclic=True)
