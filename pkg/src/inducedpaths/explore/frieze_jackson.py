"""Greedy chord-deleting depth-first search on an already built graph."""

from __future__ import annotations

import numpy as np

from ..errors import DomainViolation
from ..multigraph import MultiGraph
from .result import ExplorationResult


def run_frieze_jackson(g: MultiGraph, start: int, order: np.ndarray) -> list[int]:
    """DFS from `start`, trying neighbors by increasing `order`. A newly
    discovered vertex adjacent to the current ancestral line anywhere other
    than its parent is deleted for good and the walk resumes from the parent.
    Returns the deepest ancestral line reached (an induced path).

    Parallel edges to the parent do not trigger deletion; self-loops never do.
    """
    n = g.n_vertices
    if not 0 <= start < n:
        raise DomainViolation(f"start vertex {start} not in graph")
    order = np.asarray(order)
    adj = []
    for v in range(n):
        nbrs = {int(u) for u in g.neighbors(v) if int(u) != v}
        adj.append(sorted(nbrs, key=lambda u: order[u]))

    visited = np.zeros(n, dtype=bool)
    deleted = np.zeros(n, dtype=bool)
    on_stack = np.zeros(n, dtype=bool)
    ptr = np.zeros(n, dtype=np.int64)
    stack = [start]
    visited[start] = True
    on_stack[start] = True
    best = [start]
    while stack:
        v = stack[-1]
        moved = False
        nbrs = adj[v]
        while ptr[v] < len(nbrs):
            u = nbrs[ptr[v]]
            ptr[v] += 1
            if visited[u] or deleted[u]:
                continue
            chord = any(on_stack[w] and w != v for w in adj[u])
            if chord:
                deleted[u] = True
                continue
            visited[u] = True
            on_stack[u] = True
            stack.append(u)
            if len(stack) > len(best):
                best = list(stack)
            moved = True
            break
        if not moved:
            on_stack[v] = False
            stack.pop()
    return best


def push_order(res: ExplorationResult) -> np.ndarray:
    """Total order on vertices by first appearance in the contour; untouched
    vertices (other components, if disconnected) sort last."""
    n = res.n_vertices
    order = np.full(n, 2 * n + 1, dtype=np.int64)
    rank = 0
    tags = res.contour.tags
    for i in range(len(tags)):
        if tags[i] != 2:
            v = int(res.event_vertex[i])
            if order[v] > 2 * n:
                order[v] = rank
                rank += 1
    return order


def prefix_agreement(a: list[int], b: list[int]) -> float:
    """Length of the longest common prefix over the longer length."""
    if not a and not b:
        return 1.0
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k / max(len(a), len(b))
