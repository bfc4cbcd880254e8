"""Half-edge multigraphs: uniform matchings and Erdos-Renyi graphs."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .degseq import DegreeSequence
from .errors import DomainViolation
from .rng import Rng


@dataclass
class MultiGraph:
    """A multigraph stored as an involution on half-edge ids.

    Half-edges of vertex v occupy the contiguous range
    offsets[v]..offsets[v+1]-1; pairing maps each half-edge to its partner.
    Self-loops and parallel edges are allowed.
    """

    offsets: np.ndarray
    pairing: np.ndarray
    _vertex_of: np.ndarray | None = field(default=None, repr=False)
    _neighbor_csr: np.ndarray | None = field(default=None, repr=False)

    @property
    def n_vertices(self) -> int:
        return len(self.offsets) - 1

    @property
    def n_half_edges(self) -> int:
        return int(self.offsets[-1])

    @property
    def vertex_of(self) -> np.ndarray:
        if self._vertex_of is None:
            self._vertex_of = np.repeat(
                np.arange(self.n_vertices, dtype=np.int32), np.diff(self.offsets)
            )
        return self._vertex_of

    @property
    def neighbor_csr(self) -> np.ndarray:
        """neighbor_csr[h] is the vertex at the far end of half-edge h."""
        if self._neighbor_csr is None:
            self._neighbor_csr = self.vertex_of[self.pairing]
        return self._neighbor_csr

    def degree(self, v: int) -> int:
        return int(self.offsets[v + 1] - self.offsets[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.offsets).astype(np.int32)

    def neighbors(self, v: int) -> np.ndarray:
        """Neighbor multiset of v (one entry per incident half-edge)."""
        return self.neighbor_csr[self.offsets[v]: self.offsets[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        if self.degree(u) > self.degree(v):
            u, v = v, u
        return bool(np.any(self.neighbors(u) == v))

    def validate(self) -> None:
        """Assert the involution and degree invariants."""
        h = np.arange(self.n_half_edges)
        if self.n_half_edges:
            if np.any(self.pairing[self.pairing] != h):
                raise AssertionError("pairing is not an involution")
            if np.any(self.pairing == h):
                raise AssertionError("pairing has a fixed point")

    def edges(self):
        """Yield each edge once as (u, v) with the lower half-edge id first."""
        for h in range(self.n_half_edges):
            p = int(self.pairing[h])
            if h < p:
                yield int(self.vertex_of[h]), int(self.vertex_of[p])
            elif h == p:
                raise AssertionError("pairing has a fixed point")

    def save_edge_list(self, path) -> None:
        """Edge per line as 'u v'; a self-loop is written 'u u'."""
        with open(path, "w", encoding="utf-8") as fh:
            for u, v in self.edges():
                fh.write(f"{u} {v}\n")

    @staticmethod
    def from_edge_list(n: int, edges) -> "MultiGraph":
        """Build the half-edge structure from explicit (u, v) pairs."""
        edges = list(edges)
        deg = np.zeros(n, dtype=np.int64)
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        offsets = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(deg, out=offsets[1:])
        cursor = offsets[:-1].copy()
        pairing = np.full(int(offsets[-1]), -1, dtype=np.int64)
        for u, v in edges:
            hu = cursor[u]
            cursor[u] += 1
            hv = cursor[v]
            cursor[v] += 1
            pairing[hu] = hv
            pairing[hv] = hu
        return MultiGraph(offsets=offsets, pairing=pairing)


def build_configuration_model(seq: DegreeSequence, seed: int) -> MultiGraph:
    """Uniform perfect matching of the half-edges of `seq`.

    Sequential construction: scan half-edges in id order, pair each unmatched
    one with a uniform draw from the remaining pool. Every matching is
    produced with equal probability.
    """
    degrees = seq.degrees
    h_total = int(degrees.sum())
    if h_total % 2:
        raise DomainViolation("total number of half-edges must be even")
    offsets = np.zeros(len(degrees) + 1, dtype=np.int64)
    np.cumsum(degrees, out=offsets[1:])
    pairing = np.full(h_total, -1, dtype=np.int64)
    rng = Rng(seed)
    pool = list(range(h_total))
    pos = list(range(h_total))

    def pool_remove(h):
        i = pos[h]
        last = pool[-1]
        pool[i] = last
        pos[last] = i
        pool.pop()

    for h in range(h_total):
        if pairing[h] >= 0:
            continue
        pool_remove(h)
        h2 = pool[rng.below(len(pool))]
        pool_remove(h2)
        pairing[h] = h2
        pairing[h2] = h
    return MultiGraph(offsets=offsets, pairing=pairing)


def build_er_graph(n: int, c: float, seed: int) -> MultiGraph:
    """Simple graph on n vertices; each pair is an edge independently with
    probability c/n. Uses geometric skips over the ordered pair list."""
    if n < 2:
        raise DomainViolation(f"need n >= 2, got {n}")
    if c <= 0:
        raise DomainViolation(f"need c > 0, got {c}")
    p = c / n
    if p > 1.0:
        raise DomainViolation(f"edge probability c/n = {p} exceeds 1")
    rng = Rng(seed)
    edges = []
    total_pairs = n * (n - 1) // 2
    if p == 1.0:
        idx = 0
        skipping = False
    else:
        log1mp = math.log1p(-p)
        idx = 0
        skipping = True
    while idx < total_pairs:
        if skipping:
            u = rng.uniform()
            # skip Geometric(p) - 1 non-edges
            gap = int(math.log1p(-u) / log1mp) if u > 0 else 0
            idx += gap
            if idx >= total_pairs:
                break
        # decode pair index -> (row, col) in the upper triangle
        row = int((2 * n - 1 - math.sqrt((2 * n - 1) ** 2 - 8 * idx)) // 2)
        # correct potential off-by-one from floating point
        while idx < row * n - row * (row + 1) // 2:
            row -= 1
        while idx >= (row + 1) * n - (row + 1) * (row + 2) // 2:
            row += 1
        col = idx - (row * n - row * (row + 1) // 2) + row + 1
        edges.append((row, col))
        idx += 1
    return MultiGraph.from_edge_list(n, edges)
