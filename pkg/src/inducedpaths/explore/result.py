"""Exploration results: contour process, ladder times, degree snapshots."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .. import __version__ as _version
from ..errors import DomainViolation
from ..multigraph import MultiGraph

TAG_NAMES = {1: "new-component", 2: "backtrack", 3: "advance"}


@dataclass
class ContourProcess:
    """Stack-height walk of the exploration, one +-1 step per event.

    For the plain exploration (m = 1) the walk has exactly 2N steps; for
    m >= 2 each ball absorbs several vertices so the walk is shorter.
    """

    values: np.ndarray
    tags: np.ndarray
    n_vertices: int
    m: int = 1

    def __len__(self) -> int:
        return len(self.values)

    @property
    def n_events(self) -> int:
        return len(self.values) - 1

    @property
    def max_height(self) -> int:
        return int(self.values.max()) if len(self.values) else 0

    @property
    def first_argmax(self) -> int:
        return int(np.argmax(self.values))

    def validate(self) -> None:
        v = self.values
        if v[0] != 0 or v[-1] != 0:
            raise AssertionError("contour must start and end at height 0")
        steps = np.diff(v)
        if not np.all(np.abs(steps) == 1):
            raise AssertionError("contour increments must be +-1")
        if v.min() < 0:
            raise AssertionError("contour must stay nonnegative")
        if self.m == 1 and self.n_events != 2 * self.n_vertices:
            raise AssertionError("plain contour must have 2N steps")

    def run_lengths(self) -> list[int]:
        """Signed monotone run lengths; +k means k up-steps."""
        steps = np.diff(self.values)
        if len(steps) == 0:
            return []
        runs = []
        current = int(steps[0])
        count = 1
        for s in steps[1:]:
            s = int(s)
            if (s > 0) == (current > 0):
                count += 1
            else:
                runs.append(count * (1 if current > 0 else -1))
                current = s
                count = 1
        runs.append(count * (1 if current > 0 else -1))
        return runs

    @staticmethod
    def from_run_lengths(runs, n_vertices: int, m: int = 1) -> "ContourProcess":
        steps = np.concatenate(
            [np.full(abs(r), 1 if r > 0 else -1, dtype=np.int32) for r in runs]
        ) if runs else np.zeros(0, dtype=np.int32)
        values = np.concatenate([[0], np.cumsum(steps)]).astype(np.int32)
        return ContourProcess(values=values, tags=np.zeros(len(steps), np.int8),
                              n_vertices=n_vertices, m=m)

    def write_csv(self, path, max_rows: int = 100_000) -> None:
        """Piecewise-linear breakpoints 'step,height', at most max_rows rows."""
        steps = np.diff(self.values)
        breaks = [0]
        for i in range(1, len(steps)):
            if steps[i] != steps[i - 1]:
                breaks.append(i)
        breaks.append(len(steps))
        stride = max(1, -(-len(breaks) // max_rows))
        idx = breaks[::stride]
        if idx[-1] != breaks[-1]:
            idx.append(breaks[-1])
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("step,height\n")
            for i in idx:
                fh.write(f"{i},{int(self.values[i])}\n")


def ladder_window(n_vertices: int, delta: float) -> int:
    if not 0.0 < delta < 0.5:
        raise DomainViolation(f"delta must lie in (0, 1/2), got {delta}")
    return max(1, int(n_vertices ** delta))


def compute_ladder_times(contour: ContourProcess, delta: float) -> list[tuple[int, int]]:
    """Ladder times [(k, T_k)]: T_0 = 0 and T_{k+1} is the first step i > T_k
    with height k+1 that stays at or above k+1 for the next window steps,
    window = floor(N^delta)."""
    window = ladder_window(contour.n_vertices, delta)
    return _ladder_times_windowed(contour.values, window)


def _ladder_times_windowed(values: np.ndarray, window: int) -> list[tuple[int, int]]:
    x = np.asarray(values)
    n = len(x) - 1
    if n < 0:
        return []
    # sliding minimum of x over [i, i+window] (windows reaching past the end
    # are treated as failing, which matches the definition since x ends at 0)
    winmin = np.full(n + 1, -1, dtype=np.int64)
    from collections import deque

    dq = deque()
    for i in range(n, -1, -1):
        while dq and dq[0][0] > i + window:
            dq.popleft()
        while dq and dq[-1][1] >= x[i]:
            dq.pop()
        dq.append((i, int(x[i])))
        if i + window <= n:
            winmin[i] = dq[0][1]
    out = [(0, 0)]
    t = 0
    k = 0
    while True:
        target = k + 1
        i = t + 1
        found = -1
        while i <= n:
            if x[i] == target and winmin[i] >= target:
                found = i
                break
            i += 1
        if found < 0:
            break
        k += 1
        t = found
        out.append((k, t))
    return out


@dataclass
class ExplorationResult:
    """Everything one run produces: the graph as built, the contour, the
    spine, ladder instrumentation and sleeping-set bookkeeping."""

    graph: MultiGraph
    contour: ContourProcess
    spine: list[int]
    seed: int
    m: int
    delta: float
    backend: str
    claim_event: np.ndarray
    claim_rem_deg: np.ndarray
    tree_parent: np.ndarray
    hit_event: np.ndarray
    hit_old_deg: np.ndarray
    event_vertex: np.ndarray
    ladder_times: list[tuple[int, int, int]] = field(default_factory=list)
    snapshots: dict[int, np.ndarray] = field(default_factory=dict)
    w: dict[int, int] = field(default_factory=dict)
    _claimed_cum: np.ndarray | None = field(default=None, repr=False)

    @property
    def n_vertices(self) -> int:
        return self.graph.n_vertices

    @property
    def max_height(self) -> int:
        return self.contour.max_height

    def _cum_claims(self) -> np.ndarray:
        if self._claimed_cum is None:
            counts = np.bincount(self.claim_event, minlength=self.contour.n_events + 1)
            self._claimed_cum = np.cumsum(counts)
        return self._claimed_cum

    def sleeping_count(self, step: int) -> int:
        """|S_step|: vertices not yet claimed after `step` events."""
        cum = self._cum_claims()
        step = min(step, len(cum) - 1)
        return int(self.n_vertices - cum[step])

    def tau(self, alpha: float) -> int:
        """First step n >= 1 with |S_n| <= (1-alpha) N."""
        if not 0.0 <= alpha < 1.0:
            raise DomainViolation(f"alpha must lie in [0, 1), got {alpha}")
        cum = self._cum_claims()
        need = alpha * self.n_vertices
        idx = int(np.searchsorted(cum, need, side="left"))
        idx = max(idx, 1)
        if idx >= len(cum):
            raise DomainViolation(f"exploration never reaches fraction {alpha}")
        return idx

    def remaining_degree_histogram(self, alpha: float) -> np.ndarray:
        """Normalized remaining-degree histogram of the sleeping vertices at
        step tau(alpha)."""
        t = self.tau(alpha)
        degrees = self.graph.degrees()
        hist = np.bincount(degrees).astype(np.int64)
        n_hits = int(np.searchsorted(self.hit_event, t, side="right"))
        old = self.hit_old_deg[:n_hits]
        hist -= np.bincount(old, minlength=len(hist))
        hist += np.bincount(old - 1, minlength=len(hist))[: len(hist)]
        claimed = self.claim_event <= t
        rem = self.claim_rem_deg[claimed]
        hist -= np.bincount(rem, minlength=len(hist))
        if hist.min() < 0:
            raise AssertionError("snapshot bookkeeping went negative")
        total = hist.sum()
        if total == 0:
            raise DomainViolation(f"no sleeping vertices remain at alpha={alpha}")
        return hist / total

    def to_json_dict(self) -> dict:
        return {
            "version": _version,
            "n_vertices": self.n_vertices,
            "seed": self.seed,
            "m": self.m,
            "delta": self.delta,
            "backend": self.backend,
            "max_height": self.max_height,
            "contour": self.contour.run_lengths(),
            "spine": [int(v) for v in self.spine],
            "ladder_times": [[int(k), int(t), int(v)] for (k, t, v) in self.ladder_times],
            "snapshots": {str(k): [int(c) for c in hist] for k, hist in self.snapshots.items()},
            "w": {str(k): int(val) for k, val in self.w.items()},
        }

    def save_json(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json_dict(), fh, sort_keys=True, indent=1)
            fh.write("\n")


def remaining_degree_histogram(res: ExplorationResult, alpha: float) -> np.ndarray:
    return res.remaining_degree_histogram(alpha)


def extract_longest_induced_path(res: ExplorationResult) -> list[int]:
    """The ancestral line at the first step attaining the maximum height."""
    if res.contour.n_events == 0:
        raise DomainViolation("empty exploration has no spine")
    return list(res.spine)


def _spine_from_kernel(out: dict) -> list[int]:
    contour = out["contour"]
    n_star = int(np.argmax(contour))
    if n_star == 0:
        return []
    v = int(out["event_vertex"][n_star - 1])
    parent = out["tree_parent"]
    path = []
    while v >= 0:
        path.append(v)
        v = int(parent[v])
    path.reverse()
    return path


def _ladder_vertices(values: np.ndarray, tags: np.ndarray, event_vertex: np.ndarray,
                     ladder: list[tuple[int, int]]) -> list[tuple[int, int, int]]:
    """Attach the top-of-stack vertex at each ladder time via one replay."""
    out = []
    stack = []
    it = iter(ladder)
    pending = next(it, None)
    if pending is not None and pending[1] == 0:
        # T_0 = 0: stack is empty, record the first root lazily
        first_root = int(event_vertex[0]) if len(event_vertex) else -1
        out.append((0, 0, first_root))
        pending = next(it, None)
    for i in range(len(tags)):
        if tags[i] == 2:
            stack.pop()
        else:
            stack.append(int(event_vertex[i]))
        while pending is not None and pending[1] == i + 1:
            out.append((pending[0], pending[1], stack[-1] if stack else -1))
            pending = next(it, None)
    return out


def assemble_result(out: dict, seed: int, m: int, delta: float, backend: str,
                    record_snapshots: bool = True) -> ExplorationResult:
    offsets = out["offsets"]
    graph = MultiGraph(offsets=offsets, pairing=out["pairing"])
    contour = ContourProcess(values=out["contour"], tags=out["event_tag"],
                             n_vertices=len(offsets) - 1, m=m)
    spine = _spine_from_kernel(out)
    res = ExplorationResult(
        graph=graph,
        contour=contour,
        spine=spine,
        seed=seed,
        m=m,
        delta=delta,
        backend=backend,
        claim_event=out["claim_event"],
        claim_rem_deg=out["claim_rem_deg"],
        tree_parent=out["tree_parent"],
        hit_event=out["hit_event"],
        hit_old_deg=out["hit_old_deg"],
        event_vertex=out["event_vertex"],
    )
    if record_snapshots:
        ladder = compute_ladder_times(contour, delta)
        res.ladder_times = _ladder_vertices(contour.values, contour.tags,
                                            out["event_vertex"], ladder)
        res.snapshots, res.w = _snapshots_at(res, [t for (_, t) in ladder])
    return res


def _snapshots_at(res: ExplorationResult, times: list[int]) -> tuple[dict, dict]:
    """Remaining-degree histograms of the sleeping set just before each listed
    step (state after step T-1), plus w = N - |S_{T-1}|."""
    degrees = res.graph.degrees()
    hist = np.bincount(degrees, minlength=int(degrees.max(initial=0)) + 2).astype(np.int64)
    n = res.n_vertices
    claim_order = np.argsort(res.claim_event, kind="stable")
    claim_ev_sorted = res.claim_event[claim_order]
    claim_deg_sorted = res.claim_rem_deg[claim_order]
    hit_event, hit_old = res.hit_event, res.hit_old_deg
    snapshots: dict[int, np.ndarray] = {}
    w: dict[int, int] = {}
    hp = 0
    cp = 0
    scount = n
    for k, t in enumerate(times):
        while hp < len(hit_event) and hit_event[hp] < t:
            old = hit_old[hp]
            hist[old] -= 1
            hist[old - 1] += 1
            hp += 1
        while cp < n and claim_ev_sorted[cp] < t:
            hist[claim_deg_sorted[cp]] -= 1
            scount -= 1
            cp += 1
        snapshots[k] = hist.copy()
        w[k] = n - scount
    return snapshots, w
