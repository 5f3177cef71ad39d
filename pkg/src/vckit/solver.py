"""Bounded-search-tree decision procedure for vertex cover.

The solver answers tau(G) <= k by branching on a path u-v-w (two edges
{u,v}, {v,w} among vertices not yet selected), trying a fixed list of
ways to cover both edges and recursing with the budget reduced by the
number of vertices added.  Search stops at the first success; every
branch restores the selected set on the way out, so the tree is walked
with O(n) extra state.

Three interchangeable strategies answer the same predicate and differ
only in search-tree shape:

* paper5 - five branches per path: {u,v}, {u,w}, {v,w}, {v}, {u,v,w},
  in that order.  The default.
* p3 - the classic two-way path rule: {v}, else {u,w}.
* edge - two-way branching on one uncovered edge {a,b}: {a}, else {b}.

Base cases: a negative budget fails; no uncovered edges succeeds.  For
paper5 and p3, which need a path of two edges to branch on, a position
where only pairwise-disjoint uncovered edges remain is decided
directly: it succeeds iff the budget covers their count, taking one
endpoint each.
"""

from __future__ import annotations

import sys
import threading
import time
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional, Union

from .graph import Graph


class Strategy(str, Enum):
    """Branching rule applied at each frontier found during the search."""

    PAPER_FIVE = "paper5"
    CLASSIC_P3 = "p3"
    EDGE_BRANCH = "edge"


class SolveTimeout(Exception):
    """Raised when a decide() call exceeds its time limit."""


class Triplet(NamedTuple):
    """A path u-v-w: edges {u,v} and {v,w} with all three unselected."""

    u: int
    v: int
    w: int


class IsolatedEdgesOnly(NamedTuple):
    """Only pairwise-disjoint uncovered edges remain; there are `count`."""

    count: int


class NoUncoveredEdges(NamedTuple):
    """Every edge has a selected endpoint: the selection is a cover."""


FrontierFinding = Union[Triplet, IsolatedEdgesOnly, NoUncoveredEdges]


class SelectedSet:
    """The cover under construction: O(1) membership plus an undo trail.

    push/pop follow stack discipline.  The trail exposes selection
    order, which is what makes backtracking (and inspecting a search in
    flight) cheap.
    """

    __slots__ = ("_flags", "_trail")

    def __init__(self, vertex_count: int):
        self._flags = bytearray(vertex_count)
        self._trail: list[int] = []

    def push(self, v: int) -> None:
        if not (0 <= v < len(self._flags)):
            raise ValueError(f"vertex id {v} out of range 0..{len(self._flags) - 1}")
        if self._flags[v]:
            raise ValueError(f"vertex {v} is already selected")
        self._flags[v] = 1
        self._trail.append(v)

    def pop(self) -> int:
        if not self._trail:
            raise ValueError("pop from an empty SelectedSet")
        v = self._trail.pop()
        self._flags[v] = 0
        return v

    def __contains__(self, v: int) -> bool:
        return 0 <= v < len(self._flags) and bool(self._flags[v])

    def __len__(self) -> int:
        return len(self._trail)

    @property
    def count(self) -> int:
        return len(self._trail)

    @property
    def trail(self) -> tuple[int, ...]:
        """Selected vertices in selection order."""
        return tuple(self._trail)

    def as_set(self) -> set[int]:
        return set(self._trail)

    def __repr__(self) -> str:
        return f"SelectedSet({sorted(self._trail)})"


@dataclass
class SolveStats:
    """Search-effort counters for one decide() call (or a merged run)."""

    nodes_expanded: int = 0
    max_depth: int = 0
    triplet_scans: int = 0
    elapsed_ms: float = 0.0

    def merge(self, other: "SolveStats") -> None:
        """Fold another run into this one: counts add, depth maxes."""
        self.nodes_expanded += other.nodes_expanded
        self.max_depth = max(self.max_depth, other.max_depth)
        self.triplet_scans += other.triplet_scans
        self.elapsed_ms += other.elapsed_ms


@dataclass
class SolveResult:
    """Outcome of a decide() call.

    certificate is a verified-size cover witnessing a true decision
    (at most the top-level budget; None on false).
    """

    decision: bool
    certificate: Optional[frozenset[int]]
    stats: SolveStats


def has_uncovered_edge(g: Graph, selected) -> bool:
    """True iff some edge of g has neither endpoint in `selected`.

    `selected` is anything supporting ``in`` over vertex ids.
    """
    for u, v in g.edges():
        if u not in selected and v not in selected:
            return True
    return False


def find_frontier(g: Graph, selected) -> FrontierFinding:
    """Locate the next branching spot, deterministically.

    Scans ids ascending for the first unselected center v with at least
    two unselected neighbors, and returns Triplet(u, v, w) where u < w
    are the two smallest such neighbors.  When no center exists, every
    uncovered edge is vertex-disjoint from the rest; the count of those
    is returned, or NoUncoveredEdges when there are none.

    This is the reference scan; BranchSolver reproduces it with
    incremental counts instead of rescanning.
    """
    endpoints = 0  # unselected vertices with exactly one unselected neighbor
    for v in range(g.vertex_count):
        if v in selected:
            continue
        first = -1
        for w in g.sorted_neighbors(v):
            if w not in selected:
                if first < 0:
                    first = w
                else:
                    return Triplet(first, v, w)
        if first >= 0:
            endpoints += 1
    if endpoints:
        # With no center anywhere, uncovered edges pair up their
        # endpoints one-to-one, so the count is exactly half.
        return IsolatedEdgesOnly(endpoints // 2)
    return NoUncoveredEdges()


# Budgets at or below this recurse directly on the main stack; larger
# ones move to a worker thread with a big stack (see _call_on_deep_stack).
_DIRECT_RECURSION_BUDGET = 500
_DEEP_STACK_BYTES = 256 * 1024 * 1024
# Check the deadline every this many nodes; a power of two so the test
# is a mask.
_TIME_CHECK_MASK = 255


def _call_on_deep_stack(fn, frames: int):
    """Run fn() where Python recursion `frames` deep cannot overflow.

    The recursion limit only guards the interpreter's own bookkeeping;
    each Python frame also consumes C stack, which the default 8 MiB
    thread stack exhausts around ten thousand frames.  A dedicated
    worker thread with a large stack makes depth limits a matter of
    memory, not crashes.
    """
    limit = frames + 200
    if sys.getrecursionlimit() < limit:
        sys.setrecursionlimit(limit)
    result: list = []
    failure: list[BaseException] = []

    def runner():
        try:
            result.append(fn())
        except BaseException as exc:  # re-raised on the calling thread
            failure.append(exc)

    old_size = threading.stack_size(_DEEP_STACK_BYTES)
    try:
        worker = threading.Thread(target=runner, name="vc-deep-search")
        worker.start()
    finally:
        threading.stack_size(old_size)
    worker.join()
    if failure:
        raise failure[0]
    return result[0]


class BranchSolver:
    """One search session over a fixed graph and strategy.

    The session owns the SelectedSet plus incremental state keyed to
    it: per-vertex counts of unselected neighbors and tallies of how
    many unselected vertices have exactly one (or two or more) of them.
    Those tallies decide terminal positions in O(1), and a monotone scan
    pointer (saved and restored around every branch) keeps locating the
    next frontier cheap.  decide() restores everything before
    returning, so one session can be reused across budgets.
    """

    def __init__(self, graph: Graph, strategy: Strategy | str = Strategy.PAPER_FIVE):
        self.graph = graph
        self.strategy = Strategy(strategy)
        self.selected = SelectedSet(graph.vertex_count)
        self._flags = self.selected._flags
        self._trail = self.selected._trail
        self._adj = graph.sorted_adjacency
        self._udeg = [len(a) for a in self._adj]
        self._cnt1 = sum(1 for d in self._udeg if d == 1)
        self._cnt2 = sum(1 for d in self._udeg if d >= 2)
        self._ptr = 0
        self._deadline: float | None = None
        self._nodes = 0
        self._max_depth = 0
        self._scans = 0
        self._certificate: frozenset[int] | None = None

    # -- public session surface -------------------------------------

    def select(self, v: int) -> None:
        """Add v to the selection, updating the incremental counts."""
        if not (0 <= v < self.graph.vertex_count):
            raise ValueError(f"vertex id {v} out of range")
        if self._flags[v]:
            raise ValueError(f"vertex {v} is already selected")
        self._select(v)

    def deselect(self) -> int:
        """Undo the most recent selection; returns the vertex."""
        if not self._trail:
            raise ValueError("deselect on an empty SelectedSet")
        v = self._trail[-1]
        self._deselect()
        self._ptr = 0  # deselection can revive centers below the pointer
        return v

    def frontier(self) -> FrontierFinding:
        """find_frontier for the current selection, via the fast counts."""
        saved = self._ptr
        self._ptr = 0
        try:
            t = self._next_triplet()
        finally:
            self._ptr = saved
        if t is not None:
            return Triplet(*t)
        if self._cnt1:
            return IsolatedEdgesOnly(self._cnt1 >> 1)
        return NoUncoveredEdges()

    def decide(self, k: int, time_limit: float | None = None) -> SolveResult:
        """Decide tau(graph) <= k.

        Requires an empty SelectedSet (a session mid-inspection should
        be unwound first) and leaves it empty again.  time_limit is in
        seconds; exceeding it raises SolveTimeout with the session state
        restored.  Budgets beyond a few hundred run on a dedicated
        big-stack thread, so deep searches (k in the thousands) are
        safe.
        """
        if k < 0:
            raise ValueError(f"budget k must be >= 0, got {k}")
        if self._trail:
            raise RuntimeError("decide() requires an empty SelectedSet")
        self._nodes = 0
        self._max_depth = 0
        self._scans = 0
        self._certificate = None
        self._ptr = 0
        self._deadline = (
            None if time_limit is None else time.perf_counter() + time_limit
        )
        recurse = {
            Strategy.PAPER_FIVE: self._decide_paper5,
            Strategy.CLASSIC_P3: self._decide_p3,
            Strategy.EDGE_BRANCH: self._decide_edge,
        }[self.strategy]

        start = time.perf_counter()
        try:
            if k <= _DIRECT_RECURSION_BUDGET:
                found = recurse(k, 0)
            else:
                found = _call_on_deep_stack(lambda: recurse(k, 0), k + 2)
        except BaseException:
            # An abort (timeout, interrupt) unwinds past the branch
            # cleanup; rewind the trail so the session stays usable.
            while self._trail:
                self._deselect()
            self._ptr = 0
            raise
        elapsed_ms = (time.perf_counter() - start) * 1000.0

        stats = SolveStats(
            nodes_expanded=self._nodes,
            max_depth=self._max_depth,
            triplet_scans=self._scans,
            elapsed_ms=elapsed_ms,
        )
        return SolveResult(
            decision=found,
            certificate=self._certificate if found else None,
            stats=stats,
        )

    # -- incremental bookkeeping --------------------------------------
    #
    # _udeg[v] counts unselected neighbors of v; _cnt1/_cnt2 count
    # unselected vertices whose _udeg is exactly 1 / at least 2.
    # _select and _deselect are exact inverses under the stack
    # discipline, which is what makes backtracking restore the counts.

    def _select(self, v: int) -> None:
        udeg = self._udeg
        flags = self._flags
        d = udeg[v]
        if d:
            if d == 1:
                self._cnt1 -= 1
            else:
                self._cnt2 -= 1
        flags[v] = 1
        self._trail.append(v)
        c1 = self._cnt1
        c2 = self._cnt2
        for w in self._adj[v]:
            dw = udeg[w]
            udeg[w] = dw - 1
            if not flags[w]:
                if dw == 2:
                    c1 += 1
                    c2 -= 1
                elif dw == 1:
                    c1 -= 1
        self._cnt1 = c1
        self._cnt2 = c2

    def _deselect(self) -> None:
        v = self._trail.pop()
        udeg = self._udeg
        flags = self._flags
        c1 = self._cnt1
        c2 = self._cnt2
        for w in self._adj[v]:
            dw = udeg[w]
            udeg[w] = dw + 1
            if not flags[w]:
                if dw == 1:
                    c1 -= 1
                    c2 += 1
                elif dw == 0:
                    c1 += 1
        flags[v] = 0
        d = udeg[v]
        if d:
            if d == 1:
                c1 += 1
            else:
                c2 += 1
        self._cnt1 = c1
        self._cnt2 = c2

    # -- frontier scans ------------------------------------------------
    #
    # The pointer invariant: every unselected vertex below _ptr fails
    # the scan predicate (fewer than two unselected neighbors for the
    # triplet scan, none for the edge scan).  Selecting vertices only
    # lowers neighbor counts, so the invariant survives deeper in the
    # search; each branch frame restores the pointer it entered with.

    def _next_triplet(self):
        """The Triplet of find_frontier as a plain tuple, or None."""
        self._scans += 1
        if not self._cnt2:
            return None
        flags = self._flags
        udeg = self._udeg
        p = self._ptr
        while flags[p] or udeg[p] < 2:
            p += 1
        self._ptr = p
        first = -1
        for w in self._adj[p]:
            if not flags[w]:
                if first < 0:
                    first = w
                else:
                    return (first, p, w)
        raise AssertionError("neighbor counts out of sync with flags")

    def _next_uncovered_edge(self):
        """Lowest-endpoint uncovered edge as (a, b), or None."""
        self._scans += 1
        if not (self._cnt1 or self._cnt2):
            return None
        flags = self._flags
        udeg = self._udeg
        p = self._ptr
        while flags[p] or not udeg[p]:
            p += 1
        self._ptr = p
        for w in self._adj[p]:
            if not flags[w]:
                return (p, w)
        raise AssertionError("neighbor counts out of sync with flags")

    def _capture_certificate(self, isolated: int) -> None:
        """Freeze the accepting leaf's cover: the trail plus the smaller
        endpoint of each remaining isolated edge."""
        cover = list(self._trail)
        if isolated:
            udeg = self._udeg
            flags = self._flags
            for v in range(self.graph.vertex_count):
                if not flags[v] and udeg[v] == 1:
                    for w in self._adj[v]:
                        if not flags[w]:
                            if v < w:
                                cover.append(v)
                            break
        self._certificate = frozenset(cover)

    # -- the three recursions -------------------------------------------

    def _decide_paper5(self, k: int, depth: int) -> bool:
        self._nodes += 1
        if depth > self._max_depth:
            self._max_depth = depth
        if k < 0:
            return False
        if self._deadline is not None and not self._nodes & _TIME_CHECK_MASK:
            if time.perf_counter() > self._deadline:
                raise SolveTimeout(f"time limit exceeded after {self._nodes} nodes")
        entry_ptr = self._ptr
        found_triplet = self._next_triplet()
        if found_triplet is None:
            isolated = self._cnt1 >> 1
            self._ptr = entry_ptr
            if isolated <= k:
                self._capture_certificate(isolated)
                return True
            return False
        u, v, w = found_triplet
        select = self._select
        deselect = self._deselect
        child = depth + 1
        select(u)
        select(v)
        found = self._decide_paper5(k - 2, child)
        deselect()
        deselect()
        if not found:
            select(u)
            select(w)
            found = self._decide_paper5(k - 2, child)
            deselect()
            deselect()
        if not found:
            select(v)
            select(w)
            found = self._decide_paper5(k - 2, child)
            deselect()
            deselect()
        if not found:
            select(v)
            found = self._decide_paper5(k - 1, child)
            deselect()
        if not found:
            select(u)
            select(v)
            select(w)
            found = self._decide_paper5(k - 3, child)
            deselect()
            deselect()
            deselect()
        self._ptr = entry_ptr
        return found

    def _decide_p3(self, k: int, depth: int) -> bool:
        self._nodes += 1
        if depth > self._max_depth:
            self._max_depth = depth
        if k < 0:
            return False
        if self._deadline is not None and not self._nodes & _TIME_CHECK_MASK:
            if time.perf_counter() > self._deadline:
                raise SolveTimeout(f"time limit exceeded after {self._nodes} nodes")
        entry_ptr = self._ptr
        found_triplet = self._next_triplet()
        if found_triplet is None:
            isolated = self._cnt1 >> 1
            self._ptr = entry_ptr
            if isolated <= k:
                self._capture_certificate(isolated)
                return True
            return False
        u, v, w = found_triplet
        child = depth + 1
        self._select(v)
        found = self._decide_p3(k - 1, child)
        self._deselect()
        if not found:
            self._select(u)
            self._select(w)
            found = self._decide_p3(k - 2, child)
            self._deselect()
            self._deselect()
        self._ptr = entry_ptr
        return found

    def _decide_edge(self, k: int, depth: int) -> bool:
        self._nodes += 1
        if depth > self._max_depth:
            self._max_depth = depth
        if k < 0:
            return False
        if self._deadline is not None and not self._nodes & _TIME_CHECK_MASK:
            if time.perf_counter() > self._deadline:
                raise SolveTimeout(f"time limit exceeded after {self._nodes} nodes")
        entry_ptr = self._ptr
        edge = self._next_uncovered_edge()
        if edge is None:
            self._ptr = entry_ptr
            self._capture_certificate(0)
            return True
        a, b = edge
        child = depth + 1
        self._select(a)
        found = self._decide_edge(k - 1, child)
        self._deselect()
        if not found:
            self._select(b)
            found = self._decide_edge(k - 1, child)
            self._deselect()
        self._ptr = entry_ptr
        return found


def decide_vc(
    g: Graph,
    k: int,
    strategy: Strategy | str = Strategy.PAPER_FIVE,
    time_limit: float | None = None,
) -> SolveResult:
    """One-shot tau(g) <= k decision; see BranchSolver.decide."""
    return BranchSolver(g, strategy).decide(k, time_limit=time_limit)


def greedy_maximal_matching(g: Graph) -> list[tuple[int, int]]:
    """A maximal matching, grown greedily over edges in ascending order.

    Its size is a lower bound on tau(g): the edges are vertex-disjoint,
    so each needs its own cover vertex.
    """
    matched = bytearray(g.vertex_count)
    matching: list[tuple[int, int]] = []
    for u, v in g.edges():
        if not matched[u] and not matched[v]:
            matched[u] = 1
            matched[v] = 1
            matching.append((u, v))
    return matching


class MinCoverResult(NamedTuple):
    size: int
    cover: frozenset[int]
    stats: SolveStats


def min_vertex_cover(
    g: Graph,
    strategy: Strategy | str = Strategy.PAPER_FIVE,
    time_limit: float | None = None,
) -> MinCoverResult:
    """Exact minimum vertex cover via upward decision probes.

    Starts at the greedy matching lower bound and asks decide_vc for
    each k until the first success, which is exactly tau(g); the
    returned cover is re-verified edge by edge.  Stats are merged
    across probes.  time_limit (seconds) spans the whole computation.
    """
    deadline = None if time_limit is None else time.perf_counter() + time_limit
    solver = BranchSolver(g, strategy)
    total = SolveStats()
    k = len(greedy_maximal_matching(g))
    while True:
        remaining = None
        if deadline is not None:
            remaining = deadline - time.perf_counter()
            if remaining <= 0:
                raise SolveTimeout("time limit exceeded between decision probes")
        result = solver.decide(k, time_limit=remaining)
        total.merge(result.stats)
        if result.decision:
            cover = result.certificate
            if cover is None or len(cover) != k or not _covers_all_edges(g, cover):
                raise AssertionError("internal error: bad certificate at tau")
            return MinCoverResult(size=k, cover=cover, stats=total)
        k += 1


def _covers_all_edges(g: Graph, cover: frozenset[int]) -> bool:
    for u, v in g.edges():
        if u not in cover and v not in cover:
            return False
    return True
