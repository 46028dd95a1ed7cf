"""Free algebras in the variety generated by a finite CLattice.

The free algebra on n generators is realized inside A**(|A|**n): each element
is the value vector of an n-variable term function, one coordinate per
assignment of the generators (row-major, variable 0 varying slowest).  The
closure starts from the n projection vectors plus the constant vectors and
repeatedly pairs frontier elements against everything known under join and
meet, applying the unary operation to the frontier.

Discovery order is canonical: whichever backend runs, element i of any two
runs is the same vector.  Hitting the element cap stops the closure exactly
at the cap; resuming with a larger cap replays the interrupted round (the
deduplication makes that idempotent) and continues identically.
"""

from __future__ import annotations

import time
from typing import Optional

import numpy as np

from . import kernels
from .backend import USE_NUMBA
from .clattice import CLattice
from .errors import CapTooSmall, IncompleteClosure


class FreeAlgebraResult:
    """Closure state: vector store, progress markers, round history."""

    def __init__(self, base: CLattice, n: int, cap: Optional[int]):
        self.base = base
        self.n = n
        self.cap = cap
        self.count = 0
        self.complete = False
        # current round: frontier [frontier_start, frontier_end); kept as
        # explicit state so an interrupted round replays identically
        self.frontier_start = 0
        self.frontier_end = 0
        self.round_counts: list[int] = []
        size = base.size
        self.width = size ** n
        initial = cap if cap is not None else max(1024, 2 * (n + 2))
        self.store = np.empty((initial, self.width), dtype=np.uint8)

    @property
    def elements(self) -> int:
        return self.count

    def vectors(self) -> np.ndarray:
        return self.store[:self.count]

    def generators(self) -> np.ndarray:
        """The n projection vectors (the free generators), row-major order."""
        return _projections(self.base.size, self.n)

    def __repr__(self):
        state = "complete" if self.complete else "partial"
        return (f"FreeAlgebraResult(n={self.n}, elements={self.count}, "
                f"{state})")


def _projections(size: int, n: int) -> np.ndarray:
    coords = np.arange(size ** n)
    rows = np.empty((n, size ** n), dtype=np.uint8)
    for i in range(n):
        rows[i] = (coords // size ** (n - 1 - i)) % size
    return rows


def _seed_rows(A: CLattice, n: int) -> np.ndarray:
    size = A.size
    width = size ** n
    rows = np.empty((n + 2, width), dtype=np.uint8)
    rows[:n] = _projections(size, n)
    rows[n] = 0
    rows[n + 1] = A.lattice.top
    return rows


class _Closure:
    """Backend-uniform driver around the round kernels."""

    def __init__(self, result: FreeAlgebraResult):
        self.r = result
        A = result.base
        self.join_u8 = A.lattice.join.astype(np.uint8)
        self.meet_u8 = A.lattice.meet.astype(np.uint8)
        self.comp_u8 = A.unary.astype(np.uint8)
        self._rebuild_index()

    def _rebuild_index(self):
        capacity = self.r.store.shape[0]
        if USE_NUMBA:
            self.table = kernels.new_hash_table(capacity)
            kernels.rebuild_index_numba(self.r.store, self.r.count, self.table)
        else:
            self.index = kernels.rebuild_index_numpy(self.r.store, self.r.count)

    def grow(self, new_capacity: int):
        old = self.r.store
        self.r.store = np.empty((new_capacity, self.r.width), dtype=np.uint8)
        self.r.store[:self.r.count] = old[:self.r.count]
        self._rebuild_index()

    def insert(self, rows: np.ndarray, cap: int) -> bool:
        if USE_NUMBA:
            self.r.count, full = kernels.insert_rows_numba(
                self.r.store, self.r.count, self.table, rows, cap)
        else:
            self.r.count, full = kernels.insert_rows_numpy(
                self.r.store, self.r.count, self.index, rows, cap)
        return full

    def run_round(self, cap: int) -> bool:
        if USE_NUMBA:
            self.r.count, full = kernels.closure_round_numba(
                self.r.store, self.r.count, self.r.frontier_start,
                self.r.frontier_end, self.join_u8, self.meet_u8, self.comp_u8,
                self.table, cap)
        else:
            self.r.count, full = kernels.closure_round_numpy(
                self.r.store, self.r.count, self.r.frontier_start,
                self.r.frontier_end, self.join_u8, self.meet_u8, self.comp_u8,
                self.index, cap)
        return full


def free_algebra(A: CLattice, n: int, cap: Optional[int] = None,
                 time_budget: Optional[float] = None) -> FreeAlgebraResult:
    """Breadth-first closure of the generated free algebra.

    Stops at the fixpoint (complete=True) or exactly at the element cap
    (complete=False; the count is a valid lower bound).  A time budget, when
    given, is checked between rounds; budget stops are resumable but land at
    a round boundary rather than a canonical element count.
    """
    if n < 1:
        raise ValueError("generator count must be >= 1")
    if cap is not None and cap < n + 2:
        raise CapTooSmall(f"cap {cap} cannot hold {n} generators plus bounds")
    result = FreeAlgebraResult(A, n, cap)
    closure = _Closure(result)
    hard_cap = cap if cap is not None else result.store.shape[0]
    full = closure.insert(_seed_rows(A, n), hard_cap)
    if full:
        raise CapTooSmall(f"cap {cap} exhausted by the seed vectors")
    result.frontier_start = 0
    result.frontier_end = result.count
    _drive(result, closure, time_budget)
    return result


def resume(result: FreeAlgebraResult, cap: Optional[int] = None,
           time_budget: Optional[float] = None) -> FreeAlgebraResult:
    """Continue a partial closure under a new cap; no-op when complete."""
    if result.complete:
        return result
    if cap is not None and cap < result.count:
        raise CapTooSmall(f"cap {cap} below the {result.count} elements found")
    result.cap = cap
    closure = _Closure(result)
    if cap is not None and cap > result.store.shape[0]:
        closure.grow(cap)
    _drive(result, closure, time_budget)
    return result


def _drive(result: FreeAlgebraResult, closure: _Closure,
           time_budget: Optional[float]):
    start = time.monotonic()
    while result.frontier_start != result.frontier_end:
        if time_budget is not None and time.monotonic() - start > time_budget:
            return
        hard_cap = result.cap if result.cap is not None else result.store.shape[0]
        full = closure.run_round(hard_cap)
        if full:
            if result.cap is None:
                # allocation limit, not a user cap: grow, replay the round
                closure.grow(4 * result.store.shape[0])
                continue
            result.round_counts.append(result.count)
            return
        result.round_counts.append(result.count)
        result.frontier_start = result.frontier_end
        result.frontier_end = result.count
    result.complete = True


def birkhoff_bound(A: CLattice, n: int) -> int:
    """Exact |A| ** (|A| ** n) as an arbitrary-precision integer."""
    if n < 1:
        raise ValueError("generator count must be >= 1")
    size = A.size
    return size ** (size ** n)


def _distinct_partition_columns(vectors: np.ndarray):
    """Coordinates deduplicated by induced partition (only that matters for
    separation), each as (first column index, class ids, class count)."""
    seen = {}
    for c in range(vectors.shape[1]):
        ids = np.unique(vectors[:, c], return_inverse=True)[1].astype(np.int64)
        key = ids.tobytes()
        if key not in seen:
            seen[key] = (c, ids, int(ids.max()) + 1)
    return sorted(seen.values())


def minimal_separating_set(result: FreeAlgebraResult) -> list[int]:
    """Minimum-cardinality coordinate set whose restriction is injective.

    Greedy refinement seeds an upper bound; iterative-deepening branch and
    bound (class-count pruning plus a failed-state memo) then either finds a
    smaller set or proves minimality.  The set gives |F| <= |A| ** len(set).
    """
    if not result.complete:
        raise IncompleteClosure("separating set needs a finished closure")
    vectors = result.vectors()
    count = vectors.shape[0]
    if count <= 1:
        return []
    cols = _distinct_partition_columns(vectors)
    idxs = [c for c, _, _ in cols]
    parts = [ids for _, ids, _ in cols]
    blocks = [b for _, _, b in cols]

    def refine(classes: np.ndarray, j: int) -> tuple[np.ndarray, int]:
        merged = classes * blocks[j] + parts[j]
        inv = np.unique(merged, return_inverse=True)[1]
        return inv.astype(np.int64), int(inv.max()) + 1

    chosen: list[int] = []
    classes = np.zeros(count, dtype=np.int64)
    ncl = 1
    while ncl < count:
        best, best_k = -1, -1
        for j in range(len(cols)):
            if j in chosen:
                continue
            k = refine(classes, j)[1]
            if k > best_k:
                best, best_k = j, k
        if best_k == ncl:
            raise AssertionError("store rows not distinct")  # cannot happen
        chosen.append(best)
        classes, ncl = refine(classes, best)

    max_block = max(blocks)

    def dfs(start, classes, ncl, remaining, failed):
        if ncl == count:
            return []
        if remaining == 0 or ncl * max_block ** remaining < count:
            return None
        # a recorded failure only dominates when it had at least as many
        # columns available, i.e. its start was <= the current one
        key = (classes.tobytes(), remaining)
        if failed.get(key, len(cols)) <= start:
            return None
        for j in range(start, len(cols) - remaining + 1):
            c2, n2 = refine(classes, j)
            if n2 == ncl:
                continue
            sub = dfs(j + 1, c2, n2, remaining - 1, failed)
            if sub is not None:
                return [j] + sub
        failed[key] = min(failed.get(key, len(cols)), start)
        return None

    for target in range(1, len(chosen)):
        found = dfs(0, np.zeros(count, dtype=np.int64), 1, target, {})
        if found is not None:
            return [idxs[j] for j in found]
    return sorted(idxs[j] for j in chosen)
