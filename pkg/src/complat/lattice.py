"""Finite bounded lattices as dense tables.

Elements are indices 0..size-1 in a fixed linear extension: index 0 is the
bottom, index size-1 the top.  The order relation and the join/meet tables
are materialized numpy arrays, so every downstream algorithm is a table
lookup.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import CycleDetected, NotALattice, NotBounded


class FiniteLattice:
    """A bounded lattice on elements 0..size-1 with materialized tables.

    Attributes:
        names:  element labels, index-aligned
        leq:    (size, size) bool, leq[a, b] iff a <= b
        join:   (size, size) int64 element indices
        meet:   (size, size) int64 element indices
        bottom: 0
        top:    size - 1
    """

    __slots__ = ("names", "leq", "join", "meet")

    def __init__(self, names: Sequence[str], leq: np.ndarray,
                 join: np.ndarray, meet: np.ndarray):
        self.names = tuple(names)
        self.leq = leq
        self.join = join
        self.meet = meet
        self.leq.setflags(write=False)
        self.join.setflags(write=False)
        self.meet.setflags(write=False)

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.size - 1

    def index(self, name: str) -> int:
        return self.names.index(name)

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs (lower, upper): a < b with nothing strictly between."""
        lt = self.leq & ~np.eye(self.size, dtype=bool)
        strict_between = lt @ lt
        child = lt & ~strict_between
        return [(int(a), int(b)) for a, b in np.argwhere(child)]

    def __eq__(self, other):
        return (isinstance(other, FiniteLattice)
                and self.names == other.names
                and np.array_equal(self.leq, other.leq))

    def __hash__(self):
        return hash((self.names, self.leq.tobytes()))

    def __repr__(self):
        return f"FiniteLattice(size={self.size}, names={list(self.names)})"


def _toposort(names: Sequence[str], lt: np.ndarray) -> list[int]:
    """Linear extension of the strict order lt, preferring declared order.

    Kahn's algorithm; among ready elements always the smallest declared
    index, so the result is reproducible for a given input.
    """
    n = len(names)
    indeg = lt.sum(axis=0)
    placed = []
    remaining = set(range(n))
    while remaining:
        ready = sorted(i for i in remaining if indeg[i] == 0)
        if not ready:
            raise CycleDetected("cover relation contains a cycle")
        pick = ready[0]
        placed.append(pick)
        remaining.discard(pick)
        indeg -= lt[pick]
    return placed


def _tables_from_leq(names: Sequence[str], leq: np.ndarray) -> FiniteLattice:
    """Compute join/meet tables from a canonical (bottom-first) order matrix."""
    n = len(names)
    join = np.empty((n, n), dtype=np.int64)
    meet = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(a, n):
            ub = leq[a] & leq[b]
            # least element of ub: below every other upper bound
            cand = np.flatnonzero(ub)
            least = [c for c in cand if not np.any(ub & ~leq[c])]
            if len(least) != 1:
                raise NotALattice(
                    f"elements {names[a]!r}, {names[b]!r} have no unique join")
            lb = leq[:, a] & leq[:, b]
            cand = np.flatnonzero(lb)
            greatest = [c for c in cand if not np.any(lb & ~leq[:, c])]
            if len(greatest) != 1:
                raise NotALattice(
                    f"elements {names[a]!r}, {names[b]!r} have no unique meet")
            join[a, b] = join[b, a] = least[0]
            meet[a, b] = meet[b, a] = greatest[0]
    return FiniteLattice(names, leq, join, meet)


def from_leq(names: Sequence[str], leq: np.ndarray) -> FiniteLattice:
    """Build a lattice from an arbitrary-order leq matrix.

    Validates the order axioms, reorders elements into the canonical linear
    extension (bottom first, top last), and materializes join/meet tables.
    """
    n = len(names)
    if len(set(names)) != n:
        raise ValueError("element names must be distinct")
    leq = np.asarray(leq, dtype=bool)
    if leq.shape != (n, n):
        raise ValueError("leq shape does not match names")
    if not np.all(np.diag(leq)):
        raise ValueError("leq is not reflexive")
    if np.any(leq & leq.T & ~np.eye(n, dtype=bool)):
        raise ValueError("leq is not antisymmetric")
    closed = leq @ leq
    if np.any(closed & ~leq):
        raise ValueError("leq is not transitive")

    minimal = np.flatnonzero(~(leq & ~np.eye(n, dtype=bool)).any(axis=0))
    maximal = np.flatnonzero(~(leq & ~np.eye(n, dtype=bool)).any(axis=1))
    if len(minimal) != 1 or len(maximal) != 1:
        raise NotBounded(
            f"{len(minimal)} minimal and {len(maximal)} maximal elements")

    lt = leq & ~np.eye(n, dtype=bool)
    order = _toposort(names, lt)
    perm = np.array(order)
    new_names = [names[i] for i in order]
    new_leq = leq[np.ix_(perm, perm)]
    return _tables_from_leq(new_names, new_leq)


def build_from_covers(names: Sequence[str],
                      covers: Iterable[tuple[str, str]]) -> FiniteLattice:
    """Build a lattice from element labels and (lower, upper) cover pairs."""
    names = list(names)
    if len(set(names)) != len(names):
        raise ValueError("element names must be distinct")
    idx = {name: i for i, name in enumerate(names)}
    n = len(names)
    adj = np.zeros((n, n), dtype=bool)
    for lo, hi in covers:
        if lo not in idx or hi not in idx:
            raise ValueError(f"cover ({lo!r}, {hi!r}) references undeclared label")
        if lo == hi:
            raise CycleDetected(f"cover ({lo!r}, {hi!r}) is a self-loop")
        adj[idx[lo], idx[hi]] = True

    # reflexive-transitive closure; a cycle shows up as antisymmetry failure
    reach = adj.copy()
    for _ in range(n):
        new = reach | (reach @ reach)
        if np.array_equal(new, reach):
            break
        reach = new
    if np.any(reach & reach.T):
        raise CycleDetected("cover relation contains a cycle")
    leq = reach | np.eye(n, dtype=bool)
    return from_leq(names, leq)


def validate(L: FiniteLattice) -> None:
    """Assert every structural invariant by full table scan; raises on failure."""
    n = L.size
    eye = np.eye(n, dtype=bool)
    assert np.all(np.diag(L.leq)), "leq not reflexive"
    assert not np.any(L.leq & L.leq.T & ~eye), "leq not antisymmetric"
    assert not np.any((L.leq @ L.leq) & ~L.leq), "leq not transitive"
    assert np.all(L.leq[0]), "index 0 is not a bottom"
    assert np.all(L.leq[:, n - 1]), "last index is not a top"
    if n > 1:
        assert L.bottom != L.top
    j, m = L.join, L.meet
    idx = np.arange(n)
    assert np.array_equal(j, j.T) and np.array_equal(m, m.T), "not commutative"
    assert np.array_equal(j[idx, idx], idx) and np.array_equal(m[idx, idx], idx), \
        "not idempotent"
    a3 = idx[:, None, None]
    c3 = idx[None, None, :]
    assert np.array_equal(j[j[:, :, None], c3], j[a3, j[None, :, :]]), \
        "join not associative"
    assert np.array_equal(m[m[:, :, None], c3], m[a3, m[None, :, :]]), \
        "meet not associative"
    # absorption both ways
    assert np.array_equal(m[idx[:, None], j], idx[:, None].repeat(n, 1)), \
        "absorption x & (x | y) failed"
    assert np.array_equal(j[idx[:, None], m], idx[:, None].repeat(n, 1)), \
        "absorption x | (x & y) failed"
    # leq consistency: a <= b iff a & b == a iff a | b == b
    assert np.array_equal(L.leq, m == idx[:, None]), "leq/meet mismatch"
    assert np.array_equal(L.leq, j == idx[None, :]), "leq/join mismatch"
    # tables really are least upper / greatest lower bounds
    for a in range(n):
        for b in range(n):
            ub = L.leq[a] & L.leq[b]
            assert ub[j[a, b]] and not np.any(ub & ~L.leq[j[a, b]])
            lb = L.leq[:, a] & L.leq[:, b]
            assert lb[m[a, b]] and not np.any(lb & ~L.leq[:, m[a, b]])


def is_distributive(L: FiniteLattice) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """Full triple scan of x & (y | z) == (x & y) | (x & z); first witness."""
    n = L.size
    x = np.arange(n)[:, None, None]
    y = np.arange(n)[None, :, None]
    z = np.arange(n)[None, None, :]
    lhs = L.meet[x, L.join[y, z]]
    rhs = L.join[L.meet[x, y], L.meet[x, z]]
    bad = lhs != rhs
    if not bad.any():
        return True, None
    flat = int(np.flatnonzero(bad.reshape(-1))[0])
    return False, (flat // (n * n), (flat // n) % n, flat % n)


def is_modular(L: FiniteLattice) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """Full triple scan of x & (y | (x & z)) == (x & y) | (x & z); first witness."""
    n = L.size
    x = np.arange(n)[:, None, None]
    y = np.arange(n)[None, :, None]
    z = np.arange(n)[None, None, :]
    lhs = L.meet[x, L.join[y, L.meet[x, z]]]
    rhs = L.join[L.meet[x, y], L.meet[x, z]]
    bad = lhs != rhs
    if not bad.any():
        return True, None
    flat = int(np.flatnonzero(bad.reshape(-1))[0])
    return False, (flat // (n * n), (flat // n) % n, flat % n)


def _invariants(leq: np.ndarray, unary: Optional[np.ndarray]) -> list[tuple]:
    """Per-element fingerprints preserved by isomorphism, used for pruning."""
    n = leq.shape[0]
    down = leq.sum(axis=0)
    up = leq.sum(axis=1)
    lt = leq & ~np.eye(n, dtype=bool)
    child = lt & ~(lt @ lt)
    out = []
    for i in range(n):
        sig = [int(down[i]), int(up[i]), int(child[:, i].sum()), int(child[i].sum())]
        if unary is not None:
            sig.append(int(down[unary[i]]))
            sig.append(int(up[unary[i]]))
        out.append(tuple(sig))
    return out


def are_isomorphic(A, B) -> Optional[list[int]]:
    """Bijection preserving order (and unary tables when both carry one).

    Accepts FiniteLattice or CLattice arguments; returns the element map of
    the first isomorphism found in backtracking order, or None.
    """
    ua = getattr(A, "unary", None)
    ub = getattr(B, "unary", None)
    La = getattr(A, "lattice", A)
    Lb = getattr(B, "lattice", B)
    use_unary = ua is not None and ub is not None
    if La.size != Lb.size:
        return None
    n = La.size
    inv_a = _invariants(La.leq, ua if use_unary else None)
    inv_b = _invariants(Lb.leq, ub if use_unary else None)
    if sorted(inv_a) != sorted(inv_b):
        return None

    cand = [[j for j in range(n) if inv_b[j] == inv_a[i]] for i in range(n)]
    mapping = [-1] * n
    used = [False] * n
    la, lb = La.leq, Lb.leq

    def extend(i: int) -> bool:
        if i == n:
            return True
        for j in cand[i]:
            if used[j]:
                continue
            ok = True
            for k in range(i):
                if la[i, k] != lb[j, mapping[k]] or la[k, i] != lb[mapping[k], j]:
                    ok = False
                    break
            if ok and use_unary:
                # indices 0..i are all assigned, so every unary constraint
                # whose source and target fall in that range is decidable
                mapping[i] = j
                for k in range(i + 1):
                    t = int(ua[k])
                    if t <= i and ub[mapping[k]] != mapping[t]:
                        ok = False
                        break
                mapping[i] = -1
            if ok:
                mapping[i] = j
                used[j] = True
                if extend(i + 1):
                    return True
                mapping[i] = -1
                used[j] = False
        return False

    return mapping if extend(0) else None
