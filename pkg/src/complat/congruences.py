"""Congruences of a lattice with a unary operation.

A congruence is a partition compatible with join, meet and the unary table.
Principal congruences are generated by translation closure over union-find;
the full congruence set is the closure of the principal ones under pairwise
join, plus the diagonal.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from .clattice import CLattice
from .errors import TrivialAlgebra
from .lattice import FiniteLattice, from_leq


class Partition:
    """Partition of 0..n-1 in canonical form: block ids numbered by least member."""

    __slots__ = ("ids",)

    def __init__(self, ids):
        arr = np.asarray(ids, dtype=np.int64)
        self.ids = _canonical_ids(arr)
        self.ids.setflags(write=False)

    @property
    def size(self) -> int:
        return len(self.ids)

    @property
    def num_blocks(self) -> int:
        return int(self.ids.max()) + 1

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_blocks)]
        for i, b in enumerate(self.ids):
            out[b].append(i)
        return out

    def same(self, a: int, b: int) -> bool:
        return self.ids[a] == self.ids[b]

    def refines(self, other: "Partition") -> bool:
        """True iff every block of self lies inside a block of other."""
        seen = {}
        for i in range(self.size):
            key = self.ids[i]
            if key in seen:
                if other.ids[i] != seen[key]:
                    return False
            else:
                seen[key] = other.ids[i]
        return True

    def join(self, other: "Partition") -> "Partition":
        """Smallest common coarsening (transitive closure of the union)."""
        parent = list(range(self.size))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for ids in (self.ids, other.ids):
            first = {}
            for i, b in enumerate(ids):
                if b in first:
                    ra, rb = find(first[b]), find(i)
                    if ra != rb:
                        parent[rb] = ra
                else:
                    first[b] = i
        return Partition([find(i) for i in range(self.size)])

    def meet(self, other: "Partition") -> "Partition":
        pair_ids = {}
        out = []
        for i in range(self.size):
            key = (self.ids[i], other.ids[i])
            out.append(pair_ids.setdefault(key, i))
        return Partition(out)

    def format(self, names) -> str:
        return "".join(
            "{" + ",".join(names[i] for i in block) + "}" for block in self.blocks())

    def __eq__(self, other):
        return isinstance(other, Partition) and np.array_equal(self.ids, other.ids)

    def __hash__(self):
        return hash(self.ids.tobytes())

    def __repr__(self):
        return f"Partition({self.ids.tolist()})"


def _canonical_ids(arr: np.ndarray) -> np.ndarray:
    relabel = {}
    out = np.empty_like(arr)
    for i, b in enumerate(arr):
        out[i] = relabel.setdefault(int(b), len(relabel))
    return out


def diagonal(n: int) -> Partition:
    return Partition(range(n))


def full(n: int) -> Partition:
    return Partition([0] * n)


def is_congruence(A: CLattice, part: Partition) -> bool:
    """Direct compatibility scan of every basic operation."""
    L, u, ids = A.lattice, A.unary, part.ids
    n = L.size
    for a in range(n):
        for b in range(a + 1, n):
            if ids[a] != ids[b]:
                continue
            if ids[u[a]] != ids[u[b]]:
                return False
            for w in range(n):
                if ids[L.join[a, w]] != ids[L.join[b, w]]:
                    return False
                if ids[L.meet[a, w]] != ids[L.meet[b, w]]:
                    return False
    return True


def principal_congruence(A: CLattice, a: int, b: int) -> Partition:
    """Smallest congruence relating a and b (translation closure, union-find)."""
    L, u = A.lattice, A.unary
    n = L.size
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = [(a, b)]
    while queue:
        p, q = queue.pop()
        rp, rq = find(p), find(q)
        if rp == rq:
            continue
        parent[rq] = rp
        queue.append((int(u[p]), int(u[q])))
        for w in range(n):
            queue.append((int(L.join[p, w]), int(L.join[q, w])))
            queue.append((int(L.meet[p, w]), int(L.meet[q, w])))
    return Partition([find(i) for i in range(n)])


def all_congruences(A: CLattice) -> list[Partition]:
    """Every congruence: principal congruences closed under pairwise join.

    Sorted canonically: block count descending (diagonal first, full last),
    then by id tuple.
    """
    n = A.size
    found = {diagonal(n)}
    principals = set()
    for a in range(n):
        for b in range(a + 1, n):
            principals.add(principal_congruence(A, a, b))
    found |= principals
    frontier = list(principals)
    while frontier:
        fresh = []
        for p in frontier:
            for q in list(found):
                j = p.join(q)
                if j not in found:
                    found.add(j)
                    fresh.append(j)
        frontier = fresh
    return sorted(found, key=lambda p: (-p.num_blocks, tuple(p.ids)))


def congruence_lattice(A: CLattice) -> FiniteLattice:
    """The lattice of all congruences under refinement."""
    cs = all_congruences(A)
    k = len(cs)
    leq = np.zeros((k, k), dtype=bool)
    for i in range(k):
        for j in range(k):
            leq[i, j] = cs[i].refines(cs[j])
    names = [c.format(A.names) for c in cs]
    return from_leq(names, leq)


def monolith(A: CLattice) -> Optional[Partition]:
    """The unique atom of the congruence lattice, if it exists."""
    if A.size < 2:
        raise TrivialAlgebra("monolith undefined on a one-element algebra")
    cs = all_congruences(A)
    delta = diagonal(A.size)
    nontrivial = [c for c in cs if c != delta]
    atoms = [c for c in nontrivial
             if not any(d != c and d.refines(c) for d in nontrivial)]
    if len(atoms) == 1:
        return atoms[0]
    return None


def is_subdirectly_irreducible(A: CLattice) -> bool:
    return monolith(A) is not None
