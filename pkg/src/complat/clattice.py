"""Lattices carrying a unary operation table (candidate complementation)."""

from __future__ import annotations

from itertools import product
from typing import Optional, Sequence

import numpy as np

from .errors import NoComplementation
from .lattice import FiniteLattice, is_distributive


class CLattice:
    """A FiniteLattice plus a total unary table x -> unary[x].

    The table is any total map; the predicates below classify it
    (complementation, antitone, involution, ...).
    """

    __slots__ = ("lattice", "unary")

    def __init__(self, lattice: FiniteLattice, unary: Sequence[int]):
        u = np.asarray(unary, dtype=np.int64)
        if u.shape != (lattice.size,):
            raise ValueError("unary table length does not match universe size")
        if u.min(initial=0) < 0 or u.max(initial=0) >= lattice.size:
            raise ValueError("unary table maps outside the universe")
        self.lattice = lattice
        self.unary = u
        self.unary.setflags(write=False)

    @property
    def size(self) -> int:
        return self.lattice.size

    @property
    def names(self):
        return self.lattice.names

    def __eq__(self, other):
        return (isinstance(other, CLattice)
                and self.lattice == other.lattice
                and np.array_equal(self.unary, other.unary))

    def __hash__(self):
        return hash((self.lattice, self.unary.tobytes()))

    def __repr__(self):
        table = {self.names[i]: self.names[self.unary[i]] for i in range(self.size)}
        return f"CLattice(size={self.size}, unary={table})"


def is_complementation(A: CLattice) -> tuple[bool, Optional[int]]:
    """True iff x | x' = top and x & x' = bottom for every x; first witness else."""
    L, u = A.lattice, A.unary
    idx = np.arange(L.size)
    bad = (L.join[idx, u] != L.top) | (L.meet[idx, u] != L.bottom)
    if not bad.any():
        return True, None
    return False, int(np.flatnonzero(bad)[0])


def is_antitone(A: CLattice) -> tuple[bool, Optional[tuple[int, int]]]:
    """True iff x <= y implies y' <= x'; first witness pair (x, y) else."""
    L, u = A.lattice, A.unary
    # prime_leq[x, y] = leq[u[y], u[x]]
    prime_leq = L.leq[np.ix_(u, u)].T
    bad = L.leq & ~prime_leq
    if not bad.any():
        return True, None
    n = L.size
    flat = int(np.flatnonzero(bad.reshape(-1))[0])
    return False, (flat // n, flat % n)


def is_involution(A: CLattice) -> tuple[bool, Optional[int]]:
    """True iff x'' = x for every x; first witness else."""
    u = A.unary
    bad = u[u] != np.arange(A.size)
    if not bad.any():
        return True, None
    return False, int(np.flatnonzero(bad)[0])


def is_ortholattice(A: CLattice) -> bool:
    """Complementation that is an antitone involution."""
    return (is_complementation(A)[0] and is_antitone(A)[0]
            and is_involution(A)[0])


def is_boolean(A: CLattice) -> bool:
    """Distributive lattice with complementation."""
    return is_complementation(A)[0] and is_distributive(A.lattice)[0]


def complements_of(L: FiniteLattice, a: int) -> list[int]:
    """All b with a | b = top and a & b = bottom, ascending."""
    hits = (L.join[a] == L.top) & (L.meet[a] == L.bottom)
    return [int(b) for b in np.flatnonzero(hits)]


def enumerate_complementations(L: FiniteLattice) -> list[np.ndarray]:
    """Every total unary table whose value is a complement at each element.

    Tables come out in lexicographic order (the Cartesian product of the
    ascending per-element complement sets).  Raises NoComplementation if
    some element has no complement at all.
    """
    per_element = []
    for a in range(L.size):
        cs = complements_of(L, a)
        if not cs:
            raise NoComplementation(
                f"element {L.names[a]!r} has no complement")
        per_element.append(cs)
    return [np.array(tab, dtype=np.int64) for tab in product(*per_element)]


def count_complementations(L: FiniteLattice) -> int:
    """Product of per-element complement counts (0 if some element has none)."""
    total = 1
    for a in range(L.size):
        total *= len(complements_of(L, a))
    return total
