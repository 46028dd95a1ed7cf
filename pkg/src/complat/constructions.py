"""Horizontal sums, direct products, generated subalgebras, embeddings."""

from __future__ import annotations

from itertools import product
from typing import Optional, Sequence, Union

import numpy as np

from .clattice import CLattice
from .errors import InvalidLength
from .lattice import FiniteLattice, build_from_covers, from_leq

Algebra = Union[FiniteLattice, CLattice]


def horizontal_sum(chain_lengths: Sequence[int]) -> FiniteLattice:
    """Bounded chains glued at shared bottom and top.

    Chain i of length k contributes k - 2 interior elements c{i}_1 < ... ;
    interiors of distinct chains are incomparable, so their joins are the
    top and their meets the bottom.
    """
    if len(chain_lengths) == 0:
        raise InvalidLength("horizontal sum needs at least one chain")
    for k in chain_lengths:
        if k < 2:
            raise InvalidLength(f"chain length {k} < 2")
    names = ["0"]
    covers = []
    for ci, k in enumerate(chain_lengths, start=1):
        prev = "0"
        for j in range(1, k - 1):
            name = f"c{ci}_{j}"
            names.append(name)
            covers.append((prev, name))
            prev = name
        covers.append((prev, "1"))
    names.append("1")
    # duplicate (0,1) covers from multiple length-2 chains collapse
    covers = list(dict.fromkeys(covers))
    return build_from_covers(names, covers)


def hsum_interiors(L: FiniteLattice) -> list[list[int]]:
    """Index sets of the chain interiors of a horizontal-sum lattice."""
    by_chain: dict[int, list[int]] = {}
    for i, name in enumerate(L.names):
        if name in ("0", "1"):
            continue
        chain = int(name.split("_")[0][1:])
        by_chain.setdefault(chain, []).append(i)
    return [sorted(v) for _, v in sorted(by_chain.items())]


def hsum_complementations(c1_len: int, c2_len: int) -> list[np.ndarray]:
    """All unary tables on the two-chain horizontal sum with 0'=1, 1'=0 and
    each chain's interior mapped into the other chain's interior.

    These are exactly the complementations of the sum; the generic
    enumeration over complement sets must agree (cross-checked in tests).
    An interior on one side with no interior on the other leaves nothing
    valid, so the list is empty for (2, k) with k > 2.
    """
    L = horizontal_sum([c1_len, c2_len])
    interiors = hsum_interiors(L)
    i1 = interiors[0] if interiors else []
    i2 = interiors[1] if len(interiors) > 1 else []
    if (i1 and not i2) or (i2 and not i1):
        return []
    choices: list[list[int]] = []
    for x in range(L.size):
        if x == L.bottom:
            choices.append([L.top])
        elif x == L.top:
            choices.append([L.bottom])
        elif x in i1:
            choices.append(i2)
        else:
            choices.append(i1)
    return [np.array(tab, dtype=np.int64) for tab in product(*choices)]


def direct_product(A: Algebra, B: Algebra) -> Algebra:
    """Componentwise product; carries a unary table when both factors do."""
    La = A.lattice if isinstance(A, CLattice) else A
    Lb = B.lattice if isinstance(B, CLattice) else B
    names = [f"({na},{nb})" for na in La.names for nb in Lb.names]
    leq = np.kron(La.leq, Lb.leq).astype(bool)
    L = from_leq(names, leq)
    if not (isinstance(A, CLattice) and isinstance(B, CLattice)):
        return L
    pos = {name: i for i, name in enumerate(L.names)}
    unary = np.empty(L.size, dtype=np.int64)
    for i, na in enumerate(La.names):
        for j, nb in enumerate(Lb.names):
            src = pos[f"({na},{nb})"]
            dst = pos[f"({La.names[A.unary[i]]},{Lb.names[B.unary[j]]})"]
            unary[src] = dst
    return CLattice(L, unary)


def subalgebra_generated(A: CLattice, seed: Sequence[int]) -> list[int]:
    """Smallest subset containing seed and the bounds, closed under all ops."""
    L, u = A.lattice, A.unary
    members = {L.bottom, L.top} | {int(s) for s in seed}
    frontier = list(members)
    while frontier:
        fresh = set()
        current = list(members)
        for a in frontier:
            fresh.add(int(u[a]))
            for b in current:
                fresh.add(int(L.join[a, b]))
                fresh.add(int(L.meet[a, b]))
        fresh -= members
        members |= fresh
        frontier = list(fresh)
    return sorted(members)


def find_embedding(S: CLattice, A: CLattice) -> Optional[list[int]]:
    """Injective map S -> A preserving join, meet, comp, bottom and top.

    Backtracking in element order with partial-operation pruning; returns
    the image list or None.
    """
    ns, na = S.size, A.size
    if ns > na:
        return None
    mapping = [-1] * ns
    used = [False] * na
    ls, la = S.lattice, A.lattice

    def consistent(i: int) -> bool:
        for k in range(i + 1):
            if ls.leq[i, k] != la.leq[mapping[i], mapping[k]]:
                return False
            if ls.leq[k, i] != la.leq[mapping[k], mapping[i]]:
                return False
            jj = int(ls.join[i, k])
            if jj <= i and la.join[mapping[i], mapping[k]] != mapping[jj]:
                return False
            mm = int(ls.meet[i, k])
            if mm <= i and la.meet[mapping[i], mapping[k]] != mapping[mm]:
                return False
        for k in range(i + 1):
            t = int(S.unary[k])
            if t <= i and A.unary[mapping[k]] != mapping[t]:
                return False
        return True

    def verify() -> bool:
        for a in range(ns):
            for b in range(ns):
                if la.join[mapping[a], mapping[b]] != mapping[ls.join[a, b]]:
                    return False
                if la.meet[mapping[a], mapping[b]] != mapping[ls.meet[a, b]]:
                    return False
            if A.unary[mapping[a]] != mapping[S.unary[a]]:
                return False
        return True

    def extend(i: int) -> bool:
        if i == ns:
            return verify()
        if i == 0:
            candidates = [la.bottom]
        elif i == ns - 1:
            candidates = [la.top]
        else:
            candidates = range(na)
        for j in candidates:
            if used[j]:
                continue
            mapping[i] = j
            if consistent(i):
                used[j] = True
                if extend(i + 1):
                    return True
                used[j] = False
            mapping[i] = -1
        return False

    return mapping.copy() if extend(0) else None
