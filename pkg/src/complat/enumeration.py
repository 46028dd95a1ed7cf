"""Enumeration of all bounded lattices up to isomorphism (sizes 1..8).

Two independent generators:

  * enumerate_lattices: DFS over naturally-labeled posets built element by
    element; each new element picks an order ideal as its strict down-set,
    meets are checked incrementally, and a unique top closes the poset.
    A finite meet-semilattice with top is a lattice, so survivors are
    lattices by construction (and re-verified when tables are built).

  * oracle_lattice_count: brute-force scan of every upper-triangular
    relation mask (kernel-backed), filtering antisymmetric transitive
    bounded relations with the lattice property.

Both deduplicate by the same canonical form: the lexicographically minimal
order matrix over all element permutations.  Their counts must agree; the
acceptance suite pins 1, 1, 1, 2, 5, 15, 53 for sizes 1..7.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterator

import numpy as np

from . import kernels
from .clattice import CLattice, complements_of
from .errors import SizeLimitExceeded
from .lattice import FiniteLattice, from_leq

MAX_SIZE = 8
ORACLE_MAX_SIZE = 7


@lru_cache(maxsize=None)
def _perm_array(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.int64)


def canonical_key(leq: np.ndarray) -> bytes:
    """Lexicographically minimal packed order matrix over all permutations."""
    n = leq.shape[0]
    perms = _perm_array(n)
    mats = leq[perms[:, :, None], perms[:, None, :]]
    packed = np.packbits(mats.reshape(len(perms), n * n), axis=1)
    return min(row.tobytes() for row in packed)


def leq_from_key(key: bytes, n: int) -> np.ndarray:
    bits = np.unpackbits(np.frombuffer(key, dtype=np.uint8))
    return bits[:n * n].reshape(n, n).astype(bool)


def _natural_downsets(n: int) -> Iterator[list[int]]:
    """All naturally-labeled bounded lattices on 0..n-1.

    Yields the list of inclusive down-set bitmasks per element.  Element 0
    is the bottom, element n-1 the top; every strict down-set is an order
    ideal containing the bottom, and each placement keeps all meets unique.
    """
    if n == 1:
        yield [1]
        return
    down = [1]

    def rec(j: int):
        if j == n - 1:
            top_mask = (1 << n) - 1
            down.append(top_mask)
            yield list(down)
            down.pop()
            return
        for strict in range(1, 1 << j, 2):  # subsets of 0..j-1 containing 0
            ok = True
            probe = strict
            while probe:
                low = probe & -probe
                i = low.bit_length() - 1
                if down[i] & ~strict:
                    ok = False
                    break
                probe ^= low
            if not ok:
                continue
            inclusive = strict | (1 << j)
            for i in range(j):
                t = down[i] & inclusive
                m = t.bit_length() - 1
                if down[m] & t != t:
                    ok = False
                    break
            if not ok:
                continue
            down.append(inclusive)
            yield from rec(j + 1)
            down.pop()

    yield from rec(1)


def _downsets_to_leq(down: list[int]) -> np.ndarray:
    n = len(down)
    leq = np.zeros((n, n), dtype=bool)
    for j in range(n):
        for i in range(j + 1):
            leq[i, j] = bool((down[j] >> i) & 1)
    return leq


@lru_cache(maxsize=None)
def _canonical_keys(n: int) -> tuple[bytes, ...]:
    keys = {canonical_key(_downsets_to_leq(d)) for d in _natural_downsets(n)}
    return tuple(sorted(keys))


def enumerate_lattices(max_size: int) -> Iterator[FiniteLattice]:
    """One canonical representative per isomorphism class, sizes ascending."""
    if max_size < 1:
        raise ValueError("max_size must be >= 1")
    if max_size > MAX_SIZE:
        raise SizeLimitExceeded(f"enumeration supports sizes up to {MAX_SIZE}")
    for n in range(1, max_size + 1):
        names = [f"e{i}" for i in range(n)]
        for key in _canonical_keys(n):
            yield from_leq(names, leq_from_key(key, n))


def lattice_counts(max_size: int) -> list[int]:
    """Isomorphism-class counts per size 1..max_size (DFS generator)."""
    if max_size > MAX_SIZE:
        raise SizeLimitExceeded(f"enumeration supports sizes up to {MAX_SIZE}")
    return [len(_canonical_keys(n)) for n in range(1, max_size + 1)]


def oracle_lattice_count(n: int) -> int:
    """Independent brute-force count of bounded lattices on n elements.

    Scans every strict-upper-triangle relation mask and filters; duplicates
    collapse under the canonical form.  Kept separate from the DFS generator
    so the two can cross-check each other.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > ORACLE_MAX_SIZE:
        raise SizeLimitExceeded(
            f"oracle scan supports sizes up to {ORACLE_MAX_SIZE}")
    masks = kernels.lattice_masks(n)
    keys = {canonical_key(kernels.leq_from_mask(n, int(mask))) for mask in masks}
    return len(keys)


def enumerate_complemented(max_size: int) -> Iterator[CLattice]:
    """Every complementation table on every lattice of size 2..max_size.

    Lattices with an element lacking a complement are skipped; the trivial
    one-element lattice is skipped as carrying no information.  Tables per
    lattice come out in lexicographic order.
    """
    for L in enumerate_lattices(max_size):
        if L.size < 2:
            continue
        per_element = []
        ok = True
        for a in range(L.size):
            cs = complements_of(L, a)
            if not cs:
                ok = False
                break
            per_element.append(cs)
        if not ok:
            continue
        from itertools import product as _product
        for tab in _product(*per_element):
            yield CLattice(L, np.array(tab, dtype=np.int64))


@lru_cache(maxsize=None)
def complemented_list(max_size: int) -> tuple[CLattice, ...]:
    """Materialized enumerate_complemented stream (campaigns reuse it)."""
    return tuple(enumerate_complemented(max_size))
