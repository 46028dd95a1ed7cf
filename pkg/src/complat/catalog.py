"""Fixture catalog: the named algebras with their displayed unary tables.

Keys: M3P, N5, N5STAR, O6, O6STAR, FIG2, FIG3, BOOL2, BOOLN(n), CHAIN(k).

The N5 and N5* source tables print 1'=1, which contradicts x & x' = 0 on a
two-or-more element lattice; the catalog stores 1'=0 (the unique complement
of the top) and the provenance strings record the correction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

import numpy as np

from .clattice import CLattice, is_complementation
from .errors import UnknownKey
from .lattice import FiniteLattice, build_from_covers


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    algebra: Union[FiniteLattice, CLattice]
    provenance: str


def _clattice(names, covers, table: dict[str, str]) -> CLattice:
    L = build_from_covers(names, covers)
    unary = np.array([L.index(table[name]) for name in L.names], dtype=np.int64)
    return CLattice(L, unary)


def m3_lattice() -> FiniteLattice:
    return build_from_covers(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")])


def n5_lattice() -> FiniteLattice:
    return build_from_covers(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")])


def o6_lattice() -> FiniteLattice:
    return build_from_covers(
        ["0", "a", "b", "c", "d", "1"],
        [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "d"), ("d", "1")])


_FIG2_NAMES = ["0", "a", "b", "c", "d", "d'", "c'", "b'", "a'", "1"]
_FIG2_COVERS = [
    ("0", "a"), ("0", "b"),
    ("a", "c"), ("a", "d"), ("b", "d'"), ("b", "c'"),
    ("c", "b'"), ("d", "b'"), ("d'", "a'"), ("c'", "a'"),
    ("b'", "1"), ("a'", "1"),
]

_FIG3_NAMES = ["0", "a", "b", "c", "d", "d'", "c'", "b'", "a'", "1"]
_FIG3_COVERS = [
    ("0", "a"), ("0", "b"), ("0", "c"),
    ("a", "d"),
    ("b", "c'"), ("b", "d'"), ("c", "b'"), ("c", "d'"),
    ("d", "b'"), ("d", "c'"),
    ("d'", "a'"),
    ("a'", "1"), ("b'", "1"), ("c'", "1"),
]

_ORTHO_PAIRING = {
    "0": "1", "1": "0",
    "a": "a'", "a'": "a", "b": "b'", "b'": "b",
    "c": "c'", "c'": "c", "d": "d'", "d'": "d",
}


def chain_lattice(k: int) -> FiniteLattice:
    if k < 1:
        raise UnknownKey(f"CHAIN({k}): length must be >= 1")
    if k == 1:
        return build_from_covers(["0"], [])
    names = ["0"] + [f"a{i}" for i in range(1, k - 1)] + ["1"]
    covers = [(names[i], names[i + 1]) for i in range(k - 1)]
    return build_from_covers(names, covers)


def boolean_lattice(n: int) -> CLattice:
    """Powerset of n atoms; element names are n-bit strings, complement flips."""
    if n < 1:
        raise UnknownKey(f"BOOLN({n}): exponent must be >= 1")
    names = [format(m, f"0{n}b") for m in range(2 ** n)]
    covers = []
    for m in range(2 ** n):
        for bit in range(n):
            if not m & (1 << bit):
                covers.append((names[m], names[m | (1 << bit)]))
    L = build_from_covers(names, covers)
    top_mask = 2 ** n - 1
    unary = np.array(
        [L.index(format(int(L.names[i], 2) ^ top_mask, f"0{n}b"))
         for i in range(L.size)], dtype=np.int64)
    return CLattice(L, unary)


def _build(key: str) -> CatalogEntry:
    if key == "M3P":
        alg = _clattice(
            ["0", "a", "b", "c", "1"],
            [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
            {"0": "1", "a": "b", "b": "c", "c": "a", "1": "0"})
        return CatalogEntry(key, alg, "Fig. 1 lattice; Example 1.3 displayed table")
    if key == "N5":
        alg = _clattice(
            ["0", "a", "b", "c", "1"],
            [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
            {"0": "1", "a": "b", "b": "a", "c": "b", "1": "0"})
        return CatalogEntry(
            key, alg,
            "Fig. 5 lattice; Example 2.5 first table (printed 1'=1 violates "
            "x&x'=0, stored as 1'=0)")
    if key == "N5STAR":
        alg = _clattice(
            ["0", "a", "b", "c", "1"],
            [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
            {"0": "1", "a": "b", "b": "c", "c": "b", "1": "0"})
        return CatalogEntry(
            key, alg,
            "Fig. 5 lattice; Example 2.5 second table (printed 1'=1 violates "
            "x&x'=0, stored as 1'=0)")
    if key == "O6":
        alg = _clattice(
            ["0", "a", "b", "c", "d", "1"],
            [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "d"), ("d", "1")],
            {"0": "1", "a": "d", "b": "c", "c": "b", "d": "a", "1": "0"})
        return CatalogEntry(key, alg, "Fig. 4 ortholattice; Example 2.4 first table")
    if key == "O6STAR":
        alg = _clattice(
            ["0", "a", "b", "c", "d", "1"],
            [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "d"), ("d", "1")],
            {"0": "1", "a": "c", "b": "d", "c": "a", "d": "b", "1": "0"})
        return CatalogEntry(key, alg, "Fig. 4 lattice; Example 2.4 second table")
    if key == "FIG2":
        alg = _clattice(_FIG2_NAMES, _FIG2_COVERS, _ORTHO_PAIRING)
        return CatalogEntry(key, alg, "Fig. 2 ortholattice; primes pair up")
    if key == "FIG3":
        alg = _clattice(_FIG3_NAMES, _FIG3_COVERS, _ORTHO_PAIRING)
        return CatalogEntry(key, alg, "Fig. 3 ortholattice; primes pair up")
    if key == "BOOL2":
        alg = CLattice(chain_lattice(2), np.array([1, 0]))
        return CatalogEntry(key, alg, "two-element Boolean algebra")
    m = re.fullmatch(r"BOOLN\((\d+)\)", key)
    if m:
        return CatalogEntry(key, boolean_lattice(int(m.group(1))),
                            f"Boolean algebra on {m.group(1)} atoms")
    m = re.fullmatch(r"CHAIN\((\d+)\)", key)
    if m:
        k = int(m.group(1))
        if k == 1:
            alg = CLattice(chain_lattice(1), np.array([0]))
            return CatalogEntry(key, alg, "one-element lattice")
        return CatalogEntry(key, chain_lattice(k), f"{k}-element chain")
    raise UnknownKey(f"no catalog fixture named {key!r}")


_CACHE: dict[str, CatalogEntry] = {}

FIXED_KEYS = ("M3P", "N5", "N5STAR", "O6", "O6STAR", "FIG2", "FIG3", "BOOL2")


def catalog(key: str) -> CatalogEntry:
    if key not in _CACHE:
        entry = _build(key)
        if isinstance(entry.algebra, CLattice):
            ok, bad = is_complementation(entry.algebra)
            assert ok, f"catalog {key}: unary table is not a complementation ({bad})"
        _CACHE[key] = entry
    return _CACHE[key]
