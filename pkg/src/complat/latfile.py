"""The .lat text format.

Line-oriented, UTF-8, '#' starts a comment:

    elements: <name> <name> ...      exactly one, names distinct
    cover: <lower> <upper>           zero or more
    comp: <x> <xprime>               optional; must be total if present

Writers emit elements in canonical order and cover lines sorted
lexicographically by (lower, upper), so serialization is byte-stable.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

import numpy as np

from .clattice import CLattice
from .errors import LatFileError
from .lattice import FiniteLattice, build_from_covers

Algebra = Union[FiniteLattice, CLattice]


def dumps(alg: Algebra, comment: str = "") -> str:
    L = alg.lattice if isinstance(alg, CLattice) else alg
    for name in L.names:
        if not name or any(ch.isspace() for ch in name) or name.startswith("#"):
            raise LatFileError(f"name {name!r} cannot be serialized")
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}")
    lines.append("elements: " + " ".join(L.names))
    pairs = sorted((L.names[a], L.names[b]) for a, b in L.covers())
    lines.extend(f"cover: {lo} {hi}" for lo, hi in pairs)
    if isinstance(alg, CLattice):
        lines.extend(
            f"comp: {L.names[i]} {L.names[alg.unary[i]]}" for i in range(L.size))
    return "\n".join(lines) + "\n"


def dumps_inline(alg: Algebra) -> str:
    """Single-line form used in verification reports."""
    return "; ".join(dumps(alg).strip().splitlines())


def loads(text: str) -> Algebra:
    names: list[str] | None = None
    covers: list[tuple[str, str]] = []
    comp: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise LatFileError(f"line {lineno}: missing ':'")
        head, rest = line.split(":", 1)
        fields = rest.split()
        if head == "elements":
            if names is not None:
                raise LatFileError(f"line {lineno}: duplicate elements line")
            if not fields:
                raise LatFileError(f"line {lineno}: empty elements line")
            if len(set(fields)) != len(fields):
                raise LatFileError(f"line {lineno}: element names not distinct")
            names = fields
        elif head == "cover":
            if len(fields) != 2:
                raise LatFileError(f"line {lineno}: cover needs two names")
            covers.append((fields[0], fields[1]))
        elif head == "comp":
            if len(fields) != 2:
                raise LatFileError(f"line {lineno}: comp needs two names")
            if fields[0] in comp:
                raise LatFileError(f"line {lineno}: duplicate comp for {fields[0]!r}")
            comp[fields[0]] = fields[1]
        else:
            raise LatFileError(f"line {lineno}: unknown directive {head!r}")
    if names is None:
        raise LatFileError("missing elements line")
    declared = set(names)
    for lo, hi in covers:
        if lo not in declared or hi not in declared:
            raise LatFileError(f"cover ({lo!r}, {hi!r}) references undeclared name")
    L = build_from_covers(names, covers)
    if not comp:
        return L
    if set(comp) != declared or any(v not in declared for v in comp.values()):
        raise LatFileError("comp table must be total over the declared elements")
    unary = np.array([L.index(comp[name]) for name in L.names], dtype=np.int64)
    return CLattice(L, unary)


def dump(alg: Algebra, path: Union[str, Path], comment: str = "") -> None:
    Path(path).write_text(dumps(alg, comment), encoding="utf-8")


def load(path: Union[str, Path]) -> Algebra:
    return loads(Path(path).read_text(encoding="utf-8"))
