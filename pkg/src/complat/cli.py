"""Command-line interface.

Exit codes: 0 = success / identity holds, 1 = identity fails or
counterexample found (witness on stdout), 2 = usage or input error.

Default output is lightly worded; --porcelain switches to the stable
line-oriented `key: value` format used by the golden tests.  Deterministic
subcommands print byte-identical porcelain across runs and --jobs values.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

import numpy as np

from . import latfile
from .catalog import catalog
from .clattice import (CLattice, complements_of, enumerate_complementations,
                       is_antitone, is_boolean, is_complementation,
                       is_involution, is_ortholattice)
from .congruences import (all_congruences, congruence_lattice,
                          is_subdirectly_irreducible, monolith)
from .constructions import direct_product, find_embedding, horizontal_sum, \
    subalgebra_generated
from .enumeration import (enumerate_complemented, lattice_counts,
                          oracle_lattice_count)
from .errors import ComplatError
from .freealg import birkhoff_bound, free_algebra, minimal_separating_set
from .lattice import FiniteLattice, is_distributive, is_modular
from .terms import (builtin, builtin_names, check_identity, format_assignment,
                    parse_identity, sd_tables)
from .verify import THEOREM_IDS, verify


class _Out:
    def __init__(self, porcelain: bool):
        self.porcelain = porcelain

    def kv(self, key: str, value) -> None:
        if isinstance(value, bool):
            value = "true" if value else "false"
        print(f"{key}: {value}")

    def say(self, text: str) -> None:
        if not self.porcelain:
            print(text)


def _load(path: str):
    try:
        return latfile.load(path)
    except FileNotFoundError:
        raise ComplatError(f"cannot read {path!r}: no such file")


def _need_unary(alg, path: str) -> CLattice:
    if not isinstance(alg, CLattice):
        raise ComplatError(f"{path}: needs a comp table for this subcommand")
    return alg


def _lattice_of(alg) -> FiniteLattice:
    return alg.lattice if isinstance(alg, CLattice) else alg


def _emit_lat(alg, dest: Optional[str], comment: str = "") -> None:
    text = latfile.dumps(alg, comment)
    if dest and dest != "-":
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- subcommand bodies ------------------------------------------------------

def _cmd_validate(args, out: _Out) -> int:
    alg = _load(args.file)
    L = _lattice_of(alg)
    out.kv("file", args.file)
    out.kv("elements", L.size)
    out.kv("bottom", L.names[0])
    out.kv("top", L.names[-1])
    out.kv("unary", "present" if isinstance(alg, CLattice) else "absent")
    if isinstance(alg, CLattice):
        ok, bad = is_complementation(alg)
        out.kv("complementation", ok)
    out.kv("valid", True)
    return 0


def _cmd_props(args, out: _Out) -> int:
    alg = _load(args.file)
    L = _lattice_of(alg)
    if isinstance(alg, CLattice):
        out.kv("complementation", is_complementation(alg)[0])
        out.kv("antitone", is_antitone(alg)[0])
        out.kv("involution", is_involution(alg)[0])
        out.kv("ortholattice", is_ortholattice(alg))
    else:
        for name in ("complementation", "antitone", "involution", "ortholattice"):
            out.kv(name, "absent")
    out.kv("modular", is_modular(L)[0])
    out.kv("distributive", is_distributive(L)[0])
    out.kv("boolean", is_boolean(alg) if isinstance(alg, CLattice) else "absent")
    return 0


def _cmd_check(args, out: _Out) -> int:
    alg = _need_unary(_load(args.file), args.file)
    if args.identity:
        pairs = [(args.identity, builtin(args.identity))]
    elif args.expr:
        pairs = [("expr", parse_identity(args.expr))]
    else:
        pairs = []
        with open(args.identities_file, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if ":" not in line:
                    raise ComplatError(
                        f"{args.identities_file}:{lineno}: expected `name: lhs = rhs`")
                name, text = line.split(":", 1)
                pairs.append((name.strip(), parse_identity(text)))
    failures = 0
    for name, ident in pairs:
        witness = check_identity(alg, ident)
        out.kv("identity", name)
        out.kv("holds", witness is None)
        if witness is not None:
            failures += 1
            assign = format_assignment(witness.assignment, alg.names)
            out.kv("witness", f"{assign} lhs={alg.names[witness.lhs_value]} "
                              f"rhs={alg.names[witness.rhs_value]}")
    return 1 if failures else 0


def _cmd_sd(args, out: _Out) -> int:
    alg = _need_unary(_load(args.file), args.file)
    p1, p2 = sd_tables(alg)
    names = alg.names
    out.kv("elements", " ".join(names))
    for label, table in (("plus1", p1), ("plus2", p2)):
        for i in range(alg.size):
            out.kv(f"{label} {names[i]}", " ".join(names[v] for v in table[i]))
    equal = bool(np.array_equal(p1, p2))
    out.kv("equal", equal)
    if not equal:
        flat = int(np.flatnonzero((p1 != p2).reshape(-1))[0])
        x, y = flat // alg.size, flat % alg.size
        out.kv("diff", f"x={names[x]} y={names[y]} "
                       f"plus1={names[p1[x, y]]} plus2={names[p2[x, y]]}")
        return 1
    return 0


def _cmd_complements(args, out: _Out) -> int:
    alg = _load(args.file)
    L = _lattice_of(alg)
    if args.element:
        targets = [L.index(args.element)]
    else:
        targets = range(L.size)
    for a in targets:
        cs = complements_of(L, a)
        out.kv(f"complements {L.names[a]}", " ".join(L.names[b] for b in cs))
    if args.tables:
        try:
            tables = enumerate_complementations(L)
        except ComplatError as exc:
            out.kv("count", 0)
            out.say(str(exc))
            return 1
        out.kv("count", len(tables))
        for tab in tables:
            out.kv("table", " ".join(L.names[v] for v in tab))
    return 0


def _cmd_congruences(args, out: _Out) -> int:
    alg = _need_unary(_load(args.file), args.file)
    congs = all_congruences(alg)
    out.kv("count", len(congs))
    for c in congs:
        out.kv("congruence", c.format(alg.names))
    if args.monolith:
        mono = monolith(alg)
        out.kv("monolith", mono.format(alg.names) if mono else "absent")
        out.kv("subdirectly-irreducible", is_subdirectly_irreducible(alg))
    if args.lattice:
        out.kv("lattice", latfile.dumps_inline(congruence_lattice(alg)))
    return 0


def _cmd_hsum(args, out: _Out) -> int:
    L = horizontal_sum(args.lengths)
    _emit_lat(L, args.output)
    return 0


def _cmd_product(args, out: _Out) -> int:
    P = direct_product(_load(args.left), _load(args.right))
    _emit_lat(P, args.output)
    return 0


def _cmd_subalgebra(args, out: _Out) -> int:
    alg = _need_unary(_load(args.file), args.file)
    seed = []
    if args.seed:
        for name in args.seed.split(","):
            seed.append(alg.lattice.index(name.strip()))
    members = subalgebra_generated(alg, seed)
    out.kv("size", len(members))
    out.kv("subalgebra", " ".join(alg.names[i] for i in members))
    return 0


def _cmd_embed(args, out: _Out) -> int:
    small = _need_unary(_load(args.small), args.small)
    big = _need_unary(_load(args.big), args.big)
    emb = find_embedding(small, big)
    if emb is None:
        out.kv("embedding", "absent")
        return 1
    out.kv("embedding", " ".join(
        f"{small.names[i]}->{big.names[j]}" for i, j in enumerate(emb)))
    return 0


def _cmd_free(args, out: _Out) -> int:
    alg = _need_unary(_load(args.file), args.file)
    result = free_algebra(alg, args.n, cap=args.cap, time_budget=args.budget)
    out.kv("elements", result.count)
    out.kv("complete", result.complete)
    out.kv("birkhoff", birkhoff_bound(alg, args.n))
    if args.separating_set:
        sep = minimal_separating_set(result)
        out.kv("separating", " ".join(str(c) for c in sep))
        out.kv("separating-minimal", True)
    return 0


def _cmd_enumerate(args, out: _Out) -> int:
    counts = lattice_counts(args.max_size)
    for n, c in enumerate(counts, start=1):
        out.kv(f"size {n}", c)
    out.kv("total", sum(counts))
    if args.complemented:
        per_size: dict[int, int] = {}
        for A in enumerate_complemented(args.max_size):
            per_size[A.size] = per_size.get(A.size, 0) + 1
        for n in range(2, args.max_size + 1):
            out.kv(f"complemented {n}", per_size.get(n, 0))
    if args.oracle:
        for n in range(1, args.max_size + 1):
            out.kv(f"oracle {n}", oracle_lattice_count(n))
    return 0


def _cmd_verify(args, out: _Out) -> int:
    ids = list(THEOREM_IDS) if args.theorem == "ALL" else [args.theorem]
    worst = 0
    lines = []
    for tid in ids:
        report = verify(tid, max_size=args.max_size, seed=args.seed,
                        samples=args.samples, jobs=args.jobs)
        header = (f"verify {report.theorem_id} max-size={report.max_size} "
                  f"algebras={report.algebras_checked} "
                  f"counterexamples={len(report.counterexamples)}")
        lines.append(header)
        print(header)
        for alg_text, witness in report.counterexamples:
            line = f"algebra={alg_text} witness={witness}"
            lines.append(line)
            print(line)
        if not out.porcelain:
            print(f"# elapsed {report.elapsed:.2f}s", file=sys.stderr)
        if report.counterexamples:
            worst = 1
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    return worst


def _cmd_catalog(args, out: _Out) -> int:
    entry = catalog(args.key)
    _emit_lat(entry.algebra, args.output, comment=f"{entry.key}: {entry.provenance}")
    return 0


# --- argument parsing -------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="complat",
        description="Finite bounded lattices with complementation: "
                    "identities, congruences, constructions, free algebras, "
                    "exhaustive verification.")
    parser.add_argument("--porcelain", action="store_true",
                        help="stable machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate a .lat file")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("props", help="predicate battery")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_props)

    p = sub.add_parser("check", help="check an identity, exit 1 on failure")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--identity", choices=builtin_names(), metavar="NAME",
                   help="builtin identity name")
    g.add_argument("--expr", help="identity text, e.g. \"x'' = x\"")
    g.add_argument("--identities-file", help="file of `name: lhs = rhs` lines")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("sd", help="symmetric difference tables")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_sd)

    p = sub.add_parser("complements", help="complement sets and tables")
    p.add_argument("file")
    p.add_argument("--element", help="restrict to one element")
    p.add_argument("--tables", action="store_true",
                   help="enumerate all complementation tables")
    p.set_defaults(fn=_cmd_complements)

    p = sub.add_parser("congruences", help="all congruences")
    p.add_argument("file")
    p.add_argument("--monolith", action="store_true")
    p.add_argument("--lattice", action="store_true",
                   help="print the congruence lattice inline")
    p.set_defaults(fn=_cmd_congruences)

    p = sub.add_parser("hsum", help="horizontal sum of chains")
    p.add_argument("lengths", nargs="+", type=int)
    p.add_argument("-o", "--output", help="write .lat here instead of stdout")
    p.set_defaults(fn=_cmd_hsum)

    p = sub.add_parser("product", help="direct product of two algebras")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_product)

    p = sub.add_parser("subalgebra", help="generated subalgebra")
    p.add_argument("file")
    p.add_argument("--seed", default="", help="comma-separated element names")
    p.set_defaults(fn=_cmd_subalgebra)

    p = sub.add_parser("embed", help="find an embedding, exit 1 if absent")
    p.add_argument("small")
    p.add_argument("big")
    p.set_defaults(fn=_cmd_embed)

    p = sub.add_parser("free", help="free algebra cardinality")
    p.add_argument("file")
    p.add_argument("-n", type=int, required=True, help="generator count")
    p.add_argument("--cap", type=int, help="element budget")
    p.add_argument("--budget", type=float, help="time budget in seconds")
    p.add_argument("--separating-set", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=_cmd_free)

    p = sub.add_parser("enumerate", help="bounded lattices up to isomorphism")
    p.add_argument("--max-size", type=int, default=7)
    p.add_argument("--complemented", action="store_true")
    p.add_argument("--oracle", action="store_true",
                   help="also run the brute-force oracle counts")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("theorem", choices=list(THEOREM_IDS) + ["ALL"])
    p.add_argument("--max-size", type=int, default=7)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", help="also write the report to this file")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("catalog", help="emit a fixture algebra as .lat")
    p.add_argument("key")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_catalog)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    out = _Out(args.porcelain)
    try:
        return args.fn(args, out)
    except ComplatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
