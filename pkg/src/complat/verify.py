"""Exhaustive verification campaigns over all small complemented lattices.

Each campaign re-checks one statement on every algebra in its hypothesis
class drawn from the size-limited enumeration.  An empty counterexample list
is the expected outcome; a non-empty one is a finding to report, never an
exception.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from . import latfile
from .catalog import catalog, m3_lattice
from .clattice import (CLattice, complements_of, enumerate_complementations,
                       is_antitone, is_boolean, is_ortholattice)
from .constructions import find_embedding, hsum_complementations, horizontal_sum
from .enumeration import complemented_list, enumerate_lattices
from .errors import UnknownTheorem
from .lattice import is_distributive
from .terms import check_identity, format_assignment, holds, is_associative, sd_tables


@dataclass
class CampaignReport:
    theorem_id: str
    max_size: int
    algebras_checked: int
    counterexamples: list[tuple[str, str]] = field(default_factory=list)
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def _ce(A: CLattice, witness: str) -> tuple[str, str]:
    return latfile.dumps_inline(A), witness


def _witness_text(A: CLattice, name: str) -> str:
    w = check_identity(A, name)
    assign = format_assignment(w.assignment, A.names)
    return (f"{name} fails at {assign} "
            f"lhs={A.names[w.lhs_value]} rhs={A.names[w.rhs_value]}")


def _map_algebras(algebras, fn: Callable, jobs: int) -> list[list[tuple[str, str]]]:
    """Apply fn to each algebra; results merged in input order."""
    if jobs <= 1:
        return [fn(A) for A in algebras]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, algebras))


def _per_algebra_campaign(theorem_id, max_size, fn, jobs,
                          hypothesis=None) -> CampaignReport:
    algebras = [A for A in complemented_list(max_size)
                if hypothesis is None or hypothesis(A)]
    results = _map_algebras(algebras, fn, jobs)
    report = CampaignReport(theorem_id, max_size, len(algebras))
    for ces in results:
        report.counterexamples.extend(ces)
    return report


# --- campaign bodies -------------------------------------------------------

def _lem12(max_size, seed, samples, jobs):
    def check(A):
        ces = []
        for absname in ("abs-i", "abs-ii"):
            if holds(A, absname) and not holds(A, "involution"):
                ces.append(_ce(A, f"{absname} holds but " + _witness_text(A, "involution")))
        return ces
    return _per_algebra_campaign("LEM12", max_size, check, jobs)


def _lem15(max_size, seed, samples, jobs):
    def check(A):
        ces = []
        L, u = A.lattice, A.unary
        if not holds(A, "lemma-unit"):
            ces.append(_ce(A, _witness_text(A, "lemma-unit")))
        for a in range(L.size):
            below = bool(L.leq[L.meet[a, u[u[a]]], u[a]])
            if below != (a == L.bottom):
                ces.append(_ce(A, f"a&a''<=a' is {below} at a={L.names[a]}"))
        return ces
    return _per_algebra_campaign(
        "LEM15", max_size, check, jobs, hypothesis=lambda A: holds(A, "coincidence"))


def _lem21(max_size, seed, samples, jobs):
    def check(A):
        ces = []
        for name in ("sd-partition-join", "sd-partition-meet"):
            if not holds(A, name):
                ces.append(_ce(A, _witness_text(A, name)))
        return ces
    return _per_algebra_campaign(
        "LEM21", max_size, check, jobs,
        hypothesis=lambda A: is_ortholattice(A) and holds(A, "coincidence"))


def _th22(max_size, seed, samples, jobs):
    def check(A):
        ces = []
        L = A.lattice
        for a in range(L.size):
            common = set(complements_of(L, a)) & set(complements_of(L, int(A.unary[a])))
            if common:
                b = min(common)
                ces.append(_ce(A, f"{L.names[b]} complements both "
                                  f"{L.names[a]} and {L.names[A.unary[a]]}"))
        return ces
    return _per_algebra_campaign(
        "TH22", max_size, check, jobs, hypothesis=lambda A: holds(A, "coincidence"))


@lru_cache(maxsize=1)
def _m3_variants() -> tuple[CLattice, ...]:
    L = m3_lattice()
    return tuple(CLattice(L, tab) for tab in enumerate_complementations(L))


def _cor23(max_size, seed, samples, jobs):
    variants = _m3_variants()

    def check(A):
        ces = []
        for S in variants:
            emb = find_embedding(S, A)
            if emb is not None:
                table = " ".join(S.names[S.unary[i]] for i in range(S.size))
                image = " ".join(A.names[j] for j in emb)
                ces.append(_ce(A, f"M3 variant (comp {table}) embeds as {image}"))
        return ces
    return _per_algebra_campaign(
        "COR23", max_size, check, jobs, hypothesis=lambda A: holds(A, "coincidence"))


def _pairwise_comparable(A: CLattice) -> bool:
    """Every pair x,y has x,y comparable or x,y' comparable."""
    leq, u = A.lattice.leq, A.unary
    direct = leq | leq.T
    primed = leq[:, u] | leq[u, :].T
    return bool(np.all(direct | primed))


def _th26(max_size, seed, samples, jobs):
    def check(A):
        if not holds(A, "coincidence"):
            return [_ce(A, _witness_text(A, "coincidence"))]
        return []
    return _per_algebra_campaign(
        "TH26", max_size, check, jobs,
        hypothesis=lambda A: is_ortholattice(A) and _pairwise_comparable(A))


def _th27(max_size, seed, samples, jobs):
    report = CampaignReport("TH27", max_size, 0)
    for m in range(3, 7):
        for k in range(3, 7):
            L = horizontal_sum([m, k])
            special = hsum_complementations(m, k)
            generic = enumerate_complementations(L)
            if [t.tolist() for t in special] != [t.tolist() for t in generic]:
                report.counterexamples.append(
                    (latfile.dumps_inline(L),
                     f"hsum({m},{k}): characterized tables != generic enumeration"))
                continue
            for tab in generic:
                A = CLattice(L, tab)
                report.algebras_checked += 1
                if not holds(A, "coincidence"):
                    report.counterexamples.append(_ce(A, _witness_text(A, "coincidence")))
                demorgan = holds(A, "demorgan-join") and holds(A, "demorgan-meet")
                if demorgan != is_antitone(A)[0]:
                    report.counterexamples.append(
                        _ce(A, f"De Morgan {demorgan} but antitone {is_antitone(A)[0]}"))
    report.notes.append("two-chain horizontal sums, chain lengths 3..6")
    return report


def _lem31(max_size, seed, samples, jobs):
    def check(A):
        hi, hii = holds(A, "abs-i"), holds(A, "abs-ii")
        if hi != hii:
            return [_ce(A, f"abs-i {hi} but abs-ii {hii}")]
        return []
    return _per_algebra_campaign("LEM31", max_size, check, jobs)


def _th32(max_size, seed, samples, jobs):
    def check(A):
        ces = []
        if holds(A, "abs-i"):
            dist, wit = is_distributive(A.lattice)
            if not dist:
                names = tuple(A.names[i] for i in wit)
                ces.append(_ce(A, f"abs-i holds but distributivity fails at {names}"))
            elif not is_boolean(A):
                ces.append(_ce(A, "abs-i holds but algebra is not Boolean"))
        return ces
    return _per_algebra_campaign("TH32", max_size, check, jobs)


def _th33(max_size, seed, samples, jobs):
    def check(A):
        ces = []
        boolean = is_boolean(A)
        p1, p2 = sd_tables(A)
        for label, table in (("+1", p1), ("+2", p2)):
            assoc = is_associative(table)[0]
            if assoc != boolean:
                ces.append(_ce(A, f"boolean {boolean} but {label} associative {assoc}"))
        return ces
    return _per_algebra_campaign("TH33", max_size, check, jobs)


def _th34(max_size, seed, samples, jobs):
    def check(A):
        ces = []
        boolean = is_boolean(A)
        for name in ("sd1-rollback", "sd2-rollback"):
            rb = holds(A, name)
            if rb != boolean:
                ces.append(_ce(A, f"boolean {boolean} but {name} {rb}"))
        return ces
    return _per_algebra_campaign(
        "TH34", max_size, check, jobs, hypothesis=lambda A: holds(A, "coincidence"))


EXHAUSTIVE_UNARY_MAX = 5


def _th42_check(A: CLattice) -> list[tuple[str, str]]:
    demorgan = holds(A, "demorgan-join") and holds(A, "demorgan-meet")
    alt = (is_antitone(A)[0] and holds(A, "th4-aux-join")
           and holds(A, "th4-aux-meet"))
    if demorgan != alt:
        return [_ce(A, f"De Morgan {demorgan} but antitone+aux {alt}")]
    return []


def _th42(max_size, seed, samples, jobs):
    report = CampaignReport("TH42", max_size, 0)
    rng = np.random.default_rng(seed)
    lattices = [L for L in enumerate_lattices(max_size) if L.size >= 2]
    for L in lattices:
        n = L.size
        if n <= EXHAUSTIVE_UNARY_MAX:
            tables = np.array(
                np.meshgrid(*[np.arange(n)] * n, indexing="ij")
            ).reshape(n, -1).T
        else:
            tables = rng.integers(0, n, size=(samples, n), dtype=np.int64)
        algebras = [CLattice(L, tab) for tab in tables]
        report.algebras_checked += len(algebras)
        for ces in _map_algebras(algebras, _th42_check, jobs):
            report.counterexamples.extend(ces)
    report.notes.append(
        f"unary tables exhaustive to size {EXHAUSTIVE_UNARY_MAX}, "
        f"{samples} sampled tables per larger lattice (seed {seed})")
    return report


_SEP_PROBES = (
    ("N5", "ord-lt", True),
    ("N5", "triple", True),
    ("N5", "involution", False),
    ("N5STAR", "ord-gt", True),
    ("O6", "involution", True),
    ("O6STAR", "involution", True),
    ("O6", "demorgan-join", True),
    ("O6", "demorgan-meet", True),
    ("O6STAR", "demorgan-join", False),
)


def _sep(max_size, seed, samples, jobs):
    report = CampaignReport("SEP", max_size, 0)
    for key, name, expected in _SEP_PROBES:
        A = catalog(key).algebra
        report.algebras_checked += 1
        actual = holds(A, name)
        if actual != expected:
            report.counterexamples.append(
                (latfile.dumps_inline(A),
                 f"{key}: {name} expected {expected} got {actual}"))
        elif not expected:
            report.notes.append(f"{key}: {_witness_text(A, name)}")
    return report


_REGISTRY: dict[str, Callable] = {
    "LEM12": _lem12,
    "LEM15": _lem15,
    "LEM21": _lem21,
    "TH22": _th22,
    "COR23": _cor23,
    "TH26": _th26,
    "TH27": _th27,
    "LEM31": _lem31,
    "TH32": _th32,
    "TH33": _th33,
    "TH34": _th34,
    "TH42": _th42,
    "SEP": _sep,
}

THEOREM_IDS = tuple(_REGISTRY)


def verify(theorem_id: str, max_size: int = 7, seed: int = 0,
           samples: int = 500, jobs: int = 1) -> CampaignReport:
    """Run one campaign; returns its report (counterexamples, not raises)."""
    if theorem_id not in _REGISTRY:
        raise UnknownTheorem(f"no campaign named {theorem_id!r}")
    start = time.monotonic()
    report = _REGISTRY[theorem_id](max_size, seed, samples, jobs)
    report.elapsed = time.monotonic() - start
    return report
