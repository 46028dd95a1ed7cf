#!/usr/bin/env python3
"""Timing comparison of the numba kernels against the pure-numpy fallbacks.

Runs the three kernel families on representative workloads under both
backends in one process (the dispatch wrappers are bypassed) and prints a
table plus the speedup.  Results are asserted identical on the way.

    python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import time

import numpy as np

from complat import catalog, terms
from complat.freealg import FreeAlgebraResult, _seed_rows
from complat import kernels
from complat.backend import USE_NUMBA


def _time(fn, repeat):
    best = float("inf")
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t0)
    return best, value


def bench_identity_scan(repeat):
    """Coincidence scan over every complemented algebra of size <= 6."""
    from complat.enumeration import complemented_list
    algebras = complemented_list(6)
    jobs = []
    for A in algebras:
        ident = terms.builtin("coincidence")
        prog_l, d_l = terms.compile_term(ident.lhs)
        prog_r, d_r = terms.compile_term(ident.rhs)
        jobs.append((prog_l, prog_r, A.lattice.join, A.lattice.meet, A.unary,
                     A.size, ident.nvars, max(d_l, d_r)))

    def run(scan):
        return [scan(*args)[0] for args in jobs]

    t_np, r_np = _time(lambda: run(kernels.scan_identity_numpy), repeat)
    if not USE_NUMBA:
        return "identity scan (154 algebras)", t_np, None, True
    t_nb, r_nb = _time(lambda: run(kernels.scan_identity_numba), repeat)
    return "identity scan (154 algebras)", t_np, t_nb, r_np == r_nb


def _closure_counts(A, n, use_numba):
    result = FreeAlgebraResult(A, n, None)
    seeds = _seed_rows(A, n)
    join_u8 = A.lattice.join.astype(np.uint8)
    meet_u8 = A.lattice.meet.astype(np.uint8)
    comp_u8 = A.unary.astype(np.uint8)
    cap = result.store.shape[0]
    if use_numba:
        table = kernels.new_hash_table(cap)
        count, _ = kernels.insert_rows_numba(result.store, 0, table, seeds, cap)
        fs, fe = 0, count
        while fs != fe:
            count, full = kernels.closure_round_numba(
                result.store, count, fs, fe, join_u8, meet_u8, comp_u8, table, cap)
            assert not full
            fs, fe = fe, count
        return count, result.store[:count].tobytes()
    index = {}
    count, _ = kernels.insert_rows_numpy(result.store, 0, index, seeds, cap)
    fs, fe = 0, count
    while fs != fe:
        count, full = kernels.closure_round_numpy(
            result.store, count, fs, fe, join_u8, meet_u8, comp_u8, index, cap)
        assert not full
        fs, fe = fe, count
    return count, result.store[:count].tobytes()


def bench_closure(repeat):
    """Free algebra closure of V(N5) on two generators (152 elements)."""
    A = catalog("N5").algebra
    t_np, r_np = _time(lambda: _closure_counts(A, 2, False), repeat)
    if not USE_NUMBA:
        return "free closure N5 n=2", t_np, None, True
    t_nb, r_nb = _time(lambda: _closure_counts(A, 2, True), repeat)
    return "free closure N5 n=2", t_np, t_nb, r_np == r_nb


def bench_mask_scan(repeat):
    """Bounded-lattice scan of all 2^15 order masks on 6 elements."""
    t_np, r_np = _time(lambda: kernels.lattice_masks_numpy(6), repeat)
    if not USE_NUMBA:
        return "lattice mask scan n=6", t_np, None, True
    t_nb, r_nb = _time(lambda: kernels.lattice_masks_numba(6), repeat)
    return "lattice mask scan n=6", t_np, t_nb, np.array_equal(r_np, r_nb)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions, best of N (default 3)")
    args = parser.parse_args()

    if not USE_NUMBA:
        print("numba backend unavailable or disabled "
              "(COMPLAT_BACKEND=numpy); timing the fallback only\n")

    rows = []
    for bench in (bench_identity_scan, bench_closure, bench_mask_scan):
        name, t_np, t_nb, same = bench(args.repeat)
        rows.append((name, t_np, t_nb, same))

    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'numpy':>9}  {'numba':>9}  {'speedup':>8}  match")
    for name, t_np, t_nb, same in rows:
        nb = f"{t_nb:8.4f}s" if t_nb is not None else "     -  "
        speed = f"{t_np / t_nb:7.1f}x" if t_nb else "      - "
        print(f"{name:<{width}}  {t_np:8.4f}s  {nb}  {speed}  {same}")
        if not same:
            raise SystemExit("backend results differ")


if __name__ == "__main__":
    main()
