"""Backend equivalence: numba kernels and numpy fallbacks must agree bit-for-bit."""

import numpy as np
import pytest

from complat import kernels, terms
from complat.backend import USE_NUMBA
from complat.catalog import catalog
from complat.freealg import FreeAlgebraResult, _seed_rows

needs_numba = pytest.mark.skipif(not USE_NUMBA, reason="numba backend disabled")


def _scan_args(key, name):
    A = catalog(key).algebra
    ident = terms.builtin(name)
    prog_l, d_l = terms.compile_term(ident.lhs)
    prog_r, d_r = terms.compile_term(ident.rhs)
    return (prog_l, prog_r, A.lattice.join, A.lattice.meet, A.unary,
            A.size, ident.nvars, max(d_l, d_r))


@needs_numba
@pytest.mark.parametrize("key", ["M3P", "N5", "N5STAR", "O6", "O6STAR", "FIG2"])
@pytest.mark.parametrize("name", ["coincidence", "involution", "sd1-assoc",
                                  "demorgan-join", "lemma-unit"])
def test_scan_identity_backends_agree(key, name):
    args = _scan_args(key, name)
    assert kernels.scan_identity_numba(*args) == kernels.scan_identity_numpy(*args)


def _run_closure(A, n, cap, use_numba):
    result = FreeAlgebraResult(A, n, cap)
    join_u8 = A.lattice.join.astype(np.uint8)
    meet_u8 = A.lattice.meet.astype(np.uint8)
    comp_u8 = A.unary.astype(np.uint8)
    seeds = _seed_rows(A, n)
    if use_numba:
        table = kernels.new_hash_table(cap)
        count, full = kernels.insert_rows_numba(result.store, 0, table, seeds, cap)
    else:
        index = {}
        count, full = kernels.insert_rows_numpy(result.store, 0, index, seeds, cap)
    fs, fe = 0, count
    while not full and fs != fe:
        if use_numba:
            count, full = kernels.closure_round_numba(
                result.store, count, fs, fe, join_u8, meet_u8, comp_u8, table, cap)
        else:
            count, full = kernels.closure_round_numpy(
                result.store, count, fs, fe, join_u8, meet_u8, comp_u8, index, cap)
        if not full:
            fs, fe = fe, count
    return count, full, result.store[:count].copy()


@needs_numba
@pytest.mark.parametrize("key,n,cap", [
    ("N5", 2, 1000), ("O6", 2, 1000), ("N5", 2, 60), ("O6STAR", 2, 77),
    ("BOOL2", 3, 1000), ("M3P", 2, 500),
])
def test_closure_backends_agree(key, n, cap):
    A = catalog(key).algebra
    c1, f1, s1 = _run_closure(A, n, cap, True)
    c2, f2, s2 = _run_closure(A, n, cap, False)
    assert (c1, f1) == (c2, f2)
    assert np.array_equal(s1, s2)


@needs_numba
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_mask_scan_backends_agree(n):
    assert np.array_equal(kernels.lattice_masks_numba(n),
                          kernels.lattice_masks_numpy(n))


def test_mask_decode_round_trip():
    masks = kernels.lattice_masks_numpy(4)
    assert masks.size > 0
    for mask in masks:
        leq = kernels.leq_from_mask(4, int(mask))
        assert leq[0].all()          # natural labeling: 0 is the bottom
        assert leq[:, 3].all()       # and n-1 the top


def test_chunking_does_not_change_numpy_closure():
    A = catalog("N5").algebra
    join_u8 = A.lattice.join.astype(np.uint8)
    meet_u8 = A.lattice.meet.astype(np.uint8)
    comp_u8 = A.unary.astype(np.uint8)
    stores = []
    for chunk in (1, 3, 64, 8192):
        result = FreeAlgebraResult(A, 2, 1000)
        index = {}
        count, _ = kernels.insert_rows_numpy(
            result.store, 0, index, _seed_rows(A, 2), 1000)
        fs, fe = 0, count
        while fs != fe:
            count, full = kernels.closure_round_numpy(
                result.store, count, fs, fe, join_u8, meet_u8, comp_u8, index,
                1000, chunk=chunk)
            assert not full
            fs, fe = fe, count
        stores.append(result.store[:count].copy())
    for other in stores[1:]:
        assert np.array_equal(stores[0], other)
