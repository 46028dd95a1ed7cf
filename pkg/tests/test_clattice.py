import numpy as np
import pytest

from complat.catalog import catalog, chain_lattice, m3_lattice, n5_lattice
from complat.clattice import (CLattice, complements_of, count_complementations,
                              enumerate_complementations, is_antitone,
                              is_boolean, is_complementation, is_involution,
                              is_ortholattice)
from complat.errors import NoComplementation


def test_is_complementation_catalog():
    for key in ("M3P", "N5", "N5STAR", "O6", "O6STAR", "FIG2", "FIG3", "BOOL2"):
        ok, witness = is_complementation(catalog(key).algebra)
        assert ok and witness is None, key


def test_identity_map_is_not_complementation():
    L = n5_lattice()
    A = CLattice(L, np.arange(L.size))
    ok, witness = is_complementation(A)
    assert not ok
    # canonical scan order puts the bottom first (0|0 = 0 != 1); interior
    # elements such as a fail the same way later in the scan
    assert witness == L.bottom
    a = L.index("a")
    assert L.join[a, A.unary[a]] != L.top


def test_antitone():
    assert is_antitone(catalog("N5").algebra) == (True, None)
    assert is_antitone(catalog("BOOL2").algebra) == (True, None)
    ok, pair = is_antitone(catalog("O6STAR").algebra)
    assert not ok
    names = catalog("O6STAR").algebra.names
    assert (names[pair[0]], names[pair[1]]) == ("a", "b")


def test_involution():
    assert is_involution(catalog("O6").algebra) == (True, None)
    ok, w = is_involution(catalog("N5").algebra)
    assert not ok and catalog("N5").algebra.names[w] == "c"
    ok, w = is_involution(catalog("M3P").algebra)
    assert not ok and catalog("M3P").algebra.names[w] == "a"


def test_ortholattice():
    assert is_ortholattice(catalog("O6").algebra)
    assert is_ortholattice(catalog("FIG2").algebra)
    assert is_ortholattice(catalog("FIG3").algebra)
    assert not is_ortholattice(catalog("N5").algebra)   # no involution
    assert not is_ortholattice(catalog("O6STAR").algebra)  # not antitone


def test_boolean():
    assert is_boolean(catalog("BOOL2").algebra)
    assert is_boolean(catalog("BOOLN(3)").algebra)
    assert not is_boolean(catalog("O6").algebra)
    assert not is_boolean(catalog("M3P").algebra)


def test_complements_of_m3():
    L = m3_lattice()
    assert [L.names[b] for b in complements_of(L, L.index("a"))] == ["b", "c"]


def test_complements_of_n5_b():
    L = n5_lattice()
    assert [L.names[b] for b in complements_of(L, L.index("b"))] == ["a", "c"]


def test_complements_of_bottom_is_top():
    for key in ("M3P", "N5", "O6", "FIG2", "BOOLN(2)"):
        alg = catalog(key).algebra
        L = getattr(alg, "lattice", alg)
        assert complements_of(L, L.bottom) == [L.top]
        assert complements_of(L, L.top) == [L.bottom]


def test_enumerate_chain2():
    tabs = enumerate_complementations(chain_lattice(2))
    assert len(tabs) == 1 and tabs[0].tolist() == [1, 0]


def test_enumerate_n5_matches_catalog():
    tabs = enumerate_complementations(n5_lattice())
    assert [t.tolist() for t in tabs] == [
        catalog("N5").algebra.unary.tolist(),
        catalog("N5STAR").algebra.unary.tolist(),
    ]


def test_enumerate_m3_oracle_count():
    # definition-faithful product count is 2*2*2 = 8; the source example
    # asserts six, and the disagreement is surfaced rather than forced
    L = m3_lattice()
    tabs = enumerate_complementations(L)
    assert len(tabs) == 8
    assert count_complementations(L) == 8
    product = 1
    for a in range(L.size):
        product *= len(complements_of(L, a))
    assert len(tabs) == product


def test_enumerate_respects_lex_order():
    tabs = enumerate_complementations(m3_lattice())
    as_tuples = [tuple(t.tolist()) for t in tabs]
    assert as_tuples == sorted(as_tuples)


def test_enumerate_no_complementation():
    with pytest.raises(NoComplementation):
        enumerate_complementations(chain_lattice(3))


def test_enumerated_tables_fix_bounds():
    for key in ("M3P", "N5", "O6"):
        L = catalog(key).algebra.lattice
        for tab in enumerate_complementations(L):
            assert tab[L.bottom] == L.top
            assert tab[L.top] == L.bottom
            A = CLattice(L, tab)
            assert is_complementation(A)[0]


def test_boolean_implies_ortholattice_up_to_size_7():
    # every enumerated complementation: Boolean algebras are ortholattices
    from complat.enumeration import complemented_list
    for A in complemented_list(7):
        if is_boolean(A):
            assert is_involution(A)[0] and is_antitone(A)[0]


def test_enumerated_bounds_forced_up_to_size_6():
    # a = 0 iff a' = 1, across every enumerated table
    from complat.enumeration import complemented_list
    for A in complemented_list(6):
        assert A.unary[A.lattice.bottom] == A.lattice.top
        assert A.unary[A.lattice.top] == A.lattice.bottom
        for x in range(A.size):
            if x not in (A.lattice.bottom, A.lattice.top):
                assert A.unary[x] not in (A.lattice.bottom, A.lattice.top)
