import pytest

from complat.catalog import FIXED_KEYS, catalog
from complat.clattice import CLattice, is_complementation
from complat.errors import UnknownKey
from complat.lattice import are_isomorphic, validate


def table_by_name(entry):
    alg = entry.algebra
    return {alg.names[i]: alg.names[alg.unary[i]] for i in range(alg.size)}


def test_all_entries_validate():
    for key in FIXED_KEYS + ("BOOLN(2)", "BOOLN(4)", "CHAIN(1)", "CHAIN(5)"):
        entry = catalog(key)
        alg = entry.algebra
        L = alg.lattice if isinstance(alg, CLattice) else alg
        validate(L)
        if isinstance(alg, CLattice):
            assert is_complementation(alg)[0], key
        assert entry.provenance


def test_m3p_table():
    assert table_by_name(catalog("M3P")) == {
        "0": "1", "a": "b", "b": "c", "c": "a", "1": "0"}


def test_o6_table():
    assert table_by_name(catalog("O6")) == {
        "0": "1", "a": "d", "b": "c", "c": "b", "d": "a", "1": "0"}


def test_o6star_table():
    assert table_by_name(catalog("O6STAR")) == {
        "0": "1", "a": "c", "b": "d", "c": "a", "d": "b", "1": "0"}


def test_n5_tables_with_corrected_top():
    assert table_by_name(catalog("N5")) == {
        "0": "1", "a": "b", "b": "a", "c": "b", "1": "0"}
    assert table_by_name(catalog("N5STAR")) == {
        "0": "1", "a": "b", "b": "c", "c": "b", "1": "0"}
    # the printed tables say 1'=1; provenance records the correction
    for key in ("N5", "N5STAR"):
        assert "1'=0" in catalog(key).provenance


def test_bool2():
    entry = catalog("BOOL2")
    assert table_by_name(entry) == {"0": "1", "1": "0"}
    assert entry.algebra.size == 2


def test_booln_sizes():
    for n in (1, 2, 3, 4):
        entry = catalog(f"BOOLN({n})")
        assert entry.algebra.size == 2 ** n
    assert are_isomorphic(catalog("BOOLN(1)").algebra,
                          catalog("BOOL2").algebra) is not None


def test_chain_sizes():
    for k in (1, 2, 3, 6):
        entry = catalog(f"CHAIN({k})")
        alg = entry.algebra
        L = alg.lattice if isinstance(alg, CLattice) else alg
        assert L.size == k
        # chains are totally ordered
        for a in range(k):
            for b in range(k):
                assert L.leq[a, b] or L.leq[b, a]


def test_chains_beyond_two_carry_no_table():
    assert not isinstance(catalog("CHAIN(3)").algebra, CLattice)
    assert not isinstance(catalog("CHAIN(2)").algebra, CLattice)


def test_fig_lattices_shape():
    for key in ("FIG2", "FIG3"):
        alg = catalog(key).algebra
        assert alg.size == 10
        # primes pair up as an involution
        assert all(alg.unary[alg.unary[i]] == i for i in range(10))


def test_fig2_incomparable_complements_not_of_each_other():
    A = catalog("FIG2").algebra
    L = A.lattice
    c, cp, dp = L.index("c"), L.index("c'"), L.index("d'")
    # c' and d' both complement c but not each other
    for x in (cp, dp):
        assert L.join[c, x] == L.top and L.meet[c, x] == L.bottom
    assert not (L.join[cp, dp] == L.top and L.meet[cp, dp] == L.bottom)
    assert not L.leq[cp, dp] and not L.leq[dp, cp]


def test_fig3_comparable_complements():
    A = catalog("FIG3").algebra
    L = A.lattice
    a, ap, dp = L.index("a"), L.index("a'"), L.index("d'")
    for x in (ap, dp):
        assert L.join[a, x] == L.top and L.meet[a, x] == L.bottom
    assert L.leq[dp, ap]


def test_unknown_keys():
    for bad in ("M4", "BOOLN(0)", "CHAIN(0)", "chain(3)", "BOOLN(x)"):
        with pytest.raises(UnknownKey):
            catalog(bad)


def test_entries_are_cached():
    assert catalog("O6") is catalog("O6")
