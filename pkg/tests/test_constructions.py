import pytest

from complat.catalog import catalog, chain_lattice, m3_lattice, n5_lattice, o6_lattice
from complat.clattice import (CLattice, enumerate_complementations,
                              is_boolean, is_complementation)
from complat.constructions import (direct_product, find_embedding,
                                   horizontal_sum, hsum_complementations,
                                   subalgebra_generated)
from complat.errors import InvalidLength
from complat.lattice import are_isomorphic, validate
from complat.terms import holds


def test_hsum_44_is_o6():
    L = horizontal_sum([4, 4])
    assert are_isomorphic(L, o6_lattice()) is not None


def test_hsum_34_is_n5():
    L = horizontal_sum([3, 4])
    assert are_isomorphic(L, n5_lattice()) is not None


def test_hsum_22_two_element_chain():
    L = horizontal_sum([2, 2])
    assert L.size == 2


def test_hsum_333_is_m3():
    L = horizontal_sum([3, 3, 3])
    assert are_isomorphic(L, m3_lattice()) is not None


def test_hsum_interior_joins_meet_bounds():
    for lengths in ([3, 4], [4, 4], [5, 3], [3, 3, 4]):
        L = horizontal_sum(lengths)
        validate(L)
        interiors = [i for i in range(L.size) if i not in (L.bottom, L.top)]
        chains = {}
        for i in interiors:
            chains.setdefault(L.names[i].split("_")[0], []).append(i)
        keys = list(chains)
        for k1 in keys:
            for k2 in keys:
                if k1 == k2:
                    continue
                for x in chains[k1]:
                    for y in chains[k2]:
                        assert L.join[x, y] == L.top
                        assert L.meet[x, y] == L.bottom


def test_hsum_invalid():
    with pytest.raises(InvalidLength):
        horizontal_sum([])
    with pytest.raises(InvalidLength):
        horizontal_sum([1, 4])


def test_hsum_complementations_counts():
    assert len(hsum_complementations(4, 4)) == 16
    assert len(hsum_complementations(3, 4)) == 2
    assert len(hsum_complementations(2, 2)) == 1
    assert hsum_complementations(2, 5) == []
    assert hsum_complementations(5, 2) == []


def test_hsum_complementations_34_are_n5_tables():
    tabs = hsum_complementations(3, 4)
    L = horizontal_sum([3, 4])
    algebras = [CLattice(L, t) for t in tabs]
    n5 = catalog("N5").algebra
    n5s = catalog("N5STAR").algebra
    matched = {key: any(are_isomorphic(A, ref) is not None for A in algebras)
               for key, ref in (("N5", n5), ("N5STAR", n5s))}
    assert matched == {"N5": True, "N5STAR": True}


def test_hsum_complementations_match_generic_enumeration():
    from complat.errors import NoComplementation
    for m in range(2, 7):
        for k in range(2, 7):
            special = [t.tolist() for t in hsum_complementations(m, k)]
            L = horizontal_sum([m, k])
            try:
                generic = [t.tolist() for t in enumerate_complementations(L)]
            except NoComplementation:
                generic = []
            assert special == generic, (m, k)


def test_product_bool2_squared():
    P = direct_product(catalog("BOOL2").algebra, catalog("BOOL2").algebra)
    assert P.size == 4
    assert is_boolean(P)
    assert are_isomorphic(P, catalog("BOOLN(2)").algebra) is not None


def test_product_preserves_coincidence():
    P = direct_product(catalog("N5").algebra, catalog("BOOL2").algebra)
    assert P.size == 10
    assert is_complementation(P)[0]
    assert holds(P, "coincidence")


def test_product_with_trivial():
    A = catalog("N5").algebra
    P = direct_product(A, catalog("CHAIN(1)").algebra)
    assert are_isomorphic(P, A) is not None


def test_product_preserves_registry_identities():
    from complat.terms import BUILTIN_SOURCES
    A, B = catalog("O6").algebra, catalog("N5STAR").algebra
    P = direct_product(A, B)
    for name in BUILTIN_SOURCES:
        if holds(A, name) and holds(B, name):
            assert holds(P, name), name


def test_product_lattice_only():
    L = direct_product(n5_lattice(), chain_lattice(2))
    assert not isinstance(L, CLattice)
    assert L.size == 10


def test_subalgebra_o6_single_generator():
    A = catalog("O6").algebra
    L = A.lattice
    members = subalgebra_generated(A, [L.index("a")])
    assert [L.names[i] for i in members] == ["0", "a", "d", "1"]


def test_subalgebra_empty_seed():
    for key in ("M3P", "N5", "O6", "FIG2"):
        A = catalog(key).algebra
        members = subalgebra_generated(A, [])
        assert members == [A.lattice.bottom, A.lattice.top]


def test_subalgebra_n5_c_generates_all():
    A = catalog("N5").algebra
    members = subalgebra_generated(A, [A.lattice.index("c")])
    assert members == list(range(A.size))


def test_subalgebra_is_closed():
    A = catalog("FIG3").algebra
    members = set(subalgebra_generated(A, [1, 2]))
    for a in members:
        assert int(A.unary[a]) in members
        for b in members:
            assert int(A.lattice.join[a, b]) in members
            assert int(A.lattice.meet[a, b]) in members


def test_embedding_identity():
    A = catalog("M3P").algebra
    assert find_embedding(A, A) == list(range(A.size))


def test_embedding_bool2_into_everything():
    B = catalog("BOOL2").algebra
    for key in ("M3P", "N5", "O6", "FIG2", "FIG3"):
        A = catalog(key).algebra
        emb = find_embedding(B, A)
        assert emb == [A.lattice.bottom, A.lattice.top]


def test_no_m3_embedding_into_o6():
    assert find_embedding(catalog("M3P").algebra, catalog("O6").algebra) is None


def test_embedding_n5_into_product():
    A = catalog("N5").algebra
    P = direct_product(A, catalog("BOOL2").algebra)
    emb = find_embedding(A, P)
    assert emb is not None
    for x in range(A.size):
        for y in range(A.size):
            assert P.lattice.join[emb[x], emb[y]] == emb[A.lattice.join[x, y]]
            assert P.lattice.meet[emb[x], emb[y]] == emb[A.lattice.meet[x, y]]
        assert P.unary[emb[x]] == emb[A.unary[x]]
