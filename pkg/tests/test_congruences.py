import pytest

from complat.catalog import catalog
from complat.clattice import CLattice
from complat.congruences import (Partition, all_congruences, congruence_lattice,
                                 diagonal, is_congruence,
                                 is_subdirectly_irreducible, monolith,
                                 principal_congruence)
from complat.errors import TrivialAlgebra
from complat.lattice import are_isomorphic, build_from_covers


def blocks_by_name(part, names):
    return sorted(tuple(names[i] for i in block) for block in part.blocks())


def test_principal_n5_mu():
    A = catalog("N5").algebra
    a, c = A.lattice.index("a"), A.lattice.index("c")
    mu = principal_congruence(A, a, c)
    assert mu.format(A.names) == "{0}{a,c}{b}{1}"


def test_principal_diagonal():
    for key in ("N5", "O6", "FIG2"):
        A = catalog(key).algebra
        assert principal_congruence(A, 2, 2) == diagonal(A.size)


def test_principal_fig3_monolith_classes():
    A = catalog("FIG3").algebra
    L = A.lattice
    theta = principal_congruence(A, L.index("a"), L.index("d"))
    nontrivial = [b for b in blocks_by_name(theta, A.names) if len(b) > 1]
    assert sorted(nontrivial) == [("a", "d"), ("d'", "a'")]


def test_all_congruences_n5():
    A = catalog("N5").algebra
    congs = all_congruences(A)
    assert len(congs) == 5
    formatted = {c.format(A.names) for c in congs}
    assert formatted == {
        "{0}{a}{b}{c}{1}",          # diagonal
        "{0}{a,c}{b}{1}",           # mu
        "{0,b}{a,c,1}",             # alpha
        "{0,a,c}{b,1}",             # beta
        "{0,a,b,c,1}",              # full
    }


def test_all_congruences_o6():
    A = catalog("O6").algebra
    congs = all_congruences(A)
    assert len(congs) == 5
    formatted = {c.format(A.names) for c in congs}
    # classes from the displayed list: mu, alpha, beta with b'=c, a'=d
    assert "{0}{a,b}{c,d}{1}" in formatted
    assert "{0,a,b}{c,d,1}" in formatted
    assert "{0,c,d}{a,b,1}" in formatted


def test_all_congruences_bool2():
    A = catalog("BOOL2").algebra
    congs = all_congruences(A)
    assert [c.format(A.names) for c in congs] == ["{0}{1}", "{0,1}"]


def test_every_congruence_is_compatible():
    for key in ("N5", "N5STAR", "O6", "O6STAR", "FIG2", "FIG3"):
        A = catalog(key).algebra
        for c in all_congruences(A):
            assert is_congruence(A, c)


def test_principal_is_smallest():
    for key in ("N5", "O6"):
        A = catalog(key).algebra
        congs = all_congruences(A)
        for a in range(A.size):
            for b in range(a + 1, A.size):
                principal = principal_congruence(A, a, b)
                for theta in congs:
                    if theta.same(a, b):
                        assert principal.refines(theta)


def test_congruence_lattice_n5_is_fig6():
    A = catalog("N5").algebra
    CL = congruence_lattice(A)
    assert CL.size == 5
    # unique atom, two incomparable coatoms
    atoms = [b for a, b in CL.covers() if a == CL.bottom]
    coatoms = [a for a, b in CL.covers() if b == CL.top]
    assert len(atoms) == 1
    assert len(coatoms) == 2
    x, y = coatoms
    assert not CL.leq[x, y] and not CL.leq[y, x]


def test_congruence_lattices_coincide():
    CLs = [congruence_lattice(catalog(k).algebra)
           for k in ("N5", "N5STAR", "O6", "O6STAR")]
    for other in CLs[1:]:
        assert are_isomorphic(CLs[0], other) is not None


def test_congruence_lattice_bool2():
    CL = congruence_lattice(catalog("BOOL2").algebra)
    assert CL.size == 2


def test_monolith_n5_is_mu():
    A = catalog("N5").algebra
    m = monolith(A)
    assert m is not None and m.format(A.names) == "{0}{a,c}{b}{1}"


def test_monolith_fig3_present_fig2_absent():
    A3 = catalog("FIG3").algebra
    m = monolith(A3)
    assert m is not None
    nontrivial = [b for b in blocks_by_name(m, A3.names) if len(b) > 1]
    assert sorted(nontrivial) == [("a", "d"), ("d'", "a'")]
    assert monolith(catalog("FIG2").algebra) is None


def test_subdirectly_irreducible():
    for key in ("N5", "N5STAR", "O6", "O6STAR", "BOOL2", "FIG3"):
        assert is_subdirectly_irreducible(catalog(key).algebra), key
    assert not is_subdirectly_irreducible(catalog("FIG2").algebra)


def test_monolith_trivial_algebra():
    with pytest.raises(TrivialAlgebra):
        monolith(catalog("CHAIN(1)").algebra)


def test_congruence_count_invariant_under_relabeling():
    A = catalog("N5").algebra
    relabeled_lattice = build_from_covers(
        ["z", "p", "q", "r", "t"],
        [("z", "p"), ("p", "r"), ("r", "t"), ("z", "q"), ("q", "t")])
    mapping = {"0": "z", "a": "p", "b": "q", "c": "r", "1": "t"}
    # translate the original unary table through the rename
    inverse = {v: k for k, v in mapping.items()}
    unary = []
    for name in relabeled_lattice.names:
        orig_idx = A.lattice.index(inverse[name])
        img_name = A.names[A.unary[orig_idx]]
        unary.append(relabeled_lattice.index(mapping[img_name]))
    B = CLattice(relabeled_lattice, unary)
    assert len(all_congruences(B)) == len(all_congruences(A))


def all_partitions(n):
    """Every partition of 0..n-1 as restricted-growth id tuples."""
    ids = [0] * n

    def rec(i, maxid):
        if i == n:
            yield Partition(list(ids))
            return
        for b in range(maxid + 2):
            ids[i] = b
            yield from rec(i + 1, max(maxid, b))

    yield from rec(0, -1)


def test_all_congruences_matches_partition_brute_force():
    # independent oracle: filter every partition by compatibility
    for key in ("N5", "N5STAR", "O6", "O6STAR", "BOOL2"):
        A = catalog(key).algebra
        brute = {p for p in all_partitions(A.size) if is_congruence(A, p)}
        assert brute == set(all_congruences(A)), key


def test_congruence_set_closed_under_meet_and_bounded():
    for key in ("N5", "O6", "FIG2", "FIG3"):
        A = catalog(key).algebra
        congs = all_congruences(A)
        delta, nabla = congs[0], congs[-1]
        assert delta == diagonal(A.size)
        assert nabla.num_blocks == 1
        for p in congs:
            assert delta.refines(p) and p.refines(nabla)
            for q in congs:
                assert p.meet(q) in congs
                assert p.join(q) in congs


def test_partition_join_meet():
    p = Partition([0, 0, 1, 2])
    q = Partition([0, 1, 1, 2])
    assert p.join(q).ids.tolist() == [0, 0, 0, 1]
    assert p.meet(q).ids.tolist() == [0, 1, 2, 3]
    assert p.meet(q).refines(p) and p.refines(p.join(q))
