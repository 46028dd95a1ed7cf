import pytest

from complat import latfile
from complat.catalog import FIXED_KEYS, catalog
from complat.clattice import CLattice
from complat.errors import LatFileError, NotALattice


def test_round_trip_catalog():
    for key in FIXED_KEYS:
        alg = catalog(key).algebra
        text = latfile.dumps(alg)
        again = latfile.loads(text)
        assert again == alg
        assert latfile.dumps(again) == text


def test_serialization_is_stable():
    alg = catalog("O6").algebra
    assert latfile.dumps(alg) == latfile.dumps(alg)


def test_covers_sorted_lexicographically():
    text = latfile.dumps(catalog("FIG3").algebra)
    covers = [line for line in text.splitlines() if line.startswith("cover:")]
    assert covers == sorted(covers)


def test_comments_and_blank_lines_ignored():
    text = "# heading\n\nelements: 0 1\n# middle\ncover: 0 1\n"
    alg = latfile.loads(text)
    assert alg.size == 2


def test_dumps_inline_single_line():
    inline = latfile.dumps_inline(catalog("BOOL2").algebra)
    assert "\n" not in inline
    assert inline.startswith("elements: 0 1")


def test_comp_table_optional():
    text = "elements: 0 1\ncover: 0 1\n"
    alg = latfile.loads(text)
    assert not isinstance(alg, CLattice)


def test_partial_comp_rejected():
    text = "elements: 0 1\ncover: 0 1\ncomp: 0 1\n"
    with pytest.raises(LatFileError):
        latfile.loads(text)


def test_unknown_directive_rejected():
    with pytest.raises(LatFileError):
        latfile.loads("elements: 0 1\ncover: 0 1\nfrobnicate: 1\n")


def test_missing_elements_rejected():
    with pytest.raises(LatFileError):
        latfile.loads("cover: 0 1\n")


def test_duplicate_names_rejected():
    with pytest.raises(LatFileError):
        latfile.loads("elements: a a\n")


def test_undeclared_cover_name_rejected():
    with pytest.raises(LatFileError):
        latfile.loads("elements: 0 1\ncover: 0 2\n")


def test_non_lattice_rejected():
    text = ("elements: 0 a b c d 1\n"
            "cover: 0 a\ncover: 0 b\ncover: a c\ncover: a d\n"
            "cover: b c\ncover: b d\ncover: c 1\ncover: d 1\n")
    with pytest.raises(NotALattice):
        latfile.loads(text)


def test_round_trip_over_enumerated_lattices():
    from complat.enumeration import enumerate_lattices
    for L in enumerate_lattices(5):
        text = latfile.dumps(L)
        again = latfile.loads(text)
        assert latfile.dumps(again) == text


def test_fixture_files_round_trip(fixtures_dir):
    for path in sorted(fixtures_dir.glob("*.lat")):
        alg = latfile.load(path)
        body = [line for line in path.read_text().splitlines()
                if not line.startswith("#")]
        assert latfile.dumps(alg).strip().splitlines() == body
