import pytest

from complat.errors import UnknownTheorem
from complat.verify import THEOREM_IDS, verify

FAST_SIZE = 5


@pytest.mark.parametrize("tid", THEOREM_IDS)
def test_campaigns_clean_at_size_5(tid):
    report = verify(tid, max_size=FAST_SIZE)
    assert report.ok, report.counterexamples[:3]
    assert report.algebras_checked > 0


def test_lem12_at_size_2_checks_exactly_bool2():
    report = verify("LEM12", max_size=2)
    assert report.algebras_checked == 1
    assert report.ok


def test_unknown_theorem():
    with pytest.raises(UnknownTheorem):
        verify("TH99")


def test_reports_carry_elapsed_and_notes():
    report = verify("TH42", max_size=5, seed=11)
    assert report.elapsed >= 0
    assert any("exhaustive" in note for note in report.notes)


def test_th42_deterministic_for_seed():
    r1 = verify("TH42", max_size=6, seed=3, samples=50)
    r2 = verify("TH42", max_size=6, seed=3, samples=50)
    assert r1.algebras_checked == r2.algebras_checked
    assert r1.counterexamples == r2.counterexamples


def test_jobs_do_not_change_results():
    for tid in ("LEM31", "TH33"):
        r1 = verify(tid, max_size=6, jobs=1)
        r4 = verify(tid, max_size=6, jobs=4)
        assert r1.algebras_checked == r4.algebras_checked
        assert r1.counterexamples == r4.counterexamples


def test_sep_notes_carry_failure_witness():
    report = verify("SEP", max_size=2)
    assert report.ok
    assert any("demorgan-join" in note and "O6STAR" in note
               for note in report.notes)


def test_counterexamples_are_reported_not_raised():
    # a fabricated wrong claim would show up as counterexamples; here we
    # check the machinery by asserting TH33 scans both associativities
    report = verify("TH33", max_size=4)
    assert report.ok
    assert report.algebras_checked >= 2
