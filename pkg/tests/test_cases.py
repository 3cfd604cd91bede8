from __future__ import annotations

import pytest

from gaugecalc.modp.cases import (
    all_reports,
    check_steenrod_criterion,
    commutator_report,
    criterion_report,
    e7_criterion,
    load_case,
    psp_criterion,
    so_criterion,
    verify_sq_e7,
)
from gaugecalc.modp.steenrod import CriterionWindowError


@pytest.mark.parametrize("n", [2, 3])
def test_psp(n):
    rep = criterion_report("psp", n)
    assert rep.passed
    # the literal reading of condition (1) fails because of x3 and x5
    assert any("x3" in note for note in rep.notes)


@pytest.mark.parametrize("case,n", [("so-odd", 9), ("so-odd", 13), ("so-even", 8), ("so-even", 12)])
def test_so(case, n):
    assert criterion_report(case, n).passed


def test_so_parity_checked():
    with pytest.raises(ValueError):
        criterion_report("so-odd", 12)


@pytest.mark.parametrize("n", [10, 18])
def test_so_fails_when_z_is_a_relation_class(n):
    # z = w_{n-1} with n - 1 = 2^k + 1: u_{n-1} does not suspend, so condition (3) fails
    rep = check_steenrod_criterion(so_criterion(n))
    assert not rep.passed
    assert [c.passed for c in rep.checks] == [True, True, False]


def test_e7():
    assert verify_sq_e7().passed
    assert criterion_report("e7").passed
    assert e7_criterion().x == "x6"


def test_window_error():
    data = psp_criterion(2)
    data.x = "x9"
    with pytest.raises(CriterionWindowError):
        check_steenrod_criterion(data)


def test_commutator_reports():
    assert commutator_report("po4n", 3).passed
    assert commutator_report("po4n", 4).passed
    assert commutator_report("e6").passed


def test_case_files_declare_expectations():
    for name in ("psp2n", "ad_e6", "ad_e7", "po4n", "bso"):
        assert load_case(name)["expected"] is True


def test_all_reports_pass():
    reps = all_reports()
    assert len(reps) == 18 + 2 + 4 + 1 + 3
    assert all(r.passed for r in reps)
