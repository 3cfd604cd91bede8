from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from gaugecalc.modp.algebra import DegreeCapError
from gaugecalc.modp.steenrod import (
    MissingRuleError,
    SteenrodRule,
    bso,
    bso_rule,
    contains_term,
    indecomposable_part,
    is_decomposable,
    sq,
    sq_w_case,
    verify_sq_w_case,
    wu_sq,
)

from strategies import counted


def w(A, *idx):
    out = A.one()
    for j in idx:
        out = out * A.gen(f"w{j}")
    return out


def test_wu_examples():
    A5, A12 = bso(5), bso(12)
    assert wu_sq(2, 4, 5) == w(A5, 2, 4)
    assert wu_sq(2, 6, 12) == w(A12, 2, 6)
    assert contains_term(wu_sq(2, 4, 5), next(iter(w(A5, 3, 3).terms))) == 0


def test_sq1_hand_table():
    # Sq^1 w_j = (j - 1) w_{j+1} since w_1 = 0
    A = bso(8)
    table = {2: w(A, 3), 3: A.zero(), 4: w(A, 5), 5: A.zero(), 6: w(A, 7)}
    for j, val in table.items():
        assert wu_sq(1, j, 8) == val


def test_sq2_hand_table():
    A = bso(8)
    assert wu_sq(2, 3, 8) == w(A, 2, 3) + w(A, 5)
    assert wu_sq(2, 4, 8) == w(A, 2, 4) + w(A, 6)
    assert wu_sq(2, 5, 8) == w(A, 2, 5)


def test_cartan_example():
    rule = bso_rule(12)
    A = rule.algebra
    assert sq(rule, 2, w(A, 2, 4)) == w(A, 3, 5) + w(A, 2, 6)
    assert sq(rule, 2, A.gen("w6")) == wu_sq(2, 6, 12)


def test_indecomposables():
    A = bso(8)
    assert indecomposable_part(w(A, 2, 4)) == {}
    assert indecomposable_part(w(A, 6) + w(A, 2, 4)) == {"w6": 1}
    assert is_decomposable(wu_sq(2, 4, 5))


@pytest.mark.parametrize("n", range(7, 25))
def test_sq_w_lemma(n):
    assert verify_sq_w_case(n).passed


def test_sq_w_cases_cover_all_classes():
    assert {sq_w_case(n)[0] for n in range(7, 25)} == {
        "n = 0,1 mod 4",
        "n = 2 mod 8",
        "n = 6 mod 8",
        "n = 3 mod 4",
    }


def test_rule_validation_rejects_bad_axioms():
    A = bso(6)
    with pytest.raises(ValueError, match="Sq\\^4 w4"):
        SteenrodRule(A, {("w4", 4): A.gen("w4")})
    with pytest.raises(ValueError, match="!= 0"):
        SteenrodRule(A, {("w2", 3): A.gen("w5")})


def test_missing_rule_and_cap():
    A = bso(6).with_cap(8)
    rule = SteenrodRule(A, {})
    with pytest.raises(MissingRuleError):
        sq(rule, 1, A.gen("w4"))
    with pytest.raises(DegreeCapError):
        sq(rule, 5, A.gen("w5"))


@settings(max_examples=1000, deadline=None)
@given(st.integers(2, 14), st.data())
@counted
def test_steenrod_axioms(n, data):
    j = data.draw(st.integers(2, n))
    A = bso(n)
    assert wu_sq(0, j, n) == A.gen(f"w{j}")
    if 2 * j <= A.cap:
        assert wu_sq(j, j, n) == A.gen(f"w{j}") ** 2
    i = data.draw(st.integers(j + 1, j + 5))
    assert wu_sq(i, j, n) == 0
    k = data.draw(st.integers(1, j - 1))
    val = wu_sq(k, j, n)
    assert val == 0 or val.degree == j + k


@st.composite
def bso_monomial(draw, n: int, max_deg: int):
    A = bso(n)
    deg = draw(st.integers(2, max_deg))
    monos = list(A.monomials(deg))
    return A.element({draw(st.sampled_from(monos)): 1}) if monos else A.one()


@settings(max_examples=1000, deadline=None)
@given(st.integers(4, 10), st.data())
@counted
def test_cartan_consistency(n, data):
    rule = bso_rule(n)
    A = rule.algebra
    a = data.draw(bso_monomial(n, 6))
    b = data.draw(bso_monomial(n, 6))
    top = A.cap - (max(a.degrees()) + max(b.degrees()))
    if top < 0:
        return
    k = data.draw(st.integers(0, min(top, 6)))
    lhs = sq(rule, k, a * b)
    rhs = A.zero()
    for i in range(k + 1):
        rhs = rhs + sq(rule, i, a) * sq(rule, k - i, b)
    assert lhs == rhs
