from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from gaugecalc.abelian import (
    AbGroupDescriptor as D,
    FinAbGroup,
    invariant_factors,
    subgroup_invariant_factors,
)


def test_invariant_factors_oracle():
    assert invariant_factors([2, 3]) == (6,)
    assert invariant_factors([2, 2]) == (2, 2)
    assert invariant_factors([4, 6]) == (2, 12)
    assert invariant_factors([1, 1]) == ()


def test_render_and_json():
    g = D.integers(2) + D.cyclic(6) + D.cyclic(4)
    assert g.render() == "Z^2 ⊕ Z/2 ⊕ Z/12"
    assert g.to_json() == {"free_rank": 2, "torsion": [2, 12]}
    assert D.zero().render() == "0"
    assert D.cyclic(0) == D.integers()


def test_unknown_propagates():
    u = D.of_unknown("why")
    assert (u + D.integers()).is_unknown
    assert "UNKNOWN" in u.render()
    assert u.to_json() == {"unknown": "why"}


@pytest.mark.parametrize("text", ["Z^3", "Z/6^2", "Z + Z/2", "Z^20 ⊕ Z/24", "0"])
def test_parse_render_roundtrip(text):
    g = D.parse(text)
    assert D.parse(g.render()) == g


def test_power():
    assert D.integers().power(4) == D.integers(4)
    assert D.cyclic(3).power(2).torsion == (3, 3)


@given(st.lists(st.integers(1, 30), max_size=5), st.lists(st.integers(1, 30), max_size=5))
def test_sum_is_commutative_and_order_multiplies(a, b):
    x = sum((D.cyclic(n) for n in a), D.zero()) if a else D.zero()
    y = sum((D.cyclic(n) for n in b), D.zero()) if b else D.zero()
    assert x + y == y + x
    assert (x + y).order == x.order * y.order


def test_subgroup_of_z2xz4():
    g = FinAbGroup((2, 4))
    sub = g.generated([(1, 2)])
    assert len(sub) == 2
    full = g.generated([(1, 0), (0, 1)])
    assert subgroup_invariant_factors(full, g.scale, g.identity) == (2, 4)
