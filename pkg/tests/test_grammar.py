from __future__ import annotations

import pytest
from hypothesis import given, settings

from gaugecalc.grammar import SpecSyntaxError, parse
from gaugecalc.lie_catalog import Spin, SU
from gaugecalc.presentation import PresentationError, render, s_invariant, unitary, validate

from strategies import presentations


def test_presets():
    assert parse("U(6)") == unitary(6)
    p = parse("S1xSU(3)xSp(2)")
    assert p.factors[0] == SU(3) and not p.generators
    assert parse("S1 x E8").factors[0].family == "E8"


def test_quotient_forms():
    p = parse("(S1 x SU(4) x SU(4))/<(1/4; 1, 3)>")
    assert s_invariant(p) == 4
    p = parse("(S1 x Spin(12))/<(1/2; d-)>")
    assert p.factors == (Spin(12),) and s_invariant(p) == 2
    assert parse("(S1 x Spin(10))/<(1/4; d)>") == parse("(S1 x Spin(10))/<(1/4; 1)>")
    assert parse("(S1 x G2 x SU(2))/<(1/2; 0, 1)>").generators[0].parts == ((), (1,))


@pytest.mark.parametrize(
    "text",
    ["U(1)", "(S1 x SU(3))/<(1/3; 1, 1)>", "(S1 x G2)/<(1/2; 1)>", "(S1 x Spin(12))/<(1/2; q)>", "SU(3)", "(S1 x SU(3))/<>"],
)
def test_syntax_errors(text):
    with pytest.raises(ValueError):
        parse(text)


def test_invalid_but_parseable():
    p = parse("(S1 x SU(2))/<(0/1; 1)>")
    with pytest.raises(PresentationError, match="π₁ has torsion"):
        validate(p)


def test_spin6_hint():
    with pytest.raises(SpecSyntaxError, match="SU\\(4\\)"):
        parse("S1xSpin(6)")


@settings(max_examples=300, deadline=None)
@given(presentations())
def test_render_parse_roundtrip(p):
    assert parse(render(p)) == p
