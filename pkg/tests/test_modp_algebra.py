from __future__ import annotations

import math

import pytest
from hypothesis import given, settings, strategies as st

from gaugecalc.modp.algebra import (
    AlgebraPresentation,
    DegreeCapError,
    Generator,
    TensorElement,
    binom_mod,
    embed,
)
from gaugecalc.modp.hopf import parse_element, parse_tensor

from strategies import counted


@pytest.fixture
def e6ish():
    gens = (Generator("x1", 1, 2), Generator("x2", 2, 9), Generator("x3", 3, 2))
    return AlgebraPresentation(3, gens, 12)


def test_lucas_exhaustive_small():
    for p in (2, 3, 5, 7):
        for n in range(65):
            for k in range(n + 1):
                assert binom_mod(n, k, p) == math.comb(n, k) % p


@settings(max_examples=1000, deadline=None)
@given(st.integers(0, 64), st.integers(-3, 64), st.sampled_from([2, 3, 5, 7, 11]))
@counted
def test_lucas_vs_factorial(n, k, p):
    expected = math.factorial(n) // (math.factorial(k) * math.factorial(n - k)) % p if 0 <= k <= n else 0
    assert binom_mod(n, k, p) == expected


def test_odd_generators_must_be_exterior():
    with pytest.raises(ValueError, match="exterior"):
        AlgebraPresentation(3, (Generator("x1", 1),))


def test_default_cap():
    A = AlgebraPresentation(2, (Generator("a", 3),))
    assert A.cap == 10


def test_koszul_sign(e6ish):
    x1, x3 = e6ish["x1"], e6ish["x3"]
    assert x1 * x3 == -(x3 * x1)
    assert x1 * x1 == 0
    assert (x1 * x3 + x3 * x1) == 0


def test_height_and_cap(e6ish):
    x2 = e6ish["x2"]
    A = e6ish.with_cap(20)
    assert A["x2"] ** 9 == 0
    with pytest.raises(DegreeCapError):
        x2 ** 7  # degree 14 > cap 12


def test_parse_and_str(e6ish):
    e = parse_element(e6ish, "x1*x2 - x3 + 2*x2^2")
    assert e.coefficient("x3") == 2
    assert e.coefficient("x2^2") == 2
    assert str(parse_element(e6ish, "0")) == "0"


def test_monomial_enumeration(e6ish):
    assert sorted(e6ish.monomial_str(m) for m in e6ish.monomials(3)) == ["x1*x2", "x3"]


def test_tensor_product_sign(e6ish):
    a = TensorElement.pure(e6ish, "1", "x1")
    b = TensorElement.pure(e6ish, "x3", "1")
    # (1 (x) x1)(x3 (x) 1) = (-1)^{1*3} x3 (x) x1
    assert (a * b).coefficient("x3", "x1") == 2


def test_truncation_records_drops(e6ish):
    t = parse_tensor(e6ish, "x1|x2 + x2|1 + x1*x2|x2")
    kept = t.truncate(2, True)
    assert kept.coefficient("x1", "x2") == 1
    assert len(kept.terms) == 1
    assert dict(kept.dropped) == {"unit slot": 1, "length > 2": 1}


def test_embed(e6ish):
    t = embed(e6ish["x2"], 1, 3)
    assert t.coefficient("1", "x2", "1") == 1
