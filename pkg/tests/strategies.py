"""Hypothesis strategies shared by the property suites."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import wraps

from hypothesis import strategies as st

from gaugecalc.lie_catalog import SimpleType, center
from gaugecalc.presentation import CentralElement, GroupPresentation

FACTORS = [
    SimpleType("SU", n) for n in range(2, 7)
] + [SimpleType("Sp", n) for n in (1, 2, 3)] + [SimpleType("Spin", n) for n in (7, 9, 10, 12)] + [
    SimpleType(e) for e in ("G2", "E6", "E7")
]


@st.composite
def central_element(draw, factors, denom_max: int = 24) -> CentralElement:
    parts = []
    for t in factors:
        z = center(t)
        parts.append(tuple(draw(st.integers(0, d - 1)) for d in z.factors))
    m = draw(st.integers(1, denom_max))
    a = draw(st.integers(0, m - 1))
    return CentralElement(Fraction(a, m), tuple(parts))


@st.composite
def presentations(draw) -> GroupPresentation:
    factors = tuple(draw(st.lists(st.sampled_from(FACTORS), min_size=1, max_size=3)))
    gens = tuple(draw(st.lists(central_element(factors), max_size=2)))
    return GroupPresentation(factors, gens)


# invocation counts of the property tests, read by the acceptance gate
CALLS: Counter = Counter()


def counted(fn):
    @wraps(fn)
    def wrapper(*args, **kwargs):
        CALLS[fn.__name__] += 1
        return fn(*args, **kwargs)

    return wrapper
