"""Presentations G = (S^1 x H)/C of compact Lie groups with pi_1(G) = Z.

H is a product of simple simply-connected factors and C is a finite
subgroup of S^1 x Z(H), given by generators.  All subgroup computations
enumerate the generated subgroup, which is small here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Sequence

from .abelian import FinAbGroup, generate_subgroup, subgroup_invariant_factors
from .lie_catalog import SimpleType, center


class PresentationError(ValueError):
    """Raised when a presentation does not describe a group with pi_1 = Z."""


@dataclass(frozen=True)
class CentralElement:
    """(e^{2 pi i circle}, h_1, ..., h_k) in S^1 x Z(H_1) x ... x Z(H_k)."""

    circle: Fraction
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        c = Fraction(self.circle) % 1
        object.__setattr__(self, "circle", c)
        object.__setattr__(self, "parts", tuple(tuple(p) for p in self.parts))


@dataclass(frozen=True)
class GroupPresentation:
    factors: tuple[SimpleType, ...]
    generators: tuple[CentralElement, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        centers = [center(t) for t in self.factors]
        gens = []
        for g in self.generators:
            if len(g.parts) != len(centers):
                raise PresentationError(
                    f"generator has {len(g.parts)} center parts for {len(centers)} factors"
                )
            gens.append(CentralElement(g.circle, tuple(z.reduce(p) for z, p in zip(centers, g.parts))))
        object.__setattr__(self, "generators", tuple(gens))

    @cached_property
    def centers(self) -> list[FinAbGroup]:
        return [center(t) for t in self.factors]

    def identity(self) -> CentralElement:
        return CentralElement(Fraction(0), tuple(z.identity for z in self.centers))

    def add(self, a: CentralElement, b: CentralElement) -> CentralElement:
        return CentralElement(
            a.circle + b.circle,
            tuple(z.add(x, y) for z, x, y in zip(self.centers, a.parts, b.parts)),
        )

    def scale(self, k: int, a: CentralElement) -> CentralElement:
        return CentralElement(k * a.circle, tuple(z.scale(k, x) for z, x in zip(self.centers, a.parts)))

    def subgroup(self) -> frozenset[CentralElement]:
        """All elements of C."""
        return self._elements

    @cached_property
    def _elements(self) -> frozenset[CentralElement]:
        return generate_subgroup(list(self.generators), self.add, self.identity())

    def p1_image(self) -> frozenset[Fraction]:
        return frozenset(c.circle for c in self.subgroup())

    def p2_image(self) -> frozenset[tuple[tuple[int, ...], ...]]:
        return frozenset(c.parts for c in self.subgroup())

    def factor_image(self, i: int) -> frozenset[tuple[int, ...]]:
        """q_i(C), the projection of C into Z(H_i)."""
        return frozenset(c.parts[i] for c in self.subgroup())

    def p2_invariant_factors(self) -> tuple[int, ...]:
        centers = self.centers

        def scale(k, parts):
            return tuple(z.scale(k, x) for z, x in zip(centers, parts))

        return subgroup_invariant_factors(
            self.p2_image(), scale, tuple(z.identity for z in centers)
        )


def validate(p: GroupPresentation) -> None:
    """Raise PresentationError unless pi_1((S^1 x H)/C) = Z.

    pi_1 has torsion exactly when C meets 1 x Z(H) nontrivially, i.e. when
    p_1 restricted to C is not injective.
    """
    if not p.factors:
        raise PresentationError("empty factor list")
    for c in sorted(p.subgroup(), key=_element_sort_key):
        if c.circle == 0 and c != p.identity():
            raise PresentationError(
                f"C contains nontrivial element of 1×Z(H): {render_element(p, c)} (π₁ has torsion)"
            )


def is_valid(p: GroupPresentation) -> bool:
    try:
        validate(p)
    except PresentationError:
        return False
    return True


def _element_sort_key(c: CentralElement):
    return (c.circle, c.parts)


def s_invariant(p: GroupPresentation) -> int:
    """s(G) = |p_2(C)|."""
    validate(p)
    s = len(p.p2_image())
    assert s == math.lcm(1, *factor_orders(p)), "s(G) must be the lcm of the factor orders"
    return s


def factor_orders(p: GroupPresentation) -> list[int]:
    """|q_i(C)| for each simple factor H_i."""
    validate(p)
    return [len(p.factor_image(i)) for i in range(len(p.factors))]


def canonicalize(p: GroupPresentation) -> GroupPresentation:
    """An equivalent presentation with |p_1(C')| = s(G).

    Quotienting first by C_2 = s(G)C, a finite subgroup of S^1 x 1, and
    identifying (S^1 x H)/C_2 with S^1 x H via t -> t^m (m = |C_2|)
    turns C into C' = image of C under (t, h) -> (t^m, h).
    """
    validate(p)
    s = len(p.p2_image())
    n1 = len(p.p1_image())
    m = n1 // s
    if m == 1:
        return p
    gens = tuple(CentralElement(m * g.circle, g.parts) for g in p.generators)
    return GroupPresentation(p.factors, gens)


# --- presets ---------------------------------------------------------------


def unitary(n: int) -> GroupPresentation:
    """U(n) = (S^1 x SU(n))/<(1/n; c)>."""
    return GroupPresentation((SimpleType("SU", n),), (CentralElement(Fraction(1, n), ((1,),)),))


def circle_times(*factors: SimpleType) -> GroupPresentation:
    """S^1 x H with trivial C."""
    return GroupPresentation(tuple(factors), ())


def circle_quotient(factor: SimpleType, element: Sequence[int] | str) -> GroupPresentation:
    """S^1 x_{Z/m} H: C generated by (1/m; h) with m the order of h in Z(H)."""
    z = center(factor)
    h = z.names[element] if isinstance(element, str) else z.reduce(element)
    m = z.element_order(h)
    return GroupPresentation((factor,), (CentralElement(Fraction(1, m), (h,)),))


def render_element(p: GroupPresentation, c: CentralElement) -> str:
    parts = [render_center_part(t, x) for t, x in zip(p.factors, c.parts)]
    return f"({c.circle.numerator}/{c.circle.denominator}; {', '.join(parts)})"


def render_center_part(t: SimpleType, x: tuple[int, ...]) -> str:
    z = center(t)
    if z.rank == 0:
        return "0"
    if z.rank == 1:
        return str(x[0])
    return z.name_of(x)


def render(p: GroupPresentation) -> str:
    """Text form accepted by :func:`gaugecalc.grammar.parse`."""
    if not p.generators:
        return "x".join(["S1"] + [str(t) for t in p.factors])
    body = " x ".join(["S1"] + [str(t) for t in p.factors])
    gens = ", ".join(render_element(p, g) for g in p.generators)
    return f"({body})/<{gens}>"
