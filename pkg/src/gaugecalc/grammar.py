"""Text syntax for presentations.

    spec   := preset | "(" "S1" ("x" factor)+ ")" "/" "<" gen ("," gen)* ">"
    preset := "U(" int ")" | "S1" ("x" factor)*
    gen    := "(" a "/" m ";" celt ("," celt)* ")"
    celt   := int | "0" | center element name (1, z, d, d+, d-)

``render`` in :mod:`gaugecalc.presentation` writes this syntax back.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .lie_catalog import SimpleType, center
from .presentation import CentralElement, GroupPresentation, unitary


class SpecSyntaxError(ValueError):
    pass


_UNITARY = re.compile(r"U\(\s*(\d+)\s*\)")
_QUOTIENT = re.compile(r"\((.*)\)\s*/\s*<(.*)>")
_GEN = re.compile(r"\(\s*(-?\d+)\s*/\s*(\d+)\s*;([^()]*)\)")


def _factors(text: str) -> list[SimpleType]:
    parts = [s.strip() for s in re.split(r"\s*x\s*", text.strip())]
    if not parts or parts[0] != "S1":
        raise SpecSyntaxError(f"expected 'S1' first in {text!r}")
    try:
        return [SimpleType.parse(s) for s in parts[1:]]
    except ValueError as exc:
        raise SpecSyntaxError(str(exc)) from None


def _center_part(t: SimpleType, token: str) -> tuple[int, ...]:
    z = center(t)
    token = token.strip()
    if z.rank == 0:
        if token != "0":
            raise SpecSyntaxError(f"{t} has trivial center; use 0, got {token!r}")
        return ()
    if token == "1" and z.rank > 1:
        return z.identity
    if token in z.names:
        return z.names[token]
    if re.fullmatch(r"-?\d+", token) and z.rank == 1:
        return z.reduce((int(token),))
    raise SpecSyntaxError(f"bad center element {token!r} for {t}")


def parse(text: str) -> GroupPresentation:
    """Parse a presentation; validity (pi_1 = Z) is checked separately."""
    s = text.strip()
    m = _UNITARY.fullmatch(s)
    if m:
        n = int(m.group(1))
        if n < 2:
            raise SpecSyntaxError("U(n) needs n >= 2")
        return unitary(n)
    m = _QUOTIENT.fullmatch(s)
    if m is None:
        return GroupPresentation(tuple(_factors(s)), ())
    factors = _factors(m.group(1))
    body = m.group(2)
    gens = []
    pos = 0
    for g in _GEN.finditer(body):
        if body[pos : g.start()].strip(" ,"):
            raise SpecSyntaxError(f"unexpected text {body[pos:g.start()]!r} in generator list")
        pos = g.end()
        a, mod = int(g.group(1)), int(g.group(2))
        if mod == 0:
            raise SpecSyntaxError("zero denominator")
        celts = g.group(3).split(",")
        if len(celts) != len(factors):
            raise SpecSyntaxError(f"generator has {len(celts)} center parts for {len(factors)} factors")
        parts = tuple(_center_part(t, c) for t, c in zip(factors, celts))
        gens.append(CentralElement(Fraction(a, mod), parts))
    if body[pos:].strip(" ,") or not gens:
        raise SpecSyntaxError(f"cannot parse generator list {body!r}")
    return GroupPresentation(tuple(factors), tuple(gens))
