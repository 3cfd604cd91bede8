"""Homotopy classification of the gauge groups G_k(X, G) over a surface."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .presentation import GroupPresentation, s_invariant, validate


class Verdict(str, enum.Enum):
    EQUIVALENT = "EQUIVALENT"
    NOT_EQUIVALENT = "NOT_EQUIVALENT"
    EQUIVALENT_SUFFICIENT_ONLY_UNKNOWN = "EQUIVALENT_SUFFICIENT_ONLY_UNKNOWN"


# citation tags attached to results
MAIN_1 = "theorem:main-1"
MAIN_2 = "theorem:main-2"
SAMELSON = "theorem:samelson-product"
DECOMPOSITION = "theorem:main-decomposition"
SURFACE_SPLITTING = "proposition:homotopy-decomposition"
MODULI = "isomorphism:moduli-gauge"

LOCAL_NOTE = "homotopy equivalent after localization at every prime and at zero"


@dataclass(frozen=True)
class EquivalenceVerdict:
    verdict: Verdict
    justification: str
    note: str = ""


def gcd_class(k: int, s: int) -> int:
    """(k, s) with the convention (0, s) = s."""
    return math.gcd(k, s)


def samelson_order(p: GroupPresentation) -> int:
    """Order of the Samelson product <epsilon, 1_G>; equal to s(G)."""
    return s_invariant(p)


def is_iff_family(p: GroupPresentation) -> bool:
    """Whether H is SU(n)^r, or a product of SU(4n-2)'s and Sp(2n-1)'s, for one n."""
    validate(p)
    fams = {(t.family, t.n) for t in p.factors}
    if all(f == "SU" for f, _ in fams) and len({n for _, n in fams}) == 1:
        return True
    ms = set()
    for fam, n in fams:
        if fam == "SU" and (n + 2) % 4 == 0:
            ms.add((n + 2) // 4)
        elif fam == "Sp" and n % 2 == 1:
            ms.add((n + 1) // 2)
        else:
            return False
    return len(ms) == 1


def equivalent(p: GroupPresentation, k: int, l: int) -> EquivalenceVerdict:
    s = s_invariant(p)
    if gcd_class(k, s) == gcd_class(l, s):
        return EquivalenceVerdict(Verdict.EQUIVALENT, MAIN_1, LOCAL_NOTE)
    if is_iff_family(p):
        return EquivalenceVerdict(Verdict.NOT_EQUIVALENT, MAIN_2)
    return EquivalenceVerdict(
        Verdict.EQUIVALENT_SUFFICIENT_ONLY_UNKNOWN,
        MAIN_1,
        f"(k, s) = {gcd_class(k, s)} differs from (l, s) = {gcd_class(l, s)}; "
        "no converse is known for this H",
    )


@dataclass(frozen=True)
class ClassCount:
    count: int
    representatives: tuple[int, ...]
    label: str  # "exact" or "upper bound"


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def class_count(p: GroupPresentation) -> ClassCount:
    """Number of possible homotopy types of G_k(X, G) as k ranges over Z.

    One representative bundle k = d per divisor d of s(G); when s(G) = 1 the
    trivial bundle k = 0 represents the single class.
    """
    s = s_invariant(p)
    if s == 1:
        return ClassCount(1, (0,), "exact")
    label = "exact" if is_iff_family(p) else "upper bound"
    reps = tuple(divisors(s))
    return ClassCount(len(reps), reps, label)
