"""Homotopy groups of gauge groups G_k(X, G) and of moduli spaces M(n, k).

Two independent routes are provided for the sphere factor G_k(S^2, G):

* the product decomposition G_k(S^2, G) ~ G x Omega^2 G, valid when s(G) | k;
* the long exact sequence of Omega^2_0 G -> G_k(S^2, G) -> G for
  H = SU(n)^r, with the connecting map pi_j(G) -> pi_{j+1}(G) given by
  k times the Samelson product with the generator of pi_1(G).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .abelian import AbGroupDescriptor
from .lie_catalog import HomotopyTable, pi
from .presentation import GroupPresentation, factor_orders, s_invariant, validate

Base = Literal["surface", "sphere"]

UNRESOLVED = "connecting map not resolved for this G, k, i"


class OutOfRange(ValueError):
    """Degree outside the range where the requested isomorphism holds."""


class Rejected(ValueError):
    """Parameters explicitly excluded by the moduli-space isomorphism."""


def bott_samelson_multiple(n: int) -> int:
    """<alpha_1, alpha_{2n-1}> = (n-1)! times a generator of pi_{2n}(U(n)) = Z/n!.

    Classical (Bott, "A note on the Samelson product in the classical
    groups", 1960); it gives the product order exactly n.
    """
    return math.factorial(n - 1)


@dataclass(frozen=True)
class GaugeQuery:
    presentation: GroupPresentation
    genus: int
    k: int
    i: int
    base: Base = "surface"

    def __post_init__(self) -> None:
        if self.base not in ("surface", "sphere"):
            raise ValueError(f"base must be 'surface' or 'sphere' (orientable), got {self.base!r}")
        if self.genus < 0:
            raise ValueError("genus must be non-negative")


def group_pi(p: GroupPresentation, i: int, table: HomotopyTable | None = None) -> AbGroupDescriptor:
    """pi_i(G); pi_1 = Z by hypothesis, and for i >= 2 the covering S^1 x H -> G is a pi_i-iso."""
    if i < 1:
        raise ValueError("degree must be >= 1")
    if i == 1:
        return AbGroupDescriptor.integers()
    total = AbGroupDescriptor.zero()
    for t in p.factors:
        total = total + pi(t, i, table)
    return total


def decomposition_sphere_pi(
    p: GroupPresentation, i: int, table: HomotopyTable | None = None
) -> AbGroupDescriptor:
    """pi_i(G x Omega^2 G) = pi_i(G) + pi_{i+2}(G)."""
    return group_pi(p, i, table) + group_pi(p, i + 2, table)


def _su_rank(p: GroupPresentation) -> int | None:
    """n if H = SU(n)^r for a single n, else None."""
    ns = {t.n for t in p.factors if t.family == "SU"}
    if len(ns) == 1 and all(t.family == "SU" for t in p.factors):
        return ns.pop()
    return None


def _summands(p: GroupPresentation, j: int, table) -> list[int] | None:
    """pi_j(G) as one cyclic order per slot (0 = Z); None when unknown.

    Slot 0 is the circle, slots 1..r the SU(n) factors.
    """
    if j == 1:
        return [0] + [1] * len(p.factors)
    out = [1]
    for t in p.factors:
        d = pi(t, j, table)
        if d.is_unknown or d.free_rank + len(d.torsion) > 1:
            return None
        out.append(0 if d.free_rank else (d.torsion[0] if d.torsion else 1))
    return out


def _connecting_multipliers(p, n: int, k: int, j: int, src: list[int], dst: list[int]) -> list[int] | None:
    """Slot-wise multipliers of (d_k)_*: pi_j(G) -> pi_{j+1}(G), or None if undetermined."""
    if all(o == 1 for o in src) or all(o == 1 for o in dst):
        return [0] * len(src)
    if j == 2 * n - 1:
        # per factor: k * <epsilon, alpha> = k * (n / s_i) * (n-1)! * generator
        s_i = factor_orders(p)
        return [0] + [k * (n // si) * bott_samelson_multiple(n) for si in s_i]
    return None


def _kernel_and_cokernel(src, dst, mult):
    kernel, cokernel = [], []
    for a, b, m in zip(src, dst, mult):
        if m == 0 or a == 1 or b == 1 or (b > 0 and m % b == 0):
            # zero map on this slot
            kernel.append(AbGroupDescriptor.cyclic(a) if a != 1 else AbGroupDescriptor.zero())
            cokernel.append(AbGroupDescriptor.cyclic(b) if b != 1 else AbGroupDescriptor.zero())
            continue
        if a != 0:
            return None
        # Z --m--> Z/b (b > 0) or Z --m--> Z
        kernel.append(AbGroupDescriptor.integers() if b else AbGroupDescriptor.zero())
        cokernel.append(AbGroupDescriptor.cyclic(math.gcd(m, b)) if b else AbGroupDescriptor.cyclic(abs(m)))
    ker = sum(kernel, AbGroupDescriptor.zero())
    coker = sum(cokernel, AbGroupDescriptor.zero())
    return ker, coker


def sphere_gauge_pi_sun(
    p: GroupPresentation,
    k: int,
    i: int,
    table: HomotopyTable | None = None,
    trace: list[str] | None = None,
) -> AbGroupDescriptor:
    """pi_i(G_k(S^2, G)) for H = SU(n)^r and 1 <= i <= 2n-2, from the exact sequence

        pi_{i+1}(G) --d--> pi_{i+2}(G) -> pi_i(G_k) -> pi_i(G) --d--> pi_{i+1}(G)
    """
    validate(p)
    n = _su_rank(p)
    if n is None:
        raise ValueError("sphere_gauge_pi_sun needs H = SU(n)^r")
    if not 1 <= i <= 2 * n - 2:
        return AbGroupDescriptor.of_unknown(f"degree {i} outside 1..{2 * n - 2}")
    log = trace if trace is not None else []

    maps = {}
    for j in (i, i + 1):
        src, dst = _summands(p, j, table), _summands(p, j + 1, table)
        if src is None or dst is None:
            return AbGroupDescriptor.of_unknown(UNRESOLVED)
        mult = _connecting_multipliers(p, n, k, j, src, dst)
        if mult is None:
            return AbGroupDescriptor.of_unknown(UNRESOLVED)
        res = _kernel_and_cokernel(src, dst, mult)
        if res is None:
            return AbGroupDescriptor.of_unknown(UNRESOLVED)
        maps[j] = res
        log.append(f"d_{j}: pi_{j}(G) -> pi_{j + 1}(G) slot multipliers {mult}")

    ker = maps[i][0]
    coker = maps[i + 1][1]
    log.append(f"0 -> coker d_{i + 1} = {coker} -> pi_{i} -> ker d_{i} = {ker} -> 0")
    if ker.torsion and not coker.is_trivial:
        return AbGroupDescriptor.of_unknown("unresolved extension in the exact sequence")
    # a free quotient splits; a trivial sub- or quotient group is forced
    return coker + ker


def gcd_only_form(p: GroupPresentation, k: int) -> AbGroupDescriptor:
    """prod_i Z/(k, |q_i(C)|): the closed form that omits the n!/s_i scaling.

    Reported next to pi_{2n-2} results for comparison; it disagrees with the
    decomposition when s(G) | k.
    """
    return sum(
        (AbGroupDescriptor.cyclic(math.gcd(k, si)) for si in factor_orders(p)),
        AbGroupDescriptor.zero(),
    )


def sphere_gauge_pi(
    p: GroupPresentation,
    k: int,
    i: int,
    table: HomotopyTable | None = None,
    trace: list[str] | None = None,
) -> AbGroupDescriptor:
    s = s_invariant(p)
    if k % s == 0:
        if trace is not None:
            trace.append(f"s(G) = {s} divides k = {k}: G_k(S^2, G) ~ G x Omega^2 G")
        return decomposition_sphere_pi(p, i, table)
    if _su_rank(p) is not None:
        return sphere_gauge_pi_sun(p, k, i, table, trace)
    return AbGroupDescriptor.of_unknown(UNRESOLVED)


def gauge_pi(
    q: GaugeQuery, table: HomotopyTable | None = None, trace: list[str] | None = None
) -> AbGroupDescriptor:
    """pi_i(G_k(X, G)) = pi_{i+1}(G)^{2g} + pi_i(G_k(S^2, G)) for i >= 1."""
    if q.i < 1:
        raise ValueError("use gauge_components for i = 0")
    validate(q.presentation)
    sphere = sphere_gauge_pi(q.presentation, q.k, q.i, table, trace)
    if q.base == "sphere" or q.genus == 0:
        return sphere
    loops = group_pi(q.presentation, q.i + 1, table).power(2 * q.genus)
    if trace is not None:
        trace.append(f"(Omega G)^{2 * q.genus} contributes {loops}")
    return loops + sphere


def gauge_components(p: GroupPresentation, genus: int, k: int, base: Base = "surface") -> AbGroupDescriptor:
    """pi_0(G_k(X, G)) as a group.

    G_k(S^2, G) is connected: its pi_0 sits between coker(pi_1 G -> pi_2 G) = 0
    and pi_0(G) = 0.  Over a genus g surface each of the 2g loop factors
    contributes pi_0(Omega G) = pi_1(G) = Z.
    """
    validate(p)
    if base == "sphere" or genus == 0:
        return AbGroupDescriptor.zero()
    return AbGroupDescriptor.integers(2 * genus)


def moduli_range(n: int, g: int) -> tuple[int, int]:
    """Inclusive degree range (lo, hi) with pi_i(M(n,k)) = pi_{i-1}(G_k(X, U(n)))."""
    return 3, 2 * (g - 1) * (n - 1) - 2


def moduli_pi(
    n: int, k: int, g: int, i: int, table: HomotopyTable | None = None, trace: list[str] | None = None
) -> AbGroupDescriptor:
    """pi_i of the moduli space of stable rank n degree k bundles on a genus g surface."""
    from .presentation import unitary

    if (n, k) == (2, 2):
        raise Rejected("(n, k) = (2, 2) is excluded")
    lo, hi = moduli_range(n, g)
    if not lo <= i <= hi:
        raise OutOfRange(f"need 2 < i <= 2(g-1)(n-1)-2 = {hi}, got i = {i}")
    return gauge_pi(GaugeQuery(unitary(n), g, k, i - 1, "surface"), table, trace)
