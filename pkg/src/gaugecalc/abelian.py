"""Finite and finitely generated abelian groups with exact arithmetic."""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence


def prime_factors(n: int) -> Counter:
    """Prime factorisation of ``n >= 1`` as a Counter ``{p: e}``."""
    out: Counter = Counter()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] += 1
            n //= d
        d += 1
    if n > 1:
        out[n] += 1
    return out


def invariant_factors(orders: Iterable[int]) -> tuple[int, ...]:
    """Invariant factors d1 | d2 | ... of a direct sum of cyclic groups.

    Orders equal to 1 are dropped.  Zero is not allowed here (free summands
    are tracked separately by :class:`AbGroupDescriptor`).
    """
    by_prime: dict[int, list[int]] = {}
    for m in orders:
        if m < 1:
            raise ValueError(f"cyclic order must be positive, got {m}")
        for p, e in prime_factors(m).items():
            by_prime.setdefault(p, []).append(p**e)
    if not by_prime:
        return ()
    length = max(len(v) for v in by_prime.values())
    factors = [1] * length
    for powers in by_prime.values():
        powers.sort(reverse=True)
        for idx, q in enumerate(powers):
            factors[length - 1 - idx] *= q
    return tuple(f for f in factors if f > 1)


@dataclass(frozen=True)
class AbGroupDescriptor:
    """A finitely generated abelian group Z^r + Z/t1 + ... in canonical form.

    ``unknown`` carries a reason string when the value could not be
    determined; an unknown descriptor absorbs every direct sum it enters.
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()
    unknown: str | None = None

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        object.__setattr__(self, "torsion", invariant_factors(self.torsion))
        if self.unknown is not None:
            object.__setattr__(self, "free_rank", 0)
            object.__setattr__(self, "torsion", ())

    @classmethod
    def zero(cls) -> AbGroupDescriptor:
        return cls()

    @classmethod
    def integers(cls, rank: int = 1) -> AbGroupDescriptor:
        return cls(free_rank=rank)

    @classmethod
    def cyclic(cls, order: int) -> AbGroupDescriptor:
        """Z/order; ``order == 0`` gives Z."""
        if order == 0:
            return cls(free_rank=1)
        return cls(torsion=(abs(order),))

    @classmethod
    def of_unknown(cls, reason: str) -> AbGroupDescriptor:
        return cls(unknown=reason)

    @property
    def is_unknown(self) -> bool:
        return self.unknown is not None

    @property
    def is_trivial(self) -> bool:
        return not self.is_unknown and self.free_rank == 0 and not self.torsion

    @property
    def order(self) -> int | None:
        """Group order, or None when infinite or unknown."""
        if self.is_unknown or self.free_rank:
            return None
        return math.prod(self.torsion)

    def __add__(self, other: AbGroupDescriptor) -> AbGroupDescriptor:
        if not isinstance(other, AbGroupDescriptor):
            return NotImplemented
        if self.is_unknown or other.is_unknown:
            reasons = [r for r in (self.unknown, other.unknown) if r]
            return AbGroupDescriptor.of_unknown("; ".join(dict.fromkeys(reasons)))
        return AbGroupDescriptor(self.free_rank + other.free_rank, self.torsion + other.torsion)

    def power(self, k: int) -> AbGroupDescriptor:
        """Direct sum of ``k`` copies (k = 0 gives the trivial group)."""
        if k < 0:
            raise ValueError("power must be non-negative")
        if self.is_unknown:
            return self if k else AbGroupDescriptor()
        return AbGroupDescriptor(self.free_rank * k, self.torsion * k)

    def render(self) -> str:
        if self.is_unknown:
            return f"UNKNOWN({self.unknown})"
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " ⊕ ".join(parts) if parts else "0"

    __str__ = render

    def to_json(self) -> dict:
        if self.is_unknown:
            return {"unknown": self.unknown}
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def parse(cls, text: str) -> AbGroupDescriptor:
        """Inverse of :meth:`render`; also accepts ``+`` as the sum sign."""
        text = text.strip()
        if text.startswith("UNKNOWN("):
            return cls.of_unknown(text[len("UNKNOWN(") : -1])
        total = cls()
        for term in re.split(r"⊕|\+", text):
            term = term.strip().replace(" ", "")
            if term in ("0", ""):
                continue
            m = re.fullmatch(r"Z(?:\^(\d+))?", term)
            if m:
                total = total + cls.integers(int(m.group(1) or 1))
                continue
            m = re.fullmatch(r"Z/(\d+)(?:\^(\d+))?", term)
            if m:
                total = total + cls.cyclic(int(m.group(1))).power(int(m.group(2) or 1))
                continue
            raise ValueError(f"cannot parse abelian group term {term!r}")
        return total


@dataclass(frozen=True)
class FinAbGroup:
    """Z/d1 x ... x Z/dk with elements stored as reduced exponent vectors.

    ``names`` maps human names to elements (e.g. ``{"z": (1, 0)}``); the
    identity is always available as the zero vector.
    """

    factors: tuple[int, ...]
    names: Mapping[str, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if any(d < 2 for d in self.factors):
            raise ValueError(f"invariant factors must be >= 2: {self.factors}")
        object.__setattr__(
            self, "names", {k: self.reduce(v) for k, v in dict(self.names).items()}
        )

    def __hash__(self) -> int:
        return hash((self.factors, tuple(sorted(self.names.items()))))

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.factors)

    def reduce(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != len(self.factors):
            raise ValueError(f"element {tuple(v)} has wrong length for Z/{self.factors}")
        return tuple(x % d for x, d in zip(v, self.factors))

    def add(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.factors))

    def scale(self, k: int, a: Sequence[int]) -> tuple[int, ...]:
        return tuple((k * x) % d for x, d in zip(a, self.factors))

    def element_order(self, a: Sequence[int]) -> int:
        return math.lcm(1, *(d // math.gcd(x, d) for x, d in zip(a, self.factors)))

    def elements(self) -> list[tuple[int, ...]]:
        out = [()]
        for d in self.factors:
            out = [e + (x,) for e in out for x in range(d)]
        return out

    def name_of(self, a: Sequence[int]) -> str | None:
        a = tuple(a)
        if a == self.identity:
            return "1"
        for k, v in self.names.items():
            if v == a:
                return k
        return None

    def generated(self, gens: Iterable[Sequence[int]]) -> frozenset[tuple[int, ...]]:
        """The subgroup generated by ``gens``, by closure."""
        return generate_subgroup([self.reduce(g) for g in gens], self.add, self.identity)


def generate_subgroup(gens, add, identity) -> frozenset:
    """Closure of ``gens`` under ``add`` in a finite abelian group."""
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                f = add(e, g)
                if f not in seen:
                    seen.add(f)
                    nxt.append(f)
        frontier = nxt
    return frozenset(seen)


def subgroup_invariant_factors(elements: Iterable, scale, identity) -> tuple[int, ...]:
    """Invariant factors of a finite abelian group given by its element set.

    ``scale(k, x)`` must compute k*x.  For each prime p the counts of
    p^j-torsion elements determine the p-primary partition.
    """
    elems = list(elements)
    n = len(elems)
    cyclic_orders: list[int] = []
    for p in prime_factors(n):
        logs = [0]
        j = 1
        while True:
            size = sum(1 for x in elems if scale(p**j, x) == identity)
            logs.append(round(math.log(size, p)))
            if size == p ** prime_factors(n)[p]:
                break
            j += 1
        # number of cyclic p-factors of order >= p^j is logs[j] - logs[j-1]
        at_least = [logs[j] - logs[j - 1] for j in range(1, len(logs))]
        for j, cnt in enumerate(at_least, start=1):
            nxt = at_least[j] if j < len(at_least) else 0
            cyclic_orders.extend([p**j] * (cnt - nxt))
    return invariant_factors(cyclic_orders)
