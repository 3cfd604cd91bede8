"""Exact data on compact simply-connected simple Lie groups.

Centers, the standard names of central quotients, and homotopy groups in
the ranges where they are known from Bott periodicity (plus the first
unstable group pi_{2n}(SU(n)) = Z/n!).  Anything outside the tables is
reported as UNKNOWN rather than extrapolated.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .abelian import AbGroupDescriptor, FinAbGroup

FAMILIES = ("SU", "Sp", "Spin", "G2", "F4", "E6", "E7", "E8")
EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    n: int | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown simple family {self.family!r}")
        if self.family in EXCEPTIONAL:
            if self.n is not None:
                raise ValueError(f"{self.family} takes no rank parameter")
            return
        if self.n is None or not isinstance(self.n, int):
            raise ValueError(f"{self.family} needs an integer rank parameter")
        if self.family == "SU" and self.n < 2:
            raise ValueError("SU(n) requires n >= 2")
        if self.family == "Sp" and self.n < 1:
            raise ValueError("Sp(n) requires n >= 1")
        if self.family == "Spin" and self.n < 7:
            hint = {
                3: "Spin(3) = SU(2)",
                4: "Spin(4) = SU(2) x SU(2)",
                5: "Spin(5) = Sp(2)",
                6: "Spin(6) = SU(4)",
            }.get(self.n, "use the isomorphic SU/Sp presentation")
            raise ValueError(f"Spin(n) requires n >= 7; {hint}")

    def __str__(self) -> str:
        return self.family if self.n is None else f"{self.family}({self.n})"

    @classmethod
    def parse(cls, text: str) -> SimpleType:
        text = text.strip()
        if text in EXCEPTIONAL:
            return cls(text)
        for fam in ("SU", "Sp", "Spin"):
            if text.startswith(fam + "(") and text.endswith(")"):
                inner = text[len(fam) + 1 : -1].strip()
                if inner.isdigit():
                    return cls(fam, int(inner))
        raise ValueError(f"cannot parse simple Lie group {text!r}")


def SU(n: int) -> SimpleType:
    return SimpleType("SU", n)


def Sp(n: int) -> SimpleType:
    return SimpleType("Sp", n)


def Spin(n: int) -> SimpleType:
    return SimpleType("Spin", n)


def center(t: SimpleType) -> FinAbGroup:
    """Z(H) with named generators.

    Spin(4m) uses the basis (z, d-) where H/<z> = SO(4m) and
    H/<d-> = Ss(4m); the third order-2 element is d+ = z + d-.
    """
    fam, n = t.family, t.n
    if fam == "SU":
        return FinAbGroup((n,), {"c": (1,)})
    if fam == "Sp":
        return FinAbGroup((2,), {"c": (1,)})
    if fam == "Spin":
        if n % 2:
            return FinAbGroup((2,), {"z": (1,)})
        if n % 4 == 2:
            return FinAbGroup((4,), {"d": (1,), "z": (2,)})
        return FinAbGroup((2, 2), {"z": (1, 0), "d-": (0, 1), "d+": (1, 1)})
    if fam == "E6":
        return FinAbGroup((3,), {"c": (1,)})
    if fam == "E7":
        return FinAbGroup((2,), {"c": (1,)})
    return FinAbGroup(())


def quotient_name(t: SimpleType, subgroup: Iterable[Sequence[int]]) -> str:
    """Name of H/s for the subgroup s of Z(H) generated by ``subgroup``."""
    z = center(t)
    s = z.generated(subgroup)
    if len(s) == 1:
        return str(t)
    full = len(s) == z.order
    fam, n = t.family, t.n
    if fam == "SU" and full:
        return f"PU({n})"
    if fam == "Sp" and full:
        return f"PSp({n})"
    if fam in ("E6", "E7") and full:
        return f"Ad({fam})"
    if fam == "Spin":
        if full and n % 2 == 0:
            return f"PO({n})"
        if s == z.generated([z.names["z"]]):
            return f"SO({n})"
        if n % 4 == 0 and s == z.generated([z.names["d-"]]):
            return f"Ss({n})"
    return f"{t}/{_subgroup_label(z, s)}"


def _subgroup_label(z: FinAbGroup, s: frozenset) -> str:
    # a single named generator is the most informative label
    for name, v in z.names.items():
        if z.generated([v]) == s:
            return f"<{name}>"
    return f"Z/{len(s)}" if len(s) > 1 else "1"


def spin_u_class_suspends(n: int, i: int) -> bool:
    """Whether u_i in H*(BSpin(n); Z/2) restricts nontrivially to Sigma Spin(n).

    True exactly for 2 < i <= n with i != 2^k + 1; u_2 vanishes.
    """
    if not 2 <= i <= n:
        raise ValueError(f"need 2 <= i <= n, got i={i}, n={n}")
    if i == 2:
        return False
    k = i - 1
    return k & (k - 1) != 0


# --- homotopy groups -------------------------------------------------------

# pi_i(Sp) and pi_i(O) for i mod 8, i >= 1 (Bott periodicity)
_BOTT_SP = {0: "0", 1: "0", 2: "0", 3: "Z", 4: "Z/2", 5: "Z/2", 6: "0", 7: "Z"}
_BOTT_O = {0: "Z/2", 1: "Z/2", 2: "0", 3: "Z", 4: "0", 5: "0", 6: "0", 7: "Z"}

OUTSIDE = "outside stable table"


def bott_pi(t: SimpleType, i: int) -> AbGroupDescriptor:
    """Rule-based homotopy groups for the classical families.

    Stable ranges: SU(n) for i <= 2n-1 (plus i = 2n), Sp(n) for
    i <= 4n+1, Spin(n) for i <= n-2.  Exceptional groups and degrees
    outside these ranges give UNKNOWN.
    """
    if i < 1:
        raise ValueError("homotopy degree must be >= 1")
    fam, n = t.family, t.n
    if i <= 2:
        return AbGroupDescriptor.zero()
    if fam == "SU":
        if i <= 2 * n - 1:
            return AbGroupDescriptor.integers() if i % 2 else AbGroupDescriptor.zero()
        if i == 2 * n:
            return AbGroupDescriptor.cyclic(math.factorial(n))
    elif fam == "Sp":
        if i <= 4 * n + 1:
            return AbGroupDescriptor.parse(_BOTT_SP[i % 8])
    elif fam == "Spin":
        if i <= n - 2:
            return AbGroupDescriptor.parse(_BOTT_O[i % 8])
    return AbGroupDescriptor.of_unknown(OUTSIDE)


class HomotopyTable:
    """Explicit (family, n, i) -> group records, consulted before the rules."""

    def __init__(self, records: dict[tuple[str, int | None, int], AbGroupDescriptor] | None = None):
        self.records = dict(records or {})

    @staticmethod
    def _read(stream: io.TextIOBase) -> dict:
        out = {}
        rows = (line for line in stream if line.strip() and not line.lstrip().startswith("#"))
        for row in csv.DictReader(rows):
            n = row["n"].strip()
            key = (row["family"].strip(), int(n) if n else None, int(row["i"]))
            out[key] = AbGroupDescriptor.parse(row["value"])
        return out

    @classmethod
    def embedded(cls) -> HomotopyTable:
        with resources.files("gaugecalc.data").joinpath("pi_tables.csv").open(encoding="utf-8") as fh:
            return cls(cls._read(fh))

    def extended(self, path: str | Path) -> HomotopyTable:
        """A copy with records from ``path`` overriding/extending this table."""
        with open(path, encoding="utf-8") as fh:
            extra = self._read(fh)
        return HomotopyTable({**self.records, **extra})

    def lookup(self, t: SimpleType, i: int) -> AbGroupDescriptor:
        if i < 1:
            raise ValueError("homotopy degree must be >= 1")
        hit = self.records.get((t.family, t.n, i))
        if hit is not None:
            return hit
        if t.family in EXCEPTIONAL:
            return AbGroupDescriptor.of_unknown(OUTSIDE)
        return bott_pi(t, i)


_DEFAULT_TABLE: HomotopyTable | None = None


def default_table() -> HomotopyTable:
    global _DEFAULT_TABLE
    if _DEFAULT_TABLE is None:
        _DEFAULT_TABLE = HomotopyTable.embedded()
    return _DEFAULT_TABLE


def pi(t: SimpleType, i: int, table: HomotopyTable | None = None) -> AbGroupDescriptor:
    return (table or default_table()).lookup(t, i)
