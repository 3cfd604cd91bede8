"""Graded-commutative algebras over F_p and their tensor powers.

Elements are sparse dicts from reduced monomials (exponent tuples) to
coefficients in 0..p-1.  Products beyond the presentation's degree cap raise
:class:`DegreeCapError` instead of being dropped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Mapping

Monomial = tuple[int, ...]


class DegreeCapError(ArithmeticError):
    """A computation produced a term above the algebra's degree cap."""


def binom_mod(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem; zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    out = 1
    while n or k:
        a, b = n % p, k % p
        if b > a:
            return 0
        num = den = 1
        for t in range(b):
            num = num * (a - t) % p
            den = den * (t + 1) % p
        out = out * num * pow(den, p - 2, p) % p
        n //= p
        k //= p
    return out


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    height: int | None = None  # g^height = 0; None means polynomial


@dataclass(frozen=True)
class AlgebraPresentation:
    p: int
    generators: tuple[Generator, ...]
    cap: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be distinct")
        for g in self.generators:
            if g.degree < 1:
                raise ValueError(f"generator {g.name} must have positive degree")
            if g.height is not None and g.height < 2:
                raise ValueError(f"height of {g.name} must be >= 2")
            if self.p != 2 and g.degree % 2 and g.height != 2:
                raise ValueError(f"odd-degree generator {g.name} must be exterior for p={self.p}")
        if self.cap is None:
            object.__setattr__(self, "cap", 2 * max(g.degree for g in self.generators) + 4)

    @cached_property
    def index(self) -> dict[str, int]:
        return {g.name: i for i, g in enumerate(self.generators)}

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    @cached_property
    def _odd(self) -> tuple[bool, ...]:
        return tuple(self.p != 2 and d % 2 == 1 for d in self.degrees)

    def with_cap(self, cap: int) -> AlgebraPresentation:
        return AlgebraPresentation(self.p, self.generators, cap)

    # -- monomials ---------------------------------------------------------

    def unit_monomial(self) -> Monomial:
        return (0,) * len(self.generators)

    def gen_monomial(self, name: str, power: int = 1) -> Monomial:
        e = [0] * len(self.generators)
        e[self.index[name]] = power
        return tuple(e)

    def degree(self, m: Monomial) -> int:
        return sum(e * d for e, d in zip(m, self.degrees))

    def length(self, m: Monomial) -> int:
        return sum(m)

    def mono_mul(self, a: Monomial, b: Monomial) -> tuple[int, Monomial] | None:
        """(sign, a*b) or None when a height kills the product."""
        out = []
        for e, f, g in zip(a, b, self.generators):
            s = e + f
            if g.height is not None and s >= g.height:
                return None
            out.append(s)
        sign = 1
        if self.p != 2:
            odd = self._odd
            # move each odd factor of b left past the odd factors of a with larger index
            later = 0
            for idx in range(len(a) - 1, -1, -1):
                if odd[idx]:
                    if b[idx] and later % 2:
                        sign = -sign
                    later += a[idx]
        return sign, tuple(out)

    def monomial_str(self, m: Monomial) -> str:
        parts = []
        for e, g in zip(m, self.generators):
            if e == 1:
                parts.append(g.name)
            elif e > 1:
                parts.append(f"{g.name}^{e}")
        return "*".join(parts) if parts else "1"

    def monomials(self, degree: int) -> Iterator[Monomial]:
        """Reduced monomials of the given degree (finite for degree >= 0)."""

        def rec(idx: int, remaining: int) -> Iterator[list[int]]:
            if idx == len(self.generators):
                if remaining == 0:
                    yield []
                return
            g = self.generators[idx]
            top = remaining // g.degree
            if g.height is not None:
                top = min(top, g.height - 1)
            for e in range(top + 1):
                for rest in rec(idx + 1, remaining - e * g.degree):
                    yield [e] + rest

        for m in rec(0, degree):
            yield tuple(m)

    def indecomposables(self, degree: int) -> list[str]:
        """Generators of the given degree: a basis of QA in that degree."""
        return [g.name for g in self.generators if g.degree == degree]

    # -- elements ----------------------------------------------------------

    def element(self, terms: Mapping[Monomial, int] | None = None) -> AlgElement:
        return AlgElement(self, dict(terms or {}))

    def zero(self) -> AlgElement:
        return AlgElement(self, {})

    def one(self) -> AlgElement:
        return AlgElement(self, {self.unit_monomial(): 1})

    def gen(self, name: str) -> AlgElement:
        return AlgElement(self, {self.gen_monomial(name): 1})

    def __getitem__(self, name: str) -> AlgElement:
        return self.gen(name)

    def parse_monomial(self, text: str) -> Monomial:
        """'w2*w4^3' -> exponent tuple; '1' is the unit."""
        e = [0] * len(self.generators)
        text = text.strip()
        if text == "1":
            return tuple(e)
        for factor in text.split("*"):
            name, _, power = factor.strip().partition("^")
            e[self.index[name]] += int(power or 1)
        m = tuple(e)
        if self.mono_mul(m, self.unit_monomial()) is None:
            raise ValueError(f"monomial {text} vanishes in this algebra")
        return m


@dataclass(frozen=True, eq=False)
class AlgElement:
    algebra: AlgebraPresentation
    terms: dict[Monomial, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        p = self.algebra.p
        clean = {m: c % p for m, c in self.terms.items() if c % p}
        cap = self.algebra.cap
        for m in clean:
            if self.algebra.degree(m) > cap:
                raise DegreeCapError(
                    f"term {self.algebra.monomial_str(m)} exceeds degree cap {cap}"
                )
        object.__setattr__(self, "terms", clean)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: AlgElement) -> AlgElement:
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return AlgElement(self.algebra, out)

    def __neg__(self) -> AlgElement:
        return AlgElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: AlgElement) -> AlgElement:
        return self + (-other)

    def __mul__(self, other: AlgElement | int) -> AlgElement:
        if isinstance(other, int):
            return AlgElement(self.algebra, {m: c * other for m, c in self.terms.items()})
        A = self.algebra
        out: dict[Monomial, int] = {}
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                r = A.mono_mul(a, b)
                if r is None:
                    continue
                sign, m = r
                if A.degree(m) > A.cap:
                    raise DegreeCapError(f"product {A.monomial_str(m)} exceeds degree cap {A.cap}")
                out[m] = out.get(m, 0) + sign * c * d
        return AlgElement(A, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> AlgElement:
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out

    def degrees(self) -> set[int]:
        return {self.algebra.degree(m) for m in self.terms}

    @property
    def degree(self) -> int:
        """Degree of a nonzero homogeneous element."""
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("element is zero or not homogeneous")
        return ds.pop()

    def homogeneous_parts(self) -> dict[int, AlgElement]:
        parts: dict[int, dict] = {}
        for m, c in self.terms.items():
            parts.setdefault(self.algebra.degree(m), {})[m] = c
        return {d: AlgElement(self.algebra, t) for d, t in parts.items()}

    def coefficient(self, m: Monomial | str) -> int:
        if isinstance(m, str):
            m = self.algebra.parse_monomial(m)
        return self.terms.get(m, 0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        A = self.algebra
        items = sorted(self.terms.items(), key=lambda kv: (A.degree(kv[0]), kv[0]))
        return " + ".join(
            A.monomial_str(m) if c == 1 else f"{c}*{A.monomial_str(m)}" for m, c in items
        )

    __repr__ = __str__


# --- tensor powers ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TensorElement:
    """F_p-combination of pure tensors m_1 (x) ... (x) m_arity of reduced monomials.

    ``dropped`` records, per truncation applied, how many terms were removed
    and why; truncation never mixes those terms back in.
    """

    algebra: AlgebraPresentation
    arity: int
    terms: dict[tuple[Monomial, ...], int] = field(default_factory=dict)
    dropped: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        p = self.algebra.p
        clean = {}
        for key, c in self.terms.items():
            if len(key) != self.arity:
                raise ValueError(f"pure tensor of arity {len(key)} in arity-{self.arity} element")
            if c % p:
                clean[key] = c % p
        object.__setattr__(self, "terms", clean)

    @classmethod
    def pure(cls, algebra: AlgebraPresentation, *factors: Monomial | str, coeff: int = 1) -> TensorElement:
        key = tuple(algebra.parse_monomial(f) if isinstance(f, str) else f for f in factors)
        return cls(algebra, len(key), {key: coeff})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: TensorElement) -> TensorElement:
        if other.arity != self.arity:
            raise ValueError("arity mismatch")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TensorElement(self.algebra, self.arity, out, self.dropped + other.dropped)

    def __neg__(self) -> TensorElement:
        return TensorElement(self.algebra, self.arity, {k: -c for k, c in self.terms.items()}, self.dropped)

    def __sub__(self, other: TensorElement) -> TensorElement:
        return self + (-other)

    def scaled(self, c: int) -> TensorElement:
        return TensorElement(self.algebra, self.arity, {k: c * v for k, v in self.terms.items()}, self.dropped)

    def __mul__(self, other: TensorElement) -> TensorElement:
        """Factorwise product with the Koszul sign (a1 (x) a2)(b1 (x) b2) = (-1)^{|a2||b1|} a1b1 (x) a2b2."""
        A = self.algebra
        out: dict = {}
        for ka, ca in self.terms.items():
            da = [A.degree(m) for m in ka]
            for kb, cb in other.terms.items():
                sign = 1
                if A.p != 2:
                    db = [A.degree(m) for m in kb]
                    # b_j moves past a_i for every i > j
                    exp = sum(da[i] * db[j] for j in range(self.arity) for i in range(j + 1, self.arity))
                    sign = -1 if exp % 2 else 1
                key = []
                for a, b in zip(ka, kb):
                    r = A.mono_mul(a, b)
                    if r is None:
                        break
                    s, m = r
                    sign *= s
                    key.append(m)
                else:
                    if sum(A.degree(m) for m in key) > A.cap:
                        raise DegreeCapError("tensor product exceeds degree cap")
                    k = tuple(key)
                    out[k] = out.get(k, 0) + sign * ca * cb
        return TensorElement(A, self.arity, out)

    def coefficient(self, *factors: Monomial | str) -> int:
        A = self.algebra
        key = tuple(A.parse_monomial(f) if isinstance(f, str) else f for f in factors)
        return self.terms.get(key, 0)

    def filtration(self, key: tuple[Monomial, ...]) -> int:
        """Word length of a pure tensor: the largest k with the term in I^k."""
        return sum(sum(m) for m in key)

    def truncate(self, max_length: int | None = None, drop_unit_slots: bool = False) -> TensorElement:
        """Remove terms of word length > max_length and, optionally, terms with a unit slot.

        For arity 2, ``max_length=2, drop_unit_slots=True`` is reduction
        mod I (x) 1 + 1 (x) I + (I_2)^3.
        """
        unit = self.algebra.unit_monomial()
        kept, n_long, n_unit = {}, 0, 0
        for key, c in self.terms.items():
            if drop_unit_slots and any(m == unit for m in key):
                n_unit += 1
            elif max_length is not None and self.filtration(key) > max_length:
                n_long += 1
            else:
                kept[key] = c
        record = []
        if drop_unit_slots:
            record.append(("unit slot", n_unit))
        if max_length is not None:
            record.append((f"length > {max_length}", n_long))
        return TensorElement(self.algebra, self.arity, kept, self.dropped + tuple(record))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        A = self.algebra
        parts = []
        for key, c in sorted(self.terms.items()):
            body = " ⊗ ".join(A.monomial_str(m) for m in key)
            parts.append(body if c == 1 else f"{c}*({body})")
        return " + ".join(parts)

    __repr__ = __str__


def tensor_unit(algebra: AlgebraPresentation, arity: int) -> TensorElement:
    return TensorElement(algebra, arity, {(algebra.unit_monomial(),) * arity: 1})


def embed(e: AlgElement, slot: int, arity: int) -> TensorElement:
    """1 (x) ... (x) e (x) ... (x) 1 with e in the given slot."""
    unit = e.algebra.unit_monomial()
    terms = {}
    for m, c in e.terms.items():
        key = [unit] * arity
        key[slot] = m
        terms[tuple(key)] = c
    return TensorElement(e.algebra, arity, terms)
