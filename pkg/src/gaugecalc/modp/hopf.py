"""Hopf algebra structure: coproducts, antipode and the commutator pullback.

For the commutator map gamma(x, y) = x y x^-1 y^-1, written as
mu o (mu x mu) o (1 x 1 x iota x iota) o (1 x T x 1) o (Delta x Delta),
the induced map gamma^* is computed stage by stage on exact 4-fold tensors
and only the final 2-fold result is reduced modulo the filtration mask.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    AlgebraPresentation,
    AlgElement,
    DegreeCapError,
    Monomial,
    TensorElement,
    embed,
    tensor_unit,
)


@dataclass(frozen=True)
class FiltrationMask:
    """Which blocks of a 2-fold tensor survive: reduction mod I(x)1 + 1(x)I + I_2^(max_length+1)."""

    max_length: int = 2
    drop_unit_slots: bool = True

    def apply(self, t: TensorElement) -> TensorElement:
        return t.truncate(self.max_length, self.drop_unit_slots)


STANDARD_MASK = FiltrationMask()


@dataclass
class CoproductRule:
    """Reduced coproducts of generators; unlisted generators are primitive."""

    algebra: AlgebraPresentation
    reduced: dict[str, TensorElement] = field(default_factory=dict)

    def __post_init__(self) -> None:
        A = self.algebra
        unit = A.unit_monomial()
        for name, t in self.reduced.items():
            if name not in A.index:
                raise ValueError(f"coproduct given for unknown generator {name}")
            deg = A.generators[A.index[name]].degree
            for key in t.terms:
                if t.arity != 2 or unit in key:
                    raise ValueError(f"reduced coproduct of {name} must lie in I (x) I")
                if sum(A.degree(m) for m in key) != deg:
                    raise ValueError(f"reduced coproduct of {name} is not homogeneous of degree {deg}")
        self._psi: dict[Monomial, TensorElement] = {}
        self._chi: dict[Monomial, AlgElement] = {}

    # -- coproduct ---------------------------------------------------------

    def reduced_of(self, name: str) -> TensorElement:
        return self.reduced.get(name, TensorElement(self.algebra, 2))

    def generator_coproduct(self, name: str) -> TensorElement:
        g = self.algebra.gen(name)
        return embed(g, 0, 2) + embed(g, 1, 2) + self.reduced_of(name)

    def coproduct_monomial(self, m: Monomial) -> TensorElement:
        if m in self._psi:
            return self._psi[m]
        A = self.algebra
        out = tensor_unit(A, 2)
        for g, e in zip(A.generators, m):
            if e:
                psi_g = self.generator_coproduct(g.name)
                for _ in range(e):
                    out = out * psi_g
        self._psi[m] = out
        return out

    def coproduct(self, e: AlgElement) -> TensorElement:
        out = TensorElement(self.algebra, 2)
        for m, c in e.terms.items():
            out = out + self.coproduct_monomial(m).scaled(c)
        return out

    # -- antipode ----------------------------------------------------------

    def antipode_monomial(self, m: Monomial) -> AlgElement:
        if m in self._chi:
            return self._chi[m]
        A = self.algebra
        out = A.one()
        for g, e in zip(A.generators, m):
            if e:
                chi_g = self._antipode_generator(g.name)
                for _ in range(e):
                    out = out * chi_g
        self._chi[m] = out
        return out

    def _antipode_generator(self, name: str) -> AlgElement:
        """chi(g) = -g - sum chi(g') g'' over the reduced coproduct of g."""
        A = self.algebra
        key = A.gen_monomial(name)
        if key in self._chi:
            return self._chi[key]
        total = -A.gen(name)
        for (left, right), c in self.reduced_of(name).terms.items():
            total = total - self.antipode_monomial(left) * A.element({right: c})
        self._chi[key] = total
        return total

    def antipode(self, e: AlgElement) -> AlgElement:
        """The antipode, extended multiplicatively (the algebras here are graded commutative)."""
        total = self.algebra.zero()
        for m, c in e.terms.items():
            total = total + self.antipode_monomial(m) * c
        return total

    # -- axioms ------------------------------------------------------------

    def coassociativity_defect(self, name: str) -> TensorElement:
        """(psi (x) 1) psi(g) - (1 (x) psi) psi(g); zero iff coassociative on g."""
        psi = self.generator_coproduct(name)
        left = apply_slot(psi, 0, self.coproduct_monomial)
        right = apply_slot(psi, 1, self.coproduct_monomial)
        return left - right

    def antipode_defects(self, e: AlgElement) -> tuple[AlgElement, AlgElement]:
        """mu (chi (x) 1) psi(e) - eta eps(e) and mu (1 (x) chi) psi(e) - eta eps(e)."""
        A = self.algebra
        psi = self.coproduct(e)
        counit = A.element({A.unit_monomial(): e.terms.get(A.unit_monomial(), 0)})
        left = multiply_out(apply_slot(psi, 0, lambda m: _as_tensor(self.antipode_monomial(m))))
        right = multiply_out(apply_slot(psi, 1, lambda m: _as_tensor(self.antipode_monomial(m))))
        return left - counit, right - counit

    def generators_within_cap(self) -> list[str]:
        return [g.name for g in self.algebra.generators if g.degree <= self.algebra.cap]


def _as_tensor(e: AlgElement) -> TensorElement:
    return TensorElement(e.algebra, 1, {(m,): c for m, c in e.terms.items()})


def apply_slot(t: TensorElement, slot: int, f) -> TensorElement:
    """Apply a degree-0 linear map to one tensor slot.

    ``f(monomial)`` returns a TensorElement whose arity replaces that slot
    (arity 1 for an endomorphism, 2 for a coproduct).
    """
    A = t.algebra
    out: dict = {}
    new_arity = None
    for key, c in t.terms.items():
        image = f(key[slot])
        new_arity = t.arity - 1 + image.arity
        for sub, d in image.terms.items():
            k = key[:slot] + sub + key[slot + 1 :]
            out[k] = out.get(k, 0) + c * d
    if new_arity is None:
        probe = f(A.unit_monomial())
        new_arity = t.arity - 1 + probe.arity
    return TensorElement(A, new_arity, out)


def swap_adjacent(t: TensorElement, slot: int) -> TensorElement:
    """The transposition of slots slot, slot+1 with the Koszul sign."""
    A = t.algebra
    out: dict = {}
    for key, c in t.terms.items():
        a, b = key[slot], key[slot + 1]
        sign = -1 if (A.p != 2 and A.degree(a) * A.degree(b) % 2) else 1
        k = key[:slot] + (b, a) + key[slot + 2 :]
        out[k] = out.get(k, 0) + sign * c
    return TensorElement(A, t.arity, out)


def multiply_slots(t: TensorElement, slot: int) -> TensorElement:
    """Cup product of slots slot and slot+1 (the pullback along a diagonal)."""
    A = t.algebra
    out: dict = {}
    for key, c in t.terms.items():
        r = A.mono_mul(key[slot], key[slot + 1])
        if r is None:
            continue
        sign, m = r
        k = key[:slot] + (m,) + key[slot + 2 :]
        out[k] = out.get(k, 0) + sign * c
    return TensorElement(A, t.arity - 1, out)


def multiply_out(t: TensorElement) -> AlgElement:
    while t.arity > 1:
        t = multiply_slots(t, 0)
    return t.algebra.element({key[0]: c for key, c in t.terms.items()})


@dataclass
class PipelineTrace:
    stages: list[tuple[str, TensorElement]] = field(default_factory=list)

    def lines(self) -> list[str]:
        return [f"{label}: {len(t.terms)} terms" for label, t in self.stages]


def commutator_pullback(
    rule: CoproductRule,
    x: str | AlgElement,
    mask: FiltrationMask | None = STANDARD_MASK,
    trace: PipelineTrace | None = None,
) -> TensorElement:
    """gamma^*(x) in A (x) A, reduced by ``mask`` (None keeps every term)."""
    A = rule.algebra
    e = A.gen(x) if isinstance(x, str) else x
    if any(A.degree(m) > A.cap for m in e.terms):
        raise DegreeCapError("input exceeds degree cap")

    stage = rule.coproduct(e)  # mu^*
    _record(trace, "mu*", stage)
    stage = apply_slot(stage, 1, rule.coproduct_monomial)  # (mu x mu)^*, right factor
    stage = apply_slot(stage, 0, rule.coproduct_monomial)  # (mu x mu)^*, left factor
    _record(trace, "(mu x mu)*", stage)

    def chi(m: Monomial) -> TensorElement:
        return _as_tensor(rule.antipode_monomial(m))

    stage = apply_slot(apply_slot(stage, 2, chi), 3, chi)  # (1 x 1 x iota x iota)^*
    _record(trace, "(1 x 1 x iota x iota)*", stage)
    stage = swap_adjacent(stage, 1)  # (1 x T x 1)^*
    _record(trace, "(1 x T x 1)*", stage)
    stage = multiply_slots(multiply_slots(stage, 2), 0)  # (Delta x Delta)^*
    _record(trace, "(Delta x Delta)*", stage)
    if mask is not None:
        stage = mask.apply(stage)
        _record(trace, "mask", stage)
    return stage


def _record(trace: PipelineTrace | None, label: str, t: TensorElement) -> None:
    if trace is not None:
        trace.stages.append((label, t))


# --- parsing ---------------------------------------------------------------


def _split_signed(text: str) -> list[tuple[int, str]]:
    """'a - 2*b + c' -> [(1, 'a'), (-1, '2*b'), (1, 'c')]."""
    out, sign, buf = [], 1, ""
    for ch in text.replace(" ", ""):
        if ch in "+-" and buf:
            out.append((sign, buf))
            buf = ""
            sign = 1 if ch == "+" else -1
        elif ch in "+-":
            sign *= 1 if ch == "+" else -1
        else:
            buf += ch
    if buf:
        out.append((sign, buf))
    return out


def _coeff_and_body(term: str) -> tuple[int, str]:
    head, sep, rest = term.partition("*")
    if sep and head.isdigit():
        return int(head), rest
    if term.isdigit():
        return int(term), "1"
    return 1, term


def parse_element(algebra: AlgebraPresentation, text: str) -> AlgElement:
    """'x2*x4 + x3^2' or '2*x8 - x2^4' as an element; '0' is zero."""
    total = algebra.zero()
    if text.strip() == "0":
        return total
    for sign, term in _split_signed(text):
        c, body = _coeff_and_body(term)
        total = total + algebra.element({algebra.parse_monomial(body): sign * c})
    return total


def parse_tensor(algebra: AlgebraPresentation, text: str) -> TensorElement:
    """'x8|x1 + x2|x7 - x2^3|x3' with '|' separating tensor slots."""
    out: TensorElement | None = None
    for sign, term in _split_signed(text):
        c, body = _coeff_and_body(term)
        t = TensorElement.pure(algebra, *body.split("|"), coeff=sign * c)
        out = t if out is None else out + t
    if out is None:
        raise ValueError("empty tensor expression")
    return out


# --- the PO(4n) general term ----------------------------------------------


def general_term_formula_check(rule: CoproductRule, i: int, v: str = "v") -> bool:
    """gamma^*(u_i) == i (u_{i-1} (x) v + v (x) u_{i-1}) modulo the standard mask.

    A u_{i-1} absent from the presentation is read as zero; this only
    happens for even i, where the predicted term vanishes anyway.
    """
    A = rule.algebra
    name = f"u{i}"
    if name not in A.index:
        raise KeyError(f"{name} is not a generator of this presentation")
    got = commutator_pullback(rule, name)
    prev = f"u{i - 1}"
    expected = TensorElement(A, 2)
    if prev in A.index:
        expected = TensorElement.pure(A, prev, v, coeff=i) + TensorElement.pure(A, v, prev, coeff=i)
    return got == expected
