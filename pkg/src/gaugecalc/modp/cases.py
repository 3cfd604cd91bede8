"""Embedded case data and the verification reports built from it."""

from __future__ import annotations

import json
import time
from functools import lru_cache
from importlib import resources

from ..lie_catalog import spin_u_class_suspends
from .algebra import AlgebraPresentation, Generator, TensorElement, binom_mod
from .hopf import (
    CoproductRule,
    PipelineTrace,
    commutator_pullback,
    general_term_formula_check,
    parse_element,
    parse_tensor,
)
from .steenrod import (
    CriterionData,
    Report,
    SteenrodRule,
    bso,
    bso_rule,
    check_steenrod_criterion,
    contains_term,
    sq,
    sq_w_case,
    verify_sq_w_case,
    wu_sq,
)


@lru_cache(maxsize=None)
def load_case(name: str) -> dict:
    text = resources.files("gaugecalc.modp.data").joinpath(f"{name}.json").read_text(encoding="utf-8")
    return json.loads(text)


def algebra_from(data: dict) -> AlgebraPresentation:
    gens = tuple(Generator(g["name"], g["degree"], g.get("height")) for g in data["generators"])
    return AlgebraPresentation(data["p"], gens, data.get("cap"))


def steenrod_from(data: dict, A: AlgebraPresentation) -> SteenrodRule:
    table = {
        (name, int(i)): parse_element(A, text)
        for name, rules in data.get("steenrod", {}).items()
        for i, text in rules.items()
    }
    return SteenrodRule(A, table)


# --- criterion cases --------------------------------------------------------


def psp_criterion(n: int) -> CriterionData:
    """BPSp(2n) in degrees <= 7; the window does not depend on n."""
    if n < 1:
        raise ValueError("need n >= 1")
    data = load_case("psp2n")
    A = algebra_from(data)
    c = data["criterion"]
    return CriterionData(
        f"PSp({2 * n})",
        steenrod_from(data, A),
        c["x"],
        c["y"],
        c["z"],
        c["theta"],
        data["condition3"]["value"],
        data["condition3"]["source"],
        data["expected"],
    )


def e7_criterion() -> CriterionData:
    data = load_case("ad_e7")
    A = algebra_from(data)
    c = data["criterion"]
    return CriterionData(
        "Ad(E7)",
        steenrod_from(data, A),
        c["x"],
        c["y"],
        c["z"],
        c["theta"],
        data["condition3"]["value"],
        data["condition3"]["source"],
        data["expected"],
    )


def so_criterion(n: int) -> CriterionData:
    """BSO(n) with (x, y, z, theta) chosen by the congruence class of n.

    Condition (3) needs z to suspend nontrivially from BSpin(n) and not to be
    hit by theta from lower degree; both facts are read off the catalog and
    the congruence lemma.
    """
    label, t, (flagged, _other), (_a, b) = sq_w_case(n)
    lemma = verify_sq_w_case(n)
    decomposable = all(c.passed for c in lemma.checks if "decomposable" in c.description)
    suspends = spin_u_class_suspends(n, b)
    return CriterionData(
        f"SO({n}) [{label}]",
        bso_rule(n),
        f"w{flagged}",
        "w2",
        f"w{b}",
        t,
        suspends and decomposable,
        f"u_{b} suspends nontrivially: {suspends}; Sq^{t} images decomposable: {decomposable}",
    )


def verify_sq_e7() -> Report:
    """Sq^2 x6 contains x2 x6 whatever the correction a x2^3 + b x3^2 in the pullback of w6."""
    A = bso(12)
    rule = bso_rule(12)
    rep = Report("Sq^2 x6 in BAd(E7) via BSO(12)")
    w2w6 = next(iter((A.gen("w2") * A.gen("w6")).terms))
    for a in (0, 1):
        for b in (0, 1):
            e = A.gen("w6") + A.gen("w2") ** 3 * a + A.gen("w3") ** 2 * b
            val = sq(rule, 2, e)
            rep.add(f"a={a}, b={b}: Sq^2 contains w2*w6", contains_term(val, w2w6) == 1, str(val))
    rep.add("Sq^2 w6 = w2*w6", wu_sq(2, 6, 12) == A.gen("w2") * A.gen("w6"), str(wu_sq(2, 6, 12)))
    return rep


def criterion_report(case: str, n: int | None = None) -> Report:
    if case == "psp":
        return check_steenrod_criterion(psp_criterion(n or 2))
    if case in ("so-odd", "so-even"):
        default = 9 if case == "so-odd" else 12
        n = n or default
        if (n % 2 == 1) != (case == "so-odd"):
            raise ValueError(f"{case} needs {'odd' if case == 'so-odd' else 'even'} n, got {n}")
        return check_steenrod_criterion(so_criterion(n))
    if case == "e7":
        rep = check_steenrod_criterion(e7_criterion())
        support = verify_sq_e7()
        rep.add("Sq^2 x6 supported by BSO(12)", support.passed, "; ".join(c.detail for c in support.checks[-1:]))
        return rep
    raise ValueError(f"unknown criterion case {case!r}")


# --- Hopf cases -------------------------------------------------------------


def po4n_r(n: int) -> int:
    """r with 4n = 2^r (2m + 1)."""
    if n < 1:
        raise ValueError("need n >= 1")
    r, q = 0, 4 * n
    while q % 2 == 0:
        q //= 2
        r += 1
    return r


def po4n(n: int, cap: int | None = None) -> CoproductRule:
    """H*(PO(4n); F_2) up to ``cap``: v of height 2^r and exterior u_i, i != 2^r - 1.

    The u_i are modelled as exterior classes.  Squares of u's never arise in
    gamma^* of a generator, since every term of the iterated coproduct of u_i
    carries exactly one u-factor.
    """
    data = load_case("po4n")
    cap = cap if cap is not None else data["cap"]
    r = po4n_r(n)
    gens = [Generator("v", 1, 2**r)]
    gens += [Generator(f"u{i}", i, 2) for i in range(1, min(4 * n - 1, cap) + 1) if i != 2**r - 1]
    A = AlgebraPresentation(2, tuple(gens), cap)
    v_mono = A.gen_monomial("v")
    reduced = {}
    for g in gens[1:]:
        i = g.degree
        terms = {}
        for j in range(1, i):
            if binom_mod(i, j, 2) and i - j < 2**r:
                name = f"u{j}"
                if name not in A.index:
                    raise ValueError(f"coproduct of u{i} needs the omitted class {name}")
                terms[(A.gen_monomial(name), tuple(e * (i - j) for e in v_mono))] = 1
        if terms:
            reduced[g.name] = TensorElement(A, 2, terms)
    return CoproductRule(A, reduced)


def ad_e6(cap: int | None = None) -> CoproductRule:
    data = load_case("ad_e6")
    A = algebra_from(data)
    if cap is not None:
        A = A.with_cap(cap)
    reduced = {name: parse_tensor(A, text) for name, text in data["coproducts"].items()}
    return CoproductRule(A, reduced)


def commutator_report(case: str, n: int | None = None, trace: PipelineTrace | None = None) -> Report:
    if case == "po4n":
        n = n or 3
        rule = po4n(n)
        x = "u7" if n % 2 else "u11"
        detect = ("v", "u6") if n % 2 else ("v", "u10")
        rep = Report(f"commutator PO({4 * n}), r={po4n_r(n)}")
        start = time.perf_counter()
        got = commutator_pullback(rule, x, trace=trace)
        rep.add(f"gamma*({x}) contains {detect[0]}|{detect[1]}", contains_term(got, *detect) == 1, str(got))
        for i in range(2, min(12, rule.algebra.cap) + 1):
            if f"u{i}" in rule.algebra.index:
                rep.add(f"general term formula, i={i}", general_term_formula_check(rule, i))
        rep.notes.append(f"pipeline time {time.perf_counter() - start:.3f}s at cap {rule.algebra.cap}")
        return rep
    if case == "e6":
        data = load_case("ad_e6")
        rule = ad_e6()
        x = data["commutator"]["x"]
        detect = tuple(data["commutator"]["detecting"])
        rep = Report("commutator Ad(E6), p=3")
        for name in rule.generators_within_cap():
            rep.add(f"coassociative on {name}", not rule.coassociativity_defect(name))
        got = commutator_pullback(rule, x, trace=trace)
        coeff = contains_term(got, *detect)
        rep.add(f"gamma*({x}) has nonzero {detect[0]}|{detect[1]} coefficient", coeff != 0, f"{got}  (coefficient {coeff})")
        return rep
    raise ValueError(f"unknown commutator case {case!r}")


def all_reports() -> list[Report]:
    reps = [verify_sq_w_case(n) for n in range(7, 25)]
    reps += [criterion_report("psp", n) for n in (2, 3)]
    reps += [criterion_report("so-odd", n) for n in (9, 13)]
    reps += [criterion_report("so-even", n) for n in (8, 12)]
    reps.append(criterion_report("e7"))
    reps += [commutator_report("po4n", n) for n in (3, 4)]
    reps.append(commutator_report("e6"))
    return reps

