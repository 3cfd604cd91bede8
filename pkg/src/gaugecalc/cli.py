"""Command-line front end: ``gaugecalc <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Sequence

from . import classify as cl
from .abelian import AbGroupDescriptor
from .grammar import parse
from .homotopy import (
    GaugeQuery,
    OutOfRange,
    Rejected,
    _su_rank,
    gauge_components,
    gauge_pi,
    gcd_only_form,
    moduli_pi,
    sphere_gauge_pi,
)
from .lie_catalog import HomotopyTable, default_table, quotient_name
from .presentation import (
    canonicalize,
    factor_orders,
    render,
    s_invariant,
    unitary,
    validate,
)

OK, UNKNOWN, OUT_OF_RANGE, REJECTED, INVALID, FAILED = (
    "OK",
    "UNKNOWN",
    "OUT_OF_RANGE",
    "REJECTED",
    "INVALID",
    "FAILED",
)
EXIT = {OK: 0, UNKNOWN: 0, INVALID: 2, REJECTED: 2, OUT_OF_RANGE: 2, FAILED: 3}

S_DEFINITION = "definition:s-invariant"
BOTT = "bott:samelson-order"


@dataclass
class ResultEnvelope:
    command: list[str]
    status: str = OK
    result: dict[str, Any] = field(default_factory=dict)
    citations: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT[self.status]

    def to_json(self) -> str:
        return json.dumps(asdict(self), ensure_ascii=False, indent=2)

    def to_text(self) -> str:
        lines = [f"status: {self.status}"]
        for k, v in self.result.items():
            if isinstance(v, list) and v and isinstance(v[0], dict):
                lines.append(f"{k}:")
                lines += [f"  {json.dumps(item, ensure_ascii=False)}" for item in v]
            elif isinstance(v, list) and v and isinstance(v[0], str):
                lines.append(f"{k}:")
                lines += [f"  {item}" for item in v]
            elif isinstance(v, dict) and "rendered" in v:
                lines.append(f"{k}: {v['rendered']}")
            else:
                lines.append(f"{k}: {v}")
        if self.citations:
            lines.append("citations: " + ", ".join(self.citations))
        lines += [f"warning: {w}" for w in self.warnings]
        return "\n".join(lines)


def _group(d: AbGroupDescriptor) -> dict[str, Any]:
    return {"rendered": d.render(), **d.to_json()}


def _status_of(d: AbGroupDescriptor) -> str:
    return UNKNOWN if d.is_unknown else OK


def _pi_2n2_warning(p, k: int, table: HomotopyTable) -> str:
    sphere = sphere_gauge_pi(p, k, 2 * _su_rank(p) - 2, table)
    return (
        f"pi_{{2n-2}} of the sphere factor: n!(k,s_i)/s_i form gives {sphere.render()}; "
        f"the (k, s_i)-only form gives {gcd_only_form(p, k).render()}"
    )


# --- commands ---------------------------------------------------------------


def cmd_s(args, env: ResultEnvelope, table) -> None:
    p = parse(args.spec)
    validate(p)
    s = s_invariant(p)
    canon = canonicalize(p)
    names = [quotient_name(t, p.factor_image(i)) for i, t in enumerate(p.factors)]
    env.result.update(
        spec=render(p),
        s=s,
        factor_orders=factor_orders(p),
        samelson_order=cl.samelson_order(p),
        p2_invariant_factors=list(p.p2_invariant_factors()),
        factor_quotients=names,
        canonical=render(canon),
    )
    env.citations += [S_DEFINITION, cl.SAMELSON]


def cmd_classify(args, env: ResultEnvelope, table) -> None:
    p = parse(args.spec)
    v = cl.equivalent(p, args.k, args.l)
    s = s_invariant(p)
    env.result.update(
        spec=render(p),
        k=args.k,
        l=args.l,
        s=s,
        gcd_k=cl.gcd_class(args.k, s),
        gcd_l=cl.gcd_class(args.l, s),
        verdict=v.verdict.value,
    )
    if v.note:
        env.result["note"] = v.note
    env.citations.append(v.justification)


def cmd_classes(args, env: ResultEnvelope, table) -> None:
    p = parse(args.spec)
    c = cl.class_count(p)
    env.result.update(
        spec=render(p), s=s_invariant(p), count=c.count, representatives=list(c.representatives), label=c.label
    )
    env.citations.append(cl.MAIN_2 if c.label == "exact" else cl.MAIN_1)


def cmd_pi(args, env: ResultEnvelope, table) -> None:
    p = parse(args.spec)
    validate(p)
    trace: list[str] = []
    if args.i == 0:
        d = gauge_components(p, args.genus, args.k, args.base)
    else:
        d = gauge_pi(GaugeQuery(p, args.genus, args.k, args.i, args.base), table, trace)
    env.result.update(spec=render(p), genus=args.genus, k=args.k, i=args.i, base=args.base, group=_group(d))
    if d.is_unknown:
        env.status = UNKNOWN
        env.result["reason"] = d.unknown
    env.citations.append(cl.SURFACE_SPLITTING)
    if args.i > 0:
        env.citations.append(cl.DECOMPOSITION if args.k % s_invariant(p) == 0 else BOTT)
    n = _su_rank(p)
    if n is not None and args.i == 2 * n - 2:
        env.warnings.append(_pi_2n2_warning(p, args.k, table))
    if args.verbose:
        env.result["trace"] = trace


def cmd_moduli(args, env: ResultEnvelope, table) -> None:
    trace: list[str] = []
    d = moduli_pi(args.n, args.k, args.g, args.i, table, trace)
    env.result.update(n=args.n, k=args.k, g=args.g, i=args.i, group=_group(d))
    env.status = _status_of(d)
    if d.is_unknown:
        env.result["reason"] = d.unknown
    env.citations += [cl.MODULI, cl.SURFACE_SPLITTING]
    if args.i - 1 == 2 * args.n - 2:
        env.warnings.append(_pi_2n2_warning(unitary(args.n), args.k, table))
    if args.verbose:
        env.result["trace"] = trace


def cmd_verify(args, env: ResultEnvelope, table) -> None:
    from .modp import cases
    from .modp.hopf import PipelineTrace
    from .modp.steenrod import Report, verify_sq_w_case, wu_sq

    case = args.case
    if case == "wu":
        val = wu_sq(args.i, args.j, args.n)
        rep = Report(f"Sq^{args.i} w{args.j} in BSO({args.n})")
        rep.add("Wu formula evaluated", True, str(val))
        reports = [rep]
        env.result["value"] = str(val)
    elif case == "sq-lemma":
        reports = [verify_sq_w_case(args.n)]
    elif case == "criterion":
        reports = [cases.criterion_report(args.which, args.n)]
    elif case == "commutator":
        trace = PipelineTrace() if args.verbose else None
        reports = [cases.commutator_report(args.which, args.n, trace)]
        if trace is not None:
            env.result["pipeline"] = trace.lines()
    else:
        reports = cases.all_reports()
    env.result["reports"] = [r.to_json() for r in reports]
    env.result["passed"] = all(r.passed for r in reports)
    env.citations.append("verification:embedded-cases")
    if not env.result["passed"]:
        env.status = FAILED


COMMANDS: dict[str, Callable] = {
    "s": cmd_s,
    "classify": cmd_classify,
    "classes": cmd_classes,
    "pi": cmd_pi,
    "moduli": cmd_moduli,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps a flag given before the subcommand from being reset by the subparser
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("json", "text"))
    common.add_argument("--tables", metavar="FILE", help="CSV of extra homotopy group entries")
    common.add_argument("--verbose", action="store_true", help="include derivation traces")

    ap = argparse.ArgumentParser(
        prog="gaugecalc",
        description="Homotopy of gauge groups for G = (S1 x H)/C with pi_1(G) = Z.",
        parents=[common],
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("s", parents=[common], help="s(G) and factor orders")
    p.add_argument("spec")
    p = sub.add_parser("classify", parents=[common], help="compare G_k and G_l")
    p.add_argument("spec")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p = sub.add_parser("classes", parents=[common], help="number of homotopy types of G_k")
    p.add_argument("spec")
    p = sub.add_parser("pi", parents=[common], help="pi_i of the gauge group")
    p.add_argument("spec")
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--base", choices=("surface", "sphere"), default="surface")
    p = sub.add_parser("moduli", parents=[common], help="pi_i of the moduli space M(n, k)")
    for flag in ("--n", "--k", "--g", "--i"):
        p.add_argument(flag, type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="run embedded verification cases")
    vsub = p.add_subparsers(dest="case", required=True)
    q = vsub.add_parser("wu", parents=[common])
    for flag in ("--i", "--j", "--n"):
        q.add_argument(flag, type=int, required=True)
    q = vsub.add_parser("sq-lemma", parents=[common])
    q.add_argument("--n", type=int, required=True)
    q = vsub.add_parser("criterion", parents=[common])
    q.add_argument("--case", dest="which", choices=("psp", "so-odd", "so-even", "e7"), required=True)
    q.add_argument("--n", type=int)
    q = vsub.add_parser("commutator", parents=[common])
    q.add_argument("--case", dest="which", choices=("po4n", "e6"), required=True)
    q.add_argument("--n", type=int)
    vsub.add_parser("all", parents=[common])
    return ap


def parse_args(argv: Sequence[str]) -> argparse.Namespace:
    args = build_parser().parse_args(argv)
    for name, default in (("format", "text"), ("tables", None), ("verbose", False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    return args


def run(argv: Sequence[str] | None = None) -> ResultEnvelope:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parse_args(argv)
    env = ResultEnvelope(command=argv)
    try:
        table = default_table().extended(args.tables) if args.tables else default_table()
        COMMANDS[args.command](args, env, table)
    except Rejected as exc:
        env.status, env.result["error"] = REJECTED, str(exc)
    except OutOfRange as exc:
        env.status, env.result["error"] = OUT_OF_RANGE, str(exc)
    except (ValueError, KeyError, OSError) as exc:
        env.status, env.result["error"] = INVALID, str(exc).strip("'\"")
    return env


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    env = run(argv)
    print(env.to_json() if parse_args(argv).format == "json" else env.to_text())
    if env.status in (INVALID, REJECTED, OUT_OF_RANGE):
        print(f"gaugecalc: {env.status}: {env.result.get('error', '')}", file=sys.stderr)
    return env.exit_code


if __name__ == "__main__":
    sys.exit(main())
