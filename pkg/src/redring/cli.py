"""Command-line front end: gb, member and check over problem files.

A problem file is line-oriented UTF-8 with ``#`` comments::

    ring zmod 24
    vars x,y
    order degrevlex
    gens:
    4*x^2 + y
    6*x*y
    probes:
    2*y

``ring`` selects q, z or ``zmod N``; ``vars`` (optional) lifts the scalar
ring to polynomials; ``order`` picks lex, deglex or degrevlex (default
degrevlex).  Exit codes: 0 ok, 1 negative verdict, 2 parse error, 3 step cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .buchberger import gb, is_groebner_basis, member_ideal, verify_cofactors
from .core import Domain, NonTerminationError, check_axioms, normal_form
from .poly import PolyRing, make_poly_domain
from .scalars import (
    IntegerDomain,
    RationalFieldDomain,
    make_field_domain,
    make_integer_domain,
    make_integer_quotient_domain,
    normalize_sign,
)


class ProblemParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass
class ProblemFile:
    """A parsed problem: ring selector, optional variables, generators, probes."""

    ring_spec: str = "q"
    var_names: Optional[tuple] = None
    order_kind: str = "degrevlex"
    generator_texts: list = field(default_factory=list)
    probe_texts: list = field(default_factory=list)

    def build_domain(self) -> Domain:
        dom = _scalar_domain(self.ring_spec)
        if self.var_names:
            dom = make_poly_domain(dom, self.var_names, self.order_kind)
        return dom


def _scalar_domain(spec: str) -> Domain:
    spec = spec.strip().lower().replace(":", " ")
    if spec == "q":
        return make_field_domain()
    if spec == "z":
        return make_integer_domain()
    parts = spec.split()
    if len(parts) == 2 and parts[0] == "zmod":
        try:
            n = int(parts[1])
        except ValueError:
            raise ValueError(f"bad modulus {parts[1]!r}") from None
        return make_integer_quotient_domain(n)
    raise ValueError(f"unknown ring selector {spec!r}; use q, z or zmod N")


def parse_problem_text(text: str) -> ProblemFile:
    pf = ProblemFile()
    section = "header"
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        lowered = line.lower()
        if lowered == "gens:":
            section = "gens"
            continue
        if lowered == "probes:":
            section = "probes"
            continue
        if section == "header":
            parts = line.split(None, 1)
            keyword = parts[0].lower()
            value = parts[1].strip() if len(parts) > 1 else ""
            if keyword == "ring":
                if not value:
                    raise ProblemParseError("ring selector missing", lineno)
                pf.ring_spec = value
            elif keyword == "vars":
                names = tuple(v.strip() for v in value.split(",") if v.strip())
                if not names:
                    raise ProblemParseError("empty variable list", lineno)
                pf.var_names = names
            elif keyword == "order":
                pf.order_kind = value.lower()
            else:
                raise ProblemParseError(
                    f"unknown keyword {parts[0]!r} (expected ring/vars/order/gens:)",
                    lineno,
                )
        elif section == "gens":
            pf.generator_texts.append((lineno, line))
        else:
            pf.probe_texts.append((lineno, line))
    return pf


def _resolve(pf: ProblemFile, args) -> tuple:
    if getattr(args, "ring", None):
        pf.ring_spec = args.ring
    if getattr(args, "vars", None):
        pf.var_names = tuple(v.strip() for v in args.vars.split(",") if v.strip())
    if getattr(args, "order", None):
        pf.order_kind = args.order
    try:
        dom = pf.build_domain()
    except ValueError as exc:
        raise ProblemParseError(str(exc), 1) from exc
    gens = []
    for lineno, text in pf.generator_texts:
        try:
            gens.append(dom.parse(text))
        except ValueError as exc:
            raise ProblemParseError(str(exc), lineno) from exc
    probes = []
    for lineno, text in pf.probe_texts:
        try:
            probes.append(dom.parse(text))
        except ValueError as exc:
            raise ProblemParseError(str(exc), lineno) from exc
    return dom, gens, probes


def _monic_view(dom: Domain, element):
    if isinstance(dom, RationalFieldDomain):
        return dom.one if element != 0 else element
    if isinstance(dom, IntegerDomain):
        return normalize_sign(element)
    if isinstance(dom, PolyRing) and isinstance(dom.coeff, RationalFieldDomain):
        return dom.monic(element)
    return element


def _chain_flag(args) -> Optional[bool]:
    if args.chain_criterion == "on":
        return True
    if args.chain_criterion == "off":
        return False
    return None


def _cmd_gb(args) -> int:
    pf = parse_problem_text(_read(args.problem))
    dom, gens, _probes = _resolve(pf, args)
    started = time.perf_counter()
    result = gb(
        dom,
        gens,
        chain_criterion=_chain_flag(args),
        max_steps=args.max_steps,
        max_pairs=args.max_steps,
    )
    elapsed = time.perf_counter() - started
    shown = [
        _monic_view(dom, g) if args.monic else g for g in result.basis
    ]
    if args.certify and not verify_cofactors(dom, result.rows, gens):
        print("cofactors: FAILED", file=sys.stderr)
        return 1
    if args.check and not is_groebner_basis(dom, result.basis, max_steps=args.max_steps):
        print("check: FAILED", file=sys.stderr)
        return 1
    if args.json:
        doc = {
            "basis": [dom.render(g) for g in shown],
            "cofactors": [
                {
                    "element": dom.render(row.element),
                    "cofactors": {str(k): dom.render(v) for k, v in row.cofactors.items()},
                }
                for row in result.rows
            ],
            "trace_digest": result.trace.digest(),
            "pairs_processed": result.trace.pairs_processed,
            "critical_pairs_reduced": result.trace.critical_pairs_reduced,
            "chain_skips": result.trace.chain_skips,
            "elapsed_seconds": round(elapsed, 6),
        }
        print(json.dumps(doc, sort_keys=True))
        return 0
    if args.trace:
        sys.stdout.write(result.trace.to_text())
    if args.certify:
        for row in result.rows:
            parts = " + ".join(
                f"({dom.render(v)})*g{k}" for k, v in row.cofactors.items()
            )
            print(f"cofactor {dom.render(row.element)} = {parts}")
        print("cofactors: VERIFIED")
    if args.check:
        print("check: GROEBNER")
    for g in shown:
        print(dom.render(g))
    return 0


def _cmd_member(args) -> int:
    pf = parse_problem_text(_read(args.problem))
    dom, gens, probes = _resolve(pf, args)
    if args.probe is not None:
        try:
            probes = [dom.parse(args.probe)]
        except ValueError as exc:
            raise ProblemParseError(str(exc), 1) from exc
    if not probes:
        raise ProblemParseError("no probe given (use --probe or a probes: section)", 1)
    basis = gb(
        dom,
        gens,
        chain_criterion=_chain_flag(args),
        max_steps=args.max_steps,
        max_pairs=args.max_steps,
    ).basis
    all_member = True
    verdicts = []
    for probe in probes:
        h, _ = normal_form(dom, probe, basis, args.max_steps)
        member = dom.is_zero(h)
        all_member = all_member and member
        verdicts.append((probe, member, h))
    if args.json:
        print(
            json.dumps(
                {
                    "verdicts": [
                        {
                            "probe": dom.render(p),
                            "member": m,
                            "normal_form": dom.render(h),
                        }
                        for p, m, h in verdicts
                    ]
                },
                sort_keys=True,
            )
        )
    else:
        for _probe, member, h in verdicts:
            print(("MEMBER " if member else "NOT-MEMBER ") + dom.render(h))
    return 0 if all_member else 1


def _cmd_check(args) -> int:
    pf = parse_problem_text(_read(args.problem))
    dom, gens, _probes = _resolve(pf, args)
    if args.is_gb:
        verdict = is_groebner_basis(dom, gens, max_steps=args.max_steps)
        if args.json:
            print(json.dumps({"is_groebner_basis": verdict}))
        else:
            print("YES" if verdict else "NO")
        return 0 if verdict else 1
    report = check_axioms(dom, sample_budget=args.samples)
    if args.json:
        print(json.dumps(report.to_dict(), sort_keys=True))
    else:
        print(report.to_text())
    return 0 if report.ok else 1


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("problem", help="problem file path")
    sub.add_argument("--ring", help="override the ring selector (q, z, zmod:N)")
    sub.add_argument("--vars", help="override the variable list, comma separated")
    sub.add_argument(
        "--order", choices=("lex", "deglex", "degrevlex"), help="override the term order"
    )
    sub.add_argument(
        "--chain-criterion",
        choices=("on", "off"),
        default=None,
        help="force the chain criterion (default: on for polynomial rings)",
    )
    sub.add_argument(
        "--max-steps", type=int, default=10**6, help="reduction/pair step cap"
    )
    sub.add_argument("--json", action="store_true", help="structured output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="redring",
        description="Groebner bases in reduction rings: fields, Z, Z/nZ and polynomials over them.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    gb_cmd = commands.add_parser("gb", help="complete the generators into a Groebner basis")
    _common_flags(gb_cmd)
    gb_cmd.add_argument("--certify", action="store_true", help="print and verify cofactor rows")
    gb_cmd.add_argument("--trace", action="store_true", help="print the completion trace")
    gb_cmd.add_argument("--monic", action="store_true", help="canonical scaling for display")
    gb_cmd.add_argument(
        "--check", action="store_true", help="re-verify the output with the finite criterion"
    )
    gb_cmd.set_defaults(handler=_cmd_gb)

    member_cmd = commands.add_parser("member", help="decide ideal membership of probes")
    _common_flags(member_cmd)
    member_cmd.add_argument("--probe", help="probe element (overrides the probes: section)")
    member_cmd.set_defaults(handler=_cmd_member)

    check_cmd = commands.add_parser("check", help="axiom report or Groebner-basis verdict")
    _common_flags(check_cmd)
    check_cmd.add_argument(
        "--axioms", action="store_true", help="run the reduction-ring axiom checks"
    )
    check_cmd.add_argument(
        "--is-gb", action="store_true", help="test the generators with the finite criterion"
    )
    check_cmd.add_argument(
        "--samples", type=int, default=2000, help="sample budget for axiom checks"
    )
    check_cmd.set_defaults(handler=_cmd_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ProblemParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except NonTerminationError as exc:
        print(f"step cap exceeded: {exc}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
