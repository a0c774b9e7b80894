"""Command-line front end: minimize, decompose-bool, decompose-perm, cert.

Exit codes: 0 on success (an undecided verdict is still success), 1 on
an internal invariant failure, 2 on bad input.  All JSON on stdout is
deterministic for a fixed input and configuration; human-oriented
summaries go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .boolfn import decompose_boolean, monomial_names, parse_anf, sn_action
from .decompose import complete_decomposition
from .endo import SearchConfig, compute_end, find_splitting_element, verify_certificate
from .fields import QQ, FieldSpec
from .modules import action_graph, graph_from_parts, orbit_basis
from .perms import permutation_module
from .serialize import (
    automaton_from_json,
    automaton_to_json,
    certificate_to_json,
    field_from_str,
    field_to_str,
    graph_to_dot,
    presentation_from_json,
    report_to_json,
    to_text,
)
from .wfa import minimize


@dataclass(frozen=True)
class RunConfig:
    """Validated run settings shared by the module-level subcommands."""

    field: Optional[FieldSpec]
    search: SearchConfig
    output: Optional[str]
    dot_dir: Optional[str]
    cert_only: bool

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        if args.exhaustive_cap < 1:
            raise ValueError("--exhaustive-cap must be at least 1")
        if args.box_height < 0:
            raise ValueError("--box-height must not be negative")
        if args.random_trials < 0:
            raise ValueError("--random-trials must not be negative")
        field = field_from_str(args.field, "--field") if args.field is not None else None
        search = SearchConfig(
            exhaustive_cap=args.exhaustive_cap,
            box_height=args.box_height,
            random_trials=args.random_trials,
            seed=args.seed,
        )
        return cls(
            field=field,
            search=search,
            output=getattr(args, "output", None),
            dot_dir=getattr(args, "dot", None),
            cert_only=getattr(args, "cert_only", False),
        )


def _add_budget_flags(sub):
    sub.add_argument("--field", default=None, help='scalar field: "0" or "p:<prime>"')
    sub.add_argument("--exhaustive-cap", type=int, default=SearchConfig.exhaustive_cap)
    sub.add_argument("--box-height", type=int, default=SearchConfig.box_height)
    sub.add_argument("--random-trials", type=int, default=SearchConfig.random_trials)
    sub.add_argument("--seed", type=int, default=SearchConfig.seed)


def _read_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as err:
        raise ValueError(f"cannot read {path}: {err}") from None
    except json.JSONDecodeError as err:
        raise ValueError(f"{path} is not valid JSON: {err}") from None


def _emit(text: str, output: Optional[str]):
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)


def _write_dot_files(directory: str, report, names, gf2: bool):
    import os

    os.makedirs(directory, exist_ok=True)
    graph = action_graph(report.module, names)
    with open(os.path.join(directory, "module.dot"), "w", encoding="utf-8") as handle:
        handle.write(graph_to_dot(graph, "module", gf2=gf2))
    labels = report.module.action.labels
    for k, block in enumerate(report.summands):
        graph = graph_from_parts(labels, block.ambient_basis, block.restricted, names)
        path = os.path.join(directory, f"summand_{k:02d}.dot")
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(graph_to_dot(graph, f"summand_{k:02d}", gf2=gf2))


def _summary_lines(report) -> str:
    sig = ",".join(str(d) for d in report.signature)
    return f"signature: {sig}\nundecided_leaves: {report.undecided_count}\n"


def _parse_generator_vector(text: str, field: FieldSpec, degree: int):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != degree:
        raise ValueError(f"generator vector has {len(parts)} entries, expected {degree}")
    return tuple(field.parse(p) for p in parts)


def cmd_minimize(args) -> int:
    a = automaton_from_json(_read_json(args.input))
    m = minimize(a)
    _emit(to_text(automaton_to_json(m)), args.output)
    print(f"minimized: dim {a.dim} -> {m.dim}", file=sys.stderr)
    return 0


def cmd_decompose_bool(args) -> int:
    config = RunConfig.from_args(args)
    if config.field is not None and config.field.characteristic != 2:
        raise ValueError("the boolean front end works over p:2 only")
    f = parse_anf(args.expr, args.n)
    report = decompose_boolean(f, config.search)
    names = monomial_names(args.n)
    if config.dot_dir is not None:
        _write_dot_files(config.dot_dir, report, names, gf2=True)
    if config.cert_only:
        _emit(_summary_lines(report), config.output)
    else:
        _emit(to_text(report_to_json(report, names)), config.output)
    print(
        f"decomposed dim {report.module.dim} module into {len(report.summands)} summands",
        file=sys.stderr,
    )
    return 0


def cmd_decompose_perm(args) -> int:
    config = RunConfig.from_args(args)
    if config.field is not None and config.field.characteristic != 0:
        raise ValueError('the permutation front end works over the rationals ("0") only')
    presentation = presentation_from_json(_read_json(args.input))
    g = _parse_generator_vector(args.generator, QQ, presentation.degree)
    module = permutation_module(presentation, g)
    report = complete_decomposition(module, config.search)
    if config.dot_dir is not None:
        _write_dot_files(config.dot_dir, report, None, gf2=False)
    if config.cert_only:
        _emit(_summary_lines(report), config.output)
    else:
        _emit(to_text(report_to_json(report)), config.output)
    print(
        f"decomposed dim {report.module.dim} module into {len(report.summands)} summands",
        file=sys.stderr,
    )
    return 0


def cmd_cert(args) -> int:
    config = RunConfig.from_args(args)
    if args.bool_expr is not None and args.perm is not None:
        raise ValueError("choose one module source: --bool or --perm")
    if args.bool_expr is not None:
        if args.n is None:
            raise ValueError("--bool needs -n (number of variables)")
        if config.field is not None and config.field.characteristic != 2:
            raise ValueError("the boolean front end works over p:2 only")
        f = parse_anf(args.bool_expr, args.n)
        module = orbit_basis(sn_action(args.n), f.vector())
    elif args.perm is not None:
        if args.generator is None:
            raise ValueError("--perm needs --generator")
        if config.field is not None and config.field.characteristic != 0:
            raise ValueError('the permutation front end works over the rationals ("0") only')
        presentation = presentation_from_json(_read_json(args.perm))
        g = _parse_generator_vector(args.generator, QQ, presentation.degree)
        module = permutation_module(presentation, g)
    else:
        raise ValueError("choose a module source: --bool EXPR -n N or --perm FILE --generator V")
    if module.dim == 0:
        raise ValueError("the generator is zero: nothing to certify")
    e = compute_end(module)
    cert = find_splitting_element(e, config.search)
    verify_certificate(e, cert)
    _emit(to_text(certificate_to_json(cert)), config.output)
    print(f"verdict: {cert.verdict} (mode {cert.mode})", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclomod",
        description="exact cyclic-module decomposition and automaton minimization",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_min = subs.add_parser("minimize", help="minimize a weighted automaton JSON file")
    p_min.add_argument("input", help="automaton JSON path")
    p_min.add_argument("-o", "--output", default=None, help="write JSON here instead of stdout")
    p_min.set_defaults(func=cmd_minimize)

    p_bool = subs.add_parser("decompose-bool", help="decompose a boolean function module")
    p_bool.add_argument("expr", help="ANF expression, e.g. 'x1*x2 + x3'")
    p_bool.add_argument("-n", type=int, required=True, help="number of variables")
    p_bool.add_argument("-o", "--output", default=None)
    p_bool.add_argument("--dot", default=None, help="directory for DOT files")
    p_bool.add_argument("--cert-only", action="store_true", help="print only signature lines")
    _add_budget_flags(p_bool)
    p_bool.set_defaults(func=cmd_decompose_bool)

    p_perm = subs.add_parser("decompose-perm", help="decompose a permutation module over Q")
    p_perm.add_argument("input", help="presentation JSON path")
    p_perm.add_argument("--generator", required=True, help="comma-separated rational vector")
    p_perm.add_argument("-o", "--output", default=None)
    p_perm.add_argument("--dot", default=None, help="directory for DOT files")
    p_perm.add_argument("--cert-only", action="store_true", help="print only signature lines")
    _add_budget_flags(p_perm)
    p_perm.set_defaults(func=cmd_decompose_perm)

    p_cert = subs.add_parser("cert", help="one splitting-element certificate, no recursion")
    p_cert.add_argument("--bool", dest="bool_expr", default=None, help="ANF expression")
    p_cert.add_argument("-n", type=int, default=None, help="number of variables (with --bool)")
    p_cert.add_argument("--perm", default=None, help="presentation JSON path")
    p_cert.add_argument("--generator", default=None, help="generator vector (with --perm)")
    p_cert.add_argument("-o", "--output", default=None)
    _add_budget_flags(p_cert)
    p_cert.set_defaults(func=cmd_cert)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return int(err.code or 0)
    try:
        return args.func(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except RuntimeError as err:
        print(f"internal error: {err}", file=sys.stderr)
        return 1
    except Exception as err:  # anything unexpected is an internal failure
        print(f"internal error: {type(err).__name__}: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
