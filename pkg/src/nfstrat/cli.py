"""``nfstrat`` command-line entry point."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import acyclic, canonical, corpus
from .stratify import stratify as find_stratification
from .stratify import to_json as stratify_json
from .errors import NFStratError
from .formula import FormulaSyntaxError, build_var_graph, parse, render, to_json
from .model_lab import Digraph, automorphisms, demo, invariance_survey
from .model_lab.demos import DEMOS
from .model_lab.invariance import EXIT_CODES, VACUOUS
from .model_lab.structures import DEFAULT_LIMIT

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2

EXPECTATIONS = ("invariant", "violated", "stratified", "unstratified", "acyclic", "cyclic")


def _global_options() -> argparse.ArgumentParser:
    # SUPPRESS lets the options sit before or after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json", "dot"), default=argparse.SUPPRESS)
    p.add_argument("--limit", type=int, default=argparse.SUPPRESS, help="largest universe enumerated exhaustively")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for sampled permutation surveys")
    p.add_argument("--samples", type=int, default=argparse.SUPPRESS, help="permutations drawn when sampling")
    p.add_argument("--expect", choices=EXPECTATIONS, default=argparse.SUPPRESS)
    return p


def _formula_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("formula", nargs="?", help="formula text")
    src.add_argument("--file", type=Path, help="UTF-8 file holding one formula")


def build_parser() -> argparse.ArgumentParser:
    common = _global_options()
    parser = argparse.ArgumentParser(
        prog="nfstrat",
        description="Stratification and acyclicity of set-theory formulas; permutation invariance on finite digraphs.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="parse and print the AST")
    _formula_args(p)
    p = sub.add_parser("stratify", parents=[common], help="type assignment or cycle witness")
    _formula_args(p)
    p = sub.add_parser("canon", parents=[common], help="canonical indexing and rng-sum verdict")
    _formula_args(p)
    p.add_argument("--phf", action="store_true", help="also emit the j^n'f prefixed transform")
    p = sub.add_parser("acyclic", parents=[common], help="acyclic indexing and rng-sum verdict")
    _formula_args(p)
    p.add_argument("--dot", action="store_true", help="also emit the variable graph")

    p = sub.add_parser("compare", parents=[common], help="cross-check both criteria over a formula corpus")
    p.add_argument("--max-atoms", type=int, default=corpus.DEFAULT_MAX_ATOMS)
    p.add_argument("--max-vars", type=int, default=corpus.DEFAULT_MAX_VARS)

    model = sub.add_parser("model", parents=[common], help="finite digraph invariance lab")
    msub = model.add_subparsers(dest="model_command", required=True)
    p = msub.add_parser("check", parents=[common], help="survey one comprehension instance")
    p.add_argument("--model", type=Path, required=True)
    p.add_argument("--formula", required=True)
    p.add_argument("--class-var", default="y")
    p.add_argument("--constraints", type=Path)
    p = msub.add_parser("demo", parents=[common], help="run a curated fixture")
    p.add_argument("name", choices=sorted(DEMOS))
    p = msub.add_parser("automorphisms", parents=[common], help="list automorphisms of a model")
    p.add_argument("--model", type=Path, required=True)
    return parser


def _read_formula(args):
    text = args.formula if args.file is None else args.file.read_text(encoding="utf-8").strip()
    return parse(text)


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


def _expect_code(args, outcome: str) -> int:
    if args.expect is None:
        return EXIT_OK
    return EXIT_OK if args.expect == outcome else EXIT_NEGATIVE


def _indexed_text(f, pi) -> str:
    table = {(o.atom_position, o.side): n for o, n in zip(pi.occurrences, pi.indices)}
    return render(f, lambda pos, side, var: f"{var}^{table[pos, side]}")


def cmd_parse(args) -> int:
    f = _read_formula(args)
    _emit(args, {"formula": render(f), "ast": to_json(f)}, render(f))
    return EXIT_OK


def cmd_stratify(args) -> int:
    f = _read_formula(args)
    payload = stratify_json(find_stratification(f))
    if payload["stratified"]:
        text = "stratified: " + ", ".join(f"{v}:{t}" for v, t in payload["types"].items())
        outcome = "stratified"
    else:
        walk = " ".join(f"{s['from']}-[{s['atom']}:{s['weight']:+d}]->{s['to']}" for s in payload["cycle"])
        text = f"unstratified: cycle {walk} (net weight {payload['net_weight']})"
        outcome = "unstratified"
    _emit(args, payload, text)
    return _expect_code(args, outcome)


def cmd_canon(args) -> int:
    f = _read_formula(args)
    verdict = canonical.canonical_verdict(f)
    payload = canonical.to_json(f, verdict, phf=args.phf)
    s = verdict.summary
    lines = [
        _indexed_text(f, verdict.indexing),
        "rng: " + ", ".join(f"{v}:{r}" for v, r in s.rng.items()),
        f"sum {s.total} {'=' if verdict.stratified else '>'} {s.var_count} vars: "
        + ("stratified" if verdict.stratified else "unstratified"),
    ]
    if args.phf:
        lines.append(canonical.phf_transform(f, verdict.indexing))
    _emit(args, payload, "\n".join(lines))
    return _expect_code(args, "stratified" if verdict.stratified else "unstratified")


def cmd_acyclic(args) -> int:
    f = _read_formula(args)
    verdict = acyclic.acyclic_verdict(f)
    graph = build_var_graph(f)
    outcome = "acyclic" if verdict.acyclic else "cyclic"
    if args.format == "dot":
        print(acyclic.to_dot(graph), end="")
        return _expect_code(args, outcome)
    payload = acyclic.to_json(verdict)
    if args.dot:
        payload["dot"] = acyclic.to_dot(graph)
    s = verdict.summary
    lines = [
        _indexed_text(f, verdict.indexing),
        "rng: " + ", ".join(f"{v}:{r}" for v, r in s.rng.items()),
        f"sum {s.total} {'=' if verdict.acyclic else '>'} {s.var_count} vars: {outcome}",
    ]
    if args.dot:
        lines.append(acyclic.to_dot(graph).rstrip())
    _emit(args, payload, "\n".join(lines))
    return _expect_code(args, outcome)


def cmd_compare(args) -> int:
    report = corpus.compare(args.max_atoms, args.max_vars)
    lines = [
        f"formulas: {report.formulas} (<= {report.max_atoms} atoms, <= {report.max_vars} vars)",
        f"stratified: {report.stratified}  acyclic: {report.acyclic}",
        f"canonical vs oracle disagreements: {len(report.canonical_disagreements)}",
        f"acyclic indexing vs graph disagreements: {len(report.acyclic_disagreements)}",
        f"acyclic but unstratified: {len(report.acyclic_not_stratified)}",
    ]
    for label, cases in (
        ("canonical", report.canonical_disagreements),
        ("acyclic", report.acyclic_disagreements),
        ("acyclic=>stratified", report.acyclic_not_stratified),
    ):
        lines.extend(f"  counterexample [{label}]: {c}" for c in cases)
    _emit(args, report.to_json(), "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def _report_text(d: Digraph, report) -> str:
    lines = [
        f"verdict: {report.verdict}",
        f"levels: {report.levels}",
        f"defined class: {{{', '.join(d.name(x) for x in sorted(report.defined_class))}}}",
        f"permutations tested: {report.permutations_tested}" + (" (sampled)" if report.sampled else ""),
    ]
    for v in report.violations:
        cyc = " ".join("(" + " ".join(d.name(x) for x in c) + ")" for c in v.permutation.cycles()) or "id"
        lines.append(f"  violation: f = {cyc}, y = {d.name(v.witness)}: f(y) in C is {v.expected}, phi^f is {v.got}")
    return "\n".join(lines)


def _model_exit(args, verdict: str) -> int:
    if args.expect is None:
        return EXIT_CODES[verdict]
    if verdict == args.expect:
        return EXIT_OK
    return EXIT_USAGE if verdict == VACUOUS else EXIT_NEGATIVE


def _load_constraints(path: Path | None) -> tuple[dict, dict]:
    if path is None:
        return {}, {}
    obj = json.loads(path.read_text(encoding="utf-8"))
    params = {}
    for name, value in obj.get("params", {}).items():
        if isinstance(value, list):
            if len(value) != 1:
                raise ValueError(f"parameter {name!r} must name exactly one element")
            value = value[0]
        params[name] = int(value)
    levels = {name: int(level) for name, level in obj.get("levels", {}).items()}
    return params, levels


def cmd_model(args) -> int:
    if args.model_command == "demo":
        result = demo(args.name)
        d, report = result.digraph, result.report
        payload = {"demo": args.name, "formula": render(result.formula), **report.to_json()}
        _emit(args, payload, f"demo {args.name}: {render(result.formula)}\n" + _report_text(d, report))
        return _model_exit(args, report.verdict)
    d = Digraph.load(args.model)
    if args.model_command == "automorphisms":
        autos = automorphisms(d, limit=args.limit)
        payload = {"n": d.n, "automorphisms": [list(f.image) for f in autos]}
        text = "\n".join(
            " ".join("(" + " ".join(d.name(x) for x in c) + ")" for c in f.cycles()) or "id" for f in autos
        )
        _emit(args, payload, text)
        return EXIT_OK
    phi = parse(args.formula)
    params, levels = _load_constraints(args.constraints)
    report = invariance_survey(d, phi, args.class_var, params, levels, limit=args.limit, samples=args.samples, seed=args.seed)
    _emit(args, report.to_json(), _report_text(d, report))
    return _model_exit(args, report.verdict)


COMMANDS = {
    "parse": cmd_parse,
    "stratify": cmd_stratify,
    "canon": cmd_canon,
    "acyclic": cmd_acyclic,
    "compare": cmd_compare,
    "model": cmd_model,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("format", "text"), ("limit", DEFAULT_LIMIT), ("seed", None), ("samples", None), ("expect", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    if args.limit < 1:
        parser.error("--limit must be positive")
    if args.seed is not None and args.samples is None:
        args.samples = 1000
    try:
        return COMMANDS[args.command](args)
    except FormulaSyntaxError as exc:
        print(f"nfstrat: syntax error {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NFStratError, ValueError, OSError) as exc:
        print(f"nfstrat: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
