"""Command-line driver: one query per process.

Exit codes: 0 on success, 1 for input or usage errors, 2 when the query is
well-formed but its precondition (acceptance status, applicability of a
contrastive question) does not hold. In the last case the report is still
printed.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Sequence

from .aspic import Literal, Presentation, StructuredFramework, derive_af, describe
from .contrastive import ContrastiveResult, Direction, check_applicability, contrast, derive_foil
from .errors import ApplicabilityError, ArgumentationError, InputError, PreconditionError
from .explanations import Candidates, acc_explanation, nonacc_explanation
from .formats import QueryResult, parse_af, parse_theory
from .formulas import (check_formula_applicability, formula_acc_explanation, formula_contrastive,
                       formula_foil, formula_nonacc_explanation, formula_status)
from .framework import AF
from .semantics import Semantics, Strategy, acceptance_status, extensions

KIND_BY_SUFFIX = {".apx": "af", ".af": "af", ".thy": "theory"}
COMMANDS = ("extensions", "status", "explain", "contrast", "foil", "arguments")

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2


class UsageError(InputError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for failed preconditions here
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--input", "-i", required=True, help="framework (.apx) or theory (.thy) file")
    common.add_argument("--kind", choices=["af", "theory"], help="override detection by file suffix")
    common.add_argument("--semantics", "-s", default="preferred",
                        choices=[s.value for s in Semantics])
    common.add_argument("--strategy", default="credulous", choices=[s.value for s in Strategy])
    common.add_argument("--fact", help="argument id (framework) or literal (theory)")
    common.add_argument("--foil", action="append", default=[], help="repeatable")
    common.add_argument("--auto-foil", action="store_true",
                        help="use the attackers of the fact (framework) or its contrary (theory)")
    common.add_argument("--direction", default="acc", choices=[d.value for d in Direction])
    common.add_argument("--presentation", default="id", choices=[p.value for p in Presentation],
                        help="theory explanations as argument ids or as their premises")
    common.add_argument("--format", default="text", choices=["text", "json"])

    parser = _Parser(prog="argcontrast",
                     description="Extensions, acceptance and contrastive explanations for argumentation frameworks.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    helps = {
        "extensions": "list the extensions of a semantics",
        "status": "the four acceptance flags of --fact",
        "explain": "acceptance (--direction acc) or non-acceptance explanation of --fact",
        "contrast": "why --fact rather than the foils",
        "foil": "the foil derived for --fact",
        "arguments": "arguments and attacks of the input",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name], description=helps[name])
    return parser


# ---------------------------------------------------------------- loading

class Loaded:
    """The parsed input: a plain framework, or a theory with its derived framework."""

    def __init__(self, af: AF, structured: StructuredFramework | None = None):
        self.af = af
        self.structured = structured

    @property
    def is_theory(self) -> bool:
        return self.structured is not None


def load(path: str, kind: str | None) -> Loaded:
    p = Path(path)
    if kind is None:
        kind = KIND_BY_SUFFIX.get(p.suffix.lower())
        if kind is None:
            raise InputError(f"cannot tell the input kind from {p.name!r}; pass --kind af or --kind theory")
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except UnicodeDecodeError as exc:
        raise InputError(f"{path} is not valid UTF-8") from exc
    if kind == "af":
        return Loaded(parse_af(text))
    fw = derive_af(parse_theory(text))
    return Loaded(fw.af, fw)


# ---------------------------------------------------------------- rendering

def _sorted(items) -> list[str]:
    return sorted(str(x) for x in items)


def _braces(items) -> str:
    return "{" + ", ".join(_sorted(items)) + "}"


def _contrast_text(res: ContrastiveResult) -> str:
    if res.is_pair:
        return f"<{_braces(res.fact_side)}, {_braces(res.foil_side)}>"
    return _braces(res.common)


def _explanation_payload(result: frozenset | Candidates) -> dict[str, Any]:
    if isinstance(result, Candidates):
        return {"candidates": [_sorted(s) for s in result.explanations],
                "explanation": _sorted(result.explanation)}
    return {"explanation": _sorted(result)}


def _explanation_text(result: frozenset | Candidates) -> str:
    if isinstance(result, Candidates):
        lines = [_braces(result.explanation)]
        others = sorted({tuple(_sorted(s)) for s in result.explanations} - {tuple(_sorted(result.explanation))})
        lines += [f"  alternative: {{{', '.join(o)}}}" for o in others]
        return "\n".join(lines)
    return _braces(result)


def _report_text(report: dict) -> str:
    lines = [f"not applicable: {v['condition']} ({v['foil']}): {v['detail']}" for v in report["violations"]]
    lines += [f"note: {n}" for n in report["notes"]]
    return "\n".join(lines)


# ---------------------------------------------------------------- commands

def _need_fact(args) -> str:
    if not args.fact:
        raise UsageError(f"{args.command} needs --fact")
    return args.fact


def _literal(text: str) -> Literal:
    return Literal.parse(text)


def cmd_extensions(loaded: Loaded, args, out: QueryResult) -> str:
    exts = extensions(loaded.af, Semantics(args.semantics))
    out.result = {"extensions": [_sorted(e) for e in exts]}
    if not exts:
        return "no extensions"
    return "\n".join(_braces(e) for e in exts)


def cmd_status(loaded: Loaded, args, out: QueryResult) -> str:
    fact = _need_fact(args)
    sem = Semantics(args.semantics)
    if loaded.is_theory:
        status = formula_status(loaded.structured, sem, _literal(fact))
        if status is None:
            out.result = {"concludable": False}
            return f"{fact}: no argument concludes it"
    else:
        status = acceptance_status(loaded.af, sem, fact)
    strategy = Strategy(args.strategy)
    out.result = {"concludable": True, "flags": status.as_dict(),
                  "accepted": status.accepted(strategy), "nonaccepted": status.nonaccepted(strategy)}
    return "\n".join(f"{k.replace('_', ' ')}: {'yes' if v else 'no'}" for k, v in status.as_dict().items())


def cmd_explain(loaded: Loaded, args, out: QueryResult) -> str:
    fact = _need_fact(args)
    sem, strategy = Semantics(args.semantics), Strategy(args.strategy)
    acc = Direction(args.direction) is Direction.ACC
    if loaded.is_theory:
        fw, phi, pres = loaded.structured, _literal(fact), Presentation(args.presentation)
        result = (formula_acc_explanation(fw, sem, strategy, phi, pres) if acc
                  else formula_nonacc_explanation(fw, sem, strategy, phi, pres))
    else:
        result = (acc_explanation(loaded.af, sem, strategy, fact) if acc
                  else nonacc_explanation(loaded.af, sem, strategy, fact))
    out.result = _explanation_payload(result)
    return _explanation_text(result)


def _foils(loaded: Loaded, args) -> frozenset | None:
    if args.foil and args.auto_foil:
        raise UsageError("give either --foil or --auto-foil, not both")
    if not args.foil:
        return None
    if loaded.is_theory:
        return frozenset(_literal(f) for f in args.foil)
    return frozenset(args.foil)


def cmd_contrast(loaded: Loaded, args, out: QueryResult) -> str:
    fact = _need_fact(args)
    sem, strategy, direction = Semantics(args.semantics), Strategy(args.strategy), Direction(args.direction)
    foils = _foils(loaded, args)
    if loaded.is_theory:
        fw, phi = loaded.structured, _literal(fact)
        used = foils if foils is not None else formula_foil(fw, phi)
        if used:
            out.applicability = check_formula_applicability(fw, sem, strategy, phi, used, direction).as_dict()
        res = formula_contrastive(fw, sem, strategy, phi, foils, direction, Presentation(args.presentation))
    else:
        used = foils if foils is not None else derive_foil(loaded.af, fact)
        if used:
            out.applicability = check_applicability(loaded.af, sem, strategy, fact, used, direction).as_dict()
        res = contrast(loaded.af, sem, strategy, fact, foils, direction)
    out.query["foils"] = _sorted(used)
    out.result = res.as_dict()
    return _contrast_text(res)


def cmd_foil(loaded: Loaded, args, out: QueryResult) -> str:
    fact = _need_fact(args)
    if loaded.is_theory:
        foil = formula_foil(loaded.structured, _literal(fact))
    else:
        foil = derive_foil(loaded.af, fact)
    out.result = {"foil": _sorted(foil)}
    return _braces(foil)


def cmd_arguments(loaded: Loaded, args, out: QueryResult) -> str:
    if not loaded.is_theory:
        af = loaded.af
        out.result = {"arguments": list(af.sorted_arguments),
                      "attacks": [list(p) for p in sorted(af.attacks)]}
        return af.to_apx().rstrip("\n")
    fw = loaded.structured
    out.result = {
        "arguments": [{"id": a.id, "conclusion": str(a.conc), "premises": _sorted(a.prem),
                       "subarguments": _sorted(a.sub), "top_rule": a.toprule, "structure": describe(a, fw)}
                      for a in fw.arguments],
        "attacks": [t.as_dict() for t in fw.attacks],
    }
    lines = [f"{a.id}: {describe(a, fw)}" for a in fw.arguments]
    lines += [f"{t.attacker} {t.kind.value}s {t.target} on {t.on}" for t in fw.attacks]
    return "\n".join(lines)


HANDLERS = {
    "extensions": cmd_extensions,
    "status": cmd_status,
    "explain": cmd_explain,
    "contrast": cmd_contrast,
    "foil": cmd_foil,
    "arguments": cmd_arguments,
}


def _query_echo(args) -> dict[str, Any]:
    echo: dict[str, Any] = {"input": args.input}
    if args.command in ("status", "explain", "contrast", "foil"):
        echo["fact"] = args.fact
    if args.command in ("explain", "contrast"):
        echo["direction"] = args.direction
        echo["presentation"] = args.presentation
    if args.command == "contrast":
        echo["auto_foil"] = not args.foil
        echo["foils"] = sorted(args.foil)
    return echo


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_INPUT
    if args.command is None:
        parser.print_usage(stderr)
        print("error: a command is required", file=stderr)
        return EXIT_INPUT

    uses_sem = args.command not in ("foil", "arguments")
    out = QueryResult(command=args.command, query=_query_echo(args),
                      semantics=args.semantics if uses_sem else None,
                      strategy=args.strategy if args.command in ("status", "explain", "contrast") else None)
    json_mode = args.format == "json"
    try:
        loaded = load(args.input, args.kind)
        text = HANDLERS[args.command](loaded, args, out)
    except ApplicabilityError as exc:
        out.applicability = exc.report.as_dict()
        out.error = str(exc)
        stdout.write(out.to_json() if json_mode else _report_text(out.applicability) + "\n")
        print(f"error: {exc}", file=stderr)
        return EXIT_PRECONDITION
    except PreconditionError as exc:
        out.error = str(exc)
        if json_mode:
            stdout.write(out.to_json())
        print(f"error: {exc}", file=stderr)
        return EXIT_PRECONDITION
    except (InputError, ArgumentationError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    stdout.write(out.to_json() if json_mode else text + "\n")
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
