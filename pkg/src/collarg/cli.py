"""Command-line interface: ``collarg <command> [options] FILE``.

Exit status: 0 success, 1 a cross-check found a counterexample, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from . import __version__, caf, core, dlp, dung, enumeration, oracle
from .errors import CollargError
from .generators import random_program

SCHEMA_VERSION = "1.0"
EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(message)


def _common(parser):
    parser.add_argument("--json", action="store_true", help="emit the JSON output document")
    parser.add_argument("--format", choices=("theory", "program"), help="override extension-based detection")
    parser.add_argument("--max-args", type=int, default=enumeration.MAX_ARGS)
    parser.add_argument("--max-atoms", type=int, default=dlp.MAX_ATOMS)
    parser.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    _common(common)
    parser = _Parser(prog="collarg", description="Collective argumentation toolkit")
    parser.add_argument("--version", action="version", version=f"collarg {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("stable", parents=[common], help="stable argument sets")
    p.add_argument("file")
    p = sub.add_parser("pstable", parents=[common], help="p-stable pairs")
    p.add_argument("file")
    p = sub.add_parser("admissible", parents=[common], help="admissible sets")
    p.add_argument("--kind", choices=enumeration.KINDS, default="plain")
    p.add_argument("--maximal", action="store_true")
    p.add_argument("file")
    p = sub.add_parser("closure", parents=[common], help="positive or negative closure")
    p.add_argument("--kind", choices=("positive", "negative"), required=True)
    p.add_argument("file")
    p = sub.add_parser("props", parents=[common], help="structural properties")
    p.add_argument("file")
    p = sub.add_parser("dung", parents=[common], help="Dung extensions of a normal theory")
    p.add_argument("--semantics", choices=dung.SEMANTICS, required=True)
    p.add_argument("file")
    p = sub.add_parser("compile", parents=[common], help="compile a program to a theory")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--dump", action="store_true", help="print the theory in .caf format")
    mode.add_argument("--lazy", action="store_true", help="answer --query without materializing")
    p.add_argument("--query", action="append", default=[], metavar="'A B -> C'")
    p.add_argument("file")
    p = sub.add_parser("oracle", help="brute-force program semantics")
    osub = p.add_subparsers(dest="oracle_command", required=True, parser_class=_Parser)
    q = osub.add_parser("stable-models", parents=[common])
    q.add_argument("file")
    p = sub.add_parser("crosscheck", parents=[common], help="stable-model and normal correspondence checks")
    p.add_argument("--random", type=int, default=0, metavar="N", help="also check N seeded random programs")
    p.add_argument("file", nargs="?")
    return parser


# -- input --------------------------------------------------------------------


def _detect(path: str, forced: str | None) -> str:
    if forced:
        return forced
    suffix = Path(path).suffix
    if suffix == ".caf":
        return "theory"
    if suffix == ".dlp":
        return "program"
    raise InputError(f"{path}: cannot tell theory from program by extension; use --format")


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None


def _load_program(args) -> dlp.Program:
    if _detect(args.file, args.format) != "program":
        raise InputError(f"{args.file}: expected a program")
    return dlp.parse_program(_read(args.file))


def _load_theory(args, diagnostics) -> core.Theory:
    kind = _detect(args.file, args.format)
    text = _read(args.file)
    if kind == "theory":
        return caf.parse_theory(text)
    diagnostics.append("program input compiled to its argumentation theory")
    return dlp.compile_program(dlp.parse_program(text), args.max_atoms)


# -- output helpers -----------------------------------------------------------


def _sets(t, masks):
    return [t.sorted_names(m) for m in masks]


def _base(t):
    return [{"source": t.sorted_names(a), "target": t.sorted_names(b)} for a, b in t.base]


def _show(names) -> str:
    return "{" + ", ".join(names) + "}"


def _parse_query(t, q: str):
    if q.count("->") != 1:
        raise InputError(f"query {q!r} must have the form 'A B -> C D'")
    left, right = q.split("->")
    try:
        return t.mask(left.split()), t.mask(right.split())
    except core.TheoryError as exc:
        raise InputError(f"query {q!r}: {exc}") from None


# -- commands -----------------------------------------------------------------
# Each returns (results, text_lines, exit_code).


def cmd_stable(args, diag):
    t = _load_theory(args, diag)
    sets = _sets(t, enumeration.stable_masks(t, args.max_args))
    return {"universe": list(t.universe), "stable_sets": sets}, [_show(s) for s in sets] or ["no stable sets"], 0


def cmd_pstable(args, diag):
    t = _load_theory(args, diag)
    pairs = [
        {"lower": t.sorted_names(lo), "upper": t.sorted_names(up)}
        for lo, up in enumeration.p_stable_masks(t, args.max_args)
    ]
    lines = [f"({_show(p['lower'])}, {_show(p['upper'])})" for p in pairs] or ["no p-stable pairs"]
    return {"universe": list(t.universe), "pairs": pairs}, lines, 0


def cmd_admissible(args, diag):
    t = _load_theory(args, diag)
    sets = _sets(t, enumeration.admissible_masks(t, args.kind, args.maximal, args.max_args))
    results = {"universe": list(t.universe), "kind": args.kind, "maximal": args.maximal, "sets": sets}
    return results, [_show(s) for s in sets] or ["no admissible sets"], 0


def cmd_closure(args, diag):
    t = _load_theory(args, diag)
    c = core.closure(t, args.kind)
    text = caf.format_theory(c)
    return {"kind": args.kind, "universe": list(c.universe), "base": _base(c), "theory": text}, [text.rstrip("\n")], 0


def cmd_props(args, diag):
    t = _load_theory(args, diag)
    flags = core.properties(t)
    return flags, [f"{k}: {'yes' if v else 'no'}" for k, v in flags.items()], 0


def cmd_dung(args, diag):
    t = _load_theory(args, diag)
    v = dung.DungView(t)
    exts = _sets(t, v.extension_masks(args.semantics, args.max_args))
    return {"universe": list(t.universe), "semantics": args.semantics, "extensions": exts}, [_show(e) for e in exts] or ["no extensions"], 0


def cmd_compile(args, diag):
    p = _load_program(args)
    if args.lazy:
        t = dlp.LazyTheory(p, args.max_atoms)
        results = {"universe": list(t.universe), "mode": "lazy"}
        lines = []
    else:
        t = dlp.compile_program(p, args.max_atoms)
        text = caf.format_theory(t)
        results = {"universe": list(t.universe), "mode": "materialized", "base": _base(t)}
        if args.dump:
            results["theory"] = text
            lines = [text.rstrip("\n")]
        else:
            lines = [f"{t.size} arguments, {len(t.base)} generator pairs"]
            lines += [f"  {_show(g['source'])} -> {_show(g['target'])}" for g in results["base"]]
    answers = []
    for q in args.query:
        g, d = _parse_query(t, q)
        hit = t.attacks_mask(g, d)
        answers.append({"query": q, "attacks": hit})
        lines.append(f"{q.strip()}: {'attacks' if hit else 'no attack'}")
    if args.query:
        results["queries"] = answers
    return results, lines, 0


def cmd_oracle(args, diag):
    p = _load_program(args)
    order = {a: i for i, a in enumerate(p.atoms)}
    models = [sorted(m.true_atoms, key=order.__getitem__) for m in oracle.stable_models(p, args.max_atoms)]
    return {"atoms": list(p.atoms), "stable_models": models}, [_show(m) for m in models] or ["no stable models"], 0


def _crosscheck_one(p: dlp.Program, max_atoms: int, max_args: int, label: str) -> dict:
    thm1 = oracle.check_theorem1(p, max_atoms)
    entry = {"label": label, "program": dlp.format_program(p), "theorem1": thm1.to_dict()}
    t = dlp.compile_program(p, max_atoms)
    if core.is_normal(t):
        entry["normal_correspondence"] = dung.check_normal_correspondence(dung.DungView(t), max_args).to_dict()
    else:
        entry["normal_correspondence"] = None
    entry["passed"] = thm1.passed and (entry["normal_correspondence"] is None or entry["normal_correspondence"]["passed"])
    return entry


def cmd_crosscheck(args, diag):
    if args.file is None and not args.random:
        raise InputError("crosscheck needs a program file or --random N")
    reports = []
    if args.file is not None:
        reports.append(_crosscheck_one(_load_program(args), args.max_atoms, args.max_args, args.file))
    for i in range(args.random):
        seed = args.seed + i
        reports.append(_crosscheck_one(random_program(seed), args.max_atoms, args.max_args, f"random seed={seed}"))
    passed = all(r["passed"] for r in reports)
    failed = [r for r in reports if not r["passed"]]
    lines = [f"checked {len(reports)} program(s): {'pass' if passed else 'FAIL'}"]
    for r in failed:
        lines.append(f"  {r['label']}: counterexample")
        lines.append("    " + r["program"].rstrip("\n").replace("\n", "\n    "))
    if len(reports) == 1:
        r = reports[0]
        lines.append("stable models: " + (", ".join(_show(m) for m in r["theorem1"]["stable_models"]) or "none"))
        lines.append("stable sets:   " + (", ".join(_show(s) for s in r["theorem1"]["stable_sets"]) or "none"))
        if r["normal_correspondence"] is None:
            lines.append("normal correspondence: skipped (compiled theory is not normal)")
    return {"passed": passed, "reports": reports}, lines, EXIT_OK if passed else EXIT_MISMATCH


COMMANDS = {
    "stable": cmd_stable,
    "pstable": cmd_pstable,
    "admissible": cmd_admissible,
    "closure": cmd_closure,
    "props": cmd_props,
    "dung": cmd_dung,
    "compile": cmd_compile,
    "oracle": cmd_oracle,
    "crosscheck": cmd_crosscheck,
}


def document(command: str, results, diagnostics) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "results": results, "diagnostics": diagnostics}


def run(argv=None, stdout=None, stderr=None) -> tuple[int, dict | None]:
    """Run the CLI; returns the exit code and the output document (``None`` on input errors)."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except InputError as exc:
        print(f"collarg: error: {exc}", file=stderr)
        return EXIT_INPUT, None
    command = args.command if args.command != "oracle" else "oracle stable-models"
    diagnostics: list[str] = []
    if args.max_args > enumeration.MAX_ARGS:
        diagnostics.append(f"--max-args {args.max_args} is above the default cap; may not terminate promptly")
    if args.max_atoms > dlp.MAX_ATOMS:
        diagnostics.append(f"--max-atoms {args.max_atoms} is above the default cap; may not terminate promptly")
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            results, lines, code = COMMANDS[args.command](args, diagnostics)
        diagnostics.extend(str(w.message) for w in caught)
    except (InputError, CollargError) as exc:
        print(f"collarg: error: {exc}", file=stderr)
        return EXIT_INPUT, None
    doc = document(command, results, diagnostics)
    if args.json:
        json.dump(doc, stdout, indent=2)
        stdout.write("\n")
    else:
        for d in diagnostics:
            print(f"warning: {d}", file=stderr)
        for line in lines:
            print(line, file=stdout)
    return code, doc


def main(argv=None) -> int:
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
