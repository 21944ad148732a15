"""Command line interface: ``skeintwist invariant|family|verify``.

Exit codes: 0 success, 1 a verification check failed, 2 input could not be
parsed, 3 the crossing or time budget ran out, 4 usage error (including a
mode that does not apply to the requested ``n``).

Engine options fall back to ``SKEINTWIST_MAX_CROSSINGS``,
``SKEINTWIST_TIMEOUT`` and ``SKEINTWIST_WORKERS`` when not given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional, Sequence

from . import __version__
from .core import IMPLEMENTATION
from .diagram import Diagram, PDParseError, RegionError, parse_pd
from .families import (
    NEGATIVE_BRANCH,
    POSITIVE_BRANCH,
    SMALL_N,
    TemplateUnavailable,
    f_closed_form,
    f_direct,
    f_inductive,
    family_spec,
    fixture,
)
from .poly import HomflyPoly, LaurentPoly, PolyParseError
from .skein import DEFAULT_MAX_CROSSINGS, BudgetExceeded, SkeinEngine
from .verify import SUITES, run_suite

SCHEMA = 1

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_USAGE = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


def _env(name: str) -> Optional[str]:
    value = os.environ.get("SKEINTWIST_" + name)
    return value if value not in (None, "") else None


def _add_engine_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit a JSON record")
    p.add_argument("--latex", action="store_true", help="emit LaTeX")
    p.add_argument("--stats", action="store_true", help="report engine counters")
    p.add_argument("--max-crossings", type=int, default=None, metavar="N")
    p.add_argument("--timeout", type=float, default=None, metavar="SECONDS")
    p.add_argument("--workers", type=int, default=None, metavar="N")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="skeintwist", description="HOMFLYPT and twist-family calculations.")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    inv = sub.add_parser("invariant", help="HOMFLYPT or F of a PD diagram")
    inv.add_argument("input", help="PD text, a file name, or - for standard input")
    inv.add_argument("--which", choices=("homfly", "f"), default="f")
    _add_engine_flags(inv)

    fam = sub.add_parser("family", help="F of K_n (variant B) or K'_n (variant G)")
    fam.add_argument("variant", choices=("B", "G"))
    fam.add_argument("n", type=int)
    fam.add_argument("--mode", choices=("direct", "inductive", "closed-form"), default="inductive")
    fam.add_argument("--template", default=None, help="PD file with a five-strand TWIST region")
    _add_engine_flags(fam)

    ver = sub.add_parser("verify", help="run self-check suites")
    ver.add_argument("suites", nargs="*", choices=sorted(SUITES) + ["all"], default=["all"])
    _add_engine_flags(ver)
    return parser


def _engine(args: argparse.Namespace) -> SkeinEngine:
    max_c = args.max_crossings
    if max_c is None:
        max_c = int(_env("MAX_CROSSINGS") or DEFAULT_MAX_CROSSINGS)
    timeout = args.timeout
    if timeout is None and _env("TIMEOUT"):
        timeout = float(_env("TIMEOUT"))
    workers = args.workers
    if workers is None:
        workers = int(_env("WORKERS") or 1)
    return SkeinEngine(max_crossings=max_c, timeout=timeout, workers=workers)


def _read_input(text: str) -> str:
    if text == "-":
        return sys.stdin.read()
    if os.path.isfile(text):
        with open(text) as fh:
            return fh.read()
    return text


def _poly_record(p) -> dict:
    if isinstance(p, HomflyPoly):
        terms = [[a, b, c] for (a, b), c in sorted(p.items(), key=lambda t: (t[0][1], -t[0][0]))]
        return {"text": str(p), "terms": terms, "variables": ["v", "z"]}
    return {"text": str(p), "terms": [[e, c] for e, c in p.items()], "variables": ["v"]}


def _emit(args: argparse.Namespace, record: dict, poly, engine: SkeinEngine, out) -> None:
    if args.stats:
        record["stats"] = engine.stats.as_dict()
    if args.json:
        record["schema"] = SCHEMA
        record["implementation"] = IMPLEMENTATION
        if poly is not None:
            record["polynomial"] = _poly_record(poly)
        out.write(json.dumps(record, sort_keys=True) + "\n")
        return
    if poly is not None:
        out.write((poly.to_latex() if args.latex else str(poly)) + "\n")
    if args.stats:
        out.write("stats: " + " ".join("%s=%d" % kv for kv in engine.stats.as_dict().items()) + "\n")


def cmd_invariant(args: argparse.Namespace, out) -> int:
    d = parse_pd(_read_input(args.input))
    engine = _engine(args)
    poly = engine.homfly(d) if args.which == "homfly" else engine.f_polynomial(d)
    record = {"command": "invariant", "which": args.which, "crossings": d.num_crossings,
              "components": d.num_components}
    _emit(args, record, poly, engine, out)
    return EXIT_OK


def _family_value(variant: str, n: int, mode: str, template: Optional[Diagram], engine: SkeinEngine) -> LaurentPoly:
    if mode == "closed-form":
        if n >= 6:
            return f_closed_form(variant, POSITIVE_BRANCH).evaluate(n)
        if n <= -3:
            return f_closed_form(variant, NEGATIVE_BRANCH).evaluate(n)
        raise UsageError("closed-form mode needs n >= 6 or n <= -3")
    if mode == "inductive":
        return f_inductive(variant, n)
    spec = family_spec(variant, template)
    if not spec.has_template:
        raise UsageError("direct mode needs a template: none is bundled for variant %s; pass --template" % variant)
    return f_direct(spec, n, engine)


def cmd_family(args: argparse.Namespace, out) -> int:
    engine = _engine(args)
    template = None
    if args.template is not None:
        template = parse_pd(_read_input(args.template))
        if template.region is None or template.region.k != 5:
            raise UsageError("template must mark a five-strand TWIST region")
    poly = _family_value(args.variant, args.n, args.mode, template, engine)
    record = {"command": "family", "variant": args.variant, "n": args.n, "mode": args.mode}
    _emit(args, record, poly, engine, out)
    return EXIT_OK


def latex_table(rows: Sequence[tuple]) -> str:
    """Two-column tabular with one ``F`` value per row."""
    lines = ["\\begin{tabular}{ rl}", " \\midrule"]
    for label, poly in rows:
        lines.append("\t$%s$&$=%s$\\\\" % (label, poly.to_latex()))
    lines.append("\\end{tabular}")
    return "\n".join(lines)


def cmd_verify(args: argparse.Namespace, out) -> int:
    engine = _engine(args)
    names = list(SUITES) if "all" in args.suites else list(dict.fromkeys(args.suites))
    report = []
    all_ok = True
    for name in names:
        checks = run_suite(name, engine)
        ok = all(c.passed for c in checks)
        all_ok = all_ok and ok
        report.append({"suite": name, "passed": ok, "checks": [c.as_dict() for c in checks]})
    if args.json:
        record = {"command": "verify", "passed": all_ok, "suites": report}
        _emit(args, record, None, engine, out)
    elif args.latex:
        rows = []
        for n in SMALL_N:
            for variant, label in (("B", "F_{K_{%d}}"), ("G", "F_{K'_{%d}}")):
                rows.append((label % n, fixture(("K_%d" if variant == "B" else "Kp_%d") % n).value()))
        out.write(latex_table(rows) + "\n")
    else:
        for entry in report:
            for c in entry["checks"]:
                out.write("%s  %-18s %s: %s\n" % ("PASS" if c["passed"] else "FAIL", entry["suite"],
                                                 c["name"], c["detail"]))
            n_ok = sum(c["passed"] for c in entry["checks"])
            out.write("%s: %d/%d checks passed\n" % (entry["suite"], n_ok, len(entry["checks"])))
        if args.stats:
            _emit(args, {}, None, engine, out)
    return EXIT_OK if all_ok else EXIT_FAILED


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"invariant": cmd_invariant, "family": cmd_family, "verify": cmd_verify}
    try:
        return handlers[args.command](args, out)
    except (PDParseError, PolyParseError, RegionError) as exc:
        sys.stderr.write("parse error: %s\n" % exc)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        sys.stderr.write("budget exceeded: %s\n" % exc)
        return EXIT_BUDGET
    except (UsageError, TemplateUnavailable, OSError) as exc:
        sys.stderr.write("usage error: %s\n" % exc)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
