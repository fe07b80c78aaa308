"""Command-line interface.

Exit codes: 0 success, 1 usage error (bad flags, malformed model JSON),
2 internal assertion failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import census
from . import hyperelliptic as hyp
from . import trigonal as tri
from .field import build_field
from .zeta import factor_display


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _count_field(text):
    if text not in ("3", "9"):
        raise argparse.ArgumentTypeError("count field must be 3 or 9")
    return int(text)


def _case(text):
    try:
        t, c = text.split(":")
        tri.case_families(t, int(c))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad case {text!r} (expected e.g. split:1)") from exc
    return t, int(c)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="curve-census", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def family(sp, required=True):
        sp.add_argument("--family", choices=census.FAMILIES, required=required)

    c = sub.add_parser("census", help="run a full census")
    family(c)
    c.add_argument("--count-field", type=_count_field, default=9)
    c.add_argument("--jobs", type=int, default=census.default_jobs())
    c.add_argument("--out", help="report path (stdout if omitted)")
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.add_argument("--checkpoint", help="phase-1 survivor file to write or resume from")
    c.add_argument("--min-count", type=int, help="keep every valid model with at least this count")
    c.add_argument("--case", action="append", type=_case, help="trigonal case to sweep, e.g. cusp:1")
    c.add_argument("--no-timing", action="store_true", help="omit runtime for byte-stable reports")

    n = sub.add_parser("count", help="count points of one model")
    family(n, required=False)
    n.add_argument("--model", required=True)
    n.add_argument("--ext", type=int, default=2, help="extension degree e of GF(3^e)")

    w = sub.add_parser("weil", help="Weil polynomial of one model")
    family(w, required=False)
    w.add_argument("--model", required=True)
    w.add_argument("--count-field", type=_count_field, default=9)

    k = sub.add_parser("classify", help="isomorphism classes of a list of models")
    family(k, required=False)
    k.add_argument("--models", required=True, help="file with a JSON list or JSON lines of models")
    k.add_argument("--count-field", type=_count_field, default=9)

    v = sub.add_parser("validate", help="check that a model defines a genus-5 curve")
    family(v, required=False)
    v.add_argument("--model", required=True)

    i = sub.add_parser("isom", help="decide isomorphism of two models")
    family(i, required=False)
    i.add_argument("--model", action="append", required=True, help="give twice")
    i.add_argument("--count-field", type=_count_field, default=9)
    return p


def _load_model(text, fam):
    try:
        d = json.loads(text)
        if fam and "family" not in d:
            d["family"] = fam
        if fam and d["family"] != fam:
            raise UsageError(f"model family {d['family']!r} does not match --family {fam}")
        return census.model_from_json(d)
    except UsageError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed model JSON: {exc}") from exc


def _load_models(path, fam):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    stripped = text.strip()
    if stripped.startswith("["):
        items = [json.dumps(d) for d in json.loads(stripped)]
    else:
        items = [line for line in text.splitlines() if line.strip()]
    return [_load_model(s, fam) for s in items]


def _run(args) -> int:
    if args.command == "census":
        cfg = census.CensusConfig(family=args.family, count_field=args.count_field, jobs=args.jobs,
                                  out=args.out, fmt=args.format, checkpoint=args.checkpoint,
                                  min_count=args.min_count, cases=args.case, timing=not args.no_timing)
        report = census.run_census(cfg)
        if args.out:
            census.write_report(report, args.out, args.format)
        else:
            sys.stdout.write(report.dumps() if args.format == "json" else census.report_csv(report))
        return 0

    if args.command == "count":
        m = _load_model(args.model, args.family)
        if not 1 <= args.ext <= 10:
            raise UsageError("--ext must be in 1..10")
        if isinstance(m, hyp.HyperModel):
            print(hyp.count_points_hyper(m, args.ext))
        else:
            print(tri.normalization_count(m, args.ext))
        return 0

    if args.command == "weil":
        m = _load_model(args.model, args.family)
        W = census.weil_polynomial(m, args.count_field)
        print(json.dumps({"q": W.q, "weil": W.to_list(), "factored": factor_display(W)}))
        return 0

    if args.command == "classify":
        models = _load_models(args.models, args.family)
        k = build_field(1 if args.count_field == 3 else 2)
        classes = census.classify(models, k)
        print(json.dumps({"num_classes": len(classes), "classes": classes}))
        return 0

    if args.command == "validate":
        m = _load_model(args.model, args.family)
        ok = m.is_squarefree() if isinstance(m, hyp.HyperModel) else tri.validate_genus5(m)
        print("valid" if ok else "invalid")
        return 0

    if args.command == "isom":
        if len(args.model) != 2:
            raise UsageError("isom needs exactly two --model arguments")
        m1, m2 = (_load_model(s, args.family) for s in args.model)
        k = build_field(1 if args.count_field == 3 else 2)
        print("true" if census.isomorphic(m1, m2, k) else "false")
        return 0
    raise UsageError(f"unknown command {args.command}")


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return _run(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"assertion failed: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
