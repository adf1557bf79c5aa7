"""The finring command-line front end.

Subcommands: classify (one ring, JSON or aligned text), verify (theorem
suites over one ring or a corpus), enumerate (NDJSON stream over the
default corpus, deduplicated by classification profile), gallery list.

Exit codes: 0 success, 1 a verify suite found a counterexample, 2 spec
or usage errors, 3 internal inconsistency (a cross-check that can only
fail on an implementation bug).  Corpus work fans out over a thread
pool capped by the FINRING_THREADS environment variable; output order
is by spec digest, never by completion order.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace

from .bounds import Bounds, DEFAULT
from .core import FiniteRing, RingError, InternalInconsistency
from .dsl import (parse_file, parse_spec, pretty, resolve,
                  SpecSyntaxError, ResolutionError)
from .matrix import build_formal_matrix
from .gallery import EXPECTED, gallery_names, gallery_text
from .report import classify
from .sweep import CorpusEntry, corpus_entries
from .theorems import (ALL_THEOREMS, PER_RING_SUITES, UnknownTheorem,
                       check_ring, morita_outcomes, parse_plan)
from .cardinality import qf_simple_formula_check

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3


def _threads() -> int:
    raw = os.environ.get("FINRING_THREADS", "").strip()
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return max(1, os.cpu_count() or 1)


def _bounds_from(args: argparse.Namespace) -> Bounds:
    updates = {}
    if getattr(args, "bound_lattice", None) is not None:
        updates["lattice"] = args.bound_lattice
    if getattr(args, "bound_dring", None) is not None:
        updates["dring"] = args.bound_dring
    if getattr(args, "bound_baer", None) is not None:
        updates["baer"] = args.bound_baer
    if getattr(args, "max_order", None) is not None:
        updates["max_order"] = args.max_order
    return replace(DEFAULT, **updates) if updates else DEFAULT


def _add_bounds_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--bound-lattice", type=int, metavar="N",
                   help="submodule-lattice enumeration gate (default 256)")
    p.add_argument("--bound-dring", type=int, metavar="N",
                   help="full one-sided-ideal enumeration gate (default 256)")
    p.add_argument("--bound-baer", type=int, metavar="N",
                   help="self-injectivity oracle gate (default 16)")
    p.add_argument("--max-order", type=int, metavar="N",
                   help="largest ring order built (default 4096)")


def _resolve_target(tokens: list[str], bounds: Bounds) -> tuple[str, str]:
    """Target tokens -> (name, DSL text).

    Accepts "gallery:NAME", the two-token form "gallery NAME", or a
    file path holding exactly one ring block.
    """
    if len(tokens) == 2 and tokens[0] == "gallery":
        tokens = [f"gallery:{tokens[1]}"]
    if len(tokens) != 1:
        raise SpecSyntaxError("expected one spec file or gallery:NAME", 0, 0)
    target = tokens[0]
    if target.startswith("gallery:"):
        name = target.split(":", 1)[1]
        return name, gallery_text(name)
    with open(target, "r", encoding="utf-8") as fh:
        text = fh.read()
    return os.path.splitext(os.path.basename(target))[0], text


def _build(text: str, bounds: Bounds) -> FiniteRing:
    return build_formal_matrix(resolve(parse_spec(text)), bounds)


def _profile_key(report_dict: dict) -> str:
    trimmed = {k: v for k, v in report_dict.items()
               if k not in ("name", "timings")}
    return json.dumps(trimmed, sort_keys=True)


# -- subcommands -----------------------------------------------------------------


def cmd_classify(args: argparse.Namespace) -> int:
    bounds = _bounds_from(args)
    name, text = _resolve_target(args.target, bounds)
    ring = _build(text, bounds)
    report = classify(ring, name=name, bounds=bounds)
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.to_text(), end="")
    return EXIT_OK


def cmd_gallery(args: argparse.Namespace) -> int:
    if args.action != "list":
        print(f"unknown gallery action: {args.action}", file=sys.stderr)
        return EXIT_USAGE
    for name in gallery_names():
        exp = EXPECTED[name]
        print(f"{name:12s} size {exp['size']:>5d}  "
              f"qf={'yes' if exp['qf'] else 'no':3s} "
              f"frobenius={'yes' if exp['frobenius'] else 'no'}")
    return EXIT_OK


def _verify_one(entry: CorpusEntry, plan: tuple[str, ...],
                bounds: Bounds) -> list[dict]:
    ring = _build(entry.text, bounds)
    ring.name = entry.name
    rows = []
    for theorem in plan:
        if theorem == "morita-invariance":
            continue        # corpus-level, driven separately
        out = check_ring(theorem, ring, bounds)
        row = out.row()
        if not out.passed:
            row["spec"] = entry.text
        rows.append(row)
    return rows


def _print_verify_rows(rows: list[dict]) -> tuple[int, int, int]:
    passed = failed = skipped = 0
    for row in rows:
        if row["skipped"]:
            skipped += 1
            status = f"skip ({row['skipped']})"
        elif row["passed"]:
            passed += 1
            status = "pass"
        else:
            failed += 1
            status = "FAIL"
        print(f"{row['theorem']:18s} {row['ring']:28s} {status}")
        if not row["passed"]:
            witness = {"witness": row["witness"]}
            if "spec" in row:
                witness["spec"] = row["spec"]
            print(json.dumps(witness, indent=2))
    return passed, failed, skipped


def cmd_verify(args: argparse.Namespace) -> int:
    bounds = _bounds_from(args)
    plan = parse_plan(args.theorems)

    trailer = None
    if args.target:
        name, text = _resolve_target(args.target, bounds)
        entry = CorpusEntry(name, text, 0)
        rows = _verify_one(entry, plan, bounds)
        if "qf-simple-formula" in plan:
            ring = _build(text, bounds)
            ring.name = name
            try:
                rep = qf_simple_formula_check(ring, bounds=bounds)
                products = sorted({e["product"] for e in rep["entries"]})
                trailer = ("annihilator products: "
                           + ", ".join(str(p) for p in products))
            except RingError:
                pass
    else:
        if args.corpus and args.corpus != "default":
            with open(args.corpus, "r", encoding="utf-8") as fh:
                asts = parse_file(fh.read())
            entries = [CorpusEntry(ast.name, pretty(ast), 0) for ast in asts]
        else:
            entries = corpus_entries(max_order=bounds.max_order)
        entries = sorted(entries, key=lambda e: e.digest)
        rows = []
        with ThreadPoolExecutor(max_workers=_threads()) as pool:
            for result in pool.map(
                    lambda e: _verify_one(e, plan, bounds), entries):
                rows.extend(result)
        if "morita-invariance" in plan:
            rows.extend(o.row() for o in morita_outcomes(bounds))

    passed, failed, skipped = _print_verify_rows(rows)
    if trailer:
        print(trailer)
    print(f"# {passed} passed, {failed} failed, {skipped} skipped")
    return EXIT_COUNTEREXAMPLE if failed else EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    bounds = _bounds_from(args)
    entries = sorted(corpus_entries(max_order=bounds.max_order),
                     key=lambda e: e.digest)

    def work(entry: CorpusEntry) -> dict:
        ring = _build(entry.text, bounds)
        return classify(ring, name=entry.name, bounds=bounds).to_json_dict()

    seen: set[str] = set()
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        for report_dict in pool.map(work, entries):
            key = _profile_key(report_dict)
            if key in seen:
                continue
            seen.add(key)
            print(json.dumps(report_dict))
    return EXIT_OK


# -- entry point -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finring",
        description="classify finite rings and verify their structure theorems")
    sub = parser.add_subparsers(dest="command", required=True)

    p_cls = sub.add_parser("classify", help="classify one ring spec")
    p_cls.add_argument("target", nargs="+",
                       help="spec file, gallery:NAME, or 'gallery NAME'")
    p_cls.add_argument("--format", choices=("json", "text"), default="text")
    _add_bounds_flags(p_cls)
    p_cls.set_defaults(func=cmd_classify)

    p_ver = sub.add_parser("verify", help="run theorem suites")
    p_ver.add_argument("target", nargs="*",
                       help="optional single ring (file or gallery:NAME)")
    p_ver.add_argument("--corpus", default=None, metavar="default|FILE",
                       help="corpus to sweep when no target is given")
    p_ver.add_argument("--theorems", default=None, metavar="a,b,c",
                       help="comma-separated suite names (default: all)")
    _add_bounds_flags(p_ver)
    p_ver.set_defaults(func=cmd_verify)

    p_enum = sub.add_parser("enumerate",
                            help="stream corpus classifications as NDJSON")
    _add_bounds_flags(p_enum)
    p_enum.set_defaults(func=cmd_enumerate)

    p_gal = sub.add_parser("gallery", help="gallery operations")
    p_gal.add_argument("action", choices=("list",))
    p_gal.set_defaults(func=cmd_gallery)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnknownTheorem as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SpecSyntaxError, ResolutionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except RingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
