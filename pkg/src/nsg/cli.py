"""Command-line front end.

Exit codes: 0 success, 1 internal error, 2 invalid input, 3 a reference
value or a proven bound did not reproduce.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import kernels
from .bg import DEFAULT_NODE_LIMIT, bg_bounds
from .explorer import (
    ScanFilters,
    ScanInvariantError,
    question_a_frontier,
    read_checkpoint,
    scan,
    trim_to_checkpoint,
)
from .regression import family_report, run_all
from .semigroup import ContainmentError, NumericalSemigroup, SemigroupError
from .trace import analyze

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2, 3


class InputError(ValueError):
    pass


def parse_gens(text: str) -> list[int]:
    """``"10..14,17"`` -> ``[10, 11, 12, 13, 14, 17]``."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ".." in part:
                a, b = part.split("..", 1)
                a, b = int(a), int(b)
                if b < a:
                    raise InputError(f"empty range {part!r}")
                out.extend(range(a, b + 1))
            else:
                out.append(int(part))
        except ValueError as exc:
            raise InputError(f"bad generator {part!r}") from exc
    if not out:
        raise InputError("no generators given")
    if min(out) < 1:
        raise InputError("generators must be positive integers")
    return out


def _semigroup(text: str) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(parse_gens(text))


def _flat(v):
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    if v is None:
        return ""
    return v


def render(data, fmt: str) -> str:
    """Render a dict (or list of dicts) as json, csv or an aligned table."""
    rows = data if isinstance(data, list) else [data]
    if fmt == "json":
        return json.dumps(data, indent=None, separators=(",", ":"))
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: _flat(v) for k, v in r.items()})
        return buf.getvalue().rstrip("\n")
    lines = []
    for r in rows:
        width = max(len(k) for k in r)
        lines.extend(f"{k:<{width}}  {_flat(v) if not isinstance(v, dict) else json.dumps(v)}"
                     for k, v in r.items())
        lines.append("")
    return "\n".join(lines).rstrip("\n")


def cmd_analyze(args) -> int:
    H = _semigroup(args.gens)
    print(render(analyze(H).to_dict(), args.format))
    return EXIT_OK


def cmd_trace(args) -> int:
    H = _semigroup(args.gens)
    rep = analyze(H)
    T = rep.trace_set
    out = {
        "minimal_generators": list(H.minimal_generators),
        "trace_generators": list(rep.trace_generators),
        "trace_min": T.min_element,
        "trace_stable_from": T.stable_from,
        "missing_from_h": [x for x in H.small_elements() if x not in T],
        "colength": rep.colength,
    }
    print(render(out, args.format))
    return EXIT_OK


def cmd_bg(args) -> int:
    H = _semigroup(args.gens)
    cands = ()
    if args.candidate:
        cands = (_semigroup(args.candidate),)
    b = bg_bounds(
        H,
        enable_search=not args.no_search,
        d_max=args.d_max,
        node_limit=args.node_limit,
        candidates=cands,
    )
    out = {"minimal_generators": list(H.minimal_generators)}
    out.update(b.to_dict(all_witnesses=args.all_witnesses))
    print(render(out, args.format))
    return EXIT_OK


def cmd_family(args) -> int:
    if args.ell < 0:
        raise InputError("--ell must be nonnegative")
    rep = family_report(args.ell)
    if args.format == "json":
        print(json.dumps(rep, separators=(",", ":")))
    else:
        flat = {
            "ell": rep["ell"],
            "generators": rep["invariants"]["minimal_generators"],
            "colength": rep["invariants"]["colength"],
            "expected_colength": rep["expected_colength"],
            "bg_lower": rep["bg"]["lower"],
            "bg_upper": rep["bg"]["upper"],
            "bg_exact": rep["bg"]["exact"],
            "expected_bg": rep["expected_bg"],
            "candidate": rep["candidate"],
            "ok": rep["ok"],
        }
        print(render(flat, args.format))
    if not rep["ok"]:
        print(f"family({args.ell}) does not reproduce: {json.dumps(rep)}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.max_genus < 0:
        raise InputError("--max-genus must be nonnegative")
    filters = ScanFilters(
        type_eq=args.type_filter,
        only_violations=args.only_violations,
        far_flung_only=args.far_flung_only,
    )
    if args.frontier:
        print(json.dumps(question_a_frontier(args.max_genus, args.threads)))
        return EXIT_OK
    if args.out:
        ckpt = args.checkpoint or args.out + ".ckpt"
        mode = "w"
        if os.path.exists(ckpt) and os.path.exists(args.out):
            trim_to_checkpoint(args.out, read_checkpoint(ckpt))
            mode = "a"
        with open(args.out, mode, encoding="utf-8", newline="\n") as sink:
            summary = scan(args.max_genus, filters, sink, args.threads, ckpt)
        with open(args.out + ".summary.json", "w", encoding="utf-8") as f:
            json.dump(summary.to_dict(), f)
    else:
        summary = scan(args.max_genus, filters, sys.stdout, args.threads)
    print(json.dumps(summary.to_dict()), file=sys.stderr if not args.out else sys.stdout)
    return EXIT_OK


def cmd_verify_examples(args) -> int:
    rows = run_all()
    bad = [r for r in rows if not r["ok"]]
    if args.format == "json":
        print(json.dumps(rows, default=str))
    else:
        width = max(len(r["fixture"]) for r in rows)
        for r in rows:
            status = "ok" if r["ok"] else "FAIL"
            print(f"{r['fixture']:<{width}}  {status}")
        print(f"{len(rows) - len(bad)}/{len(rows)} fixtures reproduce")
    for r in bad:
        print(f"mismatch: {r['fixture']}: expected {r['expected']!r}, got {r['got']!r}",
              file=sys.stderr)
    return EXIT_MISMATCH if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nsg", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({kernels.BACKEND})")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, gens=True):
        if gens:
            sp.add_argument("--gens", required=True, help="e.g. 10..14,17")
        sp.add_argument("--format", choices=["table", "json", "csv"], default="table")

    sp = sub.add_parser("analyze", help="trace invariants of one semigroup")
    common(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("trace", help="trace ideal of the canonical module")
    common(sp)
    sp.set_defaults(func=cmd_trace)

    sp = sub.add_parser("bg", help="bounds on the birational Gorenstein colength")
    common(sp)
    sp.add_argument("--candidate", help="extra symmetric subsemigroup, e.g. 10..14")
    sp.add_argument("--d-max", type=int, default=None)
    sp.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    sp.add_argument("--no-search", action="store_true")
    sp.add_argument("--all-witnesses", action="store_true")
    sp.set_defaults(func=cmd_bg)

    sp = sub.add_parser("family", help="the family with colength 2l+3 and bg l+2")
    common(sp, gens=False)
    sp.add_argument("--ell", type=int, required=True)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("scan", help="enumerate all semigroups up to a genus")
    sp.add_argument("--max-genus", type=int, required=True)
    sp.add_argument("--out", help="JSONL output path (resumable)")
    sp.add_argument("--checkpoint", help="checkpoint path (default OUT.ckpt)")
    sp.add_argument("--only-violations", action="store_true")
    sp.add_argument("--type-filter", type=int, default=None)
    sp.add_argument("--far-flung-only", action="store_true")
    sp.add_argument("--frontier", action="store_true",
                    help="print minimal violations per CM type instead of records")
    sp.add_argument("--threads", type=int, default=int(os.environ.get("NSG_THREADS", "1")))
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("verify-paper", help="reproduce the reference examples")
    sp.add_argument("--format", choices=["table", "json"], default="table")
    sp.set_defaults(func=cmd_verify_examples)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, SemigroupError, ContainmentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ScanInvariantError as exc:
        print(f"assertion failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
