"""Command-line interface.

Inputs are either an edge-list file or a family spec ``name:args``:

    complete:N  friendship:N  book:N  kmn:M,N  corona-empty:NG,M
    path:N  cycle:N  star:N  empty:N

Families with a closed form never enumerate, so they work beyond the cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import closed_forms as cf
from . import graph as gr
from .enumeration import total_domination_polynomial
from .errors import InputError, ResourceError
from .graph import CAP_ENV_VAR, Graph
from .polynomial import Polynomial, is_unimodal
from .roots import check_disc_bound, find_roots, fmt_float
from .verify import default_config, load_config, reports_to_jsonl, run_campaign, summarize

CSV_HEADER = ["param", "re", "im", "multiplicity", "residual"]

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def _ints(args: str, count: int, name: str) -> list[int]:
    try:
        values = [int(a) for a in args.split(",")]
    except ValueError:
        raise InputError(f"{name}: arguments must be integers, got {args!r}") from None
    if len(values) != count:
        raise InputError(f"{name}: expected {count} argument(s), got {len(values)}")
    return values


# family -> (argument count, graph builder, closed form or None)
FAMILIES = {
    "complete": (1, gr.complete, lambda n: cf.dt_complete(n) if n >= 2 else None),
    "friendship": (1, gr.friendship, lambda n: cf.dt_friendship(n) if n >= 2 else None),
    "book": (1, gr.book, lambda n: cf.dt_book(n) if n >= 2 else None),
    "kmn": (2, gr.complete_bipartite, cf.dt_complete_bipartite),
    "corona-empty": (2, lambda n, m: gr.corona(gr.complete(n), gr.empty_graph(m)),
                     lambda n, m: cf.dt_corona_empty(n, m) if n >= 2 else None),
    "path": (1, gr.path, None),
    "cycle": (1, gr.cycle, None),
    "star": (1, gr.star, None),
    "empty": (1, gr.empty_graph, None),
}


def resolve_input(spec: str) -> tuple[str, Graph, Polynomial]:
    """Graph and D_t for a family spec or an edge-list path."""
    name, sep, args = spec.partition(":")
    if sep and name in FAMILIES:
        count, build, formula = FAMILIES[name]
        values = _ints(args, count, name)
        g = build(*values)
        p = formula(*values) if formula is not None else None
        if p is None:
            p = total_domination_polynomial(g)
        return spec, g, p
    if sep and not Path(spec).exists():
        raise InputError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}")
    g = gr.read_edge_list(spec)
    return spec, g, total_domination_polynomial(g)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _csv_text(rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)
    return buf.getvalue()


def root_rows(param: str, p: Polynomial) -> list[list]:
    rs = find_roots(p)
    rows = []
    if rs.zero_multiplicity:
        rows.append([param, fmt_float(0.0), fmt_float(0.0), rs.zero_multiplicity, fmt_float(0.0)])
    for r in rs.roots:
        rows.append([param, fmt_float(r.value.real), fmt_float(r.value.imag),
                     r.multiplicity, fmt_float(r.residual)])
    return rows


# ---------------------------------------------------------------------------
# subcommands


def cmd_poly(args) -> int:
    label, g, p = resolve_input(args.input)
    coeffs = list(p.coeffs) + [0] * (g.n + 1 - len(p.coeffs))
    gamma = next((i for i, c in enumerate(coeffs) if c), None)
    total = sum(coeffs)
    unimodal, mode = is_unimodal(p) if not p.is_zero() else (None, None)
    if args.format == "json":
        doc = {"input": label, "n": g.n, "coeffs": [str(c) for c in coeffs],
               "gamma_t": gamma, "total": str(total), "unimodal": unimodal, "mode": mode}
        text = json.dumps(doc, sort_keys=True) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "d_t"])
        w.writerows([i, c] for i, c in enumerate(coeffs))
        text = buf.getvalue()
    else:
        width = max(len(str(c)) for c in coeffs)
        lines = [f"# {label}  (n={g.n})", f"{'i':>4}  {'d_t(G,i)':>{width}}"]
        lines += [f"{i:>4}  {c:>{width}}" for i, c in enumerate(coeffs)]
        lines.append(f"gamma_t: {gamma if gamma is not None else 'none'}")
        lines.append(f"total dominating sets: {total}")
        verdict = "n/a" if unimodal is None else ("yes" if unimodal else "no")
        lines.append(f"unimodal: {verdict}" + (f" (mode {mode})" if unimodal else ""))
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_roots(args) -> int:
    label, g, p = resolve_input(args.input)
    if p.is_zero():
        raise InputError(f"{label}: D_t is the zero polynomial (isolated vertex); no root set")
    report = check_disc_bound(g, name=label, dt=p) if args.check_disc else None
    if args.format == "csv":
        text = _csv_text(root_rows(label, p))
        if report is not None:
            print(f"disc bound: {report.status} (radius {fmt_float(report.metrics['radius'])}, "
                  f"max |z+1| {fmt_float(report.metrics['max_abs_z_plus_1'])})", file=sys.stderr)
    else:
        doc = find_roots(p).to_dict()
        doc["input"] = label
        if report is not None:
            doc["disc_check"] = report.to_dict()
        text = json.dumps(doc, sort_keys=True) + "\n"
    _emit(text, args.out)
    if report is not None and report.status == "fail":
        return EXIT_CHECK_FAILED
    return EXIT_OK


SWEEP_FAMILIES = ("complete", "friendship", "book", "kmn")


def parse_range(text: str) -> tuple[int, int]:
    for sep in ("..", ":", "-"):
        if sep in text:
            lo, _, hi = text.partition(sep)
            try:
                lo_i, hi_i = int(lo), int(hi)
            except ValueError:
                break
            if lo_i > hi_i:
                raise InputError(f"empty range {text!r}")
            return lo_i, hi_i
    raise InputError(f"range must look like LO..HI, got {text!r}")


def sweep_polynomials(family: str, lo: int, hi: int) -> list[tuple[str, Polynomial]]:
    """(param, D_t) across a family; parameters whose D_t is zero are skipped."""
    if family not in SWEEP_FAMILIES:
        raise InputError(f"unknown sweep family {family!r}; choose from {', '.join(SWEEP_FAMILIES)}")
    out = []
    if family == "kmn":
        for m in range(lo, hi + 1):
            for n in range(max(m, lo), hi + 1):
                out.append((f"{m},{n}", cf.dt_complete_bipartite(m, n)))
        return out
    _, build, formula = FAMILIES[family]
    for n in range(lo, hi + 1):
        p = formula(n)
        if p is None:
            p = total_domination_polynomial(build(n))
        if not p.is_zero():
            out.append((str(n), p))
    return out


def sweep_rows(family: str, lo: int, hi: int) -> list[list]:
    rows = []
    for param, p in sweep_polynomials(family, lo, hi):
        if p.degree >= 1:
            rows += root_rows(param, p)
    return rows


def cmd_sweep(args) -> int:
    lo, hi = parse_range(args.range)
    rows = sweep_rows(args.family, lo, hi)
    _emit(_csv_text(rows), args.out)
    if args.svg or args.png:
        if not args.out:
            raise InputError("--svg/--png need --out to name the figure files")
        from .plotting import roots_png, roots_svg

        points = [(r[0], float(r[1]), float(r[2]), int(r[3])) for r in rows]
        title = f"total domination roots: {args.family} {lo}..{hi}"
        stem = Path(args.out).with_suffix("")
        if args.svg:
            Path(f"{stem}.svg").write_text(roots_svg(points, title), encoding="utf-8")
        if args.png:
            roots_png(points, f"{stem}.png", title)
    return EXIT_OK


def cmd_check(args) -> int:
    config = load_config(args.config) if args.config else default_config()
    if args.seed is not None:
        config = dict(config, seed=args.seed)
    reports = run_campaign(config)
    _emit(reports_to_jsonl(reports), args.out)
    summary = summarize(reports)
    counts = ", ".join(f"{k}={v}" for k, v in sorted(summary.by_status.items()))
    print(f"{summary.total} reports ({counts})", file=sys.stderr)
    for tag in summary.theorem_failures:
        print(f"THEOREM FAIL {tag}", file=sys.stderr)
    for tag in summary.conjecture_failures:
        print(f"conjecture counterexample {tag}", file=sys.stderr)
    return EXIT_OK if summary.ok else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="totaldom",
        description="Total domination polynomials: counts, closed forms, roots, theorem checks.",
        epilog=__doc__.split("\n\n", 1)[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--cap", type=int, default=None,
                        help=f"enumeration cap (default ${CAP_ENV_VAR} or 26)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="coefficients, gamma_t, count and unimodality")
    p.add_argument("input", help="family spec (e.g. friendship:5) or edge-list file")
    p.add_argument("--format", choices=["json", "table", "csv"], default="table")
    p.add_argument("--out", help="write to PATH instead of stdout")
    p.set_defaults(func=cmd_poly)

    r = sub.add_parser("roots", help="complex roots with multiplicities")
    r.add_argument("input")
    r.add_argument("--format", choices=["json", "csv"], default="json")
    r.add_argument("--out")
    r.add_argument("--check-disc", action="store_true",
                   help="append the |z+1| <= (2^n-1)^(1/delta) verdict")
    r.set_defaults(func=cmd_roots)

    s = sub.add_parser("sweep", help="root loci across a family (CSV, optional figures)")
    s.add_argument("family", choices=SWEEP_FAMILIES)
    s.add_argument("range", help="LO..HI (kmn: all LO <= m <= n <= HI)")
    s.add_argument("--out", help="CSV path; figures are written next to it")
    s.add_argument("--svg", action="store_true", help="also write STEM.svg")
    s.add_argument("--png", action="store_true", help="also write STEM.png (needs matplotlib)")
    s.set_defaults(func=cmd_sweep)

    c = sub.add_parser("check", help="run a verification campaign, JSON lines out")
    c.add_argument("config", nargs="?", help="campaign JSON (default: every check)")
    c.add_argument("--out")
    c.add_argument("--seed", type=int, default=None)
    c.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    previous = os.environ.get(CAP_ENV_VAR)
    if args.cap is not None:
        os.environ[CAP_ENV_VAR] = str(args.cap)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"totaldom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"totaldom: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"totaldom: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        # main() is also called in-process (tests, notebooks); do not leak the cap
        if args.cap is not None:
            if previous is None:
                os.environ.pop(CAP_ENV_VAR, None)
            else:
                os.environ[CAP_ENV_VAR] = previous


if __name__ == "__main__":
    sys.exit(main())
