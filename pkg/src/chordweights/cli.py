"""Command-line front end.

Commands: phi, family, table, verify, cf, enumerate, cache, report.  Exit
codes: 0 on success (and all checks passing), 1 when a verification check
fails (the witness is rendered), 2 on usage or parse errors.  The cache path
may come from --cache or the CHORDWEIGHTS_CACHE environment variable.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import cfractions as cf
from . import identities as idn
from . import weights as wt
from .diagrams import (
    BadIndex,
    BoundExceeded,
    ChordDiagram,
    DEFAULT_ENUM_BOUND,
    MalformedPairing,
    enumerate_diagrams,
    make_A,
    make_B,
    make_Dn,
)
from .genocchi import KrewerasIntTriangle, normalized_h, seidel
from .kreweras_poly import K_table
from .polyring import IntPoly, NonIntegerResult

CACHE_ENV = "CHORDWEIGHTS_CACHE"

USAGE_ERROR = 2
CHECK_FAILURE = 1


class CliError(Exception):
    """Usage-level error: rendered to stderr, exit code 2."""


def _parse_diagram(text: str) -> ChordDiagram:
    text = text.strip()
    try:
        if text.startswith("["):
            return ChordDiagram.from_json(text)
        return ChordDiagram.parse_text(text)
    except (MalformedPairing, json.JSONDecodeError) as exc:
        raise CliError(f"cannot parse diagram {text!r}: {exc}") from exc


def _csv_line(row: list) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerow(row)
    return buf.getvalue().rstrip("\n")


def _emit_poly(p: IntPoly, fmt: str, label: dict | None = None) -> str:
    if fmt == "json":
        obj = dict(label or {})
        obj["coefficients"] = p.to_json_coeffs()
        obj["text"] = p.to_text()
        return json.dumps(obj)
    if fmt == "csv":
        return _csv_line(list(p.to_json_coeffs()))
    return p.to_text()


def _open_cache(args) -> tuple[wt.WeightCache, str | None]:
    path = args.cache or os.environ.get(CACHE_ENV)
    cache = wt.WeightCache()
    if path and os.path.exists(path):
        _, rejected = cache.load(path)
        if rejected:
            print(f"warning: {rejected} corrupt cache line(s) ignored", file=sys.stderr)
    return cache, path


def _close_cache(cache: wt.WeightCache, path: str | None) -> None:
    if path:
        cache.save(path)


# -- subcommand handlers ---------------------------------------------------------


def cmd_phi(args) -> int:
    d = _parse_diagram(args.pairs)
    cache, path = _open_cache(args)
    try:
        value = wt.phi(d, cache) if args.lam == 2 else wt.phi_lambda(d, args.lam, cache)
    except NonIntegerResult as exc:
        raise CliError(str(exc)) from exc
    _close_cache(cache, path)
    if args.figure:
        from .plots import save_diagram

        save_diagram(d, args.figure, title=value.to_text())
    print(_emit_poly(value, args.format, {"diagram": d.to_text(), "lam": args.lam}))
    return 0


def cmd_family(args) -> int:
    cache, path = _open_cache(args)
    kind = args.kind
    try:
        value = wt.family_weight(kind, args.n, args.k, cache=cache)
    except BadIndex as exc:
        raise CliError(str(exc)) from exc
    _close_cache(cache, path)
    label = {"family": kind, "n": args.n}
    if kind != "D":
        label["k"] = args.k
    print(_emit_poly(value, args.format, label))
    return 0


def _seidel_layout(rows_arg: int) -> list[list[int]]:
    tri = seidel(rows_arg)
    return [tri.column(i) for i in range(1, rows_arg + 1)]


def cmd_table(args) -> int:
    name = args.name
    n = args.rows
    if n < 1:
        raise CliError("--rows must be positive")
    if name == "seidel":
        columns = _seidel_layout(n)
        if args.format == "json":
            print(json.dumps({"triangle": "seidel", "rows": columns}))
        elif args.format == "csv":
            for col in columns:
                print(_csv_line(col))
        else:
            height = max(len(c) for c in columns)
            width = max(len(str(v)) for c in columns for v in c)
            for j in range(height, 0, -1):
                cells = [
                    str(col[j - 1]).rjust(width) if j <= len(col) else " " * width
                    for col in columns
                ]
                print(f"{j:>2} | " + " ".join(cells))
            print("---+" + "-" * ((width + 1) * len(columns)))
            print("j/i| " + " ".join(str(i).rjust(width) for i in range(1, n + 1)))
        return 0
    if name == "kreweras":
        tri = KrewerasIntTriangle(n)
        rows = [tri.row(i) for i in range(1, n + 1)]
        if args.format == "json":
            print(json.dumps({"triangle": "kreweras", "rows": rows}))
        elif args.format == "csv":
            for row in rows:
                print(_csv_line(row))
        else:
            rendered = [" ".join(str(v) for v in row) for row in rows]
            span = len(rendered[-1])
            for line in rendered:
                print(line.center(span).rstrip())
        return 0
    if name == "K":
        table = K_table(n)
        rows = [[p.to_text() for p in table.row(i)] for i in range(1, n + 1)]
        if args.format == "json":
            print(json.dumps({"triangle": "K", "rows": rows}))
        elif args.format == "csv":
            for row in rows:
                print(_csv_line(row))
        else:
            for i, row in enumerate(rows, start=1):
                print(f"n={i}: " + " | ".join(row))
        return 0
    raise CliError(f"unknown table {name!r}")


def _run_reports(args, include_conj2: bool) -> list[idn.CheckReport]:
    tables_n = max(args.tables_n, args.max_n)
    ws = idn.Workspace(n_max_weights=args.max_n, n_max_tables=tables_n)
    if args.threads > 1:
        tasks = idn.verification_tasks(args.max_n, tables_n, include_conj2, ws)
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            return list(pool.map(lambda fn: fn(), tasks))
    return idn.full_report(args.max_n, tables_n, include_conj2, ws)


def _render_reports(reports: list[idn.CheckReport], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(idn.reports_to_json(reports)))
        return
    if fmt == "csv":
        print(_csv_line(["name", "params", "status", "millis", "witness"]))
        for r in reports:
            print(
                _csv_line(
                    [
                        r.name,
                        json.dumps(r.params),
                        r.status,
                        f"{r.millis:.3f}",
                        json.dumps(r.witness) if r.witness else "",
                    ]
                )
            )
        return
    for r in reports:
        params = " ".join(f"{k}={v}" for k, v in r.params.items())
        print(f"{r.status.upper():4} {r.name} {params} ({r.millis:.1f} ms)")
        if r.witness:
            print(f"     witness: {json.dumps(r.witness)}")
    failures = sum(1 for r in reports if not r.ok)
    print(f"{len(reports)} checks, {failures} failure(s)")


def cmd_verify(args) -> int:
    include_conj2 = "conj2" in (args.include or [])
    reports = _run_reports(args, include_conj2)
    _render_reports(reports, args.format)
    return 0 if all(r.ok for r in reports) else CHECK_FAILURE


def cmd_cf(args) -> int:
    order = args.order
    if order < 0:
        raise CliError("--order must be nonnegative")
    if args.weights == "conj2":
        b, lam = cf.conj2_weights()
        series = cf.jfraction_series(cf.JFractionSpec(b, lam, order))
    elif args.weights == "unit":
        b, lam = cf.unit_weights()
        series = cf.jfraction_series(cf.JFractionSpec(b, lam, order))
    else:  # hn
        series = cf.sfraction_series(cf.hn_sfraction_coeffs(order + 1), order)
    if args.format == "json":
        rows = [
            {"n": n, "coefficients": p.to_json_coeffs()}
            for n, p in enumerate(series.terms)
        ]
        print(json.dumps(rows))
    elif args.format == "csv":
        for n, p in enumerate(series.terms):
            print(_csv_line([n] + list(p.to_json_coeffs())))
    else:
        for n, p in enumerate(series.terms):
            print(f"t^{n}: {p.to_text()}")
    return 0


def cmd_enumerate(args) -> int:
    try:
        diagrams = list(enumerate_diagrams(args.n, max_n=args.bound))
    except (BoundExceeded, BadIndex) as exc:
        raise CliError(str(exc)) from exc
    if args.format == "json":
        print(json.dumps([[list(p) for p in d.to_pairs()] for d in diagrams]))
    elif args.format == "csv":
        for d in diagrams:
            print(_csv_line([d.to_text()]))
    else:
        for d in diagrams:
            print(d.to_text())
    return 0


def cmd_cache(args) -> int:
    cache, path = _open_cache(args)
    action = args.action
    if action == "stats":
        stats = cache.stats()
        stats["path"] = path
        if args.format == "json":
            print(json.dumps(stats))
        else:
            for key, value in stats.items():
                print(f"{key}: {value}")
        return 0
    if action == "export":
        if not args.path:
            raise CliError("cache export needs a destination path")
        if args.warm_n:
            for n in range(1, args.warm_n + 1):
                wt.family_weight("D", n, cache=cache)
                for k in range(0, n):
                    wt.family_weight("A", n, k, cache=cache)
                    wt.family_weight("B", n, k, cache=cache)
        count = cache.save(args.path)
        print(f"exported {count} entries to {args.path}")
        _close_cache(cache, path)
        return 0
    if action == "import":
        if not args.path:
            raise CliError("cache import needs a source path")
        if not os.path.exists(args.path):
            raise CliError(f"no such cache file: {args.path}")
        loaded, rejected = cache.load(args.path)
        print(f"imported {loaded} entries ({rejected} rejected)")
        if not path:
            raise CliError("no destination cache; set --cache or " + CACHE_ENV)
        _close_cache(cache, path)
        return 0
    raise CliError(f"unknown cache action {action!r}")


def cmd_report(args) -> int:
    from . import plots

    outdir = args.out_dir
    os.makedirs(outdir, exist_ok=True)
    include_conj2 = "conj2" in (args.include or [])
    reports = _run_reports(args, include_conj2)

    with open(os.path.join(outdir, "verify.csv"), "w", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["name", "params", "status", "millis", "witness"])
        for r in reports:
            writer.writerow(
                [
                    r.name,
                    json.dumps(r.params),
                    r.status,
                    f"{r.millis:.3f}",
                    json.dumps(r.witness) if r.witness else "",
                ]
            )
    with open(os.path.join(outdir, "verify.json"), "w", encoding="utf-8") as fh:
        json.dump(idn.reports_to_json(reports), fh, indent=2)

    tri = seidel(2 * args.max_n + 4)
    rows_n = max(args.max_n, 6)
    hexpected = [normalized_h(n - 1, tri) for n in range(2, args.max_n + 1)]
    cache = wt.WeightCache()
    coeffs = [
        wt.family_weight("D", n, cache=cache).coeff(1) for n in range(2, args.max_n + 1)
    ]
    figures = [
        plots.save_diagram(
            make_Dn(args.max_n),
            os.path.join(outdir, "diagram_all_crossing.png"),
            title=f"All-crossing diagram, n = {args.max_n}",
        ),
        plots.save_triangle(
            [seidel(9).column(i) for i in range(1, 10)],
            os.path.join(outdir, "seidel_triangle.png"),
            "Seidel triangle (columns 1-9)",
            centered=False,
        ),
        plots.save_triangle(
            [KrewerasIntTriangle(rows_n).row(i) for i in range(1, rows_n + 1)],
            os.path.join(outdir, "kreweras_triangle.png"),
            f"Kreweras triangle (rows 1-{rows_n})",
        ),
        plots.save_linear_bridge(
            list(range(2, args.max_n + 1)),
            coeffs,
            hexpected,
            os.path.join(outdir, "linear_coefficient_bridge.png"),
        ),
        plots.save_check_summary(
            [r.name + " " + json.dumps(r.params) for r in reports],
            [r.millis for r in reports],
            [r.status for r in reports],
            os.path.join(outdir, "check_timings.png"),
        ),
    ]
    failures = sum(1 for r in reports if not r.ok)
    print(f"wrote {os.path.join(outdir, 'verify.csv')} and {len(figures)} figure(s)")
    print(f"{len(reports)} checks, {failures} failure(s)")
    return 0 if failures == 0 else CHECK_FAILURE


# -- argument parsing --------------------------------------------------------------


def _common_flags(suppress: bool) -> argparse.ArgumentParser:
    # The subparser copies suppress their defaults so that flags given before
    # the subcommand are not clobbered when the subparser merges namespaces.
    def dflt(value):
        return argparse.SUPPRESS if suppress else value

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default=dflt("text"))
    common.add_argument("--cache", default=dflt(None), help=f"cache file (default: ${CACHE_ENV})")
    common.add_argument("--threads", type=int, default=dflt(1))
    common.add_argument(
        "--bound",
        type=int,
        default=dflt(DEFAULT_ENUM_BOUND),
        help="enumeration bound for exhaustive streams",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordweights",
        description="Exact weight-system computations on chord diagrams",
        parents=[_common_flags(suppress=False)],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_flags(suppress=True)

    def add_parser(name: str, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("phi", help="weight polynomial of a diagram")
    p.add_argument("pairs", help='diagram as "1-4,2-5,3-6" or JSON [[1,4],...]')
    p.add_argument("--lam", type=int, default=2, help="weight-system scale (default 2)")
    p.add_argument("--figure", help="also draw the diagram to this file")
    p.set_defaults(handler=cmd_phi)

    p = add_parser("family", help="named family weights")
    p.add_argument("kind", choices=["D", "A", "B"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.set_defaults(handler=cmd_family)

    p = add_parser("table", help="print a triangle table")
    p.add_argument("name", choices=["seidel", "kreweras", "K"])
    p.add_argument("--rows", type=int, required=True)
    p.set_defaults(handler=cmd_table)

    p = add_parser("verify", help="run the identity checks")
    p.add_argument("--max-n", type=int, default=6, dest="max_n")
    p.add_argument("--tables-n", type=int, default=10, dest="tables_n")
    p.add_argument("--include", action="append", choices=["conj2"])
    p.set_defaults(handler=cmd_verify)

    p = add_parser("cf", help="continued-fraction series table")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--weights", choices=["conj2", "unit", "hn"], default="conj2")
    p.set_defaults(handler=cmd_cf)

    p = add_parser("enumerate", help="all diagrams of an order")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_enumerate)

    p = add_parser("cache", help="cache management")
    p.add_argument("action", choices=["stats", "export", "import"])
    p.add_argument("path", nargs="?")
    p.add_argument("--warm-n", type=int, default=0, dest="warm_n")
    p.set_defaults(handler=cmd_cache)

    p = add_parser("report", help="verification report with figures")
    p.add_argument("--out-dir", required=True, dest="out_dir")
    p.add_argument("--max-n", type=int, default=5, dest="max_n")
    p.add_argument("--tables-n", type=int, default=10, dest="tables_n")
    p.add_argument("--include", action="append", choices=["conj2"])
    p.set_defaults(handler=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be positive")
    try:
        return args.handler(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (BoundExceeded, BadIndex, MalformedPairing) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
