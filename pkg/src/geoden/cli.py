"""geoden command line: validate data files, run queries to JSON/CSV, and
launch the HTTP service.

Exit codes: 0 success, 1 validation found rejected rows, 2 fatal error
(unreadable input, bad flags, busy port).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import socket
import sys
from pathlib import Path

from . import payloads
from .ingest import (
    IngestError,
    Snapshot,
    bundled_data_dir,
    load_data_dir,
    load_gazetteer,
    load_suitability_grid,
    parse_reports,
)
from .model import Source
from .payloads import RequestError

EXIT_OK = 0
EXIT_REJECTS = 1
EXIT_FATAL = 2

DATA_DIR_ENV = "GEODEN_DATA_DIR"

QUERY_KINDS = ("reports", "centroids", "trajectories", "cooccurrence", "timeline")

#: payload field prefixes -> the CLI flag to blame in error messages
_FIELD_FLAGS = (
    ("regions", "--regions"),
    ("serotypes", "--serotypes"),
    ("window", "--years"),
    ("combinations", "--combos"),
    ("mode", "--mode"),
    ("serotype", "--serotype"),
)


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_FATAL


def _flag_for(field: str | None) -> str | None:
    if field is None:
        return None
    for prefix, flag in _FIELD_FLAGS:
        if field.startswith(prefix):
            return flag
    return None


def _resolve_data_dir(arg: str | None) -> Path:
    if arg:
        return Path(arg)
    env = os.environ.get(DATA_DIR_ENV)
    if env:
        return Path(env)
    return bundled_data_dir()


def _load_snapshot(arg: str | None) -> Snapshot:
    data_dir = _resolve_data_dir(arg)
    if not data_dir.is_dir():
        raise IngestError(f"data directory not found: {data_dir}")
    snapshot, _ = load_data_dir(data_dir)
    return snapshot


# ---- validate ----


def _print_diagnostics(label: str, diag) -> None:
    print(f"{label}: accepted {diag.accepted}, rejected {len(diag.rejected)}")
    for row, reason in diag.rejected[:20]:
        print(f"  row {row}: {reason}")
    if len(diag.rejected) > 20:
        print(f"  ... and {len(diag.rejected) - 20} more")


def cmd_validate(args: argparse.Namespace) -> int:
    gazetteer_path = Path(args.gazetteer) if args.gazetteer else bundled_data_dir() / "gazetteer.json"
    try:
        gazetteer = load_gazetteer(gazetteer_path)
    except IngestError as exc:
        return _fail(str(exc))

    rejects = 0
    try:
        _, diag = parse_reports(Path(args.reports), Source.CORE, gazetteer)
        _print_diagnostics("reports", diag)
        rejects += len(diag.rejected)
        if args.supplement:
            _, diag = parse_reports(Path(args.supplement), Source.SUPPLEMENT, gazetteer)
            _print_diagnostics("supplement", diag)
            rejects += len(diag.rejected)
        if args.grid:
            grid = load_suitability_grid(Path(args.grid))
            print(f"grid: {grid.n_rows}x{grid.n_cols} cells, cell size {grid.cell_size}")
    except IngestError as exc:
        return _fail(str(exc))
    return EXIT_REJECTS if rejects else EXIT_OK


# ---- query ----


def _parse_years(arg: str | None) -> dict | None:
    if arg is None:
        return None
    parts = arg.split(":")
    try:
        a, b = (int(p) for p in parts)
    except ValueError:
        raise RequestError("--years must look like 1970:1979", field="window")
    if a > b:
        raise RequestError(f"--years range is inverted: {arg}", field="window")
    return {"current_year": b, "interval_length": b - a + 1}


def _parse_regions(arg: str | None) -> list[dict] | None:
    if arg is None:
        return None
    if arg.startswith("@"):
        path = Path(arg[1:])
        try:
            entries = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, ValueError) as exc:
            raise RequestError(f"cannot read region file {path}: {exc}", field="regions")
        if not isinstance(entries, list):
            raise RequestError("region file must hold a JSON list", field="regions")
        return entries
    return [{"name": name.strip()} for name in arg.split(",") if name.strip()]


def _parse_serotypes(arg: str | None) -> list[str] | None:
    if arg is None:
        return None
    return [token.strip() for token in arg.split(",") if token.strip()]


def _parse_combos(arg: str | None):
    if arg is None or arg == "all":
        return "all"
    return [combo.split("+") for combo in arg.split(",") if combo]


def _query_payload(snapshot: Snapshot, args: argparse.Namespace) -> dict:
    context = payloads.build_context(
        snapshot,
        regions=_parse_regions(args.regions),
        window=_parse_years(args.years),
        serotypes=_parse_serotypes(args.serotypes),
    )
    kind = args.kind
    if kind == "reports":
        return payloads.reports_payload(snapshot, context)
    if kind == "centroids":
        mode = args.mode.replace("-", "_")
        return payloads.centroids_payload(snapshot, context, mode=mode)
    if kind == "trajectories":
        return payloads.trajectories_payload(snapshot, context, serotype=args.serotype)
    if kind == "cooccurrence":
        return payloads.cooccurrence_payload(snapshot, context, _parse_combos(args.combos))
    return payloads.timeline_payload(snapshot, context)


def _to_csv(kind: str, payload: dict) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if kind == "reports":
        writer.writerow(
            ["id", "latitude", "longitude", "country", "year", "serotypes", "source",
             "glyph_sections", "glyph_radius_px"]
        )
        for r in payload["reports"]:
            writer.writerow(
                [r["id"], r["latitude"], r["longitude"], r["country"], r["year"],
                 "+".join(r["serotypes"]), r["source"],
                 "+".join(r["glyph"]["sections"]), r["glyph"]["radius_px"]]
            )
    elif kind == "centroids":
        writer.writerow(["region", "serotype", "latitude", "longitude", "report_count"])
        for c in payload["centroids"]:
            writer.writerow([c["region"], c["serotype"], c["latitude"], c["longitude"], c["report_count"]])
    elif kind == "trajectories":
        writer.writerow(["region", "serotype", "year", "latitude", "longitude"])
        for t in payload["trajectories"]:
            for v in t["vertices"]:
                writer.writerow([t["region"], t["serotype"], v["year"], v["latitude"], v["longitude"]])
    elif kind == "cooccurrence":
        writer.writerow(
            ["serotypes", "mask", "exact_count", "superset_count", "exact_proportion", "superset_proportion"]
        )
        for c in payload["combinations"]:
            writer.writerow(
                ["+".join(c["serotypes"]), c["mask"], c["exact_count"], c["superset_count"],
                 c["exact_proportion"], c["superset_proportion"]]
            )
    else:  # timeline: one row per (region, serotype, year)
        writer.writerow(["region", "serotype", "year", "count"])
        for row in payload["rows"]:
            for year, count in zip(payload["years"], row["counts"]):
                writer.writerow([row["region"], row["serotype"], year, count])
    return out.getvalue()


def cmd_query(args: argparse.Namespace) -> int:
    try:
        snapshot = _load_snapshot(args.data_dir)
    except IngestError as exc:
        return _fail(str(exc))
    try:
        payload = _query_payload(snapshot, args)
    except RequestError as exc:
        flag = _flag_for(exc.field)
        prefix = f"{flag}: " if flag else ""
        return _fail(f"{prefix}{exc}")

    if args.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        text = _to_csv(args.kind, payload)

    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---- serve ----


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    data_dir = _resolve_data_dir(args.data_dir)
    if not data_dir.is_dir():
        return _fail(f"data directory not found: {data_dir}")
    regions_file = args.regions_file
    if regions_file is None and not args.data_dir and not os.environ.get(DATA_DIR_ENV):
        # keep the packaged data directory read-only
        regions_file = Path.home() / ".geoden" / "regions.json"

    try:
        app = create_app(data_dir=data_dir, regions_file=regions_file, static_dir=args.static_dir)
    except IngestError as exc:
        return _fail(str(exc))

    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        sock.bind((args.host, args.port))
    except OSError as exc:
        sock.close()
        return _fail(f"cannot bind {args.host}:{args.port}: {exc}")
    host, port = sock.getsockname()[:2]
    print(f"serving on http://{host}:{port}", flush=True)

    config = uvicorn.Config(app, log_level="warning")
    server = uvicorn.Server(config)
    server.run(sockets=[sock])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geoden",
        description="Explore global dengue serotype case reports in space and time.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="parse and validate data files")
    p_validate.add_argument("--reports", required=True, help="core reports CSV")
    p_validate.add_argument("--supplement", help="supplement reports CSV")
    p_validate.add_argument("--grid", help="suitability raster (ESRI ASCII grid)")
    p_validate.add_argument("--gazetteer", help="gazetteer JSON (default: bundled)")
    p_validate.set_defaults(func=cmd_validate)

    p_query = sub.add_parser("query", help="run a query and write JSON or CSV")
    p_query.add_argument("kind", choices=QUERY_KINDS)
    p_query.add_argument("--data-dir", help=f"data directory (default: ${DATA_DIR_ENV} or bundled)")
    p_query.add_argument("--years", help="inclusive year range A:B (default: full span)")
    p_query.add_argument("--regions", help="comma-separated region names, or @regions.json")
    p_query.add_argument("--serotypes", help="comma-separated serotypes, e.g. d1,d3 (default: all)")
    p_query.add_argument("--format", choices=("json", "csv"), default="json")
    p_query.add_argument("--out", help="output path (default: stdout)")
    p_query.add_argument("--mode", choices=("all", "per-serotype", "per_serotype"), default="all",
                         help="centroids: one per region, or one per region and serotype")
    p_query.add_argument("--serotype", default="all",
                         help="trajectories: all, each, or a single serotype")
    p_query.add_argument("--combos", default="all",
                         help="cooccurrence: 'all' or combos like d1+d2,d3")
    p_query.set_defaults(func=cmd_query)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000, help="0 picks an ephemeral port")
    p_serve.add_argument("--data-dir", help=f"data directory (default: ${DATA_DIR_ENV} or bundled)")
    p_serve.add_argument("--static-dir", help="serve this directory at / (web UI build)")
    p_serve.add_argument("--regions-file", help="region store path (default: <data-dir>/regions.json)")
    p_serve.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
