"""JSON-native payload builders shared by the HTTP service and the CLI.

Every function returns plain dicts/lists/scalars in a fixed key and element
order, so serialized output is byte-stable for fixed inputs and the CLI
emits exactly what the corresponding endpoint would.
"""
from __future__ import annotations

from typing import Any, Mapping, Sequence

from .analytics import (
    DEFAULT_GLYPH_RADII,
    GeoPoint,
    centroid,
    classify_suitability,
    cooccurrence,
    filter_reports,
    glyph_spec,
    serotype_centroids,
    suitability_at,
    timeline,
    trajectory,
)
from .ingest import Snapshot, SuitabilityGrid
from .model import (
    ALL_SEROTYPES,
    SEROTYPES,
    Region,
    RegionTree,
    SelectionContext,
    Serotype,
    YearWindow,
    enumerate_combinations,
    resolve_window,
)


class RequestError(Exception):
    """Invalid query input, carrying the machine-readable error triple."""

    def __init__(self, message: str, *, code: str = "invalid_request",
                 field: str | None = None, status: int = 400):
        super().__init__(message)
        self.code = code
        self.field = field
        self.status = status

    def to_payload(self) -> dict[str, Any]:
        return {"code": self.code, "field": self.field, "message": str(self)}


def build_regions(tree: RegionTree, raw: Sequence[Mapping[str, Any]] | None) -> tuple[Region, ...]:
    """Regions from request entries: either explicit country lists or preset
    names resolved against the gazetteer tree (continent, subcontinent,
    country name or code). None means the default continent regions."""
    if raw is None:
        return tree.default_regions()
    universe = tree.all_countries()
    regions: list[Region] = []
    seen: set[str] = set()
    for i, entry in enumerate(raw):
        name = entry.get("name")
        if not name or not isinstance(name, str):
            raise RequestError("region name is required", field=f"regions[{i}].name")
        if name in seen:
            raise RequestError(f"duplicate region name {name!r}", field=f"regions[{i}].name")
        seen.add(name)
        countries = entry.get("countries")
        if countries:
            codes = []
            for j, raw_code in enumerate(countries):
                code = str(raw_code).upper()
                if code not in universe:
                    raise RequestError(
                        f"unknown country code {raw_code!r}",
                        code="unknown_country",
                        field=f"regions[{i}].countries[{j}]",
                        status=422,
                    )
                codes.append(code)
            resolved = frozenset(codes)
        else:
            preset = tree.resolve(name)
            if preset is None:
                raise RequestError(
                    f"unknown region {name!r}",
                    code="unknown_region",
                    field=f"regions[{i}].name",
                    status=422,
                )
            resolved = preset
        regions.append(
            Region(
                name=name,
                countries=resolved,
                visible=bool(entry.get("visible", True)),
                shade=i % 4,
            )
        )
    return tuple(regions)


def build_serotypes(raw: Sequence[str] | None) -> frozenset[Serotype]:
    if raw is None:
        return ALL_SEROTYPES
    parsed = []
    for i, token in enumerate(raw):
        try:
            parsed.append(Serotype.parse(token))
        except ValueError as exc:
            raise RequestError(str(exc), field=f"serotypes[{i}]")
    return frozenset(parsed)


def build_window(snapshot: Snapshot, raw: Mapping[str, Any] | None) -> YearWindow:
    meta = snapshot.meta
    if raw is None:
        span = meta.year_max - meta.year_min + 1
        return resolve_window(meta.year_max, span, meta.year_min, meta.year_max)
    try:
        return resolve_window(
            int(raw["current_year"]), int(raw["interval_length"]), meta.year_min, meta.year_max
        )
    except KeyError as exc:
        raise RequestError(f"window is missing {exc.args[0]}", field=f"window.{exc.args[0]}")
    except (TypeError, ValueError) as exc:
        raise RequestError(str(exc), field="window")


def build_context(
    snapshot: Snapshot,
    regions: Sequence[Mapping[str, Any]] | None = None,
    window: Mapping[str, Any] | None = None,
    serotypes: Sequence[str] | None = None,
) -> SelectionContext:
    return SelectionContext(
        regions=build_regions(snapshot.region_tree, regions),
        window=build_window(snapshot, window),
        serotypes=build_serotypes(serotypes),
    )


def window_payload(window: YearWindow) -> dict[str, int]:
    return {
        "current_year": window.current_year,
        "interval_length": window.interval_length,
        "start_year": window.start_year,
        "end_year": window.end_year,
    }


def region_tree_payload(tree: RegionTree) -> list[dict[str, Any]]:
    return [
        {
            "name": continent.name,
            "subcontinents": [
                {
                    "name": sub.name,
                    "countries": [{"code": c.code, "name": c.name} for c in sub.countries],
                }
                for sub in continent.subcontinents
            ],
        }
        for continent in tree.continents
    ]


def meta_payload(snapshot: Snapshot) -> dict[str, Any]:
    meta = snapshot.meta
    return {
        "report_count": meta.report_count,
        "year_min": meta.year_min,
        "year_max": meta.year_max,
        "source_counts": dict(sorted(meta.source_counts.items())),
        "serotypes": [s.name for s in SEROTYPES],
        "region_tree": region_tree_payload(snapshot.region_tree),
    }


def reports_payload(snapshot: Snapshot, context: SelectionContext) -> dict[str, Any]:
    slice_ = filter_reports(snapshot, context)
    records = []
    for report in slice_.reports():
        glyph = glyph_spec(report, context.serotypes, DEFAULT_GLYPH_RADII)
        records.append(
            {
                "id": report.id,
                "latitude": report.latitude,
                "longitude": report.longitude,
                "country": report.country,
                "year": report.year,
                "serotypes": [s.name for s in sorted(report.serotypes)],
                "source": report.source.value,
                "glyph": {
                    "sections": [s.name for s in glyph.sections],
                    "section_angle": glyph.section_angle,
                    "radius_px": glyph.radius_px,
                },
            }
        )
    return {"window": window_payload(context.window), "count": len(records), "reports": records}


def _region_slice(snapshot: Snapshot, context: SelectionContext, region: Region):
    region_context = SelectionContext(
        regions=(region,), window=context.window, serotypes=context.serotypes
    )
    return region_context, filter_reports(snapshot, region_context)


def centroids_payload(snapshot: Snapshot, context: SelectionContext, mode: str = "all") -> dict[str, Any]:
    if mode not in ("all", "per_serotype"):
        raise RequestError(f"mode must be 'all' or 'per_serotype', got {mode!r}", field="mode")
    entries = []
    for region in context.visible_regions():
        _, slice_ = _region_slice(snapshot, context, region)
        if mode == "all":
            point = centroid(slice_)
            if point is not None:
                entries.append(
                    {
                        "region": region.name,
                        "serotype": "all",
                        "latitude": point.latitude,
                        "longitude": point.longitude,
                        "report_count": len(slice_),
                    }
                )
        else:
            by_serotype = serotype_centroids(slice_)
            for s in SEROTYPES:
                if s in by_serotype:
                    entries.append(
                        {
                            "region": region.name,
                            "serotype": s.name,
                            "latitude": by_serotype[s].latitude,
                            "longitude": by_serotype[s].longitude,
                            "report_count": sum(1 for r in slice_.reports() if s in r.serotypes),
                        }
                    )
    return {"window": window_payload(context.window), "mode": mode, "centroids": entries}


def trajectories_payload(
    snapshot: Snapshot, context: SelectionContext, serotype: str = "all"
) -> dict[str, Any]:
    if serotype == "all":
        wanted: list[Serotype | None] = [None]
    elif serotype == "each":
        wanted = [s for s in SEROTYPES if s in context.serotypes]
    else:
        try:
            wanted = [Serotype.parse(serotype)]
        except ValueError as exc:
            raise RequestError(str(exc), field="serotype")
    entries = []
    for region in context.visible_regions():
        for s in wanted:
            t = trajectory(snapshot, region, context.window, s)
            entries.append(
                {
                    "region": region.name,
                    "serotype": "all" if s is None else s.name,
                    "vertices": [
                        {
                            "year": v.year,
                            "latitude": v.point.latitude,
                            "longitude": v.point.longitude,
                        }
                        for v in t.vertices
                    ],
                }
            )
    return {"window": window_payload(context.window), "trajectories": entries}


def parse_combinations(raw: Sequence[Sequence[str]] | str | None) -> list[frozenset[Serotype]]:
    """'all' (or None) expands to the 15 canonical combinations."""
    if raw is None or raw == "all":
        return list(enumerate_combinations())
    combos = []
    for i, entry in enumerate(raw):
        try:
            combo = frozenset(Serotype.parse(token) for token in entry)
        except ValueError as exc:
            raise RequestError(str(exc), field=f"combinations[{i}]")
        if not combo:
            raise RequestError("combination must not be empty", field=f"combinations[{i}]")
        combos.append(combo)
    return combos


def cooccurrence_payload(
    snapshot: Snapshot,
    context: SelectionContext,
    combinations: Sequence[Sequence[str]] | str | None = "all",
) -> dict[str, Any]:
    combos = parse_combinations(combinations)
    result = cooccurrence(filter_reports(snapshot, context), combos)
    return {
        "window": window_payload(context.window),
        "slice_size": result.slice_size,
        "combinations": [
            {
                "serotypes": [s.name for s in sorted(c.serotypes)],
                "mask": c.mask,
                "exact_count": c.exact_count,
                "superset_count": c.superset_count,
                "exact_proportion": c.exact_proportion,
                "superset_proportion": c.superset_proportion,
            }
            for c in result.combinations
        ],
    }


def timeline_payload(snapshot: Snapshot, context: SelectionContext) -> dict[str, Any]:
    years = list(context.window.years())
    visible = [r for r in context.regions if r.visible]
    if not visible or not context.serotypes:
        # graceful empty selection: the dense matrix has no rows
        return {"window": window_payload(context.window), "years": years, "rows": []}
    matrix = timeline(snapshot, visible, context.serotypes, context.window)
    return {
        "window": window_payload(context.window),
        "years": list(matrix.years),
        "rows": [
            {"region": row.region, "serotype": row.serotype.name, "counts": list(row.counts)}
            for row in matrix.rows
        ],
    }


def parse_bbox(raw: str) -> tuple[float, float, float, float]:
    parts = raw.split(",")
    if len(parts) != 4:
        raise RequestError("bbox must be 'min_lng,min_lat,max_lng,max_lat'", field="bbox")
    try:
        min_lng, min_lat, max_lng, max_lat = (float(p) for p in parts)
    except ValueError:
        raise RequestError("bbox values must be numeric", field="bbox")
    if not (-180.0 <= min_lng < max_lng <= 180.0 and -90.0 <= min_lat < max_lat <= 90.0):
        raise RequestError("bbox out of range or inverted", field="bbox")
    return min_lng, min_lat, max_lng, max_lat


def suitability_payload(grid: SuitabilityGrid, bbox: str, res: int = 180) -> dict[str, Any]:
    """Down-sampled window of suitability class indices for a bbox.

    Cells outside the grid extent or on nodata come back as null. At native
    resolution the sample centers coincide with grid cell centers, so the
    result matches per-cell classification exactly.
    """
    min_lng, min_lat, max_lng, max_lat = parse_bbox(bbox)
    if not 1 <= res <= 2048:
        raise RequestError("res must be between 1 and 2048", field="res")
    n_cols = min(res, max(1, round((max_lng - min_lng) / grid.cell_size)))
    n_rows = min(res, max(1, round((max_lat - min_lat) / grid.cell_size)))
    cell_w = (max_lng - min_lng) / n_cols
    cell_h = (max_lat - min_lat) / n_rows
    classes: list[list[int | None]] = []
    for i in range(n_rows):
        lat = max_lat - (i + 0.5) * cell_h
        row: list[int | None] = []
        for j in range(n_cols):
            lng = min_lng + (j + 0.5) * cell_w
            row.append(classify_suitability(suitability_at(grid, GeoPoint(lat, lng))))
        classes.append(row)
    return {
        "bbox": [min_lng, min_lat, max_lng, max_lat],
        "n_rows": n_rows,
        "n_cols": n_cols,
        "cell_width": cell_w,
        "cell_height": cell_h,
        "classes": classes,
    }


def regions_store_payload(version: int, regions: Sequence[Mapping[str, Any]]) -> dict[str, Any]:
    return {
        "version": version,
        "regions": [
            {
                "name": entry["name"],
                "countries": sorted(entry["countries"]),
                "visible": bool(entry.get("visible", True)),
                "shade": int(entry.get("shade", 0)),
            }
            for entry in regions
        ],
    }
