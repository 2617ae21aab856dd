"""Filtered and faceted computations behind the three panels: report slices,
centroids, yearly trajectories, co-occurrence combination counts, timeline
matrices, suitability classification, and glyph sizing.

Everything here is a pure function over an immutable snapshot; queries can
run concurrently without coordination.

Centroid-style means accumulate in ascending report id order with plain
float addition so results are bit-for-bit reproducible and equal to a naive
reference scan. Plain arithmetic means in degrees are wrong across the
antimeridian; the bundled regions do not straddle it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .ingest import Snapshot, SuitabilityGrid
from .model import (
    SEROTYPES,
    Region,
    Report,
    SelectionContext,
    Serotype,
    YearWindow,
    encode_serotype_set,
)

#: Default glyph radius (px) by number of rendered sections 1..4; an ordinal
#: "importance" scale, not proportional to count.
DEFAULT_GLYPH_RADII: tuple[float, ...] = (6.0, 8.0, 10.0, 12.0)

SUITABILITY_CLASS_COUNT = 5


@dataclass(frozen=True)
class GeoPoint:
    latitude: float
    longitude: float

    def __post_init__(self) -> None:
        if not -90.0 <= self.latitude <= 90.0:
            raise ValueError(f"latitude out of range: {self.latitude}")
        if not -180.0 <= self.longitude <= 180.0:
            raise ValueError(f"longitude out of range: {self.longitude}")


@dataclass(frozen=True)
class ReportSlice:
    """Report ids matching a selection context, in ascending id order."""

    snapshot: Snapshot
    context: SelectionContext
    ids: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.ids)

    def reports(self) -> Iterator[Report]:
        reports = self.snapshot.reports
        return (reports[i] for i in self.ids)


@dataclass(frozen=True)
class TrajectoryVertex:
    year: int
    point: GeoPoint


@dataclass(frozen=True)
class Trajectory:
    """Chronological polyline through yearly centroids; gap years produce no
    vertex. serotype None means all serotypes."""

    region: str
    serotype: Serotype | None
    vertices: tuple[TrajectoryVertex, ...]


@dataclass(frozen=True)
class TimelineRow:
    region: str
    serotype: Serotype
    counts: tuple[int, ...]


@dataclass(frozen=True)
class TimelineMatrix:
    """Dense (region x serotype) x year matrix of report counts; report-free
    years are zero-filled. A report counts once per contained serotype."""

    years: tuple[int, ...]
    rows: tuple[TimelineRow, ...]


@dataclass(frozen=True)
class CombinationCount:
    serotypes: frozenset[Serotype]
    mask: int
    exact_count: int
    superset_count: int
    exact_proportion: float
    superset_proportion: float


@dataclass(frozen=True)
class CooccurrenceResult:
    slice_size: int
    combinations: tuple[CombinationCount, ...]


@dataclass(frozen=True)
class GlyphSpec:
    """Pie-chart-like report glyph: equal angular sections for the rendered
    serotypes, radius ordinal in the section count."""

    center: GeoPoint
    sections: tuple[Serotype, ...]
    radius_px: float

    @property
    def section_angle(self) -> float:
        return 360.0 / len(self.sections)


def filter_reports(snapshot: Snapshot, context: SelectionContext) -> ReportSlice:
    """Reports satisfying all three predicates: country in a visible region,
    year in the window span, serotype intersection non-empty."""
    countries = context.visible_countries()
    mask = context.mask
    window = context.window
    if not countries or mask == 0:
        return ReportSlice(snapshot=snapshot, context=context, ids=())

    reports = snapshot.reports
    years = [y for y in window.years() if y in snapshot.by_year]
    year_candidates = sum(len(snapshot.by_year[y]) for y in years)
    country_candidates = sum(len(snapshot.by_country.get(c, ())) for c in countries)

    ids: list[int] = []
    if year_candidates <= country_candidates:
        for y in years:
            for rid in snapshot.by_year[y]:
                r = reports[rid]
                if r.country in countries and r.mask & mask:
                    ids.append(rid)
    else:
        for c in countries:
            for rid in snapshot.by_country.get(c, ()):
                r = reports[rid]
                if window.contains(r.year) and r.mask & mask:
                    ids.append(rid)
    ids.sort()
    return ReportSlice(snapshot=snapshot, context=context, ids=tuple(ids))


def centroid(slice_: ReportSlice) -> GeoPoint | None:
    """Arithmetic mean latitude/longitude of the slice; None when empty."""
    if not slice_.ids:
        return None
    reports = slice_.snapshot.reports
    lat = 0.0
    lng = 0.0
    for rid in slice_.ids:
        r = reports[rid]
        lat += r.latitude
        lng += r.longitude
    n = len(slice_.ids)
    return GeoPoint(latitude=lat / n, longitude=lng / n)


def serotype_centroids(slice_: ReportSlice) -> dict[Serotype, GeoPoint]:
    """Centroid per active serotype over the reports containing it; serotypes
    with no reports are omitted."""
    active = slice_.context.serotypes
    sums: dict[Serotype, list[float]] = {s: [0.0, 0.0, 0] for s in SEROTYPES if s in active}
    reports = slice_.snapshot.reports
    for rid in slice_.ids:
        r = reports[rid]
        for s, acc in sums.items():
            if r.mask & s.bit:
                acc[0] += r.latitude
                acc[1] += r.longitude
                acc[2] += 1
    return {
        s: GeoPoint(latitude=acc[0] / acc[2], longitude=acc[1] / acc[2])
        for s, acc in sums.items()
        if acc[2]
    }


def trajectory(
    snapshot: Snapshot,
    region: Region,
    window: YearWindow,
    serotype: Serotype | None = None,
) -> Trajectory:
    """One vertex per year in the span with at least one matching report;
    gap years are skipped and vertices stay chronological."""
    if not region.visible:
        raise ValueError(f"region {region.name!r} is not visible")
    bit = serotype.bit if serotype is not None else 0
    reports = snapshot.reports
    vertices: list[TrajectoryVertex] = []
    for year in window.years():
        lat = 0.0
        lng = 0.0
        n = 0
        for rid in snapshot.by_year.get(year, ()):
            r = reports[rid]
            if r.country in region.countries and (bit == 0 or r.mask & bit):
                lat += r.latitude
                lng += r.longitude
                n += 1
        if n:
            vertices.append(
                TrajectoryVertex(year=year, point=GeoPoint(latitude=lat / n, longitude=lng / n))
            )
    return Trajectory(region=region.name, serotype=serotype, vertices=tuple(vertices))


def cooccurrence(
    slice_: ReportSlice, combinations: Sequence[Iterable[Serotype]]
) -> CooccurrenceResult:
    """Exact and superset counts for each queried combination, in one pass.

    exact_count: reports whose serotype set equals the combination.
    superset_count: reports whose set contains it. Proportions are over the
    slice size (0 for an empty slice).
    """
    masks = []
    for i, combo in enumerate(combinations):
        mask = encode_serotype_set(combo)
        if mask == 0:
            raise ValueError(f"combination {i} is empty")
        masks.append(mask)

    histogram = [0] * 16
    reports = slice_.snapshot.reports
    for rid in slice_.ids:
        histogram[reports[rid].mask] += 1
    total = len(slice_.ids)

    counts = []
    for mask in masks:
        exact = histogram[mask]
        superset = sum(histogram[m] for m in range(1, 16) if m & mask == mask)
        counts.append(
            CombinationCount(
                serotypes=frozenset(s for s in SEROTYPES if mask & s.bit),
                mask=mask,
                exact_count=exact,
                superset_count=superset,
                exact_proportion=exact / total if total else 0.0,
                superset_proportion=superset / total if total else 0.0,
            )
        )
    return CooccurrenceResult(slice_size=total, combinations=tuple(counts))


def timeline(
    snapshot: Snapshot,
    regions: Sequence[Region],
    serotypes: Iterable[Serotype],
    window: YearWindow,
) -> TimelineMatrix:
    """Dense report-count matrix faceted by (region, serotype) over the span.

    Overlapping regions are aggregated independently, so one report may
    contribute to several regions' rows.
    """
    active = tuple(s for s in SEROTYPES if s in frozenset(serotypes))
    visible = [r for r in regions if r.visible]
    if not regions or not active:
        raise ValueError("timeline requires at least one region and one serotype")

    years = tuple(window.years())
    col = {year: i for i, year in enumerate(years)}
    reports = snapshot.reports
    rows: list[TimelineRow] = []
    for region in visible:
        cells = {s: [0] * len(years) for s in active}
        for year in years:
            for rid in snapshot.by_year.get(year, ()):
                r = reports[rid]
                if r.country in region.countries:
                    for s in active:
                        if r.mask & s.bit:
                            cells[s][col[year]] += 1
        for s in active:
            rows.append(TimelineRow(region=region.name, serotype=s, counts=tuple(cells[s])))
    return TimelineMatrix(years=years, rows=tuple(rows))


def classify_suitability(value: float | None) -> int | None:
    """Five equal-interval suitability classes with a singleton class at 0:
    0 -> 0, (0,25] -> 1, (25,50] -> 2, (50,75] -> 3, (75,100] -> 4.
    None (nodata) passes through."""
    if value is None:
        return None
    if math.isnan(value):
        return None
    if not 0.0 <= value <= 100.0:
        raise ValueError(f"suitability out of [0, 100]: {value}")
    if value == 0.0:
        return 0
    if value <= 25.0:
        return 1
    if value <= 50.0:
        return 2
    if value <= 75.0:
        return 3
    return 4


def classify_grid(grid: SuitabilityGrid) -> np.ndarray:
    """Whole-grid classification; -1 marks nodata cells.

    Uses the same comparisons as classify_suitability so both routes agree
    cell-for-cell.
    """
    v = grid.values
    classes = np.select(
        [np.isnan(v), v == 0.0, v <= 25.0, v <= 50.0, v <= 75.0],
        [-1, 0, 1, 2, 3],
        default=4,
    )
    return classes.astype(np.int8)


def suitability_at(grid: SuitabilityGrid, point: GeoPoint) -> float | None:
    """Nearest-cell raster lookup with half-open cell extents
    [x, x + cellsize); None outside the grid or on nodata."""
    col = math.floor((point.longitude - grid.origin_lng) / grid.cell_size)
    row_from_bottom = math.floor((point.latitude - grid.origin_lat) / grid.cell_size)
    if not (0 <= col < grid.n_cols and 0 <= row_from_bottom < grid.n_rows):
        return None
    row = grid.n_rows - 1 - row_from_bottom
    value = float(grid.values[row, col])
    return None if math.isnan(value) else value


def glyph_spec(
    report: Report,
    active: Iterable[Serotype],
    radii: Sequence[float] = DEFAULT_GLYPH_RADII,
) -> GlyphSpec:
    """Glyph for one report under the active serotype filter: sections are
    the intersection in canonical order, radius looked up by section count."""
    if len(radii) != len(SEROTYPES) or any(b <= a for a, b in zip(radii, radii[1:])):
        raise ValueError("glyph radius table must hold 4 strictly increasing radii")
    active_set = frozenset(active)
    sections = tuple(s for s in SEROTYPES if s in report.serotypes and s in active_set)
    if not sections:
        raise ValueError(f"report {report.id} has no active serotypes to render")
    return GlyphSpec(
        center=GeoPoint(latitude=report.latitude, longitude=report.longitude),
        sections=sections,
        radius_px=float(radii[len(sections) - 1]),
    )
