"""Ingestion: reports CSV, country gazetteer, and suitability raster are
parsed and validated into an immutable indexed snapshot.

Ingest is single-threaded per input; the produced Snapshot is immutable and
shareable between concurrent readers.
"""
from __future__ import annotations

import csv
import io
import json
import logging
import unicodedata
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import IO, Iterable, Mapping

import numpy as np

from .model import (
    DATASET_YEAR_MAX,
    DATASET_YEAR_MIN,
    Continent,
    Country,
    Region,
    RegionTree,
    Report,
    Serotype,
    Source,
    Subcontinent,
)

logger = logging.getLogger(__name__)

#: Required reports CSV header, in order.
REPORT_COLUMNS = ("latitude", "longitude", "country", "year", "denv1", "denv2", "denv3", "denv4")

GAZETTEER_FILE = "gazetteer.json"
CORE_REPORTS_FILE = "reports_core.csv"
SUPPLEMENT_REPORTS_FILE = "reports_supplement.csv"
SUITABILITY_FILE = "suitability.asc"


class IngestError(Exception):
    """Fatal input problem: unreadable stream, malformed header, bad raster."""


def _fold(name: str) -> str:
    """Case/diacritic-insensitive key for country lookups."""
    decomposed = unicodedata.normalize("NFKD", name)
    stripped = "".join(ch for ch in decomposed if not unicodedata.combining(ch))
    cleaned = "".join(ch if ch.isalnum() else " " for ch in stripped.casefold())
    return " ".join(cleaned.split())


@dataclass(frozen=True)
class Gazetteer:
    """Region tree plus the alias table used to canonicalize country names."""

    tree: RegionTree
    aliases: Mapping[str, str]  # folded name or code -> canonical code

    def normalize(self, raw: str) -> str | None:
        return self.aliases.get(_fold(raw))


def normalize_country(raw: str, gazetteer: Gazetteer) -> str | None:
    """Canonical country code for a raw name, or None when unresolvable."""
    return gazetteer.normalize(raw)


def load_gazetteer(source: str | Path | IO[str] | IO[bytes]) -> Gazetteer:
    """Parse the gazetteer JSON document into a RegionTree + alias table."""
    try:
        if isinstance(source, (str, Path)):
            with open(source, "rb") as fh:
                doc = json.load(fh)
        else:
            doc = json.load(source)
    except (OSError, ValueError) as exc:
        raise IngestError(f"cannot read gazetteer: {exc}") from exc

    aliases: dict[str, str] = {}
    continents = []
    try:
        for cont in doc["continents"]:
            subcontinents = []
            for sub in cont["subcontinents"]:
                countries = []
                for entry in sub["countries"]:
                    code = entry["code"].upper()
                    country = Country(code=code, name=entry["name"])
                    countries.append(country)
                    for key in (code, entry["name"], *entry.get("aliases", ())):
                        folded = _fold(key)
                        clash = aliases.get(folded)
                        if clash is not None and clash != code:
                            raise IngestError(
                                f"gazetteer alias {key!r} maps to both {clash} and {code}"
                            )
                        aliases[folded] = code
                subcontinents.append(Subcontinent(name=sub["name"], countries=tuple(countries)))
            continents.append(Continent(name=cont["name"], subcontinents=tuple(subcontinents)))
        tree = RegionTree(continents=tuple(continents))
    except (KeyError, TypeError, ValueError) as exc:
        raise IngestError(f"malformed gazetteer: {exc}") from exc
    return Gazetteer(tree=tree, aliases=MappingProxyType(aliases))


@dataclass(frozen=True)
class IngestDiagnostics:
    """Per-file ingest outcome; accepted + len(rejected) = data row count."""

    accepted: int
    rejected: tuple[tuple[int, str], ...]  # (1-based data row number, reason)
    warnings: tuple[tuple[int, str], ...]

    @property
    def total_rows(self) -> int:
        return self.accepted + len(self.rejected)


def _open_text(source: str | Path | IO[str] | IO[bytes]) -> IO[str]:
    if isinstance(source, (str, Path)):
        return open(source, "r", encoding="utf-8", newline="")
    if isinstance(source, io.TextIOBase):
        return source
    return io.TextIOWrapper(source, encoding="utf-8", newline="")


def parse_reports(
    source: str | Path | IO[str] | IO[bytes],
    source_tag: Source | str,
    gazetteer: Gazetteer,
    year_min: int = DATASET_YEAR_MIN,
    year_max: int = DATASET_YEAR_MAX,
) -> tuple[list[Report], IngestDiagnostics]:
    """Parse a reports CSV; bad rows are rejected (never silently fixed).

    Returned report ids are the 0-based position among accepted rows of this
    file; build_snapshot reassigns ids when files are combined.
    """
    tag = Source(source_tag)
    try:
        fh = _open_text(source)
    except OSError as exc:
        raise IngestError(f"cannot read reports: {exc}") from exc

    reports: list[Report] = []
    rejected: list[tuple[int, str]] = []
    warnings: list[tuple[int, str]] = []
    try:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise IngestError("reports CSV is empty (missing header)")
        except UnicodeDecodeError as exc:
            raise IngestError(f"reports CSV is not UTF-8: {exc}")
        if tuple(h.strip().lower() for h in header) != REPORT_COLUMNS:
            raise IngestError(
                f"malformed header: expected {','.join(REPORT_COLUMNS)}, got {','.join(header)}"
            )

        try:
            for row_no, row in enumerate(reader, start=1):
                reason = None
                lat = lng = 0.0
                year = 0
                mask = 0
                code: str | None = None
                if len(row) != len(REPORT_COLUMNS):
                    reason = f"expected {len(REPORT_COLUMNS)} fields, got {len(row)}"
                else:
                    raw_lat, raw_lng, raw_country, raw_year = (f.strip() for f in row[:4])
                    flags = tuple(f.strip() for f in row[4:])
                    try:
                        lat = float(raw_lat)
                        lng = float(raw_lng)
                    except ValueError:
                        reason = "latitude/longitude not numeric"
                    if reason is None and not -90.0 <= lat <= 90.0:
                        reason = f"latitude out of range: {raw_lat}"
                    if reason is None and not -180.0 <= lng <= 180.0:
                        reason = f"longitude out of range: {raw_lng}"
                    if reason is None:
                        try:
                            year = int(raw_year)
                        except ValueError:
                            reason = f"year not an integer: {raw_year}"
                    if reason is None and not year_min <= year <= year_max:
                        reason = f"year out of span [{year_min}, {year_max}]: {year}"
                    if reason is None:
                        for i, flag in enumerate(flags):
                            if flag == "1":
                                mask |= 1 << i
                            elif flag != "0":
                                reason = f"serotype flag denv{i + 1} must be 0 or 1: {flag!r}"
                                break
                    if reason is None and mask == 0:
                        reason = "no serotype reported"
                    if reason is None:
                        code = gazetteer.normalize(raw_country)
                        if code is None:
                            reason = f"unknown country: {raw_country!r}"

                if reason is not None:
                    rejected.append((row_no, reason))
                    continue
                reports.append(
                    Report(
                        id=len(reports),
                        latitude=lat,
                        longitude=lng,
                        country=code,  # type: ignore[arg-type]
                        year=year,
                        serotypes=frozenset(s for s in Serotype if mask & s.bit),
                        source=tag,
                    )
                )
        except UnicodeDecodeError as exc:
            raise IngestError(f"reports CSV is not UTF-8: {exc}")
    finally:
        if isinstance(source, (str, Path)):
            fh.close()

    diagnostics = IngestDiagnostics(
        accepted=len(reports), rejected=tuple(rejected), warnings=tuple(warnings)
    )
    return reports, diagnostics


@dataclass(frozen=True)
class SuitabilityGrid:
    """Regular WGS84 raster of environmental suitability percentages.

    values is row-major with row 0 the northernmost row (ESRI ASCII order);
    nodata cells are NaN. origin_* name the lower-left corner.
    """

    origin_lat: float
    origin_lng: float
    cell_size: float
    n_rows: int
    n_cols: int
    values: np.ndarray

    @property
    def lat_max(self) -> float:
        return self.origin_lat + self.n_rows * self.cell_size

    @property
    def lng_max(self) -> float:
        return self.origin_lng + self.n_cols * self.cell_size


_HEADER_KEYS = ("ncols", "nrows", "xllcorner", "yllcorner", "cellsize", "nodata_value")


def load_suitability_grid(source: str | Path | IO[str] | IO[bytes]) -> SuitabilityGrid:
    """Parse an ESRI ASCII grid of suitability percentages.

    Fraction-scaled grids (max value <= 1) are scaled x100 with a warning; a
    maximum in (1, 2) is ambiguous between a broken fraction grid and an
    implausibly low percent grid and is fatal.
    """
    try:
        fh = _open_text(source)
    except OSError as exc:
        raise IngestError(f"cannot read suitability grid: {exc}") from exc
    try:
        text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise IngestError(f"cannot read suitability grid: {exc}") from exc
    finally:
        if isinstance(source, (str, Path)):
            fh.close()

    header: dict[str, float] = {}
    lines = text.splitlines()
    body_start = 0
    for line in lines:
        parts = line.split()
        if len(parts) == 2 and parts[0].lower() in _HEADER_KEYS:
            try:
                header[parts[0].lower()] = float(parts[1])
            except ValueError as exc:
                raise IngestError(f"bad grid header line {line!r}") from exc
            body_start += 1
        else:
            break
    for key in _HEADER_KEYS[:5]:
        if key not in header:
            raise IngestError(f"grid header missing {key}")

    n_cols = int(header["ncols"])
    n_rows = int(header["nrows"])
    if n_cols <= 0 or n_rows <= 0 or header["cellsize"] <= 0:
        raise IngestError("grid dimensions and cellsize must be positive")
    nodata = header.get("nodata_value")

    tokens = " ".join(lines[body_start:]).split()
    if len(tokens) != n_rows * n_cols:
        raise IngestError(
            f"grid shape mismatch: header says {n_rows}x{n_cols} = {n_rows * n_cols} values, "
            f"found {len(tokens)}"
        )
    try:
        values = np.array(tokens, dtype=np.float64).reshape(n_rows, n_cols)
    except ValueError as exc:
        raise IngestError(f"non-numeric grid value: {exc}") from exc

    if nodata is not None:
        values[values == nodata] = np.nan

    finite = values[~np.isnan(values)]
    if finite.size:
        vmax = float(finite.max())
        if float(finite.min()) < 0.0 or vmax > 100.0:
            bad = np.argwhere(np.isfinite(values) & ((values < 0) | (values > 100)))[0]
            raise IngestError(
                f"suitability value out of [0, 100] at row {bad[0]}, col {bad[1]}: "
                f"{values[bad[0], bad[1]]}"
            )
        if vmax <= 1.0:
            logger.warning(
                "suitability grid maximum is %.4f; interpreting values as fractions "
                "and scaling x100",
                vmax,
            )
            values *= 100.0
        elif vmax < 2.0:
            bad = np.argwhere(np.isfinite(values) & (values > 1.0))[0]
            raise IngestError(
                f"ambiguous suitability scale: maximum {vmax} at row {bad[0]}, col {bad[1]} "
                "is neither a fraction grid (max <= 1) nor a plausible percent grid"
            )

    values.flags.writeable = False
    return SuitabilityGrid(
        origin_lat=header["yllcorner"],
        origin_lng=header["xllcorner"],
        cell_size=header["cellsize"],
        n_rows=n_rows,
        n_cols=n_cols,
        values=values,
    )


@dataclass(frozen=True)
class SnapshotMeta:
    year_min: int
    year_max: int
    report_count: int
    source_counts: Mapping[str, int]


@dataclass(frozen=True)
class Snapshot:
    """Immutable indexed view over one ingested dataset."""

    reports: tuple[Report, ...]
    by_year: Mapping[int, tuple[int, ...]]
    by_country: Mapping[str, tuple[int, ...]]
    region_tree: RegionTree
    grid: SuitabilityGrid | None
    meta: SnapshotMeta

    def default_regions(self) -> tuple[Region, ...]:
        return self.region_tree.default_regions()


def build_snapshot(
    reports: Iterable[Report],
    region_tree: RegionTree | Gazetteer,
    grid: SuitabilityGrid | None = None,
) -> Snapshot:
    """Index reports by year and country; ids are reassigned to the position
    in the combined report list so they stay unique across source files."""
    tree = region_tree.tree if isinstance(region_tree, Gazetteer) else region_tree
    indexed: list[Report] = []
    by_year: dict[int, list[int]] = {}
    by_country: dict[str, list[int]] = {}
    source_counts: dict[str, int] = {}
    for i, report in enumerate(reports):
        if report.id != i:
            report = Report(
                id=i,
                latitude=report.latitude,
                longitude=report.longitude,
                country=report.country,
                year=report.year,
                serotypes=report.serotypes,
                source=report.source,
            )
        indexed.append(report)
        by_year.setdefault(report.year, []).append(i)
        by_country.setdefault(report.country, []).append(i)
        source_counts[report.source.value] = source_counts.get(report.source.value, 0) + 1
    if not indexed:
        raise IngestError("empty report list: nothing to explore")

    meta = SnapshotMeta(
        year_min=min(by_year),
        year_max=max(by_year),
        report_count=len(indexed),
        source_counts=MappingProxyType(source_counts),
    )
    return Snapshot(
        reports=tuple(indexed),
        by_year=MappingProxyType({y: tuple(ids) for y, ids in sorted(by_year.items())}),
        by_country=MappingProxyType({c: tuple(ids) for c, ids in sorted(by_country.items())}),
        region_tree=tree,
        grid=grid,
        meta=meta,
    )


def bundled_data_dir() -> Path:
    """Directory of the dataset shipped with the package."""
    return Path(resources.files("geoden") / "data")


def load_data_dir(
    data_dir: str | Path | None = None,
    year_min: int = DATASET_YEAR_MIN,
    year_max: int = DATASET_YEAR_MAX,
) -> tuple[Snapshot, dict[str, IngestDiagnostics]]:
    """Load a data directory (gazetteer + core reports + optional supplement
    and suitability grid) into a snapshot.

    Rejected rows are reported in the returned diagnostics, not fatal.
    """
    root = Path(data_dir) if data_dir is not None else bundled_data_dir()
    gazetteer_path = root / GAZETTEER_FILE
    core_path = root / CORE_REPORTS_FILE
    if not gazetteer_path.is_file():
        raise IngestError(f"missing {GAZETTEER_FILE} in {root}")
    if not core_path.is_file():
        raise IngestError(f"missing {CORE_REPORTS_FILE} in {root}")

    gazetteer = load_gazetteer(gazetteer_path)
    reports, core_diag = parse_reports(core_path, Source.CORE, gazetteer, year_min, year_max)
    diagnostics = {"core": core_diag}

    supplement_path = root / SUPPLEMENT_REPORTS_FILE
    if supplement_path.is_file():
        supplement, supp_diag = parse_reports(
            supplement_path, Source.SUPPLEMENT, gazetteer, year_min, year_max
        )
        reports.extend(supplement)
        diagnostics["supplement"] = supp_diag

    grid = None
    grid_path = root / SUITABILITY_FILE
    if grid_path.is_file():
        grid = load_suitability_grid(grid_path)

    return build_snapshot(reports, gazetteer, grid), diagnostics
