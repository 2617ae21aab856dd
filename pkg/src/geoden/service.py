"""Stateless JSON-over-HTTP query service plus persistence for named custom
regions.

Query responses depend only on (snapshot, request body). The region store is
the single piece of server state: a JSON file written atomically
(write-temp-then-rename) behind a single-writer lock with optimistic
version checks. A snapshot, once loaded, is immutable and shared by all
request handlers.
"""
from __future__ import annotations

import json
import os
import tempfile
import threading
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from . import payloads
from .ingest import Snapshot, load_data_dir
from .model import RegionTree
from .payloads import RequestError


class VersionConflict(Exception):
    def __init__(self, expected: int, got: int):
        super().__init__(f"region store is at version {expected}, request based on {got}")
        self.expected = expected


class RegionStore:
    """Named region definitions persisted as one JSON document on disk."""

    def __init__(self, path: Path, defaults: list[dict[str, Any]]):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._version = 0
        self._regions = defaults
        if self.path.is_file():
            doc = json.loads(self.path.read_text(encoding="utf-8"))
            self._version = int(doc["version"])
            self._regions = doc["regions"]

    def get(self) -> tuple[int, list[dict[str, Any]]]:
        with self._lock:
            return self._version, list(self._regions)

    def put(self, base_version: int, regions: list[dict[str, Any]]) -> int:
        with self._lock:
            if base_version != self._version:
                raise VersionConflict(self._version, base_version)
            self._version += 1
            self._regions = regions
            self._write()
            return self._version

    def _write(self) -> None:
        doc = {"version": self._version, "regions": self._regions}
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=".regions-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(doc, fh, indent=1)
                fh.write("\n")
            os.replace(tmp, self.path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


class RegionIn(BaseModel):
    name: str
    countries: list[str] | None = None
    visible: bool = True


class WindowIn(BaseModel):
    current_year: int
    interval_length: int


class QueryIn(BaseModel):
    regions: list[RegionIn] | None = None
    window: WindowIn | None = None
    serotypes: list[str] | None = None


class CentroidsQuery(QueryIn):
    mode: str = "all"


class TrajectoriesQuery(QueryIn):
    serotype: str = "all"


class CooccurrenceQuery(QueryIn):
    combinations: list[list[str]] | str | None = "all"


class StoredRegionIn(BaseModel):
    name: str
    countries: list[str]
    visible: bool = True
    shade: int = Field(default=0, ge=0, le=3)


class RegionsPutIn(BaseModel):
    version: int
    regions: list[StoredRegionIn]


def default_region_entries(tree: RegionTree) -> list[dict[str, Any]]:
    return [
        {
            "name": region.name,
            "countries": sorted(region.countries),
            "visible": region.visible,
            "shade": region.shade,
        }
        for region in tree.default_regions()
    ]


def _context(snapshot: Snapshot, body: QueryIn):
    return payloads.build_context(
        snapshot,
        regions=[r.model_dump() for r in body.regions] if body.regions is not None else None,
        window=body.window.model_dump() if body.window is not None else None,
        serotypes=body.serotypes,
    )


def create_app(
    snapshot: Snapshot | None = None,
    *,
    data_dir: str | Path | None = None,
    regions_file: str | Path | None = None,
    static_dir: str | Path | None = None,
) -> FastAPI:
    """Assemble the service around one snapshot.

    The snapshot may be passed directly (tests) or loaded from a data
    directory; without either the app starts unloaded and answers 503.
    """
    if snapshot is None and data_dir is not None:
        snapshot, _ = load_data_dir(data_dir)

    if regions_file is None:
        base = Path(data_dir) if data_dir is not None else Path.home() / ".geoden"
        regions_file = base / "regions.json"

    app = FastAPI(title="geoden", docs_url=None, redoc_url=None)
    app.state.snapshot = snapshot
    app.state.region_store = (
        RegionStore(Path(regions_file), default_region_entries(snapshot.region_tree))
        if snapshot is not None
        else None
    )

    @app.exception_handler(RequestError)
    async def on_request_error(_request: Request, exc: RequestError):
        return JSONResponse(status_code=exc.status, content=exc.to_payload())

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(_request: Request, exc: RequestValidationError):
        first = exc.errors()[0]
        field = ".".join(str(part) for part in first["loc"] if part != "body")
        return JSONResponse(
            status_code=400,
            content={"code": "invalid_request", "field": field or None, "message": first["msg"]},
        )

    @app.exception_handler(VersionConflict)
    async def on_version_conflict(_request: Request, exc: VersionConflict):
        return JSONResponse(
            status_code=409,
            content={"code": "version_conflict", "field": "version", "message": str(exc)},
        )

    def required_snapshot() -> Snapshot:
        snap = app.state.snapshot
        if snap is None:
            raise RequestError("snapshot not loaded", code="snapshot_not_loaded", status=503)
        return snap

    @app.get("/api/meta")
    def get_meta():
        return payloads.meta_payload(required_snapshot())

    @app.post("/api/query/reports")
    def query_reports(body: QueryIn):
        snap = required_snapshot()
        return payloads.reports_payload(snap, _context(snap, body))

    @app.post("/api/query/centroids")
    def query_centroids(body: CentroidsQuery):
        snap = required_snapshot()
        return payloads.centroids_payload(snap, _context(snap, body), mode=body.mode)

    @app.post("/api/query/trajectories")
    def query_trajectories(body: TrajectoriesQuery):
        snap = required_snapshot()
        return payloads.trajectories_payload(snap, _context(snap, body), serotype=body.serotype)

    @app.post("/api/query/cooccurrence")
    def query_cooccurrence(body: CooccurrenceQuery):
        snap = required_snapshot()
        return payloads.cooccurrence_payload(snap, _context(snap, body), body.combinations)

    @app.post("/api/query/timeline")
    def query_timeline(body: QueryIn):
        snap = required_snapshot()
        return payloads.timeline_payload(snap, _context(snap, body))

    @app.get("/api/regions")
    def get_regions():
        required_snapshot()
        version, regions = app.state.region_store.get()
        return payloads.regions_store_payload(version, regions)

    @app.put("/api/regions")
    def put_regions(body: RegionsPutIn):
        snap = required_snapshot()
        universe = snap.region_tree.all_countries()
        entries = []
        seen: set[str] = set()
        for i, region in enumerate(body.regions):
            if region.name in seen:
                raise RequestError(
                    f"duplicate region name {region.name!r}", field=f"regions[{i}].name"
                )
            seen.add(region.name)
            if not region.countries:
                raise RequestError(
                    "region must list at least one country", field=f"regions[{i}].countries"
                )
            for j, code in enumerate(region.countries):
                if code.upper() not in universe:
                    raise RequestError(
                        f"unknown country code {code!r}",
                        code="unknown_country",
                        field=f"regions[{i}].countries[{j}]",
                        status=422,
                    )
            entries.append(
                {
                    "name": region.name,
                    "countries": sorted(c.upper() for c in region.countries),
                    "visible": region.visible,
                    "shade": region.shade,
                }
            )
        version = app.state.region_store.put(body.version, entries)
        return payloads.regions_store_payload(version, entries)

    @app.get("/api/suitability")
    def get_suitability(bbox: str = Query(...), res: int = Query(default=180)):
        snap = required_snapshot()
        if snap.grid is None:
            raise RequestError("suitability grid not loaded", code="grid_not_loaded", status=503)
        return payloads.suitability_payload(snap.grid, bbox, res)

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="static")

    return app
