"""Acceptance suite: every criterion runs at its stated tolerance and prints
one pass/fail line (visible with pytest -s or on failure)."""
import random
import time
from contextlib import contextmanager

import numpy as np
import pytest
from fastapi.testclient import TestClient

from geoden import payloads
from geoden.analytics import (
    centroid,
    classify_grid,
    classify_suitability,
    cooccurrence,
    filter_reports,
    serotype_centroids,
    timeline,
    trajectory,
)
from geoden.ingest import load_data_dir
from geoden.model import (
    ALL_SEROTYPES,
    Region,
    SelectionContext,
    Serotype,
    enumerate_combinations,
    resolve_window,
)
from geoden.service import create_app
from conftest import GOLDEN
from reference import (
    ref_centroid,
    ref_cooccurrence,
    ref_filter_ids,
    ref_serotype_centroids,
    ref_timeline,
    ref_trajectory,
)
from synth import random_context, random_snapshot
from test_service import GOLDEN_REQUESTS, _call

COMBINATIONS = list(enumerate_combinations())


@contextmanager
def criterion(name: str):
    info = {"detail": ""}
    try:
        yield info
    except BaseException as exc:
        print(f"[ACCEPTANCE] {name}: FAIL ({exc})")
        raise
    detail = f" ({info['detail']})" if info["detail"] else ""
    print(f"[ACCEPTANCE] {name}: PASS{detail}")


def _continent(snapshot, name: str) -> Region:
    return next(r for r in snapshot.default_regions() if r.name == name)


def _full_window(snapshot):
    meta = snapshot.meta
    return resolve_window(meta.year_max, meta.year_max - meta.year_min + 1, meta.year_min, meta.year_max)


def test_dataset_ingest():
    with criterion("dataset-ingest") as info:
        started = time.perf_counter()
        snapshot, diagnostics = load_data_dir()
        elapsed = time.perf_counter() - started
        assert diagnostics["core"].accepted == 3260
        assert diagnostics["supplement"].accepted == 289
        assert all(not d.rejected for d in diagnostics.values())
        assert snapshot.meta.report_count == 3549
        assert elapsed < 2.0, f"ingest took {elapsed:.2f}s"
        info["detail"] = f"3260 + 289 = 3549 accepted, 0 rejected, {elapsed:.2f}s"


def test_dataset_span_and_earliest_denv1(bundled_snapshot):
    with criterion("dataset-span") as info:
        assert bundled_snapshot.meta.year_min == 1943
        assert bundled_snapshot.meta.year_max == 2020
        denv1_years = [r.year for r in bundled_snapshot.reports if Serotype.DENV1 in r.serotypes]
        assert min(denv1_years) == 1943
        first = {
            r.country
            for r in bundled_snapshot.reports
            if r.year == 1943 and Serotype.DENV1 in r.serotypes
        }
        assert first == {"JPN"}
        info["detail"] = "span 1943-2020, earliest DENV1: Japan 1943"


def test_decade_counts(bundled_snapshot):
    with criterion("decade-counts") as info:
        asia = _continent(bundled_snapshot, "Asia")
        everywhere = Region(name="global", countries=bundled_snapshot.region_tree.all_countries())

        def count(region: Region, start: int, end: int) -> int:
            ctx = SelectionContext(
                regions=(region,),
                window=resolve_window(end, end - start + 1),
                serotypes=ALL_SEROTYPES,
            )
            return len(filter_reports(bundled_snapshot, ctx))

        matches = []
        for scope_name, region in (("Asia", asia), ("global", everywhere)):
            for rule, spans in (
                ("[Y,Y+9]", ((1970, 1979), (1980, 1989))),
                ("[Y,Y+10]", ((1970, 1980), (1980, 1990))),
            ):
                got = tuple(count(region, a, b) for a, b in spans)
                if got == (242, 541):
                    matches.append((scope_name, rule))

        # Documented convention: Asia continent, decades [1970,1979]/[1980,1989].
        assert ("Asia", "[Y,Y+9]") in matches, f"matching conventions: {matches}"
        assert count(asia, 1970, 1979) == 242
        assert count(asia, 1980, 1989) == 541
        info["detail"] = f"convention Asia x [Y,Y+9] -> 242/541; all matches: {matches}"


def test_africa_denv4_years(bundled_snapshot):
    with criterion("africa-denv4") as info:
        ctx = SelectionContext(
            regions=(_continent(bundled_snapshot, "Africa"),),
            window=_full_window(bundled_snapshot),
            serotypes=frozenset({Serotype.DENV4}),
        )
        years = {r.year for r in filter_reports(bundled_snapshot, ctx).reports()}
        assert years == {1983, 1995}
        info["detail"] = "DENV4 in Africa exactly in {1983, 1995}"


def test_oracle_equivalence_50_snapshots(gazetteer):
    with criterion("oracle-equivalence") as info:
        rng = random.Random(20240601)
        started = time.perf_counter()
        checked = 0
        for _ in range(50):
            snapshot = random_snapshot(rng, gazetteer.tree, max_reports=2000)
            for _ in range(2):
                ctx = random_context(rng, snapshot)
                slice_ = filter_reports(snapshot, ctx)
                assert list(slice_.ids) == ref_filter_ids(snapshot, ctx)

                got_centroid = centroid(slice_)
                want_centroid = ref_centroid(snapshot, ctx)
                if want_centroid is None:
                    assert got_centroid is None
                else:
                    assert (got_centroid.latitude, got_centroid.longitude) == want_centroid

                got_sc = serotype_centroids(slice_)
                assert {
                    s: (p.latitude, p.longitude) for s, p in got_sc.items()
                } == ref_serotype_centroids(snapshot, ctx)

                region = ctx.regions[0]
                if region.visible:
                    for serotype in (None, Serotype.DENV2):
                        t = trajectory(snapshot, region, ctx.window, serotype)
                        assert [
                            (v.year, (v.point.latitude, v.point.longitude)) for v in t.vertices
                        ] == ref_trajectory(snapshot, region, ctx.window, serotype)

                result = cooccurrence(slice_, COMBINATIONS)
                assert [
                    (c.exact_count, c.superset_count) for c in result.combinations
                ] == ref_cooccurrence(snapshot, ctx, COMBINATIONS)

                if ctx.serotypes:
                    matrix = timeline(snapshot, ctx.regions, ctx.serotypes, ctx.window)
                    got_cells = {
                        (row.region, row.serotype, year): count
                        for row in matrix.rows
                        for year, count in zip(matrix.years, row.counts)
                    }
                    assert got_cells == ref_timeline(snapshot, ctx.regions, ctx.serotypes, ctx.window)
                checked += 1
        elapsed = time.perf_counter() - started
        assert elapsed < 30.0, f"oracle suite took {elapsed:.1f}s"
        info["detail"] = f"50 snapshots, {checked} contexts, {elapsed:.1f}s"


def test_partition_property_1000_contexts(gazetteer, bundled_snapshot):
    with criterion("partition-property") as info:
        rng = random.Random(777)
        synthetic = random_snapshot(rng, gazetteer.tree, max_reports=1500)
        violations = 0
        for i in range(1000):
            snapshot = synthetic if i < 600 else bundled_snapshot
            ctx = random_context(rng, snapshot)
            slice_ = filter_reports(snapshot, ctx)
            result = cooccurrence(slice_, COMBINATIONS)
            if sum(c.exact_count for c in result.combinations) != len(slice_):
                violations += 1
        assert violations == 0
        info["detail"] = "1000 contexts, 0 violations"


def test_trajectory_consistency(gazetteer, bundled_snapshot):
    with criterion("trajectory-consistency") as info:
        rng = random.Random(31)
        vertices_checked = 0
        snapshots = [random_snapshot(rng, gazetteer.tree, max_reports=800) for _ in range(10)]
        snapshots.append(bundled_snapshot)
        for snapshot in snapshots:
            for _ in range(10):
                ctx = random_context(rng, snapshot)
                region = next((r for r in ctx.regions if r.visible), None)
                if region is None:
                    continue
                serotype = rng.choice([None, *Serotype])
                t = trajectory(snapshot, region, ctx.window, serotype)
                active = frozenset({serotype}) if serotype else ALL_SEROTYPES
                for vertex in t.vertices:
                    year_ctx = SelectionContext(
                        regions=(region,),
                        window=resolve_window(
                            vertex.year, 1, snapshot.meta.year_min, snapshot.meta.year_max
                        ),
                        serotypes=active,
                    )
                    per_year = centroid(filter_reports(snapshot, year_ctx))
                    assert vertex.point == per_year  # bit-exact, ascending-id summation
                    vertices_checked += 1
        assert vertices_checked > 100
        info["detail"] = f"{vertices_checked} vertices bit-identical to per-year centroids"


def test_suitability_classifier(bundled_snapshot):
    with criterion("suitability-classifier") as info:
        table = {0: 0, 0.0001: 1, 25: 1, 25.0001: 2, 50: 2, 75: 3, 100: 4}
        for value, expected in table.items():
            assert classify_suitability(value) == expected, value

        grid = bundled_snapshot.grid
        classes = classify_grid(grid)
        for row in range(grid.n_rows):
            for col in range(grid.n_cols):
                value = float(grid.values[row, col])
                want = classify_suitability(None if np.isnan(value) else value)
                assert int(classes[row, col]) == (-1 if want is None else want)
        info["detail"] = f"boundary table exact; {grid.n_rows * grid.n_cols} cells match per-cell oracle"


def test_api_golden(fixture_snapshot, tmp_path):
    with criterion("api-golden") as info:
        client = TestClient(create_app(fixture_snapshot, regions_file=tmp_path / "regions.json"))
        for name, method, url, body in GOLDEN_REQUESTS:
            response = _call(client, method, url, body)
            assert response.status_code == 200, name
            golden = (GOLDEN / name).read_bytes()
            assert response.content == golden, f"{name} drifted from committed golden bytes"
            if method == "POST":
                context = payloads.build_context(
                    fixture_snapshot,
                    regions=body.get("regions"),
                    window=body.get("window"),
                    serotypes=body.get("serotypes"),
                )
                kind = url.rsplit("/", 1)[-1]
                builders = {
                    "reports": lambda: payloads.reports_payload(fixture_snapshot, context),
                    "centroids": lambda: payloads.centroids_payload(
                        fixture_snapshot, context, mode=body.get("mode", "all")
                    ),
                    "trajectories": lambda: payloads.trajectories_payload(
                        fixture_snapshot, context, serotype=body.get("serotype", "all")
                    ),
                    "cooccurrence": lambda: payloads.cooccurrence_payload(
                        fixture_snapshot, context, body.get("combinations", "all")
                    ),
                    "timeline": lambda: payloads.timeline_payload(fixture_snapshot, context),
                }
                assert response.json() == builders[kind]()
        info["detail"] = f"{len(GOLDEN_REQUESTS)} endpoints byte-identical and library-equal"
