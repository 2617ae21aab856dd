"""HTTP service: endpoint contracts, error envelopes, region persistence,
API/library equivalence, and byte-stable golden responses."""
import json

import numpy as np
import pytest
from fastapi.testclient import TestClient

from geoden import payloads
from geoden.analytics import classify_grid
from geoden.service import create_app
from conftest import GOLDEN

FULL_WINDOW = {"current_year": 1995, "interval_length": 6}

GOLDEN_REQUESTS = [
    ("meta.json", "GET", "/api/meta", None),
    ("reports.json", "POST", "/api/query/reports", {"window": FULL_WINDOW}),
    ("centroids.json", "POST", "/api/query/centroids", {"window": FULL_WINDOW, "mode": "per_serotype"}),
    (
        "trajectories.json",
        "POST",
        "/api/query/trajectories",
        {"window": FULL_WINDOW, "serotype": "all", "regions": [{"name": "Asia"}, {"name": "South America"}]},
    ),
    ("cooccurrence.json", "POST", "/api/query/cooccurrence", {"window": FULL_WINDOW, "combinations": "all"}),
    (
        "timeline.json",
        "POST",
        "/api/query/timeline",
        {"window": {"current_year": 1994, "interval_length": 5}, "serotypes": ["DENV1", "DENV2"]},
    ),
    ("suitability.json", "GET", "/api/suitability?bbox=95,-10,145,30&res=16", None),
    ("regions.json", "GET", "/api/regions", None),
]


@pytest.fixture()
def client(fixture_snapshot, tmp_path):
    app = create_app(fixture_snapshot, regions_file=tmp_path / "regions.json")
    return TestClient(app)


def _call(client, method, url, body):
    return client.get(url) if method == "GET" else client.post(url, json=body)


class TestMeta:
    def test_fixture_meta(self, client, fixture_snapshot):
        data = client.get("/api/meta").json()
        assert data["report_count"] == 15
        assert (data["year_min"], data["year_max"]) == (1990, 2020)
        assert data["source_counts"] == {"core": 12, "supplement": 3}
        assert data["serotypes"] == ["DENV1", "DENV2", "DENV3", "DENV4"]
        assert any(c["name"] == "Asia" for c in data["region_tree"])

    def test_unloaded_server_is_503(self, tmp_path):
        bare = TestClient(create_app(None, regions_file=tmp_path / "r.json"))
        response = bare.get("/api/meta")
        assert response.status_code == 503
        assert response.json()["code"] == "snapshot_not_loaded"


class TestQueryReports:
    def test_full_universe(self, client, fixture_snapshot):
        response = client.post("/api/query/reports", json={})
        assert response.status_code == 200
        data = response.json()
        assert data["count"] == fixture_snapshot.meta.report_count
        assert data["window"]["start_year"] == 1990
        assert data["window"]["end_year"] == 2020

    def test_empty_serotypes_is_valid_and_empty(self, client):
        response = client.post("/api/query/reports", json={"serotypes": []})
        assert response.status_code == 200
        assert response.json()["reports"] == []

    def test_unknown_country_is_422(self, client):
        response = client.post(
            "/api/query/reports",
            json={"regions": [{"name": "bad", "countries": ["XXX"]}]},
        )
        assert response.status_code == 422
        error = response.json()
        assert error["code"] == "unknown_country"
        assert error["field"] == "regions[0].countries[0]"

    def test_unknown_preset_region_is_422(self, client):
        response = client.post("/api/query/reports", json={"regions": [{"name": "Narnia"}]})
        assert response.status_code == 422
        assert response.json()["code"] == "unknown_region"

    def test_type_error_is_400_with_field_path(self, client):
        response = client.post(
            "/api/query/reports",
            json={"window": {"current_year": "abc", "interval_length": 5}},
        )
        assert response.status_code == 400
        error = response.json()
        assert error["code"] == "invalid_request"
        assert error["field"] == "window.current_year"

    def test_out_of_span_year_is_400(self, client):
        response = client.post(
            "/api/query/reports",
            json={"window": {"current_year": 1800, "interval_length": 5}},
        )
        assert response.status_code == 400
        assert response.json()["field"] == "window"

    def test_unknown_serotype_is_400(self, client):
        response = client.post("/api/query/reports", json={"serotypes": ["denv9"]})
        assert response.status_code == 400
        assert response.json()["field"] == "serotypes[0]"


class TestQueryEndpointsMirrorLibrary:
    @pytest.mark.parametrize("name,method,url,body", GOLDEN_REQUESTS[1:6])
    def test_structurally_equal_to_direct_calls(
        self, client, fixture_snapshot, name, method, url, body
    ):
        got = _call(client, method, url, body).json()
        context = payloads.build_context(
            fixture_snapshot,
            regions=body.get("regions"),
            window=body.get("window"),
            serotypes=body.get("serotypes"),
        )
        kind = url.rsplit("/", 1)[-1]
        if kind == "reports":
            want = payloads.reports_payload(fixture_snapshot, context)
        elif kind == "centroids":
            want = payloads.centroids_payload(fixture_snapshot, context, mode=body["mode"])
        elif kind == "trajectories":
            want = payloads.trajectories_payload(fixture_snapshot, context, serotype=body["serotype"])
        elif kind == "cooccurrence":
            want = payloads.cooccurrence_payload(fixture_snapshot, context, body["combinations"])
        else:
            want = payloads.timeline_payload(fixture_snapshot, context)
        assert got == want

    def test_single_report_year_gives_single_vertex(self, client):
        response = client.post(
            "/api/query/trajectories",
            json={
                "regions": [{"name": "jp", "countries": ["JPN"]}],
                "window": {"current_year": 1992, "interval_length": 3},
            },
        )
        trajectories = response.json()["trajectories"]
        assert len(trajectories) == 1
        assert [v["year"] for v in trajectories[0]["vertices"]] == [1990]

    def test_cooccurrence_partitions_slice(self, client):
        data = client.post("/api/query/cooccurrence", json={"combinations": "all"}).json()
        assert sum(c["exact_count"] for c in data["combinations"]) == data["slice_size"]

    def test_timeline_with_no_serotypes_has_no_rows(self, client):
        data = client.post("/api/query/timeline", json={"serotypes": []}).json()
        assert data["rows"] == []

    def test_statelessness(self, client):
        body = {"window": FULL_WINDOW, "serotypes": ["DENV2"]}
        first = client.post("/api/query/reports", json=body)
        client.post("/api/query/reports", json={"serotypes": []})
        second = client.post("/api/query/reports", json=body)
        assert first.content == second.content


class TestRegionStore:
    def test_defaults_and_put_bumps_version(self, fixture_snapshot, tmp_path):
        path = tmp_path / "regions.json"
        client = TestClient(create_app(fixture_snapshot, regions_file=path))
        initial = client.get("/api/regions").json()
        assert initial["version"] == 0
        assert [r["name"] for r in initial["regions"]] == [
            "Africa", "Antarctica", "Asia", "Europe", "North America", "Oceania", "South America",
        ]

        split = {
            "version": 0,
            "regions": [
                {"name": "West Africa E", "countries": ["NGA", "BEN", "TGO", "GHA"]},
                {"name": "West Africa W", "countries": ["SEN", "GMB", "GIN", "CIV"]},
            ],
        }
        response = client.put("/api/regions", json=split)
        assert response.status_code == 200
        assert response.json()["version"] == 1

        # same base version again: the slower writer loses
        conflict = client.put("/api/regions", json=split)
        assert conflict.status_code == 409
        assert conflict.json()["code"] == "version_conflict"

        # a fresh process sees the persisted store
        reopened = TestClient(create_app(fixture_snapshot, regions_file=path))
        data = reopened.get("/api/regions").json()
        assert data["version"] == 1
        assert [r["name"] for r in data["regions"]] == ["West Africa E", "West Africa W"]

    def test_put_unknown_country_is_422(self, client):
        response = client.put(
            "/api/regions",
            json={"version": 0, "regions": [{"name": "x", "countries": ["ZZZ"]}]},
        )
        assert response.status_code == 422
        assert response.json()["code"] == "unknown_country"

    def test_put_is_atomic_on_disk(self, fixture_snapshot, tmp_path):
        path = tmp_path / "regions.json"
        client = TestClient(create_app(fixture_snapshot, regions_file=path))
        client.put(
            "/api/regions",
            json={"version": 0, "regions": [{"name": "x", "countries": ["JPN"]}]},
        )
        on_disk = json.loads(path.read_text())
        assert on_disk["version"] == 1
        assert not list(path.parent.glob(".regions-*"))  # no temp litter


class TestSuitability:
    def test_single_cell_identity(self, client):
        data = client.get("/api/suitability?bbox=95,0,105,10&res=1").json()
        assert data["classes"] == [[0]]

    def test_bbox_outside_extent_is_all_nodata(self, client):
        data = client.get("/api/suitability?bbox=0,50,20,60&res=2").json()
        assert all(cls is None for row in data["classes"] for cls in row)

    def test_native_resolution_matches_per_cell_oracle(self, client, fixture_snapshot):
        grid = fixture_snapshot.grid
        data = client.get("/api/suitability?bbox=95,-10,145,30&res=64").json()
        assert (data["n_rows"], data["n_cols"]) == (grid.n_rows, grid.n_cols)
        want = classify_grid(grid)
        got = np.array([[-1 if c is None else c for c in row] for row in data["classes"]])
        assert (got == want).all()

    def test_malformed_bbox_is_400(self, client):
        for bad in ("1,2,3", "a,b,c,d", "10,0,5,20", "95,-10,145,95"):
            response = client.get(f"/api/suitability?bbox={bad}")
            assert response.status_code == 400, bad
            assert response.json()["field"] == "bbox"


class TestBundledService:
    @pytest.fixture()
    def bundled_client(self, bundled_snapshot, tmp_path):
        return TestClient(create_app(bundled_snapshot, regions_file=tmp_path / "regions.json"))

    def test_meta_reports_full_dataset(self, bundled_client):
        data = bundled_client.get("/api/meta").json()
        assert data["report_count"] == 3549
        assert (data["year_min"], data["year_max"]) == (1943, 2020)

    def test_full_universe_request_returns_all_reports(self, bundled_client):
        data = bundled_client.post("/api/query/reports", json={}).json()
        assert data["count"] == 3549
        assert len(data["reports"]) == 3549

    def test_timeline_africa_denv4(self, bundled_client):
        data = bundled_client.post(
            "/api/query/timeline",
            json={"regions": [{"name": "Africa"}], "serotypes": ["DENV4"]},
        ).json()
        nonzero = {
            year
            for row in data["rows"]
            for year, count in zip(data["years"], row["counts"])
            if count
        }
        assert nonzero == {1983, 1995}

    def test_full_extent_suitability_matches_grid(self, bundled_client, bundled_snapshot):
        data = bundled_client.get("/api/suitability?bbox=-180,-90,180,90&res=360").json()
        grid = bundled_snapshot.grid
        assert (data["n_rows"], data["n_cols"]) == (grid.n_rows, grid.n_cols)
        want = classify_grid(grid)
        got = np.array([[-1 if c is None else c for c in row] for row in data["classes"]])
        assert (got == want).all()


class TestGolden:
    """Committed golden bytes: regenerate with tools/refresh_golden.py."""

    @pytest.mark.parametrize("name,method,url,body", GOLDEN_REQUESTS)
    def test_response_bytes_match_golden(self, client, name, method, url, body):
        response = _call(client, method, url, body)
        assert response.status_code == 200
        golden = (GOLDEN / name).read_bytes()
        assert response.content == golden, f"{name} drifted; rerun tools/refresh_golden.py"

    @pytest.mark.parametrize("name,method,url,body", GOLDEN_REQUESTS)
    def test_repeat_call_is_byte_identical(self, client, name, method, url, body):
        assert _call(client, method, url, body).content == _call(client, method, url, body).content
