"""Ingestion: CSV parsing and validation, gazetteer lookups, raster loading,
snapshot indexing."""
import io
import logging

import numpy as np
import pytest

from geoden.ingest import (
    IngestError,
    build_snapshot,
    load_suitability_grid,
    normalize_country,
    parse_reports,
)
from geoden.model import Serotype, Source

HEADER = "latitude,longitude,country,year,denv1,denv2,denv3,denv4\n"


def _parse(body: str, gazetteer, **kw):
    return parse_reports(io.StringIO(HEADER + body), Source.CORE, gazetteer, **kw)


class TestNormalizeCountry:
    def test_canonical_name(self, gazetteer):
        assert normalize_country("Brazil", gazetteer) == "BRA"

    def test_alias_and_case_folding(self, gazetteer):
        assert normalize_country("viet nam", gazetteer) == "VNM"
        assert normalize_country("BURMA", gazetteer) == "MMR"
        assert normalize_country("BRA", gazetteer) == "BRA"

    def test_diacritic_insensitive(self, gazetteer):
        assert normalize_country("Côte d'Ivoire", gazetteer) == "CIV"
        assert normalize_country("cote d ivoire", gazetteer) == "CIV"
        assert normalize_country("Reunion", gazetteer) == "REU"

    def test_no_match(self, gazetteer):
        assert normalize_country("Atlantis", gazetteer) is None


class TestParseReports:
    def test_direct_field_mapping(self, gazetteer):
        reports, diag = _parse("14.6,121.0,Philippines,1966,1,1,0,0\n", gazetteer)
        assert diag.accepted == 1 and not diag.rejected
        r = reports[0]
        assert r.serotypes == {Serotype.DENV1, Serotype.DENV2}
        assert (r.latitude, r.longitude, r.country, r.year) == (14.6, 121.0, "PHL", 1966)
        assert r.source is Source.CORE

    def test_all_flags_zero_rejected(self, gazetteer):
        reports, diag = _parse("14.6,121.0,Philippines,1966,0,0,0,0\n", gazetteer)
        assert not reports
        assert diag.rejected == ((1, "no serotype reported"),)

    @pytest.mark.parametrize(
        "row,fragment",
        [
            ("95.0,121.0,Philippines,1966,1,0,0,0", "latitude"),
            ("14.6,181.0,Philippines,1966,1,0,0,0", "longitude"),
            ("abc,121.0,Philippines,1966,1,0,0,0", "not numeric"),
            ("14.6,121.0,Philippines,2525,1,0,0,0", "out of span"),
            ("14.6,121.0,Philippines,19x6,1,0,0,0", "not an integer"),
            ("14.6,121.0,Philippines,1966,2,0,0,0", "must be 0 or 1"),
            ("14.6,121.0,Atlantis,1966,1,0,0,0", "unknown country"),
            ("14.6,121.0,Philippines,1966,1,0,0", "fields"),
        ],
    )
    def test_bad_rows_rejected_not_fixed(self, gazetteer, row, fragment):
        reports, diag = _parse(row + "\n", gazetteer)
        assert not reports
        assert len(diag.rejected) == 1
        assert fragment in diag.rejected[0][1]

    def test_ingest_continues_after_bad_row(self, gazetteer):
        body = (
            "14.6,121.0,Philippines,1966,0,0,0,0\n"
            "13.75,100.5,Thailand,1970,0,1,0,0\n"
            "10.8,106.7,Viet Nam,1975,1,0,1,0\n"
        )
        reports, diag = _parse(body, gazetteer)
        assert diag.accepted == 2
        assert [r.id for r in reports] == [0, 1]
        assert diag.total_rows == 3

    def test_malformed_header_fatal(self, gazetteer):
        with pytest.raises(IngestError, match="header"):
            parse_reports(io.StringIO("lat,lng\n1,2\n"), Source.CORE, gazetteer)

    def test_empty_stream_fatal(self, gazetteer):
        with pytest.raises(IngestError):
            parse_reports(io.StringIO(""), Source.CORE, gazetteer)

    def test_non_utf8_fatal(self, gazetteer):
        stream = io.BytesIO(HEADER.encode() + b"14.6,121.0,\xff\xfe,1966,1,0,0,0\n")
        with pytest.raises(IngestError, match="UTF-8"):
            parse_reports(stream, Source.CORE, gazetteer)

    def test_custom_year_span(self, gazetteer):
        reports, diag = _parse(
            "14.6,121.0,Philippines,1920,1,0,0,0\n", gazetteer, year_min=1900, year_max=1930
        )
        assert diag.accepted == 1 and reports[0].year == 1920

    def test_determinism(self, gazetteer):
        body = "13.75,100.5,Thailand,1970,0,1,0,0\n10.8,106.7,Vietnam,1975,1,0,1,0\n"
        first, _ = _parse(body, gazetteer)
        second, _ = _parse(body, gazetteer)
        assert first == second


GRID_2X2 = "ncols 2\nnrows 2\nxllcorner 0.0\nyllcorner 0.0\ncellsize 1.0\nNODATA_value -9999\n0 50\n75 100\n"


class TestLoadSuitabilityGrid:
    def test_direct_parse(self):
        grid = load_suitability_grid(io.StringIO(GRID_2X2))
        assert grid.values.tolist() == [[0.0, 50.0], [75.0, 100.0]]
        assert (grid.n_rows, grid.n_cols) == (2, 2)
        assert (grid.origin_lat, grid.origin_lng, grid.cell_size) == (0.0, 0.0, 1.0)

    def test_nodata_becomes_nan(self):
        grid = load_suitability_grid(io.StringIO(GRID_2X2.replace("75", "-9999")))
        assert np.isnan(grid.values[1, 0])

    def test_fraction_grid_scaled_with_warning(self, caplog):
        body = GRID_2X2.replace("0 50", "0.1 0.5").replace("75 100", "0.75 1.0")
        with caplog.at_level(logging.WARNING, logger="geoden.ingest"):
            grid = load_suitability_grid(io.StringIO(body))
        assert grid.values.tolist() == [[10.0, 50.0], [75.0, 100.0]]
        assert any("scaling" in rec.message for rec in caplog.records)

    def test_ambiguous_scale_fatal(self):
        body = GRID_2X2.replace("0 50", "0.1 0.5").replace("75 100", "0.75 1.5")
        with pytest.raises(IngestError, match="ambiguous"):
            load_suitability_grid(io.StringIO(body))

    def test_out_of_range_fatal_with_cell(self):
        body = GRID_2X2.replace("75 100", "75 150")
        with pytest.raises(IngestError, match=r"row 1, col 1"):
            load_suitability_grid(io.StringIO(body))

    def test_shape_mismatch_fatal(self):
        with pytest.raises(IngestError, match="shape"):
            load_suitability_grid(io.StringIO(GRID_2X2.replace("75 100\n", "75\n")))

    def test_missing_header_key_fatal(self):
        with pytest.raises(IngestError, match="cellsize"):
            load_suitability_grid(io.StringIO(GRID_2X2.replace("cellsize 1.0\n", "")))

    def test_values_are_read_only(self):
        grid = load_suitability_grid(io.StringIO(GRID_2X2))
        with pytest.raises(ValueError):
            grid.values[0, 0] = 1.0


class TestBuildSnapshot:
    def test_index_consistency_small(self, gazetteer):
        reports, _ = _parse(
            "13.75,100.5,Thailand,1970,0,1,0,0\n"
            "10.8,106.7,Vietnam,1975,1,0,1,0\n"
            "13.9,100.6,Thailand,1975,1,0,0,0\n",
            gazetteer,
        )
        snapshot = build_snapshot(reports, gazetteer)
        assert set(snapshot.by_year) == {1970, 1975}
        ids = {i for ids in snapshot.by_year.values() for i in ids}
        assert ids == {0, 1, 2}
        assert snapshot.by_country["THA"] == (0, 2)
        assert snapshot.meta.report_count == 3

    def test_empty_fatal(self, gazetteer):
        with pytest.raises(IngestError, match="empty"):
            build_snapshot([], gazetteer)

    def test_ids_reassigned_when_sources_combined(self, gazetteer):
        a, _ = _parse("13.75,100.5,Thailand,1970,0,1,0,0\n", gazetteer)
        b, _ = _parse("10.8,106.7,Vietnam,1975,1,0,1,0\n", gazetteer)
        snapshot = build_snapshot(a + b, gazetteer)
        assert [r.id for r in snapshot.reports] == [0, 1]


class TestBundledDataset:
    def test_zero_rejects_and_counts(self, bundled):
        snapshot, diagnostics = bundled
        assert all(not d.rejected for d in diagnostics.values())
        assert diagnostics["core"].accepted == 3260
        assert diagnostics["supplement"].accepted == 289
        assert snapshot.meta.report_count == 3549
        assert dict(snapshot.meta.source_counts) == {"core": 3260, "supplement": 289}

    def test_index_soundness(self, bundled_snapshot):
        for r in bundled_snapshot.reports:
            assert r.id in bundled_snapshot.by_year[r.year]
            assert r.id in bundled_snapshot.by_country[r.country]
        year_total = sum(len(v) for v in bundled_snapshot.by_year.values())
        country_total = sum(len(v) for v in bundled_snapshot.by_country.values())
        assert year_total == country_total == bundled_snapshot.meta.report_count

    def test_grid_covers_report_latitudes(self, bundled_snapshot):
        grid = bundled_snapshot.grid
        assert grid is not None
        lats = [r.latitude for r in bundled_snapshot.reports]
        assert grid.origin_lat <= min(lats) and max(lats) <= grid.lat_max

    def test_determinism(self, bundled_snapshot):
        from geoden.ingest import load_data_dir

        again, _ = load_data_dir()
        assert again.reports == bundled_snapshot.reports
        assert dict(again.by_year) == dict(bundled_snapshot.by_year)
        assert again.meta == bundled_snapshot.meta
