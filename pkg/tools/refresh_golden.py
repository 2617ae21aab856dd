#!/usr/bin/env python3
"""Regenerate tests/golden/*.json from the committed fixture dataset.

Run after any intentional change to payload shapes, then review the diff.
"""
from __future__ import annotations

import shutil
import sys
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from geoden.ingest import bundled_data_dir, load_data_dir
from geoden.service import create_app
from test_service import GOLDEN_REQUESTS, _call


def main() -> None:
    fixtures = ROOT / "tests" / "fixtures"
    golden = ROOT / "tests" / "golden"
    golden.mkdir(exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        data_dir = Path(tmp) / "data"
        data_dir.mkdir()
        shutil.copy(bundled_data_dir() / "gazetteer.json", data_dir / "gazetteer.json")
        for name in ("reports_core.csv", "reports_supplement.csv", "suitability.asc"):
            shutil.copy(fixtures / name, data_dir / name)
        snapshot, _ = load_data_dir(data_dir)
        client = TestClient(create_app(snapshot, regions_file=Path(tmp) / "regions.json"))
        for name, method, url, body in GOLDEN_REQUESTS:
            response = _call(client, method, url, body)
            response.raise_for_status()
            (golden / name).write_bytes(response.content)
            print(f"wrote {name} ({len(response.content)} bytes)")


if __name__ == "__main__":
    main()
