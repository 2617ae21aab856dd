import shutil
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from geoden.ingest import bundled_data_dir, load_data_dir, load_gazetteer

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def gazetteer():
    return load_gazetteer(bundled_data_dir() / "gazetteer.json")


@pytest.fixture(scope="session")
def bundled():
    """(snapshot, diagnostics) for the bundled dataset."""
    return load_data_dir()


@pytest.fixture(scope="session")
def bundled_snapshot(bundled):
    return bundled[0]


@pytest.fixture(scope="session")
def fixture_data_dir(tmp_path_factory) -> Path:
    """Small committed dataset laid out as a loadable data directory."""
    root = tmp_path_factory.mktemp("fixture-data")
    shutil.copy(bundled_data_dir() / "gazetteer.json", root / "gazetteer.json")
    shutil.copy(FIXTURES / "reports_core.csv", root / "reports_core.csv")
    shutil.copy(FIXTURES / "reports_supplement.csv", root / "reports_supplement.csv")
    shutil.copy(FIXTURES / "suitability.asc", root / "suitability.asc")
    return root


@pytest.fixture(scope="session")
def fixture_snapshot(fixture_data_dir):
    snapshot, diagnostics = load_data_dir(fixture_data_dir)
    assert all(not d.rejected for d in diagnostics.values())
    return snapshot
