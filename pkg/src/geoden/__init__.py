"""geoden: query engine, HTTP service, and CLI for exploring global dengue
serotype case reports in space and time."""

from .analytics import (
    DEFAULT_GLYPH_RADII,
    CombinationCount,
    CooccurrenceResult,
    GeoPoint,
    GlyphSpec,
    ReportSlice,
    TimelineMatrix,
    TimelineRow,
    Trajectory,
    TrajectoryVertex,
    centroid,
    classify_grid,
    classify_suitability,
    cooccurrence,
    filter_reports,
    glyph_spec,
    serotype_centroids,
    suitability_at,
    timeline,
    trajectory,
)
from .ingest import (
    Gazetteer,
    IngestDiagnostics,
    IngestError,
    Snapshot,
    SnapshotMeta,
    SuitabilityGrid,
    build_snapshot,
    bundled_data_dir,
    load_data_dir,
    load_gazetteer,
    load_suitability_grid,
    normalize_country,
    parse_reports,
)
from .model import (
    ALL_SEROTYPES,
    DATASET_YEAR_MAX,
    DATASET_YEAR_MIN,
    SEROTYPES,
    Region,
    RegionTree,
    Report,
    SelectionContext,
    Serotype,
    Source,
    YearWindow,
    decode_serotype_set,
    encode_serotype_set,
    enumerate_combinations,
    format_serotype_set,
    resolve_window,
)

__version__ = "0.1.0"
