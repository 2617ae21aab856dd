/** Wire types mirroring the service's JSON payloads. */

export type SerotypeName = "DENV1" | "DENV2" | "DENV3" | "DENV4";

export const SEROTYPES: readonly SerotypeName[] = ["DENV1", "DENV2", "DENV3", "DENV4"];

export interface WindowPayload {
  current_year: number;
  interval_length: number;
  start_year: number;
  end_year: number;
}

export interface RegionSpec {
  name: string;
  countries?: string[];
  visible?: boolean;
}

/** The shared request context every query endpoint accepts. */
export interface QueryContext {
  regions: RegionSpec[];
  window: { current_year: number; interval_length: number };
  serotypes: SerotypeName[];
}

export interface GlyphPayload {
  sections: SerotypeName[];
  section_angle: number;
  radius_px: number;
}

export interface ReportPayload {
  id: number;
  latitude: number;
  longitude: number;
  country: string;
  year: number;
  serotypes: SerotypeName[];
  source: string;
  glyph: GlyphPayload;
}

export interface ReportsResponse {
  window: WindowPayload;
  count: number;
  reports: ReportPayload[];
}

export interface CentroidPayload {
  region: string;
  serotype: SerotypeName | "all";
  latitude: number;
  longitude: number;
  report_count: number;
}

export interface CentroidsResponse {
  window: WindowPayload;
  mode: string;
  centroids: CentroidPayload[];
}

export interface TrajectoryVertexPayload {
  year: number;
  latitude: number;
  longitude: number;
}

export interface TrajectoryPayload {
  region: string;
  serotype: SerotypeName | "all";
  vertices: TrajectoryVertexPayload[];
}

export interface TrajectoriesResponse {
  window: WindowPayload;
  trajectories: TrajectoryPayload[];
}

export interface CombinationPayload {
  serotypes: SerotypeName[];
  mask: number;
  exact_count: number;
  superset_count: number;
  exact_proportion: number;
  superset_proportion: number;
}

export interface CooccurrenceResponse {
  window: WindowPayload;
  slice_size: number;
  combinations: CombinationPayload[];
}

export interface TimelineRowPayload {
  region: string;
  serotype: SerotypeName;
  counts: number[];
}

export interface TimelineResponse {
  window: WindowPayload;
  years: number[];
  rows: TimelineRowPayload[];
}

export interface CountryNode {
  code: string;
  name: string;
}

export interface SubcontinentNode {
  name: string;
  countries: CountryNode[];
}

export interface ContinentNode {
  name: string;
  subcontinents: SubcontinentNode[];
}

export interface MetaResponse {
  report_count: number;
  year_min: number;
  year_max: number;
  source_counts: Record<string, number>;
  serotypes: SerotypeName[];
  region_tree: ContinentNode[];
}

export interface StoredRegion {
  name: string;
  countries: string[];
  visible: boolean;
  shade: number;
}

export interface RegionsResponse {
  version: number;
  regions: StoredRegion[];
}

export interface SuitabilityResponse {
  bbox: [number, number, number, number];
  n_rows: number;
  n_cols: number;
  cell_width: number;
  cell_height: number;
  classes: (number | null)[][];
}
