/** Canned service responses behind a recording fetch mock. */
import type {
  ContinentNode,
  MetaResponse,
  QueryContext,
  RegionsResponse,
  ReportPayload,
  SerotypeName,
  WindowPayload,
} from "../src/types.js";

export interface RecordedRequest {
  url: string;
  method: string;
  body: QueryContext & Record<string, unknown>;
}

export const TEST_TREE: ContinentNode[] = [
  {
    name: "Asia",
    subcontinents: [
      {
        name: "South-eastern Asia",
        countries: [
          { code: "THA", name: "Thailand" },
          { code: "VNM", name: "Vietnam" },
        ],
      },
    ],
  },
  {
    name: "Africa",
    subcontinents: [
      { name: "Western Africa", countries: [{ code: "SEN", name: "Senegal" }] },
    ],
  },
];

export const TEST_META: MetaResponse = {
  report_count: 12,
  year_min: 1943,
  year_max: 2020,
  source_counts: { core: 12 },
  serotypes: ["DENV1", "DENV2", "DENV3", "DENV4"],
  region_tree: TEST_TREE,
};

export const TEST_REGIONS: RegionsResponse = {
  version: 0,
  regions: [
    { name: "Asia", countries: ["THA", "VNM"], visible: true, shade: 0 },
    { name: "Africa", countries: ["SEN"], visible: true, shade: 1 },
  ],
};

export function makeReport(partial: Partial<ReportPayload> = {}): ReportPayload {
  const serotypes = partial.serotypes ?? (["DENV1", "DENV2", "DENV3", "DENV4"] as SerotypeName[]);
  return {
    id: 1,
    latitude: 12,
    longitude: 20,
    country: "THA",
    year: 1981,
    source: "core",
    serotypes,
    glyph: {
      sections: serotypes,
      section_angle: 360 / serotypes.length,
      radius_px: [6, 8, 10, 12][serotypes.length - 1],
    },
    ...partial,
  };
}

function windowPayload(body: { window?: { current_year: number; interval_length: number } }): WindowPayload {
  const currentYear = body.window?.current_year ?? TEST_META.year_max;
  const interval = body.window?.interval_length ?? TEST_META.year_max - TEST_META.year_min + 1;
  return {
    current_year: currentYear,
    interval_length: interval,
    start_year: Math.max(TEST_META.year_min, currentYear - interval + 1),
    end_year: currentYear,
  };
}

export interface MockApi {
  fetchFn: typeof fetch;
  requests: RecordedRequest[];
  reports: ReportPayload[];
  failing: boolean;
}

export function mockApi(reports: ReportPayload[] = []): MockApi {
  const requests: RecordedRequest[] = [];
  const state: MockApi = {
    requests,
    reports,
    fetchFn: undefined as unknown as typeof fetch,
    failing: false,
  };

  const fetchFn = (async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input);
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(String(init.body)) : {};
    requests.push({ url, method, body });
    if (state.failing && url.includes("/api/query/")) {
      return new Response(
        JSON.stringify({ code: "boom", field: null, message: "backend down" }),
        { status: 500 },
      );
    }

    const respond = (payload: unknown) =>
      new Response(JSON.stringify(payload), {
        status: 200,
        headers: { "content-type": "application/json" },
      });

    if (url.endsWith("/api/meta")) return respond(TEST_META);
    if (url.endsWith("/api/regions") && method === "GET") return respond(TEST_REGIONS);
    if (url.endsWith("/api/regions") && method === "PUT") {
      return respond({ version: (body.version as number) + 1, regions: body.regions });
    }
    const window = windowPayload(body);
    if (url.endsWith("/api/query/reports")) {
      const visible = state.reports.filter(
        (r) => r.year >= window.start_year && r.year <= window.end_year,
      );
      return respond({ window, count: visible.length, reports: visible });
    }
    if (url.endsWith("/api/query/centroids")) {
      return respond({ window, mode: body.mode, centroids: [] });
    }
    if (url.endsWith("/api/query/trajectories")) {
      return respond({ window, trajectories: [] });
    }
    if (url.endsWith("/api/query/cooccurrence")) {
      const combos = (body.combinations as SerotypeName[][]) ?? [];
      return respond({
        window,
        slice_size: 10,
        combinations: combos.map((serotypes, i) => ({
          serotypes,
          mask: 0,
          exact_count: i + 1,
          superset_count: 2 * (i + 1),
          exact_proportion: (i + 1) / 10,
          superset_proportion: (2 * (i + 1)) / 10,
        })),
      });
    }
    if (url.endsWith("/api/query/timeline")) {
      const years = [];
      for (let y = window.start_year; y <= window.end_year; y++) years.push(y);
      const rows = [];
      for (const region of body.regions ?? []) {
        if (region.visible === false) continue;
        for (const serotype of body.serotypes ?? []) {
          rows.push({
            region: region.name,
            serotype,
            counts: years.map((y) => (y * 7 + rows.length) % 4),
          });
        }
      }
      return respond({ window, years, rows });
    }
    if (url.includes("/api/suitability")) {
      return respond({
        bbox: [-180, -90, 180, 90],
        n_rows: 2,
        n_cols: 2,
        cell_width: 180,
        cell_height: 90,
        classes: [
          [0, 2],
          [4, null],
        ],
      });
    }
    return new Response(JSON.stringify({ code: "not_found", field: null, message: url }), {
      status: 404,
    });
  }) as typeof fetch;

  state.fetchFn = fetchFn;
  return state;
}

export function contextOf(request: RecordedRequest): QueryContext {
  return {
    regions: request.body.regions,
    window: request.body.window,
    serotypes: request.body.serotypes,
  };
}
