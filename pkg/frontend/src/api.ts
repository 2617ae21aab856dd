import type { UiState } from "./state.js";
import type {
  CentroidsResponse,
  CooccurrenceResponse,
  MetaResponse,
  QueryContext,
  RegionsResponse,
  ReportsResponse,
  SerotypeName,
  StoredRegion,
  SuitabilityResponse,
  TimelineResponse,
  TrajectoriesResponse,
} from "./types.js";

/**
 * The one place request contexts are built: every panel's query embeds the
 * object returned here, which is what keeps the linked views consistent.
 */
export function requestContext(state: UiState): QueryContext {
  return {
    regions: state.regions.map((r) => ({
      name: r.name,
      countries: [...r.countries],
      visible: r.visible,
    })),
    window: { current_year: state.currentYear, interval_length: state.intervalLength },
    serotypes: [...state.serotypes],
  };
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

type FetchLike = typeof fetch;

/** Thin JSON client; at most one in-flight request per endpoint, newer
 * requests abort superseded ones. */
export class ApiClient {
  private inflight = new Map<string, AbortController>();

  constructor(
    private readonly fetchFn: FetchLike = fetch,
    private readonly base: string = "",
  ) {}

  private async request<T>(key: string, url: string, init?: RequestInit): Promise<T> {
    this.inflight.get(key)?.abort();
    const controller = new AbortController();
    this.inflight.set(key, controller);
    try {
      const response = await this.fetchFn(this.base + url, { ...init, signal: controller.signal });
      const body = await response.json();
      if (!response.ok) {
        throw new ApiError(response.status, body.code ?? "error", body.message ?? "request failed");
      }
      return body as T;
    } finally {
      if (this.inflight.get(key) === controller) this.inflight.delete(key);
    }
  }

  private post<T>(key: string, url: string, body: unknown): Promise<T> {
    return this.request<T>(key, url, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  meta(): Promise<MetaResponse> {
    return this.request("meta", "/api/meta");
  }

  reports(context: QueryContext): Promise<ReportsResponse> {
    return this.post("reports", "/api/query/reports", context);
  }

  centroids(context: QueryContext, mode: "all" | "per_serotype"): Promise<CentroidsResponse> {
    return this.post("centroids", "/api/query/centroids", { ...context, mode });
  }

  trajectories(
    context: QueryContext,
    serotype: "all" | "each" | SerotypeName,
  ): Promise<TrajectoriesResponse> {
    return this.post("trajectories", "/api/query/trajectories", { ...context, serotype });
  }

  cooccurrence(
    context: QueryContext,
    combinations: SerotypeName[][],
  ): Promise<CooccurrenceResponse> {
    return this.post("cooccurrence", "/api/query/cooccurrence", { ...context, combinations });
  }

  timeline(context: QueryContext): Promise<TimelineResponse> {
    return this.post("timeline", "/api/query/timeline", context);
  }

  regions(): Promise<RegionsResponse> {
    return this.request("regions", "/api/regions");
  }

  putRegions(version: number, regions: StoredRegion[]): Promise<RegionsResponse> {
    return this.request("regions-put", "/api/regions", {
      method: "PUT",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ version, regions }),
    });
  }

  suitability(bbox: string, res: number): Promise<SuitabilityResponse> {
    return this.request("suitability", `/api/suitability?bbox=${bbox}&res=${res}`);
  }
}
