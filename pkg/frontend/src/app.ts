import { AnimationLoop, type Timer } from "./animation.js";
import { ApiClient, requestContext } from "./api.js";
import { CooccurrencePanel } from "./cooccurrence.js";
import {
  RegionPanel,
  animationPanel,
  intervalPanel,
  mapOptionsPanel,
  serotypePanel,
  yearPanel,
} from "./controls.js";
import { MapPanel } from "./map.js";
import { Store, type UiState } from "./state.js";
import { TimelinePanel } from "./timeline.js";

export type Endpoint = "reports" | "centroids" | "cooccurrence" | "timeline" | "suitability";

/** State keys that change the shared query context: all panels re-query. */
const CONTEXT_KEYS: readonly (keyof UiState)[] = [
  "currentYear",
  "intervalLength",
  "serotypes",
  "regions",
];

export function affectedEndpoints(changed: Set<keyof UiState>): Set<Endpoint> {
  const endpoints = new Set<Endpoint>();
  if (CONTEXT_KEYS.some((key) => changed.has(key))) {
    endpoints.add("reports");
    endpoints.add("centroids");
    endpoints.add("cooccurrence");
    endpoints.add("timeline");
  }
  if (changed.has("combinations")) endpoints.add("cooccurrence");
  if (changed.has("centroidMode") || changed.has("trajectorySerotype")) endpoints.add("centroids");
  if (changed.has("baseLayer")) endpoints.add("suitability");
  return endpoints;
}

export interface AppOptions {
  fetchFn?: typeof fetch;
  timer?: Timer;
  debounceMs?: number;
}

/** Wires the store, the API client, and the five panels together. */
export class App {
  readonly store: Store;
  readonly api: ApiClient;
  readonly loop: AnimationLoop;
  map!: MapPanel;
  timeline!: TimelinePanel;
  cooccurrence!: CooccurrencePanel;
  regionPanel!: RegionPanel;

  private readonly debounceMs: number;
  private pending = new Set<Endpoint>();
  private debounceHandle: ReturnType<typeof setTimeout> | null = null;
  private inflight = 0;
  private idleResolvers: (() => void)[] = [];

  constructor(
    private readonly root: HTMLElement,
    options: AppOptions = {},
  ) {
    this.store = new Store();
    this.api = new ApiClient(options.fetchFn ?? fetch.bind(globalThis));
    this.loop = new AnimationLoop(this.store, options.timer);
    this.debounceMs = options.debounceMs ?? 100;
  }

  async init(): Promise<void> {
    const meta = await this.api.meta();
    const regions = await this.api.regions();
    this.store.update({
      yearMin: meta.year_min,
      yearMax: meta.year_max,
      currentYear: meta.year_max,
      regions: regions.regions,
      regionsVersion: regions.version,
    });
    this.buildLayout();
    this.regionPanel.setTree(meta.region_tree);
    this.regionPanel.renderList();
    this.store.subscribe((state, changed) => {
      this.renderPanels();
      this.schedule(affectedEndpoints(changed));
    });
    this.schedule(new Set(["reports", "centroids", "cooccurrence", "timeline"]));
    await this.idle();
  }

  /** Resolves once no queries are pending or in flight. */
  idle(): Promise<void> {
    if (this.inflight === 0 && this.pending.size === 0 && this.debounceHandle === null) {
      return Promise.resolve();
    }
    return new Promise((resolve) => this.idleResolvers.push(resolve));
  }

  private buildLayout(): void {
    this.root.replaceChildren();
    this.root.className = "app-layout";

    const sidebar = document.createElement("aside");
    sidebar.className = "sidebar";
    const main = document.createElement("main");
    main.className = "main-column";

    const toolbar = document.createElement("div");
    toolbar.className = "toolbar";
    const mapContainer = document.createElement("div");
    mapContainer.id = "map";
    const timelineContainer = document.createElement("div");
    timelineContainer.id = "timeline";
    const cooccurrenceContainer = document.createElement("div");
    cooccurrenceContainer.id = "cooccurrence";

    this.map = new MapPanel(mapContainer);
    this.timeline = new TimelinePanel(timelineContainer, this.store);
    this.cooccurrence = new CooccurrencePanel(cooccurrenceContainer, this.store);
    this.regionPanel = new RegionPanel(this.store, this.api, (msg) => this.toast(msg));

    sidebar.append(
      serotypePanel(this.store),
      animationPanel(this.store, this.loop),
      intervalPanel(this.store),
      this.regionPanel.root,
      cooccurrenceContainer,
    );
    toolbar.append(yearPanel(this.store), mapOptionsPanel(this.store));
    main.append(toolbar, mapContainer, timelineContainer);
    this.root.append(sidebar, main);
    this.renderPanels();
  }

  private renderPanels(): void {
    const state = this.store.get();
    this.map.update(state, {});
    this.timeline.update(state, null);
    this.cooccurrence.update(state, null);
  }

  private schedule(endpoints: Set<Endpoint>): void {
    if (endpoints.size === 0) return;
    for (const endpoint of endpoints) this.pending.add(endpoint);
    if (this.debounceHandle !== null) clearTimeout(this.debounceHandle);
    // debounced so drag-brushing stays fluid
    this.debounceHandle = setTimeout(() => {
      this.debounceHandle = null;
      void this.flush();
    }, this.debounceMs);
  }

  private async flush(): Promise<void> {
    const endpoints = [...this.pending];
    this.pending.clear();
    const state = this.store.get();
    const context = requestContext(state);
    this.inflight += 1;
    try {
      await Promise.all(endpoints.map((endpoint) => this.query(endpoint, state, context)));
    } finally {
      this.inflight -= 1;
      if (this.inflight === 0 && this.pending.size === 0 && this.debounceHandle === null) {
        const resolvers = this.idleResolvers;
        this.idleResolvers = [];
        for (const resolve of resolvers) resolve();
      }
    }
  }

  private async query(
    endpoint: Endpoint,
    state: UiState,
    context: ReturnType<typeof requestContext>,
  ): Promise<void> {
    try {
      switch (endpoint) {
        case "reports": {
          const data = await this.api.reports(context);
          this.map.update(state, { reports: data });
          break;
        }
        case "centroids": {
          if (state.centroidMode === "trajectory") {
            const data = await this.api.trajectories(context, state.trajectorySerotype);
            this.map.update(state, { trajectories: data });
          } else if (state.centroidMode !== "off") {
            const mode = state.centroidMode === "all" ? "all" : "per_serotype";
            const data = await this.api.centroids(context, mode);
            this.map.update(state, { centroids: data });
          }
          break;
        }
        case "cooccurrence": {
          if (state.combinations.length === 0) break; // empty editor: no request
          const data = await this.api.cooccurrence(context, state.combinations);
          this.cooccurrence.update(state, data);
          break;
        }
        case "timeline": {
          const data = await this.api.timeline(context);
          this.timeline.update(state, data);
          break;
        }
        case "suitability": {
          if (state.baseLayer !== "suitability") break;
          const data = await this.api.suitability("-180,-90,180,90", 180);
          this.map.update(state, { suitability: data });
          break;
        }
      }
    } catch (err) {
      if ((err as Error).name === "AbortError") return; // superseded request
      // non-blocking: surface the failure, keep the stale layer on screen
      this.toast(`${endpoint} query failed: ${(err as Error).message}`);
    }
  }

  toast(message: string): void {
    const el = document.createElement("div");
    el.className = "toast";
    el.textContent = message;
    this.root.appendChild(el);
    setTimeout(() => el.remove(), 4000);
  }
}
