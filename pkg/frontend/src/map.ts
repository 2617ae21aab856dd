import {
  arrowheadPoints,
  defaultView,
  diamondPath,
  glyphRadius,
  glyphSections,
  pieSectionPath,
  project,
  unproject,
  type MapView,
} from "./geometry.js";
import { regionShade, SEROTYPE_COLORS, SUITABILITY_RAMP } from "./palette.js";
import type { UiState } from "./state.js";
import type {
  CentroidsResponse,
  ReportPayload,
  ReportsResponse,
  SuitabilityResponse,
  TrajectoriesResponse,
} from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface MapData {
  reports: ReportsResponse | null;
  centroids: CentroidsResponse | null;
  trajectories: TrajectoriesResponse | null;
  suitability: SuitabilityResponse | null;
}

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number> = {},
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) el.setAttribute(key, String(value));
  return el;
}

/** Map panel: suitability base layer, report glyphs, centroid diamonds, and
 * arrowed trajectory lines, with panning and zooming. */
export class MapPanel {
  readonly view: MapView;
  private readonly svg: SVGSVGElement;
  private readonly layers: Record<"base" | "trajectories" | "reports" | "centroids", SVGGElement>;
  private readonly tooltip: HTMLDivElement;
  private readonly popup: HTMLDivElement;
  private lastState: UiState | null = null;
  private lastData: MapData = {
    reports: null,
    centroids: null,
    trajectories: null,
    suitability: null,
  };

  constructor(private readonly container: HTMLElement) {
    this.view = defaultView();
    this.svg = svgEl("svg", {
      viewBox: `0 0 ${this.view.width} ${this.view.height}`,
      class: "map-svg",
    });
    this.layers = {
      base: svgEl("g", { class: "layer-base" }),
      trajectories: svgEl("g", { class: "layer-trajectories" }),
      reports: svgEl("g", { class: "layer-reports" }),
      centroids: svgEl("g", { class: "layer-centroids" }),
    };
    for (const layer of Object.values(this.layers)) this.svg.appendChild(layer);
    this.tooltip = document.createElement("div");
    this.tooltip.className = "map-tooltip hidden";
    this.popup = document.createElement("div");
    this.popup.className = "map-popup hidden";
    container.classList.add("map-panel");
    container.append(this.svg, this.tooltip, this.popup);
    this.bindNavigation();
  }

  update(state: UiState, data: Partial<MapData>): void {
    this.lastState = state;
    this.lastData = { ...this.lastData, ...data };
    this.render();
  }

  private render(): void {
    const state = this.lastState;
    if (!state) return;
    this.renderBase(state);
    this.renderTrajectories(state);
    this.renderReports(state);
    this.renderCentroids(state);
  }

  private renderBase(state: UiState): void {
    const layer = this.layers.base;
    layer.replaceChildren();
    const { width, height } = this.view;
    layer.appendChild(svgEl("rect", { x: 0, y: 0, width, height, class: "map-ocean" }));
    if (state.baseLayer === "suitability" && this.lastData.suitability) {
      const s = this.lastData.suitability;
      const [minLng, , , maxLat] = s.bbox;
      for (let i = 0; i < s.n_rows; i++) {
        for (let j = 0; j < s.n_cols; j++) {
          const cls = s.classes[i][j];
          if (cls === null) continue;
          const latTop = maxLat - i * s.cell_height;
          const lngLeft = minLng + j * s.cell_width;
          const [x, y] = project(this.view, latTop, lngLeft);
          layer.appendChild(
            svgEl("rect", {
              x,
              y,
              width: s.cell_width * this.view.pxPerDegree + 0.5,
              height: s.cell_height * this.view.pxPerDegree + 0.5,
              fill: SUITABILITY_RAMP[cls],
              class: "suitability-cell",
              "data-class": cls,
            }),
          );
        }
      }
    }
    for (let lng = -180; lng <= 180; lng += 30) {
      const [x0, y0] = project(this.view, 85, lng);
      const [x1, y1] = project(this.view, -85, lng);
      layer.appendChild(svgEl("line", { x1: x0, y1: y0, x2: x1, y2: y1, class: "graticule" }));
    }
    for (let lat = -60; lat <= 80; lat += 30) {
      const [x0, y0] = project(this.view, lat, -180);
      const [x1, y1] = project(this.view, lat, 180);
      layer.appendChild(svgEl("line", { x1: x0, y1: y0, x2: x1, y2: y1, class: "graticule" }));
    }
  }

  private renderReports(state: UiState): void {
    const layer = this.layers.reports;
    layer.replaceChildren();
    const reports = this.lastData.reports?.reports ?? [];
    for (const report of reports) {
      const [cx, cy] = project(this.view, report.latitude, report.longitude);
      const sections = glyphSections(report.serotypes, state.serotypes);
      if (sections.length === 0) continue;
      const r = glyphRadius(sections.length);
      const g = svgEl("g", {
        class: "report-glyph",
        "data-id": report.id,
        "data-country": report.country,
        "data-year": report.year,
        "data-sections": sections.length,
      });
      if (sections.length === 1) {
        g.appendChild(
          svgEl("circle", {
            cx,
            cy,
            r,
            fill: SEROTYPE_COLORS[sections[0].serotype],
            class: "glyph-section",
            "data-serotype": sections[0].serotype,
            "data-angle": 360,
          }),
        );
      } else {
        for (const section of sections) {
          g.appendChild(
            svgEl("path", {
              d: pieSectionPath(cx, cy, r, section.startAngle, section.endAngle),
              fill: SEROTYPE_COLORS[section.serotype],
              class: "glyph-section",
              "data-serotype": section.serotype,
              "data-angle": section.endAngle - section.startAngle,
            }),
          );
        }
      }
      g.addEventListener("mouseenter", (evt) =>
        this.showTooltip(evt as MouseEvent, report.serotypes.join(", ")),
      );
      g.addEventListener("mouseleave", () => this.hideTooltip());
      g.addEventListener("click", (evt) => this.showReportPopup(evt as MouseEvent, report));
      layer.appendChild(g);
    }
  }

  private renderCentroids(state: UiState): void {
    const layer = this.layers.centroids;
    layer.replaceChildren();
    if (state.centroidMode === "off" || state.centroidMode === "trajectory") return;
    const centroids = this.lastData.centroids?.centroids ?? [];
    const shadeByRegion = new Map(state.regions.map((r) => [r.name, r.shade]));
    for (const centroid of centroids) {
      const [cx, cy] = project(this.view, centroid.latitude, centroid.longitude);
      const d = diamondPath(cx, cy, state.centroidSizePx);
      const g = svgEl("g", {
        class: "centroid-glyph",
        "data-region": centroid.region,
        "data-serotype": centroid.serotype,
      });
      // black and white outlines keep the diamond visible over any color
      g.appendChild(svgEl("path", { d, class: "centroid-outline-black" }));
      g.appendChild(
        svgEl("path", {
          d,
          fill: regionShade(shadeByRegion.get(centroid.region) ?? 0),
          class: "centroid-fill",
        }),
      );
      g.appendChild(svgEl("path", { d, class: "centroid-outline-white" }));
      const label =
        centroid.serotype === "all"
          ? `${centroid.region} (${centroid.report_count} reports)`
          : `${centroid.region} — ${centroid.serotype} (${centroid.report_count} reports)`;
      g.addEventListener("mouseenter", (evt) => this.showTooltip(evt as MouseEvent, label));
      g.addEventListener("mouseleave", () => this.hideTooltip());
      layer.appendChild(g);
    }
  }

  private renderTrajectories(state: UiState): void {
    const layer = this.layers.trajectories;
    layer.replaceChildren();
    if (state.centroidMode !== "trajectory") return;
    const shadeByRegion = new Map(state.regions.map((r) => [r.name, r.shade]));
    for (const t of this.lastData.trajectories?.trajectories ?? []) {
      if (t.vertices.length === 0) continue;
      const points = t.vertices.map((v) => project(this.view, v.latitude, v.longitude));
      const color =
        t.serotype === "all"
          ? regionShade(shadeByRegion.get(t.region) ?? 0)
          : SEROTYPE_COLORS[t.serotype];
      const g = svgEl("g", {
        class: "trajectory",
        "data-region": t.region,
        "data-serotype": t.serotype,
      });
      if (points.length > 1) {
        const path = points.map(([x, y], i) => `${i ? "L" : "M"} ${x} ${y}`).join(" ");
        g.appendChild(svgEl("path", { d: path, class: "trajectory-halo" }));
        g.appendChild(svgEl("path", { d: path, stroke: color, class: "trajectory-line" }));
        for (let i = 1; i < points.length; i++) {
          g.appendChild(
            svgEl("polygon", {
              points: arrowheadPoints(
                points[i - 1][0],
                points[i - 1][1],
                points[i][0],
                points[i][1],
                6,
              ),
              fill: color,
              class: "trajectory-arrow",
            }),
          );
        }
      }
      for (const [i, [x, y]] of points.entries()) {
        const dot = svgEl("circle", {
          cx: x,
          cy: y,
          r: 2.5,
          fill: color,
          class: "trajectory-vertex",
          "data-year": t.vertices[i].year,
        });
        dot.addEventListener("mouseenter", (evt) =>
          this.showTooltip(evt as MouseEvent, `${t.region} ${t.vertices[i].year}`),
        );
        dot.addEventListener("mouseleave", () => this.hideTooltip());
        g.appendChild(dot);
      }
      layer.appendChild(g);
    }
  }

  private showReportPopup(evt: MouseEvent, report: ReportPayload): void {
    evt.stopPropagation();
    this.popup.innerHTML = "";
    const title = document.createElement("strong");
    title.textContent = report.country;
    const line = document.createElement("div");
    line.textContent = `${report.year} — ${report.serotypes.join(", ")}`;
    this.popup.append(title, line);
    this.popup.classList.remove("hidden");
    this.placeNear(this.popup, evt);
    const close = () => {
      this.popup.classList.add("hidden");
      document.removeEventListener("click", close);
    };
    setTimeout(() => document.addEventListener("click", close), 0);
  }

  private showTooltip(evt: MouseEvent, text: string): void {
    this.tooltip.textContent = text;
    this.tooltip.classList.remove("hidden");
    this.placeNear(this.tooltip, evt);
  }

  private hideTooltip(): void {
    this.tooltip.classList.add("hidden");
  }

  private placeNear(el: HTMLElement, evt: MouseEvent): void {
    const rect = this.container.getBoundingClientRect();
    el.style.left = `${evt.clientX - rect.left + 12}px`;
    el.style.top = `${evt.clientY - rect.top + 12}px`;
  }

  private bindNavigation(): void {
    let dragging = false;
    let last: [number, number] | null = null;
    this.svg.addEventListener("pointerdown", (evt) => {
      dragging = true;
      last = [evt.clientX, evt.clientY];
    });
    window.addEventListener("pointerup", () => {
      dragging = false;
      last = null;
    });
    window.addEventListener("pointermove", (evt) => {
      if (!dragging || !last) return;
      const dx = evt.clientX - last[0];
      const dy = evt.clientY - last[1];
      last = [evt.clientX, evt.clientY];
      this.view.centerLng -= dx / this.view.pxPerDegree;
      this.view.centerLat += dy / this.view.pxPerDegree;
      this.render();
    });
    this.svg.addEventListener("wheel", (evt) => {
      evt.preventDefault();
      const factor = evt.deltaY < 0 ? 1.2 : 1 / 1.2;
      const rect = this.svg.getBoundingClientRect();
      const px = ((evt.clientX - rect.left) / rect.width) * this.view.width;
      const py = ((evt.clientY - rect.top) / rect.height) * this.view.height;
      const [lat, lng] = unproject(this.view, px, py);
      this.view.pxPerDegree = Math.max(1, Math.min(64, this.view.pxPerDegree * factor));
      // keep the cursor's geographic point fixed while zooming
      const [x2, y2] = project(this.view, lat, lng);
      this.view.centerLng += (x2 - px) / this.view.pxPerDegree;
      this.view.centerLat -= (y2 - py) / this.view.pxPerDegree;
      this.render();
    });
  }
}
