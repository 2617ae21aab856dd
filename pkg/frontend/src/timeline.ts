import { SEROTYPE_COLORS } from "./palette.js";
import type { Store, UiState } from "./state.js";
import type { TimelineResponse } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const CELL_H = 16;
const LABEL_W = 170;
const HEADER_H = 18;

/**
 * Faceted heatmap: one row band per (region, serotype), one column per year.
 * Clicking a cell sets the active year; dragging across cells selects a
 * range (end year + interval); hovering reveals year/serotype/count.
 */
export class TimelinePanel {
  private readonly svg: SVGSVGElement;
  private readonly popup: HTMLDivElement;
  private data: TimelineResponse | null = null;
  private state: UiState | null = null;
  private dragStart: number | null = null;
  private dragCurrent: number | null = null;

  constructor(
    private readonly container: HTMLElement,
    private readonly store: Store,
  ) {
    this.svg = document.createElementNS(SVG_NS, "svg");
    this.svg.setAttribute("class", "timeline-svg");
    this.popup = document.createElement("div");
    this.popup.className = "timeline-popup hidden";
    container.classList.add("timeline-panel");
    container.append(this.svg, this.popup);
    window.addEventListener("pointerup", () => this.endDrag());
  }

  update(state: UiState, data: TimelineResponse | null): void {
    this.state = state;
    if (data) this.data = data;
    this.render();
  }

  private cellWidth(years: number[]): number {
    return Math.max(6, Math.min(26, 860 / Math.max(1, years.length)));
  }

  private render(): void {
    const state = this.state;
    const data = this.data;
    this.svg.replaceChildren();
    if (!state || !data) return;
    const years = data.years;
    const cw = this.cellWidth(years);
    const width = LABEL_W + years.length * cw + 8;
    const height = HEADER_H + data.rows.length * CELL_H + 6;
    this.svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
    this.svg.setAttribute("width", String(width));
    this.svg.setAttribute("height", String(height));

    const maxCount = Math.max(1, ...data.rows.flatMap((row) => row.counts));
    const el = <K extends keyof SVGElementTagNameMap>(
      tag: K,
      attrs: Record<string, string | number>,
    ) => {
      const node = document.createElementNS(SVG_NS, tag);
      for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, String(v));
      return node;
    };

    // year axis ticks
    for (const [i, year] of years.entries()) {
      if (year % 10 === 0 || years.length <= 12) {
        const text = el("text", {
          x: LABEL_W + i * cw + cw / 2,
          y: HEADER_H - 6,
          class: "timeline-axis-label",
        });
        text.textContent = String(year);
        this.svg.appendChild(text);
      }
    }

    for (const [rowIndex, row] of data.rows.entries()) {
      const y = HEADER_H + rowIndex * CELL_H;
      const label = el("text", { x: 4, y: y + CELL_H - 4, class: "timeline-row-label" });
      label.textContent = `${row.region} · ${row.serotype}`;
      label.setAttribute("fill", SEROTYPE_COLORS[row.serotype]);
      this.svg.appendChild(label);
      for (const [i, count] of row.counts.entries()) {
        const year = years[i];
        const rect = el("rect", {
          x: LABEL_W + i * cw,
          y,
          width: cw - 1,
          height: CELL_H - 1,
          class: "timeline-cell",
          fill: SEROTYPE_COLORS[row.serotype],
          "fill-opacity": count === 0 ? 0.06 : 0.15 + 0.85 * (count / maxCount),
          "data-year": year,
          "data-count": count,
          "data-region": row.region,
          "data-serotype": row.serotype,
        });
        rect.addEventListener("pointerdown", () => this.beginDrag(year));
        rect.addEventListener("pointerenter", (evt) => {
          if (this.dragStart !== null) this.dragCurrent = year;
          this.showPopup(evt as MouseEvent, `${year} · ${row.serotype} · ${count} reports`);
        });
        rect.addEventListener("pointerleave", () => this.hidePopup());
        rect.addEventListener("pointerup", () => this.finishDrag(year));
        this.svg.appendChild(rect);
      }
    }

    // active window overlay
    const startIdx = years.indexOf(state.currentYear - state.intervalLength + 1);
    const endIdx = years.indexOf(state.currentYear);
    if (endIdx >= 0) {
      const fromIdx = startIdx >= 0 ? startIdx : 0;
      this.svg.appendChild(
        el("rect", {
          x: LABEL_W + fromIdx * cw,
          y: HEADER_H,
          width: (endIdx - fromIdx + 1) * cw - 1,
          height: data.rows.length * CELL_H,
          class: "timeline-window",
        }),
      );
      this.svg.appendChild(
        el("line", {
          x1: LABEL_W + endIdx * cw + cw - 1,
          y1: HEADER_H,
          x2: LABEL_W + endIdx * cw + cw - 1,
          y2: HEADER_H + data.rows.length * CELL_H,
          class: "timeline-current-year",
        }),
      );
    }
  }

  private beginDrag(year: number): void {
    this.dragStart = year;
    this.dragCurrent = year;
  }

  private finishDrag(year: number): void {
    if (this.dragStart === null) return;
    const start = this.dragStart;
    this.dragStart = null;
    this.dragCurrent = null;
    if (year === start) {
      this.store.setYear(year); // click: change the active year
    } else {
      this.store.setRange(Math.min(start, year), Math.max(start, year));
    }
  }

  private endDrag(): void {
    if (this.dragStart !== null && this.dragCurrent !== null && this.dragCurrent !== this.dragStart) {
      this.finishDrag(this.dragCurrent);
    } else {
      this.dragStart = null;
      this.dragCurrent = null;
    }
  }

  private showPopup(evt: MouseEvent, text: string): void {
    this.popup.textContent = text;
    this.popup.classList.remove("hidden");
    const rect = this.container.getBoundingClientRect();
    this.popup.style.left = `${evt.clientX - rect.left + 10}px`;
    this.popup.style.top = `${evt.clientY - rect.top - 24}px`;
  }

  private hidePopup(): void {
    this.popup.classList.add("hidden");
  }
}
