import { beforeEach, describe, expect, it } from "vitest";

import { GLYPH_RADII, glyphRadius, glyphSections } from "../src/geometry.js";
import { MapPanel } from "../src/map.js";
import { SEROTYPE_COLORS } from "../src/palette.js";
import { initialState } from "../src/state.js";
import { makeReport } from "./helpers.js";
import type { SerotypeName } from "../src/types.js";

const ALL: SerotypeName[] = ["DENV1", "DENV2", "DENV3", "DENV4"];

describe("glyph geometry", () => {
  it("divides a four-serotype report into four equal 90-degree sections", () => {
    const sections = glyphSections(ALL, ALL);
    expect(sections).toHaveLength(4);
    for (const [i, section] of sections.entries()) {
      expect(section.endAngle - section.startAngle).toBe(90);
      expect(section.startAngle).toBe(i * 90);
    }
    expect(sections.map((s) => s.serotype)).toEqual(ALL);
  });

  it("shows only the active intersection, in canonical order", () => {
    const sections = glyphSections(["DENV1", "DENV3"], ["DENV3"]);
    expect(sections).toEqual([{ serotype: "DENV3", startAngle: 0, endAngle: 360 }]);
  });

  it("radii strictly increase with the section count", () => {
    const radii = [1, 2, 3, 4].map(glyphRadius);
    expect(radii).toEqual([...GLYPH_RADII]);
    for (let i = 1; i < radii.length; i++) expect(radii[i]).toBeGreaterThan(radii[i - 1]);
  });
});

describe("map glyph rendering", () => {
  let container: HTMLElement;
  let panel: MapPanel;

  beforeEach(() => {
    document.body.innerHTML = "<div id='map'></div>";
    container = document.getElementById("map")!;
    panel = new MapPanel(container);
  });

  it("renders four 90-degree path sections for a four-serotype report (snapshot)", () => {
    // report at the view center (lat 12, lng 20) projects to (480, 250)
    panel.update(initialState(), {
      reports: {
        window: { current_year: 2020, interval_length: 78, start_year: 1943, end_year: 2020 },
        count: 1,
        reports: [makeReport({ serotypes: ALL })],
      },
    });
    const glyph = container.querySelector("g.report-glyph")!;
    expect(glyph.getAttribute("data-sections")).toBe("4");
    const paths = [...glyph.querySelectorAll("path.glyph-section")];
    expect(paths).toHaveLength(4);
    expect(paths.map((p) => p.getAttribute("data-angle"))).toEqual(["90", "90", "90", "90"]);
    expect(paths.map((p) => p.getAttribute("d"))).toEqual([
      "M 480 250 L 480 238 A 12 12 0 0 1 492 250 Z",
      "M 480 250 L 492 250 A 12 12 0 0 1 480 262 Z",
      "M 480 250 L 480 262 A 12 12 0 0 1 468 250 Z",
      "M 480 250 L 468 250 A 12 12 0 0 1 480 238 Z",
    ]);
    expect(paths.map((p) => p.getAttribute("fill"))).toEqual(ALL.map((s) => SEROTYPE_COLORS[s]));
  });

  it("renders a full circle for a single visible serotype", () => {
    panel.update(initialState(), {
      reports: {
        window: { current_year: 2020, interval_length: 78, start_year: 1943, end_year: 2020 },
        count: 1,
        reports: [makeReport({ serotypes: ["DENV2"] })],
      },
    });
    const circle = container.querySelector("circle.glyph-section")!;
    expect(circle.getAttribute("data-angle")).toBe("360");
    expect(circle.getAttribute("r")).toBe("6");
    expect(circle.getAttribute("fill")).toBe(SEROTYPE_COLORS.DENV2);
  });

  it("rendered radii strictly increase from 1 to 4 sections", () => {
    const reports = [1, 2, 3, 4].map((k, i) =>
      makeReport({ id: i, serotypes: ALL.slice(0, k), latitude: 0, longitude: i * 10 }),
    );
    panel.update(initialState(), {
      reports: {
        window: { current_year: 2020, interval_length: 78, start_year: 1943, end_year: 2020 },
        count: reports.length,
        reports,
      },
    });
    const radii: number[] = [];
    for (const glyph of container.querySelectorAll("g.report-glyph")) {
      const circle = glyph.querySelector("circle.glyph-section");
      if (circle) {
        radii.push(Number(circle.getAttribute("r")));
      } else {
        const d = glyph.querySelector("path.glyph-section")!.getAttribute("d")!;
        radii.push(Number(/A (\d+(?:\.\d+)?) /.exec(d)![1]));
      }
    }
    expect(radii).toEqual([...GLYPH_RADII]);
  });

  it("suitability base layer renders ramp-classed cells with grey at class 0", () => {
    const state = { ...initialState(), baseLayer: "suitability" as const };
    panel.update(state, {
      suitability: {
        bbox: [-180, -90, 180, 90],
        n_rows: 2,
        n_cols: 2,
        cell_width: 180,
        cell_height: 90,
        classes: [
          [0, 2],
          [4, null],
        ],
      },
    });
    const cells = [...container.querySelectorAll("rect.suitability-cell")];
    expect(cells).toHaveLength(3); // nodata cell is not drawn
    expect(cells.map((c) => c.getAttribute("data-class"))).toEqual(["0", "2", "4"]);
    expect(cells[0].getAttribute("fill")).toBe("hsl(0, 0%, 55%)"); // zero saturation at class 0
  });

  it("click opens a popup with country, year, and serotypes", () => {
    panel.update(initialState(), {
      reports: {
        window: { current_year: 2020, interval_length: 78, start_year: 1943, end_year: 2020 },
        count: 1,
        reports: [makeReport({ country: "THA", year: 1981, serotypes: ["DENV1", "DENV4"] })],
      },
    });
    const glyph = container.querySelector("g.report-glyph")!;
    glyph.dispatchEvent(new MouseEvent("click", { bubbles: true }));
    const popup = container.querySelector(".map-popup")!;
    expect(popup.classList.contains("hidden")).toBe(false);
    expect(popup.textContent).toContain("THA");
    expect(popup.textContent).toContain("1981");
    expect(popup.textContent).toContain("DENV1, DENV4");
  });
});
