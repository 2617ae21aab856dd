import { SEROTYPES, type SerotypeName } from "./types.js";

/** Glyph radius (px) by section count 1..4: ordinal importance, strictly
 * increasing so co-occurrences stand out. */
export const GLYPH_RADII = [6, 8, 10, 12] as const;

export function glyphRadius(sectionCount: number): number {
  return GLYPH_RADII[Math.max(1, Math.min(4, sectionCount)) - 1];
}

export interface GlyphSection {
  serotype: SerotypeName;
  startAngle: number; // degrees, 0 = up, clockwise
  endAngle: number;
}

/**
 * Equal angular sections for the serotypes a report shows under the active
 * filter, in canonical DENV order.
 */
export function glyphSections(
  reported: readonly SerotypeName[],
  active: readonly SerotypeName[],
): GlyphSection[] {
  const activeSet = new Set(active);
  const shown = SEROTYPES.filter((s) => reported.includes(s) && activeSet.has(s));
  const step = 360 / shown.length;
  return shown.map((serotype, i) => ({
    serotype,
    startAngle: i * step,
    endAngle: (i + 1) * step,
  }));
}

function polar(cx: number, cy: number, r: number, angleDeg: number): [number, number] {
  const rad = ((angleDeg - 90) * Math.PI) / 180;
  return [cx + r * Math.cos(rad), cy + r * Math.sin(rad)];
}

/** SVG path for one pie section; callers use a <circle> for a full disc. */
export function pieSectionPath(
  cx: number,
  cy: number,
  r: number,
  startAngle: number,
  endAngle: number,
): string {
  const [x0, y0] = polar(cx, cy, r, startAngle);
  const [x1, y1] = polar(cx, cy, r, endAngle);
  const largeArc = endAngle - startAngle > 180 ? 1 : 0;
  return (
    `M ${round(cx)} ${round(cy)} L ${round(x0)} ${round(y0)} ` +
    `A ${round(r)} ${round(r)} 0 ${largeArc} 1 ${round(x1)} ${round(y1)} Z`
  );
}

/** Diamond centered on (cx, cy); a clear center point for centroid glyphs. */
export function diamondPath(cx: number, cy: number, size: number): string {
  return (
    `M ${round(cx)} ${round(cy - size)} L ${round(cx + size)} ${round(cy)} ` +
    `L ${round(cx)} ${round(cy + size)} L ${round(cx - size)} ${round(cy)} Z`
  );
}

/** Arrowhead triangle sitting at the end of a segment, oriented along it. */
export function arrowheadPoints(
  x0: number,
  y0: number,
  x1: number,
  y1: number,
  size: number,
): string {
  const angle = Math.atan2(y1 - y0, x1 - x0);
  const left = angle + Math.PI * 0.82;
  const right = angle - Math.PI * 0.82;
  const points = [
    [x1, y1],
    [x1 + size * Math.cos(left), y1 + size * Math.sin(left)],
    [x1 + size * Math.cos(right), y1 + size * Math.sin(right)],
  ];
  return points.map(([x, y]) => `${round(x)},${round(y)}`).join(" ");
}

function round(v: number): number {
  return Math.round(v * 100) / 100;
}

/** Equirectangular view: pan/zoom state for the map panel. */
export interface MapView {
  centerLat: number;
  centerLng: number;
  pxPerDegree: number;
  width: number;
  height: number;
}

export function defaultView(width = 960, height = 500): MapView {
  return { centerLat: 12, centerLng: 20, pxPerDegree: width / 360, width, height };
}

export function project(view: MapView, lat: number, lng: number): [number, number] {
  return [
    view.width / 2 + (lng - view.centerLng) * view.pxPerDegree,
    view.height / 2 - (lat - view.centerLat) * view.pxPerDegree,
  ];
}

export function unproject(view: MapView, x: number, y: number): [number, number] {
  return [
    view.centerLat - (y - view.height / 2) / view.pxPerDegree,
    view.centerLng + (x - view.width / 2) / view.pxPerDegree,
  ];
}
