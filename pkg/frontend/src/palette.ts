import type { SerotypeName } from "./types.js";

/**
 * The single shared serotype palette: four distinct hues (no two shades of
 * one hue), readable for color-blind viewers and against the dark
 * background. Used by glyphs, timeline rows, co-occurrence bars, and the
 * legend.
 */
export const SEROTYPE_COLORS: Readonly<Record<SerotypeName, string>> = {
  DENV1: "#e69f00",
  DENV2: "#56b4e9",
  DENV3: "#009e73",
  DENV4: "#cc79a7",
};

/** Fixed 4-step black-to-white ramp for region centroid shading. */
export const REGION_SHADE_RAMP = ["#000000", "#555555", "#aaaaaa", "#ffffff"] as const;

/**
 * Five suitability classes: saturation 0 at class 0 (grey, not white, for
 * the dark background), then increasingly saturated and darker reds.
 */
export const SUITABILITY_RAMP = [
  "hsl(0, 0%, 55%)",
  "hsl(0, 30%, 48%)",
  "hsl(0, 55%, 42%)",
  "hsl(0, 75%, 36%)",
  "hsl(0, 95%, 30%)",
] as const;

export const BACKGROUND_COLOR = "#2b2b2b";

export function regionShade(shade: number): string {
  return REGION_SHADE_RAMP[Math.max(0, Math.min(REGION_SHADE_RAMP.length - 1, shade))];
}
