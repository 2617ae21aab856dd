import { SEROTYPES, type SerotypeName, type StoredRegion } from "./types.js";

export type CentroidMode = "off" | "all" | "per-serotype" | "trajectory";
export type BaseLayer = "dark" | "suitability";
export type Direction = 1 | -1;

export interface AnimationState {
  playing: boolean;
  fps: number;
  direction: Direction;
}

export const ANIMATION_FPS_MIN = 0.5;
export const ANIMATION_FPS_MAX = 10;
export const CENTROID_SIZE_MIN = 4;
export const CENTROID_SIZE_MAX = 16;

/**
 * Single source of truth: every panel renders from this state, and every
 * mutation flows through Store.update so the affected endpoints re-query.
 */
export interface UiState {
  yearMin: number;
  yearMax: number;
  currentYear: number;
  intervalLength: number;
  serotypes: SerotypeName[];
  regions: StoredRegion[];
  regionsVersion: number;
  combinations: SerotypeName[][];
  cooccurrenceMetric: "exact" | "superset";
  cooccurrenceView: "count" | "proportion";
  animation: AnimationState;
  centroidMode: CentroidMode;
  trajectorySerotype: "all" | "each";
  baseLayer: BaseLayer;
  centroidSizePx: number;
}

export function initialState(): UiState {
  return {
    yearMin: 1943,
    yearMax: 2020,
    currentYear: 2020,
    intervalLength: 10,
    serotypes: [...SEROTYPES],
    regions: [],
    regionsVersion: 0,
    combinations: SEROTYPES.map((s) => [s]),
    cooccurrenceMetric: "exact",
    cooccurrenceView: "count",
    animation: { playing: false, fps: 2, direction: 1 },
    centroidMode: "off",
    trajectorySerotype: "all",
    baseLayer: "dark",
    centroidSizePx: 8,
  };
}

export type StateListener = (state: UiState, changed: Set<keyof UiState>) => void;

/** Clamp year and interval to the dataset bounds carried in the state. */
function clamp(state: UiState): UiState {
  const span = state.yearMax - state.yearMin + 1;
  const intervalLength = Math.max(1, Math.min(span, Math.round(state.intervalLength)));
  const currentYear = Math.max(state.yearMin, Math.min(state.yearMax, Math.round(state.currentYear)));
  const fps = Math.max(ANIMATION_FPS_MIN, Math.min(ANIMATION_FPS_MAX, state.animation.fps));
  const centroidSizePx = Math.max(
    CENTROID_SIZE_MIN,
    Math.min(CENTROID_SIZE_MAX, state.centroidSizePx),
  );
  return {
    ...state,
    currentYear,
    intervalLength,
    centroidSizePx,
    animation: { ...state.animation, fps },
  };
}

export class Store {
  private state: UiState;
  private listeners: StateListener[] = [];

  constructor(state: UiState = initialState()) {
    this.state = clamp(state);
  }

  get(): UiState {
    return this.state;
  }

  subscribe(listener: StateListener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  update(patch: Partial<UiState>): void {
    const next = clamp({ ...this.state, ...patch });
    const changed = new Set<keyof UiState>();
    for (const key of Object.keys(patch) as (keyof UiState)[]) {
      if (next[key] !== this.state[key]) changed.add(key);
    }
    // clamping may touch fields the patch did not name
    for (const key of ["currentYear", "intervalLength"] as const) {
      if (next[key] !== this.state[key]) changed.add(key);
    }
    if (changed.size === 0) return;
    this.state = next;
    for (const listener of [...this.listeners]) listener(next, changed);
  }

  setYear(year: number): void {
    this.update({ currentYear: year });
  }

  setInterval(length: number): void {
    this.update({ intervalLength: length });
  }

  setRange(startYear: number, endYear: number): void {
    this.update({ currentYear: endYear, intervalLength: endYear - startYear + 1 });
  }

  toggleSerotype(serotype: SerotypeName): void {
    const active = new Set(this.state.serotypes);
    if (active.has(serotype)) active.delete(serotype);
    else active.add(serotype);
    this.update({ serotypes: SEROTYPES.filter((s) => active.has(s)) });
  }
}
