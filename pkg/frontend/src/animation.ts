import type { Store } from "./state.js";

export interface Timer {
  set(fn: () => void, ms: number): unknown;
  clear(handle: unknown): void;
}

const realTimer: Timer = {
  set: (fn, ms) => setInterval(fn, ms),
  clear: (handle) => clearInterval(handle as Parameters<typeof clearInterval>[0]),
};

/**
 * Year stepper: on start it emits the current year as the first frame, then
 * advances one year per tick in the configured direction, stopping at the
 * span end. Rate of change comes from animation.fps; duration on screen is
 * governed by the interval length; order is chronology (or reverse).
 */
export class AnimationLoop {
  private handle: unknown = null;
  readonly frames: number[] = [];

  constructor(
    private readonly store: Store,
    private readonly timer: Timer = realTimer,
    private readonly onFrame: (year: number) => void = () => {},
  ) {}

  get playing(): boolean {
    return this.handle !== null;
  }

  start(): void {
    if (this.handle !== null) return;
    const state = this.store.get();
    this.store.update({ animation: { ...state.animation, playing: true } });
    this.emit(this.store.get().currentYear);
    this.handle = this.timer.set(() => this.tick(), 1000 / this.store.get().animation.fps);
  }

  stop(): void {
    if (this.handle === null) return;
    this.timer.clear(this.handle);
    this.handle = null;
    const state = this.store.get();
    this.store.update({ animation: { ...state.animation, playing: false } });
  }

  toggle(): void {
    if (this.playing) this.stop();
    else this.start();
  }

  /** Restart the interval timer after an fps change. */
  reschedule(): void {
    if (this.handle === null) return;
    this.timer.clear(this.handle);
    this.handle = this.timer.set(() => this.tick(), 1000 / this.store.get().animation.fps);
  }

  private tick(): void {
    const state = this.store.get();
    const next = state.currentYear + state.animation.direction;
    if (next < state.yearMin || next > state.yearMax) {
      this.stop();
      return;
    }
    this.store.setYear(next);
    this.emit(next);
  }

  private emit(year: number): void {
    this.frames.push(year);
    this.onFrame(year);
  }
}
