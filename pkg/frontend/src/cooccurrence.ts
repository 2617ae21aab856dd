import { SEROTYPE_COLORS } from "./palette.js";
import type { Store, UiState } from "./state.js";
import { SEROTYPES, type CooccurrenceResponse, type SerotypeName } from "./types.js";

function comboKey(combo: readonly SerotypeName[]): string {
  return [...combo].sort().join("+");
}

/**
 * Combination bar chart plus the editor that adds/removes user-defined
 * serotype combinations. Bars can show exact or superset counts, as counts
 * or proportions of the slice.
 */
export class CooccurrencePanel {
  private data: CooccurrenceResponse | null = null;
  private state: UiState | null = null;
  private readonly editor: HTMLDivElement;
  private readonly error: HTMLDivElement;
  private readonly toggles: HTMLDivElement;
  private readonly bars: HTMLDivElement;
  private readonly picks = new Set<SerotypeName>();

  constructor(
    container: HTMLElement,
    private readonly store: Store,
  ) {
    container.classList.add("cooccurrence-panel");
    this.editor = document.createElement("div");
    this.editor.className = "combo-editor";
    this.error = document.createElement("div");
    this.error.className = "combo-error hidden";
    this.toggles = document.createElement("div");
    this.toggles.className = "combo-toggles";
    this.bars = document.createElement("div");
    this.bars.className = "combo-bars";
    container.append(this.editor, this.error, this.toggles, this.bars);
    this.buildEditor();
    this.buildToggles();
  }

  update(state: UiState, data: CooccurrenceResponse | null): void {
    this.state = state;
    if (data) this.data = data;
    if (state.combinations.length === 0) this.data = null;
    this.renderBars();
  }

  private buildEditor(): void {
    for (const serotype of SEROTYPES) {
      const chip = document.createElement("button");
      chip.type = "button";
      chip.className = "combo-chip";
      chip.dataset.serotype = serotype;
      chip.textContent = serotype.replace("DENV", "D");
      chip.style.borderColor = SEROTYPE_COLORS[serotype];
      chip.addEventListener("click", () => {
        if (this.picks.has(serotype)) this.picks.delete(serotype);
        else this.picks.add(serotype);
        chip.classList.toggle("selected", this.picks.has(serotype));
      });
      this.editor.appendChild(chip);
    }
    const add = document.createElement("button");
    add.type = "button";
    add.className = "combo-add";
    add.textContent = "add";
    add.addEventListener("click", () => this.addCombination());
    this.editor.appendChild(add);
  }

  private addCombination(): void {
    const state = this.store.get();
    const combo = SEROTYPES.filter((s) => this.picks.has(s));
    if (combo.length === 0) {
      this.showError("pick at least one serotype");
      return;
    }
    const key = comboKey(combo);
    if (state.combinations.some((c) => comboKey(c) === key)) {
      this.showError("combination already listed");
      return;
    }
    this.hideError();
    this.picks.clear();
    for (const chip of this.editor.querySelectorAll(".combo-chip")) {
      chip.classList.remove("selected");
    }
    this.store.update({ combinations: [...state.combinations, combo] });
  }

  private removeCombination(key: string): void {
    const state = this.store.get();
    this.store.update({ combinations: state.combinations.filter((c) => comboKey(c) !== key) });
  }

  private buildToggles(): void {
    const metric = document.createElement("select");
    metric.className = "combo-metric";
    for (const value of ["exact", "superset"]) {
      const option = document.createElement("option");
      option.value = value;
      option.textContent = value === "exact" ? "exact sets" : "contains combo";
      metric.appendChild(option);
    }
    metric.addEventListener("change", () =>
      this.store.update({ cooccurrenceMetric: metric.value as "exact" | "superset" }),
    );
    const view = document.createElement("select");
    view.className = "combo-view";
    for (const value of ["count", "proportion"]) {
      const option = document.createElement("option");
      option.value = value;
      option.textContent = value;
      view.appendChild(option);
    }
    view.addEventListener("change", () =>
      this.store.update({ cooccurrenceView: view.value as "count" | "proportion" }),
    );
    this.toggles.append(metric, view);
  }

  private renderBars(): void {
    const state = this.state;
    this.bars.replaceChildren();
    if (!state) return;
    if (state.combinations.length === 0) {
      const hint = document.createElement("div");
      hint.className = "combo-empty-hint";
      hint.textContent = "No combinations selected — add one above to compare co-occurrence.";
      this.bars.appendChild(hint);
      return;
    }
    const data = this.data;
    if (!data) return;
    const byKey = new Map(data.combinations.map((c) => [comboKey(c.serotypes), c]));
    const values = state.combinations.map((combo) => {
      const payload = byKey.get(comboKey(combo));
      if (!payload) return 0;
      if (state.cooccurrenceMetric === "exact") {
        return state.cooccurrenceView === "count" ? payload.exact_count : payload.exact_proportion;
      }
      return state.cooccurrenceView === "count"
        ? payload.superset_count
        : payload.superset_proportion;
    });
    const maxValue = Math.max(1e-9, ...values);
    for (const [i, combo] of state.combinations.entries()) {
      const key = comboKey(combo);
      const row = document.createElement("div");
      row.className = "combo-row";
      row.dataset.combo = key;

      const label = document.createElement("span");
      label.className = "combo-label";
      for (const serotype of combo) {
        const dot = document.createElement("i");
        dot.className = "combo-dot";
        dot.style.background = SEROTYPE_COLORS[serotype];
        dot.title = serotype;
        label.appendChild(dot);
      }
      const name = document.createElement("em");
      name.textContent = combo.map((s) => s.replace("DENV", "D")).join("+");
      label.appendChild(name);

      const track = document.createElement("span");
      track.className = "combo-track";
      const bar = document.createElement("span");
      bar.className = "combo-bar";
      bar.style.width = `${(100 * values[i]) / maxValue}%`;
      for (const serotype of combo) {
        const segment = document.createElement("span");
        segment.className = "combo-bar-segment";
        segment.style.background = SEROTYPE_COLORS[serotype];
        segment.style.width = `${100 / combo.length}%`;
        bar.appendChild(segment);
      }
      track.appendChild(bar);

      const value = document.createElement("span");
      value.className = "combo-value";
      value.dataset.value = String(values[i]);
      value.textContent =
        state.cooccurrenceView === "count" ? String(values[i]) : values[i].toFixed(3);

      const remove = document.createElement("button");
      remove.type = "button";
      remove.className = "combo-remove";
      remove.textContent = "×";
      remove.addEventListener("click", () => this.removeCombination(key));

      row.append(label, track, value, remove);
      this.bars.appendChild(row);
    }
  }

  private showError(message: string): void {
    this.error.textContent = message;
    this.error.classList.remove("hidden");
  }

  private hideError(): void {
    this.error.classList.add("hidden");
  }
}
