import { beforeEach, describe, expect, it } from "vitest";

import { CooccurrencePanel } from "../src/cooccurrence.js";
import { Store } from "../src/state.js";
import type { CooccurrenceResponse, SerotypeName } from "../src/types.js";

function data(combos: SerotypeName[][]): CooccurrenceResponse {
  return {
    window: { current_year: 2020, interval_length: 78, start_year: 1943, end_year: 2020 },
    slice_size: 20,
    combinations: combos.map((serotypes, i) => ({
      serotypes,
      mask: 0,
      exact_count: (i + 1) * 2,
      superset_count: (i + 1) * 3,
      exact_proportion: ((i + 1) * 2) / 20,
      superset_proportion: ((i + 1) * 3) / 20,
    })),
  };
}

describe("CooccurrencePanel", () => {
  let store: Store;
  let container: HTMLElement;
  let panel: CooccurrencePanel;

  beforeEach(() => {
    document.body.innerHTML = "<div id='co'></div>";
    container = document.getElementById("co")!;
    store = new Store();
    panel = new CooccurrencePanel(container, store);
    panel.update(store.get(), data(store.get().combinations));
  });

  function chip(serotype: SerotypeName): HTMLButtonElement {
    return container.querySelector(`button.combo-chip[data-serotype="${serotype}"]`)!;
  }

  function clickAdd(): void {
    container.querySelector<HTMLButtonElement>("button.combo-add")!.click();
  }

  it("adding a combination appends one bar-backed entry", () => {
    chip("DENV1").click();
    chip("DENV2").click();
    clickAdd();
    expect(store.get().combinations).toContainEqual(["DENV1", "DENV2"]);
    panel.update(store.get(), data(store.get().combinations));
    expect(container.querySelector('.combo-row[data-combo="DENV1+DENV2"]')).not.toBeNull();
  });

  it("duplicate combinations are rejected in the editor", () => {
    chip("DENV1").click();
    clickAdd(); // DENV1 already among the defaults
    const error = container.querySelector(".combo-error")!;
    expect(error.classList.contains("hidden")).toBe(false);
    expect(error.textContent).toContain("already");
    expect(store.get().combinations.filter((c) => c.join() === "DENV1")).toHaveLength(1);
  });

  it("empty pick is rejected", () => {
    clickAdd();
    expect(container.querySelector(".combo-error")!.textContent).toContain("at least one");
  });

  it("removing a combination drops its row", () => {
    container
      .querySelector<HTMLButtonElement>('.combo-row[data-combo="DENV3"] .combo-remove')!
      .click();
    expect(store.get().combinations).not.toContainEqual(["DENV3"]);
    panel.update(store.get(), data(store.get().combinations));
    expect(container.querySelector('.combo-row[data-combo="DENV3"]')).toBeNull();
  });

  it("removing everything shows the empty-state hint", () => {
    store.update({ combinations: [] });
    panel.update(store.get(), null);
    expect(container.querySelector(".combo-empty-hint")).not.toBeNull();
    expect(container.querySelectorAll(".combo-row")).toHaveLength(0);
  });

  it("proportion view divides counts by the slice size", () => {
    store.update({ cooccurrenceView: "proportion" });
    panel.update(store.get(), data(store.get().combinations));
    const value = container.querySelector('.combo-row[data-combo="DENV1"] .combo-value')!;
    expect(Number(value.getAttribute("data-value"))).toBeCloseTo(2 / 20, 12);
    expect(value.textContent).toBe("0.100");
  });

  it("superset metric switches the displayed counts", () => {
    store.update({ cooccurrenceMetric: "superset" });
    panel.update(store.get(), data(store.get().combinations));
    const value = container.querySelector('.combo-row[data-combo="DENV1"] .combo-value')!;
    expect(value.textContent).toBe("3");
  });

  it("bar segments reuse the shared serotype palette", () => {
    chip("DENV1").click();
    chip("DENV4").click();
    clickAdd();
    panel.update(store.get(), data(store.get().combinations));
    const segments = container.querySelectorAll(
      '.combo-row[data-combo="DENV1+DENV4"] .combo-bar-segment',
    );
    expect(segments).toHaveLength(2);
  });
});
