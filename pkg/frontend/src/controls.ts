import type { AnimationLoop } from "./animation.js";
import type { ApiClient } from "./api.js";
import { SEROTYPE_COLORS, regionShade } from "./palette.js";
import {
  ANIMATION_FPS_MAX,
  ANIMATION_FPS_MIN,
  CENTROID_SIZE_MAX,
  CENTROID_SIZE_MIN,
  type BaseLayer,
  type CentroidMode,
  type Store,
} from "./state.js";
import { SEROTYPES, type ContinentNode, type StoredRegion } from "./types.js";

function panel(title: string): HTMLElement {
  const section = document.createElement("section");
  section.className = "control-panel";
  const heading = document.createElement("h2");
  heading.textContent = title;
  section.appendChild(heading);
  return section;
}

/** Serotype checkboxes double as the color legend. */
export function serotypePanel(store: Store): HTMLElement {
  const section = panel("Serotypes");
  section.classList.add("serotype-panel");
  for (const serotype of SEROTYPES) {
    const label = document.createElement("label");
    label.className = "serotype-toggle";
    const box = document.createElement("input");
    box.type = "checkbox";
    box.dataset.serotype = serotype;
    box.checked = store.get().serotypes.includes(serotype);
    box.addEventListener("change", () => store.toggleSerotype(serotype));
    const swatch = document.createElement("i");
    swatch.className = "legend-swatch";
    swatch.style.background = SEROTYPE_COLORS[serotype];
    label.append(box, swatch, document.createTextNode(serotype));
    section.appendChild(label);
  }
  store.subscribe((state) => {
    for (const box of section.querySelectorAll<HTMLInputElement>("input[data-serotype]")) {
      box.checked = state.serotypes.includes(box.dataset.serotype as (typeof SEROTYPES)[number]);
    }
  });
  return section;
}

function steppedNumber(
  labelText: string,
  value: number,
  onChange: (v: number) => void,
): { root: HTMLElement; input: HTMLInputElement } {
  const wrap = document.createElement("div");
  wrap.className = "stepper";
  const label = document.createElement("span");
  label.textContent = labelText;
  const down = document.createElement("button");
  down.type = "button";
  down.textContent = "◀";
  down.className = "step-down";
  const input = document.createElement("input");
  input.type = "number";
  input.value = String(value);
  const up = document.createElement("button");
  up.type = "button";
  up.textContent = "▶";
  up.className = "step-up";
  down.addEventListener("click", () => onChange(Number(input.value) - 1));
  up.addEventListener("click", () => onChange(Number(input.value) + 1));
  input.addEventListener("change", () => onChange(Number(input.value)));
  wrap.append(label, down, input, up);
  return { root: wrap, input };
}

/** Current-year editor (arrows, typing); arrow keys handled app-wide. */
export function yearPanel(store: Store): HTMLElement {
  const section = panel("Year");
  section.classList.add("year-panel");
  const { root, input } = steppedNumber("current year", store.get().currentYear, (v) =>
    store.setYear(v),
  );
  input.classList.add("year-input");
  section.appendChild(root);
  store.subscribe((state) => {
    input.value = String(state.currentYear);
  });
  return section;
}

export function intervalPanel(store: Store): HTMLElement {
  const section = panel("Interval length");
  section.classList.add("interval-panel");
  const { root, input } = steppedNumber("years shown", store.get().intervalLength, (v) =>
    store.setInterval(v),
  );
  input.classList.add("interval-input");
  section.appendChild(root);
  store.subscribe((state) => {
    input.value = String(state.intervalLength);
  });
  return section;
}

/** Play/pause, speed, and direction; the spacebar toggles playback. */
export function animationPanel(store: Store, loop: AnimationLoop): HTMLElement {
  const section = panel("Animation");
  section.classList.add("animation-panel");

  const play = document.createElement("button");
  play.type = "button";
  play.className = "animation-play";
  play.textContent = "▶ play";
  play.addEventListener("click", () => loop.toggle());

  const direction = document.createElement("button");
  direction.type = "button";
  direction.className = "animation-direction";
  direction.textContent = "forward";
  direction.addEventListener("click", () => {
    const state = store.get();
    store.update({
      animation: { ...state.animation, direction: state.animation.direction === 1 ? -1 : 1 },
    });
  });

  const speed = document.createElement("input");
  speed.type = "range";
  speed.className = "animation-speed";
  speed.min = String(ANIMATION_FPS_MIN);
  speed.max = String(ANIMATION_FPS_MAX);
  speed.step = "0.5";
  speed.value = String(store.get().animation.fps);
  const speedLabel = document.createElement("span");
  speedLabel.className = "animation-speed-label";
  speedLabel.textContent = `${store.get().animation.fps} fps`;
  speed.addEventListener("input", () => {
    const state = store.get();
    store.update({ animation: { ...state.animation, fps: Number(speed.value) } });
    loop.reschedule();
  });

  section.append(play, direction, speed, speedLabel);
  store.subscribe((state) => {
    play.textContent = state.animation.playing ? "❚❚ pause" : "▶ play";
    direction.textContent = state.animation.direction === 1 ? "forward" : "reverse";
    speedLabel.textContent = `${state.animation.fps} fps`;
  });

  document.addEventListener("keydown", (evt) => {
    const target = evt.target as HTMLElement | null;
    if (target && ["INPUT", "TEXTAREA", "SELECT", "BUTTON"].includes(target.tagName)) return;
    if (evt.code === "Space") {
      evt.preventDefault();
      loop.toggle();
    } else if (evt.key === "ArrowRight") {
      store.setYear(store.get().currentYear + 1);
    } else if (evt.key === "ArrowLeft") {
      store.setYear(store.get().currentYear - 1);
    }
  });
  return section;
}

/** Base layer, centroid mode, and centroid size. */
export function mapOptionsPanel(store: Store): HTMLElement {
  const section = panel("Map layers");
  section.classList.add("map-options-panel");

  const layer = document.createElement("select");
  layer.className = "base-layer-select";
  for (const value of ["dark", "suitability"] as BaseLayer[]) {
    const option = document.createElement("option");
    option.value = value;
    option.textContent = value === "dark" ? "dark base" : "environmental suitability";
    layer.appendChild(option);
  }
  layer.addEventListener("change", () => store.update({ baseLayer: layer.value as BaseLayer }));

  const mode = document.createElement("select");
  mode.className = "centroid-mode-select";
  for (const value of ["off", "all", "per-serotype", "trajectory"] as CentroidMode[]) {
    const option = document.createElement("option");
    option.value = value;
    option.textContent =
      value === "off"
        ? "no centroids"
        : value === "all"
          ? "centroids: all reports"
          : value === "per-serotype"
            ? "centroids: per serotype"
            : "trajectories";
    mode.appendChild(option);
  }
  mode.addEventListener("change", () => store.update({ centroidMode: mode.value as CentroidMode }));

  const trajectorySerotype = document.createElement("select");
  trajectorySerotype.className = "trajectory-serotype-select hidden";
  for (const value of ["all", "each"]) {
    const option = document.createElement("option");
    option.value = value;
    option.textContent = value === "all" ? "one line per region" : "one line per serotype";
    trajectorySerotype.appendChild(option);
  }
  trajectorySerotype.addEventListener("change", () =>
    store.update({ trajectorySerotype: trajectorySerotype.value as "all" | "each" }),
  );

  const size = document.createElement("input");
  size.type = "range";
  size.className = "centroid-size";
  size.min = String(CENTROID_SIZE_MIN);
  size.max = String(CENTROID_SIZE_MAX);
  size.value = String(store.get().centroidSizePx);
  size.addEventListener("input", () => store.update({ centroidSizePx: Number(size.value) }));

  section.append(layer, mode, trajectorySerotype, size);
  store.subscribe((state) => {
    trajectorySerotype.classList.toggle("hidden", state.centroidMode !== "trajectory");
  });
  return section;
}

/**
 * Region list (visibility, shade swatch, delete) plus a tree-based editor
 * for defining regions from continents, subcontinents, and countries.
 */
export class RegionPanel {
  readonly root: HTMLElement;
  private readonly list: HTMLDivElement;
  private readonly editor: HTMLDivElement;
  private readonly status: HTMLDivElement;
  private tree: ContinentNode[] = [];

  constructor(
    private readonly store: Store,
    private readonly api: ApiClient,
    private readonly onToast: (message: string) => void,
  ) {
    this.root = panel("Regions");
    this.root.classList.add("region-panel");
    this.list = document.createElement("div");
    this.list.className = "region-list";
    this.editor = document.createElement("div");
    this.editor.className = "region-editor hidden";
    this.status = document.createElement("div");
    this.status.className = "region-status";
    const newButton = document.createElement("button");
    newButton.type = "button";
    newButton.className = "region-new";
    newButton.textContent = "new region…";
    newButton.addEventListener("click", () => this.editor.classList.toggle("hidden"));
    this.root.append(this.list, newButton, this.editor, this.status);
    store.subscribe(() => this.renderList());
  }

  setTree(tree: ContinentNode[]): void {
    this.tree = tree;
    this.buildEditor();
  }

  renderList(): void {
    const state = this.store.get();
    this.list.replaceChildren();
    for (const region of state.regions) {
      const row = document.createElement("div");
      row.className = "region-row";
      row.dataset.region = region.name;
      const visible = document.createElement("input");
      visible.type = "checkbox";
      visible.checked = region.visible;
      visible.className = "region-visible";
      visible.addEventListener("change", () => this.setVisible(region.name, visible.checked));
      const swatch = document.createElement("i");
      swatch.className = "legend-swatch";
      swatch.style.background = regionShade(region.shade);
      const name = document.createElement("span");
      name.textContent = `${region.name} (${region.countries.length})`;
      const remove = document.createElement("button");
      remove.type = "button";
      remove.textContent = "×";
      remove.className = "region-remove";
      remove.addEventListener("click", () => this.removeRegion(region.name));
      row.append(visible, swatch, name, remove);
      this.list.appendChild(row);
    }
  }

  private setVisible(name: string, visible: boolean): void {
    const state = this.store.get();
    this.store.update({
      regions: state.regions.map((r) => (r.name === name ? { ...r, visible } : r)),
    });
  }

  private removeRegion(name: string): void {
    const state = this.store.get();
    void this.persist(state.regions.filter((r) => r.name !== name));
  }

  private buildEditor(): void {
    this.editor.replaceChildren();
    const nameInput = document.createElement("input");
    nameInput.type = "text";
    nameInput.placeholder = "region name";
    nameInput.className = "region-name-input";
    const tree = document.createElement("div");
    tree.className = "region-tree";
    for (const continent of this.tree) {
      const continentDetails = document.createElement("details");
      const continentSummary = document.createElement("summary");
      const continentBox = document.createElement("input");
      continentBox.type = "checkbox";
      continentBox.dataset.scope = "continent";
      continentBox.dataset.name = continent.name;
      continentSummary.append(continentBox, document.createTextNode(continent.name));
      continentDetails.appendChild(continentSummary);
      for (const sub of continent.subcontinents) {
        const subDetails = document.createElement("details");
        const subSummary = document.createElement("summary");
        const subBox = document.createElement("input");
        subBox.type = "checkbox";
        subBox.dataset.scope = "subcontinent";
        subBox.dataset.name = sub.name;
        subSummary.append(subBox, document.createTextNode(sub.name));
        subDetails.appendChild(subSummary);
        for (const country of sub.countries) {
          const label = document.createElement("label");
          label.className = "region-country";
          const box = document.createElement("input");
          box.type = "checkbox";
          box.dataset.scope = "country";
          box.dataset.code = country.code;
          label.append(box, document.createTextNode(`${country.name} (${country.code})`));
          subDetails.appendChild(label);
        }
        subBox.addEventListener("change", () => {
          for (const box of subDetails.querySelectorAll<HTMLInputElement>("input[data-code]")) {
            box.checked = subBox.checked;
          }
        });
        continentDetails.appendChild(subDetails);
      }
      continentBox.addEventListener("change", () => {
        for (const box of continentDetails.querySelectorAll<HTMLInputElement>(
          "input[data-code], input[data-scope='subcontinent']",
        )) {
          box.checked = continentBox.checked;
        }
      });
      tree.appendChild(continentDetails);
    }
    const save = document.createElement("button");
    save.type = "button";
    save.className = "region-save";
    save.textContent = "save region";
    save.addEventListener("click", () => {
      const name = nameInput.value.trim();
      const codes = [...tree.querySelectorAll<HTMLInputElement>("input[data-code]:checked")].map(
        (box) => box.dataset.code as string,
      );
      if (!name) {
        this.status.textContent = "name the region first";
        return;
      }
      if (codes.length === 0) {
        this.status.textContent = "pick at least one country";
        return;
      }
      const state = this.store.get();
      if (state.regions.some((r) => r.name === name)) {
        this.status.textContent = `a region named "${name}" already exists`;
        return;
      }
      const region: StoredRegion = {
        name,
        countries: codes,
        visible: true,
        shade: state.regions.length % 4,
      };
      void this.persist([...state.regions, region]).then((ok) => {
        if (ok) {
          nameInput.value = "";
          this.editor.classList.add("hidden");
        }
      });
    });
    this.editor.append(nameInput, tree, save);
  }

  private async persist(regions: StoredRegion[]): Promise<boolean> {
    const state = this.store.get();
    try {
      const response = await this.api.putRegions(state.regionsVersion, regions);
      this.store.update({ regions: response.regions, regionsVersion: response.version });
      this.status.textContent = "";
      return true;
    } catch (err) {
      // version conflict or validation problem: resync and tell the user
      this.onToast(`saving regions failed: ${(err as Error).message}`);
      try {
        const current = await this.api.regions();
        this.store.update({ regions: current.regions, regionsVersion: current.version });
      } catch {
        // server unreachable; keep local state
      }
      return false;
    }
  }
}
