import { SessionClient } from "./api.js";
import {
  DgScales,
  attachBrush,
  dgScales,
  renderDataScatter,
  renderDecisionGraph,
} from "./panels.js";
import { SessionStore } from "./state.js";
import { DatasetPayload } from "./types.js";

export interface AppElements {
  dgSvg: SVGElement;
  dataSvg: SVGElement;
  errorBanner: HTMLElement;
  statusLine: HTMLElement;
  dimNotice: HTMLElement;
  undoButton: HTMLElement;
  resetButton: HTMLElement;
  logToggle: HTMLInputElement;
}

export class App {
  private store: SessionStore;
  private scales: DgScales | null = null;
  private dataset: DatasetPayload | null = null;

  constructor(
    private client: SessionClient,
    private ui: AppElements,
  ) {
    this.store = new SessionStore(client);
  }

  async start(): Promise<void> {
    for (let i = 0; i < 600; i++) {
      const status = await this.client.status();
      if (status.error) {
        this.ui.errorBanner.textContent = status.error;
        return;
      }
      if (status.ready) break;
      await new Promise((r) => setTimeout(r, 250));
    }
    this.dataset = await this.client.dataset();
    this.store.subscribe(() => this.render());
    attachBrush(this.ui.dgSvg, () => this.scales as DgScales, {
      onBrush: (rect) => void this.store.brushAndCut(rect),
    });
    this.ui.undoButton.addEventListener("click", () => void this.store.undo());
    this.ui.resetButton.addEventListener("click", () => void this.store.reset());
    this.ui.logToggle.addEventListener("change", () =>
      this.store.setLogDelta(this.ui.logToggle.checked),
    );
    await this.store.load();
  }

  private render(): void {
    const state = this.store.state;
    this.ui.errorBanner.textContent = state.error ?? "";
    this.ui.errorBanner.style.display = state.error ? "block" : "none";
    this.scales = state.dgPoints.length
      ? dgScales(state.dgPoints, state.logDelta)
      : null;
    if (state.dgPoints.length) {
      this.scales = renderDecisionGraph(this.ui.dgSvg, state);
    }
    if (this.dataset) {
      renderDataScatter(
        this.ui.dataSvg,
        this.dataset.points,
        state.clusters.cluster_id,
        this.ui.dimNotice,
      );
    }
    this.ui.statusLine.textContent =
      `clusters: ${state.clusters.n_clusters}` +
      (state.clusters.n_components !== undefined
        ? ` | components: ${state.clusters.n_components}`
        : "") +
      ` | cuts applied: ${state.historyDepth}`;
  }
}

export function mount(root: Document, baseUrl = ""): App {
  const byId = (id: string) => {
    const node = root.getElementById(id);
    if (!node) throw new Error(`missing element #${id}`);
    return node;
  };
  const app = new App(new SessionClient(baseUrl), {
    dgSvg: byId("decision-graph") as unknown as SVGElement,
    dataSvg: byId("data-scatter") as unknown as SVGElement,
    errorBanner: byId("error-banner"),
    statusLine: byId("status-line"),
    dimNotice: byId("dim-notice"),
    undoButton: byId("undo"),
    resetButton: byId("reset"),
    logToggle: byId("log-delta") as HTMLInputElement,
  });
  void app.start();
  return app;
}
