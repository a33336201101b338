import { SessionClient } from "./api.js";
import { DgPoint, Rect, ViewState } from "./types.js";

/** Non-root nodes whose decision-graph point lies inside the rectangle. */
export function nodesInRect(points: DgPoint[], rect: Rect): number[] {
  return points
    .filter(
      (p) =>
        !p.is_root &&
        p.rho >= rect.rho_min &&
        p.rho <= rect.rho_max &&
        p.delta >= rect.delta_min &&
        p.delta <= rect.delta_max,
    )
    .map((p) => p.node);
}

/**
 * Holds the view state and serializes all mutation through the service.
 *
 * The store never computes clusters itself: cluster coloring always comes
 * from the most recent server response. At most one cut request is in
 * flight; brushes arriving meanwhile are queued in order.
 */
export class SessionStore {
  state: ViewState = {
    dgPoints: [],
    clusters: { root_of: [], cluster_id: [], n_clusters: 0 },
    selection: null,
    lastCut: [],
    historyDepth: 0,
    error: null,
    logDelta: false,
  };

  private listeners: Array<(s: ViewState) => void> = [];
  private queue: Promise<void> = Promise.resolve();

  constructor(private client: SessionClient) {}

  subscribe(fn: (s: ViewState) => void): void {
    this.listeners.push(fn);
  }

  private emit(): void {
    for (const fn of this.listeners) fn(this.state);
  }

  private patch(partial: Partial<ViewState>): void {
    this.state = { ...this.state, ...partial };
    this.emit();
  }

  async load(): Promise<void> {
    try {
      const [dgPoints, clusters] = await Promise.all([
        this.client.decisionGraph(),
        this.client.clusters(),
      ]);
      this.patch({
        dgPoints,
        clusters,
        historyDepth: clusters.history_depth ?? 0,
        error: null,
      });
    } catch (err) {
      this.patch({ error: String(err) });
    }
  }

  /** Queue a brush: POST /cut with the rectangle's data-space bounds. */
  brushAndCut(rect: Rect): Promise<void> {
    this.queue = this.queue.then(() => this.applyCut(rect));
    return this.queue;
  }

  private async applyCut(rect: Rect): Promise<void> {
    const captured = nodesInRect(this.state.dgPoints, rect);
    try {
      const clusters = await this.client.cut(rect);
      const dgPoints = await this.client.decisionGraph();
      this.patch({
        clusters,
        dgPoints,
        selection: rect,
        lastCut: captured,
        historyDepth: clusters.history_depth ?? this.state.historyDepth + 1,
        error: null,
      });
    } catch (err) {
      // leave the rest of the state untouched on failure
      this.patch({ error: String(err) });
    }
  }

  undo(): Promise<void> {
    this.queue = this.queue.then(async () => {
      try {
        const clusters = await this.client.undo();
        const dgPoints = await this.client.decisionGraph();
        this.patch({
          clusters,
          dgPoints,
          selection: null,
          lastCut: [],
          historyDepth: clusters.history_depth ?? 0,
          error: null,
        });
      } catch (err) {
        this.patch({ error: String(err) });
      }
    });
    return this.queue;
  }

  reset(): Promise<void> {
    this.queue = this.queue.then(async () => {
      try {
        const clusters = await this.client.reset();
        const dgPoints = await this.client.decisionGraph();
        this.patch({
          clusters,
          dgPoints,
          selection: null,
          lastCut: [],
          historyDepth: 0,
          error: null,
        });
      } catch (err) {
        this.patch({ error: String(err) });
      }
    });
    return this.queue;
  }

  setLogDelta(on: boolean): void {
    this.patch({ logDelta: on });
  }
}
