import { Assignment, DatasetPayload, DgPoint, Rect } from "./types.js";

/** Thin typed client over the clustering session HTTP API. */
export class SessionClient {
  constructor(
    private base: string = "",
    private fetchFn: typeof fetch = globalThis.fetch.bind(globalThis),
  ) {}

  private async get<T>(path: string): Promise<T> {
    const resp = await this.fetchFn(this.base + path);
    if (!resp.ok) throw new Error(`GET ${path}: ${resp.status} ${await resp.text()}`);
    return (await resp.json()) as T;
  }

  private async post<T>(path: string, body?: unknown): Promise<T> {
    const resp = await this.fetchFn(this.base + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: body === undefined ? "{}" : JSON.stringify(body),
    });
    if (!resp.ok) throw new Error(`POST ${path}: ${resp.status} ${await resp.text()}`);
    return (await resp.json()) as T;
  }

  status(): Promise<{ ready: boolean; error: string | null }> {
    return this.get("/status");
  }

  dataset(): Promise<DatasetPayload> {
    return this.get("/dataset");
  }

  decisionGraph(): Promise<DgPoint[]> {
    return this.get("/decision-graph");
  }

  clusters(): Promise<Assignment> {
    return this.get("/clusters");
  }

  /** Cut every non-root node inside the rectangle (data coordinates). */
  cut(rect: Rect): Promise<Assignment> {
    return this.post("/cut", rect);
  }

  undo(): Promise<Assignment> {
    return this.post("/undo");
  }

  reset(): Promise<Assignment> {
    return this.post("/reset");
  }
}
