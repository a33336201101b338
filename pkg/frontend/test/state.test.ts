import { describe, expect, it } from "vitest";

import { SessionClient } from "../src/api.js";
import { clusterColor } from "../src/colors.js";
import { SessionStore, nodesInRect } from "../src/state.js";
import { Assignment, DgPoint, Rect } from "../src/types.js";

const DG_BEFORE: DgPoint[] = [
  { node: 0, rho: 5.0, delta: 0.4, is_root: false },
  { node: 1, rho: 9.0, delta: 3.2, is_root: false }, // the pop-out
  { node: 2, rho: 11.0, delta: 3.36, is_root: true },
  { node: 3, rho: 2.0, delta: 0.6, is_root: false },
];

const ONE_CLUSTER: Assignment = {
  root_of: [2, 2, 2, 2],
  cluster_id: [0, 0, 0, 0],
  n_clusters: 1,
  history_depth: 0,
};

const TWO_CLUSTERS: Assignment = {
  root_of: [2, 1, 2, 1],
  cluster_id: [0, 1, 0, 1],
  n_clusters: 2,
  history_depth: 1,
};

interface Call {
  path: string;
  method: string;
  body: unknown;
}

function mockService(responses: Record<string, () => unknown>) {
  const calls: Call[] = [];
  const fetchFn = (async (url: string, init?: RequestInit) => {
    const path = url.toString();
    const method = init?.method ?? "GET";
    calls.push({ path, method, body: init?.body ? JSON.parse(init.body as string) : undefined });
    const key = `${method} ${path}`;
    if (!(key in responses)) {
      return { ok: false, status: 404, text: async () => "not mocked", json: async () => ({}) };
    }
    return { ok: true, status: 200, text: async () => "", json: async () => responses[key]() };
  }) as unknown as typeof fetch;
  return { calls, client: new SessionClient("", fetchFn) };
}

describe("nodesInRect", () => {
  it("selects non-roots inside the rectangle only", () => {
    const rect: Rect = { rho_min: 8, rho_max: 12, delta_min: 3, delta_max: 4 };
    expect(nodesInRect(DG_BEFORE, rect)).toEqual([1]); // root 2 excluded
  });

  it("empty rectangle selects nothing", () => {
    const rect: Rect = { rho_min: 100, rho_max: 101, delta_min: 100, delta_max: 101 };
    expect(nodesInRect(DG_BEFORE, rect)).toEqual([]);
  });
});

describe("SessionStore against a mocked service", () => {
  it("a brushed rectangle issues POST /cut with exactly the drawn bounds", async () => {
    const { calls, client } = mockService({
      "GET /decision-graph": () => DG_BEFORE,
      "GET /clusters": () => ONE_CLUSTER,
      "POST /cut": () => TWO_CLUSTERS,
    });
    const store = new SessionStore(client);
    await store.load();
    const rect: Rect = { rho_min: 8.25, rho_max: 10.5, delta_min: 2.75, delta_max: 3.3 };
    await store.brushAndCut(rect);
    const cut = calls.find((c) => c.method === "POST" && c.path === "/cut");
    expect(cut).toBeDefined();
    expect(cut!.body).toEqual(rect);
  });

  it("cluster coloring always equals the last server response", async () => {
    const { client } = mockService({
      "GET /decision-graph": () => DG_BEFORE,
      "GET /clusters": () => ONE_CLUSTER,
      "POST /cut": () => TWO_CLUSTERS,
    });
    const store = new SessionStore(client);
    await store.load();
    expect(store.state.clusters.cluster_id).toEqual(ONE_CLUSTER.cluster_id);
    await store.brushAndCut({ rho_min: 8, rho_max: 12, delta_min: 3, delta_max: 4 });
    expect(store.state.clusters.cluster_id).toEqual(TWO_CLUSTERS.cluster_id);
    const colors = store.state.clusters.cluster_id.map(clusterColor);
    expect(new Set(colors).size).toBe(2);
    // pure function of cluster id
    expect(colors[0]).toBe(clusterColor(0));
    expect(colors[1]).toBe(clusterColor(1));
  });

  it("captures the nodes inside the box for highlighting", async () => {
    const { client } = mockService({
      "GET /decision-graph": () => DG_BEFORE,
      "GET /clusters": () => ONE_CLUSTER,
      "POST /cut": () => TWO_CLUSTERS,
    });
    const store = new SessionStore(client);
    await store.load();
    await store.brushAndCut({ rho_min: 8, rho_max: 12, delta_min: 3, delta_max: 4 });
    expect(store.state.lastCut).toEqual([1]);
    expect(store.state.selection).toEqual({ rho_min: 8, rho_max: 12, delta_min: 3, delta_max: 4 });
  });

  it("service failure shows an error banner and leaves state unchanged", async () => {
    const { client } = mockService({
      "GET /decision-graph": () => DG_BEFORE,
      "GET /clusters": () => ONE_CLUSTER,
      // POST /cut intentionally not mocked -> 404
    });
    const store = new SessionStore(client);
    await store.load();
    const before = store.state;
    await store.brushAndCut({ rho_min: 0, rho_max: 1, delta_min: 0, delta_max: 1 });
    expect(store.state.error).toMatch(/POST \/cut/);
    expect(store.state.clusters).toEqual(before.clusters);
    expect(store.state.dgPoints).toEqual(before.dgPoints);
    expect(store.state.selection).toBeNull();
  });

  it("undo restores the previous assignment from the server", async () => {
    let cutDepth = 0;
    const { client } = mockService({
      "GET /decision-graph": () => DG_BEFORE,
      "GET /clusters": () => ONE_CLUSTER,
      "POST /cut": () => {
        cutDepth = 1;
        return TWO_CLUSTERS;
      },
      "POST /undo": () => {
        cutDepth = 0;
        return ONE_CLUSTER;
      },
    });
    const store = new SessionStore(client);
    await store.load();
    await store.brushAndCut({ rho_min: 8, rho_max: 12, delta_min: 3, delta_max: 4 });
    expect(store.state.clusters.n_clusters).toBe(2);
    await store.undo();
    expect(store.state.clusters.cluster_id).toEqual(ONE_CLUSTER.cluster_id);
    expect(cutDepth).toBe(0);
    expect(store.state.selection).toBeNull();
  });

  it("keeps at most one cut in flight and preserves order", async () => {
    const order: string[] = [];
    let resolveFirst: (() => void) | null = null;
    const fetchFn = (async (url: string, init?: RequestInit) => {
      const method = init?.method ?? "GET";
      const key = `${method} ${url}`;
      if (key === "POST /cut") {
        const body = JSON.parse(init!.body as string) as Rect;
        order.push(`start ${body.rho_min}`);
        if (body.rho_min === 1 && resolveFirst === null) {
          await new Promise<void>((r) => {
            resolveFirst = r;
          });
        }
        order.push(`end ${body.rho_min}`);
        return { ok: true, status: 200, text: async () => "", json: async () => TWO_CLUSTERS };
      }
      return { ok: true, status: 200, text: async () => "", json: async () => DG_BEFORE };
    }) as unknown as typeof fetch;
    const store = new SessionStore(new SessionClient("", fetchFn));
    const first = store.brushAndCut({ rho_min: 1, rho_max: 2, delta_min: 0, delta_max: 1 });
    const second = store.brushAndCut({ rho_min: 3, rho_max: 4, delta_min: 0, delta_max: 1 });
    await new Promise((r) => setTimeout(r, 10));
    expect(order).toEqual(["start 1"]); // second cut queued, not started
    (resolveFirst as unknown as () => void)();
    await Promise.all([first, second]);
    expect(order).toEqual(["start 1", "end 1", "start 3", "end 3"]);
  });
});
