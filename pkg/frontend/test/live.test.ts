/**
 * End-to-end flow against a live service. Skipped unless SERVICE_URL is set:
 *
 *   intree gen two-gaussians --n 100 --stddev 1.0 --seed 7 --out /tmp/two.csv
 *   intree serve --input /tmp/two.csv --label-col 2 --graph knn --k 5 \
 *       --sigma 20 --port 8321 &
 *   SERVICE_URL=http://127.0.0.1:8321 npm run test:live
 */
import { describe, expect, it } from "vitest";

import { SessionClient } from "../src/api.js";
import { clusterColor } from "../src/colors.js";
import { renderDataScatter } from "../src/panels.js";

const base = process.env.SERVICE_URL;

function distinctPanelColors(points: number[][], clusterId: number[]): number {
  const svg = document.createElementNS("http://www.w3.org/2000/svg", "svg");
  renderDataScatter(svg, points, clusterId);
  const fills = Array.from(svg.querySelectorAll(".data-point")).map((n) =>
    n.getAttribute("fill"),
  );
  return new Set(fills).size;
}

describe.skipIf(!base)("live two-gaussian session", () => {
  it("brushing the pop-out yields a 2-color panel and undo restores 1 color", async () => {
    const client = new SessionClient(base!);
    for (let i = 0; i < 200; i++) {
      const s = await client.status();
      if (s.ready) break;
      await new Promise((r) => setTimeout(r, 100));
    }
    await client.reset();
    const dataset = await client.dataset();
    const before = await client.clusters();
    expect(distinctPanelColors(dataset.points, before.cluster_id)).toBe(1);

    const dg = await client.decisionGraph();
    const popout = dg
      .filter((p) => !p.is_root)
      .reduce((a, b) => (a.rho * a.delta ** 2 >= b.rho * b.delta ** 2 ? a : b));
    const cut = await client.cut({
      rho_min: popout.rho - 1e-6,
      rho_max: popout.rho + 1e-6,
      delta_min: popout.delta - 1e-6,
      delta_max: popout.delta + 1e-6,
    });
    expect(cut.n_clusters).toBe(2);
    expect(distinctPanelColors(dataset.points, cut.cluster_id)).toBe(2);

    const undone = await client.undo();
    expect(undone.cluster_id).toEqual(before.cluster_id);
    expect(distinctPanelColors(dataset.points, undone.cluster_id)).toBe(1);
  }, 60_000);
});
