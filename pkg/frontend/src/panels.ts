import { clusterColor } from "./colors.js";
import { Scale, extent } from "./scales.js";
import { DgPoint, Rect, ViewState } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const W = 460;
const H = 400;
const M = { left: 52, right: 14, top: 14, bottom: 40 };

function el(tag: string, attrs: Record<string, string | number>): SVGElement {
  const node = document.createElementNS(SVG_NS, tag) as SVGElement;
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, String(v));
  return node;
}

function clear(svg: SVGElement): void {
  while (svg.firstChild) svg.removeChild(svg.firstChild);
}

function axisLabels(svg: SVGElement, xLabel: string, yLabel: string): void {
  const x = el("text", {
    x: (M.left + W - M.right) / 2,
    y: H - 8,
    "text-anchor": "middle",
    class: "axis-label",
  });
  x.textContent = xLabel;
  const y = el("text", {
    x: 14,
    y: (M.top + H - M.bottom) / 2,
    "text-anchor": "middle",
    transform: `rotate(-90 14 ${(M.top + H - M.bottom) / 2})`,
    class: "axis-label",
  });
  y.textContent = yLabel;
  svg.appendChild(x);
  svg.appendChild(y);
}

export interface DgScales {
  rho: Scale;
  delta: Scale;
}

export function dgScales(points: DgPoint[], logDelta: boolean): DgScales {
  const [r0, r1] = extent(points.map((p) => p.rho));
  const [d0, d1] = extent(points.map((p) => p.delta));
  return {
    rho: new Scale(r0, r1, M.left, W - M.right),
    delta: new Scale(logDelta ? Math.max(d0, 1e-3) : d0, d1, H - M.bottom, M.top, logDelta),
  };
}

/** Decision graph: rho vs delta, roots as hollow diamonds, cuts ringed. */
export function renderDecisionGraph(svg: SVGElement, state: ViewState): DgScales {
  clear(svg);
  const scales = dgScales(state.dgPoints, state.logDelta);
  axisLabels(svg, "|P| (density proxy)", "L (edge length)");

  if (state.selection) {
    const r = state.selection;
    const x0 = scales.rho.toPixel(r.rho_min);
    const x1 = scales.rho.toPixel(r.rho_max);
    const y0 = scales.delta.toPixel(r.delta_max);
    const y1 = scales.delta.toPixel(r.delta_min);
    svg.appendChild(
      el("rect", {
        x: Math.min(x0, x1),
        y: Math.min(y0, y1),
        width: Math.abs(x1 - x0),
        height: Math.abs(y1 - y0),
        class: "selection-rect",
      }),
    );
  }

  const cut = new Set(state.lastCut);
  for (const p of state.dgPoints) {
    const cx = scales.rho.toPixel(p.rho);
    const cy = scales.delta.toPixel(p.delta);
    if (p.is_root) {
      svg.appendChild(
        el("rect", {
          x: cx - 4,
          y: cy - 4,
          width: 8,
          height: 8,
          transform: `rotate(45 ${cx} ${cy})`,
          class: "root-marker",
          "data-node": p.node,
        }),
      );
    } else {
      svg.appendChild(
        el("circle", {
          cx,
          cy,
          r: cut.has(p.node) ? 5 : 3,
          class: cut.has(p.node) ? "dg-point cut-highlight" : "dg-point",
          "data-node": p.node,
        }),
      );
    }
  }
  return scales;
}

/** Data scatter: first two coordinates, filled by served cluster id. */
export function renderDataScatter(
  svg: SVGElement,
  points: number[][],
  clusterId: number[],
  notice?: HTMLElement | null,
): void {
  clear(svg);
  const dim = points[0]?.length ?? 0;
  if (notice) {
    notice.textContent =
      dim > 2 ? `showing the first 2 of ${dim} coordinates` : "";
  }
  const [x0, x1] = extent(points.map((p) => p[0]));
  const [y0, y1] = extent(points.map((p) => p[1] ?? 0));
  const sx = new Scale(x0, x1, M.left, W - M.right);
  const sy = new Scale(y0, y1, H - M.bottom, M.top);
  axisLabels(svg, "x0", "x1");
  points.forEach((p, i) => {
    svg.appendChild(
      el("circle", {
        cx: sx.toPixel(p[0]),
        cy: sy.toPixel(p[1] ?? 0),
        r: 3,
        fill: clusterColor(clusterId[i] ?? 0),
        class: "data-point",
        "data-node": i,
      }),
    );
  });
}

export interface BrushCallbacks {
  onBrush: (rect: Rect) => void;
}

/**
 * Attach mouse brushing to the decision-graph svg. Pixel drag corners are
 * converted back to (rho, delta) data coordinates before the callback, so
 * the service receives exactly the drawn rectangle's data-space bounds.
 */
export function attachBrush(
  svg: SVGElement,
  getScales: () => DgScales,
  cb: BrushCallbacks,
): void {
  let start: [number, number] | null = null;
  let marquee: SVGElement | null = null;

  const toLocal = (ev: MouseEvent): [number, number] => {
    const box = (svg as unknown as { getBoundingClientRect(): DOMRect }).getBoundingClientRect();
    return [ev.clientX - box.left, ev.clientY - box.top];
  };

  svg.addEventListener("mousedown", (ev) => {
    start = toLocal(ev as MouseEvent);
    marquee = el("rect", { class: "marquee", x: start[0], y: start[1], width: 0, height: 0 });
    svg.appendChild(marquee);
  });

  svg.addEventListener("mousemove", (ev) => {
    if (!start || !marquee) return;
    const [x, y] = toLocal(ev as MouseEvent);
    marquee.setAttribute("x", String(Math.min(x, start[0])));
    marquee.setAttribute("y", String(Math.min(y, start[1])));
    marquee.setAttribute("width", String(Math.abs(x - start[0])));
    marquee.setAttribute("height", String(Math.abs(y - start[1])));
  });

  svg.addEventListener("mouseup", (ev) => {
    if (!start) return;
    const [x, y] = toLocal(ev as MouseEvent);
    const rect = pixelsToRect(getScales(), start, [x, y]);
    if (marquee) svg.removeChild(marquee);
    start = null;
    marquee = null;
    cb.onBrush(rect);
  });
}

export function pixelsToRect(
  scales: DgScales,
  a: [number, number],
  b: [number, number],
): Rect {
  const r1 = scales.rho.fromPixel(a[0]);
  const r2 = scales.rho.fromPixel(b[0]);
  const d1 = scales.delta.fromPixel(a[1]);
  const d2 = scales.delta.fromPixel(b[1]);
  return {
    rho_min: Math.min(r1, r2),
    rho_max: Math.max(r1, r2),
    delta_min: Math.min(d1, d2),
    delta_max: Math.max(d1, d2),
  };
}
