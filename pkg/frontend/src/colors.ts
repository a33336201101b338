/** Categorical palette; cluster color is a pure function of cluster id. */
const PALETTE = [
  "#1f77b4",
  "#ff7f0e",
  "#2ca02c",
  "#d62728",
  "#9467bd",
  "#8c564b",
  "#e377c2",
  "#7f7f7f",
  "#bcbd22",
  "#17becf",
];

export function clusterColor(clusterId: number): string {
  return PALETTE[((clusterId % PALETTE.length) + PALETTE.length) % PALETTE.length];
}
