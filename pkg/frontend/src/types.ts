export interface DgPoint {
  node: number;
  rho: number;
  delta: number;
  is_root: boolean;
}

export interface Assignment {
  root_of: number[];
  cluster_id: number[];
  n_clusters: number;
  n_components?: number;
  history_depth?: number;
}

export interface DatasetPayload {
  name: string;
  points: number[][];
  labels: number[] | null;
}

/** Rectangle in decision-graph data coordinates (rho, delta). */
export interface Rect {
  rho_min: number;
  rho_max: number;
  delta_min: number;
  delta_max: number;
}

export interface ViewState {
  dgPoints: DgPoint[];
  clusters: Assignment;
  /** Stored in data coordinates so it survives axis rescaling. */
  selection: Rect | null;
  /** Nodes captured by the last applied cut, for highlighting. */
  lastCut: number[];
  historyDepth: number;
  error: string | null;
  logDelta: boolean;
}
