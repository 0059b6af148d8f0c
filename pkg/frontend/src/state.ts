/**
 * Pure editor state for the graph panel.
 *
 * The state is a simple undirected graph on vertices 1..n (symmetric 0/1
 * adjacency matrix, zero diagonal) plus a sorted subset of selected
 * vertices. All transitions return fresh objects so the UI layer can treat
 * state values as immutable snapshots.
 */

export type Matrix = number[][];

export interface GraphState {
  readonly n: number;
  readonly adj: Matrix;
  readonly selection: readonly number[];
}

export const MIN_VERTICES = 1;
export const MAX_VERTICES = 12;

function cloneMatrix(adj: Matrix): Matrix {
  return adj.map((row) => [...row]);
}

export function emptyGraph(n = 3): GraphState {
  const size = Math.min(Math.max(n, MIN_VERTICES), MAX_VERTICES);
  return {
    n: size,
    adj: Array.from({ length: size }, () => new Array<number>(size).fill(0)),
    selection: [],
  };
}

/** 5-vertex worked example: edges 12, 23, 24, 34, 45; best independent set {1,3,5}. */
export function examplePreset(): GraphState {
  const edges: Array<[number, number]> = [
    [1, 2],
    [2, 3],
    [2, 4],
    [3, 4],
    [4, 5],
  ];
  let state = emptyGraph(5);
  for (const [i, j] of edges) state = toggleEdge(state, i, j);
  return { ...state, selection: [1, 3, 5] };
}

export function addVertex(state: GraphState): GraphState {
  if (state.n >= MAX_VERTICES) return state;
  const adj = state.adj.map((row) => [...row, 0]);
  adj.push(new Array<number>(state.n + 1).fill(0));
  return { n: state.n + 1, adj, selection: state.selection };
}

/** Remove vertex v; higher-numbered vertices shift down by one. */
export function removeVertex(state: GraphState, v: number): GraphState {
  if (state.n <= MIN_VERTICES || v < 1 || v > state.n) return state;
  const adj = state.adj
    .filter((_, r) => r !== v - 1)
    .map((row) => row.filter((_, c) => c !== v - 1));
  const selection = state.selection
    .filter((u) => u !== v)
    .map((u) => (u > v ? u - 1 : u));
  return { n: state.n - 1, adj, selection };
}

export function toggleEdge(state: GraphState, i: number, j: number): GraphState {
  if (i === j || i < 1 || j < 1 || i > state.n || j > state.n) return state;
  const adj = cloneMatrix(state.adj);
  const value = adj[i - 1][j - 1] === 1 ? 0 : 1;
  adj[i - 1][j - 1] = value;
  adj[j - 1][i - 1] = value;
  return { ...state, adj };
}

export function toggleSelection(state: GraphState, v: number): GraphState {
  if (v < 1 || v > state.n) return state;
  const selection = state.selection.includes(v)
    ? state.selection.filter((u) => u !== v)
    : [...state.selection, v].sort((a, b) => a - b);
  return { ...state, selection };
}

export function clearSelection(state: GraphState): GraphState {
  return { ...state, selection: [] };
}

export function edgeList(state: GraphState): Array<[number, number]> {
  const edges: Array<[number, number]> = [];
  for (let i = 1; i <= state.n; i++) {
    for (let j = i + 1; j <= state.n; j++) {
      if (state.adj[i - 1][j - 1] === 1) edges.push([i, j]);
    }
  }
  return edges;
}

export function matricesEqual(a: Matrix, b: Matrix): boolean {
  if (a.length !== b.length) return false;
  return a.every(
    (row, r) => row.length === b[r].length && row.every((x, c) => x === b[r][c]),
  );
}

/**
 * Monotone request counter for discarding stale responses: each request
 * takes a ticket, and only the holder of the latest ticket may publish
 * its result.
 */
export class Generation {
  private current = 0;

  next(): number {
    return ++this.current;
  }

  isCurrent(ticket: number): boolean {
    return ticket === this.current;
  }
}
