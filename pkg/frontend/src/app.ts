/**
 * DOM wiring for the single-page explorer.
 *
 * Left panel: graph editor (vertex ring, edge toggle grid, preset/add/remove
 * buttons). Right panel: reduction results (braid word, stats, linking vs
 * adjacency matrices) and, when a subset is selected, the sublink verdict
 * badges with the peel order or stuck residual plus the highlighted SVG.
 *
 * Every edit triggers fresh /api/reduce and /api/sublink requests; responses
 * that lost a race against a newer edit are discarded via Generation tickets.
 */

import { Api, ApiError, ReduceResponse, SublinkResponse } from "./api.js";
import {
  GraphState,
  Generation,
  addVertex,
  clearSelection,
  edgeList,
  emptyGraph,
  examplePreset,
  matricesEqual,
  removeVertex,
  toggleEdge,
  toggleSelection,
  MAX_VERTICES,
  MIN_VERTICES,
} from "./state.js";

export interface App {
  element: HTMLElement;
  state(): GraphState;
  loadPreset(): void;
  addVertex(): void;
  removeLastVertex(): void;
  toggleEdge(i: number, j: number): void;
  toggleVertex(v: number): void;
  clearSelection(): void;
  /** Resolves once the most recently triggered round of requests settled. */
  whenIdle(): Promise<void>;
}

const RING_SIZE = 240;
const RING_RADIUS = 90;

export function createApp(root: HTMLElement, client: Api): App {
  let state = emptyGraph(3);
  let reduceResult: ReduceResponse | null = null;
  let sublinkResult: SublinkResponse | null = null;
  let errorText: string | null = null;
  const reduceGen = new Generation();
  const sublinkGen = new Generation();
  let idle: Promise<void> = Promise.resolve();

  root.innerHTML = `
    <header>
      <h1>sublinks explorer</h1>
      <p id="convention" class="muted"></p>
    </header>
    <main>
      <section class="editor">
        <h2>Graph</h2>
        <svg id="graph-view" viewBox="0 0 ${RING_SIZE} ${RING_SIZE}" width="${RING_SIZE}" height="${RING_SIZE}"></svg>
        <div class="toolbar">
          <button id="preset-example">Worked example (5 vertices)</button>
          <button id="add-vertex">Add vertex</button>
          <button id="remove-vertex">Remove last vertex</button>
          <button id="clear-selection">Clear selection</button>
        </div>
        <p class="muted">Click a vertex to toggle it in the subset; toggle edges below.</p>
        <div id="edge-grid" class="edge-grid"></div>
      </section>
      <section class="results">
        <h2>Reduction</h2>
        <div id="error" class="error" hidden></div>
        <p id="stats" class="muted"></p>
        <p><code id="word"></code></p>
        <div class="matrices">
          <div><h3>adjacency</h3><table id="adjacency-matrix"></table></div>
          <div><h3>linking</h3><table id="linking-matrix"></table></div>
        </div>
        <p id="matrix-match"></p>
        <h2>Sublink</h2>
        <div id="sublink-panel">
          <span id="badge-independent" class="badge"></span>
          <span id="badge-trivial" class="badge"></span>
          <p id="peel"></p>
        </div>
        <div id="svg-panel"></div>
      </section>
    </main>
  `;

  const el = <T extends HTMLElement>(id: string): T =>
    root.querySelector<T>(`#${id}`)!;

  function setState(next: GraphState): void {
    state = next;
    renderEditor();
    idle = refresh();
  }

  async function refresh(): Promise<void> {
    errorText = null;
    const reduceTicket = reduceGen.next();
    const sublinkTicket = sublinkGen.next();
    const tasks: Array<Promise<void>> = [
      client
        .reduce(state.adj)
        .then((res) => {
          if (reduceGen.isCurrent(reduceTicket)) reduceResult = res;
        })
        .catch((err) => {
          if (reduceGen.isCurrent(reduceTicket)) {
            reduceResult = null;
            errorText = describe(err);
          }
        }),
    ];
    if (state.selection.length > 0) {
      tasks.push(
        client
          .sublink(state.adj, [...state.selection])
          .then((res) => {
            if (sublinkGen.isCurrent(sublinkTicket)) sublinkResult = res;
          })
          .catch((err) => {
            if (sublinkGen.isCurrent(sublinkTicket)) {
              sublinkResult = null;
              errorText = describe(err);
            }
          }),
      );
    } else {
      sublinkResult = null;
    }
    await Promise.all(tasks);
    if (reduceGen.isCurrent(reduceTicket)) renderResults();
  }

  function describe(err: unknown): string {
    if (err instanceof ApiError) return err.message;
    return err instanceof Error ? err.message : String(err);
  }

  function renderEditor(): void {
    const svg = el<HTMLElement>("graph-view");
    const cx = RING_SIZE / 2;
    const parts: string[] = [];
    const pos = (v: number): [number, number] => {
      const angle = (2 * Math.PI * (v - 1)) / state.n - Math.PI / 2;
      return [cx + RING_RADIUS * Math.cos(angle), cx + RING_RADIUS * Math.sin(angle)];
    };
    for (const [i, j] of edgeList(state)) {
      const [x1, y1] = pos(i);
      const [x2, y2] = pos(j);
      parts.push(
        `<line x1="${x1.toFixed(1)}" y1="${y1.toFixed(1)}" x2="${x2.toFixed(1)}" y2="${y2.toFixed(1)}" class="edge" />`,
      );
    }
    for (let v = 1; v <= state.n; v++) {
      const [x, y] = pos(v);
      const cls = state.selection.includes(v) ? "vertex selected" : "vertex";
      parts.push(
        `<g class="${cls}" data-vertex="${v}">` +
          `<circle cx="${x.toFixed(1)}" cy="${y.toFixed(1)}" r="14" />` +
          `<text x="${x.toFixed(1)}" y="${(y + 4).toFixed(1)}" text-anchor="middle">${v}</text></g>`,
      );
    }
    svg.innerHTML = parts.join("");
    svg.querySelectorAll<SVGGElement>("g.vertex").forEach((g) => {
      g.addEventListener("click", () =>
        setState(toggleSelection(state, Number(g.dataset.vertex))),
      );
    });

    const grid = el<HTMLDivElement>("edge-grid");
    const buttons: string[] = [];
    for (let i = 1; i <= state.n; i++) {
      for (let j = i + 1; j <= state.n; j++) {
        const on = state.adj[i - 1][j - 1] === 1 ? " on" : "";
        buttons.push(
          `<button class="edge-toggle${on}" data-edge="${i}-${j}">${i}–${j}</button>`,
        );
      }
    }
    grid.innerHTML = buttons.join("");
    grid.querySelectorAll<HTMLButtonElement>("button.edge-toggle").forEach((b) => {
      b.addEventListener("click", () => {
        const [i, j] = b.dataset.edge!.split("-").map(Number);
        setState(toggleEdge(state, i, j));
      });
    });
    el<HTMLButtonElement>("add-vertex").disabled = state.n >= MAX_VERTICES;
    el<HTMLButtonElement>("remove-vertex").disabled = state.n <= MIN_VERTICES;
  }

  function matrixTable(table: HTMLTableElement, matrix: number[][]): void {
    table.innerHTML = matrix
      .map((row) => `<tr>${row.map((x) => `<td>${x}</td>`).join("")}</tr>`)
      .join("");
  }

  function badge(span: HTMLElement, ok: boolean, okText: string, badText: string): void {
    span.textContent = ok ? `${okText} ✓` : `${badText} ✗`;
    span.className = ok ? "badge ok" : "badge bad";
  }

  function renderResults(): void {
    const error = el<HTMLDivElement>("error");
    error.hidden = errorText === null;
    error.textContent = errorText ?? "";

    matrixTable(el<HTMLTableElement>("adjacency-matrix"), state.adj);
    if (reduceResult !== null) {
      const { stats } = reduceResult;
      el<HTMLParagraphElement>("stats").textContent =
        `${stats.letters} letters, ${stats.crossings} crossings, ` +
        `${stats.components} components, size ${stats.size}`;
      el<HTMLElement>("word").textContent = reduceResult.word.letters.join(" ");
      matrixTable(el<HTMLTableElement>("linking-matrix"), reduceResult.linking);
      const match = matricesEqual(reduceResult.linking, state.adj);
      badge(
        el<HTMLSpanElement>("matrix-match"),
        match,
        "linking matrix = adjacency matrix",
        "linking matrix differs from adjacency matrix",
      );
    } else {
      el<HTMLParagraphElement>("stats").textContent = "";
      el<HTMLElement>("word").textContent = "";
      el<HTMLTableElement>("linking-matrix").innerHTML = "";
      el<HTMLSpanElement>("matrix-match").textContent = "";
    }

    const panel = el<HTMLDivElement>("sublink-panel");
    panel.hidden = sublinkResult === null;
    const svgPanel = el<HTMLDivElement>("svg-panel");
    if (sublinkResult !== null) {
      badge(
        el<HTMLSpanElement>("badge-independent"),
        sublinkResult.independent,
        "independent set",
        "not independent",
      );
      badge(
        el<HTMLSpanElement>("badge-trivial"),
        sublinkResult.trivial === "TRUE",
        "trivial sublink",
        "nontrivial sublink",
      );
      const peel = el<HTMLParagraphElement>("peel");
      if (sublinkResult.peel_order !== undefined) {
        peel.textContent = `peels off in order ${sublinkResult.peel_order.join(", ")}`;
      } else {
        peel.textContent = `stuck residual: {${(sublinkResult.failure_residual ?? []).join(", ")}}`;
      }
      svgPanel.innerHTML = sublinkResult.svg_highlighted ?? reduceResult?.svg ?? "";
    } else {
      svgPanel.innerHTML = reduceResult?.svg ?? "";
    }
  }

  el<HTMLButtonElement>("preset-example").addEventListener("click", () =>
    setState(examplePreset()),
  );
  el<HTMLButtonElement>("add-vertex").addEventListener("click", () =>
    setState(addVertex(state)),
  );
  el<HTMLButtonElement>("remove-vertex").addEventListener("click", () =>
    setState(removeVertex(state, state.n)),
  );
  el<HTMLButtonElement>("clear-selection").addEventListener("click", () =>
    setState(clearSelection(state)),
  );

  void client
    .health()
    .then((h) => {
      el<HTMLParagraphElement>("convention").textContent = `convention: ${h.convention}`;
    })
    .catch(() => {
      el<HTMLParagraphElement>("convention").textContent = "service unreachable";
    });

  setState(state);

  return {
    element: root,
    state: () => state,
    loadPreset: () => setState(examplePreset()),
    addVertex: () => setState(addVertex(state)),
    removeLastVertex: () => setState(removeVertex(state, state.n)),
    toggleEdge: (i, j) => setState(toggleEdge(state, i, j)),
    toggleVertex: (v) => setState(toggleSelection(state, v)),
    clearSelection: () => setState(clearSelection(state)),
    whenIdle: () => idle,
  };
}
