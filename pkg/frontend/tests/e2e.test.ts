import { spawn, ChildProcess } from "node:child_process";
import { resolve } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import { createApp } from "../src/app.js";
import { examplePreset } from "../src/state.js";

const PORT = 8977;
const BASE = `http://127.0.0.1:${PORT}`;

let service: ChildProcess;
const client = new ApiClient(BASE);

async function waitForHealth(timeoutMs: number): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  let lastError: unknown = null;
  while (Date.now() < deadline) {
    try {
      const health = await client.health();
      if (health.status === "ok") return;
    } catch (err) {
      lastError = err;
    }
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
  throw new Error(`service never became healthy: ${lastError}`);
}

beforeAll(async () => {
  service = spawn(
    "python3",
    ["-m", "uvicorn", "sublinks.service:app", "--host", "127.0.0.1", "--port", String(PORT)],
    { cwd: resolve(process.cwd(), ".."), stdio: "ignore" },
  );
  await waitForHealth(30_000);
});

afterAll(() => {
  service?.kill();
});

describe("live service contract", () => {
  const example = examplePreset();

  it("reports a crossing-convention identifier", async () => {
    const health = await client.health();
    expect(health.status).toBe("ok");
    expect(health.convention).toBe("positive-generator-left-strand-over/v1");
  });

  it("reduces the worked example to a 20-letter word with linking = adjacency", async () => {
    const res = await client.reduce(example.adj);
    expect(res.stats).toEqual({ letters: 20, crossings: 20, components: 5, size: 25 });
    expect(res.word.strands).toBe(5);
    expect(res.word.letters).toHaveLength(20);
    expect(res.linking).toEqual(example.adj);
    expect(res.svg).toContain("<svg");
  });

  it("certifies {1,3,5} as independent/trivial with ascending peel order", async () => {
    const res = await client.sublink(example.adj, [1, 3, 5]);
    expect(res.independent).toBe(true);
    expect(res.trivial).toBe("TRUE");
    expect(res.peel_order).toEqual([1, 3, 5]);
    expect(res.svg_highlighted).toContain("<svg");
  });

  it("rejects {2,4} on both sides with a stuck residual", async () => {
    const res = await client.sublink(example.adj, [2, 4]);
    expect(res.independent).toBe(false);
    expect(res.trivial).toBe("FALSE");
    expect(res.failure_residual).toEqual([2, 4]);
  });

  it("enforces the render limit but still computes with svg disabled", async () => {
    const n = 31;
    const empty = Array.from({ length: n }, () => new Array<number>(n).fill(0));
    await expect(client.reduce(empty)).rejects.toMatchObject({
      status: 422,
      errorName: "RenderLimitExceeded",
    });
    const res = await client.reduce(empty, false);
    expect(res.svg).toBeNull();
    expect(res.stats.letters).toBe(n * (n - 1));
  });

  it("rejects malformed graphs with a named 400 error", async () => {
    try {
      await client.reduce([
        [0, 1],
        [0, 0],
      ]);
      expect.unreachable("asymmetric matrix must be rejected");
    } catch (err) {
      expect(err).toBeInstanceOf(ApiError);
      expect((err as ApiError).status).toBe(400);
      expect((err as ApiError).errorName).toBe("NotSymmetric");
    }
  });
});

describe("full UI round trip against the live service", () => {
  it("walks preset -> ✓/✓ badges -> edited subset -> ✗/✗ badges", async () => {
    document.body.innerHTML = `<div id="app"></div>`;
    const app = createApp(document.getElementById("app")!, client);
    await app.whenIdle();

    document.querySelector<HTMLButtonElement>("#preset-example")!.click();
    await app.whenIdle();
    const text = (selector: string): string =>
      document.querySelector(selector)!.textContent ?? "";
    expect(text("#stats")).toContain("20 letters");
    expect(text("#word").split(" ")).toHaveLength(20);
    expect(text("#matrix-match")).toContain("✓");
    expect(text("#badge-independent")).toBe("independent set ✓");
    expect(text("#badge-trivial")).toBe("trivial sublink ✓");
    expect(text("#peel")).toContain("1, 3, 5");
    expect(document.querySelector("#svg-panel svg")).not.toBeNull();

    // deselect 1, 3, 5 and select 2, 4
    for (const v of [1, 3, 5, 2, 4]) {
      document
        .querySelector(`#graph-view g.vertex[data-vertex="${v}"]`)!
        .dispatchEvent(new MouseEvent("click", { bubbles: true }));
      await app.whenIdle();
    }
    expect(app.state().selection).toEqual([2, 4]);
    expect(text("#badge-independent")).toBe("not independent ✗");
    expect(text("#badge-trivial")).toBe("nontrivial sublink ✗");
    expect(text("#peel")).toContain("stuck residual");
    expect(text("#peel")).toContain("2, 4");

    // deleting the edge 2-4 makes the selected subset independent again
    document.querySelector<HTMLButtonElement>('button[data-edge="2-4"]')!.click();
    await app.whenIdle();
    expect(text("#badge-independent")).toBe("independent set ✓");
    expect(text("#badge-trivial")).toBe("trivial sublink ✓");
    expect(text("#peel")).toContain("2, 4");
  });
});
