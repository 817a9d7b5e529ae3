import { describe, expect, it } from "vitest";

import { ApiClient, ApiError, latestOnly } from "../src/api";

function deferred<T>() {
  let resolve!: (value: T) => void;
  const promise = new Promise<T>((r) => (resolve = r));
  return { promise, resolve };
}

describe("latestOnly", () => {
  it("delivers only the newest call when responses arrive out of order", async () => {
    const gates = [deferred<string>(), deferred<string>()];
    let call = 0;
    const wrapped = latestOnly(() => gates[call++]!.promise);

    const first = wrapped();
    const second = wrapped();
    // the stale (first) response arrives after the newer request started
    gates[0]!.resolve("stale");
    gates[1]!.resolve("fresh");
    expect(await first).toBeUndefined();
    expect(await second).toBe("fresh");
  });

  it("delivers sequential calls normally", async () => {
    const wrapped = latestOnly(async (x: number) => x * 2);
    expect(await wrapped(1)).toBe(2);
    expect(await wrapped(2)).toBe(4);
  });
});

function fakeFetch(handler: (url: string, body: unknown) => { status: number; payload: unknown }) {
  return async (url: string, init?: RequestInit): Promise<Response> => {
    const body = init?.body ? JSON.parse(init.body as string) : undefined;
    const { status, payload } = handler(url, body);
    return {
      ok: status >= 200 && status < 300,
      status,
      json: async () => payload,
    } as Response;
  };
}

const ENVELOPE = {
  request_id: "abc",
  resolved: { scenario: {}, args: {} },
  result: { dataset: "fig1", columns: ["a"], metadata: {}, rows: [[1]] },
  warnings: [],
};

describe("ApiClient", () => {
  it("posts JSON and unwraps envelopes", async () => {
    const seen: unknown[] = [];
    const client = new ApiClient(
      "",
      fakeFetch((url, body) => {
        seen.push([url, body]);
        return { status: 200, payload: ENVELOPE };
      }),
    );
    const envelope = await client.figure("fig1", { preset: "p" });
    expect(envelope?.result.dataset).toBe("fig1");
    expect(seen[0]).toEqual(["/api/v1/figure", { preset: "p", id: "fig1" }]);
  });

  it("separate figure ids do not supersede each other", async () => {
    const client = new ApiClient(
      "",
      fakeFetch(() => ({ status: 200, payload: ENVELOPE })),
    );
    const [a, b] = await Promise.all([
      client.figure("fig1", { preset: "p" }),
      client.figure("fig2", { preset: "p" }),
    ]);
    expect(a).toBeDefined();
    expect(b).toBeDefined();
  });

  it("surfaces 422 detail as ApiError with the engine message", async () => {
    const client = new ApiClient(
      "",
      fakeFetch(() => ({
        status: 422,
        payload: { detail: "stacks.curves.western_pem.learning_rate = 1.2 outside (-1, 1)" },
      })),
    );
    await expect(client.target({ preset: "p" })).rejects.toThrowError(ApiError);
    await expect(client.target({ preset: "p" })).rejects.toThrow(
      "stacks.curves.western_pem.learning_rate = 1.2 outside (-1, 1)",
    );
  });

  it("lists presets", async () => {
    const client = new ApiClient(
      "",
      fakeFetch(() => ({
        status: 200,
        payload: { presets: [{ name: "p", description: "", provenance: {}, scenario: {} }] },
      })),
    );
    const presets = await client.presets();
    expect(presets.map((p) => p.name)).toEqual(["p"]);
  });
});
