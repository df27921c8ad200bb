/** latestWins is the supersession gate every keystroke-driven request goes
 * through: only the newest call may deliver a result. */

import { describe, expect, it } from "vitest";
import { latestWins } from "../src/api.js";

/** A run function that resolves after a delay unless its signal aborts. */
function delayed<T>(value: T, ms: number) {
  return (signal: AbortSignal): Promise<T> =>
    new Promise((resolve, reject) => {
      const timer = setTimeout(() => resolve(value), ms);
      signal.addEventListener("abort", () => {
        clearTimeout(timer);
        reject(new Error("aborted"));
      });
    });
}

describe("latestWins", () => {
  it("delivers results when calls do not overlap", async () => {
    const gate = latestWins((signal: AbortSignal, v: string) => delayed(v, 1)(signal));
    expect(await gate("first")).toBe("first");
    expect(await gate("second")).toBe("second");
  });

  it("supersedes an in-flight call: only the newest resolves with a value", async () => {
    let calls = 0;
    const gate = latestWins((signal: AbortSignal, v: string, ms: number) => {
      calls += 1;
      return delayed(v, ms)(signal);
    });
    const slow = gate("slow", 50);
    const fast = gate("fast", 1);
    expect(await fast).toBe("fast");
    expect(await slow).toBeUndefined();
    expect(calls).toBe(2);
  });

  it("swallows the abort rejection of a superseded call", async () => {
    const gate = latestWins((signal: AbortSignal, v: string, ms: number) =>
      delayed(v, ms)(signal),
    );
    const results = await Promise.all([gate("a", 40), gate("b", 40), gate("c", 1)]);
    expect(results).toEqual([undefined, undefined, "c"]);
  });

  it("propagates real failures of the newest call", async () => {
    const gate = latestWins(() => Promise.reject(new Error("server down")));
    await expect(gate()).rejects.toThrow("server down");
  });
});
