/** Scripted play-throughs against the recorded server exchanges: the
 * controller drives whole games exactly as the page would, and every
 * backend contact must match the recording or the stub throws. */

import { afterEach, describe, expect, it } from "vitest";
import { vi } from "vitest";

import { GameController } from "../src/controller.js";
import { atTarget, onCount } from "../src/state.js";
import type { BoardState } from "../src/state.js";
import {
  GOLDEN,
  GOLDEN_TEXT,
  K2,
  PATH22,
  installFixtureFetch,
} from "./helpers.js";

afterEach(() => {
  vi.unstubAllGlobals();
});

function makeController(): { controller: GameController; seen: BoardState[] } {
  const seen: BoardState[] = [];
  const controller = new GameController((s) => seen.push(s));
  return { controller, seen };
}

describe("the scripted session on the six-vertex example", () => {
  it("loads from pasted text, plays hint-guided from {0,1} lit, ends at two lights with the badge unchanged", async () => {
    const fetchLog = installFixtureFetch();
    const { controller } = makeController();

    await controller.load({ text: GOLDEN_TEXT }, "110000");
    const loaded = controller.state!;
    expect(loaded.configuration).toBe("110000");
    expect(loaded.orbitClass).toBe("Q1"); // badge fetched with the opening hint
    expect(loaded.minLight).toBe(2);
    expect(loaded.targetWeight).toBe(2);

    // hint-guided play: follow the hinted vertex until the solver says
    // minimal; {0,1} lit is already a minimum, so that is zero moves
    let guard = 0;
    while (controller.state!.hintMove !== null) {
      await controller.clickVertex(controller.state!.hintMove);
      await controller.hint();
      guard += 1;
      expect(guard).toBeLessThan(8);
    }

    const final = controller.state!;
    expect(final.history).toEqual([]);
    expect(final.configuration).toBe("110000");
    expect(onCount(final.configuration)).toBe(2);
    expect(final.orbitClass).toBe("Q1"); // conserved across the whole game
    expect(atTarget(final)).toBe(true);

    // exactly two backend contacts: one analyze, one hint
    expect(fetchLog.calls.map((c) => c.path)).toEqual([
      "/api/v1/analyze",
      "/api/v1/hint",
    ]);
  });

  it("descends from all-on to the orbit minimum in one hinted move", async () => {
    installFixtureFetch();
    const { controller } = makeController();

    await controller.load(GOLDEN, "111111");
    expect(controller.state!.orbitClass).toBe("Q1");
    expect(controller.state!.hintMove).toBe(1);
    expect(controller.state!.targetWeight).toBe(2);

    let guard = 0;
    while (controller.state!.hintMove !== null) {
      await controller.clickVertex(controller.state!.hintMove);
      await controller.hint();
      guard += 1;
      expect(guard).toBeLessThan(8);
    }

    const final = controller.state!;
    expect(final.configuration).toBe("010001");
    expect(onCount(final.configuration)).toBe(2);
    expect(final.history).toEqual([1]);
    expect(final.orbitClass).toBe("Q1");
    expect(atTarget(final)).toBe(true);
  });

  it("reaches {0,1} from another weight-4 start the same way", async () => {
    installFixtureFetch();
    const { controller } = makeController();
    await controller.load(GOLDEN, "011110");
    expect(controller.state!.hintMove).toBe(1);
    await controller.clickVertex(1);
    expect(controller.state!.configuration).toBe("110000");
    await controller.hint();
    expect(controller.state!.hintMove).toBeNull();
    expect(atTarget(controller.state!)).toBe(true);
    expect(controller.state!.orbitClass).toBe("Q1");
  });

  it("treats clicking the same lit vertex twice as an involution", async () => {
    installFixtureFetch();
    const { controller } = makeController();
    await controller.load(GOLDEN, "100000");
    expect(controller.state!.orbitClass).toBe("Q0");
    expect(controller.state!.targetWeight).toBe(1);

    await controller.clickVertex(0);
    expect(controller.state!.configuration).toBe("111010");
    await controller.clickVertex(0);
    expect(controller.state!.configuration).toBe("100000");
    expect(controller.state!.history).toEqual([0, 0]);
    expect(controller.state!.orbitClass).toBe("Q0");
  });

  it("drops clicks on unlit vertices without contacting the server", async () => {
    const fetchLog = installFixtureFetch();
    const { controller, seen } = makeController();
    await controller.load(GOLDEN, "110000");
    const before = fetchLog.calls.length;
    const published = seen.length;

    const state = await controller.clickVertex(3); // vertex 3 is off
    expect(state.configuration).toBe("110000");
    expect(state.history).toEqual([]);
    expect(fetchLog.calls.length).toBe(before); // no request was even formed
    expect(seen.length).toBe(published); // nothing republished
  });

  it("undoes locally by replaying the shorter history", async () => {
    const fetchLog = installFixtureFetch();
    const { controller } = makeController();
    await controller.load(GOLDEN, "100000");
    await controller.clickVertex(0);
    const before = fetchLog.calls.length;

    controller.undoLast();
    expect(controller.state!.configuration).toBe("100000");
    expect(controller.state!.history).toEqual([]);
    expect(controller.state!.orbitClass).toBe("Q0");
    expect(fetchLog.calls.length).toBe(before); // undo never calls out

    controller.undoLast(); // nothing left to undo: a quiet no-op
    expect(controller.state!.configuration).toBe("100000");
  });

  it("serializes queued actions so a hint sees the move before it", async () => {
    installFixtureFetch();
    const { controller } = makeController();
    await controller.load(GOLDEN, "111111");

    // fire both without awaiting: the hint must run after the move and
    // therefore report the post-move configuration as already minimal
    const moved = controller.clickVertex(1);
    const hinted = controller.hint();
    await moved;
    const afterHint = await hinted;
    expect(afterHint.configuration).toBe("010001");
    expect(afterHint.hintMove).toBeNull();
    expect(atTarget(afterHint)).toBe(true);
  });

  it("starts all-off as already solved", async () => {
    installFixtureFetch();
    const { controller } = makeController();
    await controller.load(GOLDEN);
    expect(controller.state!.configuration).toBe("000000");
    expect(controller.state!.orbitClass).toBe("ZERO");
    expect(controller.state!.targetWeight).toBe(0);
    expect(atTarget(controller.state!)).toBe(true);
  });
});

describe("games outside the closed-form regime", () => {
  it("plays the two-vertex graph to a single light with no badge", async () => {
    installFixtureFetch();
    const { controller } = makeController();
    await controller.load(K2, "11");
    expect(controller.state!.orbitClass).toBeNull(); // out of scope: no badge
    expect(controller.state!.minLight).toBeNull();
    expect(controller.state!.regime).toBe("line-graph-out-of-scope");
    expect(controller.state!.hintMove).toBe(0);
    expect(controller.state!.targetWeight).toBe(1);

    await controller.clickVertex(0);
    expect(controller.state!.configuration).toBe("10");
    await controller.hint();
    expect(controller.state!.hintMove).toBeNull();
    expect(atTarget(controller.state!)).toBe(true);
  });

  it("disables hints over the enumeration cap but still loads the game", async () => {
    const fetchLog = installFixtureFetch();
    const { controller } = makeController();
    await controller.load(PATH22, "1" + "0".repeat(21));

    const state = controller.state!;
    expect(state.configuration).toBe("1" + "0".repeat(21));
    expect(state.hintDisabled).toContain("enumeration cap");
    expect(state.orbitClass).toBeNull();

    const before = fetchLog.calls.length;
    await controller.hint(); // disabled: no request goes out
    expect(fetchLog.calls.length).toBe(before);
    expect(controller.state!.hintDisabled).toContain("enumeration cap");
  });
});

describe("the generate flow", () => {
  it("generates a grid, remembers its shape, and starts solved", async () => {
    const fetchLog = installFixtureFetch();
    const { controller } = makeController();
    await controller.loadGenerated("grid", [2, 3]);

    const state = controller.state!;
    expect(state.graph.n).toBe(6);
    expect(state.grid).toEqual({ rows: 2, cols: 3 });
    expect(state.configuration).toBe("000000");
    expect(state.orbitClass).toBe("ZERO");
    expect(atTarget(state)).toBe(true);

    expect(fetchLog.calls.map((c) => c.path)).toEqual([
      "/api/v1/generate?kind=grid&params=2,3",
      "/api/v1/analyze",
      "/api/v1/hint",
    ]);
  });
});

describe("controller misuse", () => {
  it("rejects play before any game is loaded, then recovers", async () => {
    installFixtureFetch();
    const { controller } = makeController();
    await expect(controller.clickVertex(0)).rejects.toThrow("no game loaded");
    await expect(controller.hint()).rejects.toThrow("no game loaded");
    // the queue absorbs the failures and keeps working
    await controller.load(GOLDEN, "110000");
    expect(controller.state!.orbitClass).toBe("Q1");
  });
});
