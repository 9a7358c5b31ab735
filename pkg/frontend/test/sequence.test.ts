import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { RequestSequencer, debounce } from "../src/sequence.js";

describe("request sequencer", () => {
  it("accepts responses arriving in order", () => {
    const seq = new RequestSequencer();
    const a = seq.next();
    expect(seq.accept(a)).toBe(true);
    const b = seq.next();
    expect(seq.accept(b)).toBe(true);
  });

  it("drops a stale response overtaken by a newer request", () => {
    const seq = new RequestSequencer();
    const slow = seq.next();
    const fast = seq.next();
    expect(seq.accept(fast)).toBe(true);
    expect(seq.accept(slow)).toBe(false);
  });

  it("drops the older answer even before the newer one lands", () => {
    const seq = new RequestSequencer();
    const first = seq.next();
    seq.next(); // newer edit already issued
    expect(seq.accept(first)).toBe(false);
  });
});

describe("debounce", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });
  afterEach(() => {
    vi.useRealTimers();
  });

  it("fires once on the trailing edge of a burst", () => {
    const spy = vi.fn();
    const run = debounce(spy, 300);
    run();
    run();
    run();
    vi.advanceTimersByTime(299);
    expect(spy).not.toHaveBeenCalled();
    vi.advanceTimersByTime(1);
    expect(spy).toHaveBeenCalledTimes(1);
  });

  it("restarts the window on each call", () => {
    const spy = vi.fn();
    const run = debounce(spy, 300);
    run();
    vi.advanceTimersByTime(200);
    run();
    vi.advanceTimersByTime(200);
    expect(spy).not.toHaveBeenCalled();
    vi.advanceTimersByTime(100);
    expect(spy).toHaveBeenCalledTimes(1);
  });

  it("can be cancelled", () => {
    const spy = vi.fn();
    const run = debounce(spy, 300);
    run();
    run.cancel();
    vi.advanceTimersByTime(1000);
    expect(spy).not.toHaveBeenCalled();
  });
});
