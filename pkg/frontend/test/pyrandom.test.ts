/**
 * The generator port is pinned against vectors produced by the CPython
 * implementation itself, covering seeding (small, zero, and multi-word
 * integers), raw bit extraction, full-permutation sampling, and the
 * rejection-sampled choice path.
 */

import { describe, expect, it } from "vitest";

import { PyRandom } from "../src/pyrandom.js";
import { readFixture } from "./helpers.js";

interface SeedVectors {
  bits32: number[];
  mixed: number[];
  perm137: number[];
  choices: number[];
}

const VECTORS: Record<string, SeedVectors> = JSON.parse(readFixture("rng-vectors.json"));
const CHOICE_SIZES = [3, 1, 9, 40, 2, 17, 101, 5];

function range(n: number): number[] {
  return Array.from({ length: n }, (_, i) => i);
}

describe.each(Object.keys(VECTORS))("seed %s", (seed) => {
  const expected = VECTORS[seed];
  const seedValue = BigInt(seed);

  it("matches getrandbits(32)", () => {
    const r = new PyRandom(seedValue);
    expect(range(expected.bits32.length).map(() => r.getrandbits(32))).toEqual(expected.bits32);
  });

  it("matches getrandbits at mixed widths", () => {
    const r = new PyRandom(seedValue);
    const got = range(expected.mixed.length).map((i) => r.getrandbits(1 + ((i * 7) % 32)));
    expect(got).toEqual(expected.mixed);
  });

  it("matches a full sample permutation", () => {
    const r = new PyRandom(seedValue);
    expect(r.sample(range(137), 137)).toEqual(expected.perm137);
  });

  it("matches choice draws", () => {
    const r = new PyRandom(seedValue);
    expect(CHOICE_SIZES.map((n) => r.choice(range(n)))).toEqual(expected.choices);
  });
});

describe("argument validation", () => {
  it("rejects out-of-range bit counts", () => {
    const r = new PyRandom(1);
    expect(() => r.getrandbits(0)).toThrow(RangeError);
    expect(() => r.getrandbits(33)).toThrow(RangeError);
  });

  it("rejects oversized samples and empty choices", () => {
    const r = new PyRandom(1);
    expect(() => r.sample([1, 2], 3)).toThrow(RangeError);
    expect(() => r.sample([1, 2], -1)).toThrow(RangeError);
    expect(() => r.choice([])).toThrow(RangeError);
  });

  it("treats negative seeds by absolute value, like the reference", () => {
    const a = new PyRandom(-413);
    const b = new PyRandom(413);
    expect(a.getrandbits(32)).toBe(b.getrandbits(32));
  });
});
