/**
 * Byte parity with the reference CLI on a 1,000-line corpus sample.
 *
 * The fixtures hold the CLI's own output files for every bundle and
 * render mode; the runtime must reproduce each one byte for byte.
 * Failures print the first diverging line, which is usually enough to
 * localize a porting bug.
 */

import { beforeAll, describe, expect, it } from "vitest";

import {
  AmbiguousFormError,
  TokenizedOutput,
  TokenizerSpec,
  decode,
  escapePiece,
  loadBundle,
  tokenize,
} from "../src/index.js";
import { fixturePath, readFixture, readFixtureLines, renderLines } from "./helpers.js";

const BUNDLES = ["pinyin", "pinyin-noindex", "wubi", "pinyin-cws"] as const;
const DECODABLE = ["pinyin", "wubi", "pinyin-cws"] as const;

let sample: string[];

beforeAll(() => {
  sample = readFixtureLines("sample.txt");
  expect(sample.length).toBe(1000);
});

function firstDiff(got: readonly string[], want: readonly string[]): string {
  const n = Math.min(got.length, want.length);
  for (let i = 0; i < n; i++) {
    if (got[i] !== want[i]) {
      return `line ${i + 1}:\n  got  ${got[i]}\n  want ${want[i]}`;
    }
  }
  return `line count ${got.length} vs ${want.length}`;
}

function expectSameFile(got: readonly string[], refName: string): void {
  const rendered = renderLines(got);
  const reference = readFixture(refName);
  if (rendered !== reference) {
    expect.fail(`${refName} diverges at ${firstDiff(got, reference.split("\n"))}`);
  }
}

describe.each(BUNDLES)("bundle %s", (name) => {
  let spec: TokenizerSpec;
  let outputs: TokenizedOutput[];

  beforeAll(() => {
    spec = loadBundle(fixturePath(name));
    outputs = sample.map((line) => tokenize(spec, line));
  });

  it("reproduces the CLI id stream", () => {
    expectSameFile(
      outputs.map((o) => o.ids.join(" ")),
      `${name}.ids`,
    );
  });

  it("reproduces the CLI piece stream", () => {
    expectSameFile(
      outputs.map((o) => o.tokens.map(escapePiece).join("\t")),
      `${name}.pieces`,
    );
  });

  it("reproduces the CLI offset spans", () => {
    expectSameFile(
      outputs.map((o) => o.offsets.map(([a, b]) => `${a}:${b}`).join(" ")),
      `${name}.offsets`,
    );
  });
});

describe.each(DECODABLE)("bundle %s", (name) => {
  it("reproduces the CLI decode of its own id stream", () => {
    const spec = loadBundle(fixturePath(name));
    const decoded = readFixtureLines(`${name}.ids`).map((line) =>
      decode(
        spec,
        line.split(" ").map((t) => Number(t)),
      ),
    );
    expectSameFile(decoded, `${name}.decoded`);
  });
});

describe("bundle pinyin-noindex", () => {
  it("refuses to decode ambiguous unindexed ids, like the CLI", () => {
    // Unindexed forms drop the homophone rank, so an id stream from a
    // group with several members cannot name one character.
    const spec = loadBundle(fixturePath("pinyin-noindex"));
    const ids = readFixtureLines("pinyin-noindex.ids")[0]
      .split(" ")
      .map((t) => Number(t));
    expect(() => decode(spec, ids)).toThrow(AmbiguousFormError);
  });
});
