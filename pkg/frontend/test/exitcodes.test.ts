/**
 * The CLI side of the contract this runtime consumes: exit code 0 on
 * success, 1 for runtime or data failures, 2 for usage errors, with
 * diagnostics on stderr.  These are the behaviors the runtime's own
 * error taxonomy mirrors, so they are pinned here from the outside.
 */

import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, describe, expect, it } from "vitest";

import { fixturePath, runCli, tempBundleCopy } from "./helpers.js";

const scratch = mkdtempSync(join(tmpdir(), "subchar-cli-"));
const cleanups: Array<() => void> = [() => rmSync(scratch, { recursive: true, force: true })];

afterAll(() => {
  for (const fn of cleanups) fn();
});

function tinyInput(name: string, lines: string[]): string {
  const path = join(scratch, name);
  writeFileSync(path, lines.join("\n") + "\n");
  return path;
}

describe("exit code 0", () => {
  it("tokenizes quietly with no stderr chatter", () => {
    const input = tinyInput("ok.txt", ["中文 abc"]);
    const out = join(scratch, "ok.ids");
    const res = runCli([
      "--quiet",
      "tokenize",
      "--bundle",
      fixturePath("pinyin"),
      "--input",
      input,
      "--out",
      out,
    ]);
    expect(res.status).toBe(0);
    expect(res.stderr).toBe("");
    expect(readFileSync(out, "utf8")).toMatch(/^[0-9 ]+\n$/);
  });

  it("echoes its resolved configuration unless silenced", () => {
    const input = tinyInput("echo.txt", ["中"]);
    const res = runCli([
      "tokenize",
      "--bundle",
      fixturePath("pinyin"),
      "--input",
      input,
      "--out",
      join(scratch, "echo.ids"),
    ]);
    expect(res.status).toBe(0);
    expect(res.stderr).toMatch(/^config: \{/);
  });
});

describe("exit code 1 (runtime and data failures)", () => {
  it("reports a missing bundle", () => {
    const res = runCli([
      "--quiet",
      "tokenize",
      "--bundle",
      join(scratch, "no-such-bundle"),
      "--input",
      tinyInput("x.txt", ["x"]),
      "--out",
      join(scratch, "x.ids"),
    ]);
    expect(res.status).toBe(1);
    expect(res.stderr).toMatch(/error: not a bundle/);
  });

  it("reports a fingerprint mismatch on a tampered bundle", () => {
    const { dir, cleanup } = tempBundleCopy("pinyin");
    cleanups.push(cleanup);
    const mapping = join(dir, "mapping.tsv");
    writeFileSync(mapping, readFileSync(mapping, "utf8") + "% tampered\n");
    const res = runCli([
      "--quiet",
      "tokenize",
      "--bundle",
      dir,
      "--input",
      tinyInput("y.txt", ["y"]),
      "--out",
      join(scratch, "y.ids"),
    ]);
    expect(res.status).toBe(1);
    expect(res.stderr).toMatch(/fingerprint mismatch/);
  });

  it("reports ambiguity when decoding unindexed ids", () => {
    const firstIds = readFileSync(fixturePath("pinyin-noindex.ids"), "utf8").split("\n")[0];
    const res = runCli([
      "--quiet",
      "tokenize",
      "--decode",
      "--bundle",
      fixturePath("pinyin-noindex"),
      "--input",
      tinyInput("amb.ids", [firstIds]),
      "--out",
      join(scratch, "amb.txt"),
    ]);
    expect(res.status).toBe(1);
    expect(res.stderr).toMatch(/is ambiguous/);
  });
});

describe("exit code 2 (usage errors)", () => {
  it("rejects noise on a non-pinyin bundle", () => {
    const res = runCli([
      "--quiet",
      "noise",
      "--bundle",
      fixturePath("wubi"),
      "--input",
      tinyInput("n.txt", ["中"]),
      "--ratios",
      "10",
    ]);
    expect(res.status).toBe(2);
    expect(res.stderr).toMatch(/needs a pinyin bundle/);
  });

  it("rejects ratios outside [0, 100]", () => {
    const res = runCli([
      "--quiet",
      "noise",
      "--bundle",
      fixturePath("pinyin"),
      "--input",
      tinyInput("r.txt", ["中"]),
      "--ratios",
      "150",
    ]);
    expect(res.status).toBe(2);
    expect(res.stderr).toMatch(/ratio must lie in \[0, 100\]/);
  });

  it("rejects a worker cap below one", () => {
    const res = runCli([
      "--threads",
      "0",
      "tokenize",
      "--bundle",
      fixturePath("pinyin"),
      "--input",
      tinyInput("t.txt", ["x"]),
      "--out",
      join(scratch, "t.ids"),
    ]);
    expect(res.status).toBe(2);
  });

  it("rejects conflicting render modes", () => {
    const res = runCli([
      "--quiet",
      "tokenize",
      "--ids",
      "--pieces",
      "--bundle",
      fixturePath("pinyin"),
      "--input",
      tinyInput("m.txt", ["x"]),
      "--out",
      join(scratch, "m.ids"),
    ]);
    expect(res.status).toBe(2);
  });
});
