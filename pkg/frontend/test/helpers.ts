/** Shared fixture access and a runner for the reference CLI. */

import { spawnSync } from "node:child_process";
import { cpSync, mkdtempSync, readFileSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { fileURLToPath } from "node:url";

export const FIXTURES = fileURLToPath(new URL("./fixtures", import.meta.url));

export function fixturePath(...parts: string[]): string {
  return join(FIXTURES, ...parts);
}

export function readFixture(name: string): string {
  return readFileSync(fixturePath(name), "utf8");
}

/** Same line splitting the CLI applies to its inputs. */
export function readFixtureLines(name: string): string[] {
  const lines = readFixture(name).split(/\r\n|\r|\n/);
  if (lines.length > 0 && lines[lines.length - 1] === "") lines.pop();
  return lines;
}

/** The CLI's file shape: newline-terminated unless there are no lines. */
export function renderLines(lines: readonly string[]): string {
  return lines.length > 0 ? lines.join("\n") + "\n" : "";
}

export interface CliResult {
  status: number | null;
  stdout: string;
  stderr: string;
}

export function runCli(args: readonly string[]): CliResult {
  const out = spawnSync("python3", ["-m", "subchar.cli", ...args], {
    encoding: "utf8",
    timeout: 120_000,
  });
  if (out.error) throw out.error;
  return { status: out.status, stdout: out.stdout, stderr: out.stderr };
}

/** Copy a fixture bundle into a fresh temp dir the test may mutate. */
export function tempBundleCopy(name: string): { dir: string; cleanup: () => void } {
  const dir = mkdtempSync(join(tmpdir(), "subchar-bundle-"));
  cpSync(fixturePath(name), dir, { recursive: true });
  return { dir, cleanup: () => rmSync(dir, { recursive: true, force: true }) };
}
