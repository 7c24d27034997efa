/**
 * Homophone noise injection, byte-compatible with the reference CLI.
 *
 * Sampling is nested: one shuffled position order and one substitute
 * draw per position are fixed by the seed, and a ratio takes a prefix.
 * Raising the ratio therefore only ever adds replacements.  The
 * generator is the exact CPython port, so a given seed produces the
 * same noisy text here and there.
 */

import { EncodingTable, homophonesOf, isCjk } from "./charmap.js";
import { PyRandom } from "./pyrandom.js";
import { toCodePoints } from "./text.js";

export interface NoiseConfig {
  /** Fraction of CJK positions to sample, in [0, 1]. */
  ratio: number;
  seed: number | bigint;
  table: EncodingTable;
}

/** What one injection did, every list sorted by position. */
export interface NoiseReport {
  sampledPositions: number[];
  replaced: Array<[number, string, string]>;
  skippedNoHomophone: number[];
}

export interface NoisyCorpus {
  ratio: number;
  lines: string[];
  reports: NoiseReport[];
}

function checkRatio(ratio: number): void {
  if (!(ratio >= 0.0 && ratio <= 1.0)) {
    throw new RangeError(`ratio must lie in [0, 1], got ${ratio}`);
  }
}

function checkConfig(cfg: NoiseConfig): void {
  checkRatio(cfg.ratio);
  if (!cfg.table.scheme.isPronunciation) {
    throw new RangeError(
      `homophones need a pronunciation table, got ${JSON.stringify(cfg.table.scheme.kind)}`,
    );
  }
}

interface Plan {
  chars: string[];
  perm: number[];
  subs: Array<string | null>;
}

// A full permutation plus one draw per position: any ratio is a prefix
// of this, so larger ratios strictly extend smaller ones.
function plan(seed: number | bigint, text: string, table: EncodingTable): Plan {
  const chars = toCodePoints(text);
  const positions: number[] = [];
  chars.forEach((ch, i) => {
    if (isCjk(ch)) positions.push(i);
  });
  const rng = new PyRandom(seed);
  const perm = rng.sample(positions, positions.length);
  const subs: Array<string | null> = [];
  for (const pos of perm) {
    const group = homophonesOf(table, chars[pos]);
    subs.push(group.length > 0 ? rng.choice(group) : null);
  }
  return { chars, perm, subs };
}

function apply(p: Plan, ratio: number): { line: string; report: NoiseReport } {
  const take = Math.floor(ratio * p.perm.length + 0.5);
  const out = p.chars.slice();
  const replaced: Array<[number, string, string]> = [];
  const skipped: number[] = [];
  for (let k = 0; k < take; k++) {
    const pos = p.perm[k];
    const sub = p.subs[k];
    if (sub === null) {
      skipped.push(pos);
    } else {
      out[pos] = sub;
      replaced.push([pos, p.chars[pos], sub]);
    }
  }
  const report: NoiseReport = {
    sampledPositions: p.perm.slice(0, take).sort((a, b) => a - b),
    replaced: replaced.sort((a, b) => a[0] - b[0]),
    skippedNoHomophone: skipped.sort((a, b) => a - b),
  };
  return { line: out.join(""), report };
}

/**
 * Replace round(ratio * nCjk) sampled characters with homophones.
 *
 * Sampling is uniform without replacement over the CJK positions; each
 * sampled character is replaced by a uniform draw from its homophone
 * group, or recorded as skipped when the group is empty.
 * Deterministic for a fixed seed.
 */
export function injectNoise(cfg: NoiseConfig, text: string): { line: string; report: NoiseReport } {
  checkConfig(cfg);
  return apply(plan(cfg.seed, text, cfg.table), cfg.ratio);
}

/**
 * Inject every ratio into the same corpus, one NoisyCorpus per ratio.
 *
 * Line i uses seed (cfg.seed xor i), so results do not depend on
 * processing order, and all ratios share each line's sampling plan.
 */
export function sweepNoise(
  cfg: NoiseConfig,
  lines: readonly string[],
  ratios: readonly number[],
): NoisyCorpus[] {
  checkConfig(cfg);
  const seed = typeof cfg.seed === "bigint" ? cfg.seed : BigInt(Math.trunc(cfg.seed));
  const plans = lines.map((line, i) => plan(seed ^ BigInt(i), line, cfg.table));
  const out: NoisyCorpus[] = [];
  for (const ratio of ratios) {
    checkRatio(ratio);
    const noisy: string[] = [];
    const reports: NoiseReport[] = [];
    for (const p of plans) {
      const { line, report } = apply(p, ratio);
      noisy.push(line);
      reports.push(report);
    }
    out.push({ ratio, lines: noisy, reports });
  }
  return out;
}
