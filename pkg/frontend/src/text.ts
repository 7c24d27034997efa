/**
 * Code point utilities.
 *
 * The reference runtime indexes strings by code point, not UTF-16 unit,
 * so every offset this package reports or consumes counts code points.
 * Working on arrays of single-code-point strings keeps that arithmetic
 * honest even off the BMP.
 */

export function toCodePoints(text: string): string[] {
  return Array.from(text);
}

export function cpLength(text: string): number {
  let n = 0;
  for (const _ of text) n++;
  return n;
}

/** Lexicographic comparison by code point, matching Python's str order. */
export function cpCompare(a: string, b: string): number {
  const xa = toCodePoints(a);
  const xb = toCodePoints(b);
  const n = Math.min(xa.length, xb.length);
  for (let i = 0; i < n; i++) {
    const ca = xa[i].codePointAt(0)!;
    const cb = xb[i].codePointAt(0)!;
    if (ca !== cb) return ca < cb ? -1 : 1;
  }
  return xa.length - xb.length;
}

/** Split on \n, \r\n, and \r without a trailing empty line. */
export function splitLines(text: string): string[] {
  if (text === "") return [];
  const lines = text.split(/\r\n|\r|\n/);
  if (lines[lines.length - 1] === "") lines.pop();
  return lines;
}
