/**
 * Trained vocabulary files and how to apply them.
 *
 * Segmentation must reproduce the trainer's runtime exactly: unigram
 * Viterbi resolves score ties toward the longer final piece and routes
 * unknown symbols over a pseudo-arc scored below every real piece; BPE
 * replays merges lowest rank first, feeding newly created adjacencies
 * back into the queue with the rank that created them.  Scores are
 * IEEE doubles on both sides, so identical addition order gives
 * identical winners.
 */

import { VocabFileError } from "./errors.js";
import { cpCompare, toCodePoints } from "./text.js";

export const SPECIALS = ["[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"] as const;
export const PAD_ID = 0;
export const UNK_ID = 1;
export const CLS_ID = 2;
export const SEP_ID = 3;
export const MASK_ID = 4;

// Reserved namespace: specials plus [unusedN] fillers.
const RESERVED_RE = /^\[(?:PAD|UNK|CLS|SEP|MASK|unused\d+)\]$/;

export function isReservedPiece(piece: string): boolean {
  return RESERVED_RE.test(piece);
}

export function escapePiece(piece: string): string {
  return piece.replace(/\\/g, "\\\\").replace(/\t/g, "\\t").replace(/\n/g, "\\n");
}

export function unescapePiece(text: string): string {
  const out: string[] = [];
  let i = 0;
  const n = text.length;
  while (i < n) {
    const c = text[i];
    if (c === "\\" && i + 1 < n) {
      const nc = text[i + 1];
      if (nc === "t") {
        out.push("\t");
        i += 2;
        continue;
      }
      if (nc === "n") {
        out.push("\n");
        i += 2;
        continue;
      }
      if (nc === "\\") {
        out.push("\\");
        i += 2;
        continue;
      }
    }
    out.push(c);
    i += 1;
  }
  return out.join("");
}

interface TrieNode {
  children: Map<string, TrieNode>;
  score: number | null;
}

function buildTrie(scores: Map<string, number>): TrieNode {
  const root: TrieNode = { children: new Map(), score: null };
  for (const [piece, score] of scores) {
    let node = root;
    for (const sym of piece) {
      let next = node.children.get(sym);
      if (next === undefined) {
        next = { children: new Map(), score: null };
        node.children.set(sym, next);
      }
      node = next;
    }
    node.score = score;
  }
  return root;
}

type HeapEntry = [rank: number, pos: number, left: string, right: string];

function entryLess(a: HeapEntry, b: HeapEntry): boolean {
  if (a[0] !== b[0]) return a[0] < b[0];
  if (a[1] !== b[1]) return a[1] < b[1];
  const l = cpCompare(a[2], b[2]);
  if (l !== 0) return l < 0;
  return cpCompare(a[3], b[3]) < 0;
}

function heapPush(heap: HeapEntry[], entry: HeapEntry): void {
  heap.push(entry);
  let i = heap.length - 1;
  while (i > 0) {
    const parent = (i - 1) >> 1;
    if (!entryLess(heap[i], heap[parent])) break;
    [heap[i], heap[parent]] = [heap[parent], heap[i]];
    i = parent;
  }
}

function heapPop(heap: HeapEntry[]): HeapEntry {
  const top = heap[0];
  const last = heap.pop()!;
  if (heap.length > 0) {
    heap[0] = last;
    let i = 0;
    for (;;) {
      const left = 2 * i + 1;
      const right = left + 1;
      let smallest = i;
      if (left < heap.length && entryLess(heap[left], heap[smallest])) smallest = left;
      if (right < heap.length && entryLess(heap[right], heap[smallest])) smallest = right;
      if (smallest === i) break;
      [heap[i], heap[smallest]] = [heap[smallest], heap[i]];
      i = smallest;
    }
  }
  return top;
}

/** First index in sorted ranks holding a value greater than x. */
function bisectRight(ranks: readonly number[], x: number): number {
  let lo = 0;
  let hi = ranks.length;
  while (lo < hi) {
    const mid = (lo + hi) >> 1;
    if (x < ranks[mid]) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

export type Algorithm = "unigram" | "bpe";

export class SubwordModel {
  readonly algorithm: Algorithm;
  readonly pieces: ReadonlyArray<readonly [string, number]>;
  readonly merges: ReadonlyArray<readonly [string, string]>;
  readonly pieceIds: Map<string, number>;
  private readonly idPieces: string[];
  private readonly scores: Map<string, number>;
  private readonly maxLen: number;
  private readonly unkScore: number;
  private trie: TrieNode | null = null;
  // Replay needs every rank of a pair: a pair can merge again when
  // later merges recreate its adjacency.
  private readonly pairRanks: Map<string, Map<string, number[]>>;

  constructor(
    algorithm: Algorithm,
    pieces: ReadonlyArray<readonly [string, number]>,
    merges: ReadonlyArray<readonly [string, string]> = [],
  ) {
    this.algorithm = algorithm;
    this.pieces = pieces;
    this.merges = merges;
    this.pieceIds = new Map(SPECIALS.map((s, i) => [s, i]));
    for (let k = 0; k < pieces.length; k++) {
      const [p] = pieces[k];
      if (this.pieceIds.has(p)) {
        throw new Error(`duplicate piece ${JSON.stringify(p)}`);
      }
      this.pieceIds.set(p, SPECIALS.length + k);
    }
    this.idPieces = [...SPECIALS, ...pieces.map(([p]) => p)];
    this.scores = new Map();
    for (const [p, s] of pieces) {
      // Fillers never segment; a unigram score of exactly 0.0 marks a
      // direct-emission piece (a lexicon word), likewise excluded.
      if (!RESERVED_RE.test(p) && !(algorithm === "unigram" && s === 0.0)) {
        this.scores.set(p, s);
      }
    }
    let maxLen = 1;
    for (const p of this.scores.keys()) {
      maxLen = Math.max(maxLen, toCodePoints(p).length);
    }
    this.maxLen = maxLen;
    let minScore = 0.0;
    let first = true;
    for (const s of this.scores.values()) {
      minScore = first ? s : Math.min(minScore, s);
      first = false;
    }
    this.unkScore = minScore - 10.0;
    this.pairRanks = new Map();
    merges.forEach(([left, right], rank) => {
      let byRight = this.pairRanks.get(left);
      if (byRight === undefined) {
        byRight = new Map();
        this.pairRanks.set(left, byRight);
      }
      let ranks = byRight.get(right);
      if (ranks === undefined) {
        ranks = [];
        byRight.set(right, ranks);
      }
      ranks.push(rank);
    });
  }

  get vocabSize(): number {
    return SPECIALS.length + this.pieces.length;
  }

  pieceToId(piece: string): number {
    return this.pieceIds.get(piece) ?? UNK_ID;
  }

  idToPiece(idx: number): string {
    if (!Number.isInteger(idx) || idx < 0 || idx >= this.vocabSize) {
      throw new RangeError(`id ${idx} out of range`);
    }
    return this.idPieces[idx];
  }

  segment(line: string): string[] {
    if (line.includes("\n")) {
      throw new RangeError("lines are segmented one at a time");
    }
    return this.segmentSymbols(toCodePoints(line));
  }

  /** Segment a line given as an array of single code point strings. */
  segmentSymbols(symbols: readonly string[]): string[] {
    if (symbols.length === 0) return [];
    if (this.algorithm === "unigram") return this.segmentUnigram(symbols);
    return this.segmentBpe(symbols);
  }

  private root(): TrieNode {
    if (this.trie === null) this.trie = buildTrie(this.scores);
    return this.trie;
  }

  private segmentUnigram(line: readonly string[]): string[] {
    const root = this.root();
    const n = line.length;
    const byEnd: Array<Array<[number, number]>> = Array.from({ length: n + 1 }, () => []);
    for (let i = 0; i < n; i++) {
      let node: TrieNode | undefined = root;
      const hi = Math.min(n, i + this.maxLen);
      for (let k = i; k < hi; k++) {
        node = node.children.get(line[k]);
        if (node === undefined) break;
        if (node.score !== null) byEnd[k + 1].push([i, node.score]);
      }
    }
    // Unknown symbols ride a pseudo-arc scored below every real piece,
    // which keeps the lattice connected off-distribution.
    const scores = this.scores;
    const unk = this.unkScore;
    const best = new Array<number>(n + 1).fill(-Infinity);
    const blen = new Array<number>(n + 1).fill(0);
    const back = new Array<number>(n + 1).fill(0);
    best[0] = 0.0;
    for (let j = 1; j <= n; j++) {
      let bs = -Infinity;
      let bl = 0;
      let bi = j - 1;
      for (const [i, s] of byEnd[j]) {
        const t = best[i] + s;
        const ln = j - i;
        if (t > bs || (t === bs && ln > bl)) {
          bs = t;
          bl = ln;
          bi = i;
        }
      }
      if (!scores.has(line[j - 1])) {
        const t = best[j - 1] + unk;
        if (t > bs || (t === bs && 1 > bl)) {
          bs = t;
          bl = 1;
          bi = j - 1;
        }
      }
      best[j] = bs;
      blen[j] = bl;
      back[j] = bi;
    }
    const out: string[] = [];
    let j = n;
    while (j > 0) {
      const i = back[j];
      out.push(line.slice(i, j).join(""));
      j = i;
    }
    out.reverse();
    return out;
  }

  private segmentBpe(line: readonly string[]): string[] {
    const toks = line.slice();
    const n = toks.length;
    if (n < 2 || this.pairRanks.size === 0) return toks;
    const nxt: number[] = [];
    const prv: number[] = [];
    for (let i = 0; i < n; i++) {
      nxt.push(i + 1 < n ? i + 1 : -1);
      prv.push(i - 1);
    }
    const alive = new Array<boolean>(n).fill(true);
    const heap: HeapEntry[] = [];

    const push = (i: number, createdAt: number): void => {
      const j = nxt[i];
      if (j < 0) return;
      const ranks = this.pairRanks.get(toks[i])?.get(toks[j]);
      if (ranks === undefined) return;
      // The adjacency is consumed by the pair's first merge after the
      // merge that created it.
      const k = bisectRight(ranks, createdAt);
      if (k < ranks.length) {
        heapPush(heap, [ranks[k], i, toks[i], toks[j]]);
      }
    };

    for (let i = 0; i < n - 1; i++) push(i, -1);
    while (heap.length > 0) {
      const [rank, i, left, right] = heapPop(heap);
      if (!alive[i] || toks[i] !== left) continue;
      const j = nxt[i];
      if (j < 0 || toks[j] !== right) continue;
      toks[i] = left + right;
      alive[j] = false;
      const q = nxt[j];
      nxt[i] = q;
      if (q >= 0) prv[q] = i;
      const p = prv[i];
      if (p >= 0) push(p, rank);
      push(i, rank);
    }
    const out: string[] = [];
    for (let i = 0; i < n; i++) {
      if (alive[i]) out.push(toks[i]);
    }
    return out;
  }
}

export type SchemeHeader = [kind: string, useIndex: boolean, fingerprint: string];

function parseScore(text: string, context: string): number {
  const t = text.trim();
  if (t === "") throw new VocabFileError(`${context}: bad score`);
  if (/^[+-]?nan$/i.test(t)) return NaN;
  const m = /^([+-]?)inf(?:inity)?$/i.exec(t);
  if (m !== null) return m[1] === "-" ? -Infinity : Infinity;
  const value = Number(t);
  if (Number.isNaN(value)) throw new VocabFileError(`${context}: bad score`);
  return value;
}

/**
 * Parse a vocabulary file.  Line order defines token ids: the five
 * specials come first, then one piece per line.  A %%scheme header
 * pins the encoding the vocabulary was trained under, and a %%merges
 * sentinel introduces BPE merge rules.
 */
export function loadVocab(text: string, label: string): { model: SubwordModel; header: SchemeHeader | null } {
  const lines = text.split("\n");
  if (lines.length > 0 && lines[lines.length - 1] === "") lines.pop();
  let header: SchemeHeader | null = null;
  let pos = 0;
  if (lines.length > 0 && lines[pos].startsWith("%%scheme\t")) {
    const parts = lines[pos].split("\t");
    if (parts.length !== 4 || (parts[2] !== "0" && parts[2] !== "1")) {
      throw new VocabFileError(`${label}: bad scheme header`);
    }
    header = [parts[1], parts[2] === "1", parts[3]];
    pos += 1;
  }
  const expected = SPECIALS.map((s) => `${s}\t0.0`);
  const got = lines.slice(pos, pos + SPECIALS.length);
  if (got.length !== expected.length || got.some((line, i) => line !== expected[i])) {
    throw new VocabFileError(`${label}: special tokens missing or reordered`);
  }
  pos += SPECIALS.length;
  const pieces: Array<[string, number]> = [];
  const merges: Array<[string, string]> = [];
  let inMerges = false;
  for (let k = pos; k < lines.length; k++) {
    const line = lines[k];
    const lineno = k + 1;
    if (line === "%%merges") {
      if (inMerges) throw new VocabFileError(`${label}:${lineno}: repeated merges sentinel`);
      inMerges = true;
      continue;
    }
    const cols = line.split("\t");
    if (cols.length !== 2) {
      throw new VocabFileError(`${label}:${lineno}: expected 2 columns`);
    }
    if (inMerges) {
      merges.push([unescapePiece(cols[0]), unescapePiece(cols[1])]);
    } else {
      pieces.push([unescapePiece(cols[0]), parseScore(cols[1], `${label}:${lineno}`)]);
    }
  }
  const algorithm: Algorithm = inMerges ? "bpe" : "unigram";
  let model: SubwordModel;
  try {
    model = new SubwordModel(algorithm, pieces, merges);
  } catch (e) {
    throw new VocabFileError(`${label}: ${(e as Error).message}`);
  }
  return { model, header };
}
