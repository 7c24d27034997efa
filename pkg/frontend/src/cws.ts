/**
 * Word lexicons and forward maximum matching.
 *
 * A lexicon reserves part of the vocabulary budget for whole words; the
 * tokenizer emits one id per matched word and routes everything else
 * through the per-character pipeline.
 */

import { LexiconFileError } from "./errors.js";
import { splitLines, toCodePoints } from "./text.js";

export const MIN_WORD_LEN = 2;

const SPECIALS_COUNT = 5;

export interface WordLexicon {
  /** Word to vocabulary id, iteration in admission order. */
  words: Map<string, number>;
  maxWordLen: number;
  sourceStats: Map<string, number>;
}

/**
 * Forward maximum matching over a fixed word list.  Single characters
 * are emitted for stretches no word covers, so the returned spans
 * always tile the input.
 */
export class MaxMatchSegmenter {
  private readonly words: Set<string>;
  private readonly maxLen: number;

  constructor(words: Iterable<string>) {
    this.words = new Set(words);
    let maxLen = 0;
    for (const w of this.words) {
      const len = toCodePoints(w).length;
      if (len < MIN_WORD_LEN) {
        throw new RangeError(`word shorter than ${MIN_WORD_LEN} chars: ${JSON.stringify(w)}`);
      }
      maxLen = Math.max(maxLen, len);
    }
    this.maxLen = maxLen;
  }

  /** Half-open spans over an array of single code point strings. */
  segment(chars: readonly string[]): Array<[number, number]> {
    const spans: Array<[number, number]> = [];
    let i = 0;
    const n = chars.length;
    while (i < n) {
      let hit = 0;
      for (let length = Math.min(this.maxLen, n - i); length >= MIN_WORD_LEN; length--) {
        if (this.words.has(chars.slice(i, i + length).join(""))) {
          hit = length;
          break;
        }
      }
      if (hit === 0) hit = 1;
      spans.push([i, i + hit]);
      i += hit;
    }
    return spans;
  }
}

/** Parse a lexicon file: one word TAB frequency line per word. */
export function loadLexicon(text: string, label: string): WordLexicon {
  const words = new Map<string, number>();
  const stats = new Map<string, number>();
  const lines = splitLines(text);
  for (let k = 0; k < lines.length; k++) {
    const lineno = k + 1;
    const parts = lines[k].split("\t");
    if (parts.length !== 2) {
      throw new LexiconFileError(`${label}:${lineno}: expected <word><TAB><frequency>`);
    }
    const [word, freq] = parts;
    if (!/^[0-9]+$/.test(freq)) {
      throw new LexiconFileError(`${label}:${lineno}: bad frequency ${JSON.stringify(freq)}`);
    }
    if (words.has(word)) {
      throw new LexiconFileError(`${label}:${lineno}: duplicate word ${JSON.stringify(word)}`);
    }
    if (toCodePoints(word).length < MIN_WORD_LEN) {
      throw new LexiconFileError(`${label}:${lineno}: word shorter than ${MIN_WORD_LEN} chars`);
    }
    words.set(word, SPECIALS_COUNT + words.size);
    stats.set(word, Number(freq));
  }
  let maxWordLen = 0;
  for (const w of words.keys()) {
    maxWordLen = Math.max(maxWordLen, toCodePoints(w).length);
  }
  return { words, maxWordLen, sourceStats: stats };
}
