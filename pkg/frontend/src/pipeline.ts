/**
 * Text to tokens and back.
 *
 * Normalization is NFC plus ASCII case folding.  Encoding serializes
 * each character to its form, escaping raw characters that collide
 * with the form alphabet; segmentation runs over the concatenated
 * stream and offsets map every piece back to the characters that
 * produced it.  Decoding walks the stream grammar: terminated forms
 * look up their character, escapes emit the next character verbatim,
 * and anything unterminated or unknown is wrapped in visible fragment
 * markers instead of being dropped.
 */

import {
  ESCAPE,
  EncodingScheme,
  EncodingTable,
  TERMINATOR,
  decodeForm,
  encodeChar,
  formText,
  isCjk,
} from "./charmap.js";
import { UnknownFormError } from "./errors.js";
import { MIN_WORD_LEN, MaxMatchSegmenter, WordLexicon } from "./cws.js";
import { SubwordModel, isReservedPiece } from "./subword.js";
import { toCodePoints } from "./text.js";

export const FRAG_OPEN = "⟨frag:";
export const FRAG_CLOSE = "⟩";

const ASCII_UPPER_RE = /[A-Z]/g;

/** NFC plus ASCII A-Z folded to a-z; everything else untouched. */
export function normalizeText(text: string): string {
  return text
    .normalize("NFC")
    .replace(ASCII_UPPER_RE, (c) => String.fromCharCode(c.charCodeAt(0) + 32));
}

interface EncodedStream {
  symbols: string[];
  /** src[j] is the character index that produced stream position j. */
  src: number[];
}

function encodeWithMap(table: EncodingTable, chars: readonly string[]): EncodedStream {
  const symbols: string[] = [];
  const src: number[] = [];
  const identity = table.scheme.isIdentity;
  const alphabet = table.alphabet;
  for (let i = 0; i < chars.length; i++) {
    const ch = chars[i];
    let chunk: string;
    if (identity) {
      chunk = ch;
    } else {
      const text = table.encodedText(ch);
      if (text !== undefined) {
        chunk = text;
      } else if (isCjk(ch)) {
        chunk = formText(encodeChar(table, ch));
      } else if (alphabet.has(ch) || ch === ESCAPE) {
        // A raw character that collides with the form alphabet would
        // corrupt the stream grammar.
        chunk = ESCAPE + ch;
      } else {
        chunk = ch;
      }
    }
    for (const sym of chunk) {
      symbols.push(sym);
      src.push(i);
    }
  }
  return { symbols, src };
}

/** Serialize a normalized string to its form stream. */
export function encodeText(table: EncodingTable, text: string): string {
  return encodeWithMap(table, toCodePoints(text)).symbols.join("");
}

/** Tokens with ids and their character provenance. */
export interface TokenizedOutput {
  tokens: string[];
  ids: number[];
  /** Half-open code point spans into the normalized input. */
  offsets: Array<[number, number]>;
  /** For each input character, every token index covering it. */
  charToTokens: number[][];
}

/** Everything tokenize and decode need, immutable and shareable. */
export class TokenizerSpec {
  readonly table: EncodingTable;
  readonly model: SubwordModel;
  readonly lexicon: WordLexicon | null;
  readonly maxLen: number | null;
  readonly normalization: string;
  /** Derived from the lexicon; null when there are no words to match. */
  readonly matcher: MaxMatchSegmenter | null;

  constructor(
    table: EncodingTable,
    model: SubwordModel,
    lexicon: WordLexicon | null = null,
    maxLen: number | null = null,
    normalization = "nfc",
  ) {
    if (normalization !== "nfc") {
      throw new RangeError(`unsupported normalization ${JSON.stringify(normalization)}`);
    }
    if (maxLen !== null && maxLen < 0) {
      throw new RangeError("maxLen must be non-negative");
    }
    this.table = table;
    this.model = model;
    this.lexicon = lexicon;
    this.maxLen = maxLen;
    this.normalization = normalization;
    this.matcher =
      lexicon !== null && lexicon.words.size > 0 ? new MaxMatchSegmenter(lexicon.words.keys()) : null;
  }

  get scheme(): EncodingScheme {
    return this.table.scheme;
  }
}

/**
 * Tokenize one line of text.
 *
 * Lexicon words (when present) each become a single token carrying the
 * word's id; all remaining stretches are encoded per character and
 * segmented by the subword model.  Truncation to maxLen never strands
 * part of a fragmented character.
 */
export function tokenize(spec: TokenizerSpec, text: string): TokenizedOutput {
  if (text.includes("\n")) {
    throw new RangeError("tokenize takes a single line");
  }
  const chars = toCodePoints(normalizeText(text));
  const { table, model } = spec;
  let tokens: string[] = [];
  let ids: number[] = [];
  let offsets: Array<[number, number]> = [];

  const emitRun = (start: number, run: readonly string[]): void => {
    const { symbols, src } = encodeWithMap(table, run);
    let pos = 0;
    for (const piece of model.segmentSymbols(symbols)) {
      const end = pos + toCodePoints(piece).length;
      tokens.push(piece);
      ids.push(model.pieceToId(piece));
      offsets.push([start + src[pos], start + src[end - 1] + 1]);
      pos = end;
    }
  };

  const matcher = spec.matcher;
  if (matcher === null) {
    if (chars.length > 0) emitRun(0, chars);
  } else {
    const words = spec.lexicon!.words;
    let anchor: number | null = null;
    for (const [s, e] of matcher.segment(chars)) {
      if (e - s >= MIN_WORD_LEN) {
        if (anchor !== null) {
          emitRun(anchor, chars.slice(anchor, s));
          anchor = null;
        }
        const word = chars.slice(s, e).join("");
        tokens.push(encodeText(table, word));
        ids.push(words.get(word)!);
        offsets.push([s, e]);
      } else if (anchor === null) {
        anchor = s;
      }
    }
    if (anchor !== null) {
      emitRun(anchor, chars.slice(anchor));
    }
  }

  if (spec.maxLen !== null && tokens.length > spec.maxLen) {
    let keep = spec.maxLen;
    // Back off while the next token would continue the character the
    // previous one is part of.
    while (keep > 0 && offsets[keep][0] < offsets[keep - 1][1]) {
      keep -= 1;
    }
    tokens = tokens.slice(0, keep);
    ids = ids.slice(0, keep);
    offsets = offsets.slice(0, keep);
  }

  const charToTokens: number[][] = Array.from({ length: chars.length }, () => []);
  offsets.forEach(([a, b], t) => {
    for (let p = a; p < b; p++) charToTokens[p].push(t);
  });
  return { tokens, ids, offsets, charToTokens };
}

/** Tokenize many lines, preserving order. */
export function tokenizeBatch(spec: TokenizerSpec, texts: Iterable<string>): TokenizedOutput[] {
  return Array.from(texts, (t) => tokenize(spec, t));
}

/**
 * Map tokens back to text.
 *
 * Accepts a TokenizedOutput (always lossless) or a bare id sequence.
 * The id path drops special and filler tokens and cannot restore
 * symbols that were mapped to [UNK].  Throws RangeError for ids
 * outside the vocabulary and AmbiguousFormError when an unindexed
 * form has several readings.  Unterminated or unknown fragments come
 * back wrapped in fragment markers so downstream tooling can keep
 * going.
 */
export function decode(spec: TokenizerSpec, encoded: TokenizedOutput | readonly number[]): string {
  let pieces: readonly string[];
  if (Array.isArray(encoded)) {
    const size = spec.model.vocabSize;
    const out: string[] = [];
    for (const i of encoded as readonly number[]) {
      if (!Number.isInteger(i) || i < 0 || i >= size) {
        throw new RangeError(`id ${i} out of range for vocabulary of ${size}`);
      }
      const piece = spec.model.idToPiece(i);
      if (isReservedPiece(piece)) continue;
      out.push(piece);
    }
    pieces = out;
  } else {
    pieces = (encoded as TokenizedOutput).tokens;
  }
  return decodeStream(spec.table, pieces.join(""));
}

function decodeStream(table: EncodingTable, stream: string): string {
  if (table.scheme.isIdentity) return stream;
  const alphabet = table.alphabet;
  const syms = toCodePoints(stream);
  const out: string[] = [];
  let i = 0;
  const n = syms.length;
  while (i < n) {
    const ch = syms[i];
    if (ch === ESCAPE) {
      if (i + 1 < n) {
        out.push(syms[i + 1]);
        i += 2;
      } else {
        out.push(`${FRAG_OPEN}${syms.slice(i).join("")}${FRAG_CLOSE}`);
        i = n;
      }
    } else if (alphabet.has(ch)) {
      let j = i;
      while (j < n && alphabet.has(syms[j]) && syms[j] !== TERMINATOR) {
        j += 1;
      }
      if (j < n && syms[j] === TERMINATOR) {
        const form = syms.slice(i, j + 1).join("");
        try {
          out.push(decodeForm(table, form));
        } catch (e) {
          if (e instanceof UnknownFormError) {
            out.push(`${FRAG_OPEN}${form}${FRAG_CLOSE}`);
          } else {
            throw e;
          }
        }
        i = j + 1;
      } else {
        out.push(`${FRAG_OPEN}${syms.slice(i, j).join("")}${FRAG_CLOSE}`);
        i = j;
      }
    } else {
      out.push(ch);
      i += 1;
    }
  }
  return out.join("");
}
