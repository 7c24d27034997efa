/**
 * Per-character encodings: schemes, mapping tables, form round trips.
 *
 * Semantics follow the reference implementation exactly.  A mapping
 * table assigns covered characters a base encoding; characters sharing
 * a base form a homophone (or collision) group, ranked 1-based in code
 * point order when index digits are on.  Serialized forms end with "#"
 * so a stream cuts back into characters without a dictionary, and CJK
 * characters outside the table fall back to UTF-8 byte forms.
 */

import { createHash } from "node:crypto";

import { AmbiguousFormError, MappingFileError, UnknownFormError } from "./errors.js";
import { cpCompare, splitLines, toCodePoints } from "./text.js";

export const TERMINATOR = "#";
// Private use marker escaping raw characters that would collide with a
// serialization alphabet. Escaped itself when it occurs in input.
export const ESCAPE = "";

export const PRONUNCIATION_KINDS = ["pinyin", "zhuyin"] as const;
export const GLYPH_KINDS = ["stroke", "wubi", "zhengma", "cangjie"] as const;
export const DIGIT_KINDS = ["byte", "random_index"] as const;
export const IDENTITY_KINDS = ["raw", "char"] as const;
export const SCHEME_KINDS = [
  ...PRONUNCIATION_KINDS,
  ...GLYPH_KINDS,
  ...DIGIT_KINDS,
  ...IDENTITY_KINDS,
] as const;

export type SchemeKind = (typeof SCHEME_KINDS)[number];

// Same ranges BERT uses for its Chinese character heuristic.
const CJK_RANGES: ReadonlyArray<readonly [number, number]> = [
  [0x4e00, 0x9fff],
  [0x3400, 0x4dbf],
  [0x20000, 0x2a6df],
  [0x2a700, 0x2b73f],
  [0x2b740, 0x2b81f],
  [0x2b820, 0x2ceaf],
  [0xf900, 0xfaff],
  [0x2f800, 0x2fa1f],
];

const BASE_RE: Partial<Record<string, RegExp>> = {
  pinyin: /^[a-z]+[1-5]$/,
  zhuyin: /^[ㄅ-ㄯ]+[1-5]$/,
  stroke: /^[a-z]+$/,
  wubi: /^[a-z]+$/,
  zhengma: /^[a-z]+$/,
  cangjie: /^[a-z]+$/,
  random_index: /^[0-9]{5}$/,
};

export function isCjk(ch: string): boolean {
  const cp = ch.codePointAt(0);
  if (cp === undefined) return false;
  return CJK_RANGES.some(([lo, hi]) => lo <= cp && cp <= hi);
}

export class EncodingScheme {
  readonly kind: SchemeKind;
  readonly useIndex: boolean;

  constructor(kind: string, useIndex = true) {
    if (!(SCHEME_KINDS as readonly string[]).includes(kind)) {
      throw new RangeError(`unknown scheme kind ${JSON.stringify(kind)}`);
    }
    this.kind = kind as SchemeKind;
    // Byte and random_index forms are unique without help and identity
    // kinds have no forms, so the flag is normalized off there.
    const digits = (DIGIT_KINDS as readonly string[]).includes(kind);
    const identity = (IDENTITY_KINDS as readonly string[]).includes(kind);
    this.useIndex = digits || identity ? false : useIndex;
  }

  get isPronunciation(): boolean {
    return (PRONUNCIATION_KINDS as readonly string[]).includes(this.kind);
  }

  get isIdentity(): boolean {
    return (IDENTITY_KINDS as readonly string[]).includes(this.kind);
  }

  get label(): string {
    return this.kind + (this.useIndex ? "" : "-noindex");
  }
}

/** One character's serialized encoding, split into its parts. */
export interface EncodedForm {
  body: string;
  tone: number | null;
  index: number | null;
  /** Passthrough forms (kept verbatim) are not terminated. */
  terminated: boolean;
}

export function formText(form: EncodedForm): string {
  if (!form.terminated) return form.body;
  let out = form.body;
  if (form.tone !== null) out += String(form.tone);
  if (form.index !== null) out += String(form.index);
  return out + TERMINATOR;
}

function byteBody(ch: string): string {
  const data = new TextEncoder().encode(ch);
  return Array.from(data, (b) => String(b)).join("_");
}

function byteForm(ch: string): EncodedForm {
  return { body: byteBody(ch), tone: null, index: null, terminated: true };
}

/** Split a file base into body and tone, validating against the kind. */
function splitBase(kind: SchemeKind, base: string): [string, number | null] {
  const pat = BASE_RE[kind];
  if (pat === undefined || !pat.test(base)) {
    throw new MappingFileError(`invalid ${kind} base ${JSON.stringify(base)}`);
  }
  if ((PRONUNCIATION_KINDS as readonly string[]).includes(kind)) {
    return [base.slice(0, -1), Number(base.slice(-1))];
  }
  return [base, null];
}

export class EncodingTable {
  readonly scheme: EncodingScheme;
  readonly bases: Map<string, string>;
  readonly fingerprint: string;
  readonly homophoneGroups: Map<string, string[]>;
  readonly alphabet: Set<string>;
  private readonly forms: Map<string, EncodedForm>;
  private readonly texts: Map<string, string>;
  private readonly reverse: Map<string, string[]>;

  constructor(scheme: EncodingScheme, bases: Map<string, string>, fingerprint: string) {
    this.scheme = scheme;
    this.bases = bases;
    this.fingerprint = fingerprint;
    this.homophoneGroups = new Map();
    this.forms = new Map();
    this.texts = new Map();
    this.reverse = new Map();

    const groups = new Map<string, string[]>();
    for (const [ch, base] of bases) {
      let members = groups.get(base);
      if (members === undefined) {
        members = [];
        groups.set(base, members);
      }
      members.push(ch);
    }
    // Rank inside a group is 1-based code point order, so indices do
    // not depend on file line order.
    for (const [base, members] of groups) {
      members.sort(cpCompare);
      this.homophoneGroups.set(base, members);
    }
    for (const [base, members] of this.homophoneGroups) {
      const [body, tone] = splitBase(scheme.kind, base);
      members.forEach((ch, at) => {
        const form: EncodedForm = {
          body,
          tone,
          index: scheme.useIndex ? at + 1 : null,
          terminated: true,
        };
        this.forms.set(ch, form);
        const text = formText(form);
        this.texts.set(ch, text);
        let owners = this.reverse.get(text);
        if (owners === undefined) {
          owners = [];
          this.reverse.set(text, owners);
        }
        owners.push(ch);
      });
    }
    const alphabet = new Set("0123456789_" + TERMINATOR);
    for (const text of this.texts.values()) {
      for (const ch of text) alphabet.add(ch);
    }
    this.alphabet = scheme.isIdentity ? new Set() : alphabet;
  }

  has(ch: string): boolean {
    return this.bases.has(ch);
  }

  get size(): number {
    return this.bases.size;
  }

  chars(): string[] {
    return Array.from(this.bases.keys()).sort(cpCompare);
  }

  /** Serialized form for a covered character, else undefined. */
  encodedText(ch: string): string | undefined {
    return this.texts.get(ch);
  }

  formOf(ch: string): EncodedForm | undefined {
    return this.forms.get(ch);
  }

  reverseOf(text: string): string[] | undefined {
    return this.reverse.get(text);
  }
}

export function fingerprintBytes(data: Uint8Array): string {
  return createHash("sha256").update(data).digest("hex");
}

/**
 * Parse mapping file bytes for a file-backed scheme.
 *
 * Throws MappingFileError on duplicate characters, non-CJK characters,
 * or bases that do not fit the scheme's shape.  random_index codes must
 * be unique.
 */
export function parseMapping(raw: Uint8Array, scheme: EncodingScheme, label: string): EncodingTable {
  if (scheme.kind === "byte" || scheme.isIdentity) {
    throw new RangeError(`scheme ${JSON.stringify(scheme.kind)} takes no mapping file`);
  }
  const text = new TextDecoder("utf-8", { fatal: true }).decode(raw);
  const bases = new Map<string, string>();
  const lines = splitLines(text);
  for (let k = 0; k < lines.length; k++) {
    const line = lines[k];
    const lineno = k + 1;
    if (line === "" || line.startsWith("%")) continue;
    const parts = line.split("\t");
    if (parts.length !== 2) {
      throw new MappingFileError(`${label}:${lineno}: expected 2 columns, got ${parts.length}`);
    }
    const [ch, base] = parts;
    if (toCodePoints(ch).length !== 1 || !isCjk(ch)) {
      throw new MappingFileError(
        `${label}:${lineno}: ${JSON.stringify(ch)} is not a single CJK character`,
      );
    }
    if (bases.has(ch)) {
      throw new MappingFileError(`${label}:${lineno}: duplicate character ${JSON.stringify(ch)}`);
    }
    splitBase(scheme.kind, base);
    bases.set(ch, base);
  }
  if (scheme.kind === "random_index" && new Set(bases.values()).size !== bases.size) {
    throw new MappingFileError(`${label}: random index codes are not unique`);
  }
  return new EncodingTable(scheme, bases, fingerprintBytes(raw));
}

/** Table for a scheme that needs no mapping file (byte, raw, char). */
export function builtinTable(scheme: EncodingScheme): EncodingTable {
  if (scheme.kind !== "byte" && !scheme.isIdentity) {
    throw new RangeError(`scheme ${JSON.stringify(scheme.kind)} needs a mapping file`);
  }
  return new EncodingTable(scheme, new Map(), `builtin:${scheme.kind}`);
}

/**
 * Encode one character.  Covered characters get their table form, CJK
 * characters missing from the table fall back to the byte form, and
 * everything else passes through verbatim (not terminated).
 */
export function encodeChar(table: EncodingTable, ch: string): EncodedForm {
  if (toCodePoints(ch).length !== 1) {
    throw new RangeError("encodeChar takes a single character");
  }
  const form = table.formOf(ch);
  if (form !== undefined) return form;
  if (table.scheme.isIdentity) {
    return { body: ch, tone: null, index: null, terminated: false };
  }
  if (isCjk(ch)) return byteForm(ch);
  return { body: ch, tone: null, index: null, terminated: false };
}

function parseByteBody(body: string): string | null {
  const values: number[] = [];
  for (const part of body.split("_")) {
    if (!/^[0-9]+$/.test(part)) return null;
    const v = Number(part);
    if (v > 255) return null;
    values.push(v);
  }
  let ch: string;
  try {
    ch = new TextDecoder("utf-8", { fatal: true }).decode(Uint8Array.from(values));
  } catch {
    return null;
  }
  if (toCodePoints(ch).length === 1 && isCjk(ch)) return ch;
  return null;
}

/**
 * Map a serialized form back to its character.
 *
 * Unterminated forms decode to themselves.  Byte-fallback forms decode
 * under every scheme.  Throws UnknownFormError for forms outside the
 * table and AmbiguousFormError when index digits are off and several
 * characters share the base.
 */
export function decodeForm(table: EncodingTable, form: EncodedForm | string): string {
  let text: string;
  if (typeof form === "string") {
    text = form;
    if (!text.endsWith(TERMINATOR)) return text;
  } else {
    if (!form.terminated) return form.body;
    text = formText(form);
  }
  if (table.scheme.isIdentity) return text;
  const body = text.slice(0, -TERMINATOR.length);
  if (body.includes("_") || table.scheme.kind === "byte") {
    const ch = parseByteBody(body);
    if (ch === null) throw new UnknownFormError(text);
    return ch;
  }
  const matches = table.reverseOf(text);
  if (matches === undefined) throw new UnknownFormError(text);
  if (matches.length > 1) throw new AmbiguousFormError(text, matches);
  return matches[0];
}

/**
 * Other characters with the same base encoding, code point order.
 * Defined for pronunciation schemes; unmapped characters get [].
 */
export function homophonesOf(table: EncodingTable, ch: string): string[] {
  if (!table.scheme.isPronunciation) {
    throw new RangeError(`homophones are not defined for ${JSON.stringify(table.scheme.kind)}`);
  }
  const base = table.bases.get(ch);
  if (base === undefined) return [];
  return table.homophoneGroups.get(base)!.filter((c) => c !== ch);
}
