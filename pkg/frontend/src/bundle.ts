/**
 * Bundle loading with full cross-reference verification.
 *
 * A bundle directory is the exchange format between runtimes: manifest,
 * vocabulary, optional mapping and lexicon files.  Loading checks the
 * same invariants the reference loader does, in the same order: the
 * mapping fingerprint must match both the manifest and the vocabulary
 * header, the vocabulary must declare the manifest's scheme, and every
 * lexicon word must resolve to a vocabulary piece.
 */

import { readFileSync, statSync } from "node:fs";
import { join } from "node:path";

import {
  EncodingScheme,
  EncodingTable,
  builtinTable,
  parseMapping,
} from "./charmap.js";
import { WordLexicon, loadLexicon } from "./cws.js";
import { BundleError } from "./errors.js";
import { TokenizerSpec, encodeText } from "./pipeline.js";
import { loadVocab } from "./subword.js";

export const BUNDLE_FORMAT = "subchar-bundle-v1";
export const MANIFEST_FILE = "manifest.json";
export const VOCAB_FILE = "vocab.tsv";
export const MAPPING_FILE = "mapping.tsv";
export const LEXICON_FILE = "lexicon.tsv";

export interface Manifest {
  format: string;
  scheme: string;
  use_index: boolean;
  vocab_size: number;
  algorithm: string;
  normalization?: string;
  max_len?: number | null;
  mapping_fingerprint: string;
  corpus_fingerprint?: string;
  lexicon_size?: number;
  [key: string]: unknown;
}

function isFile(path: string): boolean {
  try {
    return statSync(path).isFile();
  } catch {
    return false;
  }
}

function readUtf8(path: string): string {
  return new TextDecoder("utf-8", { fatal: true }).decode(readFileSync(path));
}

export function loadManifest(dirpath: string): Manifest {
  const path = join(dirpath, MANIFEST_FILE);
  if (!isFile(path)) {
    throw new BundleError(`not a bundle: ${dirpath} has no ${MANIFEST_FILE}`);
  }
  let manifest: unknown;
  try {
    manifest = JSON.parse(readUtf8(path));
  } catch (e) {
    throw new BundleError(`${path}: invalid JSON: ${(e as Error).message}`);
  }
  const format = (manifest as Manifest | null)?.format;
  if (format !== BUNDLE_FORMAT) {
    throw new BundleError(`${path}: unknown bundle format ${JSON.stringify(format)}`);
  }
  return manifest as Manifest;
}

/** Load a bundle directory, verifying every cross-reference. */
export function loadBundle(dirpath: string): TokenizerSpec {
  const manifest = loadManifest(dirpath);
  for (const key of ["scheme", "use_index", "vocab_size", "algorithm", "mapping_fingerprint"]) {
    if (!(key in manifest)) {
      throw new BundleError(`manifest is missing ${JSON.stringify(key)}`);
    }
  }
  let scheme: EncodingScheme;
  try {
    scheme = new EncodingScheme(manifest.scheme, Boolean(manifest.use_index));
  } catch (e) {
    throw new BundleError((e as Error).message);
  }

  let table: EncodingTable;
  if (scheme.kind === "byte" || scheme.isIdentity) {
    table = builtinTable(scheme);
  } else {
    const mappingPath = join(dirpath, MAPPING_FILE);
    if (!isFile(mappingPath)) {
      throw new BundleError(`bundle has no ${MAPPING_FILE}`);
    }
    table = parseMapping(readFileSync(mappingPath), scheme, mappingPath);
  }
  if (table.fingerprint !== manifest.mapping_fingerprint) {
    throw new BundleError(
      "mapping fingerprint mismatch: manifest has " +
        `${manifest.mapping_fingerprint}, file has ${table.fingerprint}`,
    );
  }

  // A missing vocabulary file surfaces as the filesystem error, same
  // as the reference loader.
  const vocabPath = join(dirpath, VOCAB_FILE);
  const { model, header } = loadVocab(readUtf8(vocabPath), vocabPath);
  if (header === null) {
    throw new BundleError("vocabulary file lacks a scheme header");
  }
  const [hKind, hIndex, hFp] = header;
  if (hKind !== scheme.kind || hIndex !== scheme.useIndex) {
    throw new BundleError(
      `vocabulary was built for ${hKind}/use_index=${hIndex}, ` +
        `manifest declares ${scheme.kind}/use_index=${scheme.useIndex}`,
    );
  }
  if (hFp !== table.fingerprint) {
    throw new BundleError(
      `vocabulary mapping fingerprint mismatch: vocabulary has ${hFp}, ` +
        `mapping file has ${table.fingerprint}`,
    );
  }
  if (manifest.vocab_size !== model.vocabSize) {
    throw new BundleError(
      `manifest declares vocab_size ${manifest.vocab_size}, ` +
        `vocabulary has ${model.vocabSize}`,
    );
  }
  if (manifest.algorithm !== model.algorithm) {
    throw new BundleError(
      `manifest declares algorithm ${JSON.stringify(manifest.algorithm)}, ` +
        `vocabulary is ${JSON.stringify(model.algorithm)}`,
    );
  }

  let lexicon: WordLexicon | null = null;
  const lexPath = join(dirpath, LEXICON_FILE);
  if (isFile(lexPath)) {
    const loaded = loadLexicon(readUtf8(lexPath), lexPath);
    const words = new Map<string, number>();
    for (const w of loaded.words.keys()) {
      const pieceId = model.pieceIds.get(encodeText(table, w));
      if (pieceId === undefined) {
        throw new BundleError(`lexicon word ${JSON.stringify(w)} has no piece in the vocabulary`);
      }
      words.set(w, pieceId);
    }
    lexicon = {
      words,
      maxWordLen: loaded.maxWordLen,
      sourceStats: loaded.sourceStats,
    };
  }

  return new TokenizerSpec(
    table,
    model,
    lexicon,
    manifest.max_len ?? null,
    manifest.normalization ?? "nfc",
  );
}
