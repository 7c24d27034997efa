/**
 * TypeScript runtime for subchar tokenizer bundles.
 *
 * Loads bundles trained by the Python toolkit and reproduces its
 * runtime behavior exactly: tokenize, decode, and homophone noise
 * injection are byte-identical to the reference CLI on the same
 * inputs.  Training stays on the Python side; this package only
 * consumes the published bundle format.
 */

export {
  AmbiguousFormError,
  BundleError,
  LexiconFileError,
  MappingFileError,
  UnknownFormError,
  VocabFileError,
} from "./errors.js";
export {
  DIGIT_KINDS,
  ESCAPE,
  EncodingScheme,
  EncodingTable,
  GLYPH_KINDS,
  IDENTITY_KINDS,
  PRONUNCIATION_KINDS,
  SCHEME_KINDS,
  TERMINATOR,
  builtinTable,
  decodeForm,
  encodeChar,
  formText,
  homophonesOf,
  isCjk,
  parseMapping,
} from "./charmap.js";
export type { EncodedForm, SchemeKind } from "./charmap.js";
export {
  CLS_ID,
  MASK_ID,
  PAD_ID,
  SEP_ID,
  SPECIALS,
  SubwordModel,
  UNK_ID,
  escapePiece,
  isReservedPiece,
  loadVocab,
  unescapePiece,
} from "./subword.js";
export type { Algorithm, SchemeHeader } from "./subword.js";
export { MIN_WORD_LEN, MaxMatchSegmenter, loadLexicon } from "./cws.js";
export type { WordLexicon } from "./cws.js";
export {
  FRAG_CLOSE,
  FRAG_OPEN,
  TokenizerSpec,
  decode,
  encodeText,
  normalizeText,
  tokenize,
  tokenizeBatch,
} from "./pipeline.js";
export type { TokenizedOutput } from "./pipeline.js";
export { injectNoise, sweepNoise } from "./noise.js";
export type { NoiseConfig, NoiseReport, NoisyCorpus } from "./noise.js";
export {
  BUNDLE_FORMAT,
  LEXICON_FILE,
  MANIFEST_FILE,
  MAPPING_FILE,
  VOCAB_FILE,
  loadBundle,
  loadManifest,
} from "./bundle.js";
export type { Manifest } from "./bundle.js";
export { PyRandom } from "./pyrandom.js";

/** Alias matching the verb the bundle consumers use. */
export { loadBundle as load } from "./bundle.js";
