/**
 * Error taxonomy mirroring the reference implementation.
 *
 * Each class corresponds to one failure family so callers can branch on
 * instanceof the same way Python callers branch on exception type.
 */

export class BundleError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "BundleError";
  }
}

export class MappingFileError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "MappingFileError";
  }
}

export class VocabFileError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "VocabFileError";
  }
}

export class LexiconFileError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "LexiconFileError";
  }
}

/** A serialized form decodes to no character in the table. */
export class UnknownFormError extends Error {
  readonly form: string;

  constructor(form: string) {
    super(`unknown form ${JSON.stringify(form)}`);
    this.name = "UnknownFormError";
    this.form = form;
  }
}

/** An unindexed form matches several characters. */
export class AmbiguousFormError extends Error {
  readonly form: string;
  readonly candidates: string[];

  constructor(form: string, candidates: string[]) {
    super(`form ${JSON.stringify(form)} is ambiguous: ${candidates.join(" ")}`);
    this.name = "AmbiguousFormError";
    this.form = form;
    this.candidates = candidates;
  }
}
