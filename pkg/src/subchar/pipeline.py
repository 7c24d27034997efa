"""End-to-end tokenization: normalize, encode, segment, and back.

The tokenizer owns the glue between a mapping table and a trained
vocabulary.  Text is NFC-normalized with ASCII letters folded to lower
case (the mapping alphabets are lowercase), each character becomes its
serialized form, the subword model splits the form stream, and every
token is tied back to the character span it came from.  Decoding walks
the concatenated pieces as a stream: escapes restore hazardous
passthrough characters, terminated forms map back through the table,
and anything unterminated is wrapped in a visible fragment marker.

A tokenizer round-trips: for indexed schemes, decoding a TokenizedOutput
reproduces the normalized input exactly.

Bundles persist all of it as one directory (manifest, vocabulary,
mapping file, optional lexicon) with fingerprints tying the vocabulary
to the exact mapping file it was trained against.
"""

from __future__ import annotations

import hashlib
import json
import string
import unicodedata
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Sequence

from .charmap import (
    ESCAPE,
    TERMINATOR,
    EncodingScheme,
    EncodingTable,
    UnknownFormError,
    builtin_table,
    decode_form,
    encode_char,
    is_cjk,
    load_table,
)
from .cws import MIN_WORD_LEN, MaxMatchSegmenter, WordLexicon, load_lexicon, save_lexicon
from .subword import (
    SubwordModel,
    TrainerConfig,
    is_reserved_piece,
    load_vocab,
    save_vocab,
    train,
)

__all__ = [
    "FRAG_OPEN",
    "FRAG_CLOSE",
    "BundleError",
    "TokenizerSpec",
    "TokenizedOutput",
    "normalize_text",
    "encode_text",
    "tokenize",
    "tokenize_batch",
    "decode",
    "train_tokenizer",
    "corpus_fingerprint",
    "save_bundle",
    "load_bundle",
    "load_manifest",
]

FRAG_OPEN = "⟨frag:"
FRAG_CLOSE = "⟩"

BUNDLE_FORMAT = "subchar-bundle-v1"
MANIFEST_FILE = "manifest.json"
VOCAB_FILE = "vocab.tsv"
MAPPING_FILE = "mapping.tsv"
LEXICON_FILE = "lexicon.tsv"

_ASCII_FOLD = str.maketrans(string.ascii_uppercase, string.ascii_lowercase)


class BundleError(ValueError):
    """A bundle is incomplete or internally inconsistent."""


def normalize_text(text: str) -> str:
    """NFC plus ASCII A-Z folded to a-z; everything else untouched."""
    return unicodedata.normalize("NFC", text).translate(_ASCII_FOLD)


def encode_text(table: EncodingTable, text: str) -> str:
    """Serialize a normalized string to its form stream."""
    return _encode_with_map(table, text)[0]


def _encode_with_map(table: EncodingTable, text: str) -> tuple[str, list[int]]:
    # src[j] is the character index that produced stream position j.
    parts: list[str] = []
    src: list[int] = []
    identity = table.scheme.is_identity
    alphabet = table.alphabet
    for i, ch in enumerate(text):
        if identity:
            chunk = ch
        else:
            chunk = table.encoded_text(ch)
            if chunk is None:
                if is_cjk(ch):
                    chunk = encode_char(table, ch).text
                elif ch in alphabet or ch == ESCAPE:
                    # A raw character that collides with the form
                    # alphabet would corrupt the stream grammar.
                    chunk = ESCAPE + ch
                else:
                    chunk = ch
        parts.append(chunk)
        src.extend([i] * len(chunk))
    return "".join(parts), src


@dataclass(frozen=True)
class TokenizedOutput:
    """Tokens with ids and their character provenance.

    ``offsets`` holds half-open character spans into the normalized
    input; they are non-decreasing and tile it.  Tokens produced from
    fragments of one character share that character's span, and
    ``char_to_tokens[i]`` lists every token index whose span covers
    character ``i``.
    """

    tokens: list[str]
    ids: list[int]
    offsets: list[tuple[int, int]]
    char_to_tokens: list[list[int]]

    def __len__(self) -> int:
        return len(self.tokens)


class TokenizerSpec:
    """Everything tokenize and decode need, immutable and shareable.

    The model is assumed to have been trained on text encoded with this
    table; bundle loading enforces that through fingerprints, direct
    construction trusts the caller.
    """

    def __init__(
        self,
        table: EncodingTable,
        model: SubwordModel,
        lexicon: WordLexicon | None = None,
        max_len: int | None = None,
        normalization: str = "nfc",
    ):
        if normalization != "nfc":
            raise ValueError(f"unsupported normalization {normalization!r}")
        if max_len is not None and max_len < 0:
            raise ValueError("max_len must be non-negative")
        self.table = table
        self.model = model
        self.lexicon = lexicon
        self.max_len = max_len
        self.normalization = normalization
        self.specials = model.specials
        self._matcher = (
            MaxMatchSegmenter(lexicon.words) if lexicon is not None and lexicon.words else None
        )

    @property
    def scheme(self) -> EncodingScheme:
        return self.table.scheme


def tokenize(spec: TokenizerSpec, text: str) -> TokenizedOutput:
    """Tokenize one line of text.

    Lexicon words (when present) each become a single token carrying
    the word's id; all remaining stretches are encoded per character
    and segmented by the subword model.  Truncation to ``max_len``
    never strands part of a fragmented character: it backs up to the
    last complete-character boundary.
    """
    if "\n" in text:
        raise ValueError("tokenize takes a single line")
    text = normalize_text(text)
    table, model = spec.table, spec.model
    tokens: list[str] = []
    ids: list[int] = []
    offsets: list[tuple[int, int]] = []

    def emit_run(start: int, run: str) -> None:
        stream, src = _encode_with_map(table, run)
        pos = 0
        for piece in model.segment(stream):
            end = pos + len(piece)
            tokens.append(piece)
            ids.append(model.piece_to_id(piece))
            offsets.append((start + src[pos], start + src[end - 1] + 1))
            pos = end

    if spec._matcher is None:
        if text:
            emit_run(0, text)
    else:
        words = spec.lexicon.words
        anchor: int | None = None
        for s, e in spec._matcher.segment(text):
            if e - s >= MIN_WORD_LEN:
                if anchor is not None:
                    emit_run(anchor, text[anchor:s])
                    anchor = None
                tokens.append(encode_text(table, text[s:e]))
                ids.append(words[text[s:e]])
                offsets.append((s, e))
            elif anchor is None:
                anchor = s
        if anchor is not None:
            emit_run(anchor, text[anchor:])

    if spec.max_len is not None and len(tokens) > spec.max_len:
        keep = spec.max_len
        # Back off while the next token would continue the character
        # the previous one is part of.
        while keep > 0 and offsets[keep][0] < offsets[keep - 1][1]:
            keep -= 1
        tokens, ids, offsets = tokens[:keep], ids[:keep], offsets[:keep]

    char_to_tokens: list[list[int]] = [[] for _ in range(len(text))]
    for t, (a, b) in enumerate(offsets):
        for p in range(a, b):
            char_to_tokens[p].append(t)
    return TokenizedOutput(tokens=tokens, ids=ids, offsets=offsets, char_to_tokens=char_to_tokens)


def tokenize_batch(spec: TokenizerSpec, texts: Iterable[str]) -> list[TokenizedOutput]:
    """Tokenize many lines, preserving order.

    Element-wise identical to calling tokenize per line.
    """
    return [tokenize(spec, t) for t in texts]


def decode(spec: TokenizerSpec, encoded: TokenizedOutput | Sequence[int]) -> str:
    """Map tokens back to text.

    Accepts a TokenizedOutput (decoded from its piece strings, always
    lossless) or a bare id sequence.  The id path drops special and
    filler tokens and cannot restore symbols that were mapped to
    [UNK].  Raises ValueError for ids outside the vocabulary and
    AmbiguousFormError when an unindexed form has several readings.
    Unterminated or unknown fragments come back wrapped in
    ``⟨frag:...⟩`` so downstream tooling can keep going.
    """
    if isinstance(encoded, TokenizedOutput):
        pieces = encoded.tokens
    else:
        pieces = []
        size = spec.model.vocab_size
        for i in encoded:
            if i < 0 or i >= size:
                raise ValueError(f"id {i} out of range for vocabulary of {size}")
            piece = spec.model.id_to_piece(i)
            if is_reserved_piece(piece):
                continue
            pieces.append(piece)
    return _decode_stream(spec.table, "".join(pieces))


def _decode_stream(table: EncodingTable, stream: str) -> str:
    if table.scheme.is_identity:
        return stream
    alphabet = table.alphabet
    out: list[str] = []
    i, n = 0, len(stream)
    while i < n:
        ch = stream[i]
        if ch == ESCAPE:
            if i + 1 < n:
                out.append(stream[i + 1])
                i += 2
            else:
                out.append(f"{FRAG_OPEN}{stream[i:]}{FRAG_CLOSE}")
                i = n
        elif ch in alphabet:
            j = i
            while j < n and stream[j] in alphabet and stream[j] != TERMINATOR:
                j += 1
            if j < n and stream[j] == TERMINATOR:
                form = stream[i : j + 1]
                try:
                    out.append(decode_form(table, form))
                except UnknownFormError:
                    out.append(f"{FRAG_OPEN}{form}{FRAG_CLOSE}")
                i = j + 1
            else:
                out.append(f"{FRAG_OPEN}{stream[i:j]}{FRAG_CLOSE}")
                i = j
        else:
            out.append(ch)
            i += 1
    return "".join(out)


def train_tokenizer(
    lines: Iterable[str],
    table: EncodingTable,
    cfg: TrainerConfig,
    lexicon: WordLexicon | None = None,
) -> TokenizerSpec:
    """Train a vocabulary over encoded lines and wrap it as a tokenizer.

    With a lexicon, ids are laid out as specials, then word pieces in
    admission order, then the trained subword pieces: the subword
    trainer gets the budget that the lexicon leaves over and is barred
    from re-learning the word pieces, so lexicon plus subword equals
    the configured size exactly.  Homophone words can collide on one
    encoded piece under unindexed schemes; they then share an id.
    """
    norm = [normalize_text(line) for line in lines]
    if lexicon is None or not lexicon.words:
        model = train([encode_text(table, line) for line in norm], cfg)
        return TokenizerSpec(table, model)

    matcher = MaxMatchSegmenter(lexicon.words)
    runs: list[str] = []
    for line in norm:
        anchor: int | None = None
        for s, e in matcher.segment(line):
            if e - s >= MIN_WORD_LEN:
                if anchor is not None:
                    runs.append(line[anchor:s])
                    anchor = None
            elif anchor is None:
                anchor = s
        if anchor is not None:
            runs.append(line[anchor:])

    word_pieces: list[str] = []
    for w in lexicon.words:
        piece = encode_text(table, w)
        if piece not in word_pieces:
            word_pieces.append(piece)
    sub_cfg = replace(
        cfg,
        vocab_size=cfg.vocab_size - len(word_pieces),
        exclude_pieces=cfg.exclude_pieces | frozenset(word_pieces),
    )
    sub = train([encode_text(table, run) for run in runs], sub_cfg)
    model = SubwordModel(
        cfg.algorithm,
        [(p, 0.0) for p in word_pieces] + sub.pieces,
        merges=sub.merges,
    )
    final = WordLexicon(
        words={w: model.piece_ids[encode_text(table, w)] for w in lexicon.words},
        max_word_len=lexicon.max_word_len,
        source_stats=lexicon.source_stats,
    )
    return TokenizerSpec(table, model, lexicon=final)


def corpus_fingerprint(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def save_bundle(
    spec: TokenizerSpec,
    dirpath,
    corpus_fp: str = "",
    extra: dict | None = None,
) -> None:
    """Write a tokenizer as a self-contained directory.

    The manifest records scheme, vocabulary size, and fingerprints; the
    mapping file is copied byte for byte so its fingerprint survives
    the round trip.  ``extra`` entries are merged into the manifest
    (trainer settings, provenance).
    """
    d = Path(dirpath)
    d.mkdir(parents=True, exist_ok=True)
    scheme = spec.scheme
    if scheme.kind != "byte" and not scheme.is_identity:
        if not spec.table.source_bytes:
            raise BundleError("table was not loaded from a mapping file; nothing to copy")
        (d / MAPPING_FILE).write_bytes(spec.table.source_bytes)
    save_vocab(
        spec.model,
        d / VOCAB_FILE,
        scheme_header=(scheme.kind, scheme.use_index, spec.table.fingerprint),
    )
    if spec.lexicon is not None and spec.lexicon.words:
        save_lexicon(spec.lexicon, d / LEXICON_FILE)
    manifest = {
        "format": BUNDLE_FORMAT,
        "scheme": scheme.kind,
        "use_index": scheme.use_index,
        "vocab_size": spec.model.vocab_size,
        "algorithm": spec.model.algorithm,
        "normalization": spec.normalization,
        "max_len": spec.max_len,
        "mapping_fingerprint": spec.table.fingerprint,
        "corpus_fingerprint": corpus_fp,
        "lexicon_size": len(spec.lexicon) if spec.lexicon is not None else 0,
    }
    if extra:
        manifest.update(extra)
    text = json.dumps(manifest, ensure_ascii=False, indent=2, sort_keys=True)
    (d / MANIFEST_FILE).write_text(text + "\n", encoding="utf-8")


def load_manifest(dirpath) -> dict:
    path = Path(dirpath) / MANIFEST_FILE
    if not path.is_file():
        raise BundleError(f"not a bundle: {dirpath} has no {MANIFEST_FILE}")
    try:
        manifest = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise BundleError(f"{path}: invalid JSON: {e}") from e
    if manifest.get("format") != BUNDLE_FORMAT:
        raise BundleError(f"{path}: unknown bundle format {manifest.get('format')!r}")
    return manifest


def load_bundle(dirpath) -> TokenizerSpec:
    """Load a bundle directory, verifying every cross-reference.

    The mapping file's fingerprint must match both the manifest and the
    vocabulary header, the vocabulary must declare the same scheme the
    manifest does, and every lexicon word must resolve to a vocabulary
    piece.  Any mismatch raises BundleError naming both sides.
    """
    d = Path(dirpath)
    manifest = load_manifest(d)
    for key in ("scheme", "use_index", "vocab_size", "algorithm", "mapping_fingerprint"):
        if key not in manifest:
            raise BundleError(f"manifest is missing {key!r}")
    try:
        scheme = EncodingScheme(manifest["scheme"], use_index=bool(manifest["use_index"]))
    except ValueError as e:
        raise BundleError(str(e)) from e

    if scheme.kind == "byte" or scheme.is_identity:
        table = builtin_table(scheme)
    else:
        mapping_path = d / MAPPING_FILE
        if not mapping_path.is_file():
            raise BundleError(f"bundle has no {MAPPING_FILE}")
        table = load_table(mapping_path, scheme)
    if table.fingerprint != manifest["mapping_fingerprint"]:
        raise BundleError(
            "mapping fingerprint mismatch: manifest has "
            f"{manifest['mapping_fingerprint']}, file has {table.fingerprint}"
        )

    model, header = load_vocab(d / VOCAB_FILE)
    if header is None:
        raise BundleError("vocabulary file lacks a scheme header")
    h_kind, h_index, h_fp = header
    if (h_kind, h_index) != (scheme.kind, scheme.use_index):
        raise BundleError(
            f"vocabulary was built for {h_kind}/use_index={h_index}, "
            f"manifest declares {scheme.kind}/use_index={scheme.use_index}"
        )
    if h_fp != table.fingerprint:
        raise BundleError(
            f"vocabulary mapping fingerprint mismatch: vocabulary has {h_fp}, "
            f"mapping file has {table.fingerprint}"
        )
    if manifest["vocab_size"] != model.vocab_size:
        raise BundleError(
            f"manifest declares vocab_size {manifest['vocab_size']}, "
            f"vocabulary has {model.vocab_size}"
        )
    if manifest["algorithm"] != model.algorithm:
        raise BundleError(
            f"manifest declares algorithm {manifest['algorithm']!r}, "
            f"vocabulary is {model.algorithm!r}"
        )

    lexicon = None
    lex_path = d / LEXICON_FILE
    if lex_path.is_file():
        loaded = load_lexicon(lex_path)
        words = {}
        for w in loaded.words:
            piece_id = model.piece_ids.get(encode_text(table, w))
            if piece_id is None:
                raise BundleError(f"lexicon word {w!r} has no piece in the vocabulary")
            words[w] = piece_id
        lexicon = WordLexicon(
            words=words,
            max_word_len=loaded.max_word_len,
            source_stats=loaded.source_stats,
        )

    return TokenizerSpec(
        table,
        model,
        lexicon=lexicon,
        max_len=manifest.get("max_len"),
        normalization=manifest.get("normalization", "nfc"),
    )
