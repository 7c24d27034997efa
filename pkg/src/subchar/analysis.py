"""Corpus-level measurements: token lengths, composition, compression.

All sizes are operationalized as fixed-width 4-byte id streams, so the
compression ratio between two tokenizers reduces to their token-count
ratio and does not depend on text encoding or platform.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .charmap import EncodingScheme, EncodingTable, builtin_table
from .pipeline import TokenizerSpec, tokenize, train_tokenizer
from .subword import SubwordModel, TrainerConfig, categorize

__all__ = [
    "ID_BYTES",
    "CorpusStats",
    "token_counts",
    "avg_length",
    "composition",
    "compression",
    "stats_from_counts",
    "corpus_stats",
    "vocab_size_sweep",
    "char_baseline",
    "raw_subword_baseline",
]

ID_BYTES = 4


@dataclass(frozen=True)
class CorpusStats:
    """One tokenizer's footprint on one corpus.

    ``vocab_breakdown`` counts vocabulary entries per category and sums
    to the vocabulary size.  ``relative_size_vs_baseline`` compares
    serialized id-stream bytes against a baseline run over the same
    corpus; None when no baseline was given.
    """

    avg_tokens_per_example: float
    total_tokens: int
    tokenized_bytes: int
    relative_size_vs_baseline: float | None
    vocab_breakdown: dict[str, int]


def token_counts(spec: TokenizerSpec, lines: Sequence[str]) -> list[int]:
    """Tokens per line; specials never appear in output, so plain counts."""
    return [len(tokenize(spec, line).tokens) for line in lines]


def avg_length(spec: TokenizerSpec, lines: Sequence[str]) -> float:
    counts = token_counts(spec, lines)
    if not counts:
        raise ValueError("empty corpus")
    return sum(counts) / len(counts)


def composition(model: SubwordModel, table: EncodingTable) -> dict[str, int]:
    """Vocabulary entries per category; always sums to the vocab size."""
    return dict(Counter(categorize(model, table).values()))


def compression(
    spec_a: TokenizerSpec, spec_b: TokenizerSpec, lines: Sequence[str]
) -> float:
    """Size of A's id stream relative to B's, 4-byte ids."""
    bytes_a = sum(token_counts(spec_a, lines)) * ID_BYTES
    bytes_b = sum(token_counts(spec_b, lines)) * ID_BYTES
    if bytes_b == 0:
        raise ValueError("baseline produced no tokens")
    return bytes_a / bytes_b


def stats_from_counts(
    spec: TokenizerSpec,
    counts: Sequence[int],
    baseline_counts: Sequence[int] | None = None,
) -> CorpusStats:
    """Assemble CorpusStats from precomputed per-line token counts."""
    if not counts:
        raise ValueError("empty corpus")
    total = sum(counts)
    relative = None
    if baseline_counts is not None:
        base_total = sum(baseline_counts)
        if base_total == 0:
            raise ValueError("baseline produced no tokens")
        relative = total / base_total
    return CorpusStats(
        avg_tokens_per_example=total / len(counts),
        total_tokens=total,
        tokenized_bytes=total * ID_BYTES,
        relative_size_vs_baseline=relative,
        vocab_breakdown=composition(spec.model, spec.table),
    )


def corpus_stats(
    spec: TokenizerSpec,
    lines: Sequence[str],
    baseline: TokenizerSpec | None = None,
) -> CorpusStats:
    baseline_counts = token_counts(baseline, lines) if baseline is not None else None
    return stats_from_counts(spec, token_counts(spec, lines), baseline_counts)


def vocab_size_sweep(
    lines: Sequence[str],
    table: EncodingTable,
    sizes: Sequence[int],
    algorithm: str = "unigram",
) -> list[tuple[int, float]]:
    """Average tokenized length per vocabulary size, one model per size."""
    if list(sizes) != sorted(sizes):
        raise ValueError("sizes must be ascending")
    rows = []
    for size in sizes:
        cfg = TrainerConfig(vocab_size=size, algorithm=algorithm)
        spec = train_tokenizer(lines, table, cfg)
        rows.append((size, avg_length(spec, lines)))
    return rows


def char_baseline(lines: Iterable[str], vocab_size: int) -> TokenizerSpec:
    """Character tokenizer: identity encoding, single-character pieces."""
    table = builtin_table(EncodingScheme("char"))
    cfg = TrainerConfig(vocab_size=vocab_size, max_piece_length=1)
    return train_tokenizer(lines, table, cfg)


def raw_subword_baseline(
    lines: Iterable[str], vocab_size: int, algorithm: str = "unigram"
) -> TokenizerSpec:
    """Sub-word baseline: pieces learned over raw characters."""
    table = builtin_table(EncodingScheme("raw"))
    cfg = TrainerConfig(vocab_size=vocab_size, algorithm=algorithm)
    return train_tokenizer(lines, table, cfg)
