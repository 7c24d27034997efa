"""Corpus measurements: lengths, composition, compression, sweeps."""

import pytest

from subchar.analysis import (
    ID_BYTES,
    avg_length,
    char_baseline,
    composition,
    compression,
    corpus_stats,
    raw_subword_baseline,
    stats_from_counts,
    token_counts,
    vocab_size_sweep,
)
from subchar.charmap import EncodingScheme, builtin_table
from subchar.pipeline import train_tokenizer
from subchar.subword import TrainerConfig

LINES = [
    "魑魅魍魉，吃饭了吗",
    "嗤之以鼻真是痴",
    "吃了吗 吃了 吃饭",
    "魍魉出没的夜里",
] * 5

CJK_LINES = ["魑魅魍魉", "吃饭了吗", "嗤之以鼻"] * 5


@pytest.fixture(scope="module")
def subchar_spec():
    table = builtin_table(EncodingScheme("pinyin", use_index=False))
    return train_tokenizer(LINES, table, TrainerConfig(vocab_size=120))


@pytest.fixture(scope="module")
def char_spec():
    return char_baseline(LINES, 60)


class TestAvgLength:
    def test_single_example(self, subchar_spec):
        line = LINES[0]
        n = len(token_counts(subchar_spec, [line]))
        assert n == 1
        assert avg_length(subchar_spec, [line]) == float(
            token_counts(subchar_spec, [line])[0]
        )

    def test_char_baseline_equals_mean_character_count(self, char_spec):
        expect = sum(len(line) for line in LINES) / len(LINES)
        assert avg_length(char_spec, LINES) == pytest.approx(expect)

    def test_empty_corpus_raises(self, subchar_spec):
        with pytest.raises(ValueError):
            avg_length(subchar_spec, [])


class TestComposition:
    def test_char_baseline_has_only_char_pieces(self):
        spec = char_baseline(CJK_LINES, 30)
        breakdown = composition(spec.model, spec.table)
        assert set(breakdown) <= {"char", "special"}
        assert breakdown["char"] > 0

    def test_single_symbol_model_is_all_subchar(self):
        table = builtin_table(EncodingScheme("pinyin", use_index=False))
        spec = train_tokenizer(
            ["吃了"], table, TrainerConfig(vocab_size=14, max_piece_length=1)
        )
        breakdown = composition(spec.model, spec.table)
        assert set(breakdown) <= {"subchar", "special"}

    def test_breakdown_sums_to_vocab_size(self, subchar_spec, char_spec):
        for spec in (subchar_spec, char_spec):
            breakdown = composition(spec.model, spec.table)
            assert sum(breakdown.values()) == spec.model.vocab_size


class TestCompression:
    def test_identity_is_one(self, subchar_spec):
        assert compression(subchar_spec, subchar_spec, LINES) == 1.0

    def test_matches_token_count_ratio(self, subchar_spec, char_spec):
        got = compression(subchar_spec, char_spec, LINES)
        expect = sum(token_counts(subchar_spec, LINES)) / sum(
            token_counts(char_spec, LINES)
        )
        assert got == pytest.approx(expect)


class TestStats:
    def test_fields_are_consistent(self, subchar_spec, char_spec):
        stats = corpus_stats(subchar_spec, LINES, baseline=char_spec)
        counts = token_counts(subchar_spec, LINES)
        assert stats.total_tokens == sum(counts)
        assert stats.tokenized_bytes == sum(counts) * ID_BYTES
        assert stats.avg_tokens_per_example == pytest.approx(sum(counts) / len(counts))
        assert stats.relative_size_vs_baseline == pytest.approx(
            compression(subchar_spec, char_spec, LINES)
        )
        assert sum(stats.vocab_breakdown.values()) == subchar_spec.model.vocab_size

    def test_no_baseline_leaves_relative_none(self, subchar_spec):
        assert corpus_stats(subchar_spec, LINES).relative_size_vs_baseline is None

    def test_stats_from_counts_rejects_empty(self, subchar_spec):
        with pytest.raises(ValueError):
            stats_from_counts(subchar_spec, [])


class TestSweep:
    def test_one_row_per_size_and_monotone(self):
        table = builtin_table(EncodingScheme("pinyin", use_index=False))
        rows = vocab_size_sweep(LINES, table, [60, 90, 120])
        assert [size for size, _ in rows] == [60, 90, 120]
        lengths = [avg for _, avg in rows]
        assert lengths == sorted(lengths, reverse=True) or len(set(lengths)) < 3

    def test_single_size_equals_avg_length(self):
        table = builtin_table(EncodingScheme("pinyin", use_index=False))
        rows = vocab_size_sweep(LINES, table, [90])
        spec = train_tokenizer(LINES, table, TrainerConfig(vocab_size=90))
        assert rows == [(90, avg_length(spec, LINES))]

    def test_unsorted_sizes_rejected(self):
        table = builtin_table(EncodingScheme("pinyin", use_index=False))
        with pytest.raises(ValueError):
            vocab_size_sweep(LINES, table, [120, 60])


def test_raw_baseline_learns_multi_char_pieces():
    spec = raw_subword_baseline(LINES, 80)
    assert any(len(p) > 1 for p, _ in spec.model.pieces)
    assert avg_length(spec, LINES) < avg_length(char_baseline(LINES, 60), LINES)
