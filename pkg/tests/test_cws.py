"""Word segmentation and lexicon budget behavior."""

import itertools
import string

import pytest
from hypothesis import given, strategies as st

from subchar.cws import (
    LexiconFileError,
    MaxMatchSegmenter,
    WordLexicon,
    build_lexicon,
    load_lexicon,
    save_lexicon,
    segment_words,
)


def spans_to_strings(text, spans):
    return [text[a:b] for a, b in spans]


class TestMaxMatch:
    def test_longest_match_wins(self):
        seg = MaxMatchSegmenter({"AB", "ABA"})
        assert spans_to_strings("ABAB", seg.segment("ABAB")) == ["ABA", "B"]

    def test_exact_lexicon_hit_is_one_span(self):
        seg = MaxMatchSegmenter({"青蛙"})
        assert seg.segment("青蛙") == [(0, 2)]

    def test_no_words_fall_back_to_single_chars(self):
        seg = MaxMatchSegmenter({"青蛙"})
        assert seg.segment("abc") == [(0, 1), (1, 2), (2, 3)]

    def test_empty_text(self):
        assert MaxMatchSegmenter({"ab"}).segment("") == []

    def test_empty_word_list(self):
        assert MaxMatchSegmenter([]).segment("xy") == [(0, 1), (1, 2)]

    def test_rejects_single_char_words(self):
        with pytest.raises(ValueError):
            MaxMatchSegmenter({"a"})

    @given(
        st.text(alphabet="ab青蛙x", max_size=40),
        st.sets(st.text(alphabet="ab青蛙", min_size=2, max_size=4), max_size=8),
    )
    def test_spans_always_tile(self, text, words):
        spans = segment_words(MaxMatchSegmenter(words), text)
        pos = 0
        for a, b in spans:
            assert a == pos and b > a
            pos = b
        assert pos == len(text)


class _BrokenSegmenter:
    def segment(self, text):
        return [(0, len(text)), (0, len(text))] if text else []


def test_segment_words_rejects_non_tiling_spans():
    with pytest.raises(ValueError):
        segment_words(_BrokenSegmenter(), "abcd")


def fake_words(n):
    # Distinct two-letter words in codepoint order.
    pairs = itertools.product(string.ascii_lowercase, repeat=2)
    return ["".join(p) for p in itertools.islice(pairs, n)]


class TestBuildLexicon:
    def test_budget_is_word_ratio_times_vocab(self):
        words = fake_words(120)
        # One word per line keeps counts exact; descending frequency.
        lines = [w for i, w in enumerate(words) for _ in range(len(words) - i)]
        lex = build_lexicon(lines, MaxMatchSegmenter(words), vocab_size=100, word_ratio=0.8)
        assert len(lex) == 80
        assert list(lex.words) == words[:80]

    def test_admission_order_ids_follow_specials(self):
        words = ["aa", "bb", "cc"]
        lines = ["aa"] * 3 + ["bb"] * 2 + ["cc"]
        lex = build_lexicon(lines, MaxMatchSegmenter(words), vocab_size=10, word_ratio=0.8)
        assert lex.words == {"aa": 5, "bb": 6, "cc": 7}
        assert lex.source_stats == {"aa": 3, "bb": 2, "cc": 1}

    def test_saturation_admits_everything(self):
        words = ["aa", "bb"]
        lex = build_lexicon(["aabb"], MaxMatchSegmenter(words), vocab_size=100, word_ratio=0.8)
        assert set(lex.words) == {"aa", "bb"}

    def test_frequency_tie_prefers_codepoint_smaller(self):
        words = ["ab", "aa"]
        lines = ["ab", "aa", "ab", "aa"]
        lex = build_lexicon(lines, MaxMatchSegmenter(words), vocab_size=2, word_ratio=0.5)
        assert list(lex.words) == ["aa"]

    def test_counts_words_only(self):
        # Single-char fallback spans never reach the lexicon.
        lex = build_lexicon(["xaax"], MaxMatchSegmenter({"aa"}), vocab_size=10, word_ratio=0.5)
        assert set(lex.words) == {"aa"}

    def test_max_word_len(self):
        words = ["aa", "bbb"]
        lex = build_lexicon(["aabbb"], MaxMatchSegmenter(words), vocab_size=10, word_ratio=0.8)
        assert lex.max_word_len == 3

    @pytest.mark.parametrize("ratio", [0.0, 1.0, -0.1, 1.5])
    def test_word_ratio_must_be_a_proper_fraction(self, ratio):
        with pytest.raises(ValueError):
            build_lexicon(["aa"], MaxMatchSegmenter({"aa"}), vocab_size=10, word_ratio=ratio)


class TestLexiconValidation:
    def test_rejects_short_words(self):
        with pytest.raises(ValueError):
            WordLexicon(words={"a": 5}, max_word_len=1, source_stats={"a": 1})

    def test_rejects_wrong_max_word_len(self):
        with pytest.raises(ValueError):
            WordLexicon(words={"aa": 5}, max_word_len=3, source_stats={"aa": 1})

    def test_empty_lexicon_is_fine(self):
        assert len(WordLexicon(words={}, max_word_len=0, source_stats={})) == 0


class TestLexiconFile:
    def test_round_trip_preserves_order_ids_stats(self, tmp_path):
        words = ["cc", "aa", "bb"]
        lines = ["cc"] * 3 + ["aa"] * 2 + ["bb"]
        lex = build_lexicon(lines, MaxMatchSegmenter(words), vocab_size=10, word_ratio=0.8)
        path = tmp_path / "lexicon.tsv"
        save_lexicon(lex, path)
        assert path.read_text() == "cc\t3\naa\t2\nbb\t1\n"
        loaded = load_lexicon(path)
        assert loaded == lex

    @pytest.mark.parametrize(
        "content",
        [
            "aa\n",
            "aa\t1\t2\n",
            "aa\tx\n",
            "aa\t-1\n",
            "aa\t1\naa\t2\n",
            "a\t1\n",
        ],
    )
    def test_malformed_files_raise(self, tmp_path, content):
        path = tmp_path / "lexicon.tsv"
        path.write_text(content)
        with pytest.raises(LexiconFileError):
            load_lexicon(path)
