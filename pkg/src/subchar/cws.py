"""Word segmentation and lexicon construction.

A lexicon reserves part of the vocabulary budget for whole words; the
tokenizer emits one id per matched word and routes everything else through
the per-character pipeline.  Matching is forward maximum matching: at each
position take the longest known word, falling back to a single character.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Protocol

from .subword import SPECIALS

__all__ = [
    "Segmenter",
    "MaxMatchSegmenter",
    "WordLexicon",
    "LexiconFileError",
    "segment_words",
    "build_lexicon",
    "save_lexicon",
    "load_lexicon",
]

MIN_WORD_LEN = 2


class LexiconFileError(ValueError):
    """A lexicon file is malformed."""


class Segmenter(Protocol):
    """Anything that can split text into word spans."""

    def segment(self, text: str) -> list[tuple[int, int]]:
        """Return half-open character spans tiling ``text``."""
        ...


class MaxMatchSegmenter:
    """Forward maximum matching over a fixed word list.

    Single characters are emitted for stretches no word covers, so the
    returned spans always tile the input.  With words {AB, ABA} the text
    "ABAB" splits as [ABA][B]: the longest match wins even when a shorter
    one would let the rest pair up better.
    """

    def __init__(self, words: Iterable[str]):
        self._words = frozenset(words)
        for w in self._words:
            if len(w) < MIN_WORD_LEN:
                raise ValueError(f"word shorter than {MIN_WORD_LEN} chars: {w!r}")
        self._max_len = max((len(w) for w in self._words), default=0)

    @property
    def words(self) -> frozenset:
        return self._words

    def segment(self, text: str) -> list[tuple[int, int]]:
        spans = []
        i, n = 0, len(text)
        while i < n:
            hit = 0
            for length in range(min(self._max_len, n - i), MIN_WORD_LEN - 1, -1):
                if text[i : i + length] in self._words:
                    hit = length
                    break
            if hit == 0:
                hit = 1
            spans.append((i, i + hit))
            i += hit
        return spans


def segment_words(segmenter: Segmenter, text: str) -> list[tuple[int, int]]:
    """Split ``text`` into word spans using ``segmenter``."""
    spans = segmenter.segment(text)
    pos = 0
    for start, end in spans:
        if start != pos or end <= start:
            raise ValueError(f"segmenter produced non-tiling spans: {spans!r}")
        pos = end
    if pos != len(text):
        raise ValueError("segmenter spans do not cover the text")
    return spans


@dataclass(frozen=True)
class WordLexicon:
    """An immutable word table sharing the tokenizer's id space.

    ``words`` maps each word to its vocabulary id and iterates in admission
    order (frequency descending, codepoint ascending).  ``source_stats``
    keeps the corpus frequency each word was admitted with.
    """

    words: dict[str, int]
    max_word_len: int
    source_stats: dict[str, int]

    def __post_init__(self):
        for w in self.words:
            if len(w) < MIN_WORD_LEN:
                raise ValueError(f"word shorter than {MIN_WORD_LEN} chars: {w!r}")
        lengths = [len(w) for w in self.words]
        if self.max_word_len != max(lengths, default=0):
            raise ValueError("max_word_len does not match the word list")

    def __len__(self) -> int:
        return len(self.words)


def build_lexicon(
    lines: Iterable[str],
    segmenter: Segmenter,
    vocab_size: int,
    word_ratio: float = 0.8,
) -> WordLexicon:
    """Admit the most frequent segmented words into the vocabulary budget.

    ``round(word_ratio * vocab_size)`` slots are reserved (half up); ties on
    frequency break by codepoint order.  When the corpus yields fewer
    distinct words than the budget, all of them are admitted.  Ids are
    provisional (admission order after the special tokens); building a
    tokenizer reassigns them from the merged vocabulary.
    """
    if not 0.0 < word_ratio < 1.0:
        raise ValueError(f"word_ratio must lie in (0, 1), got {word_ratio}")
    budget = int(word_ratio * vocab_size + 0.5)
    counts: Counter = Counter()
    for line in lines:
        for start, end in segment_words(segmenter, line):
            if end - start >= MIN_WORD_LEN:
                counts[line[start:end]] += 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:budget]
    words = {w: len(SPECIALS) + k for k, (w, _) in enumerate(ranked)}
    return WordLexicon(
        words=words,
        max_word_len=max((len(w) for w in words), default=0),
        source_stats={w: c for w, c in ranked},
    )


def save_lexicon(lexicon: WordLexicon, path) -> None:
    """Write one ``<word><TAB><frequency>`` line per word, admission order."""
    lines = [f"{w}\t{lexicon.source_stats[w]}\n" for w in lexicon.words]
    Path(path).write_text("".join(lines), encoding="utf-8")


def load_lexicon(path) -> WordLexicon:
    words: dict[str, int] = {}
    stats: dict[str, int] = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        parts = raw.split("\t")
        if len(parts) != 2:
            raise LexiconFileError(f"{path}:{lineno}: expected <word><TAB><frequency>")
        word, freq = parts
        if not freq.isdigit():
            raise LexiconFileError(f"{path}:{lineno}: bad frequency {freq!r}")
        if word in words:
            raise LexiconFileError(f"{path}:{lineno}: duplicate word {word!r}")
        if len(word) < MIN_WORD_LEN:
            raise LexiconFileError(f"{path}:{lineno}: word shorter than {MIN_WORD_LEN} chars")
        words[word] = len(SPECIALS) + len(words)
        stats[word] = int(freq)
    return WordLexicon(
        words=words,
        max_word_len=max((len(w) for w in words), default=0),
        source_stats=stats,
    )
