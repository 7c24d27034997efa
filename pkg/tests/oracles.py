"""Independent reference implementations used to check the real ones.

Everything here favors obviousness over speed: exhaustive enumeration
and full recounting, usable only on toy inputs. The production code
must agree with these exactly.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Iterable


def round_half_up(x: float) -> int:
    return math.floor(x + 0.5)


def all_segmentations(line: str, pieces: set[str]) -> Iterable[list[str]]:
    """Every way to split line into pieces, depth first."""
    if not line:
        yield []
        return
    for end in range(1, len(line) + 1):
        head = line[:end]
        if head in pieces:
            for rest in all_segmentations(line[end:], pieces):
                yield [head] + rest


def best_segmentation(line: str, scores: dict[str, float]) -> list[str] | None:
    """Highest scoring segmentation by brute force.

    Ties go to the segmentation whose reversed piece-length tuple is
    larger, i.e. prefer the longer final piece, then recurse leftward.
    The Viterbi decoder must implement the same rule.
    """
    best = None
    best_key = None
    for seg in all_segmentations(line, set(scores)):
        score = sum(scores[p] for p in seg)
        key = (score, tuple(len(p) for p in reversed(seg)))
        if best_key is None or key > best_key:
            best, best_key = seg, key
    return best


def bpe_merges(lines: list[str], max_merges: int, min_pair_freq: int = 2) -> list[tuple[str, str]]:
    """Merge order by full recount after every merge.

    The most frequent adjacent pair wins; frequency ties go to the
    lexicographically smallest (left, right) pair. Pairs never span
    line boundaries. Stops when the best pair drops below
    min_pair_freq or max_merges is reached.
    """
    seqs = [list(line) for line in lines]
    merges: list[tuple[str, str]] = []
    while len(merges) < max_merges:
        counts: Counter[tuple[str, str]] = Counter()
        for seq in seqs:
            for a, b in zip(seq, seq[1:]):
                counts[(a, b)] += 1
        if not counts:
            break
        top = max(counts.values())
        if top < min_pair_freq:
            break
        pair = min(p for p, c in counts.items() if c == top)
        merges.append(pair)
        joined = pair[0] + pair[1]
        for seq in seqs:
            i = 0
            while i < len(seq) - 1:
                if seq[i] == pair[0] and seq[i + 1] == pair[1]:
                    seq[i : i + 2] = [joined]
                else:
                    i += 1
    return merges


def substring_counts(lines: list[str], max_len: int) -> Counter[str]:
    """Counts of every substring of length 2..max_len, the slow way."""
    counts: Counter[str] = Counter()
    for line in lines:
        n = len(line)
        for i in range(n):
            for j in range(i + 2, min(n, i + max_len) + 1):
                counts[line[i:j]] += 1
    return counts
