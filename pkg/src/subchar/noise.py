"""Homophone noise injection for robustness evaluation.

A controlled fraction of the CJK characters in a text is swapped for
randomly chosen homophones (same base encoding, tone included).
Characters without homophones are sampled but left alone, and
everything is reported so the swap set can be audited.

Sampling is nested: one shuffled position order and one substitute
draw per position are fixed by the seed, and a ratio takes a prefix.
Raising the ratio therefore only ever adds replacements, which makes
counts across a ratio sweep monotone by construction.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .charmap import EncodingTable, homophones_of, is_cjk

__all__ = [
    "NoiseConfig",
    "NoiseReport",
    "NoisyCorpus",
    "inject",
    "sweep",
]


@dataclass(frozen=True)
class NoiseConfig:
    """Ratio of CJK characters to sample, the seed, and the homophone source."""

    ratio: float
    seed: int
    table: EncodingTable

    def __post_init__(self):
        if not 0.0 <= self.ratio <= 1.0:
            raise ValueError(f"ratio must lie in [0, 1], got {self.ratio}")
        if not self.table.scheme.is_pronunciation:
            raise ValueError(
                f"homophones need a pronunciation table, got {self.table.scheme.kind!r}"
            )


@dataclass(frozen=True)
class NoiseReport:
    """What one injection did, every list sorted by position.

    Replaced and skipped positions partition the sampled ones; a
    position is skipped only when its character has no homophones.
    """

    sampled_positions: list[int] = field(default_factory=list)
    replaced: list[tuple[int, str, str]] = field(default_factory=list)
    skipped_no_homophone: list[int] = field(default_factory=list)


@dataclass(frozen=True)
class NoisyCorpus:
    ratio: float
    lines: list[str]
    reports: list[NoiseReport]


def _plan(seed: int, text: str, table: EncodingTable) -> tuple[list[int], list[str | None]]:
    # A full permutation plus one draw per position: any ratio is a
    # prefix of this, so larger ratios strictly extend smaller ones.
    positions = [i for i, ch in enumerate(text) if is_cjk(ch)]
    rng = random.Random(seed)
    perm = rng.sample(positions, len(positions))
    subs: list[str | None] = []
    for pos in perm:
        group = homophones_of(table, text[pos])
        subs.append(rng.choice(group) if group else None)
    return perm, subs


def _apply(
    plan: tuple[list[int], list[str | None]], ratio: float, text: str
) -> tuple[str, NoiseReport]:
    perm, subs = plan
    take = math.floor(ratio * len(perm) + 0.5)
    out = list(text)
    replaced: list[tuple[int, str, str]] = []
    skipped: list[int] = []
    for pos, sub in zip(perm[:take], subs[:take]):
        if sub is None:
            skipped.append(pos)
        else:
            out[pos] = sub
            replaced.append((pos, text[pos], sub))
    report = NoiseReport(
        sampled_positions=sorted(perm[:take]),
        replaced=sorted(replaced),
        skipped_no_homophone=sorted(skipped),
    )
    return "".join(out), report


def inject(cfg: NoiseConfig, text: str) -> tuple[str, NoiseReport]:
    """Replace round(ratio * n_cjk) sampled characters with homophones.

    Sampling is uniform without replacement over the CJK positions;
    each sampled character is replaced by a uniform draw from its
    homophone group, or recorded as skipped when the group is empty.
    Deterministic for a fixed seed.
    """
    return _apply(_plan(cfg.seed, text, cfg.table), cfg.ratio, text)


def sweep(cfg: NoiseConfig, lines: Sequence[str], ratios: Iterable[float]) -> list[NoisyCorpus]:
    """Inject every ratio into the same corpus, one NoisyCorpus per ratio.

    Line i uses seed ``cfg.seed ^ i``, so results do not depend on
    processing order.  All ratios share each line's sampling plan:
    replacement counts are nondecreasing across ascending ratios.
    """
    plans = [_plan(cfg.seed ^ i, line, cfg.table) for i, line in enumerate(lines)]
    out = []
    for ratio in ratios:
        if not 0.0 <= ratio <= 1.0:
            raise ValueError(f"ratio must lie in [0, 1], got {ratio}")
        noisy: list[str] = []
        reports: list[NoiseReport] = []
        for line, plan in zip(lines, plans):
            text, report = _apply(plan, ratio, line)
            noisy.append(text)
            reports.append(report)
        out.append(NoisyCorpus(ratio=ratio, lines=noisy, reports=reports))
    return out
