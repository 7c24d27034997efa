"""Subword vocabularies over encoded text.

Two trainers share one model shape: a unigram language model fit with
EM and pruned down to size, and byte-pair encoding driven by adjacent
pair frequencies. Both operate on whole encoded lines, so learned
pieces freely span the ``#`` boundaries between character encodings;
that is what lets multi-character "combination" pieces exist at all.
Line breaks are hard boundaries: no piece, pair, or count ever crosses
one.

A trained model is immutable and safe to share. Segmentation is exact:
unigram decodes the Viterbi path (ties broken toward the longer final
piece, then recursively leftward), BPE replays its merge list in rank
order, and in both cases the returned pieces concatenate back to the
input unchanged. Symbols never seen in training segment as themselves
and map to ``[UNK]`` at id time, so the string path stays lossless
even off-distribution.

The EM expectation step runs on numpy: lines are padded into
length-sorted buckets, every lattice arc is resolved to a piece id
once per training run, and pruning just sinks a piece's score to
-inf. Scores of surviving pieces are maximum-likelihood normalized log
probabilities after the final EM round.
"""

from __future__ import annotations

import heapq
import math
import re
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .charmap import (
    ESCAPE,
    TERMINATOR,
    AmbiguousFormError,
    EncodingTable,
    UnknownFormError,
    decode_form,
    is_cjk,
)

__all__ = [
    "SPECIALS",
    "PAD_ID",
    "UNK_ID",
    "CLS_ID",
    "SEP_ID",
    "MASK_ID",
    "CATEGORIES",
    "TrainerError",
    "TrainerConfig",
    "SubwordModel",
    "train",
    "segment",
    "categorize",
    "save_vocab",
    "load_vocab",
    "filler_name",
    "is_reserved_piece",
    "escape_piece",
    "unescape_piece",
]

SPECIALS = ("[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]")
PAD_ID, UNK_ID, CLS_ID, SEP_ID, MASK_ID = range(5)

CATEGORIES = ("subchar", "char", "combination", "passthrough", "special")

NEG_INF = float("-inf")

# Reserved namespace: specials plus [unusedN] fillers. The trainers
# refuse to learn pieces spelled like these so a vocabulary file can
# always be read back unambiguously.
_RESERVED_RE = re.compile(r"^\[(?:PAD|UNK|CLS|SEP|MASK|unused\d+)\]$")


def filler_name(i: int) -> str:
    return f"[unused{i}]"


def is_reserved_piece(piece: str) -> bool:
    return _RESERVED_RE.match(piece) is not None


class TrainerError(ValueError):
    """Raised for unusable training configurations or corpora."""


@dataclass(frozen=True)
class TrainerConfig:
    """Knobs for both trainers. Defaults are the shipped settings."""

    vocab_size: int = 22675
    algorithm: str = "unigram"
    max_piece_length: int = 24
    unigram_seed_size: int | None = None  # None means 4 x vocab_size
    unigram_em_iters_per_round: int = 2
    unigram_prune_fraction: float = 0.25
    bpe_min_pair_freq: int = 2
    exclude_pieces: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.algorithm not in ("unigram", "bpe"):
            raise TrainerError(f"unknown algorithm {self.algorithm!r}")
        if self.vocab_size <= len(SPECIALS):
            raise TrainerError("vocab_size must exceed the special token count")
        if self.max_piece_length < 1:
            raise TrainerError("max_piece_length must be positive")
        if self.unigram_seed_size is not None and self.unigram_seed_size < 1:
            raise TrainerError("unigram_seed_size must be positive")
        if self.unigram_em_iters_per_round < 1:
            raise TrainerError("unigram_em_iters_per_round must be positive")
        if not 0.0 < self.unigram_prune_fraction < 1.0:
            raise TrainerError("unigram_prune_fraction must be in (0, 1)")
        if self.bpe_min_pair_freq < 1:
            raise TrainerError("bpe_min_pair_freq must be positive")
        for p in self.exclude_pieces:
            if len(p) < 2:
                raise TrainerError("cannot exclude single symbols from the vocabulary")

    @property
    def seed_size(self) -> int:
        if self.unigram_seed_size is not None:
            return self.unigram_seed_size
        return 4 * self.vocab_size


class SubwordModel:
    """A trained vocabulary: specials, pieces, and how to apply them.

    ``pieces`` excludes the five specials and is ordered; ids follow
    file order with specials first, so piece k has id 5 + k. Filler
    entries ([unusedN]) pad the piece list to the exact configured
    size and never participate in segmentation. In unigram models a
    score of exactly 0.0 marks a direct-emission piece (a lexicon
    word): it owns an id but is likewise never matched, since word
    tokens come from the word matcher, not from segmentation.
    """

    def __init__(
        self,
        algorithm: str,
        pieces: list[tuple[str, float]],
        merges: list[tuple[str, str]] | None = None,
    ):
        self.algorithm = algorithm
        self.pieces = list(pieces)
        self.merges = list(merges or [])
        self.specials = SPECIALS
        self.piece_ids: dict[str, int] = {s: i for i, s in enumerate(SPECIALS)}
        for k, (p, _score) in enumerate(self.pieces):
            if p in self.piece_ids:
                raise ValueError(f"duplicate piece {p!r}")
            self.piece_ids[p] = len(SPECIALS) + k
        self._id_to_piece = list(SPECIALS) + [p for p, _ in self.pieces]
        self._scores = {
            p: s
            for p, s in self.pieces
            if not _RESERVED_RE.match(p) and not (algorithm == "unigram" and s == 0.0)
        }
        self._max_len = max((len(p) for p in self._scores), default=1)
        self._min_score = min(self._scores.values(), default=0.0)
        self._unk_score = self._min_score - 10.0
        self._trie: dict | None = None
        # Replay needs every rank of a pair: a pair can merge again
        # when later merges recreate its adjacency.
        self._pair_ranks: dict[tuple[str, str], list[int]] = {}
        for rank, pair in enumerate(self.merges):
            self._pair_ranks.setdefault(pair, []).append(rank)

    @property
    def vocab_size(self) -> int:
        return len(SPECIALS) + len(self.pieces)

    def __len__(self) -> int:
        return self.vocab_size

    def piece_to_id(self, piece: str) -> int:
        return self.piece_ids.get(piece, UNK_ID)

    def id_to_piece(self, idx: int) -> str:
        if not 0 <= idx < self.vocab_size:
            raise IndexError(f"id {idx} out of range")
        return self._id_to_piece[idx]

    def segment(self, line: str) -> list[str]:
        if "\n" in line:
            raise ValueError("lines are segmented one at a time")
        if not line:
            return []
        if self.algorithm == "unigram":
            return self._segment_unigram(line)
        return self._segment_bpe(line)

    # -- unigram -----------------------------------------------------

    def _root(self) -> dict:
        if self._trie is None:
            self._trie = _build_trie(self._scores)
        return self._trie

    def _segment_unigram(self, line: str) -> list[str]:
        root = self._root()
        n = len(line)
        by_end: list[list[tuple[int, float]]] = [[] for _ in range(n + 1)]
        max_len = self._max_len
        for i in range(n):
            node = root
            hi = min(n, i + max_len)
            for k in range(i, hi):
                node = node.get(line[k])
                if node is None:
                    break
                s = node.get(None)
                if s is not None:
                    by_end[k + 1].append((i, s))
        # Unknown symbols ride a pseudo-arc scored below every real
        # piece, which keeps the lattice connected off-distribution.
        scores = self._scores
        unk = self._unk_score
        best = [NEG_INF] * (n + 1)
        blen = [0] * (n + 1)
        back = [0] * (n + 1)
        best[0] = 0.0
        for j in range(1, n + 1):
            bs, bl, bi = NEG_INF, 0, j - 1
            for i, s in by_end[j]:
                t = best[i] + s
                ln = j - i
                if t > bs or (t == bs and ln > bl):
                    bs, bl, bi = t, ln, i
            if line[j - 1] not in scores:
                t = best[j - 1] + unk
                if t > bs or (t == bs and 1 > bl):
                    bs, bl, bi = t, 1, j - 1
            best[j], blen[j], back[j] = bs, bl, bi
        out = []
        j = n
        while j > 0:
            i = back[j]
            out.append(line[i:j])
            j = i
        out.reverse()
        return out

    # -- bpe ---------------------------------------------------------

    def _segment_bpe(self, line: str) -> list[str]:
        ranks = self._pair_ranks
        toks = list(line)
        n = len(toks)
        if n < 2 or not ranks:
            return toks
        nxt = list(range(1, n)) + [-1]
        prv = [-1] + list(range(n - 1))
        alive = [True] * n
        heap: list[tuple[int, int, str, str]] = []

        def push(i: int, created_at: int) -> None:
            j = nxt[i]
            if j < 0:
                return
            pair = (toks[i], toks[j])
            rlist = ranks.get(pair)
            if rlist is None:
                return
            # The adjacency is consumed by the pair's first merge
            # after the merge that created it.
            k = bisect_right(rlist, created_at)
            if k < len(rlist):
                heapq.heappush(heap, (rlist[k], i, pair[0], pair[1]))

        for i in range(n - 1):
            push(i, -1)
        while heap:
            rank, i, left, right = heapq.heappop(heap)
            if not alive[i] or toks[i] != left:
                continue
            j = nxt[i]
            if j < 0 or toks[j] != right:
                continue
            toks[i] = left + right
            alive[j] = False
            q = nxt[j]
            nxt[i] = q
            if q >= 0:
                prv[q] = i
            p = prv[i]
            if p >= 0:
                push(p, rank)
            push(i, rank)
        return [toks[i] for i in range(n) if alive[i]]


def segment(model: SubwordModel, line: str) -> list[str]:
    return model.segment(line)


# ---------------------------------------------------------------------------
# Training entry point
# ---------------------------------------------------------------------------


def train(corpus: Iterable[str], cfg: TrainerConfig) -> SubwordModel:
    """Fit a model of exactly cfg.vocab_size entries on encoded lines."""
    lines = list(corpus)
    for line in lines:
        if "\n" in line:
            raise TrainerError("corpus lines must not contain newlines")
    symbols = set()
    for line in lines:
        symbols.update(line)
    if not symbols:
        raise TrainerError("training corpus is empty")
    if cfg.vocab_size <= len(symbols) + len(SPECIALS):
        raise TrainerError(
            f"vocab_size {cfg.vocab_size} cannot cover {len(symbols)} corpus "
            f"symbols plus {len(SPECIALS)} specials"
        )
    budget = cfg.vocab_size - len(SPECIALS)
    counted = sorted(Counter(line for line in lines if line).items())
    if cfg.algorithm == "unigram":
        pieces = _train_unigram(counted, cfg, budget)
        merges: list[tuple[str, str]] = []
    else:
        pieces, merges = _train_bpe(counted, cfg, budget)
    for i in range(budget - len(pieces)):
        pieces.append((filler_name(i), 0.0))
    return SubwordModel(cfg.algorithm, pieces, merges)


# ---------------------------------------------------------------------------
# Seed counting (Apriori over substrings)
# ---------------------------------------------------------------------------


def _seed_counts(counted: list[tuple[str, int]], max_len: int) -> tuple[Counter, Counter]:
    """Symbol counts plus counts of every substring with frequency >= 2.

    Works level by level: a substring can only reach frequency 2 if its
    one-shorter prefix did, so each pass extends the previous level's
    surviving start positions. Matches exhaustive counting restricted
    to the >= 2 survivors.
    """
    singles: Counter[str] = Counter()
    for line, mult in counted:
        for ch in line:
            singles[ch] += mult
    multi: Counter[str] = Counter()
    active = [(line, mult, range(len(line) - 1)) for line, mult in counted if len(line) >= 2]
    length = 2
    while active and length <= max_len:
        level: Counter[str] = Counter()
        for line, mult, starts in active:
            lim = len(line) - length
            for i in starts:
                if i <= lim:
                    level[line[i : i + length]] += mult
        survivors = {s for s, c in level.items() if c >= 2}
        if not survivors:
            break
        multi.update({s: level[s] for s in survivors})
        next_active = []
        for line, mult, starts in active:
            lim = len(line) - length
            keep = [i for i in starts if i <= lim and line[i : i + length] in survivors]
            if keep:
                next_active.append((line, mult, keep))
        active = next_active
        length += 1
    return singles, multi


# ---------------------------------------------------------------------------
# Unigram: lattice preparation and EM
# ---------------------------------------------------------------------------


def _build_trie(scores: dict[str, float]) -> dict:
    root: dict = {}
    for piece, s in scores.items():
        node = root
        for ch in piece:
            nxt = node.get(ch)
            if nxt is None:
                nxt = {}
                node[ch] = nxt
            node = nxt
        node[None] = s
    return root


class _Bucket:
    """A batch of equal-padded lines with arc piece ids resolved.

    pid_f[b, i, l-1] is the piece id of line_b[i:i+l] (or -1), and
    pid_r holds the same arcs re-indexed from the line's end so the
    backward pass can run as a forward pass over reversed lines.
    """

    __slots__ = ("pid_f", "pid_r", "lens", "mults", "width")

    def __init__(self, rows: list[tuple[str, int]], pid: dict[str, int], max_len: int):
        width = max(len(line) for line, _ in rows)
        B = len(rows)
        self.width = width
        self.lens = np.array([len(line) for line, _ in rows], dtype=np.int64)
        self.mults = np.array([m for _, m in rows], dtype=np.float64)
        self.pid_f = np.full((B, width, max_len), -1, dtype=np.int32)
        self.pid_r = np.full((B, width, max_len), -1, dtype=np.int32)
        trie = _build_trie({p: 0.0 for p in pid})
        for b, (line, _m) in enumerate(rows):
            n = len(line)
            pf = self.pid_f[b]
            pr = self.pid_r[b]
            for i in range(n):
                node = trie
                hi = min(n, i + max_len)
                for k in range(i, hi):
                    node = node.get(line[k])
                    if node is None:
                        break
                    if None in node:
                        piece = line[i : k + 1]
                        idx = pid[piece]
                        ln = k + 1 - i
                        pf[i, ln - 1] = idx
                        pr[n - i - ln, ln - 1] = idx


def _build_buckets(
    counted: list[tuple[str, int]], pid: dict[str, int], max_len: int, bucket_size: int = 1024
) -> list[_Bucket]:
    rows = sorted(counted, key=lambda lm: (len(lm[0]), lm[0]))
    return [
        _Bucket(rows[k : k + bucket_size], pid, max_len)
        for k in range(0, len(rows), bucket_size)
    ]


def _forward(pid_arr: np.ndarray, scores_ext: np.ndarray) -> np.ndarray:
    B, width, K = pid_arr.shape
    alpha = np.full((B, width + 1), NEG_INF)
    alpha[:, 0] = 0.0
    for j in range(1, width + 1):
        kmax = min(j, K)
        terms = np.empty((B, kmax))
        for l in range(1, kmax + 1):
            terms[:, l - 1] = alpha[:, j - l] + scores_ext[pid_arr[:, j - l, l - 1]]
        alpha[:, j] = np.logaddexp.reduce(terms, axis=1)
    return alpha


def _em_iteration(
    buckets: list[_Bucket], scores: np.ndarray
) -> tuple[np.ndarray, float]:
    """One E-step: expected piece counts and the data log-likelihood."""
    P = scores.shape[0]
    scores_ext = np.append(scores, NEG_INF)
    counts = np.zeros(P)
    loglik = 0.0
    with np.errstate(invalid="ignore"):
        for bk in buckets:
            B, width, K = bk.pid_f.shape
            alpha = _forward(bk.pid_f, scores_ext)
            alpha_r = _forward(bk.pid_r, scores_ext)
            rows = np.arange(B)
            Z = alpha[rows, bk.lens]
            loglik += float((Z * bk.mults).sum())
            grid = np.arange(width)[None, :]
            for l in range(1, K + 1):
                pidm = bk.pid_f[:, :, l - 1]
                valid = pidm >= 0
                if not valid.any():
                    continue
                ridx = bk.lens[:, None] - l - grid
                beta = np.take_along_axis(alpha_r, np.clip(ridx, 0, width), axis=1)
                post = alpha[:, :width] + scores_ext[pidm] + beta - Z[:, None]
                weighted = np.exp(post) * bk.mults[:, None]
                counts += np.bincount(pidm[valid], weights=weighted[valid], minlength=P)
    return counts, loglik


def _best_split_score(piece: str, scores: dict[str, float]) -> float:
    """Best log-probability of piece segmented by pieces other than itself."""
    n = len(piece)
    dp = [NEG_INF] * (n + 1)
    dp[0] = 0.0
    for j in range(1, n + 1):
        acc = NEG_INF
        for i in range(j):
            if i == 0 and j == n:
                continue
            d = dp[i]
            if d == NEG_INF:
                continue
            s = scores.get(piece[i:j])
            if s is not None and d + s > acc:
                acc = d + s
        dp[j] = acc
    return dp[n]


_COUNT_FLOOR = 1e-12


def _train_unigram(
    counted: list[tuple[str, int]], cfg: TrainerConfig, budget: int
) -> list[tuple[str, float]]:
    singles, multi = _seed_counts(counted, cfg.max_piece_length)
    candidates = [
        (p, c)
        for p, c in multi.items()
        if p not in cfg.exclude_pieces and not _RESERVED_RE.match(p)
    ]
    candidates.sort(key=lambda pc: (-pc[1] * len(pc[0]), pc[0]))
    cap = max(cfg.seed_size - len(singles), 0)
    candidates = candidates[:cap]

    piece_list = sorted(singles) + [p for p, _ in candidates]
    pid = {p: k for k, p in enumerate(piece_list)}
    n_singles = len(singles)
    P = len(piece_list)

    init = np.array(
        [float(singles[p]) for p in piece_list[:n_singles]]
        + [float(c) for _, c in candidates]
    )
    scores = np.log(init) - math.log(init.sum())
    alive = np.ones(P, dtype=bool)

    buckets = _build_buckets(counted, pid, cfg.max_piece_length)
    target = budget

    while True:
        counts = np.zeros(P)
        for _ in range(cfg.unigram_em_iters_per_round):
            counts, _ll = _em_iteration(buckets, scores)
            counts = np.where(alive, np.maximum(counts, _COUNT_FLOOR), 0.0)
            total = counts.sum()
            scores = np.where(alive, np.log(np.maximum(counts, _COUNT_FLOOR)) - math.log(total), NEG_INF)
        n_alive = int(alive.sum())
        if n_alive <= target:
            break
        drop_n = min(n_alive - target, max(1, int(round(n_alive * cfg.unigram_prune_fraction))))
        score_map = {piece_list[k]: float(scores[k]) for k in range(P) if alive[k]}
        losses = []
        for k in range(n_singles, P):
            if not alive[k]:
                continue
            p = piece_list[k]
            alt = _best_split_score(p, score_map)
            loss = float(counts[k]) * (float(scores[k]) - alt) if alt != NEG_INF else math.inf
            losses.append((loss, p, k))
        losses.sort(key=lambda t: (t[0], t[1]))
        for _loss, _p, k in losses[:drop_n]:
            alive[k] = False
            scores[k] = NEG_INF

    out = [(piece_list[k], float(scores[k])) for k in range(P) if alive[k]]
    out.sort(key=lambda ps: (-ps[1], ps[0]))
    return out


# ---------------------------------------------------------------------------
# BPE
# ---------------------------------------------------------------------------


def _train_bpe(
    counted: list[tuple[str, int]], cfg: TrainerConfig, budget: int
) -> tuple[list[tuple[str, float]], list[tuple[str, str]]]:
    singles: Counter[str] = Counter()
    for line, mult in counted:
        for ch in line:
            singles[ch] += mult

    toks: list[str] = []
    mults: list[int] = []
    bounds: list[int] = []
    for line, mult in counted:
        start = len(toks)
        toks.extend(line)
        mults.extend([mult] * len(line))
        bounds.append(start)
    n = len(toks)
    nxt = [-1] * n
    prv = [-1] * n
    for (line, _), start in zip(counted, bounds):
        for k in range(start, start + len(line) - 1):
            nxt[k] = k + 1
            prv[k + 1] = k

    counts: dict[tuple[str, str], int] = {}
    positions: dict[tuple[str, str], list[int]] = {}
    for i in range(n):
        j = nxt[i]
        if j >= 0:
            pair = (toks[i], toks[j])
            counts[pair] = counts.get(pair, 0) + mults[i]
            positions.setdefault(pair, []).append(i)

    heap = [(-c, pair) for pair, c in counts.items() if c >= cfg.bpe_min_pair_freq]
    heapq.heapify(heap)
    banned: set[tuple[str, str]] = set()

    def bump(pair: tuple[str, str], pos: int, delta: int, touched: set) -> None:
        counts[pair] = counts.get(pair, 0) + delta
        if counts[pair] <= 0:
            counts.pop(pair)
            positions.pop(pair, None)
            return
        if delta > 0:
            positions.setdefault(pair, []).append(pos)
            touched.add(pair)

    merges: list[tuple[str, str]] = []
    merged_strings: list[str] = []
    seen_strings = set(singles)
    budget_multi = budget - len(singles)

    while len(merged_strings) < budget_multi:
        pair = None
        while heap:
            negc, cand = heapq.heappop(heap)
            if cand in banned:
                continue
            cur = counts.get(cand, 0)
            if cur < cfg.bpe_min_pair_freq:
                continue
            if -negc != cur:
                heapq.heappush(heap, (-cur, cand))
                continue
            pair = cand
            break
        if pair is None:
            break
        left, right = pair
        joined = left + right
        if (
            len(joined) > cfg.max_piece_length
            or joined in cfg.exclude_pieces
            or _RESERVED_RE.match(joined)
        ):
            banned.add(pair)
            continue
        touched: set[tuple[str, str]] = set()
        applied = 0
        for i in sorted(positions.get(pair, ())):
            if toks[i] != left:
                continue
            j = nxt[i]
            if j < 0 or toks[j] != right:
                continue
            m = mults[i]
            p = prv[i]
            q = nxt[j]
            if p >= 0:
                bump((toks[p], left), p, -m, touched)
                bump((toks[p], joined), p, m, touched)
            if q >= 0:
                bump((right, toks[q]), j, -m, touched)
                bump((joined, toks[q]), i, m, touched)
            toks[i] = joined
            toks[j] = ""
            nxt[i] = q
            if q >= 0:
                prv[q] = i
            applied += 1
        counts.pop(pair, None)
        positions.pop(pair, None)
        touched.discard(pair)
        for t in touched:
            c = counts.get(t, 0)
            if c >= cfg.bpe_min_pair_freq:
                heapq.heappush(heap, (-c, t))
        if applied == 0:
            raise AssertionError(f"pair count bookkeeping drifted for {pair!r}")
        merges.append(pair)
        if joined not in seen_strings:
            seen_strings.add(joined)
            merged_strings.append(joined)

    pieces = [(p, 0.0) for p, _c in sorted(singles.items(), key=lambda pc: (-pc[1], pc[0]))]
    rank_of: dict[str, int] = {}
    for rank, (left, right) in enumerate(merges, start=1):
        rank_of.setdefault(left + right, rank)
    pieces.extend((p, -float(rank_of[p])) for p in merged_strings)
    return pieces, merges


# ---------------------------------------------------------------------------
# Categorization
# ---------------------------------------------------------------------------


def _scan_forms(piece: str) -> tuple[list[str], str, bool]:
    """Split a piece into terminated form texts plus the unfinished tail.

    Escape-aware: an escaped terminator does not end a form. The final
    flag reports a dangling escape marker at the very end.
    """
    forms = []
    start = 0
    i = 0
    n = len(piece)
    dangling = False
    while i < n:
        c = piece[i]
        if c == ESCAPE:
            if i + 1 == n:
                dangling = True
                break
            i += 2
            continue
        if c == TERMINATOR:
            forms.append(piece[start : i + 1])
            start = i + 1
        i += 1
    return forms, piece[start:], dangling


def _unescaped_chars(piece: str) -> Iterator[str]:
    i = 0
    n = len(piece)
    while i < n:
        c = piece[i]
        if c == ESCAPE:
            i += 2
            continue
        yield c
        i += 1


def _form_is_valid(table: EncodingTable, text: str) -> bool:
    try:
        decode_form(table, text)
    except AmbiguousFormError:
        return True
    except (UnknownFormError, KeyError):
        return False
    return True


def _categorize_piece(piece: str, table: EncodingTable) -> str:
    if _RESERVED_RE.match(piece):
        return "special"
    if table.scheme.is_identity:
        # No encodings to parse; classify by Chinese-character content.
        if not any(is_cjk(c) for c in piece):
            return "passthrough"
        return "char" if len(piece) == 1 else "combination"
    forms, tail, dangling = _scan_forms(piece)
    if forms and not tail and not dangling and all(_form_is_valid(table, f) for f in forms):
        return "char" if len(forms) == 1 else "combination"
    if not forms and not dangling:
        if all(c not in table.alphabet for c in _unescaped_chars(piece)):
            return "passthrough"
    return "subchar"


def categorize(model: SubwordModel, table: EncodingTable) -> dict[str, str]:
    """Label every vocabulary entry with its token category."""
    out = {s: "special" for s in model.specials}
    for piece, _score in model.pieces:
        out[piece] = _categorize_piece(piece, table)
    return out


# ---------------------------------------------------------------------------
# Vocabulary files
# ---------------------------------------------------------------------------


def escape_piece(piece: str) -> str:
    return piece.replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n")


def unescape_piece(text: str) -> str:
    out = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\\" and i + 1 < n:
            nc = text[i + 1]
            if nc == "t":
                out.append("\t")
                i += 2
                continue
            if nc == "n":
                out.append("\n")
                i += 2
                continue
            if nc == "\\":
                out.append("\\")
                i += 2
                continue
        out.append(c)
        i += 1
    return "".join(out)


def save_vocab(
    model: SubwordModel,
    path,
    scheme_header: tuple[str, bool, str] | None = None,
) -> None:
    """Write the vocabulary file; line order defines token ids.

    scheme_header pins (kind, use_index, mapping fingerprint) so a
    loader can refuse a vocabulary trained under a different encoding.
    """
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        if scheme_header is not None:
            kind, use_index, fp = scheme_header
            f.write(f"%%scheme\t{kind}\t{int(use_index)}\t{fp}\n")
        for s in SPECIALS:
            f.write(f"{s}\t0.0\n")
        for piece, score in model.pieces:
            f.write(f"{escape_piece(piece)}\t{score!r}\n")
        if model.algorithm == "bpe":
            f.write("%%merges\n")
            for left, right in model.merges:
                f.write(f"{escape_piece(left)}\t{escape_piece(right)}\n")


class VocabFileError(ValueError):
    """Raised when a vocabulary file is malformed."""


def load_vocab(path) -> tuple[SubwordModel, tuple[str, bool, str] | None]:
    with open(path, encoding="utf-8") as f:
        lines = f.read().split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    scheme_header = None
    pos = 0
    if lines and lines[pos].startswith("%%scheme\t"):
        parts = lines[pos].split("\t")
        if len(parts) != 4 or parts[2] not in ("0", "1"):
            raise VocabFileError(f"{path}: bad scheme header")
        scheme_header = (parts[1], parts[2] == "1", parts[3])
        pos += 1
    if lines[pos : pos + len(SPECIALS)] != [f"{s}\t0.0" for s in SPECIALS]:
        raise VocabFileError(f"{path}: special tokens missing or reordered")
    pos += len(SPECIALS)
    pieces: list[tuple[str, float]] = []
    merges: list[tuple[str, str]] = []
    in_merges = False
    for lineno, line in enumerate(lines[pos:], start=pos + 1):
        if line == "%%merges":
            if in_merges:
                raise VocabFileError(f"{path}:{lineno}: repeated merges sentinel")
            in_merges = True
            continue
        cols = line.split("\t")
        if len(cols) != 2:
            raise VocabFileError(f"{path}:{lineno}: expected 2 columns")
        if in_merges:
            merges.append((unescape_piece(cols[0]), unescape_piece(cols[1])))
        else:
            try:
                score = float(cols[1])
            except ValueError as e:
                raise VocabFileError(f"{path}:{lineno}: bad score") from e
            pieces.append((unescape_piece(cols[0]), score))
    algorithm = "bpe" if in_merges else "unigram"
    try:
        model = SubwordModel(algorithm, pieces, merges)
    except ValueError as e:
        raise VocabFileError(f"{path}: {e}") from e
    return model, scheme_header
