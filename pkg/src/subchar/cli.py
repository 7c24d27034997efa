"""Command-line workflows: train, tokenize, noise, stats, gen-random-map.

Every run prints its resolved configuration to stderr (suppress with
--quiet) and produces byte-stable outputs for fixed flags, seed, and
inputs.  Exit codes: 0 ok, 1 runtime or IO failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from pathlib import Path

from . import plots
from .analysis import stats_from_counts, token_counts
from .charmap import (
    SCHEME_KINDS,
    EncodingScheme,
    builtin_table,
    default_data_dir,
    gen_random_map,
    write_mapping_file,
)
from .cws import MaxMatchSegmenter, build_lexicon
from .noise import NoiseConfig, sweep
from .pipeline import (
    corpus_fingerprint,
    decode,
    load_bundle,
    normalize_text,
    save_bundle,
    tokenize,
    train_tokenizer,
)
from .subword import CATEGORIES, TrainerConfig, TrainerError, escape_piece

PERCENT_SCALE = 100.0


class UsageError(ValueError):
    """Bad flag combination or value; maps to exit code 2."""


def _echo(args, resolved: dict) -> None:
    if not args.quiet:
        line = json.dumps(resolved, ensure_ascii=False, sort_keys=True)
        print(f"config: {line}", file=sys.stderr)


def _info(args, message: str) -> None:
    if not args.quiet:
        print(message, file=sys.stderr)


def _read_lines(path) -> list[str]:
    return Path(path).read_text(encoding="utf-8").splitlines()


def _write_lines(path, lines: list[str]) -> None:
    text = "\n".join(lines) + "\n" if lines else ""
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def _seed_words(path) -> list[str]:
    source = Path(path) if path else Path(default_data_dir()) / "words.tsv"
    words = []
    for line in source.read_text(encoding="utf-8").splitlines():
        if line and not line.startswith("%"):
            words.append(line.split("\t")[0])
    return words


def cmd_train(args) -> int:
    scheme = EncodingScheme(args.scheme, use_index=not args.no_index)
    _echo(
        args,
        {
            "command": "train",
            "scheme": scheme.kind,
            "use_index": scheme.use_index,
            "algorithm": args.algorithm,
            "vocab_size": args.vocab_size,
            "corpus": str(args.corpus),
            "out": str(args.out),
            "cws": args.cws,
            "word_ratio": args.word_ratio if args.cws else None,
            "threads": args.threads,
        },
    )
    cfg = TrainerConfig(vocab_size=args.vocab_size, algorithm=args.algorithm)
    raw = Path(args.corpus).read_bytes()
    lines = raw.decode("utf-8").splitlines()
    table = builtin_table(scheme)

    lexicon = None
    if args.cws:
        matcher = MaxMatchSegmenter(_seed_words(args.words))
        normalized = [normalize_text(line) for line in lines]
        lexicon = build_lexicon(normalized, matcher, args.vocab_size, args.word_ratio)

    spec = train_tokenizer(lines, table, cfg, lexicon=lexicon)
    extra = {
        "trainer": {
            "max_piece_length": cfg.max_piece_length,
            "unigram_seed_size": cfg.seed_size,
            "unigram_em_iters_per_round": cfg.unigram_em_iters_per_round,
            "unigram_prune_fraction": cfg.unigram_prune_fraction,
            "bpe_min_pair_freq": cfg.bpe_min_pair_freq,
            "word_ratio": args.word_ratio if args.cws else None,
        }
    }
    save_bundle(spec, args.out, corpus_fp=corpus_fingerprint(raw), extra=extra)
    _info(args, f"wrote bundle {args.out} ({spec.model.vocab_size} entries)")
    return 0


def cmd_tokenize(args) -> int:
    mode = "decode" if args.decode else ("pieces" if args.pieces else ("offsets" if args.offsets else "ids"))
    _echo(
        args,
        {
            "command": "tokenize",
            "bundle": str(args.bundle),
            "input": str(args.input),
            "out": str(args.out),
            "mode": mode,
            "threads": args.threads,
        },
    )
    spec = load_bundle(args.bundle)
    lines = _read_lines(args.input)

    if args.decode:
        out_lines = [decode(spec, [int(t) for t in line.split()]) for line in lines]
        _write_lines(args.out, out_lines)
        return 0

    out_lines = []
    total_tokens = 0
    started = time.perf_counter()
    for line in lines:
        out = tokenize(spec, line)
        total_tokens += len(out.tokens)
        if args.pieces:
            out_lines.append("\t".join(escape_piece(p) for p in out.tokens))
        elif args.offsets:
            out_lines.append(" ".join(f"{a}:{b}" for a, b in out.offsets))
        else:
            out_lines.append(" ".join(str(i) for i in out.ids))
    elapsed = time.perf_counter() - started
    _write_lines(args.out, out_lines)
    rate = total_tokens / elapsed if elapsed > 0 else float("inf")
    _info(args, f"throughput: {total_tokens} tokens in {elapsed:.2f}s ({rate:.0f} tokens/s)")
    return 0


def _parse_ratios(text: str) -> list[float]:
    percents = []
    for part in text.split(","):
        try:
            value = float(part)
        except ValueError:
            raise UsageError(f"bad ratio {part!r}") from None
        if not 0.0 <= value <= PERCENT_SCALE:
            raise UsageError(f"ratio must lie in [0, 100], got {part}")
        percents.append(value)
    if not percents:
        raise UsageError("no ratios given")
    return percents


def cmd_noise(args) -> int:
    seed = args.seed
    percents = _parse_ratios(args.ratios)
    _echo(
        args,
        {
            "command": "noise",
            "bundle": str(args.bundle),
            "input": str(args.input),
            "ratios_percent": percents,
            "seed": seed,
            "threads": args.threads,
        },
    )
    spec = load_bundle(args.bundle)
    if spec.scheme.kind != "pinyin":
        raise UsageError(f"noise needs a pinyin bundle, got {spec.scheme.kind!r}")
    lines = _read_lines(args.input)
    base = NoiseConfig(ratio=0.0, seed=seed, table=spec.table)
    corpora = sweep(base, lines, [p / PERCENT_SCALE for p in percents])

    report_path = f"{args.input}.noise-report.jsonl"
    with open(report_path, "w", encoding="utf-8", newline="\n") as report:
        for pct, corpus in zip(percents, corpora):
            out_path = f"{args.input}.noise-{pct:g}"
            _write_lines(out_path, corpus.lines)
            _info(args, f"wrote {out_path}")
            for lineno, rep in enumerate(corpus.reports):
                record = {
                    "ratio_percent": pct,
                    "line": lineno,
                    "sampled": rep.sampled_positions,
                    "replaced": [[p, o, s] for p, o, s in rep.replaced],
                    "skipped_no_homophone": rep.skipped_no_homophone,
                }
                report.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")
    _info(args, f"wrote {report_path}")
    return 0


def cmd_stats(args) -> int:
    _echo(
        args,
        {
            "command": "stats",
            "bundle": str(args.bundle),
            "baseline_bundle": str(args.baseline_bundle) if args.baseline_bundle else None,
            "corpus": str(args.corpus),
            "out": str(args.out),
            "threads": args.threads,
        },
    )
    spec = load_bundle(args.bundle)
    baseline = load_bundle(args.baseline_bundle) if args.baseline_bundle else None
    lines = _read_lines(args.corpus)
    counts = token_counts(spec, lines)
    baseline_counts = token_counts(baseline, lines) if baseline is not None else None
    stats = stats_from_counts(spec, counts, baseline_counts)

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    relative = (
        f"{stats.relative_size_vs_baseline:.4f}"
        if stats.relative_size_vs_baseline is not None
        else ""
    )
    rows = [
        ("scheme", spec.scheme.label),
        ("algorithm", spec.model.algorithm),
        ("vocab_size", spec.model.vocab_size),
        ("examples", len(lines)),
        ("total_tokens", stats.total_tokens),
        ("avg_tokens_per_example", f"{stats.avg_tokens_per_example:.4f}"),
        ("tokenized_bytes", stats.tokenized_bytes),
        ("relative_size_vs_baseline", relative),
    ]
    for category in CATEGORIES:
        rows.append((f"vocab_{category}", stats.vocab_breakdown.get(category, 0)))

    csv_path = out_dir / "stats.csv"
    with open(csv_path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(("metric", "value"))
        writer.writerows(rows)

    summary_path = out_dir / "summary.txt"
    with open(summary_path, "w", encoding="utf-8", newline="\n") as f:
        f.write(f"Tokenizer {spec.scheme.label} ({spec.model.algorithm}), ")
        f.write(f"vocabulary {spec.model.vocab_size}\n")
        f.write(f"Corpus: {len(lines)} examples, {stats.total_tokens} tokens, ")
        f.write(f"{stats.avg_tokens_per_example:.2f} tokens/example\n")
        f.write(f"Serialized id stream: {stats.tokenized_bytes} bytes\n")
        if stats.relative_size_vs_baseline is not None:
            f.write(
                f"Relative size vs baseline: {stats.relative_size_vs_baseline:.1%}\n"
            )
        f.write("Vocabulary composition:\n")
        for category in CATEGORIES:
            n = stats.vocab_breakdown.get(category, 0)
            f.write(f"  {category:12s} {n:8d} ({n / spec.model.vocab_size:.1%})\n")

    plots.composition_figure(
        stats.vocab_breakdown,
        out_dir / "composition.png",
        title=f"Vocabulary composition: {spec.scheme.label}",
    )
    plots.length_histogram(
        counts,
        out_dir / "lengths.png",
        title=f"Tokens per example: {spec.scheme.label}",
    )
    for name in ("stats.csv", "summary.txt", "composition.png", "lengths.png"):
        _info(args, f"wrote {out_dir / name}")
    return 0


def cmd_gen_random_map(args) -> int:
    seed = args.seed
    _echo(
        args,
        {
            "command": "gen-random-map",
            "chars_from": args.chars_from,
            "out": str(args.out),
            "seed": seed,
        },
    )
    scheme = EncodingScheme(args.chars_from)
    table = builtin_table(scheme)
    bases = gen_random_map(table.chars(), seed)
    write_mapping_file(args.out, bases, header=f"random_index seed={seed} chars={args.chars_from}")
    _info(args, f"wrote {args.out} ({len(bases)} characters)")
    return 0


def _add_global_flags(parser: argparse.ArgumentParser, root: bool) -> None:
    # Subcommand copies default to SUPPRESS so a flag before the
    # subcommand name is not clobbered by the subparser's default.
    parser.add_argument(
        "--seed",
        type=int,
        default=0 if root else argparse.SUPPRESS,
        help="global PRNG seed",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=1 if root else argparse.SUPPRESS,
        help="worker cap (outputs never depend on it)",
    )
    parser.add_argument(
        "--quiet",
        action="store_true",
        default=False if root else argparse.SUPPRESS,
        help="suppress config echo and progress",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subchar",
        description="Sub-character tokenization toolkit for Chinese text.",
    )
    _add_global_flags(parser, root=True)
    commands = parser.add_subparsers(dest="command", required=True)

    def add_command(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        _add_global_flags(sub, root=False)
        return sub

    train = add_command("train", "train a tokenizer and write a bundle")
    train.add_argument("--scheme", required=True, choices=SCHEME_KINDS)
    train.add_argument("--no-index", action="store_true", help="drop homophone index digits")
    train.add_argument("--algorithm", choices=("unigram", "bpe"), default="unigram")
    train.add_argument("--vocab-size", type=int, default=22675)
    train.add_argument("--corpus", required=True)
    train.add_argument("--out", required=True)
    train.add_argument("--cws", action="store_true", help="reserve budget for whole words")
    train.add_argument("--word-ratio", type=float, default=0.8)
    train.add_argument("--words", default=None, help="seed word list (default: bundled)")
    train.set_defaults(func=cmd_train)

    tok = add_command("tokenize", "apply a bundle to a text file")
    tok.add_argument("--bundle", required=True)
    tok.add_argument("--input", required=True)
    tok.add_argument("--out", required=True)
    mode = tok.add_mutually_exclusive_group()
    mode.add_argument("--ids", action="store_true", help="space-separated ids (default)")
    mode.add_argument("--pieces", action="store_true", help="tab-separated escaped pieces")
    mode.add_argument("--offsets", action="store_true", help="start:end character spans")
    mode.add_argument("--decode", action="store_true", help="map id lines back to text")
    tok.set_defaults(func=cmd_tokenize)

    noise = add_command("noise", "emit homophone-noised corpora")
    noise.add_argument("--bundle", required=True)
    noise.add_argument("--input", required=True)
    noise.add_argument("--ratios", required=True, help="comma-separated percentages, e.g. 7.5,15")
    noise.set_defaults(func=cmd_noise)

    stats = add_command("stats", "corpus report: CSV, summary, figures")
    stats.add_argument("--bundle", required=True)
    stats.add_argument("--baseline-bundle", default=None)
    stats.add_argument("--corpus", required=True)
    stats.add_argument("--out", required=True)
    stats.set_defaults(func=cmd_stats)

    grm = add_command("gen-random-map", "write a random five-digit code table")
    grm.add_argument("--chars-from", default="pinyin", choices=("pinyin", "zhuyin", "random_index"))
    grm.add_argument("--out", required=True)
    grm.set_defaults(func=cmd_gen_random_map)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (TrainerError, UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError, KeyError) as e:
        # KeyError covers the form-decoding errors: unknown and
        # ambiguous forms are data problems, not crashes.
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
