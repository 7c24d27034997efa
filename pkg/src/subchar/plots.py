"""Figure rendering for corpus reports.

Everything draws through the Agg backend straight to files; no display
is ever needed.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

__all__ = ["composition_figure", "length_histogram", "sweep_figure"]

# Stable drawing order for the vocabulary categories.
CATEGORY_ORDER = ("special", "char", "combination", "subchar", "passthrough")


def composition_figure(breakdown: dict[str, int], path, title: str = "Vocabulary composition") -> None:
    cats = [c for c in CATEGORY_ORDER if c in breakdown]
    cats += sorted(set(breakdown) - set(cats))
    values = [breakdown[c] for c in cats]
    total = sum(values)
    fig, ax = plt.subplots(figsize=(7, 4))
    bars = ax.bar(cats, values, color="#4878b0")
    for bar, v in zip(bars, values):
        ax.annotate(
            f"{v}\n({v / total:.1%})",
            (bar.get_x() + bar.get_width() / 2, bar.get_height()),
            ha="center",
            va="bottom",
            fontsize=8,
        )
    ax.set_ylabel("vocabulary entries")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def length_histogram(counts: list[int], path, title: str = "Tokens per example") -> None:
    fig, ax = plt.subplots(figsize=(7, 4))
    bins = min(60, max(10, len(set(counts))))
    ax.hist(counts, bins=bins, color="#4878b0", edgecolor="white")
    mean = sum(counts) / len(counts)
    ax.axvline(mean, color="#d1605e", linestyle="--", label=f"mean {mean:.1f}")
    ax.set_xlabel("tokens")
    ax.set_ylabel("examples")
    ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def sweep_figure(rows_by_label: dict[str, list[tuple[int, float]]], path, title: str = "Average length vs vocabulary size") -> None:
    fig, ax = plt.subplots(figsize=(7, 4))
    for label, rows in rows_by_label.items():
        xs = [size for size, _ in rows]
        ys = [avg for _, avg in rows]
        ax.plot(xs, ys, marker="o", label=label)
    ax.set_xlabel("vocabulary size")
    ax.set_ylabel("average tokens per example")
    ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
