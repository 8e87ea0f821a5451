"""Summary figures for a verification run (written as PNG files)."""

import os
from collections import Counter

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def outcome_figure(verdicts, path):
    counts = Counter((v.statement, v.satisfied_disjunct) for v in verdicts)
    labels = [f"{s}\n{d}" for s, d in sorted(counts)]
    values = [counts[k] for k in sorted(counts)]
    fig, ax = plt.subplots(figsize=(max(4, 0.9 * len(labels) + 2), 3.5))
    ax.bar(range(len(values)), values, color="tab:blue")
    ax.set_xticks(range(len(values)), labels, fontsize=7)
    ax.set_ylabel("instances")
    ax.set_title("certified disjunct per statement")
    fig.tight_layout()
    fig.savefig(path, dpi=100)
    plt.close(fig)


def nodes_figure(verdicts, path):
    nodes = [max(1, v.nodes) for v in verdicts]
    fig, ax = plt.subplots(figsize=(4.5, 3.5))
    if nodes:
        top = max(nodes)
        bins = [2 ** k for k in range(0, top.bit_length() + 1)]
        ax.hist(nodes, bins=bins if len(bins) > 1 else 1, color="tab:orange")
        ax.set_xscale("log", base=2)
    ax.set_xlabel("search nodes (log scale)")
    ax.set_ylabel("instances")
    ax.set_title("search effort")
    fig.tight_layout()
    fig.savefig(path, dpi=100)
    plt.close(fig)


def write_figures(verdicts, directory):
    """Write the summary figures into ``directory``; returns the file paths."""
    os.makedirs(directory, exist_ok=True)
    paths = [os.path.join(directory, "outcomes.png"), os.path.join(directory, "nodes.png")]
    outcome_figure(verdicts, paths[0])
    nodes_figure(verdicts, paths[1])
    return paths
