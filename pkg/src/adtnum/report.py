"""Corpus metrics as delimited output plus rendered figures.

For each type the report enumerates the corpus, measures code sizes under
both pairing schemes, writes one CSV row per term, and renders a growth
figure (code bits against term size) and a per-rank census figure.
"""

from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .engine import encode
from .enumerator import EnumBudget, enumerate_upto_rank
from .pipeline import CompiledProgram
from .terms import BaseVal, Term, compute_ranks, postorder

CSV_NAME = "metrics.csv"


def _measure(t: Term) -> tuple[int, int]:
    nodes = 0
    base_bits = 0
    for node in postorder(t):
        nodes += 1
        for a in node.args:
            if isinstance(a, BaseVal):
                base_bits += a.code.bit_length()
    return nodes, base_bits


def write_report(
    prog_compact: CompiledProgram,
    prog_paper: CompiledProgram,
    budget: EnumBudget,
    out_dir: str,
) -> list[str]:
    """Write metrics.csv and per-type figures into ``out_dir``; returns the
    paths written, CSV first."""
    os.makedirs(out_dir, exist_ok=True)
    rows = []
    per_type: dict[str, list[tuple[int, int, int, int]]] = {}
    for name, ct in prog_compact.types.items():
        corpus = enumerate_upto_rank(ct.constrs, prog_compact.registry, budget)
        paper_ct = prog_paper.type_named(name)
        paper_corpus = enumerate_upto_rank(
            paper_ct.constrs, prog_paper.registry, budget
        )
        samples = []
        for t, tp in zip(corpus, paper_corpus):
            r = compute_ranks(t)[id(t)]
            nodes, base_bits = _measure(t)
            cbits = encode(t, ct.config).bit_length()
            pbits = encode(tp, paper_ct.config).bit_length()
            rows.append([name, r, nodes, base_bits, cbits, pbits])
            samples.append((r, nodes, cbits, pbits))
        per_type[name] = samples

    csv_path = os.path.join(out_dir, CSV_NAME)
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["type", "rank", "nodes", "base_bits", "compact_bits", "paper_bits"]
        )
        writer.writerows(rows)
    paths = [csv_path]

    for name, samples in per_type.items():
        if not samples:
            continue
        fig, (ax_growth, ax_census) = plt.subplots(1, 2, figsize=(9, 3.6))
        nodes = [s[1] for s in samples]
        ax_growth.scatter(nodes, [s[2] for s in samples], s=12, alpha=0.6,
                          label="compact")
        ax_growth.scatter(nodes, [s[3] for s in samples], s=12, alpha=0.6,
                          marker="x", label="paper")
        ax_growth.set_xlabel("term nodes")
        ax_growth.set_ylabel("code bits")
        ax_growth.set_title(f"{name}: code growth")
        ax_growth.legend()

        ranks = sorted({s[0] for s in samples})
        census = [sum(1 for s in samples if s[0] == r) for r in ranks]
        ax_census.bar(ranks, census, color="#4477aa")
        ax_census.set_xlabel("rank")
        ax_census.set_ylabel("terms")
        ax_census.set_title(f"{name}: terms per rank")

        fig.tight_layout()
        fig_path = os.path.join(out_dir, f"{name}_report.png")
        fig.savefig(fig_path, dpi=120)
        plt.close(fig)
        paths.append(fig_path)
    return paths
