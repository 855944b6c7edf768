"""Bounds report rendering: rows for stdout/CSV plus an optional figure.

The figure shows, per order n, how many complement edges each guarantee
regime tolerates; for k = 3 the exact threshold e(n) is overlaid.
"""

from __future__ import annotations

import csv
from math import comb
from pathlib import Path

from .core import BoundReport, bound_report

CSV_COLUMNS = [
    "n",
    "k",
    "admissible",
    "evans_block_bound",
    "thm2_complement_blocks_num",
    "thm2_complement_blocks_den",
    "thm2_edge_bound",
    "thm3_edge_bound",
    "thm3_doubled",
    "e_of_n",
    "proven_regime",
]


def bounds_rows(k: int, n_values) -> list[BoundReport]:
    return [bound_report(n, k) for n in n_values]


def report_to_obj(r: BoundReport) -> dict:
    return {
        "n": r.n,
        "k": r.k,
        "admissible": r.admissible,
        "evans_block_bound": r.evans_block_bound,
        "thm2_complement_blocks_num": r.thm2_complement_blocks_num,
        "thm2_complement_blocks_den": r.thm2_complement_blocks_den,
        "thm2_edge_bound": r.thm2_edge_bound_value,
        "thm3_edge_bound": r.thm3_edge_bound_value,
        "thm3_doubled": r.thm3_doubled,
        "e_of_n": r.e_of_n_value,
        "proven_regime": r.proven_regime,
    }


def write_bounds_csv(reports: list[BoundReport], path) -> None:
    with Path(path).open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for r in reports:
            writer.writerow(report_to_obj(r))


def render_bounds_figure(reports: list[BoundReport], path) -> None:
    """Plot the complement-edge allowance of each regime against n."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    if not reports:
        raise ValueError("no rows to plot")
    k = reports[0].k
    fig, ax = plt.subplots(figsize=(7, 4.5))

    xs = [r.n for r in reports]
    thm3 = [r.n - (k + 1) / 2 for r in reports]
    ax.plot(xs, thm3, label="any order", color="tab:green")

    cong = [r for r in reports if r.thm2_edge_bound_value is not None]
    if cong:
        ax.plot(
            [r.n for r in cong],
            [comb(r.n, 2) - r.thm2_edge_bound_value for r in cong],
            marker=".",
            linestyle="--",
            label=f"order = 1 mod {k - 1}",
            color="tab:orange",
        )

    adm = [r for r in reports if r.admissible]
    if adm:
        ax.plot(
            [r.n for r in adm],
            [r.evans_block_bound * comb(k, 2) for r in adm],
            marker="o",
            linestyle="",
            label="leave of a partial design",
            color="tab:blue",
        )

    if k == 3:
        en = [r for r in reports if r.e_of_n_value is not None]
        if en:
            ax.plot(
                [r.n for r in en],
                [r.e_of_n_value for r in en],
                marker="x",
                linestyle=":",
                label="exact threshold e(n)",
                color="tab:red",
            )

    ax.set_xlabel("n")
    ax.set_ylabel("complement edges tolerated")
    ax.set_title(f"k = {k} decomposition guarantees (asymptotic regimes)")
    ax.legend(loc="upper left", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
