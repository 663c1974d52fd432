"""Grid reports: a CSV of the closed-form extension data over a (genus,
twist-order) grid, with summary figures rendered alongside it."""

from __future__ import annotations

import csv
import os
from typing import Optional, Sequence

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .actions import classify_actions
from .groups import FiniteGroup
from .homology import GroupPresentation, h1_from_presentation
from .hyperbolic import hyperbolic_diagram
from .seifert import euler_number, seifert_invariants_closed_form
from .words import attaching_words

GRID_COLUMNS = ["g", "n", "euler_number", "h1", "h1_order",
                "axis_coefficient", "handle_coefficient",
                "unnormalized", "normalized",
                "hyperbolic_components", "hyperbolic_cover_degree"]


def grid_rows(g_values: Sequence[int], n_values: Sequence[int]) -> list:
    rows = []
    for g in sorted(g_values):
        for n in sorted(n_values):
            unnorm = seifert_invariants_closed_form(g, n)
            norm = seifert_invariants_closed_form(g, n, normalized=True)
            h1 = h1_from_presentation(
                GroupPresentation(g, tuple(attaching_words(g, n))))
            hyp = hyperbolic_diagram(g, n)
            rows.append({
                "g": g, "n": n,
                "euler_number": str(euler_number(norm)),
                "h1": h1.render(),
                "h1_order": h1.order(),
                "axis_coefficient": "%d/%d" % (1 - g * n, n),
                "handle_coefficient": "%d/%d" % (-n, n - 1),
                "unnormalized": unnorm.render(),
                "normalized": norm.render(),
                "hyperbolic_components": len(hyp.diagram.components),
                "hyperbolic_cover_degree": hyp.cover_degree,
            })
    return rows


def write_grid_csv(path: str, rows: list) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=GRID_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)


def render_grid_figures(outdir: str, rows: list) -> list:
    by_g = {}
    for row in rows:
        by_g.setdefault(row["g"], []).append(row)
    written = []

    fig, ax = plt.subplots(figsize=(6, 4))
    for g, grp in sorted(by_g.items()):
        ns = [r["n"] for r in grp]
        es = [eval_fraction(r["euler_number"]) for r in grp]
        ax.plot(ns, es, marker="o", label="g = %d" % g)
    ax.set_xlabel("twist order n")
    ax.set_ylabel("Euler number of the fibration")
    ax.set_title("Euler number -(g-1)/n of the closed extension")
    ax.axhline(0.0, color="gray", lw=0.5)
    ax.legend()
    fig.tight_layout()
    path = os.path.join(outdir, "euler_numbers.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(6, 4))
    for g, grp in sorted(by_g.items()):
        ns = [r["n"] for r in grp]
        orders = [r["h1_order"] for r in grp]
        ax.semilogy(ns, orders, marker="s", label="g = %d" % g)
    ax.set_xlabel("twist order n")
    ax.set_ylabel("|H1| of the closed extension")
    ax.set_title("First-homology order n^g (g-1)")
    ax.legend()
    fig.tight_layout()
    path = os.path.join(outdir, "h1_orders.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)
    return written


def eval_fraction(text: str) -> float:
    if "/" in text:
        num, den = text.split("/")
        return int(num) / int(den)
    return float(text)


def write_classification_csv(path: str, group: FiniteGroup, genus: int,
                             workers: int = 1) -> int:
    classes = classify_actions(group, genus, workers=workers)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["class", "representative", "orbit_size"])
        for k, cls in enumerate(classes, start=1):
            writer.writerow([k, " ".join(str(a) for a in cls.representative),
                             cls.orbit_size])
    return len(classes)


def run_report(outdir: str, g_values: Sequence[int], n_values: Sequence[int],
               group: Optional[FiniteGroup] = None, genus: Optional[int] = None,
               workers: int = 1) -> dict:
    os.makedirs(outdir, exist_ok=True)
    rows = grid_rows(g_values, n_values)
    csv_path = os.path.join(outdir, "seifert_grid.csv")
    write_grid_csv(csv_path, rows)
    written = [csv_path] + render_grid_figures(outdir, rows)
    result = {"rows": len(rows), "files": written}
    if group is not None and genus is not None:
        cls_path = os.path.join(outdir, "classification.csv")
        result["class_count"] = write_classification_csv(cls_path, group, genus,
                                                         workers=workers)
        written.append(cls_path)
    return result
