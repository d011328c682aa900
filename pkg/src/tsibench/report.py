"""Render aggregated scores as markdown tables and summary plots."""

from __future__ import annotations

from pathlib import Path

import pandas as pd
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .metrics import aggregate

_METRIC_COLS = ("precision", "recall", "f1")


def _mark_best(column: pd.Series) -> list[str]:
    """Bold the best value, underline the second best."""
    values = column.astype(float)
    order = values.sort_values(ascending=False)
    best = order.index[0] if len(order) else None
    second = order.index[1] if len(order) > 1 else None
    out = []
    for idx, v in values.items():
        text = f"{v:.2f}"
        if idx == best:
            text = f"**{text}**"
        elif idx == second:
            text = f"<u>{text}</u>"
        out.append(text)
    return out


def _dataset_sort_key(name: str) -> tuple:
    return tuple(name.split("-"))


def render_markdown(rows: list[dict]) -> str:
    """One table per dataset group: endpoints as rows, P/R/F1 + hallucination
    rate as columns, best bold and second best underlined."""
    table = aggregate(rows, group_by=["dataset", "endpoint"])
    lines: list[str] = ["# Scores", ""]
    for dataset in sorted(table["dataset"].unique(), key=_dataset_sort_key):
        part = table[table["dataset"] == dataset].set_index("endpoint").sort_index()
        lines.append(f"## {dataset}")
        lines.append("")
        lines.append("| Endpoint | n | P | R | F1 | Hallucination % |")
        lines.append("| --- | --- | --- | --- | --- | --- |")
        marked = {col: _mark_best(part[col]) for col in _METRIC_COLS}
        for pos, (endpoint, row) in enumerate(part.iterrows()):
            cells = [str(endpoint), str(int(row["n"]))]
            cells += [marked[col][pos] for col in _METRIC_COLS]
            cells.append(f"{row['hallucination_rate']:.2f}")
            lines.append("| " + " | ".join(cells) + " |")
        lines.append("")
    return "\n".join(lines)


def _save_png(fig: Figure, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, format="png", metadata={"Software": None})


def plot_f1_vs_variates(rows: list[dict], path: Path) -> bool:
    """Grouped bar chart of F1 against the variate count M; skipped (False)
    unless at least two M values are present."""
    frame = pd.DataFrame(rows)
    frame = frame[frame["M"] > 1]
    if frame.empty or frame["M"].nunique() < 2:
        return False
    table = frame.groupby(["endpoint", "M"])["f1"].mean().mul(100).reset_index()
    m_values = sorted(table["M"].unique())
    endpoints = sorted(table["endpoint"].unique())
    fig = Figure(figsize=(8, 4), dpi=100)
    FigureCanvasAgg(fig)
    ax = fig.add_subplot(111)
    width = 0.8 / len(endpoints)
    for i, endpoint in enumerate(endpoints):
        sub = table[table["endpoint"] == endpoint].set_index("M")["f1"]
        xs = [m_values.index(m) + i * width for m in sub.index]
        ax.bar(xs, sub.values, width=width, label=endpoint)
    ax.set_xticks([i + 0.4 - width / 2 for i in range(len(m_values))])
    ax.set_xticklabels([str(m) for m in m_values])
    ax.set_xlabel("variates M")
    ax.set_ylabel("F1 (%)")
    ax.legend(fontsize=8)
    _save_png(fig, path)
    return True


def plot_f1_vs_irregularity(rows: list[dict], path: Path) -> bool:
    """Line chart of F1 against the irregularity ratio r; skipped unless at
    least two r values are present."""
    frame = pd.DataFrame(rows)
    if frame.empty or frame["r"].nunique() < 2:
        return False
    table = frame.groupby(["endpoint", "r"])["f1"].mean().mul(100).reset_index()
    fig = Figure(figsize=(8, 4), dpi=100)
    FigureCanvasAgg(fig)
    ax = fig.add_subplot(111)
    for endpoint in sorted(table["endpoint"].unique()):
        sub = table[table["endpoint"] == endpoint].sort_values("r")
        ax.plot(sub["r"], sub["f1"], marker="o", label=endpoint)
    ax.set_xlabel("irregularity ratio r")
    ax.set_ylabel("F1 (%)")
    ax.legend(fontsize=8)
    _save_png(fig, path)
    return True
