"""Deterministic rendering of figure recipes from sweep CSV files."""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .recipes import FigureRecipe

# fixed style + salt so identical inputs give identical bytes
_STYLE = {
    "figure.figsize": (6.0, 4.2),
    "figure.dpi": 150,
    "font.size": 10,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "svg.hashsalt": "casimir-plots",
    "lines.linewidth": 1.4,
}


class SchemaError(RuntimeError):
    """CSV input does not provide a column a recipe needs."""


def read_csv(path: Path) -> tuple[list, list]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        rows = list(reader)
    if not rows:
        raise SchemaError(f"{path}: empty file")
    return rows[0], rows[1:]


def _column(header, rows, name, path):
    if name not in header:
        raise SchemaError(f"{path}: missing column {name!r}")
    idx = header.index(name)
    return [row[idx] for row in rows]


def extract_series(path: Path, recipe: FigureRecipe, series) -> tuple[list, list]:
    """x/y value pairs for one series, applying its row filters."""
    header, rows = read_csv(path)
    keep = rows
    for col, want in series.filters.items():
        vals = _column(header, keep, col, path)
        keep = [row for row, v in zip(keep, vals) if v == want]
    xs = [float(v) for v in _column(header, keep, recipe.x_column, path)]
    ys_raw = _column(header, keep, series.column, path)
    empty = [i for i, v in enumerate(ys_raw) if v == ""]
    if empty:
        raise SchemaError(
            f"{path}: column {series.column!r} has empty cells "
            f"(was the sweep produced with the breakdown enabled?)"
        )
    ys = [float(v) for v in ys_raw]
    if series.negate:
        ys = [-v for v in ys]
    return xs, ys


def render(recipe: FigureRecipe, data_dir: Path, out_dir: Path) -> list[Path]:
    """Render one recipe to PNG and SVG; returns the written paths."""
    data_dir, out_dir = Path(data_dir), Path(out_dir)
    src = data_dir / recipe.csv_file
    if not src.exists():
        raise SchemaError(f"missing input file {src}")
    out_dir.mkdir(parents=True, exist_ok=True)

    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        for s in recipe.series:
            xs, ys = extract_series(src, recipe, s)
            ax.plot(xs, ys, linestyle="--" if s.style == "dashed" else "-", label=s.label)
        ax.set_xscale(recipe.x_scale)
        ax.set_yscale(recipe.y_scale)
        ax.set_xlabel(recipe.x_label)
        ax.set_ylabel(recipe.y_label)
        ax.set_title(recipe.title)
        ax.legend(frameon=False)
        written = []
        for ext, meta in (
            ("png", {"Software": "casimir-plots"}),
            ("svg", {"Date": None}),
        ):
            path = out_dir / f"figure_{recipe.figure_id}.{ext}"
            fig.savefig(path, metadata=meta)
            written.append(path)
        plt.close(fig)
    return written
