"""Batch figure rendering for casimir-plates sweep CSV files."""

from .recipes import ALL_IDS, RECIPES, FigureRecipe, Series
from .render import SchemaError, extract_series, read_csv, render

__version__ = "0.1.0"

__all__ = [
    "ALL_IDS",
    "RECIPES",
    "FigureRecipe",
    "Series",
    "SchemaError",
    "extract_series",
    "read_csv",
    "render",
    "__version__",
]
