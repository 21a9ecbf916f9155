"""Figure recipes: which CSV files and columns each figure consumes.

Every recipe reads only columns from the casimir-plates CSV contracts
(sweep tables and the material-response table).  Force figures plot
ratios normalized to the high-temperature reference pressure against
separation; response figures plot permittivity/permeability components
against angular frequency.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Series:
    """One curve: CSV column drawn against the x column, with row filters."""

    column: str
    label: str
    filters: dict = field(default_factory=dict)   # column -> required value
    style: str = "solid"
    negate: bool = False     # plot -column (for magnitude views of negatives)


@dataclass(frozen=True)
class FigureRecipe:
    figure_id: str
    csv_file: str            # file name looked up inside --data-dir
    x_column: str
    series: tuple
    x_label: str
    y_label: str
    title: str
    x_scale: str = "linear"
    y_scale: str = "linear"


_SEP_X = "a_um"
_SEP_LABEL = "separation (um)"
_OMEGA_X = "omega_rad_s"
_OMEGA_LABEL = "angular frequency (rad/s)"


def _force_ratio_recipe(fid, csv_file, series, title, ylabel="force ratio"):
    return FigureRecipe(
        figure_id=fid,
        csv_file=csv_file,
        x_column=_SEP_X,
        series=tuple(series),
        x_label=_SEP_LABEL,
        y_label=ylabel,
        title=title,
    )


def _total_vs_models(fid, csv_file, pair):
    return _force_ratio_recipe(
        fid,
        csv_file,
        [
            Series("ratio_total", "plasma", {"model": "plasma"}),
            Series("ratio_total", "Drude", {"model": "drude"}, style="dashed"),
        ],
        f"{pair}: normalized Casimir pressure, Drude vs plasma",
        ylabel="F / F_ref",
    )


def _tm_te_vs_models(fid, csv_file, pair):
    return _force_ratio_recipe(
        fid,
        csv_file,
        [
            Series("ratio_TM", "TM plasma", {"model": "plasma"}),
            Series("ratio_TM", "TM Drude", {"model": "drude"}, style="dashed"),
            Series("ratio_TE", "TE plasma", {"model": "plasma"}),
            Series("ratio_TE", "TE Drude", {"model": "drude"}, style="dashed"),
        ],
        f"{pair}: TM and TE contributions, Drude vs plasma",
        ylabel="F_pol / F_ref",
    )


def _split_recipe(fid, csv_file, pair, pol):
    return _force_ratio_recipe(
        fid,
        csv_file,
        [
            Series(f"ratio_{pol}_evan", "evanescent", {"model": "drude"}, style="dashed"),
            Series(f"ratio_{pol}_prop", "propagating", {"model": "drude"}, style="dashed"),
            Series(f"ratio_{pol}", f"total {pol}", {"model": "drude"}),
        ],
        f"{pair}: evanescent/propagating split of the {pol} part (Drude)",
        ylabel=f"F_{pol} fractions / F_ref",
    )


RECIPES = {
    "1a": _total_vs_models("1a", "sweep_au-ni.csv", "Au-Ni"),
    "1b": _tm_te_vs_models("1b", "sweep_au-ni.csv", "Au-Ni"),
    "2a": _total_vs_models("2a", "sweep_ni-ni.csv", "Ni-Ni"),
    "2b": _tm_te_vs_models("2b", "sweep_ni-ni.csv", "Ni-Ni"),
    "3a": FigureRecipe(
        figure_id="3a",
        csv_file="response.csv",
        x_column=_OMEGA_X,
        series=(
            Series("abs_re_eps_drude", "|Re eps| Drude Au", {"material": "Au"}),
            Series("abs_re_eps_drude", "|Re eps| Drude Ni", {"material": "Ni"}),
            Series("abs_eps_plasma", "|eps| plasma Au", {"material": "Au"}, style="dashed"),
            Series("abs_eps_plasma", "|eps| plasma Ni", {"material": "Ni"}, style="dashed"),
        ),
        x_label=_OMEGA_LABEL,
        y_label="|Re eps|",
        title="Magnitude of the real part of the permittivity",
        x_scale="log",
        y_scale="log",
    ),
    "3b": FigureRecipe(
        figure_id="3b",
        csv_file="response.csv",
        x_column=_OMEGA_X,
        series=(
            Series("im_eps_drude", "Im eps Drude Au", {"material": "Au"}),
            Series("im_eps_drude", "Im eps Drude Ni", {"material": "Ni"}),
        ),
        x_label=_OMEGA_LABEL,
        y_label="Im eps",
        title="Imaginary part of the Drude permittivity",
        x_scale="log",
        y_scale="log",
    ),
    "4a": FigureRecipe(
        figure_id="4a",
        csv_file="response.csv",
        x_column=_OMEGA_X,
        series=(Series("re_mu", "Re mu (Ni)", {"material": "Ni"}),),
        x_label=_OMEGA_LABEL,
        y_label="Re mu",
        title="Real part of the Ni permeability",
        x_scale="log",
    ),
    "4b": FigureRecipe(
        figure_id="4b",
        csv_file="response.csv",
        x_column=_OMEGA_X,
        series=(Series("im_mu", "Im mu (Ni)", {"material": "Ni"}),),
        x_label=_OMEGA_LABEL,
        y_label="Im mu",
        title="Imaginary part of the Ni permeability",
        x_scale="log",
    ),
    "5": _split_recipe("5", "sweep_au-ni.csv", "Au-Ni", "TM"),
    "6": _split_recipe("6", "sweep_ni-ni.csv", "Ni-Ni", "TM"),
    "7": _split_recipe("7", "sweep_au-au.csv", "Au-Au", "TM"),
    "8": _split_recipe("8", "sweep_au-ni.csv", "Au-Ni", "TE"),
    "9": _split_recipe("9", "sweep_ni-ni.csv", "Ni-Ni", "TE"),
}

ALL_IDS = tuple(RECIPES)
