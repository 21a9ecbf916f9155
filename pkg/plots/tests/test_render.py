import csv

import pytest

from casimir_plots import ALL_IDS, RECIPES, SchemaError, extract_series, render
from casimir_plots.cli import main


def test_recipe_catalog_complete():
    assert set(ALL_IDS) == {
        "1a", "1b", "2a", "2b", "3a", "3b", "4a", "4b", "5", "6", "7", "8", "9",
    }
    assert len(ALL_IDS) == 13


def test_render_single_recipe(data_dir, tmp_path):
    written = render(RECIPES["1a"], data_dir, tmp_path)
    assert [p.name for p in written] == ["figure_1a.png", "figure_1a.svg"]
    for p in written:
        assert p.stat().st_size > 1000


def test_render_is_deterministic(data_dir, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for out in (a, b):
        render(RECIPES["4b"], data_dir, out)
    for name in ("figure_4b.png", "figure_4b.svg"):
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_missing_column_raises_named_error(data_dir, tmp_path):
    src = data_dir / "sweep_au-ni.csv"
    rows = list(csv.reader(src.open()))
    drop = rows[0].index("ratio_TM_evan")
    clipped = [[c for i, c in enumerate(row) if i != drop] for row in rows]
    bad_dir = tmp_path / "clipped"
    bad_dir.mkdir()
    with (bad_dir / "sweep_au-ni.csv").open("w", newline="") as fh:
        csv.writer(fh).writerows(clipped)
    with pytest.raises(SchemaError, match="ratio_TM_evan"):
        render(RECIPES["5"], bad_dir, tmp_path / "out")


def test_breakdownless_sweep_rejected_for_split_figures(data_dir, tmp_path):
    src = data_dir / "sweep_au-ni.csv"
    rows = list(csv.reader(src.open()))
    idx = rows[0].index("ratio_TE_evan")
    for row in rows[1:]:
        row[idx] = ""
    bad_dir = tmp_path / "empty_cells"
    bad_dir.mkdir()
    with (bad_dir / "sweep_au-ni.csv").open("w", newline="") as fh:
        csv.writer(fh).writerows(rows)
    with pytest.raises(SchemaError, match="ratio_TE_evan"):
        render(RECIPES["8"], bad_dir, tmp_path / "out")


def test_cli_single(data_dir, tmp_path, capsys):
    assert main(["3a", "--data-dir", str(data_dir), "--out-dir", str(tmp_path)]) == 0
    out = capsys.readouterr().out.strip().split("\n")
    assert len(out) == 2
    assert (tmp_path / "figure_3a.png").exists()


def test_cli_unknown_recipe(tmp_path, capsys):
    assert main(["99", "--data-dir", str(tmp_path), "--out-dir", str(tmp_path)]) == 2


def test_cli_missing_input_file(tmp_path, capsys):
    empty = tmp_path / "empty"
    empty.mkdir()
    assert main(["1a", "--data-dir", str(empty), "--out-dir", str(tmp_path)]) == 1
    assert "sweep_au-ni.csv" in capsys.readouterr().err


def test_series_filters_select_models(data_dir):
    recipe = RECIPES["1a"]
    xs_p, ys_p = extract_series(data_dir / recipe.csv_file, recipe, recipe.series[0])
    xs_d, ys_d = extract_series(data_dir / recipe.csv_file, recipe, recipe.series[1])
    assert xs_p == xs_d
    assert len(xs_p) >= 3
    assert ys_p != ys_d
