import os
import shutil
import subprocess
import sys

import pytest

# the data fixtures drive the casimir-plates CLI (the producing package's
# public interface); a denser grid can be requested for the full figures
GRID_POINTS = int(os.environ.get("CASIMIR_PLOTS_GRID_POINTS", "5"))


def _cli(*args):
    exe = shutil.which("casimir-plates")
    cmd = [exe] if exe else [sys.executable, "-m", "casimir_plates.cli"]
    proc = subprocess.run(
        [*cmd, *args], capture_output=True, text=True, timeout=3600
    )
    if proc.returncode != 0:
        raise RuntimeError(
            f"casimir-plates {' '.join(args)} failed "
            f"(rc={proc.returncode}):\n{proc.stderr}"
        )
    return proc


@pytest.fixture(scope="session")
def data_dir(tmp_path_factory):
    """Standard-shape sweep and response CSVs produced by the CLI."""
    out = tmp_path_factory.mktemp("figure_data")
    common = [
        "--a-min-um", "0.5", "--a-max-um", "6", "--a-count", str(GRID_POINTS),
        "--spacing", "log", "--rel-tol", "1e-6", "--tail-tol", "1e-7",
    ]
    _cli("sweep", "--scenario", "au-ni", "--model", "both", "--breakdown",
         *common, "--output", str(out / "sweep_au-ni.csv"))
    _cli("sweep", "--scenario", "ni-ni", "--model", "both", "--breakdown",
         *common, "--output", str(out / "sweep_ni-ni.csv"))
    _cli("sweep", "--scenario", "au-au", "--model", "drude", "--breakdown",
         *common, "--output", str(out / "sweep_au-au.csv"))
    _cli("response", "--material", "au", "--material", "ni",
         "--omega-count", "120", "--output", str(out / "response.csv"))
    return out
