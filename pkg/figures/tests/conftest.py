import json
import subprocess
import sys

import pytest

TINY_CSV = """t,node,displacement,velocity
0,0,0,0.5
0,1,0,-0.5
1,0,0.42,0.1
1,1,-0.42,-0.1
2,0,0.8,-0.3
2,1,-0.8,0.3
"""


def run_netosc(config: dict, directory) -> str:
    """Produce a trajectory CSV through the producer's CLI."""
    config_path = directory / "config.json"
    config_path.write_text(json.dumps(config))
    result = subprocess.run(
        [sys.executable, "-m", "netosc", "run", "--config", str(config_path)],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0, result.stderr
    return config["output_path"]


@pytest.fixture(scope="session")
def impulse40_csvs(tmp_path_factory):
    """Fermion, boson and frame-shifted CSVs of the 40-node impulse run."""
    directory = tmp_path_factory.mktemp("impulse40")
    base = {
        "path_nodes": 40,
        "impulses": [[20, 0.5]],
        "t_max": 10,
        "dt_out": 0.5,
    }
    paths = {}
    for name, extra in (
        ("fermion", {"solver": "fermion"}),
        ("boson", {"solver": "boson"}),
        ("shifted", {"solver": "fermion", "shift_ref": 0}),
    ):
        out = directory / f"{name}.csv"
        run_netosc({**base, **extra, "output_path": str(out)}, directory)
        paths[name] = out
    return paths


@pytest.fixture
def tiny_csv(tmp_path):
    path = tmp_path / "tiny.csv"
    path.write_text(TINY_CSV)
    return path
