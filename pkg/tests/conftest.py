"""
Pytest configuration and shared fixtures for mopeclt tests.
"""

import json
import pytest
from pathlib import Path

from mopeclt.core.families import make_family, nevai_limits
from mopeclt.core.lattice_path import step_line
from mopeclt.core.symbol import RationalSymbol


@pytest.fixture
def hermite2():
    """Multiple Hermite, a=(1,-1), scaled by n=100."""
    return make_family("hermite", 2, n_scale=100, a=(1.0, -1.0))


@pytest.fixture
def hermite2_symbol(hermite2):
    """Limit symbol of hermite2 along nu=(1/2, 1/2): poles (1,-1), residues (1/2, 1/2)."""
    return nevai_limits(hermite2, (0.5, 0.5))


@pytest.fixture
def charlier_unscaled():
    """Unscaled Charlier, lambda=1, t=2, gamma=(0.5, 1)."""
    return make_family("charlier", 2, **{"lambda": 1.0, "t": 2.0, "gamma": (0.5, 1.0),
                                         "scaled": False})


@pytest.fixture
def krawtchouk_tiny():
    """Multiple Krawtchouk, p=(1/4, 1/2), t=2, two particles: support {0..3}."""
    return make_family("krawtchouk", 2, n_scale=2, t=2.0, p=(0.25, 0.5), scaled=False)


@pytest.fixture
def joukowski():
    """c(z) = z + 2/z (one weight, pole at 0, residue a=2)."""
    return RationalSymbol(poles=[0.0], residues=[2.0])


@pytest.fixture
def two_pole_symbol():
    """c(z) = z + 0.5/(z-1) + 0.25/(z+0.5)."""
    return RationalSymbol(poles=[1.0, -0.5], residues=[0.5, 0.25])


@pytest.fixture
def path2():
    """Step-line path in two dimensions, long enough for every test."""
    return step_line(2, 600)


@pytest.fixture
def hermite_config():
    """Run config for the multiple Hermite CLT example with f(x) = x^2."""
    return {
        "family": {"family": "hermite", "m": 2, "params": {"a": [1.0, -1.0]}},
        "path": {"kind": "step_line", "m": 2},
        "f": [0.0, 0.0, 1.0],
        "n_values": [20, 40],
        "m_max": 4,
    }


@pytest.fixture
def temp_config_file(tmp_path, hermite_config):
    """Write hermite_config to a temporary JSON file."""
    config_file = tmp_path / "run.json"
    with open(config_file, 'w') as f:
        json.dump(hermite_config, f)
    return config_file


@pytest.fixture
def oracle_config_file(tmp_path):
    """Run config for the tiny Krawtchouk oracle case."""
    config_file = tmp_path / "oracle.json"
    config_file.write_text(json.dumps({
        "family": {
            "family": "krawtchouk",
            "m": 2,
            "params": {"t": 2, "p": [0.25, 0.5], "scaled": False},
            "n_scale": 2,
        },
        "path": {"kind": "step_line", "m": 2},
        "f": [0.0, 1.0],
        "n_values": [2],
        "m_max": 3,
    }))
    return config_file
