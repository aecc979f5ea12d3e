"""
Tests for lattice path generation and admissibility.
"""

import numpy as np
import pytest

from mopeclt.core.lattice_path import (
    LatticePath,
    explicit_path,
    hermite_example_path,
    max_deviation,
    path_from_spec,
    ray_path,
    step_line,
    validate_path,
)
from mopeclt.exceptions import PathError
from mopeclt.io.loaders import PathSpec


class TestGenerators:
    """Worked path examples."""

    def test_step_line(self):
        path = step_line(2, 4)
        assert path.multi_indices.tolist() == [[0, 0], [1, 0], [1, 1], [2, 1], [2, 2]]
        np.testing.assert_array_equal(path.nu, [0.5, 0.5])

    def test_step_line_three_dimensions(self):
        path = step_line(3, 7)
        assert path.k(7).tolist() == [3, 2, 2]

    def test_ray_path(self):
        path = ray_path([1.0 / 3.0, 2.0 / 3.0], 6)
        assert path.steps.tolist() == [1, 0, 1, 1, 0, 1]
        assert path.k(6).tolist() == [2, 4]

    @pytest.mark.parametrize("nu", [
        (0.5, 0.5),
        (0.2, 0.8),
        (0.1, 0.3, 0.6),
        (0.25, 0.25, 0.25, 0.25),
    ])
    def test_ray_path_stays_close(self, nu):
        path = ray_path(nu, 500)
        assert max_deviation(path) <= len(nu)
        validate_path(path)

    @pytest.mark.slow
    @pytest.mark.parametrize("nu", [
        (0.5, 0.5),
        (1.0 / 3.0, 2.0 / 3.0),
        (0.1, 0.3, 0.6),
        (1.0 - 1.0 / np.sqrt(2.0), 1.0 / np.sqrt(2.0)),
    ])
    def test_ray_path_stays_close_on_long_paths(self, nu):
        """Test that the deviation bound holds out to N = 10^5."""
        path = ray_path(nu, 10 ** 5)
        assert path.length == 10 ** 5
        assert max_deviation(path) <= len(nu)

    @pytest.mark.parametrize("j,expected", [(0, [0, 0]), (2, [1, 1]), (5, [3, 2])])
    def test_hermite_example(self, j, expected):
        assert hermite_example_path(8).k(j).tolist() == expected

    def test_explicit_path_empirical_direction(self):
        path = explicit_path(2, [1, 2, 2])
        assert path.steps.tolist() == [0, 1, 1]
        np.testing.assert_allclose(path.nu, [1.0 / 3.0, 2.0 / 3.0])

    def test_path_from_spec(self):
        spec = PathSpec(kind="ray", m=2, nu=(0.25, 0.75))
        path = path_from_spec(spec, 8)
        assert path.k(8).tolist() == [2, 6]

    def test_explicit_spec_too_short(self):
        spec = PathSpec(kind="explicit", m=2, nu=(0.5, 0.5), steps=(1, 2))
        with pytest.raises(PathError):
            path_from_spec(spec, 5)


class TestLatticePath:
    """Invariants of the path object."""

    def test_total_degree_equals_index(self, path2):
        K = path2.multi_indices
        assert np.all(K.sum(axis=1) == np.arange(path2.length + 1))

    def test_step_out_of_range(self):
        with pytest.raises(PathError):
            LatticePath(2, np.array([0, 2]), np.array([0.5, 0.5]))

    def test_index_beyond_path(self):
        with pytest.raises(PathError):
            step_line(2, 3).k(4)

    def test_prefix_and_require(self):
        path = step_line(2, 10)
        assert path.prefix(4).length == 4
        path.require(10)
        with pytest.raises(PathError):
            path.require(11)

    def test_dict_uses_one_based_steps(self):
        data = step_line(2, 3).to_dict()
        assert data["steps"] == [1, 2, 1]
        restored = LatticePath.from_dict(data)
        assert restored.steps.tolist() == [0, 1, 0]
        assert restored.m == 2


class TestValidation:
    """Admissibility checks."""

    def test_direction_missed(self):
        path = explicit_path(2, [1, 1, 1, 1, 1, 1], nu=(0.5, 0.5))
        with pytest.raises(PathError, match="misses nu"):
            validate_path(path)

    def test_custom_tolerance(self):
        path = explicit_path(2, [1, 1, 1, 1, 1, 1], nu=(0.5, 0.5))
        validate_path(path, tolerance=0.6)

    def test_bad_direction(self):
        with pytest.raises(PathError):
            ray_path([0.5, 0.6], 10)
        with pytest.raises(PathError):
            ray_path([-0.5, 1.5], 10)
