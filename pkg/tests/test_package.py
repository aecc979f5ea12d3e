"""
Tests for the lazy top-level API.
"""

import pytest

import mopeclt


class TestLazyImports:
    """Public names resolve through module __getattr__."""

    def test_every_exported_name_resolves(self):
        for name in mopeclt.__all__:
            assert getattr(mopeclt, name) is not None

    def test_same_object_as_submodule(self):
        from mopeclt.core.lattice_path import step_line
        assert mopeclt.step_line is step_line

    def test_unknown_name(self):
        with pytest.raises(AttributeError):
            mopeclt.worm_gear

    def test_version(self):
        assert mopeclt.__version__ == "0.1.0"
