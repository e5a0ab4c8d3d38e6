"""Tests for amplitude, grid and report models."""

import json

import numpy as np
import pytest

from holoquant.models import CheckCase, CoherentAmplitudes, GridSpec, PhaseGrid, PhasePoint


class TestAmplitudes:
    def test_scalars_become_vectors(self):
        assert CoherentAmplitudes.coerce(0.5j).mode_count == 1
        assert CoherentAmplitudes.coerce([1, 2j]).norm_squared == pytest.approx(5.0)

    @pytest.mark.parametrize("value", [[], [[1, 2]], [np.inf]])
    def test_invalid_vectors(self, value):
        with pytest.raises(ValueError):
            CoherentAmplitudes(alpha=value)

    def test_vectors_are_read_only(self):
        amplitudes = CoherentAmplitudes(alpha=[1.0])
        with pytest.raises(ValueError):
            amplitudes.alpha[0] = 2.0

    def test_canonical_round_trip(self):
        omega = [0.5, 2.0]
        point = PhasePoint(z=[0.3 - 0.2j, 1.1j])
        q, p = point.to_canonical(omega)
        np.testing.assert_allclose(PhasePoint.from_canonical(q, p, omega).z, point.z)


class TestGrids:
    def test_axes_and_points(self):
        grid = GridSpec(center=(1.0, -1.0), half_width=1.0, resolution=3)
        np.testing.assert_allclose(grid.re_axis(), [0, 1, 2])
        assert grid.points()[2, 0] == 2 - 2j
        assert grid.cell_area == pytest.approx(1.0)

    def test_phase_grid_shape_is_checked(self):
        with pytest.raises(ValueError):
            PhaseGrid(re_axis=[0, 1], im_axis=[0, 1], values=np.zeros((2, 3)))

    def test_axes_must_increase(self):
        with pytest.raises(ValueError):
            PhaseGrid(re_axis=[1, 0], im_axis=[0, 1], values=np.zeros((2, 2)))

    def test_json_export(self):
        grid = PhaseGrid(re_axis=[0, 1], im_axis=[0, 1], values=[[0.0, 2.0], [-1.0, 0.5]], order="-1/2")
        data = json.loads(grid.to_json({"state": "vacuum"}))
        assert data["order"] == "-1/2"
        assert data["minimum"] == {"value": -1.0, "re": 1.0, "im": 0.0}
        assert data["maximum"]["im"] == 1.0
        assert data["metadata"] == {"state": "vacuum"}


class TestReports:
    def test_case_dict_omits_empty_detail(self):
        case = CheckCase(name="x", status="pass", measured=0.0, tolerance=1e-9)
        assert "detail" not in case.to_dict()
