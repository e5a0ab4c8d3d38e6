"""Single-mode evaluation grids and their exports."""

import io
import json
from typing import Any, Dict, Optional, Tuple

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

FLOAT_FORMAT = "%.17g"


class GridSpec(BaseModel):
    """Square raster of complex amplitudes centred on `center`."""

    model_config = ConfigDict(frozen=True)

    center: Tuple[float, float] = Field(default=(0.0, 0.0), description="(Re, Im) of the grid centre")
    half_width: float = Field(default=4.0, gt=0.0, description="Half side length in amplitude units")
    resolution: int = Field(default=81, ge=2, description="Points per axis")

    def re_axis(self) -> np.ndarray:
        return np.linspace(self.center[0] - self.half_width, self.center[0] + self.half_width, self.resolution)

    def im_axis(self) -> np.ndarray:
        return np.linspace(self.center[1] - self.half_width, self.center[1] + self.half_width, self.resolution)

    def points(self) -> np.ndarray:
        """Complex grid points, shape (resolution, resolution), indexed [re, im]."""
        re, im = np.meshgrid(self.re_axis(), self.im_axis(), indexing="ij")
        return re + 1j * im

    @property
    def cell_area(self) -> float:
        step = 2.0 * self.half_width / (self.resolution - 1)
        return step * step


class PhaseGrid(BaseModel):
    """Distribution values on a single-mode grid; values[i, j] sits at re_axis[i] + i*im_axis[j]."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    mode: int = Field(default=0, ge=0, description="Mode the grid belongs to")
    re_axis: np.ndarray = Field(..., description="Real-part axis, strictly increasing")
    im_axis: np.ndarray = Field(..., description="Imaginary-part axis, strictly increasing")
    values: np.ndarray = Field(..., description="Distribution values, shape (len(re_axis), len(im_axis))")
    order: str = Field(default="0", description="Ordering parameter s of the distribution")

    @field_validator("re_axis", "im_axis", mode="before")
    @classmethod
    def _axis(cls, v):
        axis = np.array(v, dtype=float).ravel()
        if axis.size < 2 or np.any(np.diff(axis) <= 0):
            raise ValueError("Grid axes need at least two strictly increasing points")
        axis.setflags(write=False)
        return axis

    @field_validator("values", mode="before")
    @classmethod
    def _values(cls, v):
        values = np.array(v, dtype=complex)
        if not np.all(np.isfinite(values)):
            raise ValueError("Grid values must be finite")
        values.setflags(write=False)
        return values

    @model_validator(mode="after")
    def _shape(self):
        expected = (self.re_axis.size, self.im_axis.size)
        if self.values.shape != expected:
            raise ValueError(f"Grid values have shape {self.values.shape}, axes need {expected}")
        return self

    @property
    def real_values(self) -> np.ndarray:
        return self.values.real

    @property
    def imaginary_residue(self) -> float:
        return float(np.max(np.abs(self.values.imag)))

    def _extreme(self, index: int) -> Tuple[float, complex]:
        i, j = np.unravel_index(index, self.values.shape)
        return float(self.values.real[i, j]), complex(self.re_axis[i], self.im_axis[j])

    def minimum(self) -> Tuple[float, complex]:
        """Smallest real value and where it occurs."""
        return self._extreme(int(np.argmin(self.values.real)))

    def maximum(self) -> Tuple[float, complex]:
        return self._extreme(int(np.argmax(self.values.real)))

    def quadrature_sum(self) -> float:
        """(dRe dIm / pi) * sum of values; about 1 for a normalized Husimi grid."""
        d_re = float(np.mean(np.diff(self.re_axis)))
        d_im = float(np.mean(np.diff(self.im_axis)))
        return float(d_re * d_im / np.pi * np.sum(self.values.real))

    def to_frame(self) -> pd.DataFrame:
        re, im = np.meshgrid(self.re_axis, self.im_axis, indexing="ij")
        return pd.DataFrame({"re": re.ravel(), "im": im.ravel(), "value": self.values.real.ravel()})

    def to_csv(self, path: Optional[str] = None) -> Optional[str]:
        """Write `re,im,value` rows (real part), row-major over the grid."""
        frame = self.to_frame()
        if path is None:
            buffer = io.StringIO()
            frame.to_csv(buffer, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
            return buffer.getvalue()
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
        return None

    def to_dict(self, metadata: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        minimum, at_min = self.minimum()
        maximum, at_max = self.maximum()
        return {
            "mode": self.mode,
            "order": self.order,
            "re": self.re_axis.tolist(),
            "im": self.im_axis.tolist(),
            "value": self.values.real.tolist(),
            "imaginary_residue": self.imaginary_residue,
            "minimum": {"value": minimum, "re": at_min.real, "im": at_min.imag},
            "maximum": {"value": maximum, "re": at_max.real, "im": at_max.imag},
            "metadata": dict(metadata or {}),
        }

    def to_json(self, metadata: Optional[Dict[str, Any]] = None) -> str:
        return json.dumps(self.to_dict(metadata), sort_keys=True)
