"""Per-mode complex amplitude vectors."""

from typing import Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator


def as_complex_vector(value) -> np.ndarray:
    """Coerce scalars and sequences to a read-only finite complex vector."""
    array = np.atleast_1d(np.array(value, dtype=complex))
    if array.ndim != 1:
        raise ValueError(f"Expected a 1-D amplitude vector, got shape {array.shape}")
    if array.size == 0:
        raise ValueError("Amplitude vectors need at least one mode")
    if not np.all(np.isfinite(array)):
        raise ValueError("Amplitudes must be finite")
    array.setflags(write=False)
    return array


class CoherentAmplitudes(BaseModel):
    """One complex amplitude per mode: coherent labels alpha and displacement arguments xi."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    alpha: np.ndarray = Field(..., description="Complex amplitude per mode")

    @field_validator("alpha", mode="before")
    @classmethod
    def _vector(cls, v):
        return as_complex_vector(v)

    @classmethod
    def coerce(cls, value: Union["CoherentAmplitudes", "PhasePoint", complex, Sequence[complex], np.ndarray]) -> "CoherentAmplitudes":
        if isinstance(value, CoherentAmplitudes):
            return value
        if isinstance(value, PhasePoint):
            return cls(alpha=value.z)
        return cls(alpha=value)

    @classmethod
    def zeros(cls, mode_count: int) -> "CoherentAmplitudes":
        return cls(alpha=np.zeros(mode_count, dtype=complex))

    @property
    def mode_count(self) -> int:
        return int(self.alpha.size)

    @property
    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.alpha) ** 2))

    def __len__(self) -> int:
        return self.mode_count

    def __neg__(self) -> "CoherentAmplitudes":
        return CoherentAmplitudes(alpha=-self.alpha)

    def __add__(self, other) -> "CoherentAmplitudes":
        return CoherentAmplitudes(alpha=self.alpha + CoherentAmplitudes.coerce(other).alpha)

    def __sub__(self, other) -> "CoherentAmplitudes":
        return CoherentAmplitudes(alpha=self.alpha - CoherentAmplitudes.coerce(other).alpha)


class PhasePoint(BaseModel):
    """Evaluation point of symbols: a_j = z_j and a*_j = conj(z_j)."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    z: np.ndarray = Field(..., description="Complex coordinate per mode")

    @field_validator("z", mode="before")
    @classmethod
    def _vector(cls, v):
        return as_complex_vector(v)

    @property
    def mode_count(self) -> int:
        return int(self.z.size)

    @classmethod
    def from_canonical(cls, q, p, omega) -> "PhasePoint":
        """Invert Q = (a + a*)/sqrt(2w), P = i sqrt(w/2)(a* - a)."""
        q, p, omega = (np.atleast_1d(np.asarray(x, dtype=float)) for x in (q, p, omega))
        return cls(z=(omega * q + 1j * p) / np.sqrt(2.0 * omega))

    def to_canonical(self, omega) -> Tuple[np.ndarray, np.ndarray]:
        omega = np.atleast_1d(np.asarray(omega, dtype=float))
        q = np.sqrt(2.0 / omega) * self.z.real
        p = np.sqrt(2.0 * omega) * self.z.imag
        return q, p
