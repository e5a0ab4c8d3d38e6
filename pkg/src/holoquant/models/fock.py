"""Truncated multimode Fock spaces, dense operators and state vectors."""

import json
from typing import Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..config import global_config
from ..exceptions import DimensionError, TruncationLimitError


class FockTruncation(BaseModel):
    """Per-mode occupation cutoffs N_j (inclusive); mode j has dimension N_j + 1."""

    model_config = ConfigDict(frozen=True)

    cutoffs: Tuple[int, ...] = Field(..., min_length=1, description="Maximum occupation per mode")

    @field_validator("cutoffs")
    @classmethod
    def cutoffs_must_be_non_negative(cls, v):
        if any(n < 0 for n in v):
            raise ValueError(f"Cutoffs must be non-negative, got {v}")
        return v

    @model_validator(mode="after")
    def dimension_within_cap(self):
        if self.dimension > global_config.max_dimension:
            raise TruncationLimitError(
                f"Total Fock dimension {self.dimension} for cutoffs {self.cutoffs} "
                f"exceeds the configured cap {global_config.max_dimension}"
            )
        return self

    @classmethod
    def uniform(cls, mode_count: int, cutoff: int) -> "FockTruncation":
        return cls(cutoffs=(int(cutoff),) * int(mode_count))

    @property
    def mode_count(self) -> int:
        return len(self.cutoffs)

    @property
    def dims(self) -> Tuple[int, ...]:
        return tuple(n + 1 for n in self.cutoffs)

    @property
    def dimension(self) -> int:
        return int(np.prod(self.dims))

    def occupations(self) -> np.ndarray:
        """Occupation tuples of the basis, shape (dimension, mode_count), row-major with mode 0 slowest."""
        return np.indices(self.dims).reshape(self.mode_count, -1).T

    def total_occupation(self) -> np.ndarray:
        return self.occupations().sum(axis=1)

    def index_of(self, occupations: Sequence[int]) -> int:
        occupations = tuple(int(n) for n in occupations)
        if len(occupations) != self.mode_count:
            raise DimensionError(
                f"Expected {self.mode_count} occupation numbers, got {len(occupations)}"
            )
        if any(not 0 <= n <= c for n, c in zip(occupations, self.cutoffs)):
            raise DimensionError(f"Occupations {occupations} outside cutoffs {self.cutoffs}")
        return int(np.ravel_multi_index(occupations, self.dims))


def _read_only(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


class FockOp(BaseModel):
    """Dense complex matrix over the tensor-product Fock basis."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    truncation: FockTruncation = Field(..., description="Truncated space the operator acts on")
    matrix: np.ndarray = Field(..., description="Square complex matrix in row-major mode ordering")

    @field_validator("matrix", mode="before")
    @classmethod
    def _complex_matrix(cls, v):
        return _read_only(np.array(v, dtype=complex))

    @model_validator(mode="after")
    def _square_with_truncation_dimension(self):
        expected = (self.truncation.dimension,) * 2
        if self.matrix.shape != expected:
            raise DimensionError(
                f"Operator matrix has shape {self.matrix.shape}, truncation needs {expected}"
            )
        return self

    @classmethod
    def identity(cls, truncation: FockTruncation) -> "FockOp":
        return cls(truncation=truncation, matrix=np.eye(truncation.dimension, dtype=complex))

    @classmethod
    def projector(cls, state: "FockState") -> "FockOp":
        """|psi><psi| of a state vector."""
        v = state.vector
        return cls(truncation=state.truncation, matrix=np.outer(v, v.conj()))

    @property
    def dimension(self) -> int:
        return self.truncation.dimension

    def _same_space(self, other: "FockOp") -> None:
        if other.truncation != self.truncation:
            raise DimensionError(
                f"Operators live on different truncations: {self.truncation.cutoffs} "
                f"vs {other.truncation.cutoffs}"
            )

    def __matmul__(self, other: "FockOp") -> "FockOp":
        self._same_space(other)
        return FockOp(truncation=self.truncation, matrix=self.matrix @ other.matrix)

    def __add__(self, other: "FockOp") -> "FockOp":
        self._same_space(other)
        return FockOp(truncation=self.truncation, matrix=self.matrix + other.matrix)

    def __sub__(self, other: "FockOp") -> "FockOp":
        self._same_space(other)
        return FockOp(truncation=self.truncation, matrix=self.matrix - other.matrix)

    def __mul__(self, scalar: complex) -> "FockOp":
        return FockOp(truncation=self.truncation, matrix=self.matrix * complex(scalar))

    __rmul__ = __mul__

    def __neg__(self) -> "FockOp":
        return self * -1

    def dagger(self) -> "FockOp":
        return FockOp(truncation=self.truncation, matrix=self.matrix.conj().T)

    def is_hermitian(self, atol: float = 1e-10) -> bool:
        return bool(np.allclose(self.matrix, self.matrix.conj().T, rtol=0.0, atol=atol))

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def apply(self, state: "FockState") -> np.ndarray:
        if state.truncation != self.truncation:
            raise DimensionError("State and operator live on different truncations")
        return self.matrix @ state.vector

    def expectation(self, state: "FockState") -> complex:
        return complex(np.vdot(state.vector, self.apply(state)))

    def to_dict(self) -> dict:
        return {
            "cutoffs": list(self.truncation.cutoffs),
            "dimension": self.dimension,
            "entries": [[float(z.real), float(z.imag)] for z in self.matrix.ravel()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


class FockState(BaseModel):
    """State vector in a truncated Fock space plus the probability lost to the truncation."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    truncation: FockTruncation = Field(..., description="Truncated space of the vector")
    vector: np.ndarray = Field(..., description="Complex amplitudes over the Fock basis")
    tail: float = Field(default=0.0, ge=0.0, description="Norm squared missing from the truncated expansion")

    @field_validator("vector", mode="before")
    @classmethod
    def _complex_vector(cls, v):
        return _read_only(np.array(v, dtype=complex).ravel())

    @model_validator(mode="after")
    def _length_matches(self):
        if self.vector.size != self.truncation.dimension:
            raise DimensionError(
                f"State vector has {self.vector.size} entries, truncation needs {self.truncation.dimension}"
            )
        return self

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.vector))

    def normalized(self) -> "FockState":
        norm = self.norm
        if norm == 0.0:
            raise ValueError("Cannot normalize the zero vector")
        return FockState(truncation=self.truncation, vector=self.vector / norm, tail=self.tail)

    def overlap(self, other: "FockState") -> complex:
        """<self|other>."""
        if other.truncation != self.truncation:
            raise DimensionError("States live on different truncations")
        return complex(np.vdot(self.vector, other.vector))

    def density(self) -> FockOp:
        return FockOp.projector(self)

    def to_dict(self) -> dict:
        return {
            "cutoffs": list(self.truncation.cutoffs),
            "tail": self.tail,
            "amplitudes": [[float(z.real), float(z.imag)] for z in self.vector],
        }
