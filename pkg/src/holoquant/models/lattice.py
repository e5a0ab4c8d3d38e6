"""Lattice description of a free scalar field and its mode data."""

import itertools
from typing import List, Literal, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..exceptions import ContractError, DimensionError

Selection = Union[Literal["all", "nonnegative"], List[Tuple[int, ...]]]


def centered_index(j: int, sites: int) -> int:
    """Map a Fourier index to the range -floor((L-1)/2) .. floor(L/2)."""
    j = j % sites
    return j - sites if j > sites // 2 else j


class ModeLattice(BaseModel):
    """
    Periodic lattice of L^d sites x_n = n*dx with the Fourier modes k_j = 2*pi*j/(L*dx).

    The selection picks which modes carry amplitudes: every lattice mode, the
    half-space with non-negative index, or an explicit list of integer indices.
    """

    model_config = ConfigDict(frozen=True)

    mass: float = Field(default=1.0, ge=0.0, description="Field mass m")
    sites: int = Field(default=16, ge=1, description="Sites per spatial direction L")
    spacing: float = Field(default=1.0, gt=0.0, description="Lattice spacing dx")
    dimension: int = Field(default=1, ge=1, le=3, description="Number of spatial directions d")
    selection: Selection = Field(default="all", description="Mode selection: all, nonnegative, or index list")

    @field_validator("selection", mode="before")
    @classmethod
    def _selection(cls, v):
        if isinstance(v, str):
            return v
        return [tuple(int(c) for c in (j if isinstance(j, (list, tuple)) else (j,))) for j in v]

    @model_validator(mode="after")
    def _modes_are_usable(self):
        if isinstance(self.selection, list) and any(len(j) != self.dimension for j in self.selection):
            raise DimensionError(f"Mode indices must have {self.dimension} component(s)")
        indices = self.mode_indices()
        if indices.shape[0] == 0:
            raise DimensionError("Mode selection is empty")
        if isinstance(self.selection, list):
            if len({tuple(row) for row in indices.tolist()}) != indices.shape[0]:
                raise DimensionError("Mode indices repeat modulo the lattice size")
        if self.mass == 0.0 and np.any(np.all(indices == 0, axis=1)):
            raise ContractError(
                "A massless field has omega = 0 at k = 0; the zero mode cannot be expanded. "
                "Use a positive mass or exclude the zero mode from the selection."
            )
        return self

    def mode_indices(self) -> np.ndarray:
        """Integer Fourier indices of the selected modes, shape (M, d)."""
        L, d = self.sites, self.dimension
        if isinstance(self.selection, list):
            return np.array(
                [[centered_index(c, L) for c in j] for j in self.selection], dtype=int
            ).reshape(-1, d)
        axis = sorted({centered_index(j, L) for j in range(L)})
        every = np.array(list(itertools.product(axis, repeat=d)), dtype=int).reshape(-1, d)
        if self.selection == "all":
            return every
        keep = []
        for row in every:
            nonzero = row[row != 0]
            if nonzero.size == 0 or nonzero[0] > 0:
                keep.append(row)
        return np.array(keep, dtype=int).reshape(-1, d)

    @property
    def mode_count(self) -> int:
        return int(self.mode_indices().shape[0])

    @property
    def site_count(self) -> int:
        return self.sites ** self.dimension

    @property
    def length(self) -> float:
        return self.sites * self.spacing

    @property
    def volume(self) -> float:
        return self.length ** self.dimension

    @property
    def cell_volume(self) -> float:
        return self.spacing ** self.dimension

    def k_vectors(self) -> np.ndarray:
        return 2.0 * np.pi * self.mode_indices() / self.length

    @property
    def k_values(self) -> np.ndarray:
        """Momenta of the selected modes; shape (M,) in one dimension, (M, d) otherwise."""
        k = self.k_vectors()
        return k[:, 0] if self.dimension == 1 else k

    @property
    def omega(self) -> np.ndarray:
        k = self.k_vectors()
        return np.sqrt(np.sum(k * k, axis=1) + self.mass ** 2)

    def positions(self) -> np.ndarray:
        """Site coordinates, shape (L^d, d), row-major over the directions."""
        grid = np.indices((self.sites,) * self.dimension).reshape(self.dimension, -1).T
        return grid * self.spacing

    def phases(self) -> np.ndarray:
        """E[j, n] = exp(-i k_j . x_n)."""
        return np.exp(-1j * self.k_vectors() @ self.positions().T)

    def covers_all_modes(self) -> bool:
        return self.mode_count == self.site_count


def _finite_real(v) -> np.ndarray:
    array = np.array(v, dtype=float).ravel()
    if not np.all(np.isfinite(array)):
        raise ValueError("Values must be finite")
    array.setflags(write=False)
    return array


class FieldConfig(BaseModel):
    """Field phi(x_n) and conjugate momentum varpi(x_n) on the lattice sites."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    phi: np.ndarray = Field(..., description="Field samples")
    varpi: np.ndarray = Field(..., description="Conjugate momentum samples")

    @field_validator("phi", "varpi", mode="before")
    @classmethod
    def _samples(cls, v):
        return _finite_real(v)

    @model_validator(mode="after")
    def _equal_lengths(self):
        if self.phi.size != self.varpi.size:
            raise DimensionError(f"phi has {self.phi.size} samples but varpi has {self.varpi.size}")
        return self

    @classmethod
    def zeros(cls, site_count: int) -> "FieldConfig":
        return cls(phi=np.zeros(site_count), varpi=np.zeros(site_count))

    @property
    def site_count(self) -> int:
        return int(self.phi.size)


class CanonicalModes(BaseModel):
    """Real canonical pairs (Q_j, P_j) with {Q_j, P_l} = delta_jl."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    Q: np.ndarray = Field(..., description="Canonical coordinates")
    P: np.ndarray = Field(..., description="Canonical momenta")

    @field_validator("Q", "P", mode="before")
    @classmethod
    def _values(cls, v):
        return _finite_real(v)

    @model_validator(mode="after")
    def _equal_lengths(self):
        if self.Q.size != self.P.size:
            raise DimensionError(f"Q has {self.Q.size} entries but P has {self.P.size}")
        return self

    @property
    def mode_count(self) -> int:
        return int(self.Q.size)
