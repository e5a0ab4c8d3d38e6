"""State specifications accepted by the quasiprobability front end."""

from typing import Annotated, List, Literal, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..exceptions import DimensionError
from .amplitudes import CoherentAmplitudes, as_complex_vector
from .fock import FockOp


class CoherentStateSpec(BaseModel):
    """Product coherent state |alpha_0, alpha_1, ...>."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["coherent"] = "coherent"
    amplitudes: CoherentAmplitudes = Field(..., description="Coherent amplitude per mode")

    @field_validator("amplitudes", mode="before")
    @classmethod
    def _coerce(cls, v):
        return CoherentAmplitudes.coerce(v)

    @property
    def mode_count(self) -> int:
        return self.amplitudes.mode_count


class FockStateSpec(BaseModel):
    """Number state |n_0, n_1, ...>."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["fock"] = "fock"
    occupations: Tuple[int, ...] = Field(..., min_length=1, description="Occupation number per mode")

    @field_validator("occupations")
    @classmethod
    def occupations_must_be_non_negative(cls, v):
        if any(n < 0 for n in v):
            raise ValueError(f"Occupation numbers must be non-negative, got {v}")
        return v

    @property
    def mode_count(self) -> int:
        return len(self.occupations)


class SuperpositionSpec(BaseModel):
    """Weighted sum of pure states; normalized when the density is built."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    kind: Literal["superposition"] = "superposition"
    weights: np.ndarray = Field(..., description="Complex weight per component")
    components: List["PureStateSpec"] = Field(..., min_length=1, description="Component states")

    @field_validator("weights", mode="before")
    @classmethod
    def _weights(cls, v):
        return as_complex_vector(v)

    @model_validator(mode="after")
    def _consistent(self):
        if self.weights.size != len(self.components):
            raise ValueError(
                f"{self.weights.size} weights given for {len(self.components)} components"
            )
        counts = {component.mode_count for component in self.components}
        if len(counts) != 1:
            raise DimensionError(f"Superposed states disagree on mode count: {sorted(counts)}")
        return self

    @property
    def mode_count(self) -> int:
        return self.components[0].mode_count


class DensityStateSpec(BaseModel):
    """Explicit density matrix."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["density"] = "density"
    rho: FockOp = Field(..., description="Density operator")

    @property
    def mode_count(self) -> int:
        return self.rho.truncation.mode_count


PureStateSpec = Annotated[
    Union[CoherentStateSpec, FockStateSpec, SuperpositionSpec], Field(discriminator="kind")
]
StateSpec = Annotated[
    Union[CoherentStateSpec, FockStateSpec, SuperpositionSpec, DensityStateSpec],
    Field(discriminator="kind"),
]

SuperpositionSpec.model_rebuild()


def vacuum_spec(mode_count: int = 1) -> FockStateSpec:
    return FockStateSpec(occupations=(0,) * mode_count)
