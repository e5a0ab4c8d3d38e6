"""Command-line run configuration and verification reports."""

import hashlib
import json
import math
from typing import List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .fock import FockTruncation
from .grids import GridSpec
from .lattice import ModeLattice


class RunConfig(BaseModel):
    """Validated settings for one CLI invocation."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    mode_count: int = Field(default=1, ge=1, description="Number of bosonic modes")
    cutoff: int = Field(default=40, ge=0, description="Fock cutoff per mode")
    closed_form_tolerance: float = Field(default=1e-8, gt=0.0, description="Tolerance against closed forms")
    quantization_tolerance: float = Field(default=1e-6, gt=0.0, description="Tolerance for quantization round trips")

    grid_center_re: float = Field(default=0.0, description="Grid centre, real part")
    grid_center_im: float = Field(default=0.0, description="Grid centre, imaginary part")
    grid_half_width: float = Field(default=4.0, gt=0.0, description="Grid half width")
    grid_resolution: int = Field(default=81, ge=2, description="Grid points per axis")

    lattice_sites: int = Field(default=16, ge=1, description="Lattice sites L")
    lattice_spacing: float = Field(default=1.0, gt=0.0, description="Lattice spacing dx")
    lattice_dimension: int = Field(default=1, ge=1, le=3, description="Spatial dimensions")
    mass: float = Field(default=1.0, ge=0.0, description="Field mass")
    k_selection: str = Field(default="all", description="all, nonnegative, or comma-separated mode indices")

    output_format: Literal["csv", "json"] = Field(default="csv", description="Grid output format")
    seed: int = Field(default=0, ge=0, description="Seed for randomized suites")
    amplitude: float = Field(default=1.0, ge=0.0, description="Coherent amplitude scale used by the suites")
    workers: int = Field(default=1, ge=1, description="Threads for grid evaluation")

    @field_validator("k_selection")
    @classmethod
    def selection_must_be_known(cls, v):
        v = v.strip()
        if v in ("all", "nonnegative"):
            return v
        try:
            [int(part) for part in v.split(",")]
        except ValueError:
            raise ValueError(f"k_selection must be 'all', 'nonnegative' or integers like '1,-1', got {v!r}")
        return v

    def truncation(self, mode_count: Optional[int] = None) -> FockTruncation:
        return FockTruncation.uniform(mode_count or self.mode_count, self.cutoff)

    def grid_spec(self) -> GridSpec:
        return GridSpec(
            center=(self.grid_center_re, self.grid_center_im),
            half_width=self.grid_half_width,
            resolution=self.grid_resolution,
        )

    def lattice(self) -> ModeLattice:
        selection: Union[str, List[int]] = self.k_selection
        if selection not in ("all", "nonnegative"):
            selection = [int(part) for part in selection.split(",")]
        return ModeLattice(
            mass=self.mass,
            sites=self.lattice_sites,
            spacing=self.lattice_spacing,
            dimension=self.lattice_dimension,
            selection=selection,
        )

    def digest(self) -> str:
        """First 16 hex digits of the SHA-256 of the canonical JSON form."""
        canonical = json.dumps(self.model_dump(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]


def _json_number(value: float) -> Union[float, str]:
    return value if math.isfinite(value) else str(value)


class CheckCase(BaseModel):
    """Outcome of one verification case."""

    name: str = Field(..., description="Case identifier")
    status: Literal["pass", "fail"] = Field(..., description="Verdict")
    measured: float = Field(..., description="Measured deviation or value")
    tolerance: float = Field(..., description="Bound the measurement was held to")
    detail: Optional[str] = Field(default=None, description="Diagnostics for failures and warnings")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        data = {
            "name": self.name,
            "status": self.status,
            "measured": _json_number(self.measured),
            "tolerance": _json_number(self.tolerance),
        }
        if self.detail:
            data["detail"] = self.detail
        return data


class CheckReport(BaseModel):
    """Machine-readable result of a verification suite."""

    suite: str = Field(..., description="Suite name")
    cases: List[CheckCase] = Field(default_factory=list, description="Case outcomes in execution order")
    seed: int = Field(..., description="Seed the randomized cases used")
    config_digest: str = Field(..., description="Digest of the resolved configuration")

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    @property
    def failures(self) -> List[CheckCase]:
        return [case for case in self.cases if not case.passed]

    def to_json(self) -> str:
        data = {
            "suite": self.suite,
            "cases": [case.to_dict() for case in self.cases],
            "seed": self.seed,
            "config_digest": self.config_digest,
        }
        return json.dumps(data, sort_keys=True, indent=2)
