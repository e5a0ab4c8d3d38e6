"""Single-mode phase-space grids of s-ordered distributions."""

import logging
import warnings
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from ..algebra.polysymbol import SOrder
from ..algebra.star import OrderLike
from ..config import global_config
from ..exceptions import ContractError, CoverageWarning, TailDominanceWarning
from ..fock.operators import coherent_coefficients
from ..models.fock import FockOp
from ..models.grids import GridSpec, PhaseGrid
from .wigner import _check_order, series_details, validate_density

logger = logging.getLogger(__name__)


def _require_single_mode(rho: FockOp) -> None:
    if rho.truncation.mode_count != 1:
        raise ContractError(
            f"Grids are single-mode; state has {rho.truncation.mode_count} modes"
        )


def distribution_grid(
    rho: FockOp,
    grid: GridSpec,
    s: OrderLike = 0,
    workers: int = 1,
    progress: bool = False,
) -> PhaseGrid:
    """
    Evaluate the s-ordered distribution of a single-mode state on a square grid.

    Rows (fixed real part) are independent and may be spread over `workers` threads.
    Tail dominance is reported once for the whole grid.
    """
    _require_single_mode(rho)
    s = _check_order(s)
    validate_density(rho, check_positive=False)
    points = grid.points()

    def row(i: int) -> Tuple[np.ndarray, float]:
        results = [series_details(rho, z, s, warn=False) for z in points[i]]
        return np.array([value for value, _ in results]), max(fraction for _, fraction in results)

    rows: List[np.ndarray] = [np.empty(0)] * grid.resolution
    worst = 0.0
    with tqdm(total=grid.resolution, desc="Grid rows", disable=not progress) as pbar:
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                for i, (values, fraction) in enumerate(pool.map(row, range(grid.resolution))):
                    rows[i], worst = values, max(worst, fraction)
                    pbar.update(1)
        else:
            for i in range(grid.resolution):
                rows[i], fraction = row(i)
                worst = max(worst, fraction)
                pbar.update(1)

    if worst > global_config.tail_fraction:
        message = (
            f"Top occupation levels carry up to {worst:.3g} of the displaced "
            f"trace mass on this grid; cutoff {rho.truncation.cutoffs[0]} is too small"
        )
        logger.warning(message)
        warnings.warn(message, TailDominanceWarning, stacklevel=2)
    logger.info("Evaluated %dx%d grid at s = %s", grid.resolution, grid.resolution, s)
    return PhaseGrid(
        re_axis=grid.re_axis(),
        im_axis=grid.im_axis(),
        values=np.vstack(rows),
        order=str(SOrder(s)),
    )


def wigner_grid(rho: FockOp, grid: GridSpec, workers: int = 1, progress: bool = False) -> PhaseGrid:
    return distribution_grid(rho, grid, 0, workers=workers, progress=progress)


def husimi_grid(rho: FockOp, grid: GridSpec, coverage_tolerance: Optional[float] = None) -> PhaseGrid:
    """
    <xi|rho|xi> on the grid, vectorized over points.

    Warns with CoverageWarning when the grid misses more than `coverage_tolerance`
    of the unit quadrature sum.
    """
    _require_single_mode(rho)
    validate_density(rho, check_positive=False)
    coverage_tolerance = global_config.coverage_tolerance if coverage_tolerance is None else coverage_tolerance
    points = grid.points().ravel()
    cutoff = rho.truncation.cutoffs[0]
    C = np.array([coherent_coefficients(z, cutoff) for z in points])
    values = np.einsum("pi,ij,pj->p", C.conj(), rho.matrix, C).reshape(grid.resolution, grid.resolution)
    result = PhaseGrid(re_axis=grid.re_axis(), im_axis=grid.im_axis(), values=values, order="-1")

    total = result.quadrature_sum()
    if total < 1.0 - coverage_tolerance:
        message = f"Husimi grid quadrature sum {total:.4g} < 1 - {coverage_tolerance:g}; widen the grid"
        logger.warning(message)
        warnings.warn(message, CoverageWarning, stacklevel=2)
    return result
