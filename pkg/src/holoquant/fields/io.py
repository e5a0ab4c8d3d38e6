"""Field configuration files: CSV with header `x,phi,varpi`."""

import io
import logging
import re
from pathlib import Path
from typing import Optional, Tuple, Union

import numpy as np
import pandas as pd

from ..exceptions import FieldFileError
from ..models.grids import FLOAT_FORMAT
from ..models.lattice import FieldConfig, ModeLattice

logger = logging.getLogger(__name__)

COLUMNS = ["x", "phi", "varpi"]
_PANDAS_LINE = re.compile(r"line (\d+)")


def parse_field_csv(text: str) -> Tuple[np.ndarray, FieldConfig]:
    """Parse field CSV text into site coordinates and a FieldConfig."""
    if not text.strip():
        raise FieldFileError("empty file", line=1)
    try:
        frame = pd.read_csv(
            io.StringIO(text), dtype=str, keep_default_na=False, skip_blank_lines=False
        )
    except pd.errors.ParserError as e:
        match = _PANDAS_LINE.search(str(e))
        raise FieldFileError(f"wrong number of fields ({e})", line=int(match.group(1)) if match else None) from e

    header = [str(c).strip() for c in frame.columns]
    if header != COLUMNS:
        raise FieldFileError(f"expected header {','.join(COLUMNS)}, got {','.join(header)}", line=1)
    if frame.empty:
        raise FieldFileError("no data rows", line=2)

    values = np.empty((len(frame), 3))
    for row, record in enumerate(frame.itertuples(index=False)):
        line = row + 2
        for col, (name, cell) in enumerate(zip(COLUMNS, record)):
            try:
                value = float(str(cell).strip())
            except ValueError:
                raise FieldFileError(f"column {name}: {cell!r} is not a number", line=line) from None
            if not np.isfinite(value):
                raise FieldFileError(f"column {name}: value must be finite", line=line)
            values[row, col] = value

    logger.debug("Read %d field samples", len(frame))
    return values[:, 0], FieldConfig(phi=values[:, 1], varpi=values[:, 2])


def read_field_csv(path: Union[str, Path]) -> Tuple[np.ndarray, FieldConfig]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise FieldFileError(f"cannot read {path}: {e}") from e
    return parse_field_csv(text)


def field_frame(cfg: FieldConfig, lat: Optional[ModeLattice] = None) -> pd.DataFrame:
    """x is the site coordinate in one dimension and the flat site index otherwise."""
    if lat is not None and lat.dimension == 1:
        x = lat.positions()[:, 0]
    else:
        x = np.arange(cfg.site_count, dtype=float)
    return pd.DataFrame({"x": x, "phi": cfg.phi, "varpi": cfg.varpi})


def write_field_csv(
    cfg: FieldConfig, lat: Optional[ModeLattice] = None, path: Union[str, Path, None] = None
) -> Optional[str]:
    frame = field_frame(cfg, lat)
    if path is None:
        buffer = io.StringIO()
        frame.to_csv(buffer, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
        return buffer.getvalue()
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    logger.info("Wrote %d field samples to %s", cfg.site_count, path)
    return None
