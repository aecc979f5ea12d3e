"""
CSV and JSON writers.

All files are written atomically: content goes to a temporary file in the
target directory which is then renamed over the destination. Floats are
formatted with 17 significant digits so identical runs produce identical
bytes.
"""

import csv
import io
import json
import logging
import math
import os
import tempfile
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence, Union

import numpy as np

from .. import constants

logger = logging.getLogger(__name__)


def format_float(value: Optional[float]) -> str:
    """Round-trip safe text form of a float; blank for None."""
    if value is None:
        return ""
    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return format(value, f".{constants.OUTPUT_FLOAT_DIGITS}g")


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_float(float(value))
    return str(value)


def atomic_write_text(filepath: Union[str, Path], text: str) -> Path:
    """Write text to filepath via a temporary file and rename."""
    filepath = Path(filepath)
    filepath.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{filepath.name}.", dir=filepath.parent)
    try:
        with os.fdopen(fd, 'w', newline='') as f:
            f.write(text)
        os.replace(tmp_name, filepath)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    logger.info(f"Wrote {filepath}")
    return filepath


def write_csv(filepath: Union[str, Path], header: Sequence[str],
              rows: Iterable[Sequence[Any]]) -> Path:
    """
    Write an RFC-4180 CSV file atomically.

    Args:
        filepath: Destination file
        header: Column names
        rows: Row values; floats use 17 significant digits, None is blank

    Returns:
        The destination path
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n", quoting=csv.QUOTE_MINIMAL)
    writer.writerow(list(header))
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return atomic_write_text(filepath, buffer.getvalue())


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        value = float(obj)
        if math.isfinite(value):
            return value
        return format_float(value)
    if hasattr(obj, 'value'):  # Enum
        return obj.value
    return obj


def save_json_report(data: Any, filepath: Union[str, Path]) -> Path:
    """Write a JSON report atomically with sorted keys and indent=2."""
    text = json.dumps(_jsonable(data), indent=2, sort_keys=True) + "\n"
    return atomic_write_text(filepath, text)


def dump_matrix_window(matrix: np.ndarray, filepath: Union[str, Path], i0: int, i1: int,
                       j0: int, j1: int) -> Path:
    """
    Dump rows i0..i1 and columns j0..j1 (inclusive) of a dense array to CSV.

    One line per cell: row, col, value.
    """
    rows = []
    for i in range(i0, i1 + 1):
        for j in range(j0, j1 + 1):
            rows.append((i, j, float(matrix[i - i0, j - j0])))
    return write_csv(filepath, ("row", "col", "value"), rows)
