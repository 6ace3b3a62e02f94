"""CSV and JSON emitters for distributions, amplitude tables and curves"""
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Union

import numpy as np
import pandas as pd

logger = logging.getLogger(__name__)

FLOAT_FORMAT = '%.17g'


def to_csv_text(frame: pd.DataFrame) -> str:
    """Render a frame as CSV with 17 significant digits and no index"""
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator='\n')


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    return value


def to_json_text(payload: Dict[str, Any]) -> str:
    """Render a mapping as indented JSON; floats keep full repr precision"""
    return json.dumps(_jsonable(payload), indent=2)


def write_output(text: str, out: Optional[Union[str, Path]] = None) -> None:
    """Write rendered text to a file, or stdout when no path is given"""
    if out is None or str(out) == '-':
        sys.stdout.write(text)
        return
    path = Path(out)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='') as f:
        f.write(text)
    logger.info(f"Wrote {path}")


def write_frame(frame: pd.DataFrame, out: Optional[Union[str, Path]] = None) -> None:
    write_output(to_csv_text(frame), out)


def write_json(payload: Dict[str, Any], out: Optional[Union[str, Path]] = None) -> None:
    write_output(to_json_text(payload) + '\n', out)
