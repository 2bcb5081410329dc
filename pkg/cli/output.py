"""
CSV/JSON emission. Every artifact goes to stdout or a file; logs go to stderr.
"""

import json
import logging
import sys
from pathlib import Path
from typing import Optional, Union

import pandas as pd

logger = logging.getLogger(__name__)


def render(data: Union[pd.DataFrame, dict], fmt: str) -> str:
    """Serialize a table or a report document."""
    if isinstance(data, pd.DataFrame):
        if fmt == 'csv':
            return data.to_csv(index=False, lineterminator='\n')
        return json.dumps(data.to_dict(orient='records'), indent=2, default=_jsonable) + '\n'

    if fmt == 'csv':
        # documents flatten to one key,value row each
        frame = pd.json_normalize(data, sep='.')
        return frame.T.reset_index().rename(columns={'index': 'key', 0: 'value'}).to_csv(
            index=False, lineterminator='\n')
    return json.dumps(data, indent=2, sort_keys=True, default=_jsonable) + '\n'


def _jsonable(value):
    if hasattr(value, 'item'):
        return value.item()
    if hasattr(value, 'value'):
        return value.value
    raise TypeError(f"Cannot serialize {type(value).__name__}")


def emit(data: Union[pd.DataFrame, dict], fmt: str, output: Optional[Path] = None) -> None:
    text = render(data, fmt)
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    output = Path(output)
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text)
    logger.info(f"Wrote {output}")
