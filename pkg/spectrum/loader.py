"""
Spectrum file ingestion.

Reads the JSON spectrum schema:
    {"levels": [...], "generator": {"kind": "linear", "slope": s, "offset": d}, "name": "..."}
with an optional generator of kind "linear" or "power" ({"exponent": p, "scale": c}).
"""

import json
import logging
import numbers
from pathlib import Path
from typing import Optional, Union

from errors import SpectrumFileError
from spectrum.levels import LinearTail, PowerTail, Spectrum, TailRule, validate

logger = logging.getLogger(__name__)


def _number(obj: dict, key: str, context: str) -> float:
    value = obj.get(key)
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise SpectrumFileError(f"{context}: field '{key}' must be a number, got {value!r}")
    try:
        return float(value)
    except OverflowError as e:
        raise SpectrumFileError(f"{context}: field '{key}' does not fit in a double") from e


def parse_generator(obj: Optional[dict]) -> Optional[TailRule]:
    """Build a tail rule from its JSON object (None passes through)."""
    if obj is None:
        return None
    if not isinstance(obj, dict):
        raise SpectrumFileError(f"generator must be an object, got {type(obj).__name__}")

    kind = obj.get('kind')
    if kind == 'linear':
        return LinearTail(slope=_number(obj, 'slope', 'linear generator'),
                          offset=_number(obj, 'offset', 'linear generator'))
    if kind == 'power':
        return PowerTail(exponent=_number(obj, 'exponent', 'power generator'),
                         scale=_number(obj, 'scale', 'power generator'))
    raise SpectrumFileError(f"Unknown generator kind: {kind!r}")


def spectrum_from_dict(data: dict, default_name: str = '') -> Spectrum:
    if not isinstance(data, dict):
        raise SpectrumFileError("Spectrum document must be a JSON object")
    levels = data.get('levels')
    if not isinstance(levels, list):
        raise SpectrumFileError("Spectrum document needs a 'levels' array")
    for value in levels:
        if isinstance(value, bool) or not isinstance(value, numbers.Real):
            raise SpectrumFileError(f"Level {value!r} is not a number")

    name = data.get('name', default_name)
    if not isinstance(name, str):
        raise SpectrumFileError("'name' must be a string")

    return validate(levels, parse_generator(data.get('generator')), name=name)


def load_spectrum(path: Union[str, Path]) -> Spectrum:
    """
    Load and validate a spectrum from a JSON file.

    Args:
        path: Path to the spectrum file.

    Returns:
        Validated Spectrum; its name defaults to the file stem.
    """
    path = Path(path)
    try:
        with open(path, 'r') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise SpectrumFileError(f"Invalid JSON in {path}: {e}") from e

    spectrum = spectrum_from_dict(data, default_name=path.stem)
    logger.info(f"Loaded spectrum '{spectrum.name}' from {path}")
    return spectrum
