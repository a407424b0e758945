"""Vector file reading and amplitude formatting"""

import math
from typing import List

import numpy as np
from numpy.typing import ArrayLike

from src.main.app.common.enums.enum import ConstantCode, ResponseCode
from src.main.app.common.util import bit_util
from src.main.app.common.util.matrix_util import ComplexVector, as_vector
from src.main.app.exception.domain import CommandException

MAX_DIGITS = 17


def parse_vector_text(text: str) -> ComplexVector:
    """
    Parse one "<re> <im>" amplitude per line; blank lines are skipped.

    Args:
        text: File contents.

    Returns:
        ComplexVector: The amplitudes in file order.

    Raises:
        CommandException: On a malformed line, a non-finite value or a length that is not
            a power of two.
    """
    values: List[complex] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        if len(tokens) != 2:
            raise CommandException.of(ResponseCode.VECTOR_FILE_ERROR, f"line {line_no}: expected '<re> <im>'")
        try:
            re, im = float(tokens[0]), float(tokens[1])
        except ValueError:
            raise CommandException.of(ResponseCode.VECTOR_FILE_ERROR, f"line {line_no}: '{raw.strip()}'")
        if not (math.isfinite(re) and math.isfinite(im)):
            raise CommandException.of(ResponseCode.VECTOR_FILE_ERROR, f"line {line_no}: non-finite amplitude")
        values.append(complex(re, im))
    if not bit_util.is_power_of_two(len(values)):
        raise CommandException.of(ResponseCode.NOT_POWER_OF_TWO, f"{len(values)} amplitudes")
    return np.array(values, dtype=np.complex128)


def read_vector_file(path: str) -> ComplexVector:
    try:
        with open(path, encoding=ConstantCode.UTF_8) as f:
            text = f.read()
    except OSError as e:
        raise CommandException.of(ResponseCode.VECTOR_FILE_ERROR, f"cannot read {path}: {e.strerror}")
    return parse_vector_text(text)


def format_amplitude(value: float, digits: int = MAX_DIGITS) -> str:
    """
    Shortest text that reads back to the same double, capped at the given significant digits.

    Zero prints as "0" and integral values drop their trailing ".0".
    """
    value = float(value) + 0.0
    if digits < MAX_DIGITS:
        return f"{value:.{digits}g}"
    text = repr(value)
    return text[:-2] if text.endswith(".0") else text


def format_vector(v: ArrayLike, digits: int = MAX_DIGITS) -> str:
    """Render amplitudes in the vector file format, LF-terminated."""
    v = as_vector(v)
    return "".join(f"{format_amplitude(z.real, digits)} {format_amplitude(z.imag, digits)}\n" for z in v)
