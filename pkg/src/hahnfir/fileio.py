"""CSV/JSON readers and writers for coefficient vectors, signals and responses."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .lowpass import Signal
from .shmaliy import CoefficientVector
from .transfer import RESPONSE_HEADER


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


def _csv_text(rows, comments=()) -> str:
    buf = io.StringIO()
    for c in comments:
        buf.write(f"# {c}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


def coefficients_csv(vec: CoefficientVector) -> str:
    rows = [["n", "numerator", "denominator", "float64"]]
    rows += [[n, t.numerator, t.denominator, repr(float(t))] for n, t in enumerate(vec.taps)]
    return _csv_text(rows)


def coefficients_json(vec: CoefficientVector, **extra) -> str:
    return dump_json({**vec.to_json(), **extra})


def response_csv(samples) -> str:
    return _csv_text([RESPONSE_HEADER] + [s.csv_row() for s in samples])


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def format_value(v) -> str:
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, int):
        return str(v)
    return repr(float(v))


def signal_csv(signal: Signal, comments=()) -> str:
    rows = [["index", "value"]]
    rows += [[signal.origin + i, format_value(v)] for i, v in enumerate(signal.samples)]
    return _csv_text(rows, comments)


def _parse_number(text: str, exact: bool, line: int):
    text = text.strip()
    try:
        if exact:
            return Fraction(text)
        v = float(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(line, f"cannot parse value {text!r}") from None
    if v != v or v in (float("inf"), float("-inf")):
        raise ParseError(line, "non-finite value")
    return v


def parse_signal(text: str, exact: bool = False, period: float = 1.0) -> Signal:
    """Read ``index,value`` CSV or a single column of values.

    Lines starting with ``#`` and blank lines are ignored; a first row whose
    cells are not numbers is treated as a header.
    """
    values = []
    origin = None
    expected_index = None
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cells = next(csv.reader([line]))
        if not header_seen and not values:
            header_seen = True
            if cells[-1].strip().lower() in ("value", "values", "y", "signal"):
                continue
        if len(cells) == 1:
            values.append(_parse_number(cells[0], exact, lineno))
        elif len(cells) == 2:
            try:
                idx = int(cells[0])
            except ValueError:
                raise ParseError(lineno, f"bad index {cells[0]!r}") from None
            if origin is None:
                origin = idx
                expected_index = idx
            if idx != expected_index:
                raise ParseError(lineno, f"index {idx} breaks the consecutive sequence")
            expected_index += 1
            values.append(_parse_number(cells[1], exact, lineno))
        else:
            raise ParseError(lineno, f"expected 1 or 2 columns, got {len(cells)}")
    if not values:
        raise ParseError(0, "no samples found")
    return Signal(values, origin or 0, period)
