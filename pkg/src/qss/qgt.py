"""QGT text format.

::

    # optional comment lines
    3
    0 2 1
    2 1 0
    1 0 2

Only the multiplication table is stored.  Streams of records are separated
by a line holding exactly ``---``.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

import numpy as np

from .errors import InputError
from .qcore import Quasigroup, as_cells, from_mul_table

RECORD_SEPARATOR = "---"


class QGTRecord(NamedTuple):
    cells: np.ndarray
    comments: tuple[str, ...]


def format_table(cells) -> str:
    a = np.asarray(cells)
    lines = [str(a.shape[0])]
    lines.extend(" ".join(str(int(v)) for v in row) for row in a)
    return "\n".join(lines) + "\n"


def format_qgt(q: Quasigroup, comments: Iterable[str] = ()) -> str:
    head = "".join(f"# {c}\n" for c in comments)
    return head + format_table(q.mul)


def parse_table(text: str) -> QGTRecord:
    """Parse one record into a square integer array (not checked for Latinness)."""
    comments = []
    data = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(raw.rstrip("\n"))
            continue
        data.append(line)
    if not data:
        raise InputError("QGT record has no data lines")
    try:
        n = int(data[0])
    except ValueError:
        raise InputError(f"QGT header must be an integer order, got {data[0]!r}") from None
    if n < 1:
        raise InputError(f"QGT order must be >= 1, got {n}")
    if len(data) - 1 != n:
        raise InputError(f"QGT record declares order {n} but has {len(data) - 1} rows")
    rows = []
    for i, line in enumerate(data[1:]):
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise InputError(f"row {i} holds a non-integer entry: {line!r}") from None
        if len(row) != n:
            raise InputError(f"row {i} has {len(row)} entries, expected {n}")
        rows.append(row)
    return QGTRecord(as_cells(rows), tuple(comments))


def parse_qgt(text: str) -> Quasigroup:
    return from_mul_table(parse_table(text).cells)


def split_records(text: str) -> list[str]:
    records = []
    current: list[str] = []
    for line in text.splitlines():
        if line.strip() == RECORD_SEPARATOR:
            records.append("\n".join(current))
            current = []
        else:
            current.append(line)
    records.append("\n".join(current))
    # a trailing separator or blank tail is not a record
    return [r for r in records if any(l.strip() and not l.strip().startswith("#") for l in r.splitlines())]


def parse_stream(text: str) -> list[Quasigroup]:
    return [parse_qgt(r) for r in split_records(text)]


def format_stream(records: Iterable[str]) -> str:
    return f"{RECORD_SEPARATOR}\n".join(records)


def format_map(m: Iterable[int]) -> str:
    return " ".join(str(int(v)) for v in m)


def parse_map(line: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in line.split())
    except ValueError:
        raise InputError(f"map must be whitespace-separated integers, got {line!r}") from None
