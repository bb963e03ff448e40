"""Backtracking enumeration of Latin squares, i.e. of all quasigroups on 0..n-1.

Cells are filled in row-major order and each cell tries its values in
increasing order, so squares come out in lexicographic order of their
flattened tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import config
from .errors import BudgetExceeded, InputError
from .qcore import Quasigroup


@dataclass(frozen=True)
class EnumerationConfig:
    order: int
    reduced: bool = False
    limit: int | None = None

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 1:
            raise InputError(f"order must be a positive integer, got {self.order!r}")
        if self.limit is not None and self.limit < 1:
            raise InputError(f"limit must be >= 1, got {self.limit}")


def _check_order(cfg: EnumerationConfig, max_order: int | None) -> None:
    cap = config.MAX_ENUM_ORDER if max_order is None else max_order
    if cfg.order > cap:
        raise BudgetExceeded(f"order {cfg.order} exceeds the enumeration cap {cap}")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _prefill(n: int, reduced: bool):
    """Initial grid plus row/column masks; reduced squares fix row 0 and column 0."""
    grid = [-1] * (n * n)
    rows = [0] * n
    cols = [0] * n
    if reduced:
        for j in range(n):
            grid[j] = j
            rows[0] |= 1 << j
            cols[j] |= 1 << j
        for i in range(1, n):
            grid[i * n] = i
            rows[i] |= 1 << i
            cols[0] |= 1 << i
    free = [k for k in range(n * n) if grid[k] < 0]
    return grid, rows, cols, free


def _squares(n: int, reduced: bool) -> Iterator[list[int]]:
    grid, rows, cols, free = _prefill(n, reduced)
    full = (1 << n) - 1
    depth = len(free)
    if depth == 0:
        yield list(grid)
        return
    # explicit stack of candidate iterators keeps deep recursion out of Python frames
    stack: list[Iterator[int]] = []
    k = free[0]
    stack.append(_bits(full & ~(rows[k // n] | cols[k % n])))
    while stack:
        level = len(stack) - 1
        k = free[level]
        i, j = divmod(k, n)
        if grid[k] >= 0:
            v = grid[k]
            rows[i] ^= 1 << v
            cols[j] ^= 1 << v
            grid[k] = -1
        v = next(stack[-1], None)
        if v is None:
            stack.pop()
            continue
        grid[k] = v
        rows[i] |= 1 << v
        cols[j] |= 1 << v
        if level + 1 == depth:
            yield list(grid)
            continue
        k2 = free[level + 1]
        stack.append(_bits(full & ~(rows[k2 // n] | cols[k2 % n])))


def enumerate_latin_squares(
    cfg: EnumerationConfig, max_order: int | None = None
) -> Iterator[Quasigroup]:
    """Stream every Latin square of order ``cfg.order`` as a Quasigroup."""
    _check_order(cfg, max_order)
    n = cfg.order
    for count, flat in enumerate(_squares(n, cfg.reduced), start=1):
        yield Quasigroup.from_mul_table(np.array(flat, dtype=np.int64).reshape(n, n))
        if cfg.limit is not None and count >= cfg.limit:
            return


def latin_tables(order: int, reduced: bool = False) -> Iterator[list[int]]:
    """Flattened tables in emission order, without building Quasigroup objects."""
    return _squares(order, reduced)


def count_latin_squares(cfg: EnumerationConfig, max_order: int | None = None) -> int:
    """Number of squares :func:`enumerate_latin_squares` would emit.

    Uses the same row-major backtracking, but stops one row early: an
    (n-1) x n Latin rectangle has exactly one completion.
    """
    _check_order(cfg, max_order)
    n = cfg.order
    grid, rows, cols, free = _prefill(n, cfg.reduced)
    full = (1 << n) - 1
    free = [k for k in free if k < (n - 1) * n]
    depth = len(free)

    def fill(level: int) -> int:
        if level == depth:
            return 1
        k = free[level]
        i, j = divmod(k, n)
        total = 0
        for v in _bits(full & ~(rows[i] | cols[j])):
            b = 1 << v
            rows[i] |= b
            cols[j] |= b
            total += fill(level + 1)
            rows[i] ^= b
            cols[j] ^= b
        return total

    total = fill(0)
    if cfg.limit is not None:
        total = min(total, cfg.limit)
    return total


def all_quasigroups(max_order: int) -> list[Quasigroup]:
    """Every quasigroup of order 1..max_order, ordered by order then lexicographically."""
    out = []
    for n in range(1, max_order + 1):
        out.extend(enumerate_latin_squares(EnumerationConfig(n)))
    return out
