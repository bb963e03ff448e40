"""Finite quasigroups as Latin-square tables.

Elements are the integers ``0..n-1``.  A :class:`Quasigroup` stores the
multiplication table together with both division tables, so every
downstream construction can read ``/`` and ``\\`` by indexing.

Conventions used throughout the package::

    rdiv[b, a] = b / a   (the unique x with x*a == b)
    ldiv[a, b] = a \\ b   (the unique y with a*y == b)
    x // y     = y / x   (dual right division, ``rdd``)
    x \\\\ y     = y \\ x   (dual left division, ``ldd``)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import InputError


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int64)
    a.setflags(write=False)
    return a


def as_cells(cells) -> np.ndarray:
    """Coerce ``cells`` to an n x n integer array with entries in ``0..n-1``.

    Raises :class:`InputError` for anything that is not such an array.  Being
    Latin is *not* checked here.
    """
    try:
        a = np.asarray(cells)
    except ValueError as exc:  # ragged nested lists
        raise InputError(f"table is not rectangular: {exc}") from None
    if a.dtype == object or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InputError(f"table must be square, got shape {a.shape}")
    n = a.shape[0]
    if n == 0:
        raise InputError("table must have order >= 1")
    if a.dtype.kind == "f":
        if not np.all(np.mod(a, 1) == 0):
            raise InputError("table entries must be integers")
    elif a.dtype.kind not in "iu":
        raise InputError(f"table entries must be integers, got dtype {a.dtype}")
    a = a.astype(np.int64)
    if a.min() < 0 or a.max() >= n:
        raise InputError(f"table entries must lie in 0..{n - 1}")
    return a


def _is_latin(a: np.ndarray) -> bool:
    n = a.shape[0]
    full = np.arange(n)
    return bool(
        (np.sort(a, axis=1) == full).all() and (np.sort(a, axis=0) == full[:, None]).all()
    )


def validate_latin(cells) -> bool:
    """True iff every row and every column of ``cells`` is a permutation.

    Malformed input (non-square, out-of-range or non-integer entries) raises
    :class:`InputError` rather than returning False.
    """
    return _is_latin(as_cells(cells))


class Quasigroup:
    """An immutable finite quasigroup with materialized division tables."""

    __slots__ = ("mul", "rdiv", "ldiv", "_hash")

    def __init__(self, mul: np.ndarray, rdiv: np.ndarray, ldiv: np.ndarray):
        self.mul = _frozen(mul)
        self.rdiv = _frozen(rdiv)
        self.ldiv = _frozen(ldiv)
        self._hash = None

    @classmethod
    def from_mul_table(cls, cells) -> "Quasigroup":
        a = as_cells(cells)
        if not _is_latin(a):
            raise InputError("multiplication table is not a Latin square")
        n = a.shape[0]
        rows = np.repeat(np.arange(n), n).reshape(n, n)
        cols = rows.T
        rdiv = np.empty_like(a)
        ldiv = np.empty_like(a)
        # x*a = b  =>  b/a = x ;  x*y = b  =>  x\b = y
        rdiv[a, cols] = rows
        ldiv[rows, a] = cols
        return cls(a, rdiv, ldiv)

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    def __len__(self) -> int:
        return self.order

    @property
    def dual_mul(self) -> np.ndarray:
        return self.mul.T

    @property
    def rdd(self) -> np.ndarray:
        """Table of x // y = y / x."""
        return self.rdiv.T

    @property
    def ldd(self) -> np.ndarray:
        """Table of x \\\\ y = y \\ x."""
        return self.ldiv.T

    def __eq__(self, other):
        if not isinstance(other, Quasigroup):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.mul, other.mul)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, self.mul.tobytes()))
        return self._hash

    def __repr__(self):
        if self.order <= 4:
            return f"Quasigroup({self.mul.tolist()})"
        return f"Quasigroup(order={self.order})"

    def rows(self) -> list[list[int]]:
        return self.mul.tolist()


def from_mul_table(cells) -> Quasigroup:
    """Build a :class:`Quasigroup` (with both divisions) from a Latin square."""
    return Quasigroup.from_mul_table(cells)


def cyclic_group(n: int) -> Quasigroup:
    """(Z_n, +)."""
    i = np.arange(n)
    return from_mul_table((i[:, None] + i[None, :]) % n)


def table_from_function(n: int, op) -> Quasigroup:
    """Quasigroup on ``0..n-1`` whose product is ``op(x, y)``."""
    return from_mul_table([[op(x, y) for y in range(n)] for x in range(n)])


class ParastropheKind(enum.Enum):
    MUL = "mul"
    RDIV = "rdiv"
    LDIV = "ldiv"
    DUAL_MUL = "dual-mul"
    DUAL_RDIV = "dual-rdiv"
    DUAL_LDIV = "dual-ldiv"

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]


_SYMBOLS = {
    ParastropheKind.MUL: "·",
    ParastropheKind.RDIV: "/",
    ParastropheKind.LDIV: "\\",
    ParastropheKind.DUAL_MUL: "*",
    ParastropheKind.DUAL_RDIV: "⫽",
    ParastropheKind.DUAL_LDIV: "⑊",
}


def operation_table(q: Quasigroup, kind: ParastropheKind) -> np.ndarray:
    """Read-only table of the parastrophe ``kind``: ``table[a, b] = a op b``."""
    if kind is ParastropheKind.MUL:
        return q.mul
    if kind is ParastropheKind.RDIV:
        return q.rdiv
    if kind is ParastropheKind.LDIV:
        return q.ldiv
    if kind is ParastropheKind.DUAL_MUL:
        return q.mul.T
    if kind is ParastropheKind.DUAL_RDIV:
        return q.rdiv.T
    if kind is ParastropheKind.DUAL_LDIV:
        return q.ldiv.T
    raise InputError(f"unknown parastrophe kind {kind!r}")


def _check_element(q: Quasigroup, *elements) -> None:
    for e in elements:
        if not (isinstance(e, (int, np.integer)) and 0 <= e < q.order):
            raise InputError(f"element {e!r} out of range for order {q.order}")


def apply(q: Quasigroup, kind: ParastropheKind, a: int, b: int) -> int:
    _check_element(q, a, b)
    return int(operation_table(q, kind)[a, b])


def parastrophe(q: Quasigroup, kind: ParastropheKind) -> Quasigroup:
    if kind is ParastropheKind.MUL:
        return q
    return from_mul_table(operation_table(q, kind))


class SemisymmetryReport(NamedTuple):
    ss1: bool  # x·(y·x) = y
    ss2: bool  # (x·y)·x = y
    rdiv_is_dual: bool  # x/y = y·x
    ldiv_is_dual: bool  # x\y = y·x
    divisions_agree: bool  # x\y = x/y

    @property
    def all_true(self) -> bool:
        return all(self)

    @property
    def consistent(self) -> bool:
        return len(set(self)) == 1


def semisymmetry_report(q: Quasigroup) -> SemisymmetryReport:
    m = q.mul
    n = q.order
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    return SemisymmetryReport(
        ss1=bool((m[x, m.T] == y).all()),
        ss2=bool((m[m, x] == y).all()),
        rdiv_is_dual=bool(np.array_equal(q.rdiv, m.T)),
        ldiv_is_dual=bool(np.array_equal(q.ldiv, m.T)),
        divisions_agree=bool(np.array_equal(q.ldiv, q.rdiv)),
    )


def is_semisymmetric(q: Quasigroup) -> bool:
    return semisymmetry_report(q).all_true


@dataclass(frozen=True, eq=False)
class TwistedQuasigroup:
    """Three operation tables in the roles (//, \\\\, ·)."""

    op1: np.ndarray
    op2: np.ndarray
    op3: np.ndarray

    def __post_init__(self):
        tables = [as_cells(t) for t in (self.op1, self.op2, self.op3)]
        if len({t.shape for t in tables}) != 1:
            raise InputError(
                f"twisted quasigroup tables differ in order: {[t.shape[0] for t in tables]}"
            )
        for name, t in zip(("op1", "op2", "op3"), tables):
            object.__setattr__(self, name, _frozen(t))

    @property
    def order(self) -> int:
        return self.op1.shape[0]

    def __eq__(self, other):
        if not isinstance(other, TwistedQuasigroup):
            return NotImplemented
        return (
            self.order == other.order
            and np.array_equal(self.op1, other.op1)
            and np.array_equal(self.op2, other.op2)
            and np.array_equal(self.op3, other.op3)
        )

    def __hash__(self):
        return hash((self.op1.tobytes(), self.op2.tobytes(), self.op3.tobytes()))


def twisted(q: Quasigroup) -> TwistedQuasigroup:
    """The twisted presentation (Q; //, \\\\, ·) of ``q``."""
    return TwistedQuasigroup(q.rdd, q.ldd, q.mul)


def is_twisted_quasigroup(t: TwistedQuasigroup) -> bool:
    a, b, c = t.op1, t.op2, t.op3
    n = t.order
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    return bool(
        (a[y, c] == x).all()  # y // xy = x
        and (b[c, x] == y).all()  # xy \\ x = y
        and (c[a.T, y] == x).all()  # (y // x) y = x
        and (c[x, b.T] == y).all()  # x (y \\ x) = y
    )


def is_semisymmetric_twisted(t: TwistedQuasigroup) -> bool:
    """Twisted axioms plus SS1, SS2 and // = · = \\\\ on the third operation."""
    if not is_twisted_quasigroup(t):
        return False
    c = t.op3
    n = t.order
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    return bool(
        (c[x, c.T] == y).all()
        and (c[c, x] == y).all()
        and np.array_equal(t.op1, c)
        and np.array_equal(t.op2, c)
        and np.array_equal(t.op1, t.op2)
    )


def cyclic_rotate(t: TwistedQuasigroup) -> TwistedQuasigroup:
    """(op1, op2, op3) -> (op2, op3, op1)."""
    return TwistedQuasigroup(t.op2, t.op3, t.op1)


@dataclass(frozen=True, eq=False)
class Biquasigroup:
    """The (//, \\\\) reduct of a quasigroup."""

    opR: np.ndarray
    opL: np.ndarray

    def __post_init__(self):
        r, l = as_cells(self.opR), as_cells(self.opL)
        if r.shape != l.shape:
            raise InputError("biquasigroup tables differ in order")
        object.__setattr__(self, "opR", _frozen(r))
        object.__setattr__(self, "opL", _frozen(l))

    @property
    def order(self) -> int:
        return self.opR.shape[0]


def biquasigroup(q: Quasigroup) -> Biquasigroup:
    return Biquasigroup(q.rdd, q.ldd)


def reconstruct_mul(b: Biquasigroup) -> Quasigroup | None:
    """Recover · from // via ``x·y = z  <=>  y // z = x``; None if impossible.

    The result is returned only when it is Latin and regenerates *both*
    dual divisions of ``b``.
    """
    n = b.order
    r = b.opR
    if not _is_latin(r):
        return None
    mul = np.empty((n, n), dtype=np.int64)
    y = np.repeat(np.arange(n), n).reshape(n, n)
    z = y.T
    mul[r, y] = z
    if not _is_latin(mul):
        return None
    q = from_mul_table(mul)
    if np.array_equal(q.rdd, r) and np.array_equal(q.ldd, b.opL):
        return q
    return None


def is_biquasigroup(b: Biquasigroup) -> bool:
    return reconstruct_mul(b) is not None
