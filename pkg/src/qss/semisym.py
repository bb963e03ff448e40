"""Semisymmetrizations: the cube construction on Q^3 and the square one on Q^2.

Tuples are encoded row-major with the first coordinate most significant::

    (x1, x2, x3) -> x1*n*n + x2*n + x3
    (x1, x2)     -> x1*n + x2

All product functions accept numpy arrays of encoded elements and
broadcast, so tables are filled in one vectorized pass and very large
objects can be probed without materializing them.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .morphisms import Homomorphism, Homotopy, is_homotopy
from .qcore import Quasigroup, TwistedQuasigroup, from_mul_table
from .qgt import format_qgt, parse_qgt, parse_table

# -- tuple encodings ---------------------------------------------------------


def encode_triple(n: int, x1, x2, x3):
    return (x1 * n + x2) * n + x3


def decode_triple(n: int, idx):
    return idx // (n * n), (idx // n) % n, idx % n


def encode_pair(n: int, x1, x2):
    return x1 * n + x2


def decode_pair(n: int, idx):
    return idx // n, idx % n


def shift_triple(x: tuple[int, int, int]) -> tuple[int, int, int]:
    """x' = (x2, x3, x1)."""
    return (x[1], x[2], x[0])


def swap_pair(x: tuple[int, int]) -> tuple[int, int]:
    return (x[1], x[0])


def _table(order: int, product) -> np.ndarray:
    idx = np.arange(order, dtype=np.int64)
    return product(idx[:, None], idx[None, :])


# -- cube construction -------------------------------------------------------


def otimes_cube_product(q: Quasigroup, a, b):
    """(x1//y1, x2\\\\y2, x3·y3) on encoded triples."""
    n = q.order
    x1, x2, x3 = decode_triple(n, np.asarray(a))
    y1, y2, y3 = decode_triple(n, np.asarray(b))
    return encode_triple(n, q.rdd[x1, y1], q.ldd[x2, y2], q.mul[x3, y3])


def otimes_cube(q: Quasigroup) -> Quasigroup:
    return from_mul_table(_table(q.order**3, functools.partial(otimes_cube_product, q)))


def delta_product(q: Quasigroup, a, b):
    """x ∇ y = (x2//y3, x3\\\\y1, x1·y2) = (y3/x2, y1\\x3, x1·y2) on encoded triples."""
    n = q.order
    x1, x2, x3 = decode_triple(n, np.asarray(a))
    y1, y2, y3 = decode_triple(n, np.asarray(b))
    return encode_triple(n, q.rdiv[y3, x2], q.ldiv[y1, x3], q.mul[x1, y2])


def delta_product_via_otimes(q: Quasigroup, a, b):
    """The same operation written as x' (x) y'' with the cube product."""
    n = q.order
    x1, x2, x3 = decode_triple(n, np.asarray(a))
    y1, y2, y3 = decode_triple(n, np.asarray(b))
    return otimes_cube_product(q, encode_triple(n, x2, x3, x1), encode_triple(n, y3, y1, y2))


@functools.lru_cache(maxsize=64)
def delta_object(q: Quasigroup) -> Quasigroup:
    """The semisymmetrization of ``q`` on Q^3 (order n^3)."""
    return from_mul_table(_table(q.order**3, functools.partial(delta_product, q)))


def twisted_semisymmetrization(q: Quasigroup) -> TwistedQuasigroup:
    """(∇1, ∇2, ∇3) where ∇1, ∇2 are the dual divisions of ∇3, found by inversion."""
    d = delta_object(q)
    return TwistedQuasigroup(d.rdd, d.ldd, d.mul)


def triple_map(f1, f2, f3, cod_order: int) -> np.ndarray:
    """f1 x f2 x f3 as an array indexed by encoded triples."""
    n = len(f1)
    x1, x2, x3 = decode_triple(n, np.arange(n**3))
    a1, a2, a3 = (np.asarray(f, dtype=np.int64) for f in (f1, f2, f3))
    return encode_triple(cod_order, a1[x1], a2[x2], a3[x3])


def delta_arrow(h: Homotopy) -> Homomorphism:
    if not is_homotopy(h.dom, h.cod, h.components):
        raise InputError("delta_arrow needs a homotopy")
    image = triple_map(*h.components, h.cod.order)
    return Homomorphism(delta_object(h.dom), delta_object(h.cod), tuple(image.tolist()))


# -- square construction -----------------------------------------------------


class GammaVariant(enum.Enum):
    V12 = "v12"
    V23 = "v23"
    V31_VERBATIM = "v31-verbatim"
    V31_SYMMETRIC = "v31-symmetric"


def gamma_product(q: Quasigroup, a, b, variant: GammaVariant = GammaVariant.V12):
    """Product of encoded pairs.

    With o1 = //, o2 = \\\\, o3 = ·::

        V12: (x2 o1 (x1 o3 y2), (x1 o3 y2) o2 y1)
        V23: (x2 o2 (x1 o1 y2), (x1 o1 y2) o3 y1)
        V31: (x2 o3 (x1 o2 y2), (x1 o2 y2) o1 y?)   y2 verbatim, y1 symmetric
    """
    n = q.order
    x1, x2 = decode_pair(n, np.asarray(a))
    y1, y2 = decode_pair(n, np.asarray(b))
    o1, o2, o3 = q.rdd, q.ldd, q.mul
    if variant is GammaVariant.V12:
        z = o3[x1, y2]
        return encode_pair(n, o1[x2, z], o2[z, y1])
    if variant is GammaVariant.V23:
        z = o1[x1, y2]
        return encode_pair(n, o2[x2, z], o3[z, y1])
    if variant is GammaVariant.V31_VERBATIM:
        z = o2[x1, y2]
        return encode_pair(n, o3[x2, z], o1[z, y2])
    if variant is GammaVariant.V31_SYMMETRIC:
        z = o2[x1, y2]
        return encode_pair(n, o3[x2, z], o1[z, y1])
    raise InputError(f"unknown gamma variant {variant!r}")


def gamma_table(q: Quasigroup, variant: GammaVariant = GammaVariant.V12) -> np.ndarray:
    """Raw n^2 x n^2 product table; not every variant need be Latin."""
    return _table(q.order**2, lambda a, b: gamma_product(q, a, b, variant))


@functools.lru_cache(maxsize=64)
def gamma_object(q: Quasigroup, variant: GammaVariant = GammaVariant.V12) -> Quasigroup:
    """The square semisymmetrization of ``q`` on Q^2 (order n^2).

    Raises InputError if the chosen variant does not produce a Latin square.
    """
    return from_mul_table(gamma_table(q, variant))


def pair_L(q: Quasigroup, x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    """L_x(y) = (x1·y1, y2)."""
    return (int(q.mul[x[0], y[0]]), y[1])


def pair_R(q: Quasigroup, y: tuple[int, int], x: tuple[int, int]) -> tuple[int, int]:
    """R_y(x) = (x1, x2·y2)."""
    return (x[0], int(q.mul[x[1], y[1]]))


def otimes_pair(q: Quasigroup, u: tuple[int, int], v: tuple[int, int]) -> tuple[int, int]:
    """(u1//v1, u2\\\\v2)."""
    return (int(q.rdd[u[0], v[0]]), int(q.ldd[u[1], v[1]]))


def gamma_product_abstract(q: Quasigroup, x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    """x ∇ y = R_y(x') (x) L_x(y'), the two-operation form of V12."""
    return otimes_pair(q, pair_R(q, y, swap_pair(x)), pair_L(q, x, swap_pair(y)))


def gamma_arrow(h: Homotopy) -> Homomorphism:
    if not is_homotopy(h.dom, h.cod, h.components):
        raise InputError("gamma_arrow needs a homotopy")
    n, m = h.dom.order, h.cod.order
    x1, x2 = decode_pair(n, np.arange(n**2))
    f1, f2 = (np.asarray(f, dtype=np.int64) for f in (h.f1, h.f2))
    image = encode_pair(m, f1[x1], f2[x2])
    return Homomorphism(gamma_object(h.dom), gamma_object(h.cod), tuple(image.tolist()))


# -- tagged square construction ---------------------------------------------

TAG_MARKER = "#tag"


def canonical_tag(q: Quasigroup) -> str:
    return format_qgt(q)


@dataclass(frozen=True)
class TaggedQuasigroup:
    """A square semisymmetrization remembering which quasigroup it came from."""

    q: Quasigroup
    tag: str

    def source(self) -> Quasigroup:
        return parse_qgt(self.tag)


def gamma_tagged(q: Quasigroup) -> TaggedQuasigroup:
    return TaggedQuasigroup(gamma_object(q), canonical_tag(q))


def format_tagged(t: TaggedQuasigroup) -> str:
    block = "".join(f"# {line}\n" for line in t.tag.splitlines())
    return format_qgt(t.q) + TAG_MARKER + "\n" + block


def parse_tagged(text: str) -> TaggedQuasigroup:
    record = parse_table(text)
    lines = [c.strip() for c in record.comments]
    if TAG_MARKER not in lines:
        raise InputError("tagged record has no '#tag' block")
    start = lines.index(TAG_MARKER) + 1
    tag_lines = []
    for c in lines[start:]:
        body = c[1:]
        tag_lines.append(body[1:] if body.startswith(" ") else body)
    tag = "\n".join(tag_lines) + "\n"
    return TaggedQuasigroup(from_mul_table(record.cells), tag)
