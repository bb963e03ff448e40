"""Homomorphisms and homotopies between finite quasigroups.

Maps are tuples ``(f(0), ..., f(n-1))``.  Enumeration results are in
lexicographic order of the flattened map vectors so that runs are
reproducible.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from .config import resolve_budget
from .errors import BudgetExceeded, InputError
from .qcore import Quasigroup

Map = tuple[int, ...]


def as_map(f: Sequence[int], dom_order: int, cod_order: int) -> np.ndarray:
    """Validate a total map ``0..dom_order-1 -> 0..cod_order-1``."""
    a = np.asarray(f)
    if a.ndim != 1 or a.shape[0] != dom_order:
        raise InputError(f"map must have {dom_order} entries, got shape {a.shape}")
    if dom_order and a.dtype.kind not in "iu":
        raise InputError(f"map entries must be integers, got {a.dtype}")
    a = a.astype(np.int64)
    if dom_order and (a.min() < 0 or a.max() >= cod_order):
        raise InputError(f"map entries must lie in 0..{cod_order - 1}")
    return a


@dataclass(frozen=True)
class Homomorphism:
    dom: Quasigroup
    cod: Quasigroup
    map: Map

    def __post_init__(self):
        a = as_map(self.map, self.dom.order, self.cod.order)
        object.__setattr__(self, "map", tuple(int(v) for v in a))

    def __call__(self, x: int) -> int:
        return self.map[x]

    def is_bijective(self) -> bool:
        return self.dom.order == self.cod.order and len(set(self.map)) == self.dom.order


@dataclass(frozen=True)
class Homotopy:
    dom: Quasigroup
    cod: Quasigroup
    f1: Map
    f2: Map
    f3: Map

    def __post_init__(self):
        for name in ("f1", "f2", "f3"):
            a = as_map(getattr(self, name), self.dom.order, self.cod.order)
            object.__setattr__(self, name, tuple(int(v) for v in a))

    @property
    def components(self) -> tuple[Map, Map, Map]:
        return (self.f1, self.f2, self.f3)

    def is_isotopy(self) -> bool:
        n = self.dom.order
        return self.cod.order == n and all(len(set(f)) == n for f in self.components)


def is_homomorphism(q: Quasigroup, r: Quasigroup, f: Sequence[int]) -> bool:
    """f(x)·f(y) = f(x·y) for all x, y."""
    f = as_map(f, q.order, r.order)
    return bool((r.mul[f[:, None], f[None, :]] == f[q.mul]).all())


def is_homotopy(q: Quasigroup, r: Quasigroup, fs) -> bool:
    """f1(x)·f2(y) = f3(x·y) for all x, y."""
    f1, f2, f3 = (as_map(f, q.order, r.order) for f in fs)
    return bool((r.mul[f1[:, None], f2[None, :]] == f3[q.mul]).all())


class HomotopyIdentityReport(NamedTuple):
    mul: bool  # f1(x)·f2(y) = f3(x·y)
    rdiv: bool  # f3(x)/f2(y) = f1(x/y)
    ldiv: bool  # f1(x)\f3(y) = f2(x\y)
    dual_rdiv: bool  # f2(x)//f3(y) = f1(x//y)
    dual_ldiv: bool  # f3(x)\\f1(y) = f2(x\\y)

    @property
    def consistent(self) -> bool:
        return len(set(self)) == 1


def homotopy_identity_report(q: Quasigroup, r: Quasigroup, fs) -> HomotopyIdentityReport:
    f1, f2, f3 = (as_map(f, q.order, r.order) for f in fs)
    col = slice(None), None
    row = None, slice(None)
    return HomotopyIdentityReport(
        mul=bool((r.mul[f1[col], f2[row]] == f3[q.mul]).all()),
        rdiv=bool((r.rdiv[f3[col], f2[row]] == f1[q.rdiv]).all()),
        ldiv=bool((r.ldiv[f1[col], f3[row]] == f2[q.ldiv]).all()),
        dual_rdiv=bool((r.rdd[f2[col], f3[row]] == f1[q.rdd]).all()),
        dual_ldiv=bool((r.ldd[f3[col], f1[row]] == f2[q.ldd]).all()),
    )


def complete_homotopy(q: Quasigroup, r: Quasigroup, f1, f2) -> Homotopy | None:
    """Extend (f1, f2) to the unique homotopy (f1, f2, f3), if there is one.

    Every x factors as 0·(0\\x), which forces f3(x) = f1(0)·f2(0\\x); the
    candidate is then verified on the whole table.
    """
    a1 = as_map(f1, q.order, r.order)
    a2 = as_map(f2, q.order, r.order)
    f3 = r.mul[a1[0], a2[q.ldiv[0]]]
    if not is_homotopy(q, r, (a1, a2, f3)):
        return None
    return Homotopy(q, r, tuple(a1.tolist()), tuple(a2.tolist()), tuple(f3.tolist()))


def identity_homotopy(q: Quasigroup) -> Homotopy:
    ident = tuple(range(q.order))
    return Homotopy(q, q, ident, ident, ident)


def compose_homotopies(g: Homotopy, f: Homotopy) -> Homotopy:
    """g after f."""
    if f.cod != g.dom:
        raise InputError("cannot compose: codomain of f differs from domain of g")
    parts = [tuple(gi[x] for x in fi) for gi, fi in zip(g.components, f.components)]
    return Homotopy(f.dom, g.cod, *parts)


def identity_homomorphism(q: Quasigroup) -> Homomorphism:
    return Homomorphism(q, q, tuple(range(q.order)))


def compose_homomorphisms(g: Homomorphism, f: Homomorphism) -> Homomorphism:
    if f.cod != g.dom:
        raise InputError("cannot compose: codomain of f differs from domain of g")
    return Homomorphism(f.dom, g.cod, tuple(g.map[x] for x in f.map))


def _all_maps(n: int, m: int) -> np.ndarray:
    """Every map 0..n-1 -> 0..m-1 as rows, lexicographically ordered."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices((m,) * n).reshape(n, -1).T
    return np.ascontiguousarray(grids, dtype=np.int64)


def _hom_search(
    q: Quasigroup,
    r: Quasigroup,
    *,
    injective: bool,
    budget: int,
    candidates: list[set[int]] | None = None,
) -> Iterator[Map]:
    """Backtracking over partial homomorphisms with closure propagation.

    Assigning f(a) = v forces f(a·b) and f(b·a) for every already assigned
    b; conflicts prune the branch.  The branching variable is always the
    smallest unassigned element and values go up, so solutions arrive in
    lexicographic order.
    """
    n, m = q.order, r.order
    qm = q.mul.tolist()
    rm = r.mul.tolist()
    phi = [-1] * n
    hits = [0] * m
    trail: list[int] = []
    nodes = 0

    def assign(a0: int, v0: int) -> bool:
        stack = [(a0, v0)]
        while stack:
            a, v = stack.pop()
            cur = phi[a]
            if cur >= 0:
                if cur != v:
                    return False
                continue
            if injective and hits[v]:
                return False
            if candidates is not None and v not in candidates[a]:
                return False
            phi[a] = v
            hits[v] += 1
            trail.append(a)
            row_a = qm[a]
            row_v = rm[v]
            for b in list(trail):
                w = phi[b]
                stack.append((row_a[b], row_v[w]))
                stack.append((qm[b][a], rm[w][v]))
        return True

    def undo(mark: int) -> None:
        while len(trail) > mark:
            a = trail.pop()
            hits[phi[a]] -= 1
            phi[a] = -1

    def search(start: int) -> Iterator[Map]:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"homomorphism search exceeded budget of {budget} nodes")
        k = start
        while k < n and phi[k] >= 0:
            k += 1
        if k == n:
            yield tuple(phi)
            return
        values = range(m) if candidates is None else sorted(candidates[k])
        for v in values:
            mark = len(trail)
            if assign(k, v):
                yield from search(k + 1)
            undo(mark)

    yield from search(0)


def enumerate_homomorphisms(q: Quasigroup, r: Quasigroup, budget: int | None = None) -> list[Homomorphism]:
    """All homomorphisms q -> r in lexicographic order of their map vectors.

    The budget bounds visited search nodes.
    """
    budget = resolve_budget(budget)
    return [Homomorphism(q, r, f) for f in _hom_search(q, r, injective=False, budget=budget)]


def enumerate_homotopies(q: Quasigroup, r: Quasigroup, budget: int | None = None) -> list[Homotopy]:
    """All homotopies q -> r, ordered lexicographically by (f1, f2).

    Only (f1, f2) pairs are iterated; f3 comes from :func:`complete_homotopy`.
    """
    budget = resolve_budget(budget)
    n, m = q.order, r.order
    space = m ** (2 * n)
    if space > budget:
        raise BudgetExceeded(f"{space} candidate (f1, f2) pairs exceed budget {budget}")
    maps = _all_maps(n, m)
    lhs_rows = r.mul  # r.mul[f1(x), f2(y)]
    back = q.ldiv[0]  # 0 \ x
    out = []
    for f1 in maps:
        # f3(x) = f1(0)·f2(0\x), for every f2 at once
        f3 = r.mul[f1[0]][maps[:, back]]
        lhs = lhs_rows[f1[None, :, None], maps[:, None, :]]
        rhs = f3[:, q.mul]
        ok = (lhs == rhs).all(axis=(1, 2))
        t1 = tuple(f1.tolist())
        for k in np.flatnonzero(ok):
            out.append(Homotopy(q, r, t1, tuple(maps[k].tolist()), tuple(f3[k].tolist())))
    return out


def _element_signature(q: Quasigroup) -> list[tuple]:
    """Isomorphism-invariant data per element, used to prune candidate images."""
    m = q.mul
    n = q.order
    sq = np.diagonal(m)
    ar = np.arange(n)
    commuting = (m == m.T).sum(axis=1)
    local_ss = (m[ar[:, None], m.T] == ar[None, :]).sum(axis=1)
    roots = np.bincount(sq, minlength=n)
    sigs = []
    for x in range(n):
        seen = {}
        y = x
        step = 0
        while y not in seen:
            seen[y] = step
            y = int(sq[y])
            step += 1
        tail = seen[y]
        cycle = step - tail
        sigs.append((bool(sq[x] == x), int(commuting[x]), int(local_ss[x]), int(roots[x]), tail, cycle))
    return sigs


def find_isomorphism(q: Quasigroup, r: Quasigroup, budget: int | None = None) -> Map | None:
    """Lexicographically least isomorphism q -> r, or None."""
    if q.order != r.order:
        return None
    budget = resolve_budget(budget)
    sq, sr = _element_signature(q), _element_signature(r)
    if sorted(sq) != sorted(sr):
        return None
    candidates = [{v for v in range(r.order) if sr[v] == sq[a]} for a in range(q.order)]
    for f in _hom_search(q, r, injective=True, budget=budget, candidates=candidates):
        return f
    return None


def find_isotopy(q: Quasigroup, r: Quasigroup, budget: int | None = None) -> Homotopy | None:
    """First isotopy (f1, f2, f3) with f1, f2 in lexicographic permutation order."""
    n = q.order
    if r.order != n:
        return None
    budget = resolve_budget(budget)
    space = math.factorial(n) ** 2
    if space > budget:
        raise BudgetExceeded(f"{space} candidate (f1, f2) bijections exceed budget {budget}")
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    row0 = q.mul[0]
    for f1 in perms:
        lhs_all = r.mul[f1[None, :, None], perms[:, None, :]]
        for k, f2 in enumerate(perms):
            lhs = lhs_all[k]
            f3 = np.empty(n, dtype=np.int64)
            f3[row0] = lhs[0]
            if (lhs == f3[q.mul]).all() and len(set(f3.tolist())) == n:
                return Homotopy(q, r, tuple(f1.tolist()), tuple(f2.tolist()), tuple(f3.tolist()))
    return None
