"""Elementwise checks of the categorical facts around the cube semisymmetrization.

Homotopies form the arrows of one category, homomorphisms between
semisymmetric quasigroups the arrows of the other.  The cube construction
``delta`` is right adjoint to the inclusion ``(f) -> (f, f, f)``; here the
unit, counit, triangular identities, naturality squares, faithfulness,
object injectivity and the monad-algebra equations are all checked by
computing both sides on concrete elements.

Objects on Q^3 of Q^3 (order n^9) and beyond are never materialized: their
maps are arrays over encoded indices and their products are computed with
:func:`~qss.semisym.delta_product` on demand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import config
from .config import resolve_budget
from .errors import BudgetExceeded, InputError, PreconditionError
from .morphisms import (
    Homomorphism,
    Homotopy,
    _hom_search,
    enumerate_homotopies,
    find_isomorphism,
    find_isotopy,
    is_homomorphism,
    is_homotopy,
)
from .qcore import Quasigroup, is_semisymmetric
from .semisym import (
    canonical_tag,
    decode_triple,
    delta_arrow,
    delta_object,
    delta_product,
    encode_triple,
    gamma_arrow,
    gamma_table,
    triple_map,
)

# -- unit and counit ---------------------------------------------------------


def unit_map(p: Quasigroup) -> np.ndarray:
    """x -> (x, x, x) as encoded triples."""
    x = np.arange(p.order, dtype=np.int64)
    return encode_triple(p.order, x, x, x)


def diagonal_is_homomorphism(p: Quasigroup) -> bool:
    """Whether x -> (x, x, x) respects products, without building delta(p)."""
    eta = unit_map(p)
    lhs = delta_product(p, eta[:, None], eta[None, :])
    return bool((lhs == eta[p.mul]).all())


def unit_arrow(p: Quasigroup) -> Homomorphism:
    if not is_semisymmetric(p):
        raise PreconditionError("unit arrow needs a semisymmetric quasigroup")
    return Homomorphism(p, delta_object(p), tuple(unit_map(p).tolist()))


def projections(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The three coordinate projections Q^3 -> Q on encoded triples."""
    return decode_triple(n, np.arange(n**3, dtype=np.int64))


def counit_arrow(q: Quasigroup) -> Homotopy:
    p1, p2, p3 = projections(q.order)
    return Homotopy(delta_object(q), q, tuple(p1.tolist()), tuple(p2.tolist()), tuple(p3.tolist()))


def counit_is_onto(q: Quasigroup) -> bool:
    """Each projection hits every element, i.e. the counit is epi componentwise."""
    return all(len(set(p.tolist())) == q.order for p in projections(q.order))


@dataclass(frozen=True)
class AdjunctionWitness:
    unit: Homomorphism
    counit: Homotopy


def adjunction_witness(p: Quasigroup) -> AdjunctionWitness:
    return AdjunctionWitness(unit_arrow(p), counit_arrow(p))


def structure_map(q: Quasigroup) -> np.ndarray:
    """The image of the counit under delta: Q^3 of Q^3 -> Q^3, (a, b, c) -> (a1, b2, c3)."""
    p1, p2, p3 = projections(q.order)
    return triple_map(p1, p2, p3, q.order)


def check_triangular(q: Quasigroup, p: Quasigroup) -> tuple[bool, bool]:
    """Both triangular identities, for ``q`` arbitrary and ``p`` semisymmetric.

    First flag: the counit's image after the unit at delta(q) is the identity
    on Q^3.  Second flag: each projection after x -> (x, x, x) is the identity.
    """
    if not is_semisymmetric(p):
        raise PreconditionError("second triangular identity needs a semisymmetric quasigroup")
    d = delta_object(q)
    counit = counit_arrow(q)
    eta_d = unit_map(d)
    first = (
        is_homotopy(counit.dom, counit.cod, counit.components)
        and diagonal_is_homomorphism(d)
        and bool(np.array_equal(structure_map(q)[eta_d], np.arange(d.order)))
    )
    eta_p = unit_map(p)
    ident = np.arange(p.order)
    second = diagonal_is_homomorphism(p) and all(
        np.array_equal(proj[eta_p], ident) for proj in projections(p.order)
    )
    return first, bool(second)


def check_naturality(kind: str, arrow) -> bool:
    """Commutation of the unit (``kind="unit"``) or counit naturality square."""
    if kind == "unit":
        if not isinstance(arrow, Homomorphism):
            raise InputError("unit naturality takes a Homomorphism")
        p, r = arrow.dom, arrow.cod
        if not (is_semisymmetric(p) and is_semisymmetric(r)):
            raise InputError("unit naturality needs semisymmetric domain and codomain")
        if not is_homomorphism(p, r, arrow.map):
            raise InputError("arrow is not a homomorphism")
        f = np.asarray(arrow.map, dtype=np.int64)
        left = unit_map(r)[f]
        right = triple_map(f, f, f, r.order)[unit_map(p)]
        return bool(np.array_equal(left, right))
    if kind == "counit":
        if not isinstance(arrow, Homotopy):
            raise InputError("counit naturality takes a Homotopy")
        if not is_homotopy(arrow.dom, arrow.cod, arrow.components):
            raise InputError("arrow is not a homotopy")
        fmap = triple_map(*arrow.components, arrow.cod.order)
        after = projections(arrow.cod.order)
        before = projections(arrow.dom.order)
        for i, fi in enumerate(arrow.components):
            fi = np.asarray(fi, dtype=np.int64)
            if not np.array_equal(after[i][fmap], fi[before[i]]):
                return False
        return True
    raise InputError(f"naturality kind must be 'unit' or 'counit', got {kind!r}")


# -- faithfulness and injectivity on objects ---------------------------------


def check_faithful(q: Quasigroup, r: Quasigroup, functor: str = "delta", budget: int | None = None) -> bool:
    """The arrow map of ``functor`` is injective on all homotopies q -> r."""
    if functor == "delta":
        image = delta_arrow
    elif functor == "gamma":
        image = gamma_arrow
    else:
        raise InputError(f"functor must be 'delta' or 'gamma', got {functor!r}")
    hs = enumerate_homotopies(q, r, budget)
    maps = {image(h).map for h in hs}
    return len(maps) == len(hs)


class DiagonalWitness(NamedTuple):
    first: int
    second: int
    x: int
    y: int
    cell: tuple[int, int]  # encoded ((x,x,x), (y,y,y))
    products: tuple[int, int]  # the differing values in the two images


@dataclass
class InjectivityReport:
    functor: str
    size: int
    collisions: list[tuple[int, int]] = field(default_factory=list)
    witnesses: list[DiagonalWitness] = field(default_factory=list)

    @property
    def injective(self) -> bool:
        return not self.collisions


def _image_key(q: Quasigroup, functor: str):
    if functor == "delta":
        d = delta_object(q)
        return (d.order, d.mul.tobytes())
    if functor == "gamma_untagged":
        t = gamma_table(q)
        return (t.shape[0], t.tobytes())
    if functor == "gamma_tagged":
        t = gamma_table(q)
        return (t.shape[0], t.tobytes(), canonical_tag(q))
    raise InputError(f"unknown functor {functor!r}")


def diagonal_witness(q: Quasigroup, r: Quasigroup) -> tuple[int, int, tuple[int, int], tuple[int, int]] | None:
    """For equal-order q != r: x, y with x·y differing, and the diagonal cell where delta differs."""
    if q.order != r.order:
        return None
    diff = np.argwhere(q.mul != r.mul)
    if len(diff) == 0:
        return None
    x, y = (int(v) for v in diff[0])
    n = q.order
    a, b = encode_triple(n, x, x, x), encode_triple(n, y, y, y)
    pq = int(delta_product(q, a, b))
    pr = int(delta_product(r, a, b))
    return x, y, (a, b), (pq, pr)


def check_object_injectivity(
    qs: Sequence[Quasigroup], functor: str = "delta", witnesses: bool = True
) -> InjectivityReport:
    groups: dict = {}
    for i, q in enumerate(qs):
        groups.setdefault(_image_key(q, functor), []).append(i)
    report = InjectivityReport(functor, len(qs))
    for members in groups.values():
        report.collisions.extend(combinations(members, 2))
    report.collisions.sort()
    if witnesses and functor == "delta":
        for i, j in combinations(range(len(qs)), 2):
            w = diagonal_witness(qs[i], qs[j])
            if w is not None:
                x, y, cell, products = w
                report.witnesses.append(DiagonalWitness(i, j, x, y, cell, products))
    return report


# -- monad algebras ----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GFAlgebraInstance:
    """The algebra (delta(q), h) with h the image of the counit under delta.

    ``structure`` is h as an array over encoded elements of delta(delta(q));
    that object has order n^9 and is not built.
    """

    source: Quasigroup
    carrier: Quasigroup
    structure: np.ndarray


def gf_algebra(q: Quasigroup) -> GFAlgebraInstance:
    return GFAlgebraInstance(q, delta_object(q), structure_map(q))


class GFAlgebraReport(NamedTuple):
    unit_law: bool
    main_law: bool
    structure_is_homomorphism: bool
    main_points: int
    hom_points: int

    @property
    def ok(self) -> bool:
        return self.unit_law and self.main_law and self.structure_is_homomorphism


def _main_law_holds(n: int, h: np.ndarray, a, b, c) -> np.ndarray:
    """h . (h x h x h) versus h . delta(counit) at points (a, b, c) of (Q^3 of Q^3)^3."""
    big = n**3  # order of the carrier
    # left: apply h inside each coordinate, then h
    left = h[encode_triple(big, h[a], h[b], h[c])]
    # right: the counit of the carrier, lifted by delta, then h
    pa = decode_triple(big, a)[0]
    pb = decode_triple(big, b)[1]
    pc = decode_triple(big, c)[2]
    right = h[encode_triple(big, pa, pb, pc)]
    return left == right


def gf_algebra_report(
    q: Quasigroup,
    mode: str = "sample",
    samples: int = config.DEFAULT_GF_SAMPLES,
    seed: int = config.DEFAULT_GF_SEED,
    budget: int | None = None,
) -> GFAlgebraReport:
    """Check both algebra equations for (delta(q), h).

    ``mode="exhaustive"`` covers every point of the main law's domain
    (n^27 points; only order 1 is practical).  ``mode="sample"`` draws
    ``samples`` points from a seeded generator, except at order 1 where the
    whole domain is a single point.
    """
    if mode not in ("exhaustive", "sample"):
        raise InputError(f"mode must be 'exhaustive' or 'sample', got {mode!r}")
    budget = resolve_budget(budget)
    n = q.order
    alg = gf_algebra(q)
    h = alg.structure
    big = n**3
    huge = big**3  # order of delta(delta(q))

    eta = encode_triple(big, *(np.arange(big),) * 3)
    unit_law = bool(np.array_equal(h[eta], np.arange(big)))

    rng = np.random.default_rng(seed)
    if mode == "exhaustive" or huge == 1:
        if huge**3 > budget:
            raise BudgetExceeded(f"{huge**3} points exceed budget {budget}")
        a, b, c = (np.asarray(v, dtype=np.int64).ravel() for v in np.indices((huge,) * 3))
    else:
        a, b, c = rng.integers(0, huge, size=(3, samples), dtype=np.int64)
    main_law = bool(_main_law_holds(n, h, a, b, c).all())
    main_points = len(a)

    # h is delta of the counit, hence a homomorphism delta(delta(q)) -> delta(q)
    if huge * huge <= 10**6:
        u = np.arange(huge, dtype=np.int64)
        u, v = u[:, None], u[None, :]
    else:
        u, v = rng.integers(0, huge, size=(2, samples), dtype=np.int64)
    hom = bool((h[delta_product(alg.carrier, u, v)] == alg.carrier.mul[h[u], h[v]]).all())
    return GFAlgebraReport(unit_law, main_law, hom, main_points, int(np.broadcast(u, v).size))


def check_gf_algebra(q: Quasigroup, mode: str = "sample", samples: int = config.DEFAULT_GF_SAMPLES,
                     seed: int = config.DEFAULT_GF_SEED, budget: int | None = None) -> bool:
    return gf_algebra_report(q, mode, samples, seed, budget).ok


@dataclass
class AlgebraMorphismReport:
    qualifying: list[tuple[int, ...]]
    decompositions: list[Homotopy]
    ok: bool


def algebra_morphism_report(q: Quasigroup, r: Quasigroup, budget: int | None = None) -> AlgebraMorphismReport:
    """Find every homomorphism delta(q) -> delta(r) that is also an algebra
    morphism, and split each one as f1 x f2 x f3 via f_i(u) = pi_i(f(u, u, u)).
    """
    if q.order > 2 or r.order > 2:
        raise BudgetExceeded("algebra morphism search is limited to orders <= 2")
    budget = resolve_budget(budget)
    dq, dr = delta_object(q), delta_object(r)
    hq, hr = structure_map(q), structure_map(r)
    m = r.order
    diag = unit_map(q)
    qualifying = []
    decompositions = []
    ok = True
    for f in _hom_search(dq, dr, injective=False, budget=budget):
        fa = np.asarray(f, dtype=np.int64)
        if not np.array_equal(fa[hq], hr[triple_map(fa, fa, fa, dr.order)]):
            continue
        qualifying.append(f)
        on_diag = fa[diag]
        parts = decode_triple(m, on_diag)
        if not np.array_equal(fa, triple_map(*parts, m)):
            ok = False
            continue
        comps = tuple(tuple(p.tolist()) for p in parts)
        if not is_homotopy(q, r, comps):
            ok = False
            continue
        decompositions.append(Homotopy(q, r, *comps))
    return AlgebraMorphismReport(qualifying, decompositions, ok)


def check_algebra_morphism_form(q: Quasigroup, r: Quasigroup, budget: int | None = None) -> bool:
    return algebra_morphism_report(q, r, budget).ok


# -- isotopy versus isomorphism probe ----------------------------------------


class ProbeReport(NamedTuple):
    isotopic: bool
    delta_iso: bool
    gamma_tables_equal: bool


def probe_isotopy_vs_ss_iso(q: Quasigroup, r: Quasigroup, budget: int | None = None) -> ProbeReport:
    """Report three facts about (q, r) independently; no implication is assumed."""
    partial: dict = {}
    try:
        partial["gamma_tables_equal"] = q.order == r.order and bool(
            np.array_equal(gamma_table(q), gamma_table(r))
        )
        partial["isotopic"] = find_isotopy(q, r, budget) is not None
        partial["delta_iso"] = find_isomorphism(delta_object(q), delta_object(r), budget) is not None
    except BudgetExceeded as exc:
        raise BudgetExceeded(str(exc), partial=partial) from None
    return ProbeReport(partial["isotopic"], partial["delta_iso"], partial["gamma_tables_equal"])


# -- sweeps ------------------------------------------------------------------


class CheckResult(NamedTuple):
    name: str
    args: str
    passed: bool
    witness: str = ""

    def line(self) -> str:
        out = f"CHECK {self.name} {self.args} {'PASS' if self.passed else 'FAIL'}"
        return f"{out} {self.witness}" if self.witness else out


def _label(qs: Sequence[Quasigroup], q: Quasigroup) -> str:
    return f"n{q.order}#{qs.index(q)}"


def sweep_adjunction(qs: Sequence[Quasigroup], budget: int | None = None) -> list[CheckResult]:
    """Unit, counit, triangular identities and naturality over a catalog."""
    from .morphisms import enumerate_homomorphisms

    results = []
    ss = [q for q in qs if is_semisymmetric(q)]
    unit_exact = [q for q in qs if diagonal_is_homomorphism(q) != is_semisymmetric(q)]
    results.append(CheckResult("unit-exactly-on-semisymmetric", f"objects={len(qs)}", not unit_exact,
                               " ".join(_label(qs, q) for q in unit_exact)))
    non_ss = [q for q in qs if not is_semisymmetric(q)]
    failing = [q for q in non_ss if not diagonal_is_homomorphism(q)]
    results.append(CheckResult("diagonal-fails-on-non-semisymmetric", f"candidates={len(non_ss)}",
                               bool(failing) or not non_ss,
                               _label(qs, failing[0]) if failing else ""))
    bad = []
    for q in qs:
        c = counit_arrow(q)
        if not (is_homotopy(c.dom, c.cod, c.components) and counit_is_onto(q)):
            bad.append(_label(qs, q))
    results.append(CheckResult("counit-homotopy", f"objects={len(qs)}", not bad, " ".join(bad)))
    bad = []
    for q in qs:
        if not all(check_triangular(q, delta_object(q))):
            bad.append(_label(qs, q))
    for p in ss:
        if not check_triangular(p, p)[1]:
            bad.append(_label(qs, p))
    results.append(CheckResult("triangular", f"objects={len(qs)}", not bad, " ".join(bad)))
    count = 0
    bad = []
    for p in ss:
        for r in ss:
            for f in enumerate_homomorphisms(p, r, budget):
                count += 1
                if not check_naturality("unit", f):
                    bad.append(f"{_label(qs, p)}->{_label(qs, r)}:{f.map}")
    results.append(CheckResult("unit-naturality", f"arrows={count}", not bad, " ".join(bad[:5])))
    count = 0
    bad = []
    for q in qs:
        for r in qs:
            for h in enumerate_homotopies(q, r, budget):
                count += 1
                if not check_naturality("counit", h):
                    bad.append(f"{_label(qs, q)}->{_label(qs, r)}")
    results.append(CheckResult("counit-naturality", f"arrows={count}", not bad, " ".join(bad[:5])))
    return results


def sweep_faithful(qs: Sequence[Quasigroup], functors: Iterable[str] = ("delta", "gamma"),
                   budget: int | None = None) -> list[CheckResult]:
    results = []
    for functor in functors:
        bad = [f"{_label(qs, q)}->{_label(qs, r)}" for q in qs for r in qs
               if not check_faithful(q, r, functor, budget)]
        results.append(CheckResult(f"faithful-{functor}", f"pairs={len(qs) ** 2}", not bad, " ".join(bad[:5])))
    return results


def sweep_object_injectivity(qs: Sequence[Quasigroup]) -> list[CheckResult]:
    results = []
    delta = check_object_injectivity(qs, "delta")
    wit_ok = all(w.products[0] != w.products[1] for w in delta.witnesses)
    results.append(CheckResult("object-injectivity-delta", f"objects={len(qs)}",
                               delta.injective and wit_ok, f"witnesses={len(delta.witnesses)}"))
    untagged = check_object_injectivity(qs, "gamma_untagged", witnesses=False)
    pairs = " ".join(f"{_label(qs, qs[i])}={_label(qs, qs[j])}" for i, j in untagged.collisions)
    results.append(CheckResult("object-collisions-gamma-untagged", f"objects={len(qs)}", True,
                               f"collisions={len(untagged.collisions)} {pairs}".strip()))
    tagged = check_object_injectivity(qs, "gamma_tagged", witnesses=False)
    results.append(CheckResult("object-injectivity-gamma-tagged", f"objects={len(qs)}", tagged.injective,
                               f"collisions={len(tagged.collisions)}"))
    return results


def sweep_gf_algebra(qs: Sequence[Quasigroup], samples: int = config.DEFAULT_GF_SAMPLES,
                     seed: int = config.DEFAULT_GF_SEED, budget: int | None = None) -> list[CheckResult]:
    results = []
    for q in qs:
        rep = gf_algebra_report(q, "sample", samples, seed, budget)
        results.append(CheckResult(
            "gf-algebra", _label(qs, q), rep.ok,
            f"unit={rep.unit_law} main={rep.main_law}@{rep.main_points} hom={rep.structure_is_homomorphism}",
        ))
    for q in qs:
        if q.order <= 2:
            for r in qs:
                if r.order <= 2:
                    rep = algebra_morphism_report(q, r, budget)
                    results.append(CheckResult("algebra-morphism-form", f"{_label(qs, q)}->{_label(qs, r)}",
                                               rep.ok, f"morphisms={len(rep.qualifying)}"))
    return results
