import numpy as np
import pytest

from conftest import CATALOG3, ID2, NEG3, S, TRIVIAL, Z2, Z2_ODOT, Z3
from qss.catcheck import (
    adjunction_witness,
    algebra_morphism_report,
    check_faithful,
    check_gf_algebra,
    check_naturality,
    check_object_injectivity,
    check_triangular,
    counit_arrow,
    counit_is_onto,
    diagonal_is_homomorphism,
    gf_algebra,
    gf_algebra_report,
    probe_isotopy_vs_ss_iso,
    structure_map,
    sweep_adjunction,
    sweep_faithful,
    sweep_gf_algebra,
    sweep_object_injectivity,
    unit_arrow,
)
from qss.errors import BudgetExceeded, InputError, PreconditionError
from qss.morphisms import (
    Homomorphism,
    Homotopy,
    enumerate_homotopies,
    identity_homomorphism,
    identity_homotopy,
    is_homomorphism,
    is_homotopy,
)
from qss.qcore import is_semisymmetric
from qss.semisym import decode_triple, delta_object, encode_triple, gamma_object

ORDER2 = CATALOG3[:3]


def test_unit_arrow_examples():
    eta = unit_arrow(Z2)
    assert eta.cod.order == 8
    assert is_homomorphism(eta.dom, eta.cod, eta.map)
    assert unit_arrow(TRIVIAL).map == (0,)
    with pytest.raises(PreconditionError):
        unit_arrow(Z3)
    assert not diagonal_is_homomorphism(Z3)
    assert diagonal_is_homomorphism(NEG3)


def test_unit_exactly_on_semisymmetric():
    for q in CATALOG3:
        assert diagonal_is_homomorphism(q) == is_semisymmetric(q)


def test_counit():
    for q in CATALOG3:
        c = counit_arrow(q)
        assert is_homotopy(c.dom, c.cod, c.components)
        assert counit_is_onto(q)
    c = counit_arrow(Z2)
    assert c.f1[encode_triple(2, 1, 0, 1)] == 1
    assert c.f2[encode_triple(2, 1, 0, 1)] == 0


def test_adjunction_witness():
    w = adjunction_witness(NEG3)
    assert w.unit.dom == NEG3 and w.counit.cod == NEG3


def test_triangular_examples():
    assert check_triangular(Z2, Z2) == (True, True)
    assert check_triangular(TRIVIAL, TRIVIAL) == (True, True)
    with pytest.raises(PreconditionError):
        check_triangular(Z2, Z3)


def test_triangular_order_3():
    for q in CATALOG3:
        assert check_triangular(q, delta_object(q)) == (True, True)


def test_structure_map_is_projection_triple():
    n = 2
    h = structure_map(Z2)
    assert h.shape == (8**3,)
    a, b, c = 5, 2, 7
    idx = encode_triple(8, a, b, c)
    assert decode_triple(n, int(h[idx])) == (decode_triple(n, a)[0], decode_triple(n, b)[1], decode_triple(n, c)[2])


def test_naturality_identities():
    for q in CATALOG3:
        assert check_naturality("counit", identity_homotopy(q))
        if is_semisymmetric(q):
            assert check_naturality("unit", identity_homomorphism(q))


def test_naturality_on_arrows():
    for q in ORDER2:
        for r in ORDER2:
            for h in enumerate_homotopies(q, r):
                assert check_naturality("counit", h)
    assert check_naturality("unit", Homomorphism(Z2, Z2, (0, 0))) is True


def test_naturality_rejects_bad_arrows():
    with pytest.raises(InputError):
        check_naturality("counit", Homotopy(Z2, Z2, S, S, S))
    with pytest.raises(InputError):
        check_naturality("unit", Homomorphism(Z3, Z3, (0, 1, 2)))
    with pytest.raises(InputError):
        check_naturality("unit", Homomorphism(Z2, Z2, S))
    with pytest.raises(InputError):
        check_naturality("sideways", identity_homotopy(Z2))
    with pytest.raises(InputError):
        check_naturality("unit", identity_homotopy(Z2))


def test_faithful_examples():
    for functor in ("delta", "gamma"):
        assert check_faithful(Z2, Z2, functor)
        assert check_faithful(TRIVIAL, TRIVIAL, functor)
    with pytest.raises(InputError):
        check_faithful(Z2, Z2, "sigma")
    with pytest.raises(BudgetExceeded):
        check_faithful(Z3, Z3, budget=10)


def test_faithful_order_2_pairs():
    for q in ORDER2:
        for r in ORDER2:
            assert check_faithful(q, r, "delta") and check_faithful(q, r, "gamma")


def test_object_injectivity_examples():
    order3 = CATALOG3[3:]
    rep = check_object_injectivity(order3, "delta")
    assert rep.injective and rep.size == 12
    assert len(rep.witnesses) == 66
    assert all(w.products[0] != w.products[1] for w in rep.witnesses)
    assert check_object_injectivity([Z2, Z2_ODOT], "gamma_untagged").collisions == [(0, 1)]
    assert check_object_injectivity([Z2, Z2_ODOT], "gamma_tagged").injective
    with pytest.raises(InputError):
        check_object_injectivity([Z2], "sigma")


def test_object_injectivity_catalog():
    assert check_object_injectivity(CATALOG3, "delta").injective
    assert check_object_injectivity(CATALOG3, "gamma_tagged").injective
    untagged = check_object_injectivity(CATALOG3, "gamma_untagged", witnesses=False)
    order2 = [c for c in untagged.collisions if CATALOG3[c[0]].order == 2]
    assert order2 == [(CATALOG3.index(Z2), CATALOG3.index(Z2_ODOT))]


def test_gf_algebra_instance():
    alg = gf_algebra(Z2)
    assert alg.carrier == delta_object(Z2)
    assert alg.structure.shape == (512,)


def test_gf_examples():
    rep = gf_algebra_report(TRIVIAL, "exhaustive")
    assert rep.ok and rep.main_points == 1
    rep = gf_algebra_report(Z2, "sample", samples=10**5, seed=1)
    assert rep.ok and rep.main_points == 10**5
    for q in CATALOG3:
        assert gf_algebra_report(q, samples=1000).unit_law
    with pytest.raises(BudgetExceeded):
        gf_algebra_report(Z2, "exhaustive")
    with pytest.raises(InputError):
        gf_algebra_report(Z2, "guess")


def test_gf_sampling_is_reproducible():
    assert gf_algebra_report(Z3, samples=500, seed=7) == gf_algebra_report(Z3, samples=500, seed=7)
    assert check_gf_algebra(Z3, samples=500)


def test_algebra_morphism_form():
    for q in ORDER2:
        for r in ORDER2:
            rep = algebra_morphism_report(q, r)
            assert rep.ok
            expected = {h.components for h in enumerate_homotopies(q, r)}
            assert {h.components for h in rep.decompositions} == expected
    with pytest.raises(BudgetExceeded):
        algebra_morphism_report(Z3, Z3)


def test_probe():
    rep = probe_isotopy_vs_ss_iso(Z2, Z2_ODOT)
    assert rep.isotopic and rep.gamma_tables_equal
    assert isinstance(rep.delta_iso, bool)
    assert probe_isotopy_vs_ss_iso(Z3, Z3) == (True, True, True)
    rep = probe_isotopy_vs_ss_iso(Z3, NEG3)
    assert rep.gamma_tables_equal
    assert isinstance(rep.isotopic, bool) and isinstance(rep.delta_iso, bool)


def test_probe_gamma_equality_means_identity_iso():
    for q in ORDER2:
        for r in ORDER2:
            if probe_isotopy_vs_ss_iso(q, r).gamma_tables_equal:
                assert is_homomorphism(gamma_object(q), gamma_object(r), tuple(range(q.order**2)))


def test_probe_budget_carries_partial():
    with pytest.raises(BudgetExceeded) as info:
        probe_isotopy_vs_ss_iso(Z3, NEG3, budget=5)
    assert set(info.value.partial) == {"gamma_tables_equal"}
    assert info.value.partial["gamma_tables_equal"] is True


def test_sweeps_pass_order_2():
    results = sweep_adjunction(ORDER2) + sweep_faithful(ORDER2) + sweep_object_injectivity(ORDER2)
    results += sweep_gf_algebra(ORDER2, samples=2000)
    assert all(r.passed for r in results), [r.line() for r in results if not r.passed]
    assert results[0].line().startswith("CHECK unit-exactly-on-semisymmetric")
    assert all(r.line().split()[3] in ("PASS", "FAIL") or r.line().split()[2] in ("PASS", "FAIL") for r in results)
