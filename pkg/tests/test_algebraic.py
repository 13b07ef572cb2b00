"""Algebraic type-former structures: classifying squares and weak pullbacks."""

import dataclasses

import pytest

from piclan import (
    FinMap,
    FinObj,
    PolySignature,
    all_maps_class,
    apply_poly,
    build_cardinality_universe,
    build_id_skeleton,
    build_propositional_universe,
    check_alg_formers,
    check_alg_id,
    check_weak_pullback,
    coherentize,
    elem_to_alg,
    extensional_id,
    lift_retraction,
    monomorphisms,
    poly_compose,
    propositional_formers,
    search_lifter,
    WeakPullbackStructure,
)
from piclan.errors import LiftInvalid


def prop_alg():
    return elem_to_alg(propositional_formers(), monomorphisms())


def test_prop_carrier_sizes():
    # hand-computed: P_tp Ty has 2^1 + 2^0 points, P_tp Tm has 1 + 1,
    # and the composite domain for pair has a single point
    alg = prop_alg()
    u = alg.universe
    sig = PolySignature(u.tp, all_maps_class())
    assert len(apply_poly(sig, u.ty).total) == 3
    assert len(apply_poly(sig, u.tm).total) == 2
    comp = poly_compose(PolySignature(u.tp, alg.cls), PolySignature(u.tp, alg.cls))
    assert len(comp.comp_dom) == 1


def test_prop_algebraic_squares_pass():
    reports = check_alg_formers(prop_alg())
    assert set(reports) == {"unit", "pi", "sigma", "id"}
    for name, report in reports.items():
        for row in report.rows:
            assert row.passed, row.line()


def test_prop_pi_map_frozen_table():
    # canonical base points: (⊤, b=⊤), (⊤, b=⊥), (⊥, empty family)
    alg = prop_alg()
    values = list(alg.pi.pi_map.table.values())
    assert values == ["⊤", "⊥", "⊤"]
    sigma_values = list(alg.sigma.sigma_map.table.values())
    assert sigma_values == ["⊤", "⊥", "⊥"]


def test_extensional_id_weak_pullback():
    u = build_cardinality_universe(2)
    aid = extensional_id(u)
    report = check_alg_id(aid)
    for row in report.rows:
        assert row.passed, row.line()


def test_weak_pullback_is_weak_not_strong():
    # two distinct sections over an identity fiber restrict equally,
    # so the restriction square has non-unique lifts
    u = build_cardinality_universe(2)
    skel = build_id_skeleton(extensional_id(u))
    cones = WeakPullbackStructure(skel.v_square, search_lifter(skel.v_square))
    report = check_weak_pullback(cones)
    assert report.passed


def test_coherentize_idempotent_and_retraction():
    u = build_cardinality_universe(2)
    skel = build_id_skeleton(extensional_id(u))
    wps = WeakPullbackStructure(skel.v_square, search_lifter(skel.v_square))
    once = coherentize(wps)
    twice = coherentize(once)
    for cone in wps.cones().elements:
        assert once.lifter(*cone) == twice.lifter(*cone)
    r = lift_retraction(once)
    assert r.then(r) == r
    # the retraction fixes everything the lifting hits
    for u_elem in r.cod:
        assert r(r(u_elem)) == r(u_elem)


def test_invalid_lifter_is_reported():
    u = build_cardinality_universe(2)
    skel = build_id_skeleton(extensional_id(u))
    corner = skel.v_square.corner

    def wrong(y, x):
        return corner.elements[0]  # ignores the cone

    with pytest.raises(LiftInvalid):
        check_weak_pullback(WeakPullbackStructure(skel.v_square, wrong))


def test_mutated_refl_fails():
    u = build_propositional_universe()
    aid = extensional_id(u)
    # redirect refl through a constant at a wrong point: prop has only one
    # term, so break typing instead by moving id_map off the diagonal
    bad_id = FinMap.constant(aid.id_map.dom, u.ty, "⊥")
    mutant = dataclasses.replace(aid, id_map=bad_id)
    report = check_alg_id(mutant)
    assert not report.passed
