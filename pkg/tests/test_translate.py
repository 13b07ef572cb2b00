"""Translations between elementary and algebraic presentations."""

from piclan import (
    all_bijections,
    build_fiber_universe,
    build_propositional_universe,
    build_tower,
    check_alg_formers,
    check_elem_formers,
    check_roundtrip_alg,
    check_roundtrip_elem,
    elem_to_alg,
    extract_alg_from_closure,
    hierarchy_corollary,
    alg_to_elem,
    monomorphisms,
    principal_class,
    principal_preclan_theorem,
    propositional_formers,
)

BOUND = 2


def prop_alg():
    return elem_to_alg(propositional_formers(), monomorphisms())


def test_elem_to_alg_passes_algebraic_checks():
    for name, report in check_alg_formers(prop_alg()).items():
        for row in report.rows:
            assert row.passed, row.line()


def test_alg_to_elem_passes_elementary_suites():
    back = alg_to_elem(prop_alg())
    for name, report in check_elem_formers(back, bound=BOUND).items():
        for row in report.rows:
            assert row.passed, row.line()


def test_roundtrip_elem_reproduces_tables():
    report = check_roundtrip_elem(propositional_formers(), monomorphisms(), bound=BOUND)
    assert {r.clause for r in report.rows} >= {
        "unit", "pi-form", "pi-lam", "pi-unlam",
        "sigma-form", "sigma-pair", "sigma-fst", "sigma-snd",
        "id-form", "id-refl", "id-j"}
    for row in report.rows:
        assert row.passed, row.line()


def test_roundtrip_alg_reproduces_maps():
    report = check_roundtrip_alg(prop_alg())
    for row in report.rows:
        assert row.passed, row.line()


def test_principal_preclan_theorem_rows():
    report = principal_preclan_theorem(propositional_formers(), bound=BOUND)
    clauses = [r.clause for r in report.rows]
    assert clauses[0] == "premise"
    assert "classify" in clauses and "display" in clauses
    for row in report.rows:
        assert row.passed, row.line()


def test_hierarchy_corollary_rows():
    report = hierarchy_corollary(build_tower((2, 4)), bound=BOUND)
    for row in report.rows:
        assert row.passed, row.line()


def test_hierarchy_classes_nest():
    tower = build_tower((2, 4))
    r0 = principal_class(tower.levels[0].tp)
    r1 = principal_class(tower.levels[1].tp)
    from piclan import all_maps, objects_up_to
    hits0 = hits1 = 0
    for x in objects_up_to(3):
        for y in objects_up_to(3):
            for f in all_maps(x, y):
                if r0.member(f):
                    hits0 += 1
                    assert r1.member(f)
                hits1 += r1.member(f)
    assert hits0 == 54 and hits1 == 60  # frozen counts at bound 3


def agree_up_to_fiber_bijection(left_leg, lam1, lam2):
    """lam2 = phi >> lam1 for some bijection phi over the left leg."""
    if lam1 == lam2:
        return True
    for phi in all_bijections(lam1.dom, lam1.dom):
        if phi.then(left_leg) == left_leg and phi.then(lam1) == lam2:
            return True
    return False


def test_extraction_on_prop_agrees_with_translation():
    u = build_propositional_universe()
    extracted = extract_alg_from_closure(u, principal_class(u.tp))
    direct = prop_alg()
    assert extracted.unit is not None
    assert extracted.unit.type_point == direct.unit.type_point
    assert extracted.unit.term_point == direct.unit.term_point
    assert extracted.pi is not None
    assert extracted.pi.pi_map == direct.pi.pi_map
    assert agree_up_to_fiber_bijection(
        extracted.pi.lam_map.then(u.tp), direct.pi.lam_map, extracted.pi.lam_map)
    assert extracted.sigma is not None
    assert extracted.sigma.sigma_map == direct.sigma.sigma_map
    assert agree_up_to_fiber_bijection(
        extracted.sigma.pair_map.then(u.tp),
        direct.sigma.pair_map, extracted.sigma.pair_map)
    # identity extraction is out of scope by design
    assert extracted.ident is None


def test_extraction_verifies_its_output():
    u = build_propositional_universe()
    extracted = extract_alg_from_closure(u, principal_class(u.tp))
    reports = check_alg_formers(extracted)
    for name, report in reports.items():
        for row in report.rows:
            assert row.passed, row.line()


def test_extraction_refuses_non_closed_universe():
    # fiber sizes {1, 2}: 2*2 = 4 is not a fiber size, so Pi and Sigma fail
    u = build_fiber_universe((1, 2))
    extracted = extract_alg_from_closure(u, principal_class(u.tp))
    assert extracted.unit is not None
    assert extracted.pi is None
    assert extracted.sigma is None
