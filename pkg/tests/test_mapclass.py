"""Map classes and the (pre)clan axiom checkers."""

import itertools

from piclan import (
    FinMap,
    FinObj,
    all_maps,
    all_maps_class,
    bang,
    build_propositional_universe,
    fiber_size_class,
    monomorphisms,
    objects_up_to,
    principal_class,
    pullback_square_oracle,
    run_axioms,
    surjections,
    union_class,
)


def test_membership_basics():
    x = FinObj(["a", "b"])
    y = FinObj(["u", "v", "w"])
    inj = FinMap.from_table(x, y, {"a": "u", "b": "v"})
    collapse = FinMap.from_table(x, FinObj(["u"]), {"a": "u", "b": "u"})
    assert monomorphisms().member(inj)
    assert not monomorphisms().member(collapse)
    assert surjections().member(collapse)
    assert not surjections().member(inj)
    assert all_maps_class().member(inj)


def test_fiber_size_class():
    cls = fiber_size_class({0, 2})
    x = FinObj(["a", "b"])
    y = FinObj(["u", "v"])
    two_to_one = FinMap.from_table(x, FinObj(["u"]), {"a": "u", "b": "u"})
    assert cls.member(two_to_one)
    assert not cls.member(FinMap.identity(y))  # fibers of size 1


def test_monos_form_preclan():
    for report in run_axioms(monomorphisms(), bound=3, axioms=(1, 2, 3)):
        assert report.verdict, report.line()


def test_monos_fail_clan_axiom():
    # bang from a 2-element object is not injective
    reports = run_axioms(monomorphisms(), bound=2, axioms=(5,))
    assert len(reports) == 1
    assert not reports[0].verdict
    assert reports[0].counterexample is not None


def test_all_maps_form_clan():
    for report in run_axioms(all_maps_class(), bound=2):
        assert report.verdict, report.line()


def test_bounded_class_not_pullback_stable():
    # a 2x2 pullback apex outgrows the size bound
    reports = run_axioms(all_maps_class(3), bound=2, axioms=(1,))
    assert not reports[0].verdict


def test_surjections_fail_terminal_axiom():
    # the empty object's map to the terminal is not surjective
    reports = run_axioms(surjections(), bound=2, axioms=(5,))
    assert not reports[0].verdict
    # but surjections are stable under pullback and composition
    for report in run_axioms(surjections(), bound=2, axioms=(1, 3)):
        assert report.verdict, report.line()


def test_axiom_report_line_format():
    report = run_axioms(monomorphisms(), bound=2, axioms=(2,))[0]
    assert report.line().startswith("axiom=2 verdict=")


def test_principal_class_of_prop_is_monos():
    u = build_propositional_universe()
    r_tp = principal_class(u.tp)
    monos = monomorphisms()
    objs = objects_up_to(3)
    for x, y in itertools.product(objs, objs):
        for f in all_maps(x, y):
            assert r_tp.member(f) == monos.member(f)


def test_principal_membership_matches_square_search():
    # dual routes: fiber criterion vs explicit classifying-square search
    u = build_propositional_universe()
    r_tp = principal_class(u.tp)
    objs = objects_up_to(3)
    for x, y in itertools.product(objs, objs):
        for f in all_maps(x, y):
            witness = pullback_square_oracle(f, u.tp)
            assert r_tp.member(f) == (witness is not None)


def test_classifying_square_is_genuine():
    u = build_propositional_universe()
    x = FinObj(["a"])
    y = FinObj(["u", "v"])
    f = FinMap.from_table(x, y, {"a": "u"})
    sq = pullback_square_oracle(f, u.tp)
    assert sq is not None
    assert sq.base_map.dom == y
    assert sq.base_map.cod == u.ty
    assert sq.top_map.then(u.tp) == f.then(sq.base_map)


def test_oracle_rejects_non_principal():
    u = build_propositional_universe()
    x = FinObj(["a", "b"])
    collapse = bang(x)  # fiber of size 2, but tp has fibers 0 and 1
    assert pullback_square_oracle(collapse, u.tp) is None
    assert not principal_class(u.tp).member(collapse)


def test_union_class_is_monotone():
    small = fiber_size_class({0, 1})
    big = fiber_size_class({0, 1, 2})
    both = union_class([small, big])
    x = FinObj(["a", "b"])
    f = bang(x)
    assert not small.member(f)
    assert big.member(f)
    assert both.member(f)
