"""Bidirectional checking and evaluation against universe models."""

import pytest

from piclan import (
    check_context,
    check_judgment,
    check_source,
    eval_judgment,
    parse_term,
    parse_type,
    prop_model,
    tower_model,
)
from piclan.errors import CheckError, EmptyContext, ParseError, UniverseError


GOOD_PROP = [
    ("tt", "Unit"),
    ("fun x => x", "(x : Unit) -> Unit"),
    ("(fun x => x : (x : Unit) -> Unit) tt", "Unit"),
    ("<tt, tt>", "(x : Unit) * Unit"),
    ("(<tt, tt> : (x : Unit) * Unit).1", "Unit"),
    ("(<tt, tt> : (x : Unit) * Unit).2", "Unit"),
    ("refl tt", "Id Unit tt tt"),
    ("J Unit tt tt (refl tt)", "Unit"),
    ("fun x => fun y => fun p => J Unit x y p",
     "(x : Unit) -> (y : Unit) -> (p : Id Unit x y) -> Unit"),
]


@pytest.mark.parametrize("src,ty", GOOD_PROP)
def test_prop_judgments_check(src, ty):
    model = prop_model()
    j = check_judgment(model, parse_term(src), parse_type(ty))
    # soundness re-checked from outside: the term denotes over its type
    assert j.den.then(model.formers.universe.tp) == j.ty_den


def test_prop_closed_values_print_locally():
    model = prop_model()
    for src, ty in GOOD_PROP[:8]:
        j = check_judgment(model, parse_term(src), parse_type(ty))
        assert eval_judgment(j) == "•"


def test_synthesis_of_annotated_redex():
    model = prop_model()
    j = check_judgment(model, parse_term("(fun x => x : (x : Unit) -> Unit) tt"))
    assert j.annotation is None
    assert j.ty_desc == "Unit"


BAD_PROP = [
    ("tt tt", None, "not a function"),
    ("tt.1", None, "projects from a pair"),
    ("tt.2", None, "projects from a pair"),
    ("fun x => x", "Unit", "checks only against a function type"),
    ("<tt, tt>", "(x : Unit) -> Unit", "checks only against a pair type"),
    ("refl tt", "Unit", "checks only against an identity type"),
    ("J Unit tt tt tt", None, "eliminates an identity proof"),
    ("fun x => x", None, "needs a type annotation"),
    ("<tt, tt>", None, "needs a type annotation"),
    ("(tt : Unit) tt", None, "not a function"),
]


@pytest.mark.parametrize("src,ty,msg", BAD_PROP)
def test_prop_rejections_are_located(src, ty, msg):
    model = prop_model()
    with pytest.raises(CheckError) as e:
        check_judgment(model, parse_term(src),
                       parse_type(ty) if ty else None)
    text = str(e.value)
    assert msg in text
    line, col = text.split(":")[:2]
    assert int(line) >= 1 and int(col) >= 1


def test_unbound_variable_is_parse_error():
    with pytest.raises(ParseError) as e:
        parse_term("fun x => y")
    assert "unbound variable" in str(e.value)


def test_prop_conflates_denotationally_equal_types():
    # Unit and the inhabited pair type have the same denotation, so
    # conversion accepts this judgment; equality is semantic by design
    model = prop_model()
    j = check_judgment(model, parse_term("tt"), parse_type("(x : Unit) * Unit"))
    assert eval_judgment(j) == "•"


def test_check_source_multiple_judgments():
    model = prop_model()
    js = check_source("tt : Unit; fun x => x : (x : Unit) -> Unit", model)
    assert len(js) == 2
    assert js[0].ty_desc == "Unit"


def test_tower_levels():
    model = tower_model((2, 4))
    j0 = check_judgment(model, parse_term("tt"), parse_type("Unit"))
    assert j0.level == 0
    j1 = check_judgment(model, parse_term("fun x => x"),
                        parse_type("(x : #2@0) -> #2@0"))
    assert j1.level == 1


def test_tower_code_bound_enforced():
    model = tower_model((2, 4))
    with pytest.raises(UniverseError) as e:
        check_judgment(model, parse_term("fun x => x"),
                       parse_type("(x : #3@0) -> #3@0"))
    assert "exceeds" in str(e.value)


def test_tower_level_mixing_rejected():
    model = tower_model((2, 4))
    with pytest.raises(UniverseError):
        check_judgment(model, parse_term("fun x => fun y => x"),
                       parse_type("(x : #2@0) -> (y : #2@0) -> #2@0"))


def test_tower_has_no_level_above_the_top():
    model = tower_model((2, 4))
    with pytest.raises(UniverseError):
        check_judgment(
            model, parse_term("fun f => f"),
            parse_type("(f : (x : #2@0) -> #2@0) -> (x : #2@0) -> #2@0"))


def test_tower_open_judgments_and_eval():
    model = tower_model((2, 4))
    ctx = check_context(model, [("x", parse_type("#2@0"))])
    scope = ("x",)
    j = check_judgment(model, parse_term("refl x", scope),
                       parse_type("Id #2@0 x x", scope), ctx)
    assert j.level == 0
    envs = list(j.ctx_obj.elements)
    assert len(envs) == 2
    assert eval_judgment(j, envs[0]) == "0"


def test_tower_j_on_context_endpoints():
    model = tower_model((2, 4))
    ctx = check_context(model, [("x", parse_type("#2@0")),
                                ("y", parse_type("#2@0"))])
    scope = ("x", "y")
    j = check_judgment(model, parse_term("J #2@0 x x (refl x)", scope),
                       parse_type("#2@0", scope), ctx)
    for env in j.ctx_obj.elements:
        # J on refl evaluates to the base point, here the variable itself
        assert eval_judgment(j, env) == eval_judgment(
            check_judgment(model, parse_term("x", scope),
                           parse_type("#2@0", scope), ctx), env)


def test_eval_requires_env_for_open_contexts():
    model = tower_model((2, 4))
    ctx = check_context(model, [("x", parse_type("#2@0"))])
    j = check_judgment(model, parse_term("x", ("x",)),
                       parse_type("#2@0", ("x",)), ctx)
    with pytest.raises(EmptyContext):
        eval_judgment(j)
    with pytest.raises(EmptyContext):
        eval_judgment(j, "nonsense")


def test_eval_fails_on_empty_context():
    model = tower_model((2, 4))
    ctx = check_context(model, [("x", parse_type("#0@0"))])
    j = check_judgment(model, parse_term("x", ("x",)),
                       parse_type("#0@0", ("x",)), ctx)
    with pytest.raises(EmptyContext):
        eval_judgment(j)


def test_refl_requires_equal_endpoints():
    model = tower_model((2, 4))
    ctx = check_context(model, [("x", parse_type("#2@0")),
                                ("y", parse_type("#2@0"))])
    scope = ("x", "y")
    with pytest.raises(CheckError) as e:
        check_judgment(model, parse_term("refl x", scope),
                       parse_type("Id #2@0 x y", scope), ctx)
    assert "endpoints" in str(e.value)


def test_j_target_must_match_proof_endpoint():
    model = tower_model((2, 4))
    ctx = check_context(model, [("x", parse_type("#2@0")),
                                ("y", parse_type("#2@0"))])
    scope = ("x", "y")
    with pytest.raises(CheckError):
        check_judgment(model, parse_term("J #2@0 x y (refl x)", scope),
                       parse_type("#2@0", scope), ctx)
