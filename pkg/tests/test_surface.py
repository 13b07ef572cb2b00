"""Surface syntax: lexer, parser, de Bruijn representation, printer."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from piclan.errors import ParseError
from piclan.surface import (
    TmAnn,
    TmApp,
    TmFst,
    TmJ,
    TmLam,
    TmPair,
    TmRefl,
    TmSnd,
    TmTT,
    TmVar,
    TyCode,
    TyId,
    TyPi,
    TySigma,
    TyUnit,
    parse_program,
    parse_term,
    parse_type,
    print_term,
    print_type,
    tokenize,
)


def test_tokens_carry_positions():
    toks = tokenize("fun x =>\n  x")
    assert (toks[0].line, toks[0].col) == (1, 1)
    assert toks[-2].value == "x" and toks[-2].line == 2


def test_lone_dot_is_an_error():
    with pytest.raises(ParseError) as e:
        tokenize("p.")
    assert "1:" in str(e.value)


def test_application_is_left_associative():
    t = parse_term("fun f => fun a => fun b => f a b")
    body = t.body.body.body
    assert isinstance(body, TmApp)
    assert isinstance(body.fn, TmApp)
    assert body.fn.fn == TmVar(2, "f")
    assert body.fn.arg == TmVar(1, "a")
    assert body.arg == TmVar(0, "b")


def test_projection_chains():
    t = parse_term("fun p => p.1.2")
    assert t.body == TmSnd(TmFst(TmVar(0, "p")))


def test_de_bruijn_alpha_equality():
    assert parse_term("fun x => x") == parse_term("fun y => y")
    assert parse_term("fun x => fun y => x") != parse_term("fun x => fun y => y")


def test_shadowing_binds_innermost():
    t = parse_term("fun x => fun x => x")
    assert t.body.body == TmVar(0, "x")


def test_unbound_variable_is_located():
    with pytest.raises(ParseError) as e:
        parse_term("fun x =>\n  y")
    assert str(e.value).startswith("2:3:")
    assert "unbound variable" in str(e.value)


def test_annotation_atom():
    t = parse_term("(fun x => x : (x : Unit) -> Unit) tt")
    assert isinstance(t, TmApp)
    assert isinstance(t.fn, TmAnn)
    assert isinstance(t.fn.ty, TyPi)


def test_dependent_type_scoping():
    ty = parse_type("(x : Unit) -> (y : Unit) * Id Unit x y")
    assert isinstance(ty, TyPi)
    assert isinstance(ty.b, TySigma)
    ident = ty.b.b
    assert isinstance(ident, TyId)
    assert ident.t0 == TmVar(1, "x")
    assert ident.t1 == TmVar(0, "y")


def test_code_atoms():
    ty = parse_type("(x : #2@0) -> #4@1")
    assert ty.a == TyCode(2, 0)
    assert ty.b == TyCode(4, 1)


def test_program_judgments_and_comments():
    src = """
    -- two judgments, one bare term
    tt : Unit;
    fun x => x : (x : Unit) -> Unit;
    tt
    """
    prog = parse_program(src)
    assert len(prog) == 3
    assert prog[0][1] == TyUnit()
    assert prog[2][1] is None


def test_program_rejects_trailing_garbage():
    with pytest.raises(ParseError):
        parse_program("tt : Unit extra")


def test_j_argument_shapes():
    t = parse_term("fun x => fun y => fun p => J Unit x y p")
    j = t.body.body.body
    assert isinstance(j, TmJ)
    assert j.motive == TyUnit()
    assert j.base == TmVar(2, "x")
    assert j.target == TmVar(1, "y")
    assert j.proof == TmVar(0, "p")


ROUNDTRIP_SOURCES = [
    "tt",
    "fun x => x",
    "fun f => fun a => f a",
    "fun p => <p.2, p.1>",
    "refl tt",
    "fun x => fun y => fun p => J Unit x y p",
    "(fun x => x : (x : Unit) -> Unit) tt",
    "fun x => refl x",
    "<tt, <tt, tt>>",
    "fun g => g tt (refl tt)",
]


@pytest.mark.parametrize("src", ROUNDTRIP_SOURCES)
def test_print_parse_roundtrip_corpus(src):
    t = parse_term(src)
    assert parse_term(print_term(t)) == t


def test_printer_freshens_shadowed_names():
    t = parse_term("fun x => fun x => <x, x>")
    printed = print_term(t)
    assert parse_term(printed) == t
    inner = printed.split("=>")[-1]
    # the body must not refer to the outer binder's pristine name twice
    assert printed.count("fun") == 2


NAMES = ("x", "y", "z", "f", "p")


def _var_name(i):
    return NAMES[i % len(NAMES)]


@st.composite
def term_ast(draw, binders, depth):
    opts = ["tt"]
    if binders > 0:
        opts.append("var")
    if depth > 0:
        opts.extend(["lam", "app", "pair", "fst", "snd", "refl", "ann", "j"])
    kind = draw(st.sampled_from(opts))
    if kind == "tt":
        return TmTT()
    if kind == "var":
        i = draw(st.integers(min_value=0, max_value=binders - 1))
        return TmVar(i, _var_name(i))
    if kind == "lam":
        name = draw(st.sampled_from(NAMES))
        return TmLam(name, draw(term_ast(binders + 1, depth - 1)))
    if kind == "app":
        return TmApp(draw(term_ast(binders, depth - 1)),
                     draw(term_ast(binders, depth - 1)))
    if kind == "pair":
        return TmPair(draw(term_ast(binders, depth - 1)),
                      draw(term_ast(binders, depth - 1)))
    if kind == "fst":
        return TmFst(draw(term_ast(binders, depth - 1)))
    if kind == "snd":
        return TmSnd(draw(term_ast(binders, depth - 1)))
    if kind == "refl":
        return TmRefl(draw(term_ast(binders, depth - 1)))
    if kind == "ann":
        return TmAnn(draw(term_ast(binders, depth - 1)),
                     draw(type_ast(binders, depth - 1)))
    return TmJ(draw(type_ast(binders, depth - 1)),
               draw(term_ast(binders, depth - 1)),
               draw(term_ast(binders, depth - 1)),
               draw(term_ast(binders, depth - 1)))


@st.composite
def type_ast(draw, binders, depth):
    opts = ["unit", "code"]
    if depth > 0:
        opts.extend(["pi", "sigma", "id"])
    kind = draw(st.sampled_from(opts))
    if kind == "unit":
        return TyUnit()
    if kind == "code":
        return TyCode(draw(st.integers(min_value=0, max_value=4)),
                      draw(st.integers(min_value=0, max_value=2)))
    if kind == "pi":
        name = draw(st.sampled_from(NAMES))
        return TyPi(name, draw(type_ast(binders, depth - 1)),
                    draw(type_ast(binders + 1, depth - 1)))
    if kind == "sigma":
        name = draw(st.sampled_from(NAMES))
        return TySigma(name, draw(type_ast(binders, depth - 1)),
                       draw(type_ast(binders + 1, depth - 1)))
    return TyId(draw(type_ast(binders, depth - 1)),
                draw(term_ast(binders, depth - 1)),
                draw(term_ast(binders, depth - 1)))


@settings(max_examples=120)
@given(term_ast(binders=0, depth=3))
def test_print_parse_roundtrip_random_terms(t):
    assert parse_term(print_term(t)) == t


@settings(max_examples=80)
@given(type_ast(binders=0, depth=3))
def test_print_parse_roundtrip_random_types(ty):
    assert parse_type(print_type(ty)) == ty
