"""Bidirectional checking of the surface syntax in finite-set models.

Types elaborate to TypeVal records: the denotation Gamma -> Ty plus
enough remembered structure (domain, extension, codomain, endpoints and
the former that built it) to drive the eliminators.  Terms check against
a TypeVal or synthesize one; introductions check, eliminations and
annotations synthesize.  Definitional equality is denotation equality in
the model, which is sound and complete here because the models are
finite.  Every accepted denotation is re-verified against its typing
equation a >> tp = A before it is returned.

Two model backends: FormersModel wraps any single-universe bundle of
elementary formers (the propositional model is the stock instance), and
TowerModel interprets level-annotated base codes in a universe tower,
with Pi and Sigma landing one level up and extensional identity types at
each level.  Level mismatches and oversized codes raise UniverseError.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .elementary import (ElemFormers, ElemId, ElemPi, ElemSigma,
                         extensional_elementary_id, heterogeneous_pi_sigma,
                         id_context, propositional_formers,
                         singleton_elementary_unit, weaken)
from .errors import (BoundsTooTight, CheckError, EmptyContext, LawViolation,
                     UniverseError)
from .fin import FinMap, FinObj, label_str, terminal
from .surface import (Term, TmAnn, TmApp, TmFst, TmJ, TmLam, TmPair, TmRefl,
                      TmSnd, TmTT, TmVar, TyCode, TyId, TyPi, TySigma, TyUnit,
                      Type, parse_program, print_term, print_type)
from .universe import (ContextExtension, Universe, UniverseTower, build_tower,
                       code_label, context_extend, pair_sub)


# -- semantic types -----------------------------------------------------------


@dataclass(frozen=True)
class TypeVal:
    """A checked type: its denotation plus the structure to eliminate it."""

    form: str                # unit | code | pi | sigma | id
    level: int
    den: FinMap              # context object -> Ty at `level`
    elem: object = None      # the former bundle that built it
    name: str = ""           # binder name for pi/sigma
    a: Optional["TypeVal"] = None
    ext: Optional[ContextExtension] = None   # extension by a.den
    b: Optional["TypeVal"] = None            # over ext.ext
    t0: Optional[FinMap] = None              # id endpoints
    t1: Optional[FinMap] = None
    size: int = 0            # code fiber size


def describe(v: TypeVal) -> str:
    if v.form == "unit":
        return "Unit"
    if v.form == "code":
        return f"#{v.size}@{v.level}"
    if v.form in ("pi", "sigma"):
        op = "->" if v.form == "pi" else "*"
        name = v.name or "_"
        return f"({name} : {describe(v.a)}) {op} {describe(v.b)}"
    inner = describe(v.a)
    if " " in inner:
        inner = f"({inner})"
    return f"Id {inner} _ _"


def subst_tyval(model, v: TypeVal, sigma: FinMap) -> TypeVal:
    """Reindex a semantic type along sigma: Delta -> Gamma."""
    den = sigma.then(v.den)
    if v.form in ("unit", "code"):
        return replace(v, den=den)
    if v.form in ("pi", "sigma"):
        a = subst_tyval(model, v.a, sigma)
        ua = model.universe(v.a.level)
        ext = context_extend(ua, sigma.dom, a.den)
        lifted = weaken(ua, sigma, v.a.den)
        return replace(v, den=den, a=a, ext=ext,
                       b=subst_tyval(model, v.b, lifted))
    return replace(v, den=den, a=subst_tyval(model, v.a, sigma),
                   t0=sigma.then(v.t0), t1=sigma.then(v.t1))


# -- model backends -----------------------------------------------------------


class FormersModel:
    """A single-universe model: every former lives at level 0."""

    def __init__(self, formers: ElemFormers, name: str = "prop"):
        self.formers = formers
        self.name = name

    def _check_level(self, level: int):
        if level != 0:
            raise UniverseError(
                f"the {self.name} model has one level, not {level}")

    def universe(self, level: int = 0) -> Universe:
        self._check_level(level)
        return self.formers.universe

    def unit(self):
        return 0, self.formers.unit

    def pi(self, a_level: int, b_level: int):
        self._check_level(a_level)
        self._check_level(b_level)
        return 0, self.formers.pi

    def sigma(self, a_level: int, b_level: int):
        self._check_level(a_level)
        self._check_level(b_level)
        return 0, self.formers.sigma

    def ident(self, level: int) -> ElemId:
        self._check_level(level)
        return self.formers.ident

    def code_den(self, gamma: FinObj, size: int, level: int) -> FinMap:
        raise UniverseError(f"the {self.name} model has no base codes")


def prop_model() -> FormersModel:
    return FormersModel(propositional_formers(), name="prop")


class TowerModel:
    """Level-annotated codes in a tower; Pi and Sigma land one level up."""

    def __init__(self, tower: UniverseTower, name: str = "tower"):
        self.tower = tower
        self.name = name
        self._unit = None
        self._pairs: dict[int, tuple[ElemPi, ElemSigma]] = {}
        self._idents: dict[int, ElemId] = {}

    def universe(self, level: int) -> Universe:
        if not 0 <= level < len(self.tower.levels):
            top = len(self.tower.levels) - 1
            raise UniverseError(f"the tower has levels 0..{top}, not {level}")
        return self.tower.levels[level]

    def unit(self):
        if self._unit is None:
            self._unit = singleton_elementary_unit(self.universe(0))
        return 0, self._unit

    def _pair(self, level: int):
        if level not in self._pairs:
            self.universe(level)
            if level + 1 >= len(self.tower.levels):
                raise UniverseError(
                    f"no universe above level {level} to hold the former")
            try:
                self._pairs[level] = heterogeneous_pi_sigma(
                    self.tower, level, level + 1)
            except BoundsTooTight as exc:
                raise UniverseError(str(exc)) from exc
        return self._pairs[level]

    def _same_level(self, a_level: int, b_level: int, what: str) -> int:
        if a_level != b_level:
            raise UniverseError(f"{what} components live at distinct levels "
                                f"{a_level} and {b_level}")
        return a_level

    def pi(self, a_level: int, b_level: int):
        level = self._same_level(a_level, b_level, "Pi")
        return level + 1, self._pair(level)[0]

    def sigma(self, a_level: int, b_level: int):
        level = self._same_level(a_level, b_level, "Sigma")
        return level + 1, self._pair(level)[1]

    def ident(self, level: int) -> ElemId:
        if level not in self._idents:
            self._idents[level] = extensional_elementary_id(
                self.universe(level))
        return self._idents[level]

    def code_den(self, gamma: FinObj, size: int, level: int) -> FinMap:
        universe = self.universe(level)
        bound = self.tower.bounds[level]
        if size > bound:
            raise UniverseError(f"a {size}-element type exceeds the "
                                f"level-{level} bound {bound}")
        return FinMap.constant(gamma, universe.ty, code_label(size))


def tower_model(bounds=(2, 4)) -> TowerModel:
    return TowerModel(build_tower(bounds))


# -- contexts -----------------------------------------------------------------


@dataclass(frozen=True)
class CtxEntry:
    name: str
    tyval: TypeVal               # over the context before this entry
    ext: ContextExtension


@dataclass(frozen=True)
class Ctx:
    model: object
    entries: tuple[CtxEntry, ...]
    obj: FinObj

    @staticmethod
    def empty(model) -> "Ctx":
        return Ctx(model, (), terminal())

    def push(self, name: str, tyval: TypeVal, ext: ContextExtension) -> "Ctx":
        entry = CtxEntry(name, tyval, ext)
        return Ctx(self.model, self.entries + (entry,), ext.ext)

    def lookup(self, index: int) -> tuple[TypeVal, FinMap]:
        entry = self.entries[-1 - index]
        sigma = FinMap.identity(self.obj)
        for later in reversed(self.entries[len(self.entries) - index:]):
            sigma = sigma.then(later.ext.display)
        den = sigma.then(entry.ext.var_map)
        tyval = subst_tyval(self.model, entry.tyval,
                            sigma.then(entry.ext.display))
        return tyval, den


def check_context(model, bindings) -> Ctx:
    """Build a semantic context from (name, surface type) pairs."""
    ctx = Ctx.empty(model)
    for name, st in bindings:
        tyval = elaborate_type(ctx, st)
        ext = context_extend(model.universe(tyval.level), ctx.obj, tyval.den)
        ctx = ctx.push(name, tyval, ext)
    return ctx


# -- the checker --------------------------------------------------------------


def _sound(ctx: Ctx, tyval: TypeVal, den: FinMap, pos) -> FinMap:
    # the typing equation is re-verified on every accepted denotation
    tp = ctx.model.universe(tyval.level).tp
    if den.then(tp) != tyval.den:
        raise LawViolation(
            f"{pos[0]}:{pos[1]}: accepted denotation fails its typing equation")
    return den


def elaborate_type(ctx: Ctx, st: Type) -> TypeVal:
    model = ctx.model
    if isinstance(st, TyUnit):
        level, eu = model.unit()
        return TypeVal("unit", level, eu.unit_type(ctx.obj), elem=eu)
    if isinstance(st, TyCode):
        den = model.code_den(ctx.obj, st.size, st.level)
        return TypeVal("code", st.level, den, size=st.size)
    if isinstance(st, (TyPi, TySigma)):
        a = elaborate_type(ctx, st.a)
        ext = context_extend(model.universe(a.level), ctx.obj, a.den)
        b = elaborate_type(ctx.push(st.name, a, ext), st.b)
        if isinstance(st, TyPi):
            form, (level, elem) = "pi", model.pi(a.level, b.level)
        else:
            form, (level, elem) = "sigma", model.sigma(a.level, b.level)
        den = elem.form(ctx.obj, a.den, b.den)
        return TypeVal(form, level, den, elem=elem, name=st.name,
                       a=a, ext=ext, b=b)
    if isinstance(st, TyId):
        a = elaborate_type(ctx, st.a)
        d0 = check_term(ctx, st.t0, a)
        d1 = check_term(ctx, st.t1, a)
        ei = model.ident(a.level)
        den = ei.form(ctx.obj, a.den, d0, d1)
        return TypeVal("id", a.level, den, elem=ei, a=a, t0=d0, t1=d1)
    raise TypeError(f"not a surface type: {st!r}")


def _convert(actual: TypeVal, expected: TypeVal, pos):
    if actual.level != expected.level or actual.den != expected.den:
        raise CheckError(f"term has type {describe(actual)} but "
                         f"{describe(expected)} is expected", *pos)


def synth_term(ctx: Ctx, t: Term) -> tuple[TypeVal, FinMap]:
    model = ctx.model
    if isinstance(t, TmVar):
        tyval, den = ctx.lookup(t.index)
        return tyval, _sound(ctx, tyval, den, t.pos)
    if isinstance(t, TmTT):
        level, eu = model.unit()
        tyval = TypeVal("unit", level, eu.unit_type(ctx.obj), elem=eu)
        return tyval, _sound(ctx, tyval, eu.unit_term(ctx.obj), t.pos)
    if isinstance(t, TmAnn):
        tyval = elaborate_type(ctx, t.ty)
        return tyval, check_term(ctx, t.term, tyval)
    if isinstance(t, TmApp):
        fv, fden = synth_term(ctx, t.fn)
        if fv.form != "pi":
            raise CheckError(f"applied a term of type {describe(fv)}, "
                             "which is not a function", *t.pos)
        arg = check_term(ctx, t.arg, fv.a)
        ua = model.universe(fv.a.level)
        into = pair_sub(ua, FinMap.identity(ctx.obj), fv.a.den, arg)
        section = fv.elem.unlam(ctx.obj, fv.a.den, fv.b.den, fden)
        tyval = subst_tyval(model, fv.b, into)
        return tyval, _sound(ctx, tyval, into.then(section), t.pos)
    if isinstance(t, TmFst):
        pv, pden = synth_term(ctx, t.p)
        if pv.form != "sigma":
            raise CheckError(f".1 projects from a pair, "
                             f"not from {describe(pv)}", *t.pos)
        den = pv.elem.fst(ctx.obj, pv.a.den, pv.b.den, pden)
        return pv.a, _sound(ctx, pv.a, den, t.pos)
    if isinstance(t, TmSnd):
        pv, pden = synth_term(ctx, t.p)
        if pv.form != "sigma":
            raise CheckError(f".2 projects from a pair, "
                             f"not from {describe(pv)}", *t.pos)
        first = pv.elem.fst(ctx.obj, pv.a.den, pv.b.den, pden)
        ua = model.universe(pv.a.level)
        into = pair_sub(ua, FinMap.identity(ctx.obj), pv.a.den, first)
        tyval = subst_tyval(model, pv.b, into)
        den = pv.elem.snd(ctx.obj, pv.a.den, pv.b.den, pden)
        return tyval, _sound(ctx, tyval, den, t.pos)
    if isinstance(t, TmRefl):
        av, aden = synth_term(ctx, t.a)
        ei = model.ident(av.level)
        tyval = TypeVal("id", av.level, ei.form(ctx.obj, av.den, aden, aden),
                        elem=ei, a=av, t0=aden, t1=aden)
        return tyval, _sound(ctx, tyval, ei.refl(ctx.obj, av.den, aden), t.pos)
    if isinstance(t, TmJ):
        return _synth_j(ctx, t)
    if isinstance(t, (TmLam, TmPair)):
        what = "a lambda" if isinstance(t, TmLam) else "a pair"
        raise CheckError(f"{what} needs a type annotation to be synthesized",
                         *t.pos)
    raise TypeError(f"not a surface term: {t!r}")


def _synth_j(ctx: Ctx, t: TmJ) -> tuple[TypeVal, FinMap]:
    model = ctx.model
    pv, pden = synth_term(ctx, t.proof)
    if pv.form != "id":
        raise CheckError(f"J eliminates an identity proof, "
                         f"not {describe(pv)}", *t.pos)
    target = check_term(ctx, t.target, pv.a)
    if target != pv.t1:
        raise CheckError("the J target differs from the proof's right "
                         "endpoint", *t.pos)
    motive = elaborate_type(ctx, t.motive)
    if motive.level != pv.level:
        raise UniverseError(f"the J motive lives at level {motive.level}, "
                            f"the proof at level {pv.level}")
    ei = pv.elem
    idc = id_context(ei, ctx.obj, pv.a.den, pv.t0)
    base = check_term(ctx, t.base, motive)
    section = ei.j(ctx.obj, pv.a.den, pv.t0,
                   idc.to_gamma.then(motive.den), base)
    ua = model.universe(pv.a.level)
    into_a = pair_sub(ua, FinMap.identity(ctx.obj), pv.a.den, target)
    into_id = pair_sub(ua, into_a, idc.id_family, pden)
    return motive, _sound(ctx, motive, into_id.then(section), t.pos)


def check_term(ctx: Ctx, t: Term, expected: TypeVal) -> FinMap:
    model = ctx.model
    if isinstance(t, TmLam):
        if expected.form != "pi":
            raise CheckError(f"a lambda checks only against a function type, "
                             f"not {describe(expected)}", *t.pos)
        inner = ctx.push(t.name, expected.a, expected.ext)
        body = check_term(inner, t.body, expected.b)
        den = expected.elem.lam(ctx.obj, expected.a.den, expected.b.den, body)
        return _sound(ctx, expected, den, t.pos)
    if isinstance(t, TmPair):
        if expected.form != "sigma":
            raise CheckError(f"a pair checks only against a pair type, "
                             f"not {describe(expected)}", *t.pos)
        a_den = check_term(ctx, t.a, expected.a)
        ua = model.universe(expected.a.level)
        into = pair_sub(ua, FinMap.identity(ctx.obj), expected.a.den, a_den)
        b_den = check_term(ctx, t.b, subst_tyval(model, expected.b, into))
        den = expected.elem.pair(ctx.obj, expected.a.den, expected.b.den,
                                 a_den, b_den)
        return _sound(ctx, expected, den, t.pos)
    if isinstance(t, TmRefl) and expected.form == "id":
        a_den = check_term(ctx, t.a, expected.a)
        if a_den != expected.t0 or a_den != expected.t1:
            raise CheckError("refl needs both endpoints definitionally equal "
                             "to its argument", *t.pos)
        den = expected.elem.refl(ctx.obj, expected.a.den, a_den)
        return _sound(ctx, expected, den, t.pos)
    if isinstance(t, TmRefl):
        raise CheckError(f"refl checks only against an identity type, "
                         f"not {describe(expected)}", *t.pos)
    actual, den = synth_term(ctx, t)
    _convert(actual, expected, t.pos)
    return den


# -- judgments ----------------------------------------------------------------


@dataclass(frozen=True)
class Judgment:
    """A checked term judgment with its denotations in the model."""

    subject: str
    annotation: Optional[str]
    level: int
    ctx_obj: FinObj
    ty_den: FinMap
    den: FinMap
    ty_desc: str


def check_judgment(model, term: Term, ty: Optional[Type] = None,
                   ctx: Optional[Ctx] = None) -> Judgment:
    ctx = ctx if ctx is not None else Ctx.empty(model)
    names = tuple(e.name for e in ctx.entries)
    if ty is not None:
        tyval = elaborate_type(ctx, ty)
        den = check_term(ctx, term, tyval)
    else:
        tyval, den = synth_term(ctx, term)
    return Judgment(subject=print_term(term, names),
                    annotation=None if ty is None else print_type(ty, names),
                    level=tyval.level, ctx_obj=ctx.obj,
                    ty_den=tyval.den, den=den, ty_desc=describe(tyval))


def check_source(source: str, model, ctx: Optional[Ctx] = None) -> list[Judgment]:
    return [check_judgment(model, term, ty, ctx)
            for term, ty in parse_program(source)]


def eval_judgment(judgment: Judgment, env=None) -> str:
    """The element the denotation picks at `env`, in fiber-local syntax."""
    obj = judgment.ctx_obj
    if not obj.elements:
        raise EmptyContext("the context denotation is empty")
    if env is None:
        if len(obj.elements) != 1:
            raise EmptyContext("an environment element is required "
                               "for an open context")
        env = obj.elements[0]
    elif env not in obj.elements:
        raise EmptyContext(f"{env!r} is not an element of the context")
    value = judgment.den(env)
    ty = judgment.ty_den(env)
    if isinstance(value, tuple) and len(value) == 2 and value[0] == ty:
        return label_str(value[1])
    return label_str(value)
