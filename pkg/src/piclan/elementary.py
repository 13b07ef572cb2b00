"""Elementary type formers: structured records of total operations on a
universe, with exhaustively checked law suites.

Each structure packages the formation, introduction and elimination
operations as plain functions of concrete contexts and maps.  The law
checkers quantify over all contexts, types and terms within a size bound
and return one verdict per clause, so a deliberately broken operation is
pinned to the exact law it violates.

Pi and Sigma come in a heterogeneous flavour where the argument type,
the family and the result live in three (possibly distinct) universes of
a tower; the single-universe case is the diagonal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import BoundsTooTight, PiclanError, TypeMismatch, UniverseError
from .fin import FinMap, FinObj, all_maps, objects_up_to
from .universe import (ContextExtension, Universe, UniverseTower,
                       build_propositional_universe, code_label,
                       context_extend, pair_sub)


def weaken(universe: Universe, sigma: FinMap, a_map: FinMap) -> FinMap:
    """σ̃: Δ.(σ ≫ A) → Γ.A, built as (display ≫ σ).var via pair_sub."""
    sub_a = sigma.then(a_map)
    ext = context_extend(universe, sigma.dom, sub_a)
    return pair_sub(universe, ext.display.then(sigma), a_map, ext.var_map)


def terms_over(universe: Universe, gamma: FinObj, a_map: FinMap):
    """All maps a: Γ → Tm with a ≫ tp = A, enumerated fiberwise."""
    choices = []
    for g in gamma.elements:
        fib = universe.tp.fiber(a_map(g))
        if not fib:
            return
        choices.append([universe.tm.position(t) for t in fib])
    for idx in itertools.product(*choices):
        yield FinMap(gamma, universe.tm, idx)


# -- structures -------------------------------------------------------------


@dataclass(frozen=True)
class ElemUnit:
    universe: Universe
    unit_type: Callable[[FinObj], FinMap]
    unit_term: Callable[[FinObj], FinMap]


@dataclass(frozen=True)
class ElemPi:
    a_universe: Universe
    b_universe: Universe
    r_universe: Universe
    form: Callable[[FinObj, FinMap, FinMap], FinMap]
    lam: Callable[[FinObj, FinMap, FinMap, FinMap], FinMap]
    unlam: Callable[[FinObj, FinMap, FinMap, FinMap], FinMap]


@dataclass(frozen=True)
class ElemSigma:
    a_universe: Universe
    b_universe: Universe
    r_universe: Universe
    form: Callable[[FinObj, FinMap, FinMap], FinMap]
    pair: Callable[[FinObj, FinMap, FinMap, FinMap, FinMap], FinMap]
    fst: Callable[[FinObj, FinMap, FinMap, FinMap], FinMap]
    snd: Callable[[FinObj, FinMap, FinMap, FinMap], FinMap]


@dataclass(frozen=True)
class ElemId:
    universe: Universe
    form: Callable[[FinObj, FinMap, FinMap, FinMap], FinMap]
    refl: Callable[[FinObj, FinMap, FinMap], FinMap]
    j: Callable  # (gamma, A, a, motive, c_refl) -> section over Γ.A.Id
    j_stable: bool = True


@dataclass(frozen=True)
class ElemFormers:
    """The four formers of a single-universe model, bundled."""

    universe: Universe
    unit: ElemUnit
    pi: ElemPi
    sigma: ElemSigma
    ident: ElemId


@dataclass(frozen=True)
class IdContext:
    """The iterated extension Γ.(x : A).Id_A(a, x) with its structure maps."""

    ext_a: ContextExtension
    id_family: FinMap
    ext_id: ContextExtension
    rho: FinMap  # Γ → Γ.A.Id, γ ↦ ((γ, a(γ)), refl)

    @property
    def obj(self) -> FinObj:
        return self.ext_id.ext

    @property
    def to_gamma(self) -> FinMap:
        return self.ext_id.display.then(self.ext_a.display)


def id_context(ei: ElemId, gamma: FinObj, a_map: FinMap, term: FinMap) -> IdContext:
    universe = ei.universe
    ext_a = context_extend(universe, gamma, a_map)
    weak_a = ext_a.display.then(a_map)
    weak_term = ext_a.display.then(term)
    family = ei.form(ext_a.ext, weak_a, weak_term, ext_a.var_map)
    ext_id = context_extend(universe, ext_a.ext, family)
    into_a = pair_sub(universe, FinMap.identity(gamma), a_map, term)
    rho = pair_sub(universe, into_a, family, ei.refl(gamma, a_map, term))
    return IdContext(ext_a=ext_a, id_family=family, ext_id=ext_id, rho=rho)


# -- law reports -------------------------------------------------------------


@dataclass(frozen=True)
class ClauseVerdict:
    former: str
    clause: str
    title: str
    passed: bool
    bound: int
    counterexample: Optional[tuple] = None

    def line(self) -> str:
        verdict = "pass" if self.passed else "fail"
        return f"former={self.former} clause={self.clause} verdict={verdict} ({self.title})"


@dataclass(frozen=True)
class LawReport:
    rows: tuple[ClauseVerdict, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def failures(self) -> tuple[ClauseVerdict, ...]:
        return tuple(r for r in self.rows if not r.passed)

    def row(self, clause: str) -> ClauseVerdict:
        for r in self.rows:
            if r.clause == clause:
                return r
        raise KeyError(clause)


class _Suite:
    def __init__(self, former: str, bound: int):
        self.former = former
        self.bound = bound
        self.failures: dict = {}
        self.titles: dict = {}
        self.erred = False

    def check(self, clause: str, title: str, ok: bool, witness=None):
        self.titles.setdefault(clause, title)
        if not ok and clause not in self.failures:
            self.failures[clause] = witness

    def run_guarded(self, body, order) -> LawReport:
        """Evaluate the suite body; a crash becomes a failing `eval` row.

        A structure that violates its own typing can make law evaluation
        throw before any clause is decided.  The report then lists the
        clauses that were reached plus the evaluation failure.
        """
        try:
            body()
        except (PiclanError, ValueError, KeyError, IndexError) as exc:
            self.erred = True
            self.titles["eval"] = "law evaluation raised an error"
            self.failures["eval"] = repr(exc)
        return self.report(order)

    def report(self, order) -> LawReport:
        rows = []
        for clause in order:
            if self.erred and clause not in self.titles:
                continue  # never reached; do not report it as passing
            rows.append(ClauseVerdict(
                former=self.former, clause=clause,
                title=self.titles.get(clause, clause),
                passed=clause not in self.failures,
                bound=self.bound,
                counterexample=self.failures.get(clause)))
        if self.erred:
            rows.append(ClauseVerdict(
                former=self.former, clause="eval",
                title=self.titles["eval"], passed=False,
                bound=self.bound, counterexample=self.failures["eval"]))
        return LawReport(rows=tuple(rows))


def _contexts(bound: int) -> tuple[FinObj, ...]:
    return objects_up_to(bound, prefix="g")


def _substitutions(bound: int, gamma: FinObj):
    for delta in objects_up_to(bound, prefix="d"):
        yield from all_maps(delta, gamma)


# -- Unit suite --------------------------------------------------------------


def check_elem_unit(eu: ElemUnit, bound: int) -> LawReport:
    suite = _Suite("unit", bound)
    universe = eu.universe

    def body():
        for gamma in _contexts(bound):
            unit_ty = eu.unit_type(gamma)
            suite.check("1", "Unit formation lands in Ty",
                        unit_ty.dom == gamma and unit_ty.cod == universe.ty, (gamma,))
            unit_tm = eu.unit_term(gamma)
            suite.check("3", "unit is the unique term of Unit",
                        unit_tm.then(universe.tp) == unit_ty
                        and sum(1 for _ in terms_over(universe, gamma, unit_ty)) == 1,
                        (gamma,))
            for sigma in _substitutions(bound, gamma):
                suite.check("2", "Unit is substitution-stable",
                            sigma.then(unit_ty) == eu.unit_type(sigma.dom),
                            (gamma, sigma))
                # derived: term stability follows from uniqueness, but is
                # re-checked directly so the derivation has an oracle
                suite.check("L.unit-sub", "unit term substitution (derived)",
                            sigma.then(unit_tm) == eu.unit_term(sigma.dom),
                            (gamma, sigma))
    return suite.run_guarded(body, ("1", "2", "3", "L.unit-sub"))


# -- Pi suite ----------------------------------------------------------------


def check_elem_pi(ep: ElemPi, bound: int) -> LawReport:
    suite = _Suite("pi", bound)
    au, bu, ru = ep.a_universe, ep.b_universe, ep.r_universe

    def body():
        for gamma in _contexts(bound):
            for a_map in all_maps(gamma, au.ty):
                ext = context_extend(au, gamma, a_map)
                for b_map in all_maps(ext.ext, bu.ty):
                    pi_ty = ep.form(gamma, a_map, b_map)
                    suite.check("1", "Pi formation lands in Ty",
                                pi_ty.dom == gamma and pi_ty.cod == ru.ty,
                                (gamma, a_map, b_map))
                    b_terms = list(terms_over(bu, ext.ext, b_map))
                    f_terms = list(terms_over(ru, gamma, pi_ty))
                    for b in b_terms:
                        lam_b = ep.lam(gamma, a_map, b_map, b)
                        suite.check("3", "lam lands over Pi",
                                    lam_b.then(ru.tp) == pi_ty, (gamma, a_map, b_map, b))
                        suite.check("6", "beta: unlam after lam is the identity",
                                    ep.unlam(gamma, a_map, b_map, lam_b) == b,
                                    (gamma, a_map, b_map, b))
                    for f in f_terms:
                        un_f = ep.unlam(gamma, a_map, b_map, f)
                        suite.check("5", "unlam lands over the family",
                                    un_f.dom == ext.ext and un_f.then(bu.tp) == b_map,
                                    (gamma, a_map, b_map, f))
                        suite.check("6", "eta: lam after unlam is the identity",
                                    ep.lam(gamma, a_map, b_map, un_f) == f,
                                    (gamma, a_map, b_map, f))
                    for sigma in _substitutions(bound, gamma):
                        delta = sigma.dom
                        a_sub = sigma.then(a_map)
                        lifted = weaken(au, sigma, a_map)
                        b_sub = lifted.then(b_map)
                        suite.check("2", "Pi is substitution-stable",
                                    ep.form(delta, a_sub, b_sub) == sigma.then(pi_ty),
                                    (gamma, a_map, b_map, sigma))
                        for b in b_terms:
                            suite.check("4", "lam is substitution-stable",
                                        ep.lam(delta, a_sub, b_sub, lifted.then(b))
                                        == sigma.then(ep.lam(gamma, a_map, b_map, b)),
                                        (gamma, a_map, b_map, b, sigma))
                        for f in f_terms:
                            suite.check("L.unlam-sub", "unlam substitution (derived)",
                                        ep.unlam(delta, a_sub, b_sub, sigma.then(f))
                                        == lifted.then(
                                            ep.unlam(gamma, a_map, b_map, f)),
                                        (gamma, a_map, b_map, f, sigma))
                        # derived: substituted lam/unlam form a bijection between
                        # sections of the substituted family and terms of the
                        # substituted Pi type
                        sub_ext = context_extend(au, delta, a_sub)
                        sections = list(terms_over(bu, sub_ext.ext, b_sub))
                        pi_terms = list(terms_over(ru, delta, sigma.then(pi_ty)))
                        images = [ep.lam(delta, a_sub, b_sub, s) for s in sections]
                        round_ok = (
                            len(sections) == len(pi_terms)
                            and all(img in pi_terms for img in images)
                            and all(ep.unlam(delta, a_sub, b_sub, img) == s
                                    for img, s in zip(images, sections))
                            and all(ep.lam(delta, a_sub, b_sub,
                                           ep.unlam(delta, a_sub, b_sub, t)) == t
                                    for t in pi_terms))
                        suite.check("L.lam-bij", "substituted lam bijection (derived)",
                                    round_ok, (gamma, a_map, b_map, sigma))
    return suite.run_guarded(body, ("1", "2", "3", "4", "5", "6", "L.unlam-sub", "L.lam-bij"))


# -- Sigma suite -------------------------------------------------------------


def check_elem_sigma(es: ElemSigma, bound: int) -> LawReport:
    suite = _Suite("sigma", bound)
    au, bu, ru = es.a_universe, es.b_universe, es.r_universe

    def body():
        for gamma in _contexts(bound):
            for a_map in all_maps(gamma, au.ty):
                ext = context_extend(au, gamma, a_map)
                for b_map in all_maps(ext.ext, bu.ty):
                    sig_ty = es.form(gamma, a_map, b_map)
                    suite.check("1", "Sigma formation lands in Ty",
                                sig_ty.dom == gamma and sig_ty.cod == ru.ty,
                                (gamma, a_map, b_map))
                    pairs_input = []
                    for a in terms_over(au, gamma, a_map):
                        into = pair_sub(au, FinMap.identity(gamma), a_map, a)
                        for b in terms_over(bu, gamma, into.then(b_map)):
                            pairs_input.append((a, b))
                    s_terms = list(terms_over(ru, gamma, sig_ty))
                    for a, b in pairs_input:
                        p = es.pair(gamma, a_map, b_map, a, b)
                        suite.check("3", "pair lands over Sigma",
                                    p.then(ru.tp) == sig_ty, (gamma, a_map, b_map, a, b))
                        suite.check("6", "beta for fst",
                                    es.fst(gamma, a_map, b_map, p) == a,
                                    (gamma, a_map, b_map, a, b))
                        suite.check("7", "beta for snd",
                                    es.snd(gamma, a_map, b_map, p) == b,
                                    (gamma, a_map, b_map, a, b))
                    for s in s_terms:
                        first = es.fst(gamma, a_map, b_map, s)
                        ok_first = first.then(au.tp) == a_map
                        into = (pair_sub(au, FinMap.identity(gamma), a_map, first)
                                if ok_first else None)
                        second = es.snd(gamma, a_map, b_map, s)
                        suite.check("5", "fst/snd typing",
                                    ok_first and second.then(bu.tp) == into.then(b_map),
                                    (gamma, a_map, b_map, s))
                        if ok_first:
                            suite.check("8", "eta: pair of projections",
                                        es.pair(gamma, a_map, b_map, first, second) == s,
                                        (gamma, a_map, b_map, s))
                    for sigma in _substitutions(bound, gamma):
                        delta = sigma.dom
                        a_sub = sigma.then(a_map)
                        lifted = weaken(au, sigma, a_map)
                        b_sub = lifted.then(b_map)
                        suite.check("2", "Sigma is substitution-stable",
                                    es.form(delta, a_sub, b_sub) == sigma.then(sig_ty),
                                    (gamma, a_map, b_map, sigma))
                        for a, b in pairs_input:
                            suite.check(
                                "4", "pair is substitution-stable",
                                es.pair(delta, a_sub, b_sub,
                                        sigma.then(a), sigma.then(b))
                                == sigma.then(es.pair(gamma, a_map, b_map, a, b)),
                                (gamma, a_map, b_map, a, b, sigma))
                        for s in s_terms:
                            suite.check(
                                "L.proj-sub", "fst/snd substitution (derived)",
                                es.fst(delta, a_sub, b_sub, sigma.then(s))
                                == sigma.then(es.fst(gamma, a_map, b_map, s))
                                and es.snd(delta, a_sub, b_sub, sigma.then(s))
                                == sigma.then(es.snd(gamma, a_map, b_map, s)),
                                (gamma, a_map, b_map, s, sigma))
                        # derived: substituted pair/(fst,snd) bijection
                        sub_inputs = []
                        for a in terms_over(au, delta, a_sub):
                            into = pair_sub(au, FinMap.identity(delta), a_sub, a)
                            for b in terms_over(bu, delta, into.then(b_sub)):
                                sub_inputs.append((a, b))
                        sub_terms = list(terms_over(ru, delta, sigma.then(sig_ty)))
                        images = [es.pair(delta, a_sub, b_sub, a, b)
                                  for a, b in sub_inputs]
                        round_ok = (
                            len(sub_inputs) == len(sub_terms)
                            and all(img in sub_terms for img in images)
                            and all(es.fst(delta, a_sub, b_sub, img) == a
                                    and es.snd(delta, a_sub, b_sub, img) == b
                                    for img, (a, b) in zip(images, sub_inputs))
                            and all(es.pair(delta, a_sub, b_sub,
                                            es.fst(delta, a_sub, b_sub, t),
                                            es.snd(delta, a_sub, b_sub, t)) == t
                                    for t in sub_terms))
                        suite.check("L.pair-bij", "substituted pair bijection (derived)",
                                    round_ok, (gamma, a_map, b_map, sigma))
    return suite.run_guarded(body, ("1", "2", "3", "4", "5", "6", "7", "8", "L.proj-sub", "L.pair-bij"))


# -- Id suite ----------------------------------------------------------------


def check_elem_id(ei: ElemId, bound: int) -> LawReport:
    suite = _Suite("id", bound)
    universe = ei.universe

    def body():
        for gamma in _contexts(bound):
            for a_map in all_maps(gamma, universe.ty):
                terms = list(terms_over(universe, gamma, a_map))
                for a0 in terms:
                    for a1 in terms:
                        id_ty = ei.form(gamma, a_map, a0, a1)
                        suite.check("1", "Id formation lands in Ty",
                                    id_ty.dom == gamma and id_ty.cod == universe.ty,
                                    (gamma, a_map, a0, a1))
                        for sigma in _substitutions(bound, gamma):
                            suite.check(
                                "2", "Id is substitution-stable",
                                ei.form(sigma.dom, sigma.then(a_map),
                                        sigma.then(a0), sigma.then(a1))
                                == sigma.then(id_ty),
                                (gamma, a_map, a0, a1, sigma))
                for a in terms:
                    r = ei.refl(gamma, a_map, a)
                    suite.check("3", "refl lands over Id(a, a)",
                                r.then(universe.tp) == ei.form(gamma, a_map, a, a),
                                (gamma, a_map, a))
                    for sigma in _substitutions(bound, gamma):
                        suite.check("4", "refl is substitution-stable",
                                    ei.refl(sigma.dom, sigma.then(a_map), sigma.then(a))
                                    == sigma.then(r),
                                    (gamma, a_map, a, sigma))
                    idc = id_context(ei, gamma, a_map, a)
                    for motive in all_maps(idc.obj, universe.ty):
                        for c_refl in terms_over(universe, gamma, idc.rho.then(motive)):
                            section = ei.j(gamma, a_map, a, motive, c_refl)
                            suite.check("5", "j lands over the motive and computes on refl",
                                        section.dom == idc.obj
                                        and section.then(universe.tp) == motive
                                        and idc.rho.then(section) == c_refl,
                                        (gamma, a_map, a, motive, c_refl))
                            if ei.j_stable:
                                for sigma in _substitutions(bound, gamma):
                                    lift1 = weaken(universe, sigma, a_map)
                                    sub_idc = id_context(ei, sigma.dom,
                                                         sigma.then(a_map),
                                                         sigma.then(a))
                                    suite.check(
                                        "2", "Id is substitution-stable",
                                        sub_idc.id_family == lift1.then(idc.id_family),
                                        (gamma, a_map, a, sigma))
                                    lift2 = weaken(universe, lift1, idc.id_family)
                                    suite.check(
                                        "6", "j is substitution-stable",
                                        ei.j(sigma.dom, sigma.then(a_map),
                                             sigma.then(a), lift2.then(motive),
                                             sigma.then(c_refl))
                                        == lift2.then(section),
                                        (gamma, a_map, a, motive, c_refl, sigma))
    order = ("1", "2", "3", "4", "5") + (("6",) if ei.j_stable else ())
    return suite.run_guarded(body, order)


# -- the propositional model --------------------------------------------------


def propositional_elementary(universe: Universe) -> tuple[ElemUnit, ElemPi, ElemSigma, ElemId]:
    """Unit, Pi, Sigma and Id over the two-point universe.

    Every fiber of tp has at most one element, so each operation returns
    the unique correctly-typed map; the laws then hold by uniqueness.
    """
    ty, tm, tp = universe.ty, universe.tm, universe.tp
    point = tm.elements[0]
    true_label = point[0]  # the inhabited type is the one under the point
    false_label = next(y for y in ty.elements if y != true_label)

    def the_term(gamma: FinObj) -> FinMap:
        return FinMap.constant(gamma, tm, point)

    def unit_type(gamma: FinObj) -> FinMap:
        return FinMap.constant(gamma, ty, true_label)

    def pi_form(gamma, a_map, b_map):
        ext = context_extend(universe, gamma, a_map)

        def value(g):
            hits = [e for e in ext.ext.elements if e[0] == g]
            return true_label if all(b_map(e) == true_label for e in hits) else false_label

        return FinMap.from_callable(gamma, ty, value)

    def sigma_form(gamma, a_map, b_map):
        ext = context_extend(universe, gamma, a_map)

        def value(g):
            hits = [e for e in ext.ext.elements if e[0] == g]
            ok = any(b_map(e) == true_label for e in hits)
            return true_label if ok else false_label

        return FinMap.from_callable(gamma, ty, value)

    def id_form(gamma, a_map, a0, a1):
        # fibers of tp are subsingletons, so coexisting terms are equal
        return unit_type(gamma)

    def pi_lam(gamma, a_map, b_map, b):
        return the_term(gamma)

    def pi_unlam(gamma, a_map, b_map, f):
        ext = context_extend(universe, gamma, a_map)
        return the_term(ext.ext)

    def sigma_pair(gamma, a_map, b_map, a, b):
        return the_term(gamma)

    def sigma_fst(gamma, a_map, b_map, s):
        return the_term(gamma)

    def sigma_snd(gamma, a_map, b_map, s):
        return the_term(gamma)

    def id_refl(gamma, a_map, a):
        return the_term(gamma)

    def id_j(gamma, a_map, a, motive, c_refl):
        return the_term(motive.dom)

    return (
        ElemUnit(universe, unit_type, the_term),
        ElemPi(universe, universe, universe, pi_form, pi_lam, pi_unlam),
        ElemSigma(universe, universe, universe, sigma_form, sigma_pair,
                  sigma_fst, sigma_snd),
        ElemId(universe, id_form, id_refl, id_j, j_stable=True),
    )


def propositional_formers() -> ElemFormers:
    universe = build_propositional_universe()
    unit, pi, sigma, ident = propositional_elementary(universe)
    return ElemFormers(universe=universe, unit=unit, pi=pi, sigma=sigma,
                       ident=ident)


def check_elem_formers(formers: ElemFormers, bound: int) -> dict[str, LawReport]:
    return {
        "unit": check_elem_unit(formers.unit, bound),
        "pi": check_elem_pi(formers.pi, bound),
        "sigma": check_elem_sigma(formers.sigma, bound),
        "id": check_elem_id(formers.ident, bound),
    }


# -- pointwise formers on universes with empty and singleton types -------------


def _special_types(universe: Universe):
    empty_ty = singleton_ty = None
    for y in universe.ty.elements:
        n = len(universe.tp.fiber(y))
        if n == 0 and empty_ty is None:
            empty_ty = y
        if n == 1 and singleton_ty is None:
            singleton_ty = y
    return empty_ty, singleton_ty


def singleton_elementary_unit(universe: Universe) -> ElemUnit:
    """Unit as the first singleton type of the universe."""
    _, singleton_ty = _special_types(universe)
    if singleton_ty is None:
        raise UniverseError("the universe has no singleton type")
    point = universe.tp.fiber(singleton_ty)[0]

    def unit_type(gamma: FinObj) -> FinMap:
        return FinMap.constant(gamma, universe.ty, singleton_ty)

    def unit_term(gamma: FinObj) -> FinMap:
        return FinMap.constant(gamma, universe.tm, point)

    return ElemUnit(universe, unit_type, unit_term)


def extensional_elementary_id(universe: Universe) -> ElemId:
    """Id as equality of points: singleton on the diagonal, empty off it.

    The extension Gamma.A.Id then retracts onto Gamma along rho, because a
    fiber of the identity family is inhabited only where the generic term
    equals a; j transports the refl case along that retraction.  All three
    operations are pointwise formulas, so stability holds on the nose.
    """
    empty_ty, singleton_ty = _special_types(universe)
    if empty_ty is None or singleton_ty is None:
        raise UniverseError(
            "extensional identity types need an empty and a singleton type")
    point = universe.tp.fiber(singleton_ty)[0]

    def form(gamma, a_map, a0, a1):
        return FinMap.from_callable(
            gamma, universe.ty,
            lambda g: singleton_ty if a0(g) == a1(g) else empty_ty)

    def refl(gamma, a_map, a):
        return FinMap.constant(gamma, universe.tm, point)

    def j(gamma, a_map, a, motive, c_refl):
        # every element of Gamma.A.Id is ((g, a(g)), point)
        return FinMap.from_callable(motive.dom, universe.tm,
                                    lambda e: c_refl(e[0][0]))

    return ElemId(universe, form, refl, j, j_stable=True)


# -- heterogeneous Pi/Sigma on cardinality towers ------------------------------


def _fiber_terms(universe: Universe, ty_label) -> tuple:
    return universe.tp.fiber(ty_label)


def heterogeneous_pi_sigma(tower: UniverseTower, low: int, high: int) -> tuple[ElemPi, ElemSigma]:
    """Pi and Sigma with argument/family at level `low`, result at level `high`.

    lam/unlam and pair/fst/snd are the literal currying and tupling
    bijections on section graphs, indexed in the canonical enumeration
    order of the fibers; that canonicity is what makes them strictly
    substitution-stable.
    """
    if not (0 <= low < len(tower.levels)) or not (0 <= high < len(tower.levels)):
        raise BoundsTooTight("tower levels out of range")
    k_low, k_high = tower.bounds[low], tower.bounds[high]
    if k_high < k_low ** k_low:
        raise BoundsTooTight(
            f"Pi needs the high bound {k_high} to reach {k_low}^{k_low}")
    if k_high < k_low * k_low:
        raise BoundsTooTight(
            f"Sigma needs the high bound {k_high} to reach {k_low}*{k_low}")
    ua, ur = tower.levels[low], tower.levels[high]

    def fiber_data(gamma, a_map, b_map, g):
        """Argument-fiber terms and their family fibers at the point g."""
        ts = ua.tp.fiber(a_map(g))
        return ts, [ua.tp.fiber(b_map((g, t))) for t in ts]

    def pi_form(gamma, a_map, b_map):
        def value(g):
            _, fibs = fiber_data(gamma, a_map, b_map, g)
            size = 1
            for fib in fibs:
                size *= len(fib)
            return code_label(size)

        return FinMap.from_callable(gamma, ur.ty, value)

    def pi_lam(gamma, a_map, b_map, b):
        def value(g):
            ts, fibs = fiber_data(gamma, a_map, b_map, g)
            graphs = list(itertools.product(*fibs))
            chosen = tuple(b((g, t)) for t in ts)
            size = len(graphs)
            return (code_label(size), str(graphs.index(chosen)))

        return FinMap.from_callable(gamma, ur.tm, value)

    def pi_unlam(gamma, a_map, b_map, f):
        ext = context_extend(ua, gamma, a_map)

        def value(e):
            g, t = e
            ts, fibs = fiber_data(gamma, a_map, b_map, g)
            graphs = list(itertools.product(*fibs))
            graph = graphs[int(f(g)[1])]
            return graph[ts.index(t)]

        return FinMap.from_callable(ext.ext, ua.tm, value)

    def sigma_form(gamma, a_map, b_map):
        def value(g):
            _, fibs = fiber_data(gamma, a_map, b_map, g)
            return code_label(sum(len(fib) for fib in fibs))

        return FinMap.from_callable(gamma, ur.ty, value)

    def sigma_entries(gamma, a_map, b_map, g):
        ts, fibs = fiber_data(gamma, a_map, b_map, g)
        return [(t, v) for t, fib in zip(ts, fibs) for v in fib]

    def sigma_pair(gamma, a_map, b_map, a, b):
        def value(g):
            entries = sigma_entries(gamma, a_map, b_map, g)
            entry = (a(g), b(g))
            if entry not in entries:
                raise TypeMismatch(f"pair components do not inhabit the sigma type at {g}")
            return (code_label(len(entries)), str(entries.index(entry)))

        return FinMap.from_callable(gamma, ur.tm, value)

    def sigma_fst(gamma, a_map, b_map, s):
        def value(g):
            entries = sigma_entries(gamma, a_map, b_map, g)
            return entries[int(s(g)[1])][0]

        return FinMap.from_callable(gamma, ua.tm, value)

    def sigma_snd(gamma, a_map, b_map, s):
        def value(g):
            entries = sigma_entries(gamma, a_map, b_map, g)
            return entries[int(s(g)[1])][1]

        return FinMap.from_callable(gamma, ua.tm, value)

    pi = ElemPi(ua, ua, ur, pi_form, pi_lam, pi_unlam)
    sigma = ElemSigma(ua, ua, ur, sigma_form, sigma_pair, sigma_fst, sigma_snd)
    return pi, sigma
