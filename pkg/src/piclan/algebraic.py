"""Algebraic type formers: generic structure maps on a universe.

Where the elementary presentation gives one operation per context, the
algebraic one gives a single map per former, living at the representing
object, with the rules packaged as pullback conditions:

  Unit:  a point of Ty whose term square over the terminal is a pullback.
  Pi:    lam: P_tp Tm → Tm over pi: P_tp Ty → Ty, a pullback against tp.
  Sigma: pair on the composite signature domain over sigma: P_tp Ty → Ty.
  Id:    a family on the parallel-pair object with refl, whose eliminator
         is a weak pullback of polynomial restriction squares.

`check_alg_*` verify each condition exhaustively and report per clause.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Optional

from .errors import CodomainMismatch, LiftInvalid, PiclanError
from .elementary import ClauseVerdict, LawReport
from .fin import (FinMap, FinObj, Square, is_pullback, product,
                  product_map, pullback, terminal)
from .mapclass import MapClass, all_maps_class
from .poly import PolyApplication, PolySignature, apply_poly, poly_compose, poly_map
from .universe import ContextExtension, Universe, context_extend, pair_sub


@dataclass(frozen=True)
class AlgUnit:
    universe: Universe
    type_point: FinMap   # ⋆ → Ty
    term_point: FinMap   # ⋆ → Tm


@dataclass(frozen=True)
class AlgPi:
    universe: Universe
    cls: MapClass
    pi_map: FinMap    # P_tp Ty → Ty
    lam_map: FinMap   # P_tp Tm → Tm


@dataclass(frozen=True)
class AlgSigma:
    universe: Universe
    cls: MapClass
    sigma_map: FinMap  # P_tp Ty → Ty
    pair_map: FinMap   # dom(tp ▷ tp) → Tm


@dataclass(frozen=True)
class AlgId:
    universe: Universe
    id_map: FinMap     # Tm.tp → Ty (family on parallel term pairs)
    refl_map: FinMap   # Tm → Tm
    lifter: Optional[Callable] = None  # cone (w, x) → corner element or None


@dataclass(frozen=True)
class AlgFormers:
    universe: Universe
    cls: MapClass
    unit: Optional[AlgUnit] = None
    pi: Optional[AlgPi] = None
    sigma: Optional[AlgSigma] = None
    ident: Optional[AlgId] = None


# -- derived identity data -----------------------------------------------


@dataclass(frozen=True)
class IdSkeleton:
    """Everything the identity former determines once id_map and refl exist.

    pairs is the extension Tm.tp, whose elements are the parallel pairs
    (t0, t1) with tp t0 = tp t1; total extends it by the family; rho picks
    the reflexivity point ((t, t), refl t) and i_map projects back to the
    first term.  The restriction square (v_square) evaluates a section
    over an identity fiber at its reflexivity point:

        P_i Tm --ident_tm--> Tm × Tm
          |                    |
        P_i tp             id × tp
          v                    v
        P_i Ty --ident_ty--> Tm × Ty
    """

    alg: AlgId
    pairs: ContextExtension
    diagonal: FinMap
    total: ContextExtension
    rho: FinMap
    i_map: FinMap
    sig_i: PolySignature
    app_tm: PolyApplication
    app_ty: PolyApplication
    ident_tm: FinMap
    ident_ty: FinMap
    v_square: Square


def build_id_skeleton(aid: AlgId) -> IdSkeleton:
    universe = aid.universe
    tm, ty, tp = universe.tm, universe.ty, universe.tp
    pairs = context_extend(universe, tm, tp)
    if aid.id_map.dom != pairs.ext or aid.id_map.cod != ty:
        raise CodomainMismatch("id_map must send parallel term pairs to Ty")
    if aid.refl_map.dom != tm or aid.refl_map.cod != tm:
        raise CodomainMismatch("refl_map must be an endomap of Tm")
    ident = FinMap.identity(tm)
    diagonal = pair_sub(universe, ident, tp, ident)
    total = context_extend(universe, pairs.ext, aid.id_map)
    rho = pair_sub(universe, diagonal, aid.id_map, aid.refl_map)
    i_map = total.display.then(pairs.display)
    sig_i = PolySignature(i_map, all_maps_class())
    app_tm = apply_poly(sig_i, tm)
    app_ty = apply_poly(sig_i, ty)

    def restrict(x_obj):
        tgt = product(tm, x_obj).apex
        app = apply_poly(sig_i, x_obj)
        return FinMap.from_callable(
            app.total, tgt, lambda s: (s[0], dict(s[1])[rho(s[0])]))

    ident_tm = restrict(tm)
    ident_ty = restrict(ty)
    v_square = Square(top=ident_tm, left=poly_map(sig_i, tp),
                      right=product_map(ident, tp), bottom=ident_ty)
    return IdSkeleton(alg=aid, pairs=pairs, diagonal=diagonal, total=total,
                      rho=rho, i_map=i_map, sig_i=sig_i, app_tm=app_tm,
                      app_ty=app_ty, ident_tm=ident_tm, ident_ty=ident_ty,
                      v_square=v_square)


def extensional_id(universe: Universe, lifter: Optional[Callable] = None) -> AlgId:
    """The identity former that reflects equality of terms.

    Needs a type with exactly one term for the diagonal; off the diagonal
    it needs an empty type, or no distinct parallel pairs at all.
    """
    tp = universe.tp
    singletons = [y for y in universe.ty if len(tp.fiber(y)) == 1]
    empties = [y for y in universe.ty if len(tp.fiber(y)) == 0]
    if not singletons:
        raise CodomainMismatch("no singleton type to interpret reflexivity")
    one = singletons[0]
    point = tp.fiber(one)[0]
    pairs = context_extend(universe, universe.tm, tp)

    def form(pair):
        t0, t1 = pair
        if t0 == t1:
            return one
        if not empties:
            raise CodomainMismatch("no empty type to separate distinct terms")
        return empties[0]

    id_map = FinMap.from_callable(pairs.ext, universe.ty, form)
    refl_map = FinMap.constant(universe.tm, universe.tm, point)
    return AlgId(universe=universe, id_map=id_map, refl_map=refl_map,
                 lifter=lifter)


# -- weak pullbacks --------------------------------------------------------


@dataclass(frozen=True)
class WeakPullbackStructure:
    """A commuting square with a chosen (not necessarily unique) lifting.

    The lifter takes a cone (y, x) with bottom(y) = right(x) and returns a
    corner element u with left(u) = y and top(u) = x, or None when it has
    no lift to offer.
    """

    square: Square
    lifter: Callable

    def cones(self) -> FinObj:
        return pullback(self.square.bottom, self.square.right).apex


def search_lifter(square: Square) -> Callable:
    """Exhaustive lifter: the first corner element over the cone, if any."""

    def lift(y, x):
        for u in square.corner.elements:
            if square.left(u) == y and square.top(u) == x:
                return u
        return None

    return lift


def check_weak_pullback(wps: WeakPullbackStructure) -> LawReport:
    """One clause for the square, one for totality of the lifting.

    A lifter answer that is not an actual lift of its cone raises
    LiftInvalid; a cone with no lift at all is a failing verdict.
    """
    suite_rows = []
    sq = wps.square
    boundary = sq.boundary_ok() and sq.commuting_witness() is None
    suite_rows.append(ClauseVerdict(
        former="weak-pullback", clause="1", title="square commutes",
        passed=boundary, bound=len(sq.corner),
        counterexample=None if boundary else sq.commuting_witness()))
    missing = None
    if boundary:
        corner = set(sq.corner.elements)
        for y, x in wps.cones().elements:
            u = wps.lifter(y, x)
            if u is None:
                if missing is None:
                    missing = (y, x)
                continue
            if u not in corner or sq.left(u) != y or sq.top(u) != x:
                raise LiftInvalid("lifter answer does not lift its cone",
                                  cone=(y, x))
    suite_rows.append(ClauseVerdict(
        former="weak-pullback", clause="2", title="every cone lifts",
        passed=boundary and missing is None, bound=len(sq.corner),
        counterexample=missing))
    return LawReport(rows=tuple(suite_rows))


def coherentize(wps: WeakPullbackStructure) -> WeakPullbackStructure:
    """Tabulate the lifter over the chosen strong pullback of the cospan.

    The new lifter answers through the table, so repeated calls agree and
    coherentizing twice changes nothing.  Where the original lifter gave
    an invalid answer this raises LiftInvalid; where it gave none, the
    table falls back to an exhaustive search before recording None.
    """
    sq = wps.square
    corner = set(sq.corner.elements)
    fallback = search_lifter(sq)
    table = {}
    for y, x in wps.cones().elements:
        u = wps.lifter(y, x)
        if u is not None and (u not in corner or sq.left(u) != y or sq.top(u) != x):
            raise LiftInvalid("lifter answer does not lift its cone", cone=(y, x))
        if u is None:
            u = fallback(y, x)
        table[(y, x)] = u
    return replace(wps, lifter=lambda y, x: table.get((y, x)))


def lift_retraction(wps: WeakPullbackStructure) -> FinMap:
    """The idempotent corner endomap u ↦ lift(left u, top u).

    Only defined when every cone lifts; composing the canonical comparison
    into the strong pullback with the tabulated lifting section.
    """
    sq = wps.square

    def act(u):
        lifted = wps.lifter(sq.left(u), sq.top(u))
        if lifted is None:
            raise LiftInvalid("retraction needs a total lifting",
                              cone=(sq.left(u), sq.top(u)))
        return lifted

    return FinMap.from_callable(sq.corner, sq.corner, act)


# -- law suites --------------------------------------------------------------


def check_alg_unit(au: AlgUnit) -> LawReport:
    universe = au.universe
    star = terminal()
    sq = Square(top=au.term_point, left=FinMap.identity(star),
                right=universe.tp, bottom=au.type_point)
    typed = (au.type_point.dom == star and au.type_point.cod == universe.ty
             and au.term_point.dom == star and au.term_point.cod == universe.tm)
    commutes = typed and sq.commuting_witness() is None
    rows = [
        ClauseVerdict("alg-unit", "1", "points of Ty and Tm", typed, 1),
        ClauseVerdict("alg-unit", "2", "term lies over the type", commutes, 1),
        ClauseVerdict("alg-unit", "3", "term square is a pullback",
                      commutes and is_pullback(*sq), 1),
    ]
    return LawReport(rows=tuple(rows))


def check_alg_pi(ap: AlgPi) -> LawReport:
    universe = ap.universe
    try:
        sig = PolySignature(universe.tp, ap.cls)
        app_tm = apply_poly(sig, universe.tm)
        app_ty = apply_poly(sig, universe.ty)
        left = poly_map(sig, universe.tp)
    except PiclanError as exc:
        return _structure_error("alg-pi", exc)
    typed = (ap.lam_map.dom == app_tm.total and ap.lam_map.cod == universe.tm
             and ap.pi_map.dom == app_ty.total and ap.pi_map.cod == universe.ty)
    sq = Square(top=ap.lam_map, left=left, right=universe.tp, bottom=ap.pi_map)
    commutes = typed and sq.commuting_witness() is None
    rows = [
        ClauseVerdict("alg-pi", "1", "lam and pi live on P_tp Tm and P_tp Ty",
                      typed, len(app_ty.total)),
        ClauseVerdict("alg-pi", "2", "lam square commutes", commutes,
                      len(app_ty.total)),
        ClauseVerdict("alg-pi", "3", "lam square is a pullback",
                      commutes and is_pullback(*sq), len(app_ty.total)),
    ]
    return LawReport(rows=tuple(rows))


def check_alg_sigma(asig: AlgSigma) -> LawReport:
    universe = asig.universe
    try:
        sig = PolySignature(universe.tp, asig.cls)
        comp = poly_compose(sig, sig)
    except PiclanError as exc:
        return _structure_error("alg-sigma", exc)
    typed = (asig.pair_map.dom == comp.comp_dom
             and asig.pair_map.cod == universe.tm
             and asig.sigma_map.dom == comp.base_app.total
             and asig.sigma_map.cod == universe.ty)
    sq = Square(top=asig.pair_map, left=comp.map, right=universe.tp,
                bottom=asig.sigma_map)
    commutes = typed and sq.commuting_witness() is None
    rows = [
        ClauseVerdict("alg-sigma", "1", "pair and sigma live on the composite",
                      typed, len(comp.comp_dom)),
        ClauseVerdict("alg-sigma", "2", "pair square commutes", commutes,
                      len(comp.comp_dom)),
        ClauseVerdict("alg-sigma", "3", "pair square is a pullback",
                      commutes and is_pullback(*sq), len(comp.comp_dom)),
    ]
    return LawReport(rows=tuple(rows))


def _structure_error(former: str, exc: PiclanError) -> LawReport:
    # a candidate that breaks its own typing cannot reach the law clauses
    return LawReport(rows=(ClauseVerdict(
        former=former, clause="eval", title="structure evaluation raised an error",
        passed=False, bound=0, counterexample=repr(exc)),))


def check_alg_id(aid: AlgId) -> LawReport:
    universe = aid.universe
    try:
        skel = build_id_skeleton(aid)
    except PiclanError as exc:
        return _structure_error("alg-id", exc)
    refl_typed = (aid.refl_map.then(universe.tp)
                  == skel.diagonal.then(aid.id_map))
    section = skel.rho.then(skel.i_map) == FinMap.identity(universe.tm)
    rows = [
        ClauseVerdict("alg-id", "1", "refl lands in the diagonal family",
                      refl_typed, len(skel.pairs.ext)),
        ClauseVerdict("alg-id", "2", "rho sections the fibration",
                      section, len(skel.total.ext)),
    ]
    lifter = aid.lifter if aid.lifter is not None else search_lifter(skel.v_square)
    try:
        weak = check_weak_pullback(WeakPullbackStructure(skel.v_square, lifter))
    except PiclanError as exc:
        rows.append(ClauseVerdict(
            former="alg-id", clause="eval",
            title="structure evaluation raised an error",
            passed=False, bound=len(skel.total.ext), counterexample=repr(exc)))
        return LawReport(rows=tuple(rows))
    rows.append(ClauseVerdict("alg-id", "3", "restriction square commutes",
                              weak.row("1").passed, len(skel.total.ext),
                              counterexample=weak.row("1").counterexample))
    rows.append(ClauseVerdict("alg-id", "4", "eliminator lifts every cone",
                              weak.row("2").passed, len(skel.total.ext),
                              counterexample=weak.row("2").counterexample))
    return LawReport(rows=tuple(rows))


def check_alg_formers(alg: AlgFormers) -> dict[str, LawReport]:
    reports = {}
    if alg.unit is not None:
        reports["unit"] = check_alg_unit(alg.unit)
    if alg.pi is not None:
        reports["pi"] = check_alg_pi(alg.pi)
    if alg.sigma is not None:
        reports["sigma"] = check_alg_sigma(alg.sigma)
    if alg.ident is not None:
        reports["id"] = check_alg_id(alg.ident)
    return reports
