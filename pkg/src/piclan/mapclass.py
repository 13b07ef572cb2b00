"""Map classes and machine-checked clan axioms.

A map class is a decidable predicate on maps together with a provenance
tag.  The checkers quantify exhaustively over canonical objects of size
up to a bound and report one verdict per axiom, carrying a replayable
counterexample on failure:

  (1) pullbacks of class maps along arbitrary maps are class maps,
  (2) every bijection is a class map,
  (3) class maps compose,
  (4) pushforwards of class maps along class maps are class maps, with
      the partial right-adjoint hom bijection verified against arbitrary
      maps into the base,
  (5) every map to the terminal object is a class map (clan axiom).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import SearchBudgetExceeded
from .fin import (FinMap, FinObj, Square, all_bijections, all_maps, bang,
                  canonical_obj, is_pullback, objects_up_to, pullback,
                  pushforward, pushforward_transpose, pushforward_untranspose,
                  slice_homs, terminal)


@dataclass(frozen=True)
class MapClass:
    name: str
    provenance: tuple
    predicate: Callable[[FinMap], bool] = field(compare=False)

    def member(self, f: FinMap) -> bool:
        return bool(self.predicate(f))


def all_maps_class(size_bound: int | None = None) -> MapClass:
    """Every map, optionally restricted to objects below a size bound."""
    if size_bound is None:
        return MapClass("all", ("all",), lambda f: True)
    return MapClass(
        f"all≤{size_bound}", ("all", size_bound),
        lambda f: len(f.dom) <= size_bound and len(f.cod) <= size_bound)


def monomorphisms() -> MapClass:
    return MapClass("mono", ("named", "mono"), FinMap.is_injective)


def surjections() -> MapClass:
    return MapClass("surj", ("named", "surj"), FinMap.is_surjective)


def explicit_class(maps, name: str = "explicit") -> MapClass:
    frozen = tuple(maps)
    return MapClass(name, ("explicit", frozen), lambda f: f in frozen)


def predicate_class(name: str, predicate: Callable[[FinMap], bool]) -> MapClass:
    return MapClass(name, ("predicate", name), predicate)


def fiber_size_class(sizes) -> MapClass:
    """Maps all of whose fiber sizes lie in the given set."""
    allowed = frozenset(sizes)
    return MapClass(
        f"fibers⊆{sorted(allowed)}", ("fiber-sizes", allowed),
        lambda f: set(f.fiber_sizes()) <= allowed)


def principal_class(tp: FinMap) -> MapClass:
    """Maps that arise as pullbacks of tp.

    Membership is decided by the fiber-cardinality criterion: f is a
    pullback of tp iff every fiber of f has the cardinality of some fiber
    of tp.  pullback_square_oracle provides the independent search-based
    route for cross-validation; the two must never be merged.
    """
    available = frozenset(tp.fiber_sizes())

    def member(f: FinMap) -> bool:
        return all(size in available for size in f.fiber_sizes())

    return MapClass(f"pullbacks-of({tp!r})", ("principal", tp), member)


def union_class(classes, name: str | None = None) -> MapClass:
    frozen = tuple(classes)
    label = name or ("∪(" + ", ".join(c.name for c in frozen) + ")")
    return MapClass(label, ("union", frozen),
                    lambda f: any(c.member(f) for c in frozen))


def is_class_object(cls: MapClass, obj: FinObj) -> bool:
    """Whether the unique map obj → 1 belongs to the class."""
    return cls.member(bang(obj))


@dataclass(frozen=True)
class AxiomReport:
    axiom: int
    verdict: bool
    scope: int
    counterexample: Optional[tuple] = None
    detail: str = ""

    def line(self) -> str:
        text = f"axiom={self.axiom} verdict={'pass' if self.verdict else 'fail'}"
        if self.detail:
            text += f" detail={self.detail}"
        return text


def _enum_maps(objs):
    for dom in objs:
        for cod in objs:
            yield from all_maps(dom, cod)


def check_axiom_pullback_stability(cls: MapClass, bound: int) -> AxiomReport:
    objs = objects_up_to(bound)
    for f in _enum_maps(objs):
        if not cls.member(f):
            continue
        for y_obj in objs:
            for g in all_maps(y_obj, f.cod):
                moved = pullback(f, g).proj2
                if not cls.member(moved):
                    return AxiomReport(1, False, bound, (f, g, moved),
                                       "pullback of a class map left the class")
    return AxiomReport(1, True, bound)


def check_axiom_isos(cls: MapClass, bound: int) -> AxiomReport:
    objs = objects_up_to(bound)
    for dom in objs:
        for cod in objs:
            for iso in all_bijections(dom, cod):
                if not cls.member(iso):
                    return AxiomReport(2, False, bound, (iso,),
                                       "a bijection is missing from the class")
    return AxiomReport(2, True, bound)


def check_axiom_composition(cls: MapClass, bound: int) -> AxiomReport:
    objs = objects_up_to(bound)
    members = [f for f in _enum_maps(objs) if cls.member(f)]
    by_dom = {}
    for g in members:
        by_dom.setdefault(g.dom, []).append(g)
    for f in members:
        for g in by_dom.get(f.cod, ()):
            if not cls.member(f.then(g)):
                return AxiomReport(3, False, bound, (f, g, f.then(g)),
                                   "composite of class maps left the class")
    return AxiomReport(3, True, bound)


def check_preclan(cls: MapClass, bound: int) -> list[AxiomReport]:
    """Axioms (1)-(3)."""
    return [
        check_axiom_pullback_stability(cls, bound),
        check_axiom_isos(cls, bound),
        check_axiom_composition(cls, bound),
    ]


def check_pi_preclan(cls: MapClass, bound: int) -> AxiomReport:
    """Axiom (4): pushforward closure, plus the partial-adjoint hom bijection.

    For every class f: E → B and class g: Z → E the pushforward f_* g must be
    a class map, and for every (arbitrary) σ: S → B the transposes between
    maps σ → f_* g over B and maps f^* σ → g over E must be mutually inverse
    bijections.
    """
    objs = objects_up_to(bound)
    for f in _enum_maps(objs):
        if not cls.member(f):
            continue
        for z_obj in objs:
            for g in all_maps(z_obj, f.dom):
                if not cls.member(g):
                    continue
                pf = pushforward(f, g)
                if not cls.member(pf.map):
                    return AxiomReport(4, False, bound, (f, g, pf.map),
                                       "pushforward left the class")
                for s_obj in objs:
                    for sigma in all_maps(s_obj, f.cod):
                        over_base = slice_homs(sigma, pf.map)
                        fiber_side = slice_homs(pullback(f, sigma).proj1, g)
                        if len(over_base) != len(fiber_side):
                            return AxiomReport(
                                4, False, bound, (f, g, sigma),
                                "hom-set cardinalities disagree")
                        for h in over_base:
                            k = pushforward_transpose(f, g, pf, sigma, h)
                            if k not in fiber_side:
                                return AxiomReport(4, False, bound, (f, g, sigma, h),
                                                   "transpose left the hom-set")
                            if pushforward_untranspose(f, g, pf, sigma, k) != h:
                                return AxiomReport(4, False, bound, (f, g, sigma, h),
                                                   "transposes are not mutually inverse")
    return AxiomReport(4, True, bound)


def check_clan(cls: MapClass, bound: int) -> AxiomReport:
    """Axiom (5): every map to the terminal object is a class map.

    On failure the detail lists which enumerated objects are class objects,
    i.e. the object part of the restricted subcategory the class does carry.
    """
    objs = objects_up_to(bound)
    failed = None
    for obj in objs:
        if not cls.member(bang(obj)):
            failed = obj
            break
    if failed is None:
        return AxiomReport(5, True, bound)
    kept = [len(obj) for obj in objs if is_class_object(cls, obj)]
    return AxiomReport(5, False, bound, (failed,),
                       f"class objects among sizes 0..{bound}: {kept}")


def run_axioms(cls: MapClass, bound: int, axioms=(1, 2, 3, 4, 5)) -> list[AxiomReport]:
    table = {
        1: check_axiom_pullback_stability,
        2: check_axiom_isos,
        3: check_axiom_composition,
        4: check_pi_preclan,
        5: check_clan,
    }
    return [table[n](cls, bound) for n in axioms]


@dataclass(frozen=True)
class ClassifyingSquare:
    square: Square

    @property
    def base_map(self) -> FinMap:
        return self.square.bottom

    @property
    def top_map(self) -> FinMap:
        return self.square.top


def pullback_square_oracle(f: FinMap, tp: FinMap,
                           budget: int = 10 ** 6) -> Optional[ClassifyingSquare]:
    """Search for a square exhibiting f as a pullback of tp.

    Exhaustive over base maps cod(f) → cod(tp) in enumeration order; for the
    first base whose fibers match in size, the canonical-order fiberwise
    bijection is taken and the square verified with is_pullback.  Independent
    of the fiber-cardinality membership criterion by design.
    """
    candidates = len(tp.cod) ** len(f.cod) if len(f.cod) else 1
    if candidates > budget:
        raise SearchBudgetExceeded(
            f"{candidates} candidate base maps exceed budget {budget}")
    for base in all_maps(f.cod, tp.cod):
        table = {}
        ok = True
        for b in f.cod.elements:
            down = f.fiber(b)
            up = tp.fiber(base(b))
            if len(down) != len(up):
                ok = False
                break
            table.update(zip(down, up))
        if not ok:
            continue
        top = FinMap.from_table(f.dom, tp.dom, table)
        if is_pullback(top, f, tp, base):
            return ClassifyingSquare(Square(top, f, tp, base))
    return None
