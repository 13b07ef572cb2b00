"""Universes: a chosen type-of-types map with context extension.

A universe is a map tp: Tm → Ty.  Extending a context Γ by a type
A: Γ → Ty takes the chosen pullback of tp along A, whose elements are
the pairs (γ, t) with tp(t) = A(γ); the display map projects to Γ and
the variable map projects to Tm.

Two concrete families are built here: the two-point propositional
universe and the cardinality universes code(0..k) that stack into a
truncated tower.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundsTooTight, CodomainMismatch, NonCommuting, TypeMismatch
from .fin import (FinMap, FinObj, Square, bang, is_pullback, pullback,
                  terminal)


@dataclass(frozen=True)
class ContextExtension:
    ext: FinObj
    display: FinMap
    var_map: FinMap


@dataclass(frozen=True)
class Universe:
    tm: FinObj
    ty: FinObj
    tp: FinMap

    def extend(self, gamma: FinObj, a_map: FinMap) -> ContextExtension:
        return context_extend(self, gamma, a_map)


def context_extend(universe: Universe, gamma: FinObj, a_map: FinMap) -> ContextExtension:
    """Γ.A with its display and variable maps; the square is the chosen pullback."""
    if a_map.dom != gamma or a_map.cod != universe.ty:
        raise CodomainMismatch("type map must send the context into Ty")
    pb = pullback(a_map, universe.tp)
    return ContextExtension(ext=pb.apex, display=pb.proj1, var_map=pb.proj2)


def pair_sub(universe: Universe, sigma: FinMap, a_map: FinMap, term: FinMap) -> FinMap:
    """The substitution σ.a: Δ → Γ.A, sending δ to (σ(δ), a(δ)).

    Requires term ≫ tp = σ ≫ A; raises TypeMismatch with a witness δ
    otherwise.
    """
    lhs = term.then(universe.tp)
    rhs = sigma.then(a_map)
    if lhs != rhs:
        for delta in sigma.dom.elements:
            if lhs(delta) != rhs(delta):
                raise TypeMismatch("term does not live over the substituted type",
                                   witness=delta)
    ext = context_extend(universe, sigma.cod, a_map)
    return FinMap.from_callable(sigma.dom, ext.ext,
                                lambda d: (sigma(d), term(d)))


# -- concrete universes --------------------------------------------------

PROP_FALSE = "⊥"
PROP_TRUE = "⊤"
PROP_POINT = (PROP_TRUE, "•")


def build_propositional_universe() -> Universe:
    """Ty = {⊥, ⊤}, Tm the single point over ⊤, tp the first projection."""
    ty = FinObj((PROP_FALSE, PROP_TRUE))
    tm = FinObj((PROP_POINT,))
    tp = FinMap.from_callable(tm, ty, lambda t: t[0])
    return Universe(tm=tm, ty=ty, tp=tp)


def code_label(n: int) -> str:
    return f"c{n}"


def code_of(label: str) -> int:
    return int(label[1:])


def build_cardinality_universe(max_size: int) -> Universe:
    """Ty = {code(0..max_size)}, the fiber over code(n) a canonical n-element set."""
    if max_size < 0:
        raise BoundsTooTight("cardinality universes need max_size >= 0")
    ty = FinObj(code_label(n) for n in range(max_size + 1))
    tm = FinObj((code_label(n), str(i))
                for n in range(max_size + 1) for i in range(n))
    tp = FinMap.from_callable(tm, ty, lambda t: t[0])
    return Universe(tm=tm, ty=ty, tp=tp)


def build_fiber_universe(sizes) -> Universe:
    """One type per entry of `sizes`, with a tp fiber of exactly that size.

    Unlike the cardinality universes this does not force every size below
    the maximum to be present, so it can realize non-closed size sets such
    as {1, 2}.
    """
    sizes = tuple(sizes)
    ty = FinObj(f"t{i}" for i in range(len(sizes)))
    tm = FinObj((f"t{i}", str(j))
                for i, n in enumerate(sizes) for j in range(n))
    tp = FinMap.from_callable(tm, ty, lambda t: t[0])
    return Universe(tm=tm, ty=ty, tp=tp)


# -- morphisms, lifts, towers ---------------------------------------------


@dataclass(frozen=True)
class UniverseMorphism:
    source: Universe
    target: Universe
    l_ty: FinMap
    l_tm: FinMap


def check_universe_morphism(m: UniverseMorphism, *, require_mono_ty: bool = False) -> bool:
    """The defining square must be a pullback; strictness flags are opt-in."""
    ok = is_pullback(m.l_tm, m.source.tp, m.target.tp, m.l_ty)
    if require_mono_ty and not m.l_ty.is_injective():
        return False
    return ok


@dataclass(frozen=True)
class UniverseLift:
    """A universe sitting inside the next one as the fiber of a code U₀."""

    morphism: UniverseMorphism
    u0: FinMap       # ⋆ → Ty₁
    as_tm: FinMap    # Ty₀ → Tm₁

    @property
    def u0_square(self) -> Square:
        src = self.morphism.source
        return Square(self.as_tm, bang(src.ty), self.morphism.target.tp, self.u0)


def check_universe_lift(lift: UniverseLift, **flags) -> bool:
    """Both the morphism square and the U₀ classifying square must be pullbacks.

    The U₀ square being a pullback says exactly that as_tm is a bijection
    from Ty₀ onto the fiber of tp₁ over the code U₀ picks out.
    """
    if not check_universe_morphism(lift.morphism, **flags):
        return False
    sq = lift.u0_square
    try:
        return is_pullback(sq.top, sq.left, sq.right, sq.bottom)
    except NonCommuting:
        return False


@dataclass(frozen=True)
class UniverseTower:
    levels: tuple[Universe, ...]
    lifts: tuple[UniverseLift, ...]
    bounds: tuple[int, ...]


def build_tower(bounds) -> UniverseTower:
    """Cardinality universes stacked along code inclusions.

    At level i+1 the code U₀ = code(kᵢ + 1) has a fiber of size kᵢ + 1 =
    |Tyᵢ|, so Tyᵢ embeds into that fiber via as_tm.  Requires
    k_{i+1} >= kᵢ + 1 at every step.
    """
    bounds = tuple(bounds)
    if not bounds:
        raise BoundsTooTight("a tower needs at least one level")
    levels = tuple(build_cardinality_universe(k) for k in bounds)
    lifts = []
    for i in range(len(bounds) - 1):
        low, high = bounds[i], bounds[i + 1]
        if high < low + 1:
            raise BoundsTooTight(
                f"level {i + 1} bound {high} cannot hold the {low + 1}-element "
                f"type of level-{i} codes")
        src, tgt = levels[i], levels[i + 1]
        l_ty = FinMap.from_callable(src.ty, tgt.ty, lambda y: y)
        l_tm = FinMap.from_callable(src.tm, tgt.tm, lambda t: t)
        u0_code = code_label(low + 1)
        u0 = FinMap.constant(terminal(), tgt.ty, u0_code)
        as_tm = FinMap.from_callable(src.ty, tgt.tm,
                                     lambda y: (u0_code, str(code_of(y))))
        lifts.append(UniverseLift(UniverseMorphism(src, tgt, l_ty, l_tm), u0, as_tm))
    return UniverseTower(levels=levels, lifts=tuple(lifts), bounds=bounds)
