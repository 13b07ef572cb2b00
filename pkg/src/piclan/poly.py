"""Polynomial functors of maps, their universal property, composition,
vertical transformations, base-change comparison maps and distributivity.

For a signature f: E → B the polynomial applied to X is computed
literally as the pushforward along f of the constant family E × X → E,
then relabeled so total elements are pairs (b, s) of a base element and
the graph of a section s: f⁻¹(b) → X.  The two projections onto B and X
realize the representation; decompose/recompose implement the universal
property C(Γ, P_f X) ≅ Σ_{fst: Γ → B} C(fst ×_B f, X) on the nose.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .errors import ClassViolation, CodomainMismatch, NonCommuting, TriangleViolation
from .fin import (FinMap, FinObj, PullbackResult, PushforwardResult, Square,
                  all_maps, is_pullback, objects_up_to, product, product_map,
                  pullback, pushforward, pushforward_transpose)
from .mapclass import MapClass


@dataclass(frozen=True)
class PolySignature:
    """A map together with the class it is drawn from."""

    map: FinMap
    cls: MapClass

    def __post_init__(self):
        if not self.cls.member(self.map):
            raise ClassViolation(
                f"signature map is not a member of class {self.cls.name}")


@dataclass(frozen=True)
class PolyApplication:
    """P_f X with its chosen projections.

    total elements: (b, graph of s: f⁻¹(b) → X)
    fst_proj: total → B
    snd_src:  the chosen pullback fst_proj ×_B f, elements ((b, s), e)
    snd_proj: snd_src → X, evaluation ((b, s), e) ↦ s(e)

    The section side is built on first use: its apex is a fiber-sum of the
    total and dominates the cost of large applications.
    """

    sig: PolySignature
    arg: FinObj
    total: FinObj
    fst_proj: FinMap

    @property
    def snd_src(self) -> PullbackResult:
        return _apply_poly_snd(self.sig.map, self.arg)[0]

    @property
    def snd_proj(self) -> FinMap:
        return _apply_poly_snd(self.sig.map, self.arg)[1]

    @staticmethod
    def graph_of(element) -> dict:
        return dict(element[1])


# bounded: sweeps over many signatures must not pin every application
@lru_cache(maxsize=256)
def _apply_poly(f: FinMap, x_obj: FinObj):
    ex = product(f.dom, x_obj)
    pf = pushforward(f, ex.proj1)
    # forget the section's redundant first components: (b, ((e,(e,x)),…)) → (b, ((e,x),…))
    relabeled = {}
    for raw in pf.total.elements:
        b, graph = raw
        relabeled[(b, tuple((e, pair[1]) for e, pair in graph))] = raw
    total = FinObj(relabeled)
    fst_proj = FinMap.from_callable(total, f.cod, lambda s: s[0])
    return total, fst_proj


@lru_cache(maxsize=256)
def _apply_poly_snd(f: FinMap, x_obj: FinObj):
    total, fst_proj = _apply_poly(f, x_obj)
    snd_src = pullback(fst_proj, f)
    snd_proj = FinMap.from_callable(snd_src.apex, x_obj,
                                    lambda p: dict(p[0][1])[p[1]])
    return snd_src, snd_proj


def apply_poly(sig: PolySignature, x_obj: FinObj) -> PolyApplication:
    total, fst_proj = _apply_poly(sig.map, x_obj)
    return PolyApplication(sig=sig, arg=x_obj, total=total, fst_proj=fst_proj)


def poly_map(sig: PolySignature, h: FinMap) -> FinMap:
    """P_f h: postcompose every section with h."""
    src = apply_poly(sig, h.dom)
    tgt = apply_poly(sig, h.cod)
    return FinMap.from_callable(
        src.total, tgt.total,
        lambda s: (s[0], tuple((e, h(x)) for e, x in s[1])))


@dataclass(frozen=True)
class PolyDecomposition:
    fst: FinMap
    snd: FinMap
    src: PullbackResult  # the chosen pullback fst ×_B f carrying snd


def decompose(app: PolyApplication, t: FinMap) -> PolyDecomposition:
    """Split t: Γ → P_f X into its base component and fiberwise sections."""
    if t.cod != app.total:
        raise CodomainMismatch("decompose expects a map into the polynomial total")
    fst = t.then(app.fst_proj)
    src = pullback(fst, app.sig.map)
    snd = FinMap.from_callable(src.apex, app.arg,
                               lambda p: dict(t(p[0])[1])[p[1]])
    return PolyDecomposition(fst=fst, snd=snd, src=src)


def recompose(app: PolyApplication, fst: FinMap, snd: FinMap) -> FinMap:
    """Rebuild t: Γ → P_f X from a base map and a section over its pullback."""
    f = app.sig.map
    if fst.cod != f.cod:
        raise CodomainMismatch("base component must land in the signature base")
    src = pullback(fst, f)
    if snd.dom != src.apex or snd.cod != app.arg:
        raise CodomainMismatch("section component must live on fst ×_B f")

    def act(gamma):
        b = fst(gamma)
        return (b, tuple((e, snd((gamma, e))) for e in f.fiber(b)))

    return FinMap.from_callable(fst.dom, app.total, act)


# -- composition -----------------------------------------------------------


@dataclass(frozen=True)
class CompositeSignature:
    """The signature f' ▷ f presenting P_{f'} followed by P_f.

    comp_dom elements are pairs (w, e') where w = ((b, φ), e) runs over the
    chosen pullback fstProj ×_B f of the application P_f B' and e' ∈ E'
    satisfies f'(e') = φ(e).
    """

    outer: PolySignature   # f': E' → B'
    inner: PolySignature   # f:  E  → B
    base_app: PolyApplication  # P_f B'
    comp_dom: FinObj
    map: FinMap            # comp_dom → P_f B'

    def signature(self) -> PolySignature:
        return PolySignature(self.map, self.inner.cls)

    @staticmethod
    def decode(element):
        """((b, φ-graph), e, e') view of a comp_dom element."""
        w, e_prime = element
        (b, phi), e = w
        return (b, phi), e, e_prime


def poly_compose(outer: PolySignature, inner: PolySignature) -> CompositeSignature:
    f_prime, f = outer.map, inner.map
    base_app = apply_poly(inner, f_prime.cod)
    mid = base_app.snd_src                      # fstProj ×_B f
    top = pullback(base_app.snd_proj, f_prime)  # elements (w, e')
    comp_map = top.proj1.then(mid.proj1)
    comp = CompositeSignature(outer=outer, inner=inner, base_app=base_app,
                              comp_dom=top.apex, map=comp_map)
    if not inner.cls.member(comp_map):
        raise ClassViolation("composite signature map left the class")
    return comp


def compose_iso(comp: CompositeSignature, x_obj: FinObj) -> FinMap:
    """The currying bijection P_{f'▷f} X → P_f (P_{f'} X).

    An element (base, s) with base = (b, φ) and s defined on the composite
    fiber {(e, e') | e ∈ E_b, f'(e') = φ(e)} curries to the section sending
    e ∈ E_b to the element (φ(e), s(e, -)) of P_{f'} X.
    """
    f_prime, f = comp.outer.map, comp.inner.map
    lhs = apply_poly(comp.signature(), x_obj)
    inner_app = apply_poly(comp.outer, x_obj)
    rhs = apply_poly(comp.inner, inner_app.total)

    def act(element):
        base, graph = element
        (b, phi) = base
        phi_at = dict(phi)
        s = dict(graph)
        outer_graph = []
        for e in f.fiber(b):
            target = phi_at[e]
            inner_graph = tuple(
                (e_prime, s[(((base, e)), e_prime)])
                for e_prime in f_prime.fiber(target))
            outer_graph.append((e, (target, inner_graph)))
        return (b, tuple(outer_graph))

    return FinMap.from_callable(lhs.total, rhs.total, act)


# -- vertical transformations ----------------------------------------------


@dataclass(frozen=True)
class VerticalTransformation:
    """The natural transformation P_{f'} → P_f induced by ρ: E → E' over B."""

    rho: FinMap
    f_sig: PolySignature        # f: E → B
    f_prime_sig: PolySignature  # f': E' → B

    def component(self, x_obj: FinObj) -> FinMap:
        src = apply_poly(self.f_prime_sig, x_obj)
        tgt = apply_poly(self.f_sig, x_obj)
        f, rho = self.f_sig.map, self.rho

        def act(element):
            b, graph = element
            s = dict(graph)
            return (b, tuple((e, s[rho(e)]) for e in f.fiber(b)))

        return FinMap.from_callable(src.total, tgt.total, act)


def vertical_nat_trans(rho: FinMap, f_sig: PolySignature,
                       f_prime_sig: PolySignature) -> VerticalTransformation:
    if rho.dom != f_sig.map.dom or rho.cod != f_prime_sig.map.dom:
        raise CodomainMismatch("ρ must map the inner signature domain to the outer")
    if f_sig.map.cod != f_prime_sig.map.cod:
        raise CodomainMismatch("both signatures must share the base")
    if rho.then(f_prime_sig.map) != f_sig.map:
        raise TriangleViolation("ρ ≫ f' = f fails")
    return VerticalTransformation(rho=rho, f_sig=f_sig, f_prime_sig=f_prime_sig)


# -- base-change comparison maps (Beck-Chevalley) ---------------------------


@dataclass(frozen=True)
class BcTransforms:
    """Comparison maps for a commuting square

        E --φ--> E'
        |         |
        f         f'
        v         v
        B --δ--> B'

    For w: W → E' the components are

      alpha(w): f_!(φ^* W) → δ^*(f'_! W)   (e, ŵ) ↦ (f(e), ŵ)
      beta(w):  δ^*(f'_* W) → f_*(φ^* W)   (b, t)  ↦ (b, e ↦ (e, s_t(φ(e))))

    i.e. alpha goes from restrict-then-shriek to shriek-then-restrict and
    beta from pushforward-then-restrict to restrict-then-pushforward,
    matching the mate conventions for the two adjunctions.
    """

    square: Square  # top=φ, left=f, right=f', bottom=δ

    def alpha(self, w: FinMap) -> tuple[FinMap, FinMap, FinMap]:
        """Returns (component, lhs structure map to B, rhs structure map to B)."""
        phi, f, f_prime, delta = self.square
        restricted = pullback(phi, w)            # elements (e, ŵ)
        lhs_map = restricted.proj1.then(f)
        pushed = w.then(f_prime)                 # W over B'
        rhs = pullback(delta, pushed)            # elements (b, ŵ)
        comp = FinMap.from_callable(restricted.apex, rhs.apex,
                                    lambda p: (f(p[0]), p[1]))
        return comp, lhs_map, rhs.proj1

    def beta(self, w: FinMap) -> tuple[FinMap, FinMap, FinMap]:
        phi, f, f_prime, delta = self.square
        pf_outer = pushforward(f_prime, w)
        lhs = pullback(delta, pf_outer.map)      # elements (b, t)
        restricted = pullback(phi, w)            # elements (e, ŵ)
        pf_inner = pushforward(f, restricted.proj1)

        def act(pair):
            b, t = pair
            section = PushforwardResult.section_graph(t)
            return (b, tuple((e, (e, section[phi(e)])) for e in f.fiber(b)))

        comp = FinMap.from_callable(lhs.apex, pf_inner.total, act)
        return comp, lhs.proj1, pf_inner.map


def bc_transforms(square: Square, cls: MapClass) -> BcTransforms:
    if not square.boundary_ok():
        raise CodomainMismatch("square boundary maps do not line up")
    witness = square.commuting_witness()
    if witness is not None:
        raise NonCommuting("base-change square does not commute", witness=witness)
    if not cls.member(square.left) or not cls.member(square.right):
        raise ClassViolation("both vertical maps must be class members")
    return BcTransforms(square=square)


def bc_iso_verdict(bc: BcTransforms, cls: MapClass, bound: int) -> bool:
    """Whether every alpha and beta component is a bijection for class maps
    w: W → E' with |W| ≤ bound."""
    e_prime = bc.square.top.cod
    for w_obj in objects_up_to(bound, prefix="w"):
        for w in all_maps(w_obj, e_prime):
            if not cls.member(w):
                continue
            a, a_lhs, a_rhs = bc.alpha(w)
            if not a.is_bijection():
                return False
            if a.then(a_rhs) != a_lhs:
                raise NonCommuting("alpha component does not live over B")
            b, b_lhs, b_rhs = bc.beta(w)
            if not b.is_bijection():
                return False
            if b.then(b_rhs) != b_lhs:
                raise NonCommuting("beta component does not live over B")
    return True


# -- distributivity ----------------------------------------------------------


@dataclass(frozen=True)
class DistributivityWitness:
    """The pentagon g_! ≫ f_* ≅ ε^* ≫ f'_* ≫ q_! for f: Y → X, g: Z → Y.

    q = f_* g, the pullback leg is f ×_X q with its projections, ε the
    counit evaluation (y, (x, s)) ↦ s(y) and f' the second projection onto
    f_* Z.  iso_components maps each test object w: W → Z to the bijection
    between f_*(W over Y) and the rerouted composite, commuting over X.
    """

    f: FinMap
    g: FinMap
    q: FinMap
    pullback_leg: PullbackResult
    counit: FinMap
    f_prime: FinMap
    iso_components: dict

    def pushforward_stability_check(self, h: FinMap, cls: MapClass) -> tuple[bool, bool]:
        """Membership of f_* h versus the underlying map of f'_*(ε^* h).

        h: W → Z must be a map between objects over Y (i.e. h ≫ g is the
        structure map of W).  For any class stable under pre/post-composition
        with isomorphisms the two answers agree.
        """
        if h.cod != self.g.dom:
            raise CodomainMismatch("h must land in the domain of g")
        w_over_y = h.then(self.g)
        pf_w = pushforward(self.f, w_over_y)
        pf_z = pushforward(self.f, self.g)

        def push_action(elem):
            x, graph = elem
            return (x, tuple((y, h(w)) for y, w in graph))

        direct = FinMap.from_callable(pf_w.total, pf_z.total, push_action)
        restricted = pullback(self.counit, h)
        rerouted = pushforward(self.f_prime, restricted.proj1).map
        return cls.member(direct), cls.member(rerouted)


def reroute_data(f: FinMap, g: FinMap):
    """q = f_* g with its evaluation counit and rerouting leg.

    Returns (pf, q, leg, counit, f_prime) where leg is the chosen pullback
    f ×_X q, counit: leg → Z is the transpose of the identity on f_* Z and
    f_prime its second projection.  No class conditions are imposed.
    """
    if g.cod != f.dom:
        raise CodomainMismatch("need g: Z → Y and f: Y → X composable")
    pf = pushforward(f, g)
    q = pf.map
    leg = pullback(f, q)  # elements (y, t) with f(y) = q(t)
    counit = pushforward_transpose(f, g, pf, q, FinMap.identity(pf.total))
    return pf, q, leg, counit, leg.proj2


def distributivity(f: FinMap, g: FinMap, cls: MapClass,
                   test_bound: int = 2) -> DistributivityWitness:
    if g.cod != f.dom:
        raise CodomainMismatch("need g: Z → Y and f: Y → X composable")
    if not cls.member(f) or not cls.member(g):
        raise ClassViolation("distributivity needs class maps f and g")
    pf, q, leg, counit, f_prime = reroute_data(f, g)
    components = {}
    for w_obj in objects_up_to(test_bound, prefix="w"):
        for w in all_maps(w_obj, g.dom):
            if not cls.member(w):
                continue
            lhs_pf = pushforward(f, w.then(g))
            restricted = pullback(counit, w)
            rerouted = pushforward(f_prime, restricted.proj1)
            rhs_to_x = rerouted.map.then(q)

            def act(elem):
                x, graph = elem
                s = dict(graph)
                z_section = tuple((y, w(s[y])) for y in f.fiber(x))
                t = (x, z_section)
                phi_graph = tuple(((y, t), ((y, t), s[y])) for y in f.fiber(x))
                return (t, phi_graph)

            comp = FinMap.from_callable(lhs_pf.total, rerouted.total, act)
            if not comp.is_bijection():
                raise NonCommuting("distributivity component is not a bijection")
            if comp.then(rhs_to_x) != lhs_pf.map:
                raise NonCommuting("distributivity component does not commute over X")
            components[w] = comp
    return DistributivityWitness(f=f, g=g, q=q, pullback_leg=leg, counit=counit,
                                 f_prime=f_prime, iso_components=components)
