"""Finite sets with chosen limits: the ambient category.

Objects are finite sets of labels.  A label is an opaque token (a string)
or a tuple of labels, so pullback apexes and pushforward totals carry
structured element names.  Maps are total lookup tables.  Composition is
written in diagrammatic order throughout: ``compose(f, g)`` and
``f.then(g)`` both mean "first f, then g".

Everything here is immutable and deterministic: constructing the same
chosen pullback or pushforward twice yields equal values, which is what
makes the chosen-structure laws testable on the nose.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, NamedTuple

from .errors import CodomainMismatch, DuplicateLabel, NonCommuting

Label = object  # str | tuple[Label, ...]


def normalize_label(label) -> Label:
    """Coerce nested lists (e.g. from JSON) to tuples; reject non-token atoms."""
    if isinstance(label, str):
        return label
    if isinstance(label, tuple):
        try:
            return _normalize_tuple(label)
        except TypeError:  # a list buried inside a tuple is unhashable
            return tuple(normalize_label(part) for part in label)
    if isinstance(label, list):
        return tuple(normalize_label(part) for part in label)
    raise TypeError(f"labels are strings or tuples of labels, got {type(label).__name__}")


@lru_cache(maxsize=1 << 16)
def _normalize_tuple(label: tuple) -> tuple:
    # nested labels share substructure heavily, so memoize per tuple
    return tuple(normalize_label(part) for part in label)


def label_key(label):
    """Total order on labels: atoms first (alphabetic), then tuples pointwise."""
    if isinstance(label, str):
        return (0, label)
    try:
        return _label_key_tuple(label)
    except TypeError:
        return (1, tuple(label_key(part) for part in label))


@lru_cache(maxsize=1 << 16)
def _label_key_tuple(label: tuple):
    return (1, tuple(label_key(part) for part in label))


def label_str(label) -> str:
    """Canonical text form: atoms as-is, tuples parenthesized and comma-joined."""
    if isinstance(label, str):
        return label
    return "(" + ", ".join(label_str(part) for part in label) + ")"


class FinObj:
    """A finite set of distinct labels in canonical order."""

    __slots__ = ("elements", "_index")

    def __init__(self, elements: Iterable[Label] = ()):
        ordered = tuple(sorted((normalize_label(e) for e in elements), key=label_key))
        index: dict = {}
        for pos, e in enumerate(ordered):
            if e in index:
                raise DuplicateLabel(e)
            index[e] = pos
        object.__setattr__(self, "elements", ordered)
        object.__setattr__(self, "_index", index)

    def __setattr__(self, name, value):
        raise AttributeError("FinObj is immutable")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, label):
        return label in self._index

    def position(self, label) -> int:
        return self._index[label]

    def __eq__(self, other):
        return isinstance(other, FinObj) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return "FinObj({" + ", ".join(label_str(e) for e in self.elements) + "})"


class FinMap:
    """A total map between finite sets, stored as positions into the codomain."""

    __slots__ = ("dom", "cod", "idx", "_fibers")

    def __init__(self, dom: FinObj, cod: FinObj, idx: tuple[int, ...]):
        if len(idx) != len(dom):
            raise ValueError("index table length does not match domain size")
        if any(i < 0 or i >= len(cod) for i in idx):
            raise ValueError("index table points outside the codomain")
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "idx", tuple(idx))
        object.__setattr__(self, "_fibers", None)

    def __setattr__(self, name, value):
        raise AttributeError("FinMap is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_table(dom: FinObj, cod: FinObj, table) -> FinMap:
        idx = []
        for e in dom.elements:
            if e not in table:
                raise ValueError(f"partial table: no image for {label_str(e)}")
            idx.append(cod.position(table[e]))
        return FinMap(dom, cod, tuple(idx))

    @staticmethod
    def from_callable(dom: FinObj, cod: FinObj, fn: Callable) -> FinMap:
        return FinMap(dom, cod, tuple(cod.position(fn(e)) for e in dom.elements))

    @staticmethod
    def identity(obj: FinObj) -> FinMap:
        return FinMap(obj, obj, tuple(range(len(obj))))

    @staticmethod
    def constant(dom: FinObj, cod: FinObj, value) -> FinMap:
        pos = cod.position(value)
        return FinMap(dom, cod, (pos,) * len(dom))

    # -- behaviour -----------------------------------------------------

    def __call__(self, label):
        return self.cod.elements[self.idx[self.dom.position(label)]]

    def then(self, other: FinMap) -> FinMap:
        """Diagrammatic composition: first self, then other."""
        if self.cod != other.dom:
            raise CodomainMismatch(
                f"cannot compose: codomain {self.cod!r} != domain {other.dom!r}")
        return FinMap(self.dom, other.cod, tuple(other.idx[i] for i in self.idx))

    @property
    def table(self) -> dict:
        return {e: self.cod.elements[i] for e, i in zip(self.dom.elements, self.idx)}

    def fiber(self, label) -> tuple:
        """Elements of the domain mapping to `label`, in canonical order."""
        fibers = self._fibers
        if fibers is None:
            fibers = [[] for _ in range(len(self.cod))]
            for e, i in zip(self.dom.elements, self.idx):
                fibers[i].append(e)
            fibers = tuple(tuple(f) for f in fibers)
            object.__setattr__(self, "_fibers", fibers)
        return fibers[self.cod.position(label)]

    def fiber_sizes(self) -> tuple[int, ...]:
        counts = [0] * len(self.cod)
        for i in self.idx:
            counts[i] += 1
        return tuple(counts)

    def is_injective(self) -> bool:
        return len(set(self.idx)) == len(self.idx)

    def is_surjective(self) -> bool:
        return len(set(self.idx)) == len(self.cod)

    def is_bijection(self) -> bool:
        return len(self.dom) == len(self.cod) and self.is_injective()

    def inverse(self) -> FinMap:
        if not self.is_bijection():
            raise ValueError("only bijections invert")
        back = [0] * len(self.cod)
        for pos, i in enumerate(self.idx):
            back[i] = pos
        return FinMap(self.cod, self.dom, tuple(back))

    def __eq__(self, other):
        return (isinstance(other, FinMap) and self.dom == other.dom
                and self.cod == other.cod and self.idx == other.idx)

    def __hash__(self):
        return hash((self.dom, self.cod, self.idx))

    def __repr__(self):
        body = ", ".join(
            f"{label_str(e)}↦{label_str(self.cod.elements[i])}"
            for e, i in zip(self.dom.elements, self.idx))
        return "FinMap{" + body + "}"


def compose(f: FinMap, g: FinMap) -> FinMap:
    """Diagrammatic composition: first f, then g."""
    return f.then(g)


# -- terminal object and products --------------------------------------

_STAR = "*"


@lru_cache(maxsize=1)
def terminal() -> FinObj:
    return FinObj((_STAR,))


def bang(obj: FinObj) -> FinMap:
    """The unique map to the terminal object."""
    return FinMap.constant(obj, terminal(), _STAR)


class PullbackResult(NamedTuple):
    apex: FinObj
    proj1: FinMap
    proj2: FinMap


def pullback(f: FinMap, g: FinMap) -> PullbackResult:
    """Chosen pullback of the cospan f: X → C ← Y :g.

    Apex elements are the pairs (x, y) with f(x) = g(y), in canonical order.
    """
    if f.cod != g.cod:
        raise CodomainMismatch("pullback needs a common codomain")
    pairs = []
    for x, ix in zip(f.dom.elements, f.idx):
        for y, iy in zip(g.dom.elements, g.idx):
            if ix == iy:
                pairs.append((x, y))
    apex = FinObj(pairs)
    proj1 = FinMap.from_callable(apex, f.dom, lambda p: p[0])
    proj2 = FinMap.from_callable(apex, g.dom, lambda p: p[1])
    return PullbackResult(apex, proj1, proj2)


def product(x_obj: FinObj, y_obj: FinObj) -> PullbackResult:
    """Chosen binary product, realized as the pullback over the terminal object."""
    return pullback(bang(x_obj), bang(y_obj))


def product_map(f: FinMap, g: FinMap) -> FinMap:
    """f × g between the chosen products."""
    src = product(f.dom, g.dom)
    tgt = product(f.cod, g.cod)
    return FinMap.from_callable(src.apex, tgt.apex, lambda p: (f(p[0]), g(p[1])))


class Square(NamedTuple):
    """A commuting square anchored at its corner.

        corner --top--> X
          |             |
        left          right
          v             v
          Y --bottom--> Z
    """

    top: FinMap
    left: FinMap
    right: FinMap
    bottom: FinMap

    @property
    def corner(self) -> FinObj:
        return self.top.dom

    def boundary_ok(self) -> bool:
        return (self.top.dom == self.left.dom
                and self.top.cod == self.right.dom
                and self.left.cod == self.bottom.dom
                and self.right.cod == self.bottom.cod)

    def commuting_witness(self):
        """None when the square commutes, else an offending corner element."""
        lhs = self.top.then(self.right)
        rhs = self.left.then(self.bottom)
        for e, a, b in zip(self.corner.elements, lhs.idx, rhs.idx):
            if a != b:
                return e
        return None


def is_pullback(top: FinMap, left: FinMap, right: FinMap, bottom: FinMap) -> bool:
    """True iff the commuting square is a pullback.

    Checks that the canonical comparison from the corner into the chosen
    pullback of (bottom, right) is a bijection.  Raises NonCommuting with a
    witness element when the square does not even commute.
    """
    sq = Square(top, left, right, bottom)
    if not sq.boundary_ok():
        raise CodomainMismatch("square boundary maps do not line up")
    w = sq.commuting_witness()
    if w is not None:
        raise NonCommuting("square does not commute", witness=w)
    chosen = pullback(bottom, right)
    seen = set()
    for e in sq.corner.elements:
        image = (left(e), top(e))
        if image in seen:
            return False
        seen.add(image)
    return len(seen) == len(chosen.apex)


def square_is_pullback(sq: Square) -> bool:
    return is_pullback(sq.top, sq.left, sq.right, sq.bottom)


# -- pushforward (dependent product along a map) ------------------------


class PushforwardResult(NamedTuple):
    """f_* g for g: Z → E over f: E → B.

    `map` sends the total to B; the fiber over b is the set of sections
    s: f⁻¹(b) → Z with s ≫ g the fiber inclusion.  Elements are labeled
    (b, graph-of-s) with the graph listed in canonical fiber order.
    """

    base: FinObj
    map: FinMap

    @property
    def total(self) -> FinObj:
        return self.map.dom

    @staticmethod
    def section_graph(element) -> dict:
        b, graph = element
        return dict(graph)


def pushforward(f: FinMap, g: FinMap) -> PushforwardResult:
    if g.cod != f.dom:
        raise CodomainMismatch("pushforward needs g into the domain of f")
    labels = []
    for b in f.cod.elements:
        fib = f.fiber(b)
        for choice in itertools.product(*(g.fiber(e) for e in fib)):
            labels.append((b, tuple(zip(fib, choice))))
    total = FinObj(labels)
    to_base = FinMap.from_callable(total, f.cod, lambda s: s[0])
    return PushforwardResult(f.cod, to_base)


def pushforward_transpose(f: FinMap, g: FinMap, pf: PushforwardResult,
                          sigma: FinMap, h: FinMap) -> FinMap:
    """Transpose h: σ → f_* g over B to a map f^* σ → g over E.

    Input: h: S → total with h ≫ pf.map = sigma.  Output lives on the chosen
    pullback(f, sigma) apex, whose elements are pairs (e, s).
    """
    if h.then(pf.map) != sigma:
        raise NonCommuting("transpose input is not a map over the base")
    pb = pullback(f, sigma)

    def act(pair):
        e, s = pair
        return PushforwardResult.section_graph(h(s))[e]

    return FinMap.from_callable(pb.apex, g.dom, act)


def pushforward_untranspose(f: FinMap, g: FinMap, pf: PushforwardResult,
                            sigma: FinMap, k: FinMap) -> FinMap:
    """Inverse transpose: k: f^* σ → g over E back to a map σ → f_* g over B."""
    pb = pullback(f, sigma)
    if k.dom != pb.apex or k.then(g) != pb.proj1:
        raise NonCommuting("untranspose input is not a map over the fiber side")

    def act(s):
        b = sigma(s)
        fib = f.fiber(b)
        return (b, tuple((e, k((e, s))) for e in fib))

    return FinMap.from_callable(sigma.dom, pf.total, act)


# -- enumeration helpers -------------------------------------------------


def canonical_obj(n: int, prefix: str = "x") -> FinObj:
    """The standard n-element object with atom labels prefix0..prefix{n-1}."""
    return FinObj(tuple(f"{prefix}{i}" for i in range(n)))


def objects_up_to(bound: int, prefix: str = "x") -> tuple[FinObj, ...]:
    return tuple(canonical_obj(n, prefix) for n in range(bound + 1))


def all_maps(dom: FinObj, cod: FinObj) -> Iterator[FinMap]:
    """Every map dom → cod, in a fixed lexicographic order."""
    if len(dom) == 0:
        yield FinMap(dom, cod, ())
        return
    if len(cod) == 0:
        return
    for idx in itertools.product(range(len(cod)), repeat=len(dom)):
        yield FinMap(dom, cod, idx)


def all_bijections(dom: FinObj, cod: FinObj) -> Iterator[FinMap]:
    if len(dom) != len(cod):
        return
    for perm in itertools.permutations(range(len(cod))):
        yield FinMap(dom, cod, perm)


def slice_homs(sigma: FinMap, q: FinMap) -> list[FinMap]:
    """All maps h: dom σ → dom q with h ≫ q = σ (maps over the common base)."""
    if sigma.cod != q.cod:
        raise CodomainMismatch("slice homs need a common base")
    choices = []
    for s in sigma.dom.elements:
        fib = q.fiber(sigma(s))
        if not fib:
            return []
        choices.append([q.dom.position(z) for z in fib])
    return [FinMap(sigma.dom, q.dom, idx) for idx in itertools.product(*choices)]
