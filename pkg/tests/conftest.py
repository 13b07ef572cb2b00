"""Shared hypothesis strategies for small finite objects and maps."""

from hypothesis import strategies as st

from piclan import FinMap, FinObj


def fin_obj(max_size=4, prefix="x"):
    return st.integers(min_value=0, max_value=max_size).map(
        lambda n: FinObj(f"{prefix}{i}" for i in range(n)))


@st.composite
def fin_map(draw, dom=None, cod=None, max_size=4):
    if dom is None:
        dom = draw(fin_obj(max_size, "a"))
    if cod is None:
        cod = draw(fin_obj(max_size, "b"))
    if len(dom) > 0 and len(cod) == 0:
        cod = FinObj(["b0"])  # no map into the empty set from a nonempty one
    idx = draw(st.lists(st.integers(min_value=0, max_value=max(len(cod) - 1, 0)),
                        min_size=len(dom), max_size=len(dom)))
    table = {x: cod.elements[i] for x, i in zip(dom.elements, idx)}
    return FinMap.from_table(dom, cod, table)


@st.composite
def composable_pair(draw, max_size=3):
    a = draw(fin_obj(max_size, "a"))
    b = draw(fin_obj(max_size, "b"))
    c = draw(fin_obj(max_size, "c"))
    f = draw(fin_map(dom=a, cod=b))
    g = draw(fin_map(dom=f.cod, cod=c))
    return f, g
