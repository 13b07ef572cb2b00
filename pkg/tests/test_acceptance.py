"""Acceptance gate: one printed pass/fail line per numbered criterion.

Run with `pytest tests/test_acceptance.py -s` to see the lines as they
complete.  Every check is exact; each criterion also carries a wall-clock
budget and fails when it runs over.
"""

import dataclasses
import itertools
import pathlib
import re
import time

import piclan
from piclan import (
    FinMap,
    FinObj,
    PolySignature,
    Square,
    all_bijections,
    all_maps,
    all_maps_class,
    alg_to_elem,
    apply_poly,
    bang,
    bc_iso_verdict,
    bc_transforms,
    build_fiber_universe,
    build_propositional_universe,
    build_tower,
    canonical_obj,
    check_alg_formers,
    check_elem_formers,
    check_elem_pi,
    check_elem_sigma,
    check_pi_preclan,
    check_preclan,
    check_roundtrip_alg,
    check_roundtrip_elem,
    check_source,
    compose_iso,
    decompose,
    elem_to_alg,
    eval_judgment,
    extract_alg_from_closure,
    heterogeneous_pi_sigma,
    hierarchy_corollary,
    is_pullback,
    monomorphisms,
    objects_up_to,
    poly_compose,
    poly_map,
    principal_class,
    principal_preclan_theorem,
    prop_model,
    propositional_formers,
    pullback,
    pullback_square_oracle,
    pushforward,
    pushforward_transpose,
    pushforward_untranspose,
    recompose,
    slice_homs,
    square_is_pullback,
    union_class,
    vertical_nat_trans,
)
from piclan.errors import CheckError, ParseError

CORPUS = pathlib.Path(__file__).parent / "corpus"


def _verdict(name: str, budget: float, start: float, ok: bool) -> None:
    elapsed = time.monotonic() - start
    status = "pass" if ok and elapsed <= budget else "fail"
    print(f"acceptance {name}: {status} ({elapsed:.1f}s, budget {budget:.0f}s)")
    assert ok, f"{name}: a check failed"
    assert elapsed <= budget, f"{name}: {elapsed:.1f}s over the {budget:.0f}s budget"


def test_01_category_laws():
    start = time.monotonic()
    ok = True
    objs = objects_up_to(4)
    by_pair = {(m, n): tuple(all_maps(objs[m], objs[n]))
               for m in range(5) for n in range(5)}

    # identity laws for every map between objects of size <= 4
    for (m, n), fs in by_pair.items():
        id_m, id_n = FinMap.identity(objs[m]), FinMap.identity(objs[n])
        for f in fs:
            ok = ok and id_m.then(f) == f and f.then(id_n) == f

    # associativity: intern every engine composite once, then compare the
    # two evaluation orders of every composable triple by table lookup
    ids = {}
    total = 0
    for (m, n), fs in by_pair.items():
        for f in fs:
            ids[(m, n, f.idx)] = total
            total += 1
    comp = [[-1] * total for _ in range(total)]
    for (m, n), fs in by_pair.items():
        for p in range(5):
            gs = by_pair[(n, p)]
            gids = [ids[(n, p, g.idx)] for g in gs]
            for f in fs:
                row = comp[ids[(m, n, f.idx)]]
                for g, gi in zip(gs, gids):
                    row[gi] = ids[(m, p, f.then(g).idx)]
    for m, n, p, q in itertools.product(range(5), repeat=4):
        f_ids = [ids[(m, n, f.idx)] for f in by_pair[(m, n)]]
        g_ids = [ids[(n, p, g.idx)] for g in by_pair[(n, p)]]
        h_ids = [ids[(p, q, h.idx)] for h in by_pair[(p, q)]]
        for fi in f_ids:
            row_f = comp[fi]
            for gi in g_ids:
                row_fg = comp[row_f[gi]]
                row_g = comp[gi]
                for hi in h_ids:
                    if row_fg[hi] != row_f[row_g[hi]]:
                        ok = False

    # chosen pullbacks: commuting, recognized, and universal against every
    # cone from an apex of size <= 3, over cospans of total size <= 5
    apexes = objects_up_to(3, prefix="a")
    for sx, sy, sc in itertools.product(range(6), repeat=3):
        if sx + sy + sc > 5:
            continue
        x = canonical_obj(sx)
        y = canonical_obj(sy, "y")
        c = canonical_obj(sc, "c")
        for f in all_maps(x, c):
            for g in all_maps(y, c):
                pb = pullback(f, g)
                ok = ok and pb.proj1.then(f) == pb.proj2.then(g)
                ok = ok and is_pullback(pb.proj2, pb.proj1, g, f)
                for a in apexes:
                    for q1 in all_maps(a, x):
                        q1f = q1.then(f)
                        for q2 in all_maps(a, y):
                            if q1f != q2.then(g):
                                continue
                            mediators = [m for m in all_maps(a, pb.apex)
                                         if m.then(pb.proj1) == q1
                                         and m.then(pb.proj2) == q2]
                            ok = ok and len(mediators) == 1
    _verdict("01 category-laws", 60, start, ok)


def test_02_pushforward_adjunction():
    start = time.monotonic()
    ok = True
    xs = objects_up_to(3, "x")
    ys = objects_up_to(3, "y")
    zs = objects_up_to(3, "z")
    ws = objects_up_to(3, "w")
    for x in xs:
        for y in ys:
            for f in all_maps(x, y):
                for z in zs:
                    for g in all_maps(z, x):
                        pf = pushforward(f, g)
                        for w in ws:
                            for sigma in all_maps(w, y):
                                pb = pullback(f, sigma)
                                ups = slice_homs(sigma, pf.map)
                                downs = slice_homs(pb.proj1, g)
                                ok = ok and len(ups) == len(downs)
                                down_set = set(downs)
                                for h in ups:
                                    t = pushforward_transpose(f, g, pf, sigma, h)
                                    ok = ok and t in down_set
                                    back = pushforward_untranspose(f, g, pf, sigma, t)
                                    ok = ok and back == h
                                for k in downs:
                                    h = pushforward_untranspose(f, g, pf, sigma, k)
                                    ok = ok and h.then(pf.map) == sigma
                                    t = pushforward_transpose(f, g, pf, sigma, h)
                                    ok = ok and t == k
    _verdict("02 pushforward-adjunction", 60, start, ok)


def test_03_polynomial_cardinality():
    start = time.monotonic()
    ok = True
    cls = all_maps_class()
    objs = objects_up_to(4)
    args = objects_up_to(4, "v")
    sigs = []
    for e in objs:
        for b in objs:
            for f in all_maps(e, b):
                sigs.append(PolySignature(f, cls))
    for sig in sigs:
        fibs = sig.map.fiber_sizes()
        for x in args:
            app = apply_poly(sig, x)
            # independent count: one section per function fiber -> X
            ok = ok and len(app.total) == sum(len(x) ** k for k in fibs)
            ok = ok and poly_map(sig, FinMap.identity(x)) == FinMap.identity(app.total)
    small = objects_up_to(2, "v")
    pairs2 = [(u, v)
              for a in small for b in small for c in small
              for u in all_maps(a, b) for v in all_maps(b, c)]
    for sig in sigs:
        for u, v in pairs2:
            ok = ok and poly_map(sig, u.then(v)) == \
                poly_map(sig, u).then(poly_map(sig, v))
    tiny_sigs = [s for s in sigs
                 if len(s.map.dom) <= 2 and len(s.map.cod) <= 2]
    mid = objects_up_to(3, "v")
    pairs3 = [(u, v)
              for a in mid for b in mid for c in mid
              for u in all_maps(a, b) for v in all_maps(b, c)]
    for sig in tiny_sigs:
        for u, v in pairs3:
            ok = ok and poly_map(sig, u.then(v)) == \
                poly_map(sig, u).then(poly_map(sig, v))
    _verdict("03 polynomial-cardinality", 30, start, ok)


def test_04_decompose_recompose():
    start = time.monotonic()
    ok = True
    cls = all_maps_class()
    gammas = objects_up_to(3, "g")
    for e in objects_up_to(2, "e"):
        for b in objects_up_to(2, "b"):
            for f in all_maps(e, b):
                sig = PolySignature(f, cls)
                for x in objects_up_to(2, "v"):
                    app = apply_poly(sig, x)
                    for gamma in gammas:
                        for t in all_maps(gamma, app.total):
                            d = decompose(app, t)
                            ok = ok and recompose(app, d.fst, d.snd) == t
                        for fst in all_maps(gamma, b):
                            src = pullback(fst, f)
                            for snd in all_maps(src.apex, x):
                                t = recompose(app, fst, snd)
                                d = decompose(app, t)
                                ok = ok and d.fst == fst and d.snd == snd
    _verdict("04 decompose-recompose", 60, start, ok)


def test_05_composite_cardinality():
    # composite fibers multiply (up to 9 here), so the test objects stay
    # at size <= 2 to keep P_{f'|>f} X enumerable inside the budget
    start = time.monotonic()
    ok = True
    cls = all_maps_class()
    outers = [PolySignature(m, cls)
              for e in objects_up_to(3, "q") for b in objects_up_to(3, "c")
              for m in all_maps(e, b)]
    inners = [PolySignature(m, cls)
              for e in objects_up_to(3, "e") for b in objects_up_to(3, "b")
              for m in all_maps(e, b)]
    small = objects_up_to(2, "v")
    for outer in outers:
        for inner in inners:
            comp = poly_compose(outer, inner)
            csig = comp.signature()
            iso_at = {}
            for x in small:
                lhs = apply_poly(csig, x)
                rhs = apply_poly(inner, apply_poly(outer, x).total)
                ok = ok and len(lhs.total) == len(rhs.total)
                iso = compose_iso(comp, x)
                ok = ok and iso.dom == lhs.total and iso.cod == rhs.total
                ok = ok and iso.is_bijection()
                iso_at[len(x)] = iso
            # naturality of the currying bijection on test maps of size <= 2
            for a in small:
                for b in small:
                    for u in all_maps(a, b):
                        left = poly_map(csig, u).then(iso_at[len(b)])
                        right = iso_at[len(a)].then(
                            poly_map(inner, poly_map(outer, u)))
                        ok = ok and left == right
    _verdict("05 composite-cardinality", 60, start, ok)


def test_06_base_change_isos():
    start = time.monotonic()
    ok = True
    cls = all_maps_class()
    pullback_squares = 0
    non_pullback = 0
    for sb, sc, se in itertools.product(range(4), repeat=3):
        b = canonical_obj(sb, "b")
        c = canonical_obj(sc, "c")
        e = canonical_obj(se, "e")
        for delta in all_maps(b, c):
            for f_prime in all_maps(e, c):
                pb = pullback(delta, f_prime)
                sq = Square(pb.proj2, pb.proj1, f_prime, delta)
                ok = ok and bc_iso_verdict(bc_transforms(sq, cls), cls, 2)
                pullback_squares += 1
                if len(pb.apex) == 0 or non_pullback >= 12:
                    continue
                # duplicate one apex point: still commutes, not a pullback
                extra = ("extra", pb.apex.elements[0])
                fat = FinObj(tuple(pb.apex.elements) + (extra,))
                top_t = {a: pb.proj2(a) for a in pb.apex.elements}
                left_t = {a: pb.proj1(a) for a in pb.apex.elements}
                top_t[extra] = pb.proj2(pb.apex.elements[0])
                left_t[extra] = pb.proj1(pb.apex.elements[0])
                fat_sq = Square(FinMap.from_table(fat, e, top_t),
                                FinMap.from_table(fat, b, left_t),
                                f_prime, delta)
                ok = ok and fat_sq.commuting_witness() is None
                ok = ok and not square_is_pullback(fat_sq)
                ok = ok and not bc_iso_verdict(bc_transforms(fat_sq, cls), cls, 2)
                non_pullback += 1
    ok = ok and pullback_squares >= 50 and non_pullback >= 10
    _verdict("06 base-change-isos", 60, start, ok)


def test_07_vertical_computation():
    start = time.monotonic()
    ok = True
    cls = all_maps_class()
    point = canonical_obj(1, "g")
    for sb, se, sp in itertools.product(range(4), repeat=3):
        b = canonical_obj(sb, "b")
        e = canonical_obj(se, "e")
        ep = canonical_obj(sp, "q")
        for f_prime in all_maps(ep, b):
            fp_sig = PolySignature(f_prime, cls)
            for rho in all_maps(e, ep):
                f_sig = PolySignature(rho.then(f_prime), cls)
                v = vertical_nat_trans(rho, f_sig, fp_sig)
                for x in objects_up_to(3, "v"):
                    component = v.component(x)
                    src = apply_poly(fp_sig, x)
                    tgt = apply_poly(f_sig, x)
                    for t in all_maps(point, src.total):
                        image = t.then(component)
                        d_src = decompose(src, t)
                        d_tgt = decompose(tgt, image)
                        ok = ok and d_tgt.fst == d_src.fst
                        for pair in d_tgt.src.apex.elements:
                            g_el, e_el = pair
                            ok = ok and d_tgt.snd(pair) == \
                                d_src.snd((g_el, rho(e_el)))
    _verdict("07 vertical-computation", 30, start, ok)


def test_08_elementary_suites():
    start = time.monotonic()
    ok = True
    reports = check_elem_formers(propositional_formers(), bound=3)
    ok = ok and set(reports) == {"unit", "pi", "sigma", "id"}
    for report in reports.values():
        ok = ok and report.passed
    derived = {r.clause for rep in reports.values() for r in rep.rows
               if r.clause.startswith("L.")}
    ok = ok and len(derived) >= 5

    tower = build_tower((2, 4))
    pi, sigma = heterogeneous_pi_sigma(tower, 0, 1)
    ok = ok and check_elem_pi(pi, bound=2).passed
    ok = ok and check_elem_sigma(sigma, bound=2).passed

    # sentinel 1: nudge lam to a different answer of the same type
    def crooked_lam(gamma, a_map, b_map, b_term):
        honest = pi.lam(gamma, a_map, b_map, b_term)
        table = dict(honest.table)
        if len(gamma) > 0:
            g0 = gamma.elements[0]
            fiber = pi.r_universe.tp.fiber(honest.then(pi.r_universe.tp)(g0))
            if len(fiber) > 1:
                table[g0] = next(t for t in fiber if t != honest(g0))
        return FinMap.from_table(honest.dom, pi.r_universe.tm, table)

    mutant_pi = dataclasses.replace(pi, lam=crooked_lam)
    ok = ok and not check_elem_pi(mutant_pi, bound=2).passed

    # sentinel 2: swap the projections
    mutant_sigma = dataclasses.replace(sigma, fst=sigma.snd, snd=sigma.fst)
    ok = ok and not check_elem_sigma(mutant_sigma, bound=2).passed
    _verdict("08 elementary-suites", 120, start, ok)


def test_09_algebraic_squares():
    start = time.monotonic()
    ok = True
    alg = elem_to_alg(propositional_formers(), monomorphisms())
    reports = check_alg_formers(alg)
    ok = ok and set(reports) == {"unit", "pi", "sigma", "id"}
    for report in reports.values():
        ok = ok and report.passed
    # the weak pullback and coherence clauses are the id rows 2 and 4
    id_clauses = {r.clause for r in reports["id"].rows}
    ok = ok and {"1", "2", "3", "4"} <= id_clauses

    u = alg.universe
    sig = PolySignature(u.tp, all_maps_class())
    ok = ok and len(apply_poly(sig, u.ty).total) == 3
    ok = ok and len(apply_poly(sig, u.tm).total) == 2
    comp = poly_compose(PolySignature(u.tp, alg.cls),
                        PolySignature(u.tp, alg.cls))
    ok = ok and len(comp.comp_dom) == 1
    _verdict("09 algebraic-squares", 30, start, ok)


def test_10_translation_roundtrips():
    start = time.monotonic()
    ok = True
    formers = propositional_formers()
    cls = monomorphisms()
    alg = elem_to_alg(formers, cls)
    for report in check_alg_formers(alg).values():
        ok = ok and report.passed
    back = alg_to_elem(alg)
    for report in check_elem_formers(back, bound=3).values():
        ok = ok and report.passed
    ok = ok and check_roundtrip_elem(formers, cls, bound=3).passed
    ok = ok and check_roundtrip_alg(alg).passed
    _verdict("10 translation-roundtrips", 120, start, ok)


def test_11_principal_class_theorem():
    start = time.monotonic()
    ok = True
    formers = propositional_formers()
    report = principal_preclan_theorem(formers, bound=3)
    clauses = [r.clause for r in report.rows]
    ok = ok and clauses[0] == "premise"
    ok = ok and "classify" in clauses and "display" in clauses
    ok = ok and report.passed

    u = build_propositional_universe()
    principal = principal_class(u.tp)
    mono = monomorphisms()
    for x in objects_up_to(3):
        for y in objects_up_to(3, "y"):
            for f in all_maps(x, y):
                member = principal.member(f)
                ok = ok and member == mono.member(f)
                # independent route: search for a classifying square
                witness = pullback_square_oracle(f, u.tp)
                ok = ok and (witness is not None) == member
    for axiom in check_preclan(principal, bound=3):
        ok = ok and axiom.verdict
    ok = ok and check_pi_preclan(principal, bound=3).verdict
    _verdict("11 principal-class-theorem", 120, start, ok)


def test_12_hierarchy_corollary():
    start = time.monotonic()
    ok = True
    tower = build_tower((2, 4))
    for row in hierarchy_corollary(tower, bound=2).rows:
        ok = ok and row.passed
    r0 = principal_class(tower.levels[0].tp)
    r1 = principal_class(tower.levels[1].tp)
    hits0 = hits1 = 0
    for x in objects_up_to(3):
        for y in objects_up_to(3, "y"):
            for f in all_maps(x, y):
                if r0.member(f):
                    hits0 += 1
                    ok = ok and r1.member(f)
                hits1 += r1.member(f)
    ok = ok and hits0 == 54 and hits1 == 60
    for axiom in check_preclan(union_class([r0, r1]), bound=3):
        ok = ok and axiom.verdict
    ty0, tm0 = tower.levels[0].ty, tower.levels[0].tm
    ok = ok and r1.member(bang(ty0)) and r1.member(bang(tm0))
    ok = ok and not r0.member(bang(ty0))
    _verdict("12 hierarchy-corollary", 60, start, ok)


def _fiberwise_agree(left_leg, reference, candidate):
    if reference == candidate:
        return True
    for phi in all_bijections(reference.dom, reference.dom):
        if phi.then(left_leg) == left_leg and phi.then(reference) == candidate:
            return True
    return False


def test_13_closure_extraction():
    start = time.monotonic()
    ok = True
    u = build_propositional_universe()
    extracted = extract_alg_from_closure(u, principal_class(u.tp))
    direct = elem_to_alg(propositional_formers(), monomorphisms())
    ok = ok and extracted.unit is not None and extracted.pi is not None
    ok = ok and extracted.sigma is not None
    ok = ok and extracted.unit.type_point == direct.unit.type_point
    ok = ok and extracted.unit.term_point == direct.unit.term_point
    ok = ok and extracted.pi.pi_map == direct.pi.pi_map
    ok = ok and _fiberwise_agree(extracted.pi.lam_map.then(u.tp),
                                 direct.pi.lam_map, extracted.pi.lam_map)
    ok = ok and extracted.sigma.sigma_map == direct.sigma.sigma_map
    ok = ok and _fiberwise_agree(extracted.sigma.pair_map.then(u.tp),
                                 direct.sigma.pair_map,
                                 extracted.sigma.pair_map)
    for report in check_alg_formers(extracted).values():
        ok = ok and report.passed
    # {1,2} fiber sizes admit no dependent product: 2*2 = 4 is missing
    partial = extract_alg_from_closure(build_fiber_universe((1, 2)),
                                       principal_class(
                                           build_fiber_universe((1, 2)).tp))
    ok = ok and partial.unit is not None and partial.pi is None
    _verdict("13 closure-extraction", 60, start, ok)


def test_14_mltt_corpus():
    start = time.monotonic()
    ok = True
    good = sorted((CORPUS / "good").glob("*.mltt"))
    bad = sorted((CORPUS / "bad").glob("*.mltt"))
    ok = ok and len(good) >= 20 and len(bad) >= 10
    model = prop_model()
    for path in good:
        judgments = check_source(path.read_text(), model)
        ok = ok and len(judgments) >= 1
        for j in judgments:
            ok = ok and j.den.then(model.formers.universe.tp) == j.ty_den
            ok = ok and eval_judgment(j) == "•"
    located = re.compile(r"^\d+:\d+:")
    for path in bad:
        try:
            check_source(path.read_text(), model)
            ok = False
        except (CheckError, ParseError) as exc:
            ok = ok and bool(located.match(str(exc)))
    _verdict("14 mltt-corpus", 30, start, ok)
