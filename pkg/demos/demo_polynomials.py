"""Polynomial functors on finite sets.

A map f: E -> B with fibers of sizes k_0..k_n sends X to the disjoint
union over b of X^(k_b).  The script walks through application, the
term decomposition, composition of signatures, and the base-change
comparison maps.
"""

from piclan import (FinMap, FinObj, PolySignature, Square, all_maps_class,
                    apply_poly, bc_iso_verdict, bc_transforms, canonical_obj,
                    compose_iso, decompose, label_str, poly_compose, pullback,
                    recompose, square_is_pullback)

ANY = all_maps_class()


def sig_with_fibers(*sizes, prefix="e") -> PolySignature:
    """Signature over a base with one point per requested fiber size."""
    base = canonical_obj(len(sizes), "b")
    labels = [f"{prefix}{i}_{j}" for i, k in enumerate(sizes) for j in range(k)]
    dom = FinObj(tuple(labels))
    table = {lab: f"b{lab.split('_')[0][1:]}" for lab in labels}
    return PolySignature(FinMap.from_table(dom, base, table), ANY)


def main() -> None:
    print("== application ==")
    sig = sig_with_fibers(2, 1)
    x = canonical_obj(2, "x")
    app = apply_poly(sig, x)
    fibs = sorted(sig.map.fiber_sizes())
    expect = sum(len(x) ** k for k in fibs)
    print(f"  fibers {fibs}, |X| = {len(x)}")
    print(f"  |P_f X| = {len(app.total)}  (formula gives 2^2 + 2^1 = {expect})")
    for el in app.total.elements[:3]:
        print(f"    element: {label_str(el)}")
    print("    ...")

    print()
    print("== terms decompose into base point plus section ==")
    gamma = canonical_obj(1, "g")
    t = FinMap.from_table(gamma, app.total, {"g0": app.total.elements[0]})
    d = decompose(app, t)
    print(f"  fst lands at {label_str(d.fst('g0'))}")
    print(f"  snd is defined on {len(d.src.apex)} pulled-back points")
    back = recompose(app, d.fst, d.snd)
    print(f"  recompose(decompose(t)) == t: {back == t}")

    print()
    print("== composition of signatures ==")
    outer = sig_with_fibers(1, 2, prefix="u")
    inner = sig_with_fibers(2, prefix="v")
    comp = poly_compose(outer, inner)
    lhs = apply_poly(PolySignature(comp.map, ANY), x)
    rhs_inner = apply_poly(outer, x)
    rhs = apply_poly(inner, rhs_inner.total)
    print(f"  |P_(f' |> f) X| = {len(lhs.total)}")
    print(f"  |P_f (P_f' X)|  = {len(rhs.total)}")
    iso = compose_iso(comp, x)
    print(f"  currying map is a bijection: {iso.is_bijection()}")

    print()
    print("== base change ==")
    # pull a 2,1-fiber display back along a point inclusion
    f_prime = sig_with_fibers(2, 1, prefix="m").map
    point = canonical_obj(1, "p")
    delta = FinMap.from_table(point, f_prime.cod, {"p0": "b0"})
    pb = pullback(delta, f_prime)
    square = Square(top=pb.proj2, left=pb.proj1, right=f_prime, bottom=delta)
    bc = bc_transforms(square, ANY)
    print(f"  square is a pullback: {square_is_pullback(square)}")
    print(f"  comparison maps all bijections (test maps up to size 2): "
          f"{bc_iso_verdict(bc, ANY, 2)}")

    # fatten the apex with a duplicate point: still commutes, no longer cartesian
    extra = ("extra", pb.apex.elements[0])
    fat = FinObj(tuple(pb.apex.elements) + (extra,))
    top = FinMap.from_table(fat, f_prime.dom,
                            {**{el: pb.proj2(el) for el in pb.apex.elements},
                             extra: pb.proj2(extra[1])})
    left = FinMap.from_table(fat, point,
                             {**{el: pb.proj1(el) for el in pb.apex.elements},
                              extra: pb.proj1(extra[1])})
    fat_square = Square(top=top, left=left, right=f_prime, bottom=delta)
    fat_bc = bc_transforms(fat_square, ANY)
    print(f"  fattened square recognized as a pullback: "
          f"{square_is_pullback(fat_square)}")
    print(f"  its comparison maps remain bijective: {bc_iso_verdict(fat_bc, ANY, 2)}")


if __name__ == "__main__":
    main()
