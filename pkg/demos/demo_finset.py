"""Tour of the finite-set engine: objects, maps, pullbacks, pushforwards.

Every construction here is chosen, not merely shown to exist, so the
script can print the actual elements the engine produced.
"""

from piclan import (FinMap, FinObj, all_maps, canonical_obj, compose,
                    is_pullback, label_str, pullback, pushforward,
                    pushforward_transpose, pushforward_untranspose,
                    slice_homs)


def banner(title: str) -> None:
    print()
    print(f"== {title} ==")


def show_map(name: str, f: FinMap) -> None:
    pairs = ", ".join(f"{label_str(x)}|->{label_str(f(x))}" for x in f.dom.elements)
    print(f"  {name}: {pairs}")


def main() -> None:
    banner("objects and composition")
    a = canonical_obj(2, "a")
    b = canonical_obj(3, "b")
    c = canonical_obj(2, "c")
    f = FinMap.from_table(a, b, {"a0": "b1", "a1": "b2"})
    g = FinMap.from_table(b, c, {"b0": "c0", "b1": "c0", "b2": "c1"})
    show_map("f", f)
    show_map("g", g)
    show_map("f;g", compose(f, g))
    print(f"  maps a -> b available: {sum(1 for _ in all_maps(a, b))} (expect 3^2 = 9)")

    banner("a chosen pullback")
    # cospan f: a -> c <- b :h, apex elements are the matching pairs
    f = FinMap.from_table(a, c, {"a0": "c0", "a1": "c1"})
    h = FinMap.from_table(b, c, {"b0": "c0", "b1": "c0", "b2": "c1"})
    pb = pullback(f, h)
    print(f"  apex: {[label_str(x) for x in pb.apex.elements]}")
    print(f"  square commutes: {pb.proj1.then(f) == pb.proj2.then(h)}")
    print(f"  recognized as a pullback: {is_pullback(pb.proj1, pb.proj2, f, h)}")

    banner("universal property, checked by enumeration")
    # every cone over the cospan factors through the apex exactly once
    w = canonical_obj(2, "w")
    cones = 0
    for p in all_maps(w, a):
        for q in all_maps(w, b):
            if p.then(f) != q.then(h):
                continue
            cones += 1
            mediators = [m for m in all_maps(w, pb.apex)
                         if m.then(pb.proj1) == p and m.then(pb.proj2) == q]
            assert len(mediators) == 1
    print(f"  cones from a 2-element vertex: {cones}, each with a unique mediator")

    banner("pushforward along a map")
    e = canonical_obj(3, "e")
    base = canonical_obj(2, "t")
    disp = FinMap.from_table(e, base, {"e0": "t0", "e1": "t0", "e2": "t1"})
    z = canonical_obj(2, "z")
    fam = FinMap.from_table(z, e, {"z0": "e0", "z1": "e2"})
    pf = pushforward(disp, fam)
    print(f"  |total| = {len(pf.total)}  (sections over t0: none cover e1, so 0;"
          f" over t1: z1 covers e2, so 1)")
    for el in pf.total.elements:
        print(f"    section: {label_str(el)}")

    banner("the adjunction, on one test map")
    sigma_dom = canonical_obj(1, "s")
    for sigma in all_maps(sigma_dom, base):
        ups = slice_homs(sigma, pf.map)
        pb2 = pullback(disp, sigma)
        downs = slice_homs(pb2.proj1, fam)
        print(f"  sigma({label_str(sigma('s0'))}): {len(ups)} maps up, "
              f"{len(downs)} maps down")
        for up in ups:
            down = pushforward_transpose(disp, fam, pf, sigma, up)
            back = pushforward_untranspose(disp, fam, pf, sigma, down)
            assert back == up
    print("  transpose then untranspose returned every map up unchanged")


if __name__ == "__main__":
    main()
