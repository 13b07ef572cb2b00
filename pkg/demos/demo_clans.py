"""Map classes and their closure axioms.

A class of display maps is checked against five numbered axioms:
(1) pullback stability, (2) isomorphisms, (3) composition,
(4) pushforward closure with the transpose bijection, (5) all maps
to the terminal object.  (1)-(3) make a preclan, adding (4) makes it
a pi-preclan, adding (5) a clan.
"""

from piclan import (bang, build_propositional_universe, canonical_obj,
                    check_clan, check_pi_preclan, check_preclan,
                    fiber_size_class, monomorphisms, principal_class,
                    surjections)


def report_lines(reports) -> None:
    for r in reports:
        verdict = "pass" if r.verdict else "fail"
        line = f"  axiom {r.axiom}: {verdict}"
        if not r.verdict and r.counterexample is not None:
            line += f"  ({r.detail})"
        print(line)


def main() -> None:
    bound = 2

    print("== monomorphisms ==")
    mono = monomorphisms()
    report_lines(check_preclan(mono, bound))
    report_lines([check_pi_preclan(mono, bound)])
    report_lines([check_clan(mono, bound)])
    print("  monos form a pi-preclan but not a clan: the fold 2 -> 1 is not monic")

    print()
    print("== surjections ==")
    surj = surjections()
    report_lines(check_preclan(surj, bound))
    report_lines([check_clan(surj, bound)])
    print("  surjections are pullback stable yet still miss the clan axiom:")
    print("  the empty object's map to the point is not onto")

    print()
    print("== fiber-size classes ==")
    small = fiber_size_class((0, 1))
    report_lines(check_preclan(small, bound))
    two = canonical_obj(2, "p")
    print(f"  fold map in class: {small.member(bang(two))} "
          f"(its single fiber has 2 elements)")

    print()
    print("== the principal class of a universe ==")
    # maps that arise, up to pullback, from the universe's display tp
    universe = build_propositional_universe()
    cls = principal_class(universe.tp)
    report_lines(check_preclan(cls, bound))
    report_lines([check_pi_preclan(cls, bound)])
    print("  the propositional universe generates exactly the monomorphisms:")
    witness = bang(canonical_obj(2, "q"))
    print(f"    non-monic fold rejected: {not cls.member(witness)}")
    everything_matches = all(
        cls.member(f) == mono.member(f)
        for f in (witness, bang(canonical_obj(1, "q")), bang(canonical_obj(0, "q"))))
    print(f"    agrees with the mono class on the samples above: {everything_matches}")


if __name__ == "__main__":
    main()
