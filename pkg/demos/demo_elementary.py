"""Elementary type formers and their law suites.

The propositional universe carries unit, dependent product, dependent
sum and identity structure.  Each former has numbered defining clauses
plus derived lemmas (rows prefixed L.), and every row is checked by
enumerating contexts up to a size bound.
"""

import dataclasses

from piclan import (FinMap, build_tower, check_elem_formers, check_elem_pi,
                    heterogeneous_pi_sigma, propositional_formers)


def print_report(name: str, report) -> None:
    print(f"  [{name}]")
    for row in report.rows:
        print(f"    {row.line()}")


def main() -> None:
    bound = 2

    print("== propositional universe, all four formers ==")
    formers = propositional_formers()
    reports = check_elem_formers(formers, bound)
    for name, report in reports.items():
        print_report(name, report)
    total = sum(len(r.rows) for r in reports.values())
    derived = sum(1 for r in reports.values() for row in r.rows
                  if row.clause.startswith("L."))
    print(f"  {total} rows checked, {derived} of them derived lemmas")

    print()
    print("== heterogeneous product and sum across a tower ==")
    # families of level-0 types over level-0 types assemble at level 1
    tower = build_tower((2, 4))
    pi, sigma = heterogeneous_pi_sigma(tower, 0, 1)
    print(f"  pi suite passed:    {check_elem_pi(pi, bound).passed}")
    from piclan import check_elem_sigma
    print(f"  sigma suite passed: {check_elem_sigma(sigma, bound).passed}")

    print()
    print("== a broken former is caught ==")
    # sabotage lam: move the first answer to a different term of the same
    # type; needs the tower, the propositional fibers are too small to lie in
    def crooked_lam(gamma, a_map, b_map, b_term):
        honest = pi.lam(gamma, a_map, b_map, b_term)
        table = dict(honest.table)
        if len(gamma) > 0:
            g0 = gamma.elements[0]
            fiber = pi.r_universe.tp.fiber(honest.then(pi.r_universe.tp)(g0))
            if len(fiber) > 1:
                table[g0] = next(t for t in fiber if t != honest(g0))
        return FinMap.from_table(honest.dom, pi.r_universe.tm, table)

    mutant = dataclasses.replace(pi, lam=crooked_lam)
    report = check_elem_pi(mutant, bound)
    print(f"  mutant pi suite passed: {report.passed}")
    for row in report.failures()[:2]:
        print(f"    {row.line()}")


if __name__ == "__main__":
    main()
