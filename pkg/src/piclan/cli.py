"""Command-line entry point.

One executable, `mltt`, dispatching to the library: program checking and
evaluation, law suites, polynomial functor inspection, class axiom
checks, algebraic structure checks, translations, the two main results
and closure extraction, plus universe construction in the JSON format.

Exit codes: 0 when everything requested passes, 1 when any verdict
fails or an input program is rejected, 2 on usage errors (bad flags,
missing or malformed input files).  `--json` switches verdict-producing
commands to a machine-readable {"verdicts": [...]} payload.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebraic import check_alg_formers
from .elementary import (check_elem_formers, check_elem_id, check_elem_pi,
                         check_elem_sigma, check_elem_unit,
                         heterogeneous_pi_sigma, propositional_formers)
from .errors import BoundsTooTight, JsonFormatError, PiclanError
from .fin import FinMap, FinObj, canonical_obj, label_str
from .interp import check_source, eval_judgment, prop_model, tower_model
from .jsonio import (dumps, label_to_json, map_from_json, map_to_json,
                     obj_from_json, obj_to_json, tower_to_json,
                     universe_from_json, universe_to_json)
from .mapclass import (all_maps_class, monomorphisms, principal_class,
                       run_axioms, surjections)
from .poly import PolySignature, apply_poly, compose_iso, poly_compose
from .translate import (alg_to_elem, check_roundtrip_alg, check_roundtrip_elem,
                        elem_to_alg, extract_alg_from_closure,
                        hierarchy_corollary, principal_preclan_theorem)
from .universe import (build_cardinality_universe, build_fiber_universe,
                       build_propositional_universe, build_tower)

ELEM_SUITES = {"unit": check_elem_unit, "pi": check_elem_pi,
               "sigma": check_elem_sigma, "id": check_elem_id}
ALG_ROUNDTRIP_ROWS = {"unit": ("unit-type", "unit-term"),
                      "pi": ("pi", "lam"),
                      "sigma": ("sigma", "pair"),
                      "id": ("id", "refl", "lifter")}


def _encode(value):
    """Counterexample payloads to JSON-safe data."""
    if value is None or isinstance(value, (bool, int, float)):
        return value
    if isinstance(value, FinMap):
        return map_to_json(value)
    if isinstance(value, FinObj):
        return obj_to_json(value)
    if isinstance(value, (tuple, list)):
        return [_encode(v) for v in value]
    return label_to_json(value)


def _finish(args, verdicts, lines=(), extra=None) -> int:
    if getattr(args, "json", False):
        payload = {"verdicts": verdicts}
        if extra:
            payload.update(extra)
        print(dumps(payload))
    else:
        for line in lines:
            print(line)
    return 0 if all(v["pass"] for v in verdicts) else 1


def _verdict(vid, passed, counterexample=None, **extra):
    row = {"id": vid, "pass": bool(passed),
           "counterexample": _encode(counterexample)}
    row.update(extra)
    return row


def _parse_bounds(text: str, parser) -> tuple:
    try:
        bounds = tuple(int(part) for part in text.split(","))
    except ValueError:
        parser.error(f"--bounds wants comma-separated integers, got {text!r}")
    return bounds


def _get_model(args, parser):
    if args.model == "prop":
        return prop_model()
    try:
        return tower_model(_parse_bounds(args.bounds, parser))
    except BoundsTooTight as exc:
        parser.error(str(exc))


def _read_text(path, parser) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        parser.error(f"cannot read {path}: {exc}")


def _read_json(path, parser):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        parser.error(f"cannot read {path}: {exc}")


def _law_rows(args, rows):
    tokens = None
    if getattr(args, "clauses", None):
        tokens = {tok.strip() for tok in args.clauses.split(",") if tok.strip()}
    verdicts, lines = [], []
    for row in rows:
        if tokens is not None and not ({row.clause, row.former,
                                        f"{row.former}.{row.clause}"} & tokens):
            continue
        verdicts.append(_verdict(f"{row.former}.{row.clause}", row.passed,
                                 row.counterexample))
        lines.append(row.line())
    return verdicts, lines


# -- check / eval ----------------------------------------------------------


def _run_programs(args, parser, evaluate: bool) -> int:
    model = _get_model(args, parser)
    verdicts, lines = [], []
    for path in args.files:
        source = _read_text(path, parser)
        try:
            judgments = check_source(source, model)
        except PiclanError as exc:
            verdicts.append(_verdict(str(path), False, str(exc)))
            lines.append(f"fail {path}: {exc}")
            continue
        for i, judgment in enumerate(judgments):
            vid = f"{path}#{i}"
            shown = judgment.subject
            if judgment.annotation:
                shown += f" : {judgment.annotation}"
            if evaluate:
                value = eval_judgment(judgment)
                verdicts.append(_verdict(vid, True, value=value))
                lines.append(f"{vid}: {shown} = {value}")
            else:
                verdicts.append(_verdict(vid, True))
                lines.append(f"pass {vid}: {shown}")
    return _finish(args, verdicts, lines)


def _cmd_check(args, parser) -> int:
    return _run_programs(args, parser, evaluate=False)


def _cmd_eval(args, parser) -> int:
    return _run_programs(args, parser, evaluate=True)


# -- law suites --------------------------------------------------------------


def _cmd_laws(args, parser) -> int:
    if args.model == "prop":
        reports = check_elem_formers(propositional_formers(), args.bound)
        rows = [row for name in ("unit", "pi", "sigma", "id")
                for row in reports[name].rows]
    else:
        tower = build_tower(_parse_bounds(args.bounds, parser))
        try:
            pi, sigma = heterogeneous_pi_sigma(tower, 0, 1)
        except BoundsTooTight as exc:
            parser.error(str(exc))
        rows = list(check_elem_pi(pi, args.bound).rows)
        rows += list(check_elem_sigma(sigma, args.bound).rows)
    verdicts, lines = _law_rows(args, rows)
    return _finish(args, verdicts, lines)


# -- polynomial functors ------------------------------------------------------


def _cmd_poly(args, parser) -> int:
    if args.poly_cmd == "apply":
        try:
            sig = PolySignature(map_from_json(_read_json(args.sig, parser)),
                                all_maps_class())
            x_obj = obj_from_json(_read_json(args.x, parser))
        except JsonFormatError as exc:
            parser.error(str(exc))
        app = apply_poly(sig, x_obj)
        lines = [f"|P_f X| = {len(app.total)}"]
        lines += [f"  {label_str(el)}" for el in app.total.elements]
        if args.json:
            print(dumps({"size": len(app.total),
                         "total": obj_to_json(app.total),
                         "base_projection": map_to_json(app.fst_proj)}))
            return 0
        for line in lines:
            print(line)
        return 0

    try:
        outer = PolySignature(map_from_json(_read_json(args.outer, parser)),
                              all_maps_class())
        inner = PolySignature(map_from_json(_read_json(args.inner, parser)),
                              all_maps_class())
    except JsonFormatError as exc:
        parser.error(str(exc))
    comp = poly_compose(outer, inner)
    verdicts, lines = [], []
    for n in range(args.tests + 1):
        x_obj = canonical_obj(n, prefix="x")
        lhs = apply_poly(comp.signature(), x_obj)
        rhs = apply_poly(comp.inner, apply_poly(comp.outer, x_obj).total)
        line = (f"|X|={n}: composite={len(lhs.total)} "
                f"nested={len(rhs.total)}")
        ok = len(lhs.total) == len(rhs.total)
        if args.check_iso:
            ok = ok and compose_iso(comp, x_obj).is_bijection()
            line += f" iso={'pass' if ok else 'fail'}"
        verdicts.append(_verdict(f"X{n}", ok))
        lines.append(line)
    return _finish(args, verdicts, lines)


# -- map classes ------------------------------------------------------------


def _class_from_spec(spec: str, parser):
    named = {"mono": monomorphisms, "surj": surjections, "all": all_maps_class}
    if spec in named:
        return named[spec]()
    if spec == "prop":
        return principal_class(build_propositional_universe().tp)
    if spec.startswith("card:"):
        return principal_class(build_cardinality_universe(int(spec[5:])).tp)
    if spec.startswith("fibers:"):
        sizes = _parse_bounds(spec[len("fibers:"):], parser)
        return principal_class(build_fiber_universe(sizes).tp)
    try:
        universe = universe_from_json(_read_json(spec, parser))
    except JsonFormatError as exc:
        parser.error(str(exc))
    return principal_class(universe.tp)


def _cmd_clan_check(args, parser) -> int:
    cls = _class_from_spec(args.cls, parser)
    axioms = tuple(int(a) for a in args.axioms.split(","))
    verdicts, lines = [], []
    for report in run_axioms(cls, args.bound, axioms=axioms):
        passed = report.verdict
        line = f"axiom={report.axiom} verdict={'pass' if passed else 'fail'}"
        if report.counterexample is not None:
            blob = json.dumps(_encode(report.counterexample),
                              ensure_ascii=False)
            line += f" counterexample={blob}"
        verdicts.append(_verdict(f"axiom-{report.axiom}", passed,
                                 report.counterexample))
        lines.append(line)
    return _finish(args, verdicts, lines)


# -- algebraic structures ----------------------------------------------------


def _prop_alg():
    formers = propositional_formers()
    return elem_to_alg(formers, principal_class(formers.universe.tp)), formers


def _cmd_alg(args, parser) -> int:
    alg, _ = _prop_alg()
    reports = check_alg_formers(alg)
    names = list(ELEM_SUITES) if args.former == "all" else [args.former]
    rows = [row for name in names for row in reports[name].rows]
    verdicts, lines = _law_rows(args, rows)
    return _finish(args, verdicts, lines)


# -- translations ------------------------------------------------------------


def _cmd_translate(args, parser) -> int:
    alg, formers = _prop_alg()
    if args.direction == "e2a":
        rows = check_alg_formers(alg)[args.former].rows
    elif args.direction == "a2e":
        back = alg_to_elem(alg)
        former = getattr(back, "ident" if args.former == "id" else args.former)
        rows = ELEM_SUITES[args.former](former, args.bound).rows
    else:
        cls = principal_class(formers.universe.tp)
        elem_rows = [row for row in check_roundtrip_elem(formers, cls,
                                                         args.bound).rows
                     if row.clause == args.former
                     or row.clause.startswith(args.former + "-")]
        alg_rows = [row for row in check_roundtrip_alg(alg).rows
                    if row.clause in ALG_ROUNDTRIP_ROWS[args.former]]
        rows = elem_rows + alg_rows
    verdicts, lines = _law_rows(args, rows)
    return _finish(args, verdicts, lines)


def _cmd_theorem(args, parser) -> int:
    if args.result == "principal":
        report = principal_preclan_theorem(propositional_formers(),
                                           bound=args.bound)
    else:
        tower = build_tower(_parse_bounds(args.bounds, parser))
        report = hierarchy_corollary(tower, bound=args.bound)
    verdicts, lines = _law_rows(args, report.rows)
    return _finish(args, verdicts, lines)


def _cmd_extract(args, parser) -> int:
    if args.model == "prop":
        universe = build_propositional_universe()
    elif args.model.startswith("card:"):
        universe = build_cardinality_universe(int(args.model[5:]))
    elif args.model.startswith("fibers:"):
        universe = build_fiber_universe(
            _parse_bounds(args.model[len("fibers:"):], parser))
    else:
        parser.error(f"unknown model {args.model!r}")
    cls = principal_class(universe.tp)
    alg = extract_alg_from_closure(universe, cls, oracle_budget=args.budget)
    verdicts, lines = [], []
    extracted = {}
    reports = {}
    if alg.unit is not None or alg.pi is not None or alg.sigma is not None:
        reports = check_alg_formers(alg)
    for name in ("unit", "sigma", "pi"):
        structure = getattr(alg, name)
        extracted[name] = structure is not None
        if structure is None:
            lines.append(f"former={name} extracted=no")
            continue
        passed = reports[name].passed
        lines.append(f"former={name} extracted=yes "
                     f"verified={'pass' if passed else 'fail'}")
        verdicts.append(_verdict(name, passed))
    return _finish(args, verdicts, lines, extra={"extracted": extracted})


# -- universe construction ----------------------------------------------------


def _cmd_universe(args, parser) -> int:
    if args.universe_cmd == "build":
        if args.kind == "prop":
            universe = build_propositional_universe()
        else:
            if args.max is None:
                parser.error("--kind card needs --max")
            universe = build_cardinality_universe(args.max)
        print(dumps(universe_to_json(universe)))
        return 0
    try:
        tower = build_tower(_parse_bounds(args.bounds, parser))
    except BoundsTooTight as exc:
        parser.error(str(exc))
    print(dumps(tower_to_json(tower)))
    return 0


# -- argument parsing ----------------------------------------------------------


def _add_json(sub):
    sub.add_argument("--json", action="store_true",
                     help="machine-readable verdict output")


def _add_model(sub, choices=("prop", "tower")):
    sub.add_argument("--model", default="prop", choices=choices)
    sub.add_argument("--bounds", default="2,4",
                     help="tower level bounds (comma-separated)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mltt",
        description="Finite-set semantics for a small dependent type theory.")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("check", help="type-check .mltt programs")
    sub.add_argument("files", nargs="+")
    _add_model(sub)
    _add_json(sub)
    sub.set_defaults(func=_cmd_check)

    sub = subs.add_parser("eval", help="check and evaluate .mltt programs")
    sub.add_argument("files", nargs="+")
    _add_model(sub)
    _add_json(sub)
    sub.set_defaults(func=_cmd_eval)

    sub = subs.add_parser("laws", help="run elementary law suites")
    _add_model(sub)
    sub.add_argument("--bound", type=int, default=2,
                     help="context size bound")
    sub.add_argument("--clauses", help="comma-separated clause filter")
    _add_json(sub)
    sub.set_defaults(func=_cmd_laws)

    sub = subs.add_parser("poly", help="polynomial functor tools")
    poly_subs = sub.add_subparsers(dest="poly_cmd", required=True)
    app = poly_subs.add_parser("apply", help="apply P_f to an object")
    app.add_argument("--sig", required=True, help="map JSON for f")
    app.add_argument("--x", required=True, help="object JSON for X")
    _add_json(app)
    app.set_defaults(func=_cmd_poly)
    comp = poly_subs.add_parser("compose", help="composite cardinalities")
    comp.add_argument("--outer", required=True, help="map JSON for f'")
    comp.add_argument("--inner", required=True, help="map JSON for f")
    comp.add_argument("--check-iso", action="store_true", dest="check_iso")
    comp.add_argument("--tests", type=int, default=2,
                      help="test objects X of sizes 0..N")
    _add_json(comp)
    comp.set_defaults(func=_cmd_poly)

    sub = subs.add_parser("clan-check", help="map class axiom checks")
    sub.add_argument("--class", dest="cls", required=True,
                     help="mono|surj|all|prop|card:<n>|fibers:<sizes>|"
                          "universe JSON path")
    sub.add_argument("--bound", type=int, default=2)
    sub.add_argument("--axioms", default="1,2,3,4,5")
    _add_json(sub)
    sub.set_defaults(func=_cmd_clan_check)

    sub = subs.add_parser("alg", help="algebraic structure checks")
    alg_subs = sub.add_subparsers(dest="alg_cmd", required=True)
    chk = alg_subs.add_parser("check")
    chk.add_argument("--model", default="prop", choices=("prop",))
    chk.add_argument("--former", default="all",
                     choices=("unit", "pi", "sigma", "id", "all"))
    chk.add_argument("--bound", type=int, default=2,
                     help="accepted for symmetry; the checks are exhaustive")
    chk.add_argument("--clauses", help="comma-separated clause filter")
    _add_json(chk)
    chk.set_defaults(func=_cmd_alg)

    sub = subs.add_parser("translate",
                          help="elementary/algebraic translations")
    sub.add_argument("--direction", required=True,
                     choices=("e2a", "a2e", "roundtrip"))
    sub.add_argument("--former", required=True,
                     choices=("unit", "pi", "sigma", "id"))
    sub.add_argument("--model", default="prop", choices=("prop",))
    sub.add_argument("--bound", type=int, default=2)
    sub.add_argument("--clauses", help="comma-separated clause filter")
    _add_json(sub)
    sub.set_defaults(func=_cmd_translate)

    sub = subs.add_parser("theorem", help="the two main results")
    sub.add_argument("result", choices=("principal", "hierarchy"))
    sub.add_argument("--bound", type=int, default=2)
    sub.add_argument("--bounds", default="2,4",
                     help="tower level bounds for 'hierarchy'")
    sub.add_argument("--clauses", help="comma-separated clause filter")
    _add_json(sub)
    sub.set_defaults(func=_cmd_theorem)

    sub = subs.add_parser("extract",
                          help="recover algebraic formers from closure")
    sub.add_argument("--model", default="prop",
                     help="prop|card:<n>|fibers:<sizes>")
    sub.add_argument("--budget", type=int, default=10 ** 6)
    _add_json(sub)
    sub.set_defaults(func=_cmd_extract)

    sub = subs.add_parser("universe", help="build universes as JSON")
    uni_subs = sub.add_subparsers(dest="universe_cmd", required=True)
    build = uni_subs.add_parser("build")
    build.add_argument("--kind", required=True, choices=("prop", "card"))
    build.add_argument("--max", type=int, help="largest fiber size")
    build.set_defaults(func=_cmd_universe)
    tower = uni_subs.add_parser("tower")
    tower.add_argument("--bounds", default="2,4")
    tower.set_defaults(func=_cmd_universe)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except PiclanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
