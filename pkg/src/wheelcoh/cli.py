"""Command-line interface: ``wheelcoh <subcommand> ...``.

Exit status is 0 on success, 1 when a wheel fails validation or an oracle
check fails, and 2 on malformed input.
"""
from __future__ import annotations

import argparse
import random
import sys
from typing import Callable

from .circuits import minimal_circuits, transposition_order
from .cohomology import (CohomologyReport, InconsistentDivisorError, InvalidWheelError,
                         cohomology_report, components_str, subscheme_Z)
from .monomial import Monomial, MonomialIdeal
from .oracle import (FineDegreeWindow, check_filtration_chain, check_h2_vanishing,
                     e_space, eps_space, oracle_filtration_ideal, oracle_kernel,
                     oracle_syzygies, oracle_wheel_ideal, spans_agree, wheel_window)
from .random_inputs import random_flist
from .serialize import (InputError, class_json, dumps, element_json, fan_from_json,
                        flist_from_json, ideal_json, load_json, monomial_json,
                        signed_divisor_str, step_json, wheel_from_json)
from .syzygy import (WHEEL_FORMULAS, beta_generators, filtration_ideal,
                     filtration_ideal_generators, syzygy_generators, wheel_filtration_ideal)
from .toric import class_group
from .wheel import NotAComplexError, Wheel, build_complex, validate_wheel


def _load_input(path: str, fan=None):
    """A wheel (has ``f_out``) or a bare f-list (has ``f``)."""
    data = load_json(path)
    if "f_out" in data:
        return wheel_from_json(data, fan)
    if "f" in data:
        return flist_from_json(data)
    raise InputError(f"{path}: neither a wheel (f_out) nor an f-list (f)")


def _ideal_text(ideal: MonomialIdeal) -> str:
    if ideal.is_zero():
        return "0"
    if ideal.is_unit():
        return "S"
    return "<" + ", ".join(map(str, ideal.generators)) + ">"


def _comps_json(comps) -> list[list[int]]:
    return [sorted(c) for c in comps]


# -- validate ---------------------------------------------------------------

def cmd_validate(args, out) -> int:
    fan = fan_from_json(load_json(args.fan))
    wheel = wheel_from_json(load_json(args.wheel), fan)
    report = validate_wheel(wheel, fan)
    complex_error = None
    if not (report.relation12_failures or report.relation13_failures):
        try:
            build_complex(wheel)
        except NotAComplexError as exc:
            complex_error = str(exc)
    valid = report.valid and complex_error is None
    if args.format == "json":
        out(dumps({"valid": valid,
                   "relation12_failures": report.relation12_failures,
                   "relation13_failures": report.relation13_failures,
                   "non_cartier": report.non_cartier,
                   "class_failures": report.class_failures,
                   "complex_error": complex_error,
                   "classes": {k: class_json(v) for k, v in report.classes.items()}}))
    else:
        out(f"wheel with m={wheel.m} on a fan with {fan.d} rays: "
            f"{'valid' if valid else 'INVALID'}")
        for msg in report.messages():
            out(f"  {msg}")
        if complex_error:
            out(f"  {complex_error}")
    return 0 if valid else 1


# -- cohomology -------------------------------------------------------------

def _report_json(r: CohomologyReport) -> dict:
    steps = []
    for s in r.h1_steps:
        entry = step_json(s.filtration)
        z = s.subscheme
        entry["Z"] = {"cutting_divisors": [list(d) for d in z.cutting_divisors],
                      "cutting_divisors_str": [Monomial(d).divisor_str() for d in z.cutting_divisors],
                      "components": _comps_json(z.components),
                      "components_str": components_str(z.components),
                      "empty": z.empty}
        steps.append(entry)
    return {
        "m": r.m,
        "class_group": {"invariant_factors": list(r.class_group.invariant_factors),
                        "free_rank": r.class_group.free_rank},
        "h0": {"ideal": ideal_json(r.h0.ideal), "components": _comps_json(r.h0.components),
               "components_str": components_str(r.h0.components), "empty": r.h0.empty,
               "twist_class": class_json(r.h0.twist_class)},
        "h1": {"steps": steps, "vanishing_steps": r.vanishing_steps(),
               "nonvanishing_steps": r.nonvanishing_steps(),
               "empty_support_steps": r.empty_support_steps()},
        "h2": {"divisor": list(r.h2.divisor), "divisor_str": Monomial(r.h2.divisor).divisor_str(),
               "twist_class": class_json(r.h2.twist_class), "zero": r.h2.zero},
        "h3": {"zero": r.h3_zero},
        "concentrated_in": r.concentrated_in(),
    }


def _factor(text: str) -> str:
    return f"({text})" if "+" in text else text


def _report_text(r: CohomologyReport, out) -> None:
    cg = r.class_group
    out(f"Cl(X): free rank {cg.free_rank}, torsion {list(cg.torsion) or 'none'}")
    h0 = "0" if r.h0.empty else f"O_Z (x) L, Z = V{_ideal_text(r.h0.ideal)}, " \
                               f"components {', '.join(components_str(r.h0.components))}"
    out(f"H^0  = {h0}")
    out(f"H^-1 has a {len(r.h1_steps)}-step filtration:")
    for s in r.h1_steps:
        f, z = s.filtration, s.subscheme
        head = f"  k={f.k:>2} tau=({f.tau[0]},{f.tau[1]})"
        if s.vanishes:
            out(f"{head}  I_k = S, quotient vanishes")
            continue
        cuts = " ∩ ".join(_factor(Monomial(d).divisor_str()) for d in z.cutting_divisors)
        support = ", ".join(components_str(z.components)) or "empty (Z_k misses X)"
        out(f"{head}  I_k = {_ideal_text(f.ideal)}  Z_k = {cuts}  support {support}"
            f"  twist {f.shift_symbolic} = L({signed_divisor_str(f.shift_divisor)})")
    h2 = "0" if r.h2.zero else f"O_D (x) L(D), D = {Monomial(r.h2.divisor).divisor_str()}"
    out(f"H^-2 = {h2}")
    out("H^-3 = 0")
    out(f"vanishing steps: {r.vanishing_steps()}")
    out(f"cohomology concentrated in degrees {r.concentrated_in()}")


def cmd_cohomology(args, out) -> int:
    fan = fan_from_json(load_json(args.fan))
    wheel = wheel_from_json(load_json(args.wheel), fan)
    try:
        r = cohomology_report(wheel, fan, args.formula)
    except InvalidWheelError as exc:
        for msg in exc.messages:
            print(msg, file=sys.stderr)
        return 1
    if args.format == "json":
        out(dumps(_report_json(r)))
    else:
        _report_text(r, out)
    return 0


# -- filtration / syzygy ----------------------------------------------------

def cmd_filtration(args, out) -> int:
    fan = fan_from_json(load_json(args.fan)) if args.fan else None
    obj = _load_input(args.input, fan)
    m = obj.m if isinstance(obj, Wheel) else len(obj)
    n = m * (m - 1) // 2
    ks = [args.k] if args.k else range(1, n + 1)
    rows = []
    if isinstance(obj, Wheel):
        cg = class_group(fan) if fan else None
        for k in ks:
            rows.append(step_json(wheel_filtration_ideal(obj, k, cg, args.formula)))
    else:
        table = transposition_order(m)
        for k in ks:
            ideal = filtration_ideal(obj, k)
            rows.append({"k": k, "tau": list(table.tau(k)), "vanishes": ideal.is_unit(),
                         "ideal_generators": ideal_json(ideal),
                         "raw_generators": [monomial_json(g)
                                            for g in filtration_ideal_generators(obj, k)]})
    if args.format == "json":
        out(dumps({"steps": rows}))
    else:
        for row in rows:
            gens = [g["monomial"] for g in row["ideal_generators"]]
            text = "0" if not gens else "S" if gens == ["1"] else "<" + ", ".join(gens) + ">"
            extra = f"  twist {row['shift_symbolic']}" if "shift_symbolic" in row else ""
            out(f"k={row['k']:>2} tau=({row['tau'][0]},{row['tau'][1]})  I_k = {text}{extra}")
    return 0


def cmd_syzygy(args, out) -> int:
    obj = _load_input(args.input)
    f = list(obj.f_out) if isinstance(obj, Wheel) else obj
    m = len(f)
    n = m * (m - 1) // 2
    betas = beta_generators(f)
    ks = [args.k] if args.k else range(1, n + 1)
    syz = {}
    for k in ks:
        circuits = sorted(minimal_circuits(m, k), key=lambda c: (len(c), c.vertices))
        syz[k] = list(zip(circuits, syzygy_generators(f, k)))
    if args.format == "json":
        out(dumps({"beta": [element_json(b) for b in betas],
                   "syzygies": {str(k): [{"circuit": list(c.closed()), **element_json(s)}
                                         for c, s in rows] for k, rows in syz.items()}}))
    else:
        table = transposition_order(m)
        for j, b in enumerate(betas, start=1):
            out(f"beta_{j} {table.tau(j)}: {b}")
        for k, rows in syz.items():
            out(f"syz(F^{k}): " + ("0" if not rows else ""))
            for c, s in rows:
                out(f"  sigma{c} = {s}")
    return 0


# -- oracle-check -----------------------------------------------------------

def _flist_checks(f, pad: int) -> list[tuple[str, object]]:
    """(name, None or counterexample) for every oracle comparison on one f-list."""
    m = len(f)
    n = m * (m - 1) // 2
    window = FineDegreeWindow.around(f, pad)
    results = [("kernel generated by beta",
                spans_agree(e_space(f), beta_generators(f), oracle_kernel(f, window), window))]
    for k in range(1, n + 1):
        bad = spans_agree(eps_space(f, k), syzygy_generators(f, k),
                          oracle_syzygies(f, k, window), window)
        results.append((f"syz(F^{k}) generated by minimal circuits", bad))
        ours, theirs = filtration_ideal(f, k), oracle_filtration_ideal(f, k, window)
        results.append((f"I_{k} closed form", None if ours == theirs else
                        f"closed form {_ideal_text(ours)} vs oracle {_ideal_text(theirs)}"))
    return results


def _wheel_checks(wheel: Wheel, pad: int, formula: str) -> list[tuple[str, object]]:
    n = wheel.m * (wheel.m - 1) // 2
    window = wheel_window(wheel, pad)
    results = []
    for k in range(1, n + 1):
        ours = wheel_filtration_ideal(wheel, k, formula=formula).ideal
        theirs = oracle_wheel_ideal(wheel, k, window)
        results.append((f"wheel I_{k} closed form", None if ours == theirs else
                        f"closed form {_ideal_text(ours)} vs oracle {_ideal_text(theirs)}"))
        try:
            subscheme_Z(wheel, k, formula=formula)
            agree = None
        except InconsistentDivisorError as exc:
            agree = str(exc)
        results.append((f"Z_{k} cutting divisors equal I_{k} generators", agree))
    results.append(("filtration im(phi^2) = F^0 <= ... <= F^n = ker(phi^1)",
                    check_filtration_chain(wheel, window)))
    if not any(min(col) for col in zip(*wheel.f_in)):
        results.append(("ker(phi^2) = im(phi^3)", check_h2_vanishing(wheel, window)))
    return results


def cmd_oracle_check(args, out) -> int:
    cases: list[tuple[str, Callable[[], list]]] = []
    if args.input:
        obj = _load_input(args.input)
        if isinstance(obj, Wheel):
            cases.append((args.input, lambda w=obj: _flist_checks(list(w.f_out), args.window)
                          + _wheel_checks(w, args.window, args.formula)))
        else:
            cases.append((args.input, lambda f=obj: _flist_checks(f, args.window)))
    if args.random:
        rng = random.Random(args.seed)
        for i in range(args.random):
            d = rng.randint(1, args.max_d)
            f = random_flist(rng, args.m, d, args.max_exp)
            label = f"random #{i + 1}: f = " + ", ".join(map(str, f))
            cases.append((label, lambda f=f: _flist_checks(f, args.window)))
    if not cases:
        raise InputError("oracle-check needs an input file or --random R")

    failures = total = 0
    records = []
    for label, run in cases:
        results = run()
        bad = [(name, cex) for name, cex in results if cex is not None]
        total += len(results)
        failures += len(bad)
        records.append({"case": label, "checks": len(results),
                        "failures": [{"property": name, "counterexample":
                                      list(cex) if isinstance(cex, tuple) and
                                      not isinstance(cex, Monomial) else str(cex)}
                                     for name, cex in bad]})
    if args.format == "json":
        out(dumps({"cases": records, "checks": total, "failures": failures,
                   "pass": failures == 0}))
    else:
        for rec in records:
            status = "PASS" if not rec["failures"] else "FAIL"
            out(f"{status} {rec['case']} ({rec['checks']} checks)")
            for fail in rec["failures"]:
                out(f"    {fail['property']}: counterexample {fail['counterexample']}")
        out(f"{total - failures}/{total} checks passed")
    return 0 if failures == 0 else 1


# -- entry point ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wheelcoh", description="Cohomology of monomial wheel complexes on toric varieties.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    formula = argparse.ArgumentParser(add_help=False)
    formula.add_argument("--formula", choices=WHEEL_FORMULAS, default="cycle",
                         help="closed form for I_k, k <= m (default: cycle)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the rhombus relations")
    p.add_argument("fan")
    p.add_argument("wheel")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("cohomology", parents=[common, formula], help="full cohomology report")
    p.add_argument("fan")
    p.add_argument("wheel")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("filtration", parents=[common, formula], help="the ideals I_k")
    p.add_argument("input", help="wheel JSON or f-list JSON")
    p.add_argument("--fan", help="fan JSON, for shift classes")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_filtration)

    p = sub.add_parser("syzygy", parents=[common], help="beta generators and circuit syzygies")
    p.add_argument("input", help="wheel JSON or f-list JSON")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_syzygy)

    p = sub.add_parser("oracle-check", parents=[common, formula],
                       help="compare closed forms with brute-force linear algebra")
    p.add_argument("input", nargs="?", help="wheel JSON or f-list JSON")
    p.add_argument("--window", type=int, default=2,
                   help="pad added to the lcm of all degrees (default 2)")
    p.add_argument("--random", type=int, default=0, metavar="R",
                   help="also check R random f-lists")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--m", type=int, default=4)
    p.add_argument("--max-d", type=int, default=5)
    p.add_argument("--max-exp", type=int, default=2)
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    out = lambda text: print(text)
    try:
        return args.func(args, out)
    except (InputError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
