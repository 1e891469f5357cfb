"""``equichern`` command-line front end.

Each verb maps to one library operation and prints a single JSON document.
Exit status: 0 on success, 1 on a domain error (including a failed
``validate``), 2 on malformed input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import charclass, orbifold, thom
from .errors import EquichernError
from .gspace import euler, fixed_chi, quotient, validate
from .serialize import (InputError, function_to_json, group_from_json, load_json, load_gspace,
                        rational_str, series_to_json, space_to_json)


class UsageError(InputError):
    pass


def _int_list(text: str | None, flag: str) -> list[int]:
    if text is None or text.strip() == "":
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"{flag}: expected comma-separated integers, got {text!r}") from None


def _weight_list(text: str, flag: str) -> list[list[int]]:
    if text.strip() == "":
        return []
    return [_int_list(w, flag) for w in text.split(";")]


def _space(args):
    return load_gspace(args.space)


def cmd_validate(args):
    report = validate(_space(args))
    return report.to_json(), (0 if report.ok else 1)


def cmd_euler(args):
    return {"chi": euler(_space(args))}


def cmd_fixed_chi(args):
    X = _space(args)
    tup = _int_list(args.tuple, "--tuple")
    for g in tup:
        if not 0 <= g < X.group.order:
            raise UsageError(f"--tuple: element id {g} out of range 0..{X.group.order - 1}")
    return {"chi": fixed_chi(X, tup)}


def cmd_quotient(args):
    Q = quotient(_space(args))
    return dict(space_to_json(Q), chi=euler(Q))


def cmd_canonical(args):
    X = _space(args)
    f = orbifold.quo_orb_function(X, args.k) if args.rational else orbifold.canonical_function(X, args.k)
    return dict(function_to_json(f), k=args.k, rational=args.rational)


def cmd_orbifold_euler(args):
    return {"k": args.k, "value": rational_str(orbifold.orbifold_euler(_space(args), args.k))}


def cmd_symprod(args):
    group = group_from_json(load_json(args.group), args.group) if args.group else None
    value = orbifold.power_orbifold_euler(args.chi, args.n, args.k, group)
    return {"n": args.n, "k": args.k, "value": rational_str(value)}


def cmd_genfun(args):
    coeffs = orbifold.symprod_genfun(args.chi, args.max_n, args.k)
    return {"coeffs": [rational_str(c) for c in coeffs]}


def _spec(args):
    return thom.PorteousSpec(args.e, args.f, args.i)


def _bundles(args, spec):
    if args.base is None:
        raise UsageError("--base is required together with --E/--F")
    e = _int_list(args.E, "--E") if args.E is not None else [0] * spec.e
    f = _int_list(args.F, "--F") if args.F is not None else [0] * spec.f
    return thom.BundleData(args.base, e, f)


def cmd_porteous(args):
    spec = _spec(args)
    if args.E is None and args.F is None and args.base is None:
        trunc = args.trunc if args.trunc is not None else max(spec.codim, charclass.DEFAULT_TRUNC)
        return {"codim": spec.codim, "tp": series_to_json(thom.porteous_tp(spec, trunc))}
    return _class_doc(spec, _bundles(args, spec))


def cmd_degeneracy(args):
    spec = _spec(args)
    return _class_doc(spec, _bundles(args, spec))


def _class_doc(spec, bundles):
    return {"class": str(thom.degeneracy_class(spec, bundles))}


def cmd_segre_sm(args):
    weights = _weight_list(args.weights, "--weights")
    rank = args.rank if args.rank is not None else (len(weights[0]) if weights else 0)
    trunc = args.trunc if args.trunc is not None else charclass.DEFAULT_TRUNC
    ring = charclass.torus_ring(rank, trunc)
    try:
        forms = [charclass.linear_form(ring, w) for w in weights]
    except ValueError as exc:
        raise UsageError(f"--weights: {exc}") from None
    series = thom.segre_sm_smooth(forms, ring)
    return {"series": series_to_json(series), "leading": str(series.lowest_part())}


def cmd_chi_locus(args):
    degrees = _int_list(args.degrees, "--degrees")
    return {"chi": rational_str(thom.euler_of_singular_locus(degrees, args.base))}


def cmd_bgl1(args):
    return charclass.bgl1_truncated(args.m).to_json()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default="json")
    common.add_argument("--trunc", type=int, default=None, help="series truncation order (default 8)")

    parser = argparse.ArgumentParser(prog="equichern", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", metavar="VERB")
    sub.required = True

    def verb(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    def space_verb(name, func, help_):
        p = verb(name, func, help_)
        p.add_argument("--space", required=True, help="GSpace JSON file")
        return p

    space_verb("validate", cmd_validate, "check the invariants of a G-space")
    space_verb("euler", cmd_euler, "Euler characteristic")
    p = space_verb("fixed-chi", cmd_fixed_chi, "Euler characteristic of a simultaneous fixed set")
    p.add_argument("--tuple", default="", help="comma-separated element ids")
    space_verb("quotient", cmd_quotient, "orbit space")
    p = space_verb("canonical", cmd_canonical, "k-th canonical constructible function")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--rational", action="store_true", help="divide by |G|")
    p = space_verb("orbifold-euler", cmd_orbifold_euler, "generalized orbifold Euler characteristic")
    p.add_argument("--k", type=int, required=True)

    p = verb("symprod", cmd_symprod, "orbifold Euler characteristic of X^n under S_n or a given group")
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--group", help="group JSON acting on the n factors (default S_n)")
    p = verb("genfun", cmd_genfun, "symmetric-product generating function coefficients")
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)

    for name, func, help_ in [("porteous", cmd_porteous, "Thom-Porteous polynomial, or its class over P^n"),
                              ("degeneracy", cmd_degeneracy, "degeneracy-locus class over P^n")]:
        p = verb(name, func, help_)
        p.add_argument("--e", type=int, required=True)
        p.add_argument("--f", type=int, required=True)
        p.add_argument("--i", type=int, required=True)
        p.add_argument("--E", help="degrees of the line bundles summing to E")
        p.add_argument("--F", help="degrees of the line bundles summing to F")
        p.add_argument("--base", type=int, default=None, help="dimension n of the base P^n")

    p = verb("segre-sm", cmd_segre_sm, "Segre-SM series of a smooth invariant linear locus")
    p.add_argument("--weights", required=True, help="torus weight vectors, e.g. '1,0;0,1'")
    p.add_argument("--rank", type=int, default=None)
    p = verb("chi-locus", cmd_chi_locus, "Euler characteristic of a generic complete intersection in P^n")
    p.add_argument("--degrees", required=True)
    p.add_argument("--base", type=int, required=True)
    p = verb("bgl1", cmd_bgl1, "GL(1) truncated homology stage m")
    p.add_argument("--m", type=int, required=True)
    return parser


def _table(doc, prefix="") -> list[str]:
    lines = []
    for key, val in doc.items():
        name = f"{prefix}{key}"
        if isinstance(val, dict):
            lines.extend(_table(val, f"{name}."))
        elif isinstance(val, list):
            lines.append(f"{name}\t" + " ".join(json.dumps(v) if isinstance(v, (list, dict)) else str(v) for v in val))
        else:
            lines.append(f"{name}\t{val}")
    return lines


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
        code = 0
        if isinstance(result, tuple):
            result, code = result
    except InputError as exc:
        print(f"equichern: error: {exc}", file=stderr)
        return 2
    except (EquichernError, ValueError, ArithmeticError) as exc:
        print(json.dumps({"error": str(exc)}), file=stdout)
        return 1
    if args.format == "table":
        print("\n".join(_table(result)), file=stdout)
    else:
        print(json.dumps(result), file=stdout)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
