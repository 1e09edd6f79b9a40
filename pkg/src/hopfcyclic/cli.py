"""
Batch command-line front end.  Every subcommand writes one JSON report
(schema_version, command, config, bounds, passed, checks, results) and
exits 0 when all checks pass, 1 when a check fails and 2 on a
configuration error.  The default field can be set with HOPFCYCLIC_FIELD.
"""

import argparse
import csv
import json
import os
import sys

from .fields import field_from_name
from .hopf import (HopfError, check_flags, check_hopf_axioms,
                   check_modular_involution)
from .report import SCHEMA_VERSION, jsonable

FIELD_ENV = "HOPFCYCLIC_FIELD"


class ConfigError(Exception):
    pass


# ---------------------------------------------------------------------------
# building blocks

def positive(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("bounds must be non-negative")
    return v


def make_field(args):
    name = args.field or os.environ.get(FIELD_ENV)
    if not name:
        return None
    try:
        return field_from_name(name)
    except (ValueError, KeyError) as e:
        raise ConfigError("unknown field %r: %s" % (name, e))


def make_instance(args):
    from .instances import InstanceSpec, build_instance
    try:
        return build_instance(InstanceSpec(args.instance,
                                           field=make_field(args)),
                              check_pairs=False)
    except ConfigError:
        raise
    except (ValueError, KeyError, OSError) as e:
        raise ConfigError("cannot build instance %r: %s" % (args.instance, e))


def make_pair(H, selector):
    from .instances import pair_for
    try:
        return pair_for(H, selector)
    except KeyError as e:
        raise ConfigError(str(e.args[0]))


def make_module(args, H, checks):
    """The (co)cyclic module selected by --module and --pair."""
    from . import cyclic as cy
    kind = args.module
    if kind == "hopf":
        pair = make_pair(H, args.pair)
        if not args.unchecked:
            rep = check_modular_involution(H, pair, args.degree)
            checks.append(rep)
            if not rep.passed:
                return None
        return cy.HopfCyclicModule(H, pair)
    if kind == "path":
        return cy.build_path_space(H)
    if kind == "algebra":
        return cy.build_algebra_cyclic(H)
    if kind == "cm":
        return cy.build_cm_cocyclic(H, make_pair(H, args.pair))
    if kind == "commutative":
        return cy.build_commutative_cocyclic(H)
    raise ConfigError("unknown module %r" % kind)


def homology_module(m):
    from .homology import DualCyclicModule
    return DualCyclicModule(m) if m.kind == "cocyclic" else m


def write_csv(path, dims):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["n", "dim"])
        for n, d in enumerate(dims):
            w.writerow([n, d])


# ---------------------------------------------------------------------------
# subcommands; each returns (checks, results, bounds)

def cmd_verify_axioms(args):
    from .cyclic import verify_cyclic_axioms
    H = make_instance(args)
    checks = []
    m = make_module(args, H, checks)
    if m is not None:
        checks.append(verify_cyclic_axioms(m, args.n_max, args.degree))
    return checks, {"module": getattr(m, "name", None)}, \
        {"n_max": args.n_max, "D": args.degree}


def cmd_verify_hopf(args):
    from .instances import default_pairs, INVOLUTIVE
    H = make_instance(args)
    checks = [check_hopf_axioms(H, args.degree), check_flags(H, args.degree)]
    P = getattr(H, "presentation", None)
    if P is not None and not callable(P):
        checks.append(P.check_confluence())
    pairs = {}
    for key, pair in default_pairs(H).items():
        rep = check_modular_involution(H, pair, args.degree)
        pairs[key] = {"label": pair.label, "involutive": rep.passed}
        if INVOLUTIVE.get(H.name) == key:
            checks.append(rep)
    return checks, {"pairs": pairs}, {"D": args.degree}


def cmd_hochschild(args):
    from .homology import hochschild_homology
    H = make_instance(args)
    checks = []
    m = make_module(args, H, checks)
    if m is None:
        return checks, {}, {"n_max": args.n_max, "W": args.weight}
    out = hochschild_homology(homology_module(m), args.n_max, args.weight)
    if args.csv:
        write_csv(args.csv, out["dims"])
    return checks, out, out["bounds"]


def cmd_cyclic(args):
    from .homology import cyclic_homology
    H = make_instance(args)
    checks = []
    m = make_module(args, H, checks)
    if m is None:
        return checks, {}, {"n_max": args.n_max, "W": args.weight}
    out = cyclic_homology(homology_module(m), args.n_max, args.weight,
                          method=args.method)
    if args.csv:
        write_csv(args.csv, out["dims"])
    return checks, out, out["bounds"]


def cmd_karoubi(args):
    from .cyclic import bh
    from .homology import karoubi_compare
    H = make_instance(args)
    rep = karoubi_compare(bh(H), args.n_max, args.weight)
    return [rep], {"HC": rep.details["HC"], "sum_H": rep.details["sum_H"]}, \
        {"n_max": args.n_max, "W": args.weight}


def _character(r, name):
    from .hopf import counit_character
    from .instances import aslq2_delta
    if name == "epsilon":
        return counit_character(r.H)
    if name == "delta" and r.H.name == "aslq2":
        return aslq2_delta(r.H)
    raise ConfigError("unknown character %r for %s" % (name, r.H.name))


def cmd_resolution(args):
    from . import resolutions as R
    cap = args.cap
    if cap is None and args.name == "aslq2":
        cap = max(8, args.n_max + 1)
    try:
        r = R.load_resolution(args.name, cap=cap, errata=not args.printed)
    except R.ResolutionError as e:
        raise ConfigError(str(e))
    checks = [R.verify_resolution(r)]
    results = {"ranks": r.ranks(),
               "errata_applied": [e["id"] for e in r.errata]}
    bounds = {"cap": r.N}
    if args.base_change:
        names = args.base_change.split(",")
        if len(names) != 2:
            raise ConfigError("--base-change expects LEFT,RIGHT")
        left, right = (_character(r, s.strip()) for s in names)
        n_max = args.n_max
        try:
            out = R.base_change_homology(r, left, right, n_max,
                                         swap=args.swap_factors)
        except R.ResolutionError as e:
            raise ConfigError(str(e))
        results["base_change"] = {
            "characters": names, "swap_factors": args.swap_factors,
            "dims": out["dims"], "representatives": out["representatives"],
            "d1": out["matrices"][1].dense() if 1 in out["matrices"] else []}
        bounds["n_max"] = n_max
        if args.csv:
            write_csv(args.csv, out["dims"])
    if args.verify_homotopy:
        if args.name != "uqsl2":
            raise ConfigError("a contracting homotopy ships only for uqsl2")
        checks.append(R.verify_homotopy_uqsl2(r, args.lmax, args.dmax,
                                              printed=args.printed))
        bounds.update(L=args.lmax, Dg=args.dmax)
    if args.lift is not None:
        _, rep = R.comparison_lift(r, args.lift)
        checks.append(rep)
        bounds["lift"] = args.lift
    return checks, results, bounds


def cmd_maps(args):
    from . import cyclic as cy
    H = make_instance(args)
    n, D = args.n_max, args.degree
    checks = []
    if args.map == "theta":
        sigma = make_pair(H, args.pair).sigma
        checks.append(cy.verify_cyclic_map(cy.map_theta(H, sigma, D=D), n, D))
    elif args.map == "gamma":
        sigma = make_pair(H, args.pair).sigma
        checks.append(cy.check_gamma_theta(H, sigma, n, D))
        pair = make_pair(H, args.pair)
        from .hopf import self_coaction
        g = cy.map_gamma(cy.indicator_trace(H, sigma), self_coaction(H), pair,
                         D=max(D, 1))
        checks.append(cy.verify_cyclic_map(g, n, D))
    elif args.map == "pi":
        checks.append(cy.verify_cyclic_map(cy.projection_pi(H), n, D))
    elif args.map == "psi":
        checks.append(cy.verify_cyclic_map(cy.psi_map(H), n, D))
    elif args.map == "maclane":
        M = cy.regular_bimodule(H)
        f, g = cy.maclane_theta(H, M)
        checks.append(cy.check_inverse_pair(f, g, n, D))
        checks.append(cy.verify_cyclic_map(f, n, D, with_tau=False))
    else:
        raise ConfigError("unknown map %r" % args.map)
    return checks, {"map": args.map}, {"n_max": n, "D": D}


def cmd_hp_commutative(args):
    from .homology import commutative_hp_compare
    H = make_instance(args)
    rep = commutative_hp_compare(H, args.n_max)
    return [rep], {"HP": rep.details["HP"],
                   "parity_sums": rep.details["parity_sums"]}, \
        {"n_max": args.n_max}


# ---------------------------------------------------------------------------
# argument parsing

def build_parser():
    p = argparse.ArgumentParser(prog="hopfcyclic",
                                description="Hopf cyclic homology checks")
    sub = p.add_subparsers(dest="command", required=True)

    def out(sp):
        sp.add_argument("--output", "-o", help="write the JSON report here")
        sp.add_argument("--csv", help="write homology dims as CSV")

    def common(sp, module=True, n_max=3):
        sp.add_argument("--instance", required=True,
                        help="group:Z3, fungrp:S3, tensor:2, laurent, "
                             "uqsl2, aslq2 or file:path.json")
        sp.add_argument("--field", help="Q, Q(q) or F<p>; default from "
                                        "%s or the instance" % FIELD_ENV)
        sp.add_argument("--n-max", type=positive, default=n_max)
        sp.add_argument("--degree", "-D", type=positive, default=2)
        sp.add_argument("--weight", "-W", type=positive, default=None)
        if module:
            sp.add_argument("--pair", default="epsilon,1")
            sp.add_argument("--unchecked", action="store_true",
                            help="skip the modular involution check")
            sp.add_argument("--module", default="hopf",
                            choices=["hopf", "path", "algebra", "cm",
                                     "commutative"])
        out(sp)

    common(sub.add_parser("verify-axioms"))
    common(sub.add_parser("verify-hopf"), module=False)
    sp = sub.add_parser("hochschild")
    common(sp, n_max=4)
    sp = sub.add_parser("cyclic")
    common(sp, n_max=4)
    sp.add_argument("--method", choices=["bB", "CC"], default="bB")
    common(sub.add_parser("karoubi"), module=False, n_max=4)
    sp = sub.add_parser("maps")
    common(sp)
    sp.add_argument("--map", required=True,
                    choices=["gamma", "theta", "pi", "psi", "maclane"])
    common(sub.add_parser("hp-commutative"), module=False, n_max=4)

    sp = sub.add_parser("resolution")
    sp.add_argument("--name", required=True, choices=["uqsl2", "aslq2"])
    sp.add_argument("--cap", type=positive, default=None)
    sp.add_argument("--n-max", type=positive, default=5)
    sp.add_argument("--base-change", help="LEFT,RIGHT characters, e.g. "
                                          "epsilon,delta")
    sp.add_argument("--swap-factors", action="store_true",
                    help="apply the right character to the first factor")
    sp.add_argument("--verify-homotopy", action="store_true")
    sp.add_argument("--lmax", type=positive, default=2)
    sp.add_argument("--dmax", type=positive, default=2)
    sp.add_argument("--lift", type=positive, default=None,
                    help="build the comparison map into the bar resolution")
    sp.add_argument("--printed", action="store_true",
                    help="use the formulas as printed, without errata")
    out(sp)
    return p


COMMANDS = {
    "verify-axioms": cmd_verify_axioms,
    "verify-hopf": cmd_verify_hopf,
    "hochschild": cmd_hochschild,
    "cyclic": cmd_cyclic,
    "karoubi": cmd_karoubi,
    "resolution": cmd_resolution,
    "maps": cmd_maps,
    "hp-commutative": cmd_hp_commutative,
}


def config_of(args):
    return {k: v for k, v in sorted(vars(args).items())
            if k not in ("output",)}


def run(argv=None, stdout=None):
    """Parse arguments, run one subcommand, write the report; exit code."""
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        checks, results, bounds = COMMANDS[args.command](args)
    except ConfigError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except HopfError as e:
        # the chosen structure does not meet a precondition of the request
        print("error: %s: %s" % (type(e).__name__, e), file=sys.stderr)
        return 2
    passed = all(c.passed for c in checks)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "config": config_of(args),
        "bounds": bounds,
        "passed": passed,
        "checks": [c.to_json() for c in checks],
        "results": jsonable(results),
    }
    text = json.dumps(jsonable(report), indent=2, sort_keys=True) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0 if passed else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
