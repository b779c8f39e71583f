"""Command line front end.

Each subcommand prints one JSON document on stdout with the fixed envelope
{"command", "config", "results", "warnings", "paper_anchor"}; stderr carries
logs.  Integers outside the 53-bit range are emitted as decimal strings,
rationals as "n/d" strings, cyclotomic numbers as a modulus plus a dense
reduced coefficient vector.  For a fixed configuration and seed the output
is byte identical across runs.

Exit codes: 0 success, 2 invalid input, 3 a pinned arithmetic identity
failed (must never happen), 4 a search or size bound was exhausted.
"""

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from .characters import MultiplicativeCharacter, gauss_sum
from .errors import (IdentityViolationError, NumericInstabilityError,
                     ResourceLimitError, RetryExhaustedError)
from .fields import is_prime, legendre_symbol
from .orbits import (DEFAULT_ORBIT_BOUND, diamond_orbit_decomposition,
                     field_of_definition_report, gks_vanishing_check,
                     sl2_orbit_table)
from .pairing import o_det_bridge_check, pairing_setup
from .tripleproduct import (TripleProductSpec, functional_equation_data,
                            global_root_number, single_form_root_numbers)

_BIG = 1 << 53


def _jint(n):
    n = int(n)
    return n if -_BIG < n < _BIG else str(n)


def _jrat(x):
    x = Fraction(x)
    if x.denominator == 1:
        return _jint(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _jcyclo(z):
    return {
        "modulus": z.modulus,
        "coeffs": [str(c) for c in z.dense_reduced_coeffs()],
    }


def _parse_signs(text):
    table = {"+": 1, "-": -1, "+1": 1, "-1": -1, "1": 1}
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 3 or any(s not in table for s in parts):
        raise ValueError(f"sign pattern must be three of +/- separated by commas, got {text!r}")
    return tuple(table[s] for s in parts)


def _parse_coeffs(text):
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise ValueError(f"coefficient pair must look like (a,b), got {chunk!r}")
        bits = chunk[1:-1].split(",")
        if len(bits) != 2:
            raise ValueError(f"coefficient pair must have two entries, got {chunk!r}")
        pairs.append((int(bits[0]), int(bits[1])))
    if len(pairs) != 3:
        raise ValueError("need exactly three coefficient pairs separated by ';'")
    return tuple(pairs)


def _envelope(command, config, results, warnings, anchors):
    return {
        "command": command,
        "config": config,
        "results": results,
        "warnings": list(warnings),
        "paper_anchor": anchors,
    }


def _flatten(prefix, val, lines):
    if isinstance(val, dict):
        for k in sorted(val):
            _flatten(f"{prefix}.{k}" if prefix else str(k), val[k], lines)
    elif isinstance(val, list):
        lines.append(f"{prefix} = {json.dumps(val, sort_keys=True)}")
    else:
        lines.append(f"{prefix} = {val}")


def _emit(payload, fmt, out):
    if fmt == "text":
        lines = []
        _flatten("", payload, lines)
        out.write("\n".join(lines) + "\n")
    else:
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


# ---------------------------------------------------------------------------
# subcommands


def cmd_root_number(args):
    signs = _parse_signs(args.signs)
    spec = TripleProductSpec(p=args.p, signs=signs, twisted=args.twisted)
    report = global_root_number(spec)
    feq = functional_equation_data(spec)
    results = {
        "W_global": report.w_global,
        "W_infinity": report.w_infinity,
        "local_W": {str(q): w for q, w in sorted(report.local_w.items())},
        "epsilon_p": _jrat(report.epsilon_p),
        "delta_p": _jrat(report.delta_p),
        "conductor": f"{args.p}^{report.conductor_exponent}",
        "conductor_value": _jint(args.p ** report.conductor_exponent),
        "functional_equation": {
            "center": feq.center,
            "reflection": feq.reflection,
            "sign": feq.sign,
            "gamma_factor": feq.gamma_factor,
            "completed_form": feq.completed_form,
        },
    }
    anchors = {
        "W_global": ("twisted triple products of prime level have sign -1 for every "
                     "eigenvalue pattern" if args.twisted else
                     "the untwisted sign equals the product of the three eigenvalues at p"),
        "epsilon_p": "the epsilon factor at p of the twisted triple is p^16"
                     if args.twisted else "the epsilon factor at p of the untwisted triple is 1",
        "conductor": "conductor exponent = sum of twist conductors (8 per dimension when "
                     "twisted) + monodromy correction",
    }
    config = {
        "p": args.p,
        "signs": list(signs),
        "twisted": args.twisted,
        "seed": args.seed,
    }
    return _envelope("root-number", config, results, spec.warnings(), anchors)


def cmd_orbits(args):
    table = sl2_orbit_table(args.p, bound=args.bound)
    diamond = diamond_orbit_decomposition(args.p)
    fod = field_of_definition_report(args.p)
    gks = gks_vanishing_check(args.p)
    hist = {}
    for size, deg in zip(table.sizes, table.degenerate):
        key = f"{size}{':deg' if deg else ''}"
        hist[key] = hist.get(key, 0) + 1
    results = {
        "p": args.p,
        "states": _jint(table.n_states),
        "n_orbits": table.n_orbits(),
        "nondegenerate_orbits": table.nondegenerate_orbits(),
        "orbit_size_histogram": hist,
        "det_constant_on_orbits": table.det_constant,
        "det_bijective_on_nondegenerate": table.det_bijective,
        "diamond_orbits": len(diamond.orbit_sizes),
        "diamond_orbit_sizes": [_jint(s) for s in diamond.orbit_sizes],
        "stabilizer": len(diamond.stabilizer),
        "plus_orbit_is_squares": diamond.plus_orbit_is_squares,
        "s3": diamond.s3_behavior,
        "field_of_definition": {
            "radicand": fod.radicand,
            "label": fod.field_label,
            "tau_swaps_classes": fod.tau_swaps_classes,
        },
        "projector_checks_ok": gks.all_ok,
    }
    anchors = {
        "diamond_orbits": "the unit cube acts on determinant triples with two orbits "
                          "split by the quadratic class of the product",
        "stabilizer": "the stabilizer of (1,1,1) is {+-(1,1,1)}, order 2",
        "s3": "permutations scale the determinant product by the sign character, "
              "so they fix the classes exactly when -1 is a square",
        "field_of_definition": "the two classes are defined over Q(sqrt(chi(-1) p)) "
                               "and conjugate under its Galois involution",
    }
    config = {"p": args.p, "bound": args.bound, "seed": args.seed}
    return _envelope("orbits", config, results, [], anchors)


def cmd_o_invariant(args):
    coeffs = _parse_coeffs(args.coeffs)
    setup = pairing_setup(args.p, l_max=args.l_max, k_max=args.k_max, seed=args.seed)
    bridge = o_det_bridge_check(setup.basis, coeffs, seed=args.seed)
    res = bridge.o_result
    results = {
        "curve": setup.manifest(),
        "coeffs": [list(c) for c in bridge.coeffs],
        "exponents": list(res.exponents) if res.exponents is not None else None,
        "class": res.cls,
        "dets": [_jint(d) for d in bridge.dets],
        "det_class": bridge.det_class,
        "bridge": bridge.ok,
    }
    if not bridge.ok:
        raise IdentityViolationError(
            "pairing exponents disagree with coefficient determinants")
    anchors = {
        "class": "the quadratic class of the product of pairing exponents is "
                 "independent of the generators chosen",
        "bridge": "e(a_i P + b_i Q, a_j P + b_j Q) = zeta^(a_i b_j - a_j b_i), so the "
                  "invariant matches the determinant classification",
    }
    config = {
        "p": args.p,
        "coeffs": args.coeffs,
        "l_max": args.l_max,
        "k_max": args.k_max,
        "seed": args.seed,
    }
    return _envelope("o-invariant", config, results, [], anchors)


def cmd_gauss(args):
    if (args.p is None) == (args.q is None):
        raise ValueError("give exactly one of --p (quadratic character) or --q")
    if args.p is not None:
        q = args.p
        if q == 2 or not is_prime(q):
            raise ValueError(f"--p must be an odd prime, got {q}")
        chi = MultiplicativeCharacter.legendre(q)
    else:
        q = args.q
        if not is_prime(q):
            raise ValueError(f"--q must be prime, got {q}")
        chi = MultiplicativeCharacter(q, args.char_exponent)
    g = gauss_sum(chi)
    g2 = g * g
    conj = g.conjugate()
    abs2 = (g * conj).rational_value()
    emb = g.embed()
    g_rat = g.rational_value()
    results = {
        "q": q,
        "character_exponent": chi.exponent,
        "character_order": chi.order,
        "G": _jcyclo(g),
        "G_rational": _jrat(g_rat) if g_rat is not None else None,
        "abs_G_squared": _jrat(abs2) if abs2 is not None else None,
        "complex_embedding": {"re": emb.real, "im": emb.imag},
    }
    g2_rat = g2.rational_value()
    results["G_squared"] = _jrat(g2_rat) if g2_rat is not None else _jcyclo(g2)
    warnings = []
    anchors = {
        "abs_G_squared": "|G(chi)|^2 = q for nontrivial chi",
    }
    if chi.order == 2:
        expected = legendre_symbol(-1, q) * q
        anchors["G_squared"] = "G(chi)^2 = chi(-1) q for the quadratic character"
        if g2_rat != expected:
            raise IdentityViolationError(
                f"quadratic Gauss sum squared to {g2_rat}, expected {expected}")
    if chi.order == 1:
        anchors["G_squared"] = "the trivial character sums the nontrivial q-th roots of unity to -1"
    config = {"p": args.p, "q": args.q, "char_exponent": args.char_exponent, "seed": args.seed}
    return _envelope("gauss", config, results, warnings, anchors)


def cmd_report(args):
    # figures import matplotlib, so keep it off the fast paths
    from .plots import save_all

    os.makedirs(args.out, exist_ok=True)
    primes = tuple(int(p) for p in args.primes.split(","))
    triple_csv = os.path.join(args.out, "triple_root_numbers.csv")
    rows = 0
    with open(triple_csv, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["p", "s1", "s2", "s3", "twisted", "W_global",
                         "conductor_exponent", "epsilon_p", "delta_p"])
        for p in primes:
            for twisted in (False, True):
                for s1 in (1, -1):
                    for s2 in (1, -1):
                        for s3 in (1, -1):
                            spec = TripleProductSpec(p=p, signs=(s1, s2, s3), twisted=twisted)
                            rep = global_root_number(spec)
                            writer.writerow([p, s1, s2, s3, int(twisted), rep.w_global,
                                             rep.conductor_exponent, rep.epsilon_p,
                                             rep.delta_p])
                            rows += 1
    form_csv = os.path.join(args.out, "single_form_root_numbers.csv")
    with open(form_csv, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["p", "a_p", "W_plain", "W_twisted",
                         "conductor_exponent_plain", "conductor_exponent_twisted"])
        for p in primes:
            for a_p in (1, -1):
                rep = single_form_root_numbers(p, a_p)
                writer.writerow([p, a_p, rep.w_plain, rep.w_twisted,
                                 rep.conductor_exponent_plain,
                                 rep.conductor_exponent_twisted])
    figures = save_all(args.out, primes=primes, gauss_q=args.gauss_q, orbit_p=args.orbit_p)
    results = {
        "out_dir": args.out,
        "csv_files": [triple_csv, form_csv],
        "figures": figures,
        "triple_rows": rows,
    }
    anchors = {
        "figures": "the twisted panel is constant -1; the untwisted panel follows "
                   "the product of eigenvalue signs",
    }
    config = {
        "out": args.out,
        "primes": list(primes),
        "gauss_q": args.gauss_q,
        "orbit_p": args.orbit_p,
        "seed": args.seed,
    }
    return _envelope("report", config, results, [], anchors)


# ---------------------------------------------------------------------------
# wiring


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="rootnumbers",
        description="Exact root numbers, orbit combinatorics, and Weil pairings "
                    "for prime-level triple products.",
    )
    parser.add_argument("--format", choices=("json", "text"), default="json",
                        help="output format (default json)")
    sub = parser.add_subparsers(dest="command", required=True)

    def allow_format(sp):
        # also accepted after the subcommand; SUPPRESS keeps the top-level
        # value when the flag is absent here
        sp.add_argument("--format", choices=("json", "text"),
                        default=argparse.SUPPRESS, help=argparse.SUPPRESS)

    rn = sub.add_parser("root-number", help="global root number of a triple product")
    rn.add_argument("--p", type=int, required=True, help="odd prime level")
    rn.add_argument("--signs", default="+,+,+",
                    help="eigenvalue signs at p, e.g. '+,-,+' (default '+,+,+')")
    rn.add_argument("--twisted", action="store_true",
                    help="tensor with the quadratic character of conductor p")
    rn.add_argument("--seed", type=int, default=0)
    allow_format(rn)
    rn.set_defaults(func=cmd_root_number)

    orb = sub.add_parser("orbits", help="orbit tables for marking triples")
    orb.add_argument("--p", type=int, required=True, help="odd prime")
    orb.add_argument("--bound", type=int, default=DEFAULT_ORBIT_BOUND,
                     help=f"largest p the sweep accepts (default {DEFAULT_ORBIT_BOUND})")
    orb.add_argument("--seed", type=int, default=0)
    allow_format(orb)
    orb.set_defaults(func=cmd_orbits)

    oi = sub.add_parser("o-invariant", help="pairing invariant of three subgroups")
    oi.add_argument("--p", type=int, required=True, help="odd prime torsion level")
    oi.add_argument("--coeffs", required=True,
                    help="three pairs '(a1,b1);(a2,b2);(a3,b3)' in terms of the basis")
    oi.add_argument("--l-max", type=int, default=5000, help="curve prime bound")
    oi.add_argument("--k-max", type=int, default=24, help="extension degree bound")
    oi.add_argument("--seed", type=int, default=0, help="shift-point sequence seed")
    allow_format(oi)
    oi.set_defaults(func=cmd_o_invariant)

    ga = sub.add_parser("gauss", help="exact Gauss sums and their identities")
    ga.add_argument("--p", type=int, help="odd prime: use the quadratic character mod p")
    ga.add_argument("--q", type=int, help="prime modulus for a general character")
    ga.add_argument("--char-exponent", type=int, default=1,
                    help="exponent on the smallest primitive root (default 1)")
    ga.add_argument("--seed", type=int, default=0)
    allow_format(ga)
    ga.set_defaults(func=cmd_gauss)

    rep = sub.add_parser("report", help="write CSV tables and figures to a directory")
    rep.add_argument("--out", required=True, help="output directory")
    rep.add_argument("--primes", default="11,17,19,23",
                     help="comma-separated levels (default 11,17,19,23)")
    rep.add_argument("--gauss-q", type=int, default=23, help="modulus for the walk figure")
    rep.add_argument("--orbit-p", type=int, default=7, help="prime for the orbit figure")
    rep.add_argument("--seed", type=int, default=0)
    allow_format(rep)
    rep.set_defaults(func=cmd_report)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (IdentityViolationError, NumericInstabilityError) as exc:
        print(f"identity violation: {exc}", file=sys.stderr)
        return 3
    except (ResourceLimitError, RetryExhaustedError) as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 4
    _emit(payload, args.format, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
