"""Command line entry point.

Exit codes: 0 verified / true, 1 verified false, 2 input error, 3 undecided at
the precision cap.
"""

import argparse
import json
import re
import sys
from fractions import Fraction

from . import docformat as doc
from .cohomology import (build_obstruction_class, class_group, cohomology_group,
                         connecting_delta, extension_group, is_split, lift_to_cocycle,
                         min_splitting_index, splitting_certificate)
from .curves import RationalCurve, divide_point_global
from .dessins import Dessin, enumerate_dessins, parse_cycles, to_cycles
from .errors import BelyiToolsError, NotOnCurve, NotTransitive, SizeCapExceeded
from .localglobal import (DEFAULT_PRECISION_CAP, DEFAULT_PRIME_BOUND, DIVISIBLE, UNDECIDED,
                          divide_point_local_finite, divide_point_local_real, sha0_witness_check)

EXIT_TRUE, EXIT_FALSE, EXIT_INPUT, EXIT_UNDECIDED = 0, 1, 2, 3

# the worked example: y^2 = (x + 2795)(x - 1365)(x - 1430) and a point on it
GOLDEN_ROOTS = (-2795, 1365, 1430)
GOLDEN_POINT = (Fraction(5086347841, 1848**2), Fraction(-35496193060511, 1848**3))
GOLDEN_M = 4


def golden_curve():
    return RationalCurve.from_cubic_roots(*GOLDEN_ROOTS)


class Output:
    def __init__(self, fmt, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def report(self, data, human_lines):
        if self.fmt == "structured":
            print(doc.dump_json(data), file=self.stream)
        else:
            for line in human_lines:
                print(line, file=self.stream)

    def record(self, data, line):
        """One line per record: JSON in structured mode."""
        if self.fmt == "structured":
            print(json.dumps(doc.to_jsonable(data), sort_keys=True), file=self.stream)
        else:
            print(line, file=self.stream)


def _fmt_point(P):
    return "O" if P.is_infinity else f"({P.x}, {P.y})"


def _parse_pair(text, name):
    parts = [t.strip() for t in text.split(",")]
    if len(parts) != 2:
        raise doc.InputError(f"option '{name}': expected 'x,y'")
    return [doc.parse_rational(p, name) for p in parts]


# ---------------------------------------------------------------- curves


def cmd_verify_paper_example(args, out):
    E = golden_curve()
    x, y = GOLDEN_POINT
    if args.point:
        x, y = _parse_pair(args.point, "--point")
    m = args.m
    if not E.contains(x, y):
        out.report({"error": "point is not on the curve", "point": [str(x), str(y)]},
                   [f"FAIL: ({x}, {y}) is not on y^2 = (x + 2795)(x - 1365)(x - 1430)"])
        return EXIT_INPUT
    P = E.point(x, y)
    rep = sha0_witness_check(E, P, m, args.prime_bound, args.precision_cap, args.threads)
    data = rep.as_dict()
    data["point_on_curve"] = True
    lines = [f"curve: y^2 = (x + 2795)(x - 1365)(x - 1430)",
             f"point: {_fmt_point(P)} (on the curve: yes)",
             f"m = {m}; finite places p <= {args.prime_bound} plus the primes of m and the discriminant"]
    counts = {}
    for d in rep.decisions:
        counts[d.verdict] = counts.get(d.verdict, 0) + 1
    lines.append(f"places checked: {len(rep.decisions)} ({', '.join(f'{k}: {v}' for k, v in sorted(counts.items()))})")
    bad = [d for d in rep.decisions if d.verdict != DIVISIBLE]
    if bad:
        lines.append("first non-divisible place: " + f"{bad[0].place} ({bad[0].verdict})")
    lines.append("global solutions of [m]Q = P: " +
                 (", ".join(_fmt_point(Q) for Q in rep.global_result) or "none"))
    lines += [f"note: {n}" for n in rep.notes]
    lines.append(f"conclusion: {'locally divisible everywhere checked, not globally' if rep.conclusion else 'no witness'}")
    out.report(data, lines)
    if rep.conclusion:
        return EXIT_TRUE
    if rep.undecided_places and not rep.failing_places and not rep.global_result:
        return EXIT_UNDECIDED
    return EXIT_FALSE


def _curve_and_point(args):
    d = doc.load_document(args.input) if args.input else {}
    if args.curve:
        a, b = _parse_pair(args.curve, "--curve")
        E = RationalCurve.short(a, b)
    elif "curve" in d:
        E = doc.parse_curve(d["curve"])
    else:
        E = golden_curve()
    if args.point:
        x, y = _parse_pair(args.point, "--point")
        try:
            P = E.point(x, y)
        except NotOnCurve:
            raise doc.InputError(f"option '--point': ({x}, {y}) is not on the curve") from None
    elif "point" in d:
        P = doc.parse_point(E, d["point"])
    elif args.origin:
        P = E.infinity()
    else:
        P = E.point(*GOLDEN_POINT)
    m = args.m if args.m is not None else doc.parse_int(d.get("m", GOLDEN_M), "m", 1)
    if m < 1:
        raise doc.InputError("field 'm': must be positive")
    return E, P, m


def cmd_divide(args, out):
    E, P, m = _curve_and_point(args)
    if args.glob:
        sols = divide_point_global(E, P, m)
        data = {"mode": "global", "m": m, "point": _fmt_point(P),
                "witnesses": [_fmt_point(Q) for Q in sols], "divisible": bool(sols)}
        out.report(data, [f"global {m}-division of {_fmt_point(P)}: " +
                          (", ".join(_fmt_point(Q) for Q in sols) or "none")])
        return EXIT_TRUE if sols else EXIT_FALSE
    if args.real:
        dec = divide_point_local_real(E, P, m)
    else:
        dec = divide_point_local_finite(E, P, m, args.local, args.precision_cap)
    data = dec.as_dict()
    data["mode"] = "real" if args.real else "local"
    data["m"] = m
    lines = [f"place {dec.place}: {dec.verdict} (precision {dec.precision_used})"]
    if dec.witness:
        lines.append(f"witness: {doc.to_jsonable(dec.witness)}")
    out.report(data, lines)
    if dec.verdict == DIVISIBLE:
        return EXIT_TRUE
    return EXIT_UNDECIDED if dec.verdict == UNDECIDED else EXIT_FALSE


def cmd_isogeny_check(args, out):
    from math import lcm
    from .curves import point_order, rational_torsion
    from .isogeny import (KernelSubgroup, check_homomorphism_mod_p, check_mult_by_m_factorization,
                          fp_points_with_x_roots, good_sampling_primes, kernel_count_mod_p,
                          velu_quotient)
    d = doc.load_document(args.input) if args.input else {}
    E = doc.parse_curve(d["curve"]) if "curve" in d else golden_curve()
    if "kernel" in d:
        gens = [doc.parse_point(E, p, "kernel") for p in d["kernel"]]
        pts = rational_torsion_closure(E, gens)
    else:
        pts = rational_torsion(E, 2).points
    C = KernelSubgroup.from_points(E, pts)
    exponent = lcm(*(point_order(P) for P in pts))
    m = doc.parse_int(d.get("m", exponent), "m", 1)
    E0, phi = velu_quotient(E, C)
    primes = good_sampling_primes([phi], 3)
    homs = {p: check_homomorphism_mod_p(phi, p) for p in primes}
    kernels = {p: (kernel_count_mod_p(phi, p), fp_points_with_x_roots(phi, p)) for p in primes}
    rep = check_mult_by_m_factorization(E, m, phi, samples=args.samples, seed=args.seed)
    ok = all(homs.values()) and all(a == b for a, b in kernels.values()) and rep.all_passed
    data = {"codomain": [str(a) for a in E0.ainvs], "degree": phi.degree,
            "homomorphism": {str(p): v for p, v in homs.items()},
            "kernel_counts": {str(p): list(v) for p, v in kernels.items()},
            "factorization": rep.as_dict(), "passed": ok}
    out.report(data, [f"codomain a-invariants: {[str(a) for a in E0.ainvs]}",
                      f"degree {phi.degree}; homomorphism over F_p: {homs}",
                      f"kernel counts (evaluated, from x-roots): {kernels}",
                      f"[m] = psi o phi on {rep.samples_per_prime} samples at {rep.primes}, "
                      f"seed {rep.seed}: {'pass' if rep.all_passed else 'fail'}"])
    return EXIT_TRUE if ok else EXIT_FALSE


def rational_torsion_closure(E, gens):
    pts = {E.infinity()}
    frontier = list(pts)
    while frontier:
        new = []
        for P in frontier:
            for g in gens:
                Q = P + g
                if Q not in pts:
                    pts.add(Q)
                    new.append(Q)
                    if len(pts) > 1000:
                        raise doc.InputError("field 'kernel': points do not generate a finite subgroup")
        frontier = new
    return sorted(pts, key=lambda P: (P.is_infinity, str(P.x), str(P.y)))


# ---------------------------------------------------------------- cohomology


def _group_module(args, d):
    if "group" in d:
        G = doc.parse_group(d["group"])
    elif args.group:
        G = doc.parse_group(args.group, "--group")
    else:
        raise doc.InputError("missing field 'group'")
    if "module" in d:
        A = doc.parse_module(G, d["module"])
    elif args.factors:
        A = doc.parse_module(G, {"factors": [int(x) for x in args.factors.split(",")]}, "--factors")
    else:
        raise doc.InputError("missing field 'module'")
    return G, A


def _class_lines(H):
    lines = [repr(H)]
    for i, b in enumerate(H.basis):
        nz = {t: v for t, v in b.values.items() if any(v)}
        lines.append(f"  generator {i} (order {H.invariants[i]}): {nz}")
    return lines


def cmd_cohomology(args, out):
    d = doc.load_document(args.input) if args.input else {}
    G, A = _group_module(args, d)
    n = args.degree if args.degree is not None else doc.parse_int(d.get("degree", 2), "degree", 0)
    if n not in (0, 1, 2):
        raise doc.InputError("field 'degree': must be 0, 1 or 2")
    H = cohomology_group(G, A, n)
    data = {"group": G.name, "group_order": G.order, "module": list(A.factors), "degree": n,
            "invariant_factors": H.invariants, "order": H.order,
            "basis": [b.as_dict() for b in H.basis]}
    out.report(data, _class_lines(H))
    return EXIT_TRUE


def cmd_min_split_index(args, out):
    d = doc.load_document(args.input)
    G, A = _group_module(args, d)
    cls = doc.parse_cochain(G, A, doc.field(d, "class"), degree=2)
    if not cls.is_cocycle():
        raise doc.InputError("field 'class': not a 2-cocycle")
    idx = min_splitting_index(cls)
    cert = splitting_certificate(cls)
    data = {"min_splitting_index": idx, "certificate": cert}
    lines = [f"minimal splitting index: {idx}"]
    lines += [f"  subgroup {r['subgroup']} index {r['index']}: restriction {r['restriction']}"
              f"{' (zero)' if r['vanishes'] else ''}" for r in cert]
    out.report(data, lines)
    return EXIT_TRUE


def cmd_prop9(args, out):
    res = build_obstruction_class(args.m)
    data = res.as_dict()
    lines = [f"class (carry, 0) in H^2(C_{args.m}, Z/{args.m} x Z/{args.m})",
             f"minimal splitting index: {res.min_index}"]
    lines += [f"  subgroup {r['subgroup']} of index {r['index']}: restriction {r['restriction']} != 0"
              for r in res.certificate]
    out.report(data, lines)
    return EXIT_TRUE if res.min_index == args.m else EXIT_FALSE


def cmd_delta(args, out):
    d = doc.load_document(args.input)
    if "group" in d:
        G = doc.parse_group(d["group"])
    elif args.group:
        G = doc.parse_group(args.group, "--group")
    else:
        raise doc.InputError("missing field 'group'")
    ses = doc.parse_ses(G, doc.field(d, "ses"))
    tau0 = doc.parse_cochain(G, ses.C, doc.field(d, "tau0"), "tau0", degree=1)
    if not tau0.is_cocycle():
        raise doc.InputError("field 'tau0': not a 1-cocycle")
    delta = connecting_delta(ses, tau0, seed=args.seed)
    H2 = class_group(delta)
    coords = H2.coordinates(delta)
    lift = lift_to_cocycle(ses, tau0)
    consistent = (not any(coords)) == (lift is not None)
    data = {"delta": delta.as_dict(), "coordinates": list(coords), "H2_invariants": H2.invariants,
            "delta_is_zero": not any(coords), "lift": lift.as_dict() if lift else None,
            "consistent": consistent, "seed": args.seed}
    out.report(data, [f"delta(tau0) has coordinates {list(coords)} in {H2!r}",
                      f"delta is {'zero' if not any(coords) else 'nonzero'}; "
                      f"tau0 {'lifts' if lift else 'does not lift'} to a 1-cocycle in B",
                      f"consistent: {consistent}"])
    return EXIT_TRUE if consistent else EXIT_FALSE


def cmd_split(args, out):
    d = doc.load_document(args.input)
    G, A = _group_module(args, d)
    cls = doc.parse_cochain(G, A, doc.field(d, "class"), degree=2)
    if not cls.is_cocycle():
        raise doc.InputError("field 'class': not a 2-cocycle")
    ext = extension_group(G, A, cls)
    split, sec = is_split(ext)
    zero = class_group(cls).is_zero(cls)
    section = [list(ext.pair(x)[0]) + [ext.pair(x)[1]] for x in sec] if split else None
    data = {"extension_order": ext.group.order, "split": split, "class_is_zero": zero,
            "section": section}
    lines = [f"extension of order {ext.group.order}: {'split' if split else 'not split'}"]
    if split:
        lines.append("section g -> (a, g): " + ", ".join(
            f"{g} -> ({list(ext.pair(x)[0])}, {ext.pair(x)[1]})" for g, x in enumerate(sec)))
    lines.append(f"class is {'zero' if zero else 'nonzero'}")
    out.report(data, lines)
    return EXIT_TRUE if split else EXIT_FALSE


# ---------------------------------------------------------------- dessins


def cmd_dessin(args, out):
    if args.action == "analyze":
        if args.input:
            d = doc.load_document(args.input)
            s0, s1 = str(doc.field(d, "sigma0")), str(doc.field(d, "sigma1"))
            n = d.get("degree")
        else:
            if args.sigma0 is None or args.sigma1 is None:
                raise doc.InputError("analyze needs --sigma0 and --sigma1 (or --input)")
            s0, s1, n = args.sigma0, args.sigma1, args.n
        if n is None:
            # the largest label mentioned fixes the degree
            n = max(_max_label(s0), _max_label(s1), 1)
        D = Dessin(parse_cycles(s0, n), parse_cycles(s1, n))
        info = D.summary()
        info["riemann_hurwitz"] = D.riemann_hurwitz_check().as_dict()
        red, _ = D.reduced_part()
        info["reduced_sigma0"] = [list(c) for c in _cyc(red.sigma0)]
        info["reduced_sigma1"] = [list(c) for c in _cyc(red.sigma1)]
        out.report(info, [f"degree {D.n}, genus {info['genus']}, |Aut| = {info['aut_order']}, "
                          f"regular: {info['regular']}",
                          f"reduced part: degree {red.n}, genus {red.genus}",
                          f"automorphisms act freely: {info['acts_freely']}",
                          f"classification: {info['classification']}"])
        return EXIT_TRUE
    if args.n is None or not 1 <= args.n <= 8:
        raise doc.InputError("enumerate needs --n between 1 and 8")
    count = 0
    for n in range(1, args.n + 1):
        for D in enumerate_dessins(n, genus=args.genus, free_aut=True if args.free_aut else None,
                                   unique=True):
            count += 1
            s = D.summary()
            out.record(s, f"{D!r} genus={s['genus']} |Aut|={s['aut_order']} {s['classification']}")
    if out.fmt != "structured":
        print(f"{count} dessins", file=out.stream)
    return EXIT_TRUE if count else EXIT_FALSE


def _max_label(text):
    nums = [int(t) for t in re.findall(r"\d+", text)]
    return max(nums, default=1)


def _cyc(s):
    return to_cycles(s)


# ---------------------------------------------------------------- parser


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime-bound", type=int, default=DEFAULT_PRIME_BOUND)
    common.add_argument("--precision-cap", type=int, default=DEFAULT_PRECISION_CAP)
    common.add_argument("--format", choices=["human", "structured"], default="human")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)

    parser = argparse.ArgumentParser(prog="belyitools",
                                     description="Descent obstructions, local-global divisibility "
                                                 "and dessins at desk scale.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-paper-example", parents=[common],
                       help="check the worked example of a point divisible by 4 everywhere locally")
    p.add_argument("--m", type=int, default=GOLDEN_M)
    p.add_argument("--point", help="override the point as 'x,y'")
    p.set_defaults(func=cmd_verify_paper_example)

    p = sub.add_parser("divide", parents=[common], help="local or global divisibility of a point")
    p.add_argument("--input")
    p.add_argument("--curve", help="short Weierstrass coefficients 'a,b'")
    p.add_argument("--point", help="'x,y'")
    p.add_argument("--origin", action="store_true", help="use the point at infinity")
    p.add_argument("--m", type=int)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--local", type=int, metavar="P")
    mode.add_argument("--real", action="store_true")
    mode.add_argument("--global", dest="glob", action="store_true")
    p.set_defaults(func=cmd_divide)

    p = sub.add_parser("isogeny-check", parents=[common],
                       help="Velu quotient with finite-field checks of [m] = psi o phi")
    p.add_argument("--input")
    p.add_argument("--samples", type=int, default=100)
    p.set_defaults(func=cmd_isogeny_check)

    for name, func, help_ in [("cohomology", cmd_cohomology, "H^n(G, A)"),
                              ("min-split-index", cmd_min_split_index,
                               "smallest index of a subgroup killing a 2-class"),
                              ("split-test", cmd_split, "does the extension defined by a class split")]:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--input", required=name != "cohomology")
        p.add_argument("--group", help="C4, C2xC2, D4, Q8, S3, ...")
        p.add_argument("--factors", help="invariant factors, e.g. 2,2 (trivial action)")
        if name == "cohomology":
            p.add_argument("--degree", type=int)
        p.set_defaults(func=func)

    p = sub.add_parser("prop9-class", parents=[common],
                       help="class in H^2(C_m, Z/m x Z/m) with minimal splitting index m")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_prop9)

    p = sub.add_parser("delta", parents=[common], help="connecting map of a short exact sequence")
    p.add_argument("--input", required=True)
    p.add_argument("--group")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("dessin", parents=[common], help="analyze or enumerate dessins")
    p.add_argument("action", choices=["analyze", "enumerate"])
    p.add_argument("--sigma0")
    p.add_argument("--sigma1")
    p.add_argument("--n", type=int)
    p.add_argument("--input")
    p.add_argument("--genus", type=int)
    p.add_argument("--free-aut", action="store_true")
    p.set_defaults(func=cmd_dessin)
    return parser


def main(argv=None, stream=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_TRUE
    out = Output(args.format, stream)
    for name in ("prime_bound", "precision_cap", "threads"):
        if getattr(args, name) < 1:
            print(f"error: --{name.replace('_', '-')} must be positive", file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.func(args, out)
    except (doc.InputError, NotTransitive, SizeCapExceeded) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BelyiToolsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
