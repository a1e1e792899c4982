"""Command-line front end.

Exit codes: 0 success, 1 failed verification assertions, 2 usage or
validation errors, 3 infeasible caps.  All numeric JSON output is exact:
counts as decimal strings, rationals as numerator/denominator strings with a
decimal rendering, intervals as exact endpoints.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import verify as verify_mod
from .canonical import build_frankl, build_full_star, build_hmf
from .exactmath import RealInterval, fraction_to_decimal, parse_fraction
from .families import (
    Family,
    common_intersection,
    elements_of,
    is_rwise_t_intersecting,
    is_t_star,
    load_family,
    save_family,
    to_text,
)
from .lattice import count_hitting_paths, first_hit_counts, g_uniform
from .search import (
    DEFAULT_CAP,
    FeasibilityError,
    max_nonuniform,
    max_uniform,
)
from .shadows import f91_bound, lower_shadow
from .shifting import saturate, shift_step, shift_to_fixpoint
from .thresholds import conjecture_scan, n0_upper_bound, star_vs_a1_scan
from .walks import alpha, f_finite, gamma_root

EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3


def _frac_json(x: Fraction, digits: int = 12) -> dict:
    x = Fraction(x)
    return {
        "num": str(x.numerator),
        "den": str(x.denominator),
        "decimal": fraction_to_decimal(x, digits),
    }


def _interval_json(iv: RealInterval, digits: int = 15) -> dict:
    return {
        "lo": _frac_json(iv.lo, digits),
        "hi": _frac_json(iv.hi, digits),
        "decimal": iv.decimal(digits),
    }


def _family_json(fam: Family) -> dict:
    return {
        "n": fam.ground_n,
        "k": fam.uniform_k,
        "size": str(len(fam)),
        "members": [list(elements_of(m)) for m in fam.members],
    }


def _emit(payload) -> None:
    print(json.dumps(payload, indent=2))


def _write_family(fam: Family, out: str | None) -> None:
    if out:
        save_family(fam, out)
    else:
        sys.stdout.write(to_text(fam))


def _cmd_family(args) -> int:
    if args.family_cmd == "build":
        if args.type == "star":
            fam = build_full_star(args.n, args.k, args.t)
        elif args.type == "frankl":
            fam = build_frankl(args.n, args.k, args.r, args.t, args.i)
        else:
            fam = build_hmf(args.n, args.k, args.r, args.t)
        _write_family(fam, args.out)
        return 0
    fam = load_family(args.family_file)
    report = {
        "n": fam.ground_n,
        "k": fam.uniform_k,
        "size": str(len(fam)),
        "rwise_t_intersecting": is_rwise_t_intersecting(fam, args.r, args.t),
        "t_star": is_t_star(fam, args.t),
        "empty": len(fam) == 0,
        "common_intersection": list(elements_of(common_intersection(fam)))
        if len(fam)
        else None,
    }
    if args.json:
        _emit(report)
    else:
        for key, val in report.items():
            print(f"{key}: {val}")
    return 0


def _cmd_shift(args) -> int:
    fam = load_family(args.family_file)
    if args.fixpoint:
        fam = shift_to_fixpoint(fam)
    else:
        if args.i is None or args.j is None:
            raise ValueError("shift needs --fixpoint or both --i and --j")
        fam = shift_step(fam, args.i, args.j)
    _write_family(fam, args.out)
    return 0


def _cmd_saturate(args) -> int:
    fam = load_family(args.family_file)
    _write_family(saturate(fam, args.r, args.t, k=args.k), args.out)
    return 0


def _cmd_paths(args) -> int:
    if args.paths_cmd == "count":
        val = count_hitting_paths(args.n, args.k, args.r, args.t)
        _emit({"count": str(val)}) if args.json else print(val)
        return 0
    if args.paths_cmd == "g":
        if args.emit_plot:
            lo = args.n_from if args.n_from is not None else args.k
            hi = args.n_to if args.n_to is not None else args.n
            if hi is None:
                raise ValueError("--emit-plot needs --n-to (or --n)")
            with open(args.emit_plot, "w") as fh:
                fh.write("n,g\n")
                for n in range(max(lo, args.k), hi + 1):
                    g = g_uniform(n, args.k, args.r, args.t)
                    fh.write(f"{n},{fraction_to_decimal(g, 12)}\n")
            return 0
        g = g_uniform(args.n, args.k, args.r, args.t)
        _emit({"g": _frac_json(g)}) if args.json else print(
            f"{g} = {fraction_to_decimal(g, 12)}"
        )
        return 0
    ell = first_hit_counts(args.r, args.t, args.i_max)
    if args.json:
        _emit({"ell": [str(x) for x in ell]})
    else:
        for i, x in enumerate(ell):
            print(f"{i}: {x}")
    return 0


def _cmd_walk(args) -> int:
    if args.walk_cmd == "f":
        val = f_finite(args.n, args.r, args.t, parse_fraction(args.p))
        _emit({"f": _frac_json(val)}) if args.json else print(
            f"{val} = {fraction_to_decimal(val, 12)}"
        )
        return 0
    tol = parse_fraction(args.tol)
    if args.walk_cmd == "gamma":
        iv = gamma_root(args.r, parse_fraction(args.p), tol)
    else:
        iv = alpha(args.r, tol)
    _emit(_interval_json(iv)) if args.json else print(iv.decimal(15))
    return 0


def _cmd_shadow(args) -> int:
    fam = load_family(args.family_file)
    sh = lower_shadow(fam, args.b)
    if args.report:
        if args.r is None or args.t is None:
            raise ValueError("--report needs --r and --t")
        bound = f91_bound(len(fam), fam.uniform_k, args.r, args.t, args.b)
        _emit(
            {
                "input_size": str(len(fam)),
                "output_size": str(len(sh)),
                "bound": _frac_json(bound),
                "bound_satisfied": len(sh) >= bound,
            }
        )
        return 0
    _write_family(sh, args.out)
    return 0


def _search_report_json(rep, timing: bool) -> dict:
    payload = {
        "optimum": str(rep.optimum),
        "witness": _family_json(rep.witness),
        "all_optima_are_t_stars": rep.all_optima_are_t_stars,
        "optima_count": rep.optima_count,
        "nodes_explored": rep.nodes_explored,
        "empty": rep.empty,
        "note": rep.note,
        "params": rep.params,
    }
    if timing:
        payload["wall_time"] = rep.wall_time
    return payload


def _cmd_search(args) -> int:
    if args.search_cmd == "max":
        cap = args.cap
        if cap is None:
            cap = int(os.environ.get("INTERSECTLAB_CAP", DEFAULT_CAP))
        rep = max_uniform(
            args.n,
            args.k,
            args.r,
            args.t,
            nontrivial=args.nontrivial,
            shift_reduction=not args.no_shift_reduction,
            cap=cap,
            backend=args.backend,
        )
    else:
        rep = max_nonuniform(args.n, args.r, args.t, nontrivial=args.nontrivial)
    if args.json:
        _emit(_search_report_json(rep, args.timing))
    else:
        print(f"optimum: {rep.optimum}")
        print(f"nodes: {rep.nodes_explored}")
        if rep.all_optima_are_t_stars is not None:
            print(f"all optima are t-stars: {rep.all_optima_are_t_stars}")
        sys.stdout.write(to_text(rep.witness))
    return 0


def _cmd_threshold(args) -> int:
    if args.threshold_cmd == "n0":
        iv = n0_upper_bound(args.k, args.r, args.t, parse_fraction(args.tol))
        _emit(_interval_json(iv)) if args.json else print(iv.decimal(12))
        return 0
    if args.threshold_cmd == "scan-a1":
        scan = star_vs_a1_scan(args.k, args.r, args.t, range(args.n_from, args.n_to + 1))
        rows = scan.rows
        verdicts = None
    else:
        scan, verdicts = conjecture_scan(args.k, args.t, window=args.window)
        rows = scan.rows
    lines = ["n,a1,star,sign"]
    for row in rows:
        lines.append(f"{row.n},{row.a1},{row.star},{row.sign_a1}")
    text = "\n".join(lines) + "\n"
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(text)
    elif args.json:
        payload = {
            "k": scan.k,
            "r": scan.r,
            "t": scan.t,
            "rows": [
                {
                    "n": row.n,
                    "a1": str(row.a1),
                    "star": str(row.star),
                    "sign_a1": row.sign_a1,
                    "max_i_size": str(row.max_i_size),
                    "sign_max": row.sign_max,
                }
                for row in rows
            ],
        }
        if verdicts is not None:
            payload["search"] = [
                None
                if v is None
                else {
                    "max_frankl": str(v.max_size),
                    "optimum": str(v.search_optimum),
                    "conjecture_holds": v.conjecture_holds,
                }
                for v in verdicts
            ]
        _emit(payload)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    if args.list:
        for name in verify_mod.SUITES:
            print(name)
        return 0
    failures, results = verify_mod.run_suite(
        args.suite, emit=(lambda s: None) if args.json else print
    )
    if args.json:
        _emit({"suite": args.suite, "failures": failures, "results": results})
    return EXIT_VERIFY_FAIL if failures else 0


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="intersectlab",
        description="Exact computation for r-wise t-intersecting set families",
    )
    sub = top.add_subparsers(dest="cmd", required=True)

    fam = sub.add_parser("family", help="build or check family files")
    fam_sub = fam.add_subparsers(dest="family_cmd", required=True)
    fb = fam_sub.add_parser("build")
    fb.add_argument("--type", choices=("frankl", "hmf", "star"), required=True)
    fb.add_argument("--n", type=int, required=True)
    fb.add_argument("--k", type=int, required=True)
    fb.add_argument("--r", type=int, default=3)
    fb.add_argument("--t", type=int, default=1)
    fb.add_argument("--i", type=int, default=1)
    fb.add_argument("--out")
    fc = fam_sub.add_parser("check")
    fc.add_argument("--family-file", required=True)
    fc.add_argument("--r", type=int, required=True)
    fc.add_argument("--t", type=int, required=True)
    fc.add_argument("--json", action="store_true")

    sh = sub.add_parser("shift", help="apply the compression operator")
    sh.add_argument("--family-file", required=True)
    sh.add_argument("--fixpoint", action="store_true")
    sh.add_argument("--i", type=int)
    sh.add_argument("--j", type=int)
    sh.add_argument("--out")

    sat = sub.add_parser("saturate", help="extend to a maximal family")
    sat.add_argument("--family-file", required=True)
    sat.add_argument("--r", type=int, required=True)
    sat.add_argument("--t", type=int, required=True)
    sat.add_argument("--k", type=int)
    sat.add_argument("--out")

    pa = sub.add_parser("paths", help="boundary-hitting path counts")
    pa_sub = pa.add_subparsers(dest="paths_cmd", required=True)
    pc = pa_sub.add_parser("count")
    for flag in ("--n", "--k", "--r", "--t"):
        pc.add_argument(flag, type=int, required=True)
    pc.add_argument("--json", action="store_true")
    pg = pa_sub.add_parser("g")
    pg.add_argument("--n", type=int)
    pg.add_argument("--k", type=int, required=True)
    pg.add_argument("--r", type=int, required=True)
    pg.add_argument("--t", type=int, required=True)
    pg.add_argument("--n-from", type=int)
    pg.add_argument("--n-to", type=int)
    pg.add_argument("--emit-plot")
    pg.add_argument("--json", action="store_true")
    pe = pa_sub.add_parser("ell")
    pe.add_argument("--r", type=int, required=True)
    pe.add_argument("--t", type=int, required=True)
    pe.add_argument("--i-max", type=int, default=8)
    pe.add_argument("--json", action="store_true")

    wa = sub.add_parser("walk", help="biased-walk hitting probabilities")
    wa_sub = wa.add_subparsers(dest="walk_cmd", required=True)
    wf = wa_sub.add_parser("f")
    wf.add_argument("--n", type=int, required=True)
    wf.add_argument("--r", type=int, required=True)
    wf.add_argument("--t", type=int, required=True)
    wf.add_argument("--p", required=True)
    wf.add_argument("--json", action="store_true")
    wg = wa_sub.add_parser("gamma")
    wg.add_argument("--r", type=int, required=True)
    wg.add_argument("--p", required=True)
    wg.add_argument("--tol", default="1e-15")
    wg.add_argument("--json", action="store_true")
    wl = wa_sub.add_parser("alpha")
    wl.add_argument("--r", type=int, required=True)
    wl.add_argument("--tol", default="1e-15")
    wl.add_argument("--json", action="store_true")

    sd = sub.add_parser("shadow", help="shadow families and bounds")
    sd.add_argument("--family-file", required=True)
    sd.add_argument("--b", type=int, required=True)
    sd.add_argument("--report", action="store_true")
    sd.add_argument("--r", type=int)
    sd.add_argument("--t", type=int)
    sd.add_argument("--out")

    se = sub.add_parser("search", help="exact extremal searches")
    se_sub = se.add_subparsers(dest="search_cmd", required=True)
    sm = se_sub.add_parser("max")
    for flag in ("--n", "--k", "--r", "--t"):
        sm.add_argument(flag, type=int, required=True)
    sm.add_argument("--nontrivial", action="store_true")
    sm.add_argument("--no-shift-reduction", action="store_true")
    sm.add_argument("--cap", type=int)
    sm.add_argument("--backend", choices=("pure", "compiled"))
    sm.add_argument("--json", action="store_true")
    sm.add_argument("--timing", action="store_true")
    sn = se_sub.add_parser("nonuniform")
    sn.add_argument("--n", type=int, required=True)
    sn.add_argument("--r", type=int, required=True)
    sn.add_argument("--t", type=int, required=True)
    sn.add_argument("--nontrivial", action="store_true")
    sn.add_argument("--json", action="store_true")
    sn.add_argument("--timing", action="store_true")

    th = sub.add_parser("threshold", help="star-vs-construction scans")
    th_sub = th.add_subparsers(dest="threshold_cmd", required=True)
    tn = th_sub.add_parser("n0")
    tn.add_argument("--k", type=int, required=True)
    tn.add_argument("--r", type=int, required=True)
    tn.add_argument("--t", type=int, required=True)
    tn.add_argument("--tol", default="1e-12")
    tn.add_argument("--json", action="store_true")
    ta = th_sub.add_parser("scan-a1")
    ta.add_argument("--k", type=int, required=True)
    ta.add_argument("--r", type=int, required=True)
    ta.add_argument("--t", type=int, required=True)
    ta.add_argument("--n-from", type=int, required=True)
    ta.add_argument("--n-to", type=int, required=True)
    ta.add_argument("--csv")
    ta.add_argument("--json", action="store_true")
    tc = th_sub.add_parser("scan-conj82")
    tc.add_argument("--k", type=int, required=True)
    tc.add_argument("--t", type=int, required=True)
    tc.add_argument("--window", type=int, default=3)
    tc.add_argument("--csv")
    tc.add_argument("--json", action="store_true")

    ve = sub.add_parser("verify", help="run named verification suites")
    ve.add_argument("--suite", default="all")
    ve.add_argument("--list", action="store_true")
    ve.add_argument("--json", action="store_true")
    return top


_DISPATCH = {
    "family": _cmd_family,
    "shift": _cmd_shift,
    "saturate": _cmd_saturate,
    "paths": _cmd_paths,
    "walk": _cmd_walk,
    "shadow": _cmd_shadow,
    "search": _cmd_search,
    "threshold": _cmd_threshold,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.cmd](args)
    except FeasibilityError as exc:
        print(json.dumps({"error": "infeasible", "message": str(exc)}), file=sys.stderr)
        return EXIT_INFEASIBLE
    except (ValueError, OSError) as exc:
        print(json.dumps({"error": "usage", "message": str(exc)}), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
