"""Command-line surface: every verification as a subcommand with JSON output.

All subcommands are thin adapters over the library; no combinatorial logic
lives here.  Output JSON is deterministic (stable key order, big integers as
decimal strings, no timestamps), so identical invocations are byte-identical.

Exit codes: 0 success, 1 a checked property is false, 2 usage or domain
error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile

from . import injectlab, pathlab, polycore, posetlab, qgauss
from .errors import EnumerationBudgetExceeded, GausslabError
from .polycore import IntPoly

SCHEMA_VERSION = 1


def _emit(doc: dict, out: str | None = None) -> None:
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if out is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".report-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, out)
    except BaseException:
        os.unlink(tmp)
        raise


def _parse_coeffs(text: str) -> IntPoly:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"coefficients are not valid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise ValueError("coefficients must be a JSON array")
    return IntPoly.from_json(data)


# -- gauss -----------------------------------------------------------------------


def _cmd_gauss(args) -> int:
    a, b = args.a, args.b
    doc = {"v": SCHEMA_VERSION, "command": "gauss", "a": a, "b": b, "method": args.method}
    if args.method == "quotient":
        poly = qgauss.gaussian_quotient(a, b)
    elif args.method == "pascal":
        poly = qgauss.gaussian_pascal(a, b)
    elif args.method == "enum":
        poly = IntPoly(qgauss.level_counts(a, b, args.budget))
    else:
        rule = qgauss.ArgRule(args.koh_rule)
        poly, terms = qgauss.koh_sum(a, b, rule)
        doc["rule"] = rule.value
        if args.terms:
            doc["terms"] = [t.to_json_dict() for t in terms]
    doc["coeffs"] = poly.to_json()
    _emit(doc)
    return 0


# -- check -----------------------------------------------------------------------


def _cmd_check(args) -> int:
    poly = _parse_coeffs(args.coeffs)
    center = args.center if args.center is not None else max(poly.degree, 0)
    requested = {
        "unimodal": args.unimodal,
        "log_concave": args.log_concave,
        "palindromic": args.palindromic,
        "gamma": args.gamma,
        "real_rooted": args.real_rooted,
    }
    if not any(requested.values()):
        requested = dict.fromkeys(requested, True)
    checks: dict = {}
    if requested["unimodal"]:
        checks["unimodal"] = polycore.is_unimodal(poly)
        checks["mode"] = polycore.mode(poly)
    if requested["log_concave"]:
        checks["log_concave"] = polycore.is_log_concave(poly)
    if requested["palindromic"]:
        checks["palindromic"] = polycore.is_palindromic(poly, center)
    if requested["gamma"]:
        if polycore.is_palindromic(poly, center):
            gv = polycore.gamma_decompose(poly, center)
            checks["gamma_nonnegative"] = gv.is_nonnegative
            checks["gamma"] = [str(g) for g in gv.gammas]
        else:
            checks["gamma_nonnegative"] = False
            checks["gamma"] = None
    if requested["real_rooted"]:
        checks["real_rooted"] = polycore.is_real_rooted(poly)
    doc = {
        "v": SCHEMA_VERSION,
        "command": "check",
        "coeffs": poly.to_json(),
        "center": center,
        "checks": checks,
    }
    _emit(doc)
    failed = any(value is False for value in checks.values())
    return 1 if failed else 0


# -- injection audits --------------------------------------------------------------


def _cmd_injection_audit(args) -> int:
    if args.rule == "all":
        rules = tuple(injectlab.InjectionRule)
    else:
        rules = (injectlab.RULE_BY_NUMBER[int(args.rule)],)
    audits = injectlab.audit_all(args.amax, args.bmax, rules, args.budget)
    doc = {
        "v": SCHEMA_VERSION,
        "command": "injection-audit",
        "amax": args.amax,
        "bmax": args.bmax,
        "audits": [r.to_json_dict() for r in audits],
    }
    if args.verify_claims:
        checks = [
            c
            for c in injectlab.verify_claimed_witnesses(args.amax, args.bmax, args.budget)
            if c.rule in rules
        ]
        doc["claims"] = [c.to_json_dict() for c in checks]
    if args.table:
        for r in audits:
            print(_audit_row(r))
        if args.verify_claims:
            for c in checks:
                print(
                    f"claim {c.rule.value} ({c.box[0]},{c.box[1]}) k={c.claimed_level}"
                    f" -> {c.verdict.value}: {c.detail}"
                )
        return 0
    _emit(doc)
    return 0


def _audit_row(r: injectlab.AuditReport) -> str:
    head = f"{r.rule.value:17s} ({r.box[0]},{r.box[1]})  {r.outcome.value}"
    if r.outcome is injectlab.AuditOutcome.INJECTIVE_UP_TO_MIDDLE:
        if r.levels_checked == 0:
            return f"{head} (no levels below the middle)"
        return f"{head} (levels 0..{r.levels_checked - 1})"
    if r.outcome is injectlab.AuditOutcome.COLLISION:
        return f"{head} at k={r.level}: {r.witnesses[0]} and {r.witnesses[1]} -> {r.image}"
    return f"{head} at k={r.level}: {r.witnesses[0]} ties among {list(r.candidates)}"


# -- poset commands ------------------------------------------------------------------


def _cmd_sperner(args) -> int:
    n = args.n
    doc = {
        "v": SCHEMA_VERSION,
        "command": "sperner",
        "n": n,
        "bound": str(math.comb(n, (n + 1) // 2)),
        "middle_layer_sizes": [
            str(math.comb(n, n // 2)),
            str(math.comb(n, (n + 1) // 2)),
        ],
    }
    if args.exhaustive:
        search = posetlab.max_antichain(n, max_n=args.max_exhaustive)
        doc["exhaustive"] = {
            "max_size": str(search.max_size),
            "num_maximum": str(search.num_maximum),
            "total_antichains": str(search.total_antichains),
            "bound_holds": search.bound_holds,
        }
        _emit(doc)
        return 0 if search.bound_holds and search.max_size == search.bound else 1
    _emit(doc)
    return 0


def _cmd_lym(args) -> int:
    try:
        family = json.loads(args.antichain)
    except json.JSONDecodeError as exc:
        raise ValueError(f"antichain is not valid JSON: {exc}") from exc
    total = posetlab.lym_sum(family, args.n)
    doc = {
        "v": SCHEMA_VERSION,
        "command": "lym",
        "n": args.n,
        "sum": f"{total.numerator}/{total.denominator}",
        "bound_holds": total <= 1,
        "tight": total == 1,
    }
    _emit(doc)
    return 0 if total <= 1 else 1


def _cmd_bruhat(args) -> int:
    poset = posetlab.weak_bruhat(args.n)
    hist = poset.rank_histogram()
    expected = list(qgauss.q_factorial(args.n).coeffs)
    doc = {
        "v": SCHEMA_VERSION,
        "command": "bruhat",
        "n": args.n,
        "rank_histogram": [str(c) for c in hist],
        "matches_q_factorial": hist == expected,
        "num_covers": len(poset.covers),
    }
    _emit(doc)
    return 0 if hist == expected else 1


def _cmd_stirling(args) -> int:
    row = posetlab.stirling_row(args.n)
    unimodal = polycore.is_unimodal(IntPoly(row))
    doc = {
        "v": SCHEMA_VERSION,
        "command": "stirling",
        "n": args.n,
        "row": [str(c) for c in row],
        "unimodal": unimodal,
        "bell": str(sum(row)),
    }
    _emit(doc)
    return 0 if unimodal else 1


def _cmd_eulerian(args) -> int:
    poly = posetlab.eulerian(args.n)
    n = args.n
    checks = {
        "palindromic": polycore.is_palindromic(poly, n - 1),
        "unimodal": polycore.is_unimodal(poly),
        "real_rooted": polycore.is_real_rooted(poly),
        "coefficient_sum_is_factorial": poly.evaluate(1) == math.factorial(n),
    }
    checks["gamma_nonnegative"] = (
        checks["palindromic"] and polycore.is_gamma_nonnegative(poly, n - 1)
    )
    doc = {
        "v": SCHEMA_VERSION,
        "command": "eulerian",
        "n": n,
        "coeffs": poly.to_json(),
        "checks": checks,
    }
    _emit(doc)
    return 0 if all(checks.values()) else 1


# -- path commands ---------------------------------------------------------------------


def _cmd_paths(args) -> int:
    if args.paths_command == "fab":
        dp = pathlab.count_free(args.a, args.b, args.n)
        closed = pathlab.count_free_closed_form(args.a, args.b, args.n)
        doc = {
            "v": SCHEMA_VERSION,
            "command": "paths fab",
            "a": args.a,
            "b": args.b,
            "n": args.n,
            "count": str(dp),
            "closed_form": str(closed),
            "agree": dp == closed,
        }
        _emit(doc)
        return 0 if dp == closed else 1
    if args.paths_command == "monotone":
        cert = pathlab.monotone_injection(args.n, args.k)
        doc = {
            "v": SCHEMA_VERSION,
            "command": "paths monotone",
            "n": args.n,
            "k": args.k,
            "source_count": str(cert.source_count),
            "image_count": str(cert.image_count),
            "injective": cert.injective,
            "images_in_target": cert.images_in_target,
            "line": {"orientation": cert.line.orientation.value, "offset": cert.line.offset},
        }
        if args.show_map:
            doc["map"] = [
                {"source": [list(v) for v in src_path], "image": [list(v) for v in img]}
                for src_path, img in cert.mapping
            ]
        _emit(doc)
        return 0 if cert.injective and cert.images_in_target else 1
    seq = pathlab.sagan_sequence(args.n, args.k)
    unimodal = polycore.is_unimodal(IntPoly(seq)) if seq != [0] * len(seq) else True
    doc = {
        "v": SCHEMA_VERSION,
        "command": "paths sagan",
        "n": args.n,
        "k": args.k,
        "sequence": [str(c) for c in seq],
        "unimodal": unimodal,
    }
    _emit(doc)
    return 0 if unimodal else 1


# -- the one-document report --------------------------------------------------------------


def _gaussian_section(amax: int, bmax: int, budget: int | None) -> dict:
    grid = []
    all_agree = True
    for a in range(1, amax + 1):
        for b in range(1, bmax + 1):
            quotient = qgauss.gaussian_quotient(a, b)
            pascal = qgauss.gaussian_pascal(a, b)
            enum_counts = IntPoly(qgauss.level_counts(a, b, budget))
            koh_cal, _ = qgauss.koh_sum(a, b, qgauss.ArgRule.CALIBRATED)
            koh_stated, _ = qgauss.koh_sum(a, b, qgauss.ArgRule.STATED)
            agree = quotient == pascal == enum_counts == koh_cal
            all_agree = all_agree and agree
            grid.append(
                {
                    "a": a,
                    "b": b,
                    "four_way_agreement": agree,
                    "stated_rule_agrees": koh_stated == quotient,
                    "unimodal": polycore.is_unimodal(quotient),
                    "darga": polycore.darga(quotient),
                }
            )
    return {"grid": grid, "pass": all_agree}


def _injection_section(amax: int, bmax: int, budget: int | None) -> dict:
    audits = injectlab.audit_all(amax, bmax, budget=budget)
    claims = injectlab.verify_claimed_witnesses(amax, bmax, budget)
    return {
        "audits": [r.to_json_dict() for r in audits],
        "claims": [c.to_json_dict() for c in claims],
        "pass": True,
    }


def _poset_section() -> dict:
    sperner = posetlab.max_antichain(4)
    lym_tight = posetlab.lym_sum(posetlab.full_layer(4, 2), 4) == 1
    bruhat_ok = all(
        posetlab.inversion_polynomial(n) == qgauss.q_factorial(n) for n in range(1, 6)
    )
    stirling_ok = all(
        polycore.is_unimodal(IntPoly(posetlab.stirling_row(n))) for n in range(1, 9)
    )
    eulerian_ok = True
    for n in range(1, 8):
        poly = posetlab.eulerian(n)
        eulerian_ok = eulerian_ok and polycore.is_palindromic(poly, n - 1)
        eulerian_ok = eulerian_ok and polycore.is_gamma_nonnegative(poly, n - 1)
        eulerian_ok = eulerian_ok and polycore.is_real_rooted(poly)
        eulerian_ok = eulerian_ok and polycore.is_unimodal(poly)
    ok = (
        sperner.max_size == sperner.bound
        and sperner.num_maximum == 1
        and lym_tight
        and bruhat_ok
        and stirling_ok
        and eulerian_ok
    )
    return {
        "sperner_n4": {
            "max_size": str(sperner.max_size),
            "num_maximum": str(sperner.num_maximum),
            "total_antichains": str(sperner.total_antichains),
        },
        "lym_middle_layer_tight_n4": lym_tight,
        "inversion_polynomial_matches_q_factorial_n_le_5": bruhat_ok,
        "stirling_rows_unimodal_n_le_8": stirling_ok,
        "eulerian_suite_n_le_7": eulerian_ok,
        "pass": ok,
    }


def _path_section() -> dict:
    fab_ok = True
    for a in range(1, 5):
        for b in range(1, 5):
            for n in range(a + b, 13, 2):
                fab_ok = fab_ok and pathlab.count_free(a, b, n) == (
                    pathlab.count_free_closed_form(a, b, n)
                )
    monotone_ok = all(
        pathlab.monotone_injection(n, k).injective
        for n in range(2, 11)
        for k in range(n // 2)
    )
    sagan_ok = all(
        polycore.is_unimodal(IntPoly(pathlab.sagan_sequence(n, k)))
        for n in range(17)
        for k in range(n + 1)
    )
    return {
        "free_walk_counts_match_closed_form": fab_ok,
        "monotone_reflection_injective": monotone_ok,
        "binomial_product_sequences_unimodal": sagan_ok,
        "pass": fab_ok and monotone_ok and sagan_ok,
    }


def _cmd_report(args) -> int:
    sections = {
        "gaussian": _gaussian_section(args.amax, args.bmax, args.budget),
        "injections": _injection_section(args.amax, args.bmax, args.budget),
        "posets": _poset_section(),
        "paths": _path_section(),
    }
    doc = {
        "v": SCHEMA_VERSION,
        "command": "report",
        "amax": args.amax,
        "bmax": args.bmax,
        "sections": sections,
        "pass": all(s["pass"] for s in sections.values()),
    }
    _emit(doc, args.out)
    return 0 if doc["pass"] else 1


# -- parser ---------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gausslab",
        description="Exact checks for Gaussian polynomials, posets, and lattice paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gauss", help="Gaussian polynomial coefficients by any route")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument(
        "--method", choices=["quotient", "pascal", "enum", "koh"], default="quotient"
    )
    p.add_argument("--koh-rule", choices=["stated", "calibrated"], default="calibrated")
    p.add_argument("--terms", action="store_true", help="dump the per-term breakdown")
    p.add_argument("--budget", type=int, default=injectlab.DEFAULT_ENUMERATION_BUDGET)
    p.set_defaults(handler=_cmd_gauss)

    p = sub.add_parser("check", help="coefficient-shape checks for a polynomial")
    p.add_argument("coeffs", help='JSON array of coefficients, e.g. \'["1","1","2","1","1"]\'')
    p.add_argument("--center", type=int, default=None)
    p.add_argument("--unimodal", action="store_true")
    p.add_argument("--log-concave", dest="log_concave", action="store_true")
    p.add_argument("--palindromic", action="store_true")
    p.add_argument("--gamma", action="store_true")
    p.add_argument("--real-rooted", dest="real_rooted", action="store_true")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("injection-audit", help="audit the level-raising rules")
    p.add_argument("--rule", choices=["all", "1", "2", "3", "4"], default="all")
    p.add_argument("--amax", type=int, default=4)
    p.add_argument("--bmax", type=int, default=4)
    p.add_argument("--budget", type=int, default=injectlab.DEFAULT_ENUMERATION_BUDGET)
    p.add_argument(
        "--verify-claims",
        action="store_true",
        help="also replay the documented failure claims",
    )
    p.add_argument("--table", action="store_true", help="plain-text table output")
    p.set_defaults(handler=_cmd_injection_audit)

    p = sub.add_parser("sperner", help="largest antichain in the subset lattice")
    p.add_argument("n", type=int)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--max-exhaustive", type=int, default=5)
    p.set_defaults(handler=_cmd_sperner)

    p = sub.add_parser("lym", help="exact LYM sum of an antichain")
    p.add_argument("n", type=int)
    p.add_argument("antichain", help='JSON family of subsets, e.g. "[[1,2],[3]]"')
    p.set_defaults(handler=_cmd_lym)

    p = sub.add_parser("bruhat", help="weak order rank histogram vs q-factorial")
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_bruhat)

    p = sub.add_parser("stirling", help="Stirling row and its unimodality")
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_stirling)

    p = sub.add_parser("eulerian", help="Eulerian polynomial and its certificates")
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_eulerian)

    p = sub.add_parser("paths", help="lattice-path counts and reflections")
    psub = p.add_subparsers(dest="paths_command", required=True)
    fab = psub.add_parser("fab", help="four-direction walk count vs closed form")
    fab.add_argument("a", type=int)
    fab.add_argument("b", type=int)
    fab.add_argument("n", type=int)
    mono = psub.add_parser("monotone", help="reflection injection between path levels")
    mono.add_argument("n", type=int)
    mono.add_argument("k", type=int)
    mono.add_argument("--show-map", dest="show_map", action="store_true",
                      help="include every source/image path pair")
    sagan = psub.add_parser("sagan", help="binomial-product sequence")
    sagan.add_argument("n", type=int)
    sagan.add_argument("k", type=int)
    p.set_defaults(handler=_cmd_paths)

    p = sub.add_parser("report", help="full verification run as one JSON document")
    p.add_argument("--all", action="store_true", help="run every section (default)")
    p.add_argument("--amax", type=int, default=6)
    p.add_argument("--bmax", type=int, default=6)
    p.add_argument("--budget", type=int, default=injectlab.DEFAULT_ENUMERATION_BUDGET)
    p.add_argument("--out", default=None, help="write atomically to this file")
    p.set_defaults(handler=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except EnumerationBudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (GausslabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
