"""Command line front end: ``schubdiag <verb> ...``.

Exit status: 0 on success, 1 when a verification report contains a mismatch
(the report is still printed), 2 on usage errors, unknown systems, malformed
input or a tripped resource guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .cache import load_or_compute
from .diagonal import (
    COUNTEREXAMPLE_WORD,
    SOURCES,
    ZeroClass,
    build_candidate,
    graham_counterexample,
    verify,
)
from .flagbundle import ChernModel, FlagType, dim_flag, dim_flag_tower, rank_h_sides, top_chern_h
from .polyring import InexactDivision, Poly, TermLimitExceeded, block_names, term_limit
from .rootsys import (
    DEFAULT_WEYL_CAP,
    G2_BRIDGE,
    RootSystem,
    UnsupportedRootSystem,
    WeylGroupTooLarge,
    expected_order,
    from_string,
)
from .schubert import DegreeMismatch, expand
from .torsion import TorsionReport, torsion_index, type_c_point_certificate

DEFAULT_MAX_TERMS = 2_000_000
REFERENCE_COUNTEREXAMPLE = Fraction(-2, 9)

FORMULA_ALIASES = {
    "product": "typeA",
    "typea": "typeA",
    "fulton": "fultonC",
    "graham": "grahamG2",
    "prop29": "prop29G2",
    "prop29-stabilizer": "prop29G2_stabilizer",
    "deconcini-signfix": "deconciniG2_signfix",
}


class UsageError(Exception):
    pass


def rational(c) -> str:
    return str(Fraction(c))


def _emit(obj: dict, as_json: bool, text: str, out) -> None:
    if as_json:
        out.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def conventions(rs: RootSystem | None) -> dict:
    block = {
        "divided_difference": "d_i f = (f - s_i f) / alpha_i; d_w along a reduced word, rightmost operator first",
        "schubert_class": "sigma_w = d_{w^-1 w0}(prod alpha / |W|); coefficient of sigma_u in f is d_u f",
        "diagonal_pattern": "c(u, v) = sign * delta(v, w0 u)",
        "sign_policy": "measured: sign of the (e, w0) pair coefficient, never normalized",
    }
    if rs is not None:
        block["system"] = rs.name
        block["coordinates"] = list(rs.coord_names)
        block["simple_roots"] = [rs.root_to_string(a) for a in rs.simple_roots]
        if rs.family == "G2":
            block["g2_bridge"] = {f"x{i + 1}": [str(c) for c in row] for i, row in enumerate(G2_BRIDGE)}
            block["g2_reflections"] = "s1 is the short-root reflection"
    return block


def certificate(kind: str, rs: RootSystem | None, report: dict) -> dict:
    return {
        "kind": kind,
        "system": rs.name if rs is not None else None,
        "conventions": conventions(rs),
        "tool": {"name": "schubdiag", "version": __version__},
        "report": report,
    }


def _system(args, required: bool = True) -> RootSystem | None:
    if args.type is None:
        if required:
            raise UsageError("--type is required")
        return None
    rs = from_string(args.type)
    if expected_order(rs) > args.max_weyl:
        raise WeylGroupTooLarge(f"Weyl group too large: |W({rs.name})| = {expected_order(rs)} > --max-weyl {args.max_weyl}")
    load_or_compute(rs, args.cache_dir, max(args.max_weyl, DEFAULT_WEYL_CAP))
    return rs


# -- verbs -----------------------------------------------------------------


def cmd_roots(args, out) -> int:
    rs = _system(args)
    info = rs.to_json()
    info["num_positive"] = rs.num_positive
    info["cartan_matrix"] = [list(r) for r in rs.cartan_matrix()]
    lines = [f"{rs.name}: {rs.num_positive} positive roots in coordinates {', '.join(rs.coord_names)}"]
    lines += [f"  alpha_{i + 1} = {rs.root_to_string(a)}" for i, a in enumerate(rs.simple_roots)]
    lines.append("  positive: " + ", ".join(rs.root_to_string(a) for a in rs.positive_roots))
    _emit(certificate("roots", rs, info), args.json, "\n".join(lines), out)
    return 0


def cmd_weyl(args, out) -> int:
    from .rootsys import weyl_group

    rs = _system(args)
    W = weyl_group(rs, max(args.max_weyl, DEFAULT_WEYL_CAP))
    info = {
        "order": len(W),
        "length_counts": W.length_counts(),
        "longest_word": list(W.longest.word),
    }
    if args.elements:
        info["elements"] = [w.to_json() for w in W]
    text = f"|W({rs.name})| = {len(W)}, longest element s_{W.longest.word_string()}, length counts {W.length_counts()}"
    if args.elements:
        text += "\n" + "\n".join(f"  {w.length:3d}  {w.word_string()}" for w in W)
    _emit(certificate("weyl", rs, info), args.json, text, out)
    return 0


def cmd_diagonal(args, out) -> int:
    source = FORMULA_ALIASES.get(args.formula, args.formula)
    rs = _system(args, required=False)
    if source == "deconcini":
        if rs is None:
            raise UsageError("--formula deconcini needs --type")
        source = {"C": "deconciniC", "D": "deconciniD", "G2": "deconciniG2"}.get(rs.family)
        if source is None:
            raise UsageError(f"no De Concini formula for {rs.name}")
    if source not in SOURCES:
        raise UsageError(f"unknown formula {args.formula!r}; choose from {', '.join(SOURCES)}")
    cand = build_candidate(rs, source, allow_large=args.allow_large)
    rs = cand.system
    info = {
        "candidate": cand.ident,
        "degree": cand.degree(),
        "terms": len(cand.poly),
        "polynomial": cand.poly.to_json(),
    }
    names = block_names(rs.coord_dim, "a", "b") if rs.family == "G2" else block_names(rs.coord_dim)
    text = f"{cand.ident}: degree {cand.degree()}, {len(cand.poly)} terms"
    code = 0
    if args.verify:
        rep = verify(cand)
        info["verification"] = rep.to_json()
        text += (
            f"\n  diag_eval_constant = {rational(rep.diag_eval_constant)} (|W| = {rep.order})"
            f"\n  kronecker_ok = {rep.kronecker_ok}, global_sign = {rep.global_sign:+d}"
            f", mismatches = {len(rep.mismatches)} of {rep.pair_count} pairs"
            f"\n  {'PASS' if rep.passed else 'FAIL'}"
        )
        code = 0 if rep.passed else 1
    elif args.show:
        text += "\n  " + cand.poly.format(names)
    _emit(certificate("diagonal", rs, info), args.json, text, out)
    return code


def cmd_torsion(args, out) -> int:
    rs = _system(args)
    rep: TorsionReport = torsion_index(rs, full=args.full)
    info = rep.to_json()
    text = (
        f"t({rs.name}) = {rep.gcd}  (N = {rep.N}; {rep.evaluated} of {rep.monomial_count} weight monomials evaluated;"
        f" witness exponents {list(rep.witness)})"
    )
    if rs.family == "C" and rs.rank in (2, 3):
        cert = type_c_point_certificate(rs.rank)
        info["point_certificate"] = {"monomial": "x1 x2^3" + (" x3^5" if rs.rank == 3 else ""), "value": rational(cert)}
        text += f"\n  d_w0(x1 x2^3{' x3^5' if rs.rank == 3 else ''}) = {rational(cert)}"
    _emit(certificate("torsion", rs, info), args.json, text, out)
    return 0


def cmd_counterexample(args, out) -> int:
    if args.which.upper() != "G2":
        raise UsageError("only 'counterexample g2' is available")
    rs = from_string("G2")
    value = graham_counterexample()
    integral = value.denominator == 1
    info = {
        "class": "(x1 x2 x3 + y1 y2 y3) / 2 via the G2 bridge",
        "schubert_word": list(COUNTEREXAMPLE_WORD),
        "coefficient": rational(value),
        "integral": integral,
        "reference_value": rational(REFERENCE_COUNTEREXAMPLE),
        "magnitude_matches_reference": abs(value) == abs(REFERENCE_COUNTEREXAMPLE),
        "conjecture_disproved": not integral,
    }
    verdict = "integral: no counterexample" if integral else "non-integral: conjecture disproved"
    text = (
        f"coefficient of sigma_s{''.join(map(str, COUNTEREXAMPLE_WORD))} = {rational(value)}  ({verdict})"
        f"\n  reference value {rational(REFERENCE_COUNTEREXAMPLE)}; magnitude match: {info['magnitude_matches_reference']}"
    )
    _emit(certificate("counterexample", rs, info), args.json, text, out)
    return 0 if not integral else 1


def cmd_bundle(args, out) -> int:
    try:
        flag = FlagType.parse(args.n, args.flags) if args.flags else FlagType.complete(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    checks = [c.strip() for c in args.check.split(",") if c.strip()]
    bad = set(checks) - {"rank", "dim", "ctop"}
    if bad:
        raise UsageError(f"unknown checks: {', '.join(sorted(bad))}")
    info: dict = {"n": flag.n, "flag": list(flag.d), "convention": args.convention}
    lines = [f"flag type {list(flag.d)} in rank {flag.n}"]
    ok = True
    if "rank" in checks:
        lhs, rhs = rank_h_sides(flag)
        info["rank"] = {"sum_of_hom_ranks": lhs, "closed_form": rhs, "ok": lhs == rhs}
        ok &= lhs == rhs
        lines.append(f"  rank(H): {lhs} vs {rhs}")
    if "dim" in checks:
        a, b = dim_flag(args.dim_x, flag), dim_flag_tower(args.dim_x, flag)
        info["dim"] = {"dim_x": args.dim_x, "dim_flag": a, "tower": b, "ok": a == b}
        ok &= a == b
        lines.append(f"  dim Fl_d(E): {a} (tower {b})")
    if "ctop" in checks:
        model = ChernModel(flag, args.convention)
        c = top_chern_h(model)
        entry = {"polynomial": c.to_json(), "degree": c.degree()}
        if flag.d == tuple(range(1, flag.n + 1)):
            from .diagonal import type_a_product

            same = c == type_a_product(flag.n).poly
            entry["equals_prod_x_i_minus_y_j"] = same
            ok &= same or args.convention != "quotient"
            lines.append(f"  c_top(H) = prod_(i<j) (x_i - y_j): {same}")
        lines.append("  c_top(H) = " + c.format(block_names(flag.n)))
        info["ctop"] = entry
    info["ok"] = ok
    _emit(certificate("bundle", None, info), args.json, "\n".join(lines), out)
    return 0 if ok else 1


def cmd_expand(args, out) -> int:
    rs = _system(args)
    try:
        data = json.loads(Path(args.file).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read polynomial file: {exc}") from exc
    if isinstance(data, dict) and "poly" in data and "terms" not in data:
        data = data["poly"]
    try:
        p = Poly.from_json(data)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    exp = expand(rs, p)
    info = exp.to_json()
    lines = [f"{rs.name}, degree {exp.degree}: {len(info['entries'])} nonzero coefficients"]
    for u, v, c in exp.entries():
        key = f"sigma_{u.word_string()}" + (f" (x) sigma_{v.word_string()}" if v is not None else "")
        lines.append(f"  {rational(c):>8}  {key}")
    _emit(certificate("expand", rs, info), args.json, "\n".join(lines), out)
    return 0


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON certificate")
    common.add_argument("--max-weyl", type=int, default=DEFAULT_WEYL_CAP, help="refuse Weyl groups larger than this")
    common.add_argument("--max-terms", type=int, default=DEFAULT_MAX_TERMS, help="abort products with more terms")
    common.add_argument("--cache-dir", default=None, help="Weyl enumeration cache (default: $SCHUBDIAG_CACHE)")

    p = argparse.ArgumentParser(prog="schubdiag", description="Exact Schubert calculus on G/B.")
    p.add_argument("--version", action="version", version=f"schubdiag {__version__}")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("roots", parents=[common], help="root system data")
    s.add_argument("--type", required=True)
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("weyl", parents=[common], help="Weyl group enumeration")
    s.add_argument("--type", required=True)
    s.add_argument("--elements", action="store_true", help="list every element")
    s.set_defaults(func=cmd_weyl)

    s = sub.add_parser("diagonal", parents=[common], help="diagonal class representatives")
    s.add_argument("--type", default=None, help="root system (optional for G2 formulas)")
    s.add_argument("--formula", required=True, help=f"one of {', '.join(SOURCES)} or a short alias")
    s.add_argument("--verify", action="store_true")
    s.add_argument("--show", action="store_true", help="print the polynomial")
    s.add_argument("--allow-large", action="store_true")
    s.set_defaults(func=cmd_diagonal)

    s = sub.add_parser("torsion", parents=[common], help="torsion index")
    s.add_argument("--type", required=True)
    s.add_argument("--full", action="store_true", help="evaluate every monomial")
    s.set_defaults(func=cmd_torsion)

    s = sub.add_parser("counterexample", parents=[common], help="integrality counterexample")
    s.add_argument("which", help="g2")
    s.set_defaults(func=cmd_counterexample)

    s = sub.add_parser("bundle", parents=[common], help="flag bundle Chern checks")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--flags", default=None, help="comma-separated d_1,...,d_k (d_k = n implied)")
    s.add_argument("--check", default="rank,dim,ctop")
    s.add_argument("--dim-x", type=int, default=0)
    s.add_argument("--convention", choices=("quotient", "sub"), default="quotient")
    s.set_defaults(func=cmd_bundle)

    s = sub.add_parser("expand", parents=[common], help="Schubert expansion of a polynomial")
    s.add_argument("--type", required=True)
    s.add_argument("--file", required=True, help="polynomial JSON {nvars, terms:[{exp,num,den}]}")
    s.set_defaults(func=cmd_expand)
    return p


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        with term_limit(args.max_terms):
            return args.func(args, out)
    except (UsageError, UnsupportedRootSystem, WeylGroupTooLarge, TermLimitExceeded, DegreeMismatch) as exc:
        sys.stderr.write(f"schubdiag: error: {exc}\n")
        return 2
    except (ZeroClass, InexactDivision, ValueError) as exc:
        sys.stderr.write(f"schubdiag: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
