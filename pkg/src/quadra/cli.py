"""Command line front end.

JSON goes to stdout, notes to stderr.  Exit status: 0 success, 1 the check
ran and failed, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from typing import Optional

from . import curves, io, newton, quadrature
from .arith import (
    INF,
    QuadFieldElement,
    format_rational,
    parse_gaussian,
    parse_rational,
)
from .bessel import bessel_y, moments, monic_phi
from .poly import Polynomial, expand_from_roots

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _note(msg: str) -> None:
    sys.stderr.write(msg + "\n")


def _element_out(x):
    if isinstance(x, QuadFieldElement):
        return io.element_to_json(x)
    return format_rational(x)


def parse_element(text: str, d: Optional[int]):
    """``a`` or ``a:b`` meaning ``a + b*sqrt(d)``."""
    if ":" in text:
        if d is None:
            raise UsageError(f"{text!r} has an irrational part; pass --disc")
        a, b = text.split(":", 1)
        return QuadFieldElement(parse_rational(a), parse_rational(b), d)
    q = parse_rational(text)
    return q if d is None else QuadFieldElement(q, 0, d)


def parse_nodes(text: str, d: Optional[int]) -> list:
    text = text.strip()
    if not text:
        return []
    return [parse_element(part, d) for part in text.split(",")]


def _formula_out(formula, label: str) -> dict:
    degree = quadrature.verify(formula)
    _note(f"{label}: {formula.size} nodes, verified degree {degree}")
    return io.formula_to_json(formula, {"label": label, "expected_degree": degree})


def cmd_moments(args) -> int:
    if args.count < 0:
        raise UsageError("--count must be non-negative")
    _emit([format_rational(m) for m in moments(args.count)])
    return EXIT_OK


def cmd_bessel(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    p = monic_phi(args.n) if args.monic else bessel_y(args.n)
    _note(p.format("x"))
    _emit([format_rational(c) for c in p.coeffs])
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.file:
        doc = io.load_file(args.file)
    else:
        doc = io.load_fixture(args.fixture)
    formula = doc.formula
    cap = args.cap if args.cap is not None else quadrature.default_cap(formula.size)
    degree = quadrature.verify(formula, cap)
    out = {"degree": degree}
    fail = quadrature.first_failure(formula, cap)
    if args.detail:
        out["cap"] = cap
        out["failure"] = None if fail is None else {"j": fail[0], "defect": _element_out(fail[1])}
    if fail is not None:
        _note(f"moment j={fail[0]} off by {fail[1]}")
    _emit(out)
    if args.expect is not None and degree < args.expect:
        _note(f"verified degree {degree} below expected {args.expect}")
        return EXIT_FAILED
    return EXIT_OK


def cmd_decompose(args) -> int:
    if args.coeffs:
        theta = Polynomial(parse_nodes(args.coeffs, args.disc))
    else:
        theta = expand_from_roots(parse_nodes(args.nodes, args.disc))
    dec = quadrature.decompose(theta)
    _note(f"theta = {theta.format()}")
    _emit(
        {
            "r": dec.r,
            "b": [_element_out(b) for b in dec.b],
            "order": dec.order,
            "k": dec.k,
            "guaranteed_degree": dec.guaranteed_degree,
        }
    )
    return EXIT_OK


def _two_node(disc: int) -> int:
    result = quadrature.two_node_degree2(disc)
    if isinstance(result, quadrature.NonExistence):
        _note(f"no 2-node degree-2 formula on the unit circle over Q(sqrt({disc})): {result.reason}")
        _emit({"exists": False, "d": disc, "reason": result.reason, "witness": result.witness})
        return EXIT_FAILED
    _emit(_formula_out(result, f"two-node d={disc}"))
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.kind == "two-node":
        if args.disc is None:
            raise UsageError("two-node needs --disc")
        return _two_node(args.disc)
    if args.nodes is None:
        raise UsageError(f"{args.kind} needs --nodes")
    if args.kind == "gauss-type":
        nodes = parse_nodes(args.nodes, args.disc)
        formula = quadrature.construct_degree_r(nodes, args.disc)
        _emit(_formula_out(formula, "gauss-type"))
        return EXIT_OK
    if args.disc is not None:
        raise UsageError("mt3 works over the rationals; drop --disc")
    formula = quadrature.construct_degree_r_plus_1(parse_nodes(args.nodes, None))
    _emit(_formula_out(formula, "mt3"))
    return EXIT_OK


def cmd_two_node(args) -> int:
    return _two_node(args.disc)


def _val_out(v):
    return "inf" if v is INF else v


def cmd_polygon(args) -> int:
    s, t = parse_gaussian(args.s), parse_gaussian(args.t)
    ctx = newton.parse_prime(args.prime, args.r)
    rep = newton.nonexistence_certificate(args.r, s, t, ctx)
    verdict = "NON-INTEGRAL" if rep.certified else "INTEGRAL"
    _note(f"r={args.r} s={s} t={t} prime={ctx.label()}: {verdict}")
    _emit(
        {
            "r": args.r,
            "s": str(s),
            "t": str(t),
            "prime": ctx.label(),
            "coefficients": [str(a) for a in rep.coefficients],
            "points": [[k, _val_out(v)] for k, v in rep.polygon.points],
            "vertices": [list(v) for v in rep.polygon.vertices],
            "slopes": [format_rational(x) for x in rep.polygon.slopes],
            "verdict": verdict,
        }
    )
    return EXIT_OK if rep.certified else EXIT_FAILED


def cmd_certify(args) -> int:
    ctx = newton.prime_for_r(args.r)
    rng = random.Random(args.seed)
    pairs = newton.sample_coprime_pairs(rng, args.samples, ctx, args.bound)
    failures = []
    for s, t in pairs:
        if not newton.nonexistence_certificate(args.r, s, t, ctx).certified:
            failures.append({"s": str(s), "t": str(t)})
    _note(f"r={args.r} prime={ctx.label()}: {len(pairs) - len(failures)}/{len(pairs)} certified")
    _emit(
        {
            "r": args.r,
            "prime": ctx.label(),
            "samples": len(pairs),
            "certified": len(pairs) - len(failures),
            "failures": failures,
        }
    )
    return EXIT_OK if not failures else EXIT_FAILED


def cmd_curve_search(args) -> int:
    curve = curves.CURVES[args.which]()
    mode = "gaussian" if args.gaussian else "rational"
    pts = curves.search_points(curve, args.height, mode)
    _note(f"{curve.format()}: {len(pts)} points with height <= {args.height} ({mode})")
    _emit([curves.point_to_json(p) for p in pts])
    return EXIT_OK


def cmd_from_point(args) -> int:
    if getattr(args, "which", "cdk") != "cdk":
        raise UsageError("from-point works on the cdk curve only")
    y = parse_rational(args.y)
    w = QuadFieldElement(parse_rational(args.w_re), parse_rational(args.w_im), -1)
    formula = curves.nodes_from_point(curves.CurvePoint(y, w))
    _emit(_formula_out(formula, f"from-point y={format_rational(y)}"))
    return EXIT_OK


def cmd_compat(args) -> int:
    nodes = parse_nodes(args.nodes, args.disc)
    if len(nodes) != args.r + 1:
        raise UsageError(f"need r+1 = {args.r + 1} nodes, got {len(nodes)}")
    quadrature._check_distinct(nodes)
    f = curves.f_poly(args.r)
    pairs = []
    for i, zi in enumerate(nodes):
        for j, zj in enumerate(nodes):
            if i < j:
                pairs.append({"i": i, "j": j, "value": _element_out(f(zi, zj))})
    ok = curves.pairwise_compatible(nodes, args.r)
    _emit({"r": args.r, "compatible": ok, "pairs": pairs})
    return EXIT_OK if ok else EXIT_FAILED


def cmd_mt2_check(args) -> int:
    rep = curves.mt2_candidate_check(parse_rational(args.s))

    def opt(x):
        return None if x is None else format_rational(x)

    _emit(
        {
            "s": format_rational(rep.s),
            "t_squared": format_rational(rep.t_squared),
            "discriminant": format_rational(rep.discriminant),
            "branches": [
                {"sign": b.sign, "t": opt(b.t), "u": opt(b.u), "v": opt(b.v), "fails_at": b.fails_at}
                for b in rep.branches
            ],
        }
    )
    return EXIT_OK if rep.all_fail else EXIT_FAILED


def cmd_fixtures(args) -> int:
    if args.name:
        sys.stdout.write(io.dumps(io.load_fixture(args.name)))
        return EXIT_OK
    _emit(
        [
            {"label": doc.label, "d": io.formula_to_json(doc.formula)["d"], "expected_degree": doc.expected_degree}
            for doc in io.bundled_fixtures()
        ]
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadra", description="Exact quadrature formulas for the Bessel weight on the unit circle."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("moments", help="moments (-2)^j/(j+1)!")
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("bessel", help="coefficients of y_n (ascending)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--monic", action="store_true")
    p.set_defaults(func=cmd_bessel)

    p = sub.add_parser("verify", help="exact degree of a formula")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file")
    src.add_argument("--fixture", choices=io.FIXTURE_NAMES)
    p.add_argument("--cap", type=int)
    p.add_argument("--expect", type=int)
    p.add_argument("--detail", action="store_true", help="include the first failing moment")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", help="quasi-orthogonal coefficients of a monic node polynomial")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--nodes", help="comma separated; a or a:b for a+b*sqrt(d)")
    src.add_argument("--coeffs", help="ascending coefficients of a monic polynomial")
    p.add_argument("--disc", type=int)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("construct", help="build a formula")
    p.add_argument("kind", choices=("gauss-type", "mt3", "two-node"))
    p.add_argument("--nodes")
    p.add_argument("--disc", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("two-node", help="2-node degree-2 formula on the unit circle")
    p.add_argument("--disc", type=int, required=True)
    p.set_defaults(func=cmd_two_node)

    p = sub.add_parser("polygon", help="Newton polygon of t*y_{r+1} + s*y_r")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--prime", default="auto", help="auto, a rational prime, or 2+i")
    p.set_defaults(func=cmd_polygon)

    p = sub.add_parser("certify", help="Newton polygon certificates on random coprime (s, t)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=50)
    p.set_defaults(func=cmd_certify)

    for name in ("curve", "cdk"):
        p = sub.add_parser(name, help="quartic curves w^2 = R(y)")
        p.add_argument("--which", choices=tuple(curves.CURVES), default="cdk")
        csub = p.add_subparsers(dest="action", required=True)
        q = csub.add_parser("search", help="bounded-height point search")
        q.add_argument("--height", type=int, required=True)
        q.add_argument("--gaussian", action="store_true", help="allow w in Q(i)")
        q.set_defaults(func=cmd_curve_search)
        q = csub.add_parser("from-point", help="degree-4 formula from a point of the cdk curve")
        q.add_argument("--y", required=True)
        q.add_argument("--w-im", required=True)
        q.add_argument("--w-re", default="0")
        q.set_defaults(func=cmd_from_point)

    p = sub.add_parser("compat", help="pairwise f_r(z_i, z_j) = 0 test")
    p.add_argument("--nodes", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--disc", type=int)
    p.set_defaults(func=cmd_compat)

    p = sub.add_parser("mt2-check", help="rationality of (t, u, v) for a given s")
    p.add_argument("--s", required=True)
    p.set_defaults(func=cmd_mt2_check)

    p = sub.add_parser("fixtures", help="list or print the bundled formulas")
    p.add_argument("--name", choices=io.FIXTURE_NAMES)
    p.set_defaults(func=cmd_fixtures)
    return parser


_NEGATIVE_VALUE = re.compile(r"^-[\d.i]")


def _attach_negative_values(argv: list[str]) -> list[str]:
    # argparse refuses values such as "-264/743" after an option
    out: list[str] = []
    it = iter(range(len(argv)))
    for i in it:
        tok = argv[i]
        if (
            tok.startswith("--")
            and "=" not in tok
            and i + 1 < len(argv)
            and _NEGATIVE_VALUE.match(argv[i + 1])
        ):
            out.append(f"{tok}={argv[i + 1]}")
            next(it, None)
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(_attach_negative_values(argv))
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        _note(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
