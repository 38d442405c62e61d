"""Command-line front end.

Results go to stdout as JSON, diagnostics to stderr.  Exit status is 0 on
success, 1 on a domain or input error, 2 when a law suite finds a failure (or
the counterexample unexpectedly reports equality).
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction

from . import codec
from .cone import XI_MAPS, get_xi, hausdorff_oracle, h_inv, k, k_inv, measure_dist
from .convexity import barycenter, check_algebra_laws, hull_member
from .errors import MeasureError, SchemaError
from .functorial import pushforward, section_lift, tensor
from .measures import MaxMinMeasure, MaxPlusMeasure
from .monad import (
    OrderBijectionProbe,
    check_monad_laws,
    counterexample,
    exhaustive_monad_laws,
    flatten,
)
from .scalars import format_scalar, parse_scalar
from .spaces import FiniteSpace, discrete_metric

log = logging.getLogger("idemmeasure")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _num(value):
    """Float-boundary output: 12 significant digits, infinities as strings."""
    if value in (float("inf"), float("-inf")):
        return format_scalar(value)
    return float(f"{float(value):.12g}")


def _float_measure(mu) -> dict:
    out = codec.measure_to_json(mu)
    out["atoms"] = [{"point": codec.label_to_json(p), "weight": _num(w)} for p, w in mu.weights.items()]
    return out


def _rational(text: str) -> Fraction:
    value = parse_scalar(text)
    if not isinstance(value, Fraction):
        raise argparse.ArgumentTypeError(f"expected a finite rational, got {text!r}")
    return value


def _load_measure(path, label=codec.label_from_json):
    return codec.measure_from_json(codec.load(path), "$", label)


def cmd_eval(args):
    mu = _load_measure(args.measure)
    phi = codec.function_from_json(codec.load(args.function), space=mu.space)
    return {"value": format_scalar(mu(phi))}


def cmd_push(args):
    f = codec.map_from_json(codec.load(args.map))
    mu = codec.measure_from_json(codec.load(args.measure), space=f.source)
    return codec.measure_to_json(pushforward(f, mu))


def cmd_tensor(args):
    return codec.measure_to_json(tensor(_load_measure(args.left), _load_measure(args.right)))


def cmd_convert(args):
    xi = get_xi(args.xi)
    mu = _load_measure(args.measure)
    converted = k(mu, xi) if isinstance(mu, MaxPlusMeasure) else k_inv(mu, xi)
    return _float_measure(converted)


def _load_metric(path, space):
    if path is None:
        return discrete_metric(space)
    return codec.metric_from_json(codec.load(path), space)


def cmd_dist(args):
    xi = get_xi(args.xi)
    mu, nu = _load_measure(args.left), _load_measure(args.right)
    if not isinstance(mu, MaxMinMeasure) or not isinstance(nu, MaxMinMeasure):
        raise SchemaError("dist compares max-min measures", "$.kind")
    metric = _load_metric(args.metric, mu.space)
    value = measure_dist(mu, nu, metric, xi)
    out = {"value": _num(value), "exact": format_scalar(value)}
    if args.cross_check:
        oracle = hausdorff_oracle(h_inv(mu, xi, metric), h_inv(nu, xi, metric), args.oracle_step)
        out["oracle"] = _num(oracle)
        out["oracle_step"] = format_scalar(args.oracle_step)
        out["agree"] = abs(oracle - value) <= 2 * args.oracle_step
    return out


def cmd_mul(args):
    return codec.measure_to_json(flatten(_load_measure(args.measure)))


def cmd_lift(args):
    section = codec.section_from_json(codec.load(args.section))
    mu = codec.measure_from_json(codec.load(args.measure), space=section.f.target)
    return codec.measure_to_json(section_lift(mu, section))


def cmd_barycenter(args):
    mu = _load_measure(args.measure, codec.coord_label)
    if not isinstance(mu, MaxMinMeasure):
        raise SchemaError("barycenter needs a max-min measure", "$.kind")
    return {"coords": [format_scalar(c) for c in barycenter(mu)]}


def _load_generators(path):
    raw = codec.load(path)
    if isinstance(raw, dict):
        raw = raw.get("points", raw.get("generators"))
        if raw is None:
            raise SchemaError("expected 'points' or 'generators'", "$")
    if not isinstance(raw, list):
        raise SchemaError("expected a list of points", "$")
    return [
        codec.point_from_json(g, f"$[{i}]") if isinstance(g, dict) else codec.coords_from_json(g, f"$[{i}]")
        for i, g in enumerate(raw)
    ]


def cmd_hull(args):
    gens = _load_generators(args.generators)
    p = codec.point_from_json(codec.load(args.point))
    result = hull_member(gens, p)
    witness = None if result.witness is None else [format_scalar(w) for w in result.witness]
    return {"member": result.member, "witness": witness}


def cmd_laws(args):
    if args.kind == "algebra":
        report = check_algebra_laws(cases=args.cases, seed=args.seed, dim=args.points)
        return report.summary(), (0 if report.ok else 2)
    base = FiniteSpace(tuple(f"x{i}" for i in range(args.points)))
    report = check_monad_laws(args.kind, base, cases=args.cases, seed=args.seed)
    out = {"random": report.summary()}
    ok = report.ok
    if args.exhaustive:
        grid = exhaustive_monad_laws(args.kind, FiniteSpace(("x0", "x1")))
        out["exhaustive"] = grid.summary()
        ok = ok and grid.ok
    out["ok"] = ok
    return out, (0 if ok else 2)


_ALPHAS = {
    "logit-exp": lambda: OrderBijectionProbe.from_xi(get_xi("logit")),
    "tan-exp": lambda: OrderBijectionProbe.from_xi(get_xi("tan")),
}


def cmd_counterexample(args):
    result = counterexample(_ALPHAS[args.alpha](), tol=args.tolerance)
    out = {
        "space": ["a", "b", "c"],
        "alpha": args.alpha,
        "lhs": {p: _num(w) for p, w in result.lhs.weights.items()},
        "rhs": {p: _num(w) for p, w in result.rhs.weights.items()},
        "equal": result.equal,
        "differing": list(result.differing),
    }
    return out, (2 if result.equal else 0)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--xi", choices=sorted(XI_MAPS), default="logit", help="threshold-to-weight map")
    common.add_argument("--tolerance", type=float, default=1e-9,
                        help="tolerance for comparisons across the float boundary")
    common.add_argument("--oracle-step", type=_rational, default=Fraction(1, 1000),
                        help="grid step of the Hausdorff oracle")

    parser = _Parser(prog="idemmeasure", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(fn=fn)
        return p

    p = add("eval", cmd_eval, "evaluate a measure on a function")
    p.add_argument("--measure", required=True)
    p.add_argument("--function", required=True)

    p = add("push", cmd_push, "push a measure forward along a map")
    p.add_argument("--map", required=True)
    p.add_argument("--measure", required=True)

    p = add("tensor", cmd_tensor, "tensor product of two measures")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = add("convert", cmd_convert, "convert between max-plus and max-min measures")
    p.add_argument("--measure", required=True)

    p = add("dist", cmd_dist, "cone Hausdorff distance between max-min measures")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--metric", help="metric descriptor (default: discrete metric)")
    p.add_argument("--cross-check", action="store_true", help="also run the grid oracle")

    p = add("mul", cmd_mul, "flatten a nested measure")
    p.add_argument("--measure", required=True)

    p = add("lift", cmd_lift, "lift a measure along a measure section")
    p.add_argument("--measure", required=True)
    p.add_argument("--section", required=True)

    p = add("barycenter", cmd_barycenter, "barycenter of a measure on coordinate points")
    p.add_argument("--measure", required=True)

    p = add("hull", cmd_hull, "max-min convex hull membership")
    p.add_argument("--generators", required=True)
    p.add_argument("--point", required=True)

    p = add("laws", cmd_laws, "run a seeded law suite")
    p.add_argument("--kind", choices=["max-min", "max-plus", "algebra"], required=True)
    p.add_argument("--cases", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--points", type=int, default=3, help="base space size (dimension for algebra)")
    p.add_argument("--exhaustive", action="store_true", help="also run the exhaustive grid")

    p = add("counterexample", cmd_counterexample, "reproduce the monad non-isomorphism witness")
    p.add_argument("--alpha", choices=sorted(_ALPHAS), default="logit-exp")
    return parser


def main(argv=None) -> int:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("idemmeasure: %(message)s"))
    log.addHandler(handler)
    try:
        try:
            args = build_parser().parse_args(argv)
            if getattr(args, "cases", 1) < 1:
                raise UsageError("--cases must be at least 1")
            if getattr(args, "points", 1) < 1:
                raise UsageError("--points must be at least 1")
        except UsageError as exc:
            print(exc, file=sys.stderr)
            return 1
        try:
            result = args.fn(args)
        except MeasureError as exc:
            print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
            return 1
        code = 0
        if isinstance(result, tuple):
            result, code = result
        print(codec.dumps(result))
        return code
    finally:
        log.removeHandler(handler)


if __name__ == "__main__":
    sys.exit(main())
