"""Units and multiplications of the max-min and max-plus measure monads.

A nested measure is an ordinary measure whose points are measures.  All inner
measures must be of one kind and live on one common base space, so that the
multiplication (``flatten``) lands on that base space.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .cone import LOGIT, XiMap
from .errors import KindMismatch, MismatchedSpaces, NotStrictlyIncreasing
from .functorial import pushforward
from .measures import MEASURE_KINDS, MaxMinMeasure, MaxPlusMeasure, Measure, TestFunction
from .sampling import distinct_measures, grid_measures, random_measure, rng_from_seed
from .scalars import NEG_INF, POS_INF, ExtScalar, ext, format_scalar
from .spaces import FiniteSpace, image_map

DEFAULT_TOLERANCE = 1e-9


def unit(x, space: FiniteSpace, kind: str = "max-min") -> Measure:
    """The Dirac measure at ``x``."""
    cls = MEASURE_KINDS[kind]
    space.index(x)
    return cls(space, {x: cls.TOP})


def bar(phi: TestFunction, measures: FiniteSpace) -> TestFunction:
    """The function ``μ -> μ(φ)`` on a space of measures."""
    values = []
    for mu in measures:
        if not isinstance(mu, Measure) or not mu.space.same_as(phi.space):
            raise MismatchedSpaces("every point must be a measure on the function's space")
        values.append(mu(phi))
    return TestFunction(measures, values)


def base_space(M: Measure, kind: Optional[str] = None) -> FiniteSpace:
    """Validate that ``M`` is a nested measure and return the inner measures' common space."""
    inner = M.space.points
    kind = kind or M.kind
    base = None
    for mu in inner:
        if not isinstance(mu, Measure):
            raise KindMismatch(f"point {mu!r} is not a measure")
        if mu.kind != kind:
            raise KindMismatch(f"inner {mu.kind} measure inside a {kind} nesting")
        if base is None:
            base = mu.space
        elif not mu.space.same_as(base):
            raise MismatchedSpaces("inner measures live on different spaces")
    return base


def flatten_maxmin(M: MaxMinMeasure) -> MaxMinMeasure:
    """``max_i (α_i ∧ μ_i)`` for ``M = max_i (α_i ∧ δ_{μ_i})``."""
    if not isinstance(M, MaxMinMeasure):
        raise KindMismatch("flatten_maxmin needs a max-min outer measure")
    base = base_space(M, "max-min")
    atoms: dict = {}
    for mu, alpha in M.weights.items():
        for x, w in mu.weights.items():
            v = w if w <= alpha else alpha
            if v > atoms.get(x, NEG_INF):
                atoms[x] = v
    return MaxMinMeasure(base, atoms)


def flatten_maxplus(M: MaxPlusMeasure) -> MaxPlusMeasure:
    """``max_i (β_i + μ_i)`` for ``M = max_i (β_i + δ_{μ_i})``."""
    if not isinstance(M, MaxPlusMeasure):
        raise KindMismatch("flatten_maxplus needs a max-plus outer measure")
    base = base_space(M, "max-plus")
    atoms: dict = {}
    for mu, beta in M.weights.items():
        for x, w in mu.weights.items():
            v = beta + w
            if v > atoms.get(x, NEG_INF):
                atoms[x] = v
    return MaxPlusMeasure(base, atoms)


def flatten(M: Measure) -> Measure:
    if isinstance(M, MaxPlusMeasure):
        return flatten_maxplus(M)
    return flatten_maxmin(M)


def map_nested(transform: Callable[[Measure], Measure], M: Measure) -> Measure:
    """Push the outer measure forward along ``transform`` applied to each inner measure."""
    return pushforward(image_map(M.space, transform), M)


def transfer_weights(mu: Measure, fn: Callable[[ExtScalar], ExtScalar], kind: str = "max-min") -> Measure:
    """Same atoms, weights sent through ``fn``, read as a measure of ``kind``."""
    return MEASURE_KINDS[kind](mu.space, {p: fn(w) for p, w in mu.weights.items()})


@dataclass(frozen=True)
class OrderBijectionProbe:
    """An increasing bijection ``[-inf, 0] -> [-inf, inf]``, checked on a probe grid."""

    fn: Callable[[ExtScalar], ExtScalar]
    grid: tuple = field(
        default=tuple(-Fraction(50) * Fraction(9, 10) ** i for i in range(120)), repr=False
    )

    def __post_init__(self):
        if self.fn(NEG_INF) != NEG_INF or self.fn(Fraction(0)) != POS_INF:
            raise NotStrictlyIncreasing("endpoints must map -inf -> -inf and 0 -> inf")
        values = [self.fn(b) for b in sorted(self.grid)]
        if any(isinstance(v, float) for v in values):
            raise NotStrictlyIncreasing("interior points must map to finite values")
        if any(a >= b for a, b in zip(values, values[1:])):
            raise NotStrictlyIncreasing("map is not strictly increasing on the probe grid")

    def __call__(self, beta) -> ExtScalar:
        return self.fn(ext(beta))

    @classmethod
    def from_xi(cls, xi: XiMap = LOGIT) -> "OrderBijectionProbe":
        return cls(xi.alpha)


def weights_close(mu: Measure, nu: Measure, tol: float = DEFAULT_TOLERANCE) -> list:
    """Points where the two measures' weights differ by more than ``tol``."""
    if not mu.space.same_as(nu.space):
        raise MismatchedSpaces("measures live on different spaces")
    bad = []
    for p in mu.space:
        a, b = mu.weights.get(p, NEG_INF), nu.weights.get(p, NEG_INF)
        if isinstance(a, Fraction) and isinstance(b, Fraction):
            if abs(float(a - b)) > tol:
                bad.append(p)
        elif a != b:
            bad.append(p)
    return bad


@dataclass(frozen=True)
class CounterexampleResult:
    lhs: MaxMinMeasure
    rhs: MaxMinMeasure
    equal: bool
    differing: tuple

    def describe(self) -> dict:
        return {
            "lhs": {p: format_scalar(w) for p, w in self.lhs.weights.items()},
            "rhs": {p: format_scalar(w) for p, w in self.rhs.weights.items()},
            "equal": self.equal,
            "differing": list(self.differing),
        }


def counterexample(alpha: Optional[OrderBijectionProbe] = None,
                   tol: float = DEFAULT_TOLERANCE) -> CounterexampleResult:
    """Compare both legs of the would-be monad morphism square on three points.

    ``M = ((-1) + δ_μ) ∨ δ_ν`` with ``μ = ((-2) + δ_a) ∨ δ_b`` and
    ``ν = ((-3) + δ_b) ∨ δ_c``.  The left leg multiplies first and then
    converts; the right leg converts the outer and inner measures first and
    then multiplies.  Any strictly increasing weight map makes them disagree
    at ``a``.
    """
    if alpha is None:
        alpha = OrderBijectionProbe.from_xi(LOGIT)
    elif not isinstance(alpha, OrderBijectionProbe):
        alpha = OrderBijectionProbe(alpha)
    X = FiniteSpace(("a", "b", "c"))
    mu = MaxPlusMeasure(X, {"a": -2, "b": 0})
    nu = MaxPlusMeasure(X, {"b": -3, "c": 0})
    M = MaxPlusMeasure(FiniteSpace((mu, nu)), {mu: -1, nu: 0})

    def k_alpha(m):
        return transfer_weights(m, alpha, "max-min")

    lhs = k_alpha(flatten_maxplus(M))
    rhs = flatten_maxmin(map_nested(k_alpha, k_alpha(M)))
    differing = tuple(weights_close(lhs, rhs, tol))
    return CounterexampleResult(lhs, rhs, not differing, differing)


@dataclass
class LawReport:
    kind: str
    cases: int = 0
    checks: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, law: str, passed: bool, **context):
        self.checks[law] = self.checks.get(law, 0) + 1
        if not passed:
            self.failures.append({"law": law, **context})

    def summary(self) -> dict:
        return {"kind": self.kind, "cases": self.cases, "checks": dict(self.checks),
                "failures": [{k: str(v) for k, v in f.items()} for f in self.failures],
                "ok": self.ok}


def _unit_laws(report: LawReport, mu: Measure, **context):
    kind = mu.kind
    outer_unit = unit(mu, FiniteSpace((mu,)), kind)
    report.record("left unit", flatten(outer_unit) == mu, measure=mu, **context)
    inner_units = map_nested(lambda x: unit(x, mu.space, kind), mu)
    report.record("right unit", flatten(inner_units) == mu, measure=mu, **context)


def _associativity(report: LawReport, M3: Measure, **context):
    lhs = flatten(flatten(M3))
    rhs = flatten(map_nested(flatten, M3))
    report.record("associativity", lhs == rhs, nested=M3, **context)


def check_monad_laws(kind: str, base: FiniteSpace, sampler=None, cases: int = 500,
                     seed: int = 0, width: int = 3) -> LawReport:
    """Check both unit laws and associativity on ``cases`` seeded random instances.

    ``sampler(rng, space, kind)`` draws one measure; the default draws random
    canonical measures.  Each case builds a triple nesting over ``base``.
    """
    sampler = sampler or random_measure
    report = LawReport(kind)
    for case in range(cases):
        rng = rng_from_seed(seed * 1_000_003 + case)
        layer1 = _distinct(rng, sampler, base, kind, rng.randint(1, width))
        S1 = FiniteSpace(tuple(layer1))
        layer2 = _distinct(rng, sampler, S1, kind, rng.randint(1, width))
        S2 = FiniteSpace(tuple(layer2))
        M3 = sampler(rng, S2, kind)
        _unit_laws(report, layer1[0], case=case)
        _unit_laws(report, layer2[0], case=case)
        _associativity(report, M3, case=case)
        report.cases += 1
    return report


def _distinct(rng, sampler, space, kind, count, attempts=50):
    if sampler is random_measure:
        return distinct_measures(rng, space, kind, count, attempts)
    out: dict = {}
    for _ in range(count * attempts):
        out.setdefault(sampler(rng, space, kind), None)
        if len(out) == count:
            break
    return list(out)


def exhaustive_monad_laws(kind: str, base: FiniteSpace, weights=None) -> LawReport:
    """Unit laws on every grid measure and associativity on every grid triple nesting.

    Level-one measures are all grid measures on ``base``; second-level measures
    are grid measures on every pair of level-one measures, and third-level
    measures are grid measures on every pair of those sharing a space.
    """
    if weights is None:
        weights = (-1, 0, POS_INF) if kind == "max-min" else (-1, 0)
    weights = [ext(w) for w in weights]
    report = LawReport(kind)
    level1 = list(grid_measures(base, kind, weights))
    for mu in level1:
        _unit_laws(report, mu)
        report.cases += 1
    for pair in itertools.combinations(level1, 2):
        S1 = FiniteSpace(pair)
        level2 = list(grid_measures(S1, kind, weights))
        for M in level2:
            _unit_laws(report, M)
        for pair2 in itertools.combinations(level2, 2):
            S2 = FiniteSpace(pair2)
            for M3 in grid_measures(S2, kind, weights):
                _associativity(report, M3)
                report.cases += 1
    return report
