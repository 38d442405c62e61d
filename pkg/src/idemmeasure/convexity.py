"""Max-min convex combinations in coordinate space and the barycenter map."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import DimensionMismatch, NotNormalized
from .functorial import pushforward
from .measures import MaxMinMeasure
from .monad import flatten_maxmin, unit
from .sampling import random_measure, rng_from_seed, random_rational
from .scalars import POS_INF, ExtScalar, ext, finite, join_all, meet, meet_all
from .spaces import FiniteSpace, image_map

CoordPoint = tuple


def coord_point(coords) -> CoordPoint:
    return tuple(finite(c) for c in coords)


def _dim(points: Sequence[CoordPoint]) -> int:
    dims = {len(p) for p in points}
    if len(dims) > 1:
        raise DimensionMismatch(f"points of dimensions {sorted(dims)}")
    return dims.pop() if dims else 0


def mm_combine(x: CoordPoint, lam, y: CoordPoint) -> CoordPoint:
    """``x ∨ (λ ∧ y)`` coordinatewise."""
    _dim([x, y])
    lam = ext(lam)
    return tuple(a if a >= meet(lam, b) else meet(lam, b) for a, b in zip(x, y))


def mm_combination(points: Sequence[CoordPoint], lams: Sequence) -> CoordPoint:
    """``max_i (λ_i ∧ x_i)`` with ``max_i λ_i = +inf``."""
    if len(points) != len(lams):
        raise DimensionMismatch("one coefficient per point is required")
    n = _dim(points)
    lams = [ext(l) for l in lams]
    if join_all(lams) != POS_INF:
        raise NotNormalized("the largest coefficient must be +inf")
    return tuple(
        join_all(meet(l, p[k]) for l, p in zip(lams, points)) for k in range(n)
    )


def _residual(a, b) -> ExtScalar:
    # largest λ with λ ∧ a <= b
    return POS_INF if a <= b else b


@dataclass(frozen=True)
class HullResult:
    member: bool
    witness: Optional[tuple] = None


def hull_member(generators: Sequence[CoordPoint], p: CoordPoint) -> HullResult:
    """Decide whether ``p`` is a max-min convex combination of ``generators``.

    The greatest coefficient vector keeping every term below ``p`` is computed
    by residuation; ``p`` is in the hull exactly when that vector reproduces
    ``p`` and still contains a ``+inf`` coefficient.
    """
    if not generators:
        raise DimensionMismatch("need at least one generator")
    _dim(list(generators) + [p])
    lams = tuple(meet_all(_residual(a, b) for a, b in zip(x, p)) for x in generators)
    if join_all(lams) != POS_INF:
        return HullResult(False)
    if mm_combination(generators, lams) != tuple(p):
        return HullResult(False)
    return HullResult(True, lams)


def barycenter(mu: MaxMinMeasure) -> CoordPoint:
    """Coordinatewise integral: coordinate ``k`` is ``μ(p_k)``."""
    n = _dim(mu.space.points)
    return tuple(
        join_all(meet(w, x[k]) for x, w in mu.weights.items()) for k in range(n)
    )


@dataclass
class AlgebraReport:
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
        return {"cases": self.cases, "checks": dict(self.checks),
                "failures": [{k: str(v) for k, v in f.items()} for f in self.failures],
                "ok": self.ok}


def random_points(rng, count: int, dim: int, span=5) -> list:
    out: dict = {}
    while len(out) < count:
        out.setdefault(tuple(random_rational(rng, -span, span) for _ in range(dim)), None)
    return list(out)


def check_algebra_laws(points: Optional[Sequence[CoordPoint]] = None, sampler=None,
                       cases: int = 200, seed: int = 0, dim: int = 3) -> AlgebraReport:
    """Check ``barycenter ∘ unit = id`` and ``barycenter ∘ flatten = barycenter ∘ J(barycenter)``.

    Without ``points`` each case draws a fresh set of up to five points in
    ``dim`` dimensions.  ``sampler(rng, space, kind)`` draws the measures.
    """
    sampler = sampler or random_measure
    report = AlgebraReport()
    for case in range(cases):
        rng = rng_from_seed(seed * 1_000_003 + case)
        pts = list(points) if points is not None else random_points(rng, rng.randint(1, 5), dim)
        A = FiniteSpace(tuple(pts))
        for x in pts:
            report.record("unit", barycenter(unit(x, A)) == x, point=x, case=case)
        inner: dict = {}
        for _ in range(rng.randint(1, 4)):
            inner.setdefault(sampler(rng, A, "max-min"), None)
        M = sampler(rng, FiniteSpace(tuple(inner)), "max-min")
        lhs = barycenter(flatten_maxmin(M))
        rhs = barycenter(pushforward(image_map(M.space, barycenter), M))
        report.record("multiplication", lhs == rhs, nested=M, case=case)
        mu = next(iter(inner))
        report.record("in hull", hull_member([x for x in A if x in mu.weights], barycenter(mu)).member,
                      measure=mu, case=case)
        report.cases += 1
    return report
