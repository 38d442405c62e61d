"""Threshold ("density") representation of measures and the cone Hausdorff metric.

Over a finite metric space a saturated subset of the cone is determined by its
height function ``τ: X -> [0, 1]``; the sets that reach height 1 somewhere are
exactly the :class:`ThresholdFunction` values.  A threshold becomes a max-min
measure through an order isomorphism ``ξ: [0, 1] -> [-inf, inf]`` (weights
``ξ(τ(x))``) and a max-plus measure through ``ln`` (weights ``ln τ(x)``).

The conversions are transcendental, so they are computed in binary floating
point and the result is stored as the exact rational value of that float.
Weights therefore round-trip within about ``1e-9`` as long as finite max-min
weights stay within roughly ``[-15, 15]``; far outside that range the logistic
curve is flat in double precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

import numpy as np

from .errors import MismatchedSpaces, NotReachingTop, OutOfRange
from .measures import MaxMinMeasure, MaxPlusMeasure
from .scalars import NEG_INF, POS_INF, ExtScalar, ext, format_scalar
from .spaces import FiniteMap, FiniteMetric, FiniteSpace, discrete_metric, require_same

ONE = Fraction(1)
ZERO = Fraction(0)
_BELOW_ONE = math.nextafter(1.0, 0.0)
_TINY = math.ulp(0.0)


def _log_ratio(num: int, den: int) -> float:
    # math.log is exact-ish on big ints, which avoids cancellation in 1 - t
    return math.log(num) - math.log(den)


class XiMap:
    """An order isomorphism ``[0, 1] -> [-inf, inf]``.

    Subclasses implement :meth:`forward` and :meth:`inverse` on the open
    interval; the endpoints are fixed here.  :meth:`alpha` is the induced weight
    map from max-plus weights ``[-inf, 0]`` to max-min weights, ``ξ(exp β)``.
    """

    name = "abstract"

    def forward(self, t) -> ExtScalar:
        t = Fraction(t)
        if t < 0 or t > 1:
            raise OutOfRange(f"threshold {t} outside [0, 1]")
        if t == 0:
            return NEG_INF
        if t == 1:
            return POS_INF
        return Fraction(self._forward(t))

    def inverse(self, w) -> Fraction:
        w = ext(w)
        if w == NEG_INF:
            return ZERO
        if w == POS_INF:
            return ONE
        t = self._inverse(w)
        # a finite weight must stay strictly inside (0, 1)
        return Fraction(min(max(t, _TINY), _BELOW_ONE))

    def alpha(self, beta) -> ExtScalar:
        beta = ext(beta)
        if beta > 0:
            raise OutOfRange(f"max-plus weight {format_scalar(beta)} above 0")
        if beta == NEG_INF:
            return NEG_INF
        if beta == 0:
            return POS_INF
        return self.forward(Fraction(min(max(math.exp(beta), _TINY), _BELOW_ONE)))

    def alpha_inv(self, w) -> ExtScalar:
        w = ext(w)
        if w == NEG_INF:
            return NEG_INF
        if w == POS_INF:
            return ZERO
        t = self.inverse(w)
        return Fraction(min(_log_ratio(t.numerator, t.denominator), -_TINY))

    def _forward(self, t: Fraction) -> float:
        raise NotImplementedError

    def _inverse(self, w: Fraction) -> float:
        raise NotImplementedError

    def __repr__(self):
        return f"<XiMap {self.name}>"


class LogitXi(XiMap):
    """``ξ(t) = ln(t / (1 - t))``, the default."""

    name = "logit"

    def _forward(self, t):
        return _log_ratio(t.numerator, t.denominator - t.numerator)

    def _inverse(self, w):
        w = float(w)
        if w >= 0:
            return 1.0 / (1.0 + math.exp(-w))
        e = math.exp(w)
        return e / (1.0 + e)

    # closed forms for ξ(exp β) avoid forming 1 - exp(β) in floating point
    def alpha(self, beta):
        beta = ext(beta)
        if beta > 0:
            raise OutOfRange(f"max-plus weight {format_scalar(beta)} above 0")
        if beta == NEG_INF:
            return NEG_INF
        if beta == 0:
            return POS_INF
        b = float(beta)
        return Fraction(b - math.log(-math.expm1(b)))

    def alpha_inv(self, w):
        w = ext(w)
        if w == NEG_INF:
            return NEG_INF
        if w == POS_INF:
            return ZERO
        x = float(w)
        beta = -math.log1p(math.exp(-x)) if x >= 0 else x - math.log1p(math.exp(x))
        return Fraction(min(beta, -_TINY))


class TanXi(XiMap):
    """``ξ(t) = tan(π (t - 1/2))``."""

    name = "tan"

    # written as -cot(π t) with the short side of t taken exactly, so heights
    # near 0 or 1 do not collapse onto tan(±π/2)
    def _forward(self, t):
        if t == Fraction(1, 2):
            return 0.0
        if t < Fraction(1, 2):
            return -1.0 / math.tan(math.pi * float(t))
        return 1.0 / math.tan(math.pi * float(1 - t))

    def _inverse(self, w):
        w = float(w)
        if w == 0:
            return 0.5
        if w < 0:
            return math.atan(-1.0 / w) / math.pi
        return 1.0 - math.atan(1.0 / w) / math.pi


XI_MAPS = {"logit": LogitXi(), "tan": TanXi()}
LOGIT = XI_MAPS["logit"]


def get_xi(name: str) -> XiMap:
    try:
        return XI_MAPS[name]
    except KeyError:
        raise OutOfRange(f"unknown xi map {name!r}; choose from {sorted(XI_MAPS)}") from None


def _check_height(t) -> Fraction:
    t = Fraction(t)
    if t < 0 or t > 1:
        raise OutOfRange(f"height {t} outside [0, 1]")
    return t


@dataclass(frozen=True)
class ThresholdFunction:
    """A saturated subset of the cone, given by its height at every point."""

    metric: FiniteMetric
    tau: tuple
    _by_point: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        tau = self.tau
        if isinstance(tau, Mapping):
            tau = tuple(tau.get(p, 0) for p in self.metric.space)
        tau = tuple(_check_height(t) for t in tau)
        if len(tau) != len(self.metric.space):
            raise MismatchedSpaces("threshold length does not match the space")
        if max(tau) != 1:
            raise NotReachingTop("a threshold must reach height 1 somewhere")
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "_by_point", dict(zip(self.metric.space.points, tau)))

    @property
    def space(self) -> FiniteSpace:
        return self.metric.space

    def __call__(self, x) -> Fraction:
        self.space.index(x)
        return self._by_point[x]

    def items(self):
        return self._by_point.items()


def _as_metric(metric_or_space) -> FiniteMetric:
    if isinstance(metric_or_space, FiniteMetric):
        return metric_or_space
    return discrete_metric(metric_or_space)


def saturate(metric_or_space, pairs) -> ThresholdFunction:
    """Smallest saturated set containing the listed ``(point, height)`` pairs."""
    metric = _as_metric(metric_or_space)
    tau = {p: ZERO for p in metric.space}
    for point, t in pairs:
        metric.space.index(point)
        t = _check_height(t)
        if t > tau[point]:
            tau[point] = t
    return ThresholdFunction(metric, tau)


def h(A: ThresholdFunction, xi: XiMap = LOGIT) -> MaxMinMeasure:
    return MaxMinMeasure(A.space, {x: xi.forward(t) for x, t in A.items() if t > 0})


def h_inv(mu: MaxMinMeasure, xi: XiMap = LOGIT, metric: Optional[FiniteMetric] = None) -> ThresholdFunction:
    metric = metric or discrete_metric(mu.space)
    require_same(metric.space, mu.space, "metric space and measure space")
    return ThresholdFunction(metric, {x: xi.inverse(w) for x, w in mu.weights.items()})


def g(A: ThresholdFunction) -> MaxPlusMeasure:
    atoms = {}
    for x, t in A.items():
        if t == 1:
            atoms[x] = ZERO
        elif t > 0:
            atoms[x] = Fraction(_log_ratio(t.numerator, t.denominator))
    return MaxPlusMeasure(A.space, atoms)


def g_inv(nu: MaxPlusMeasure, metric: Optional[FiniteMetric] = None) -> ThresholdFunction:
    metric = metric or discrete_metric(nu.space)
    require_same(metric.space, nu.space, "metric space and measure space")
    tau = {}
    for x, w in nu.weights.items():
        tau[x] = ONE if w == 0 else Fraction(min(max(math.exp(w), _TINY), _BELOW_ONE))
    return ThresholdFunction(metric, tau)


def k(nu: MaxPlusMeasure, xi: XiMap = LOGIT) -> MaxMinMeasure:
    """The functor isomorphism from max-plus to max-min measures (``h ∘ g⁻¹``)."""
    return MaxMinMeasure(nu.space, {x: xi.alpha(b) for x, b in nu.weights.items()})


def k_inv(mu: MaxMinMeasure, xi: XiMap = LOGIT) -> MaxPlusMeasure:
    return MaxPlusMeasure(mu.space, {x: xi.alpha_inv(w) for x, w in mu.weights.items()})


def threshold_pushforward(f: FiniteMap, A: ThresholdFunction, metric: Optional[FiniteMetric] = None) -> ThresholdFunction:
    """Image of a saturated set: the height at ``y`` is the max over its fiber."""
    require_same(f.source, A.space, "map source and threshold space")
    metric = metric or discrete_metric(f.target)
    require_same(metric.space, f.target, "metric space and map target")
    tau = {y: ZERO for y in f.target}
    for x, t in A.items():
        y = f(x)
        if t > tau[y]:
            tau[y] = t
    return ThresholdFunction(metric, tau)


def cone_dist(p, q, metric: FiniteMetric) -> Fraction:
    """``min(s, t) d(x, y) + |s - t|`` between cone points ``(x, s)`` and ``(y, t)``."""
    (x, s), (y, t) = p, q
    s, t = _check_height(s), _check_height(t)
    return min(s, t) * metric.d(x, y) + abs(s - t)


def directed_dist(A: ThresholdFunction, B: ThresholdFunction) -> Fraction:
    """``sup_{a in A} dist(a, B)``.

    Against the column over ``y`` the nearest height to ``(x, s)`` is
    ``min(s, τ_B(y))`` because ``d <= 1``, and the resulting cost grows with
    ``s``; so only the tops ``(x, τ_A(x))`` of the columns of ``A`` matter.
    """
    if A.metric != B.metric:
        raise MismatchedSpaces("thresholds live on different metric spaces")
    d = A.metric.d
    worst = ZERO
    for x, s in A.items():
        if s == 0:
            continue
        best = None
        for y, t in B.items():
            cost = min(s, t) * d(x, y) + (s - t if s > t else ZERO)
            if best is None or cost < best:
                best = cost
                if best == 0:
                    break
        if best > worst:
            worst = best
    return worst


def hausdorff_dist(A: ThresholdFunction, B: ThresholdFunction) -> Fraction:
    return max(directed_dist(A, B), directed_dist(B, A))


def _grid(A: ThresholdFunction, step: Fraction):
    idx, heights = [], []
    for i, t in enumerate(A.tau):
        n = int(t // step)
        idx.extend([i] * (n + 1))
        heights.extend(float(j * step) for j in range(n + 1))
    return np.asarray(idx), np.asarray(heights)


def _grid_directed(src, tgt, D: np.ndarray, chunk: int = 256) -> float:
    si, sh = src
    ti, th = tgt
    worst = 0.0
    for lo in range(0, len(si), chunk):
        s = sh[lo:lo + chunk, None]
        cost = np.minimum(s, th[None, :]) * D[si[lo:lo + chunk]][:, ti] + np.abs(s - th[None, :])
        worst = max(worst, float(cost.min(axis=1).max()))
    return worst


def hausdorff_oracle(A: ThresholdFunction, B: ThresholdFunction, step=Fraction(1, 1000)) -> Fraction:
    """Brute-force Hausdorff distance between grid discretizations of ``A`` and ``B``.

    Each column is replaced by the heights ``0, step, 2 step, ...`` below its
    top, and the finite-set Hausdorff distance is taken under the cone metric.
    Each discretization lies within ``step`` of its set, so the result is
    within ``2 step`` of the exact distance.
    """
    step = Fraction(step)
    if not 0 < step <= Fraction(1, 10):
        raise OutOfRange("oracle step must lie in (0, 1/10]")
    if A.metric != B.metric:
        raise MismatchedSpaces("thresholds live on different metric spaces")
    pts = A.space.points
    D = np.array([[float(A.metric.d(x, y)) for y in pts] for x in pts])
    ga, gb = _grid(A, step), _grid(B, step)
    return Fraction(max(_grid_directed(ga, gb, D), _grid_directed(gb, ga, D)))


def measure_dist(mu: MaxMinMeasure, nu: MaxMinMeasure, metric: Optional[FiniteMetric] = None,
                 xi: XiMap = LOGIT) -> Fraction:
    """Distance between max-min measures through their threshold sets."""
    require_same(mu.space, nu.space)
    metric = metric or discrete_metric(mu.space)
    return hausdorff_dist(h_inv(mu, xi, metric), h_inv(nu, xi, metric))
