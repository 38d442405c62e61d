"""Seeded random instances and exhaustive enumerations for law checking.

All randomness goes through a :class:`random.Random` built from an integer
seed, so a failing case can be replayed from its seed alone.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import NotNormalized
from .measures import MEASURE_KINDS, Measure, TestFunction
from .scalars import NEG_INF, POS_INF
from .spaces import FiniteMap, FiniteMetric, FiniteSpace, validate_metric


def rng_from_seed(seed: int) -> random.Random:
    # Mersenne Twister seeded from the full 64-bit integer; reproducible across platforms
    return random.Random(seed & (2**64 - 1))


def random_rational(rng: random.Random, lo, hi, max_den: int = 4) -> Fraction:
    den = rng.randint(1, max_den)
    lo_n, hi_n = int(Fraction(lo) * den), int(Fraction(hi) * den)
    return Fraction(rng.randint(lo_n, hi_n), den)


def random_space(rng: random.Random, max_points: int = 6, min_points: int = 1, prefix: str = "x") -> FiniteSpace:
    n = rng.randint(min_points, max_points)
    return FiniteSpace(tuple(f"{prefix}{i}" for i in range(n)))


def random_measure(rng: random.Random, space: FiniteSpace, kind: str = "max-min",
                   span=5, p_absent: float = 0.25) -> Measure:
    """Random canonical measure; some atoms absent, one forced to the top weight."""
    cls = MEASURE_KINDS[kind]
    top_point = rng.choice(space.points)
    atoms = {}
    for p in space:
        r = rng.random()
        if p == top_point:
            atoms[p] = cls.TOP
        elif r < p_absent:
            continue
        elif kind == "max-min" and r < p_absent + 0.15:
            atoms[p] = POS_INF
        elif kind == "max-min":
            atoms[p] = random_rational(rng, -span, span)
        else:
            atoms[p] = random_rational(rng, -span, 0)
    return cls(space, atoms)


def random_function(rng: random.Random, space: FiniteSpace, span=10) -> TestFunction:
    return TestFunction(space, [random_rational(rng, -span, span) for _ in space])


def random_map(rng: random.Random, source: FiniteSpace, target: FiniteSpace) -> FiniteMap:
    return FiniteMap(source, target, {x: rng.choice(target.points) for x in source})


def random_metric(rng: random.Random, space: FiniteSpace) -> FiniteMetric:
    """Distances drawn from [1/2, 1]; any such table satisfies the triangle inequality."""
    table = {
        (x, y): Fraction(rng.randint(4, 8), 8) for x, y in itertools.combinations(space.points, 2)
    }
    return validate_metric(space, table)


def distinct_measures(rng: random.Random, space: FiniteSpace, kind: str, count: int,
                      attempts: int = 50) -> list:
    out: dict = {}
    for _ in range(count * attempts):
        out.setdefault(random_measure(rng, space, kind), None)
        if len(out) == count:
            break
    return list(out)


def random_nested(rng: random.Random, base: FiniteSpace, kind: str, depth: int, width: int = 3) -> Measure:
    """A measure of nesting ``depth`` (1 = a measure on ``base``).

    Each level is a random measure on a space of distinct measures from the
    level below, all of which share one space.
    """
    space = base
    for _ in range(depth - 1):
        layer = distinct_measures(rng, space, kind, rng.randint(1, width))
        space = FiniteSpace(tuple(layer))
    return random_measure(rng, space, kind)


def grid_measures(space: FiniteSpace, kind: str, weights: Sequence) -> Iterator[Measure]:
    """Every normalized measure whose weights come from ``weights`` (absence included)."""
    cls = MEASURE_KINDS[kind]
    choices = [NEG_INF] + [w for w in weights if w != NEG_INF]
    for combo in itertools.product(choices, repeat=len(space)):
        try:
            yield cls(space, zip(space.points, combo))
        except NotNormalized:
            continue


def all_maps(source: FiniteSpace, target: FiniteSpace) -> Iterator[FiniteMap]:
    for images in itertools.product(target.points, repeat=len(source)):
        yield FiniteMap(source, target, dict(zip(source.points, images)))
