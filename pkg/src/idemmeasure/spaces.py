"""Finite spaces, maps between them, products and metrics of diameter at most 1.

Point labels are opaque hashable values.  Atoms are usually strings, product
points are pairs, and in iterated constructions the points are measures
themselves.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Hashable, Iterable, Mapping

from .errors import (
    DiameterExceedsOne,
    DuplicateLabel,
    EmptySpace,
    IncompleteMetric,
    MismatchedSpaces,
    NonPositiveDistance,
    NotAMap,
    SymmetryViolation,
    TriangleViolation,
    UnknownPoint,
)
from .scalars import finite

Point = Hashable


@dataclass(frozen=True)
class FiniteSpace:
    points: tuple
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        pts = tuple(self.points)
        if not pts:
            raise EmptySpace("a space needs at least one point")
        index = {}
        for i, p in enumerate(pts):
            if p in index:
                raise DuplicateLabel(f"duplicate label {p!r}")
            index[p] = i
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "_index", index)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return p in self._index

    def index(self, p) -> int:
        try:
            return self._index[p]
        except (KeyError, TypeError):
            raise UnknownPoint(f"{p!r} is not a point of the space") from None

    def same_as(self, other: "FiniteSpace") -> bool:
        return self is other or self.points == other.points


def make_space(labels: Iterable[Point]) -> FiniteSpace:
    return FiniteSpace(tuple(labels))


def require_same(a: FiniteSpace, b: FiniteSpace, what: str = "spaces") -> None:
    if not a.same_as(b):
        raise MismatchedSpaces(f"{what} differ")


@dataclass(frozen=True)
class FiniteMap:
    source: FiniteSpace
    target: FiniteSpace
    assignment: Mapping[Point, Point]

    def __post_init__(self):
        table = {}
        for x in self.source:
            if x not in self.assignment:
                raise NotAMap(f"no image for {x!r}")
            y = self.assignment[x]
            if y not in self.target:
                raise UnknownPoint(f"image {y!r} of {x!r} is outside the target")
            table[x] = y
        if len(self.assignment) != len(table):
            extra = [x for x in self.assignment if x not in self.source]
            raise UnknownPoint(f"assignment mentions non-source points {extra!r}")
        object.__setattr__(self, "assignment", table)

    def __call__(self, x):
        try:
            return self.assignment[x]
        except (KeyError, TypeError):
            raise UnknownPoint(f"{x!r} is not in the source") from None

    def __hash__(self):
        return hash((self.source, self.target, tuple(self.assignment.items())))

    def is_surjective(self) -> bool:
        return set(self.assignment.values()) == set(self.target.points)

    def fiber(self, y) -> list:
        return [x for x in self.source if self.assignment[x] == y]


def map_from(source: FiniteSpace, target: FiniteSpace, fn: Callable[[Any], Any]) -> FiniteMap:
    return FiniteMap(source, target, {x: fn(x) for x in source})


def identity(space: FiniteSpace) -> FiniteMap:
    return FiniteMap(space, space, {x: x for x in space})


def compose(f: FiniteMap, g: FiniteMap) -> FiniteMap:
    """Return ``g ∘ f`` (first ``f``, then ``g``)."""
    if not f.target.same_as(g.source):
        raise MismatchedSpaces("target of the first map is not the source of the second")
    return FiniteMap(f.source, g.target, {x: g.assignment[y] for x, y in f.assignment.items()})


def image_map(source: FiniteSpace, fn: Callable[[Any], Any]) -> FiniteMap:
    """Map ``source`` onto the space of distinct images of ``fn``, in first-seen order."""
    images = {x: fn(x) for x in source}
    target = FiniteSpace(tuple(dict.fromkeys(images.values())))
    return FiniteMap(source, target, images)


def product(X: FiniteSpace, Y: FiniteSpace) -> FiniteSpace:
    return FiniteSpace(tuple(itertools.product(X.points, Y.points)))


def projections(X: FiniteSpace, Y: FiniteSpace) -> tuple[FiniteMap, FiniteMap]:
    XY = product(X, Y)
    return (
        FiniteMap(XY, X, {p: p[0] for p in XY}),
        FiniteMap(XY, Y, {p: p[1] for p in XY}),
    )


def product_map(f: FiniteMap, g: FiniteMap) -> FiniteMap:
    """``f × g`` acting on pairs."""
    src = product(f.source, g.source)
    tgt = product(f.target, g.target)
    return FiniteMap(src, tgt, {(x, y): (f(x), g(y)) for x, y in src})


def associator(X: FiniteSpace, Y: FiniteSpace, Z: FiniteSpace) -> FiniteMap:
    """The relabeling ``((x, y), z) -> (x, (y, z))``."""
    left = product(product(X, Y), Z)
    right = product(X, product(Y, Z))
    return FiniteMap(left, right, {((x, y), z): (x, (y, z)) for (x, y), z in left})


@dataclass(frozen=True)
class FiniteMetric:
    space: FiniteSpace
    table: Mapping[frozenset, Fraction] = field(repr=False)

    def d(self, x, y) -> Fraction:
        if x == y:
            self.space.index(x)
            return Fraction(0)
        try:
            return self.table[frozenset((x, y))]
        except KeyError:
            raise UnknownPoint(f"no distance between {x!r} and {y!r}") from None

    __call__ = d

    def __hash__(self):
        return hash((self.space, frozenset(self.table.items())))

    def diameter(self) -> Fraction:
        return max(self.table.values(), default=Fraction(0))


def validate_metric(space: FiniteSpace, table) -> FiniteMetric:
    """Check a distance table and wrap it as a :class:`FiniteMetric`.

    ``table`` is either a mapping keyed by point pairs or an iterable of
    ``(x, y, d)`` triples.  Every unordered pair of distinct points must be
    listed; a pair listed twice must carry the same value both times.
    """
    items = table.items() if isinstance(table, Mapping) else ((tuple(t[:2]), t[2]) for t in table)
    dist: dict[frozenset, Fraction] = {}
    for (x, y), value in items:
        space.index(x)
        space.index(y)
        v = finite(value)
        if x == y:
            if v != 0:
                raise NonPositiveDistance(f"d({x!r},{x!r}) must be 0")
            continue
        key = frozenset((x, y))
        if key in dist and dist[key] != v:
            raise SymmetryViolation(f"d({x!r},{y!r}) listed with two values")
        if v <= 0:
            raise NonPositiveDistance(f"d({x!r},{y!r}) = {v} is not positive")
        dist[key] = v

    pts = space.points
    for x, y in itertools.combinations(pts, 2):
        if frozenset((x, y)) not in dist:
            raise IncompleteMetric(f"missing distance between {x!r} and {y!r}")

    def d(a, b):
        return Fraction(0) if a == b else dist[frozenset((a, b))]

    for x, y, z in itertools.permutations(pts, 3):
        if d(x, z) > d(x, y) + d(y, z):
            raise TriangleViolation(f"d({x!r},{z!r}) > d({x!r},{y!r}) + d({y!r},{z!r})")
    for key, v in dist.items():
        if v > 1:
            raise DiameterExceedsOne(f"distance {v} between {tuple(key)!r} exceeds 1")
    return FiniteMetric(space, dist)


def discrete_metric(space: FiniteSpace) -> FiniteMetric:
    return FiniteMetric(
        space, {frozenset(p): Fraction(1) for p in itertools.combinations(space.points, 2)}
    )
