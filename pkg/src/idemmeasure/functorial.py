"""Pushforwards, tensor products, averaging along a section, and section lifts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import InvalidSection, KindMismatch, MismatchedSpaces
from .measures import MaxMinMeasure, MaxPlusMeasure, Measure, TestFunction, eval_maxmin
from .scalars import NEG_INF, join, meet
from .spaces import FiniteMap, FiniteSpace, product, require_same


def pushforward(f: FiniteMap, mu: Measure) -> Measure:
    """Image measure: the weight at ``y`` is the max of the weights over the fiber of ``y``."""
    if not f.source.same_as(mu.space):
        raise MismatchedSpaces("map source is not the measure's space")
    assignment = f.assignment
    out: dict = {}
    for x, w in mu.weights.items():
        y = assignment[x]
        prev = out.get(y, NEG_INF)
        out[y] = w if w > prev else prev
    return type(mu)(f.target, out)


def _tensor(mu: Measure, nu: Measure, op) -> tuple[FiniteSpace, dict]:
    XY = product(mu.space, nu.space)
    atoms = {}
    for x, a in mu.weights.items():
        for y, b in nu.weights.items():
            atoms[(x, y)] = op(a, b)
    return XY, atoms


def tensor_maxmin(mu: MaxMinMeasure, nu: MaxMinMeasure) -> MaxMinMeasure:
    if not (isinstance(mu, MaxMinMeasure) and isinstance(nu, MaxMinMeasure)):
        raise KindMismatch("tensor_maxmin needs two max-min measures")
    return MaxMinMeasure(*_tensor(mu, nu, meet))


def tensor_maxplus(mu: MaxPlusMeasure, nu: MaxPlusMeasure) -> MaxPlusMeasure:
    if not (isinstance(mu, MaxPlusMeasure) and isinstance(nu, MaxPlusMeasure)):
        raise KindMismatch("tensor_maxplus needs two max-plus measures")
    # both weights are finite here, so plain addition is the extended sum
    return MaxPlusMeasure(*_tensor(mu, nu, lambda a, b: a + b))


def tensor(mu: Measure, nu: Measure) -> Measure:
    if isinstance(mu, MaxPlusMeasure):
        return tensor_maxplus(mu, nu)
    return tensor_maxmin(mu, nu)


@dataclass(frozen=True)
class MeasureSection:
    """A surjection ``f: Z -> X`` with a max-min measure ``s(x)`` on each fiber."""

    f: FiniteMap
    s: Mapping

    def __post_init__(self):
        f = self.f
        if not f.is_surjective():
            raise InvalidSection("the map must be onto")
        missing = [x for x in f.target if x not in self.s]
        if missing:
            raise InvalidSection(f"no section measure for {missing!r}")
        for x in f.target:
            m = self.s[x]
            if not isinstance(m, MaxMinMeasure):
                raise InvalidSection(f"section value at {x!r} is not a max-min measure")
            require_same(m.space, f.source, "section measure space and map source")
            stray = [z for z in m.weights if f(z) != x]
            if stray:
                raise InvalidSection(f"s({x!r}) charges points {stray!r} outside its fiber")

    def __hash__(self):
        return hash((self.f, tuple(self.s[x] for x in self.f.target)))


def average(section: MeasureSection, phi: TestFunction) -> TestFunction:
    """The function ``x -> s(x)(φ)`` on the base."""
    require_same(phi.space, section.f.source, "function space and section source")
    base = section.f.target
    return TestFunction(base, [eval_maxmin(section.s[x], phi) for x in base])


def section_lift(mu: MaxMinMeasure, section: MeasureSection) -> MaxMinMeasure:
    """A preimage of ``μ`` under ``J(f)``: the combination ``max_x (μ_x ∧ s(x))``."""
    f = section.f
    require_same(mu.space, f.target, "measure space and section base")
    atoms: dict = {}
    for x, lam in mu.weights.items():
        for z, w in section.s[x].weights.items():
            atoms[z] = join(atoms.get(z, NEG_INF), meet(lam, w))
    nu = MaxMinMeasure(f.source, atoms)
    if pushforward(f, nu) != mu:
        raise AssertionError("section lift failed to be a right inverse")
    return nu
