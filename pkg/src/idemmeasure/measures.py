"""Finite-support max-min and max-plus measures.

A max-min measure with weights ``λ_x`` evaluates a function by the Sugeno-type
integral ``max_x min(λ_x, φ(x))``; a max-plus measure with weights ``β_x``
evaluates it by the Maslov integral ``max_x (β_x + φ(x))``.  Both are stored in
canonical form: atoms of weight ``-inf`` are dropped, duplicates are merged by
``max`` and atoms are kept in the order of the underlying space.  Canonical
form makes equality of measures decidable, which the monad code relies on when
it uses measures as points of a space.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

from .errors import (
    EmptyProbeSet,
    KindMismatch,
    MismatchedSpaces,
    NoAtoms,
    NonFiniteTranslate,
    NotNormalized,
    OutOfRange,
    WeightAboveZero,
)
from .scalars import (
    NEG_INF,
    POS_INF,
    ExtScalar,
    ext,
    finite,
    format_scalar,
    join,
    meet,
    translate,
)
from .spaces import FiniteSpace, require_same


class TestFunction:
    """A real-valued function on a finite space (values stored in point order)."""

    __slots__ = ("space", "values")
    __test__ = False  # keep pytest from collecting this class

    def __init__(self, space: FiniteSpace, values: Union[Mapping, Sequence]):
        if isinstance(values, Mapping):
            missing = [p for p in space if p not in values]
            if missing:
                raise MismatchedSpaces(f"function undefined at {missing!r}")
            extra = [p for p in values if p not in space]
            if extra:
                raise MismatchedSpaces(f"function defined off the space at {extra!r}")
            vals = tuple(finite(values[p]) for p in space)
        else:
            vals = tuple(finite(v) for v in values)
            if len(vals) != len(space):
                raise MismatchedSpaces("value count does not match the space")
        self.space = space
        self.values = vals

    @classmethod
    def constant(cls, space: FiniteSpace, c) -> "TestFunction":
        return cls(space, [c] * len(space))

    def __call__(self, x) -> Fraction:
        return self.values[self.space.index(x)]

    def items(self):
        return zip(self.space.points, self.values)

    def max(self) -> Fraction:
        return max(self.values)

    def min(self) -> Fraction:
        return min(self.values)

    def compose(self, f) -> "TestFunction":
        """``φ ∘ f`` for a finite map ``f`` into this function's space."""
        require_same(f.target, self.space, "map target and function space")
        return TestFunction(f.source, [self(f(x)) for x in f.source])

    def __eq__(self, other):
        return (
            isinstance(other, TestFunction)
            and self.space.same_as(other.space)
            and self.values == other.values
        )

    def __hash__(self):
        return hash(self.values)

    def __le__(self, other: "TestFunction") -> bool:
        require_same(self.space, other.space)
        return all(a <= b for a, b in zip(self.values, other.values))

    def __repr__(self):
        body = ", ".join(f"{p!r}: {format_scalar(v)}" for p, v in self.items())
        return f"TestFunction({{{body}}})"


class Measure:
    """Shared canonical storage; use :class:`MaxMinMeasure` or :class:`MaxPlusMeasure`."""

    __slots__ = ("space", "weights", "_hash")

    kind: str = ""
    TOP: ExtScalar = POS_INF

    def __init__(self, space: FiniteSpace, atoms: Union[Mapping, Iterable] = ()):
        merged: dict = {}
        pairs = atoms.items() if isinstance(atoms, Mapping) else atoms
        for point, weight in pairs:
            space.index(point)
            w = ext(weight)
            self._check_weight(point, w)
            merged[point] = join(merged.get(point, NEG_INF), w)
        weights = {p: merged[p] for p in space if p in merged and merged[p] != NEG_INF}
        if not merged:
            raise NoAtoms("a measure needs at least one atom")
        top = max(weights.values(), default=NEG_INF)
        if top != self.TOP:
            raise NotNormalized(
                f"largest {self.kind} weight is {format_scalar(top)}, expected {format_scalar(self.TOP)}"
            )
        self.space = space
        self.weights = weights
        self._hash = None

    @classmethod
    def dirac(cls, space: FiniteSpace, x) -> "Measure":
        return cls(space, {x: cls.TOP})

    def _check_weight(self, point, w):
        pass

    def weight(self, x) -> ExtScalar:
        self.space.index(x)
        return self.weights.get(x, NEG_INF)

    def items(self):
        return self.weights.items()

    def support(self) -> frozenset:
        return frozenset(self.weights)

    def evaluate(self, phi: TestFunction) -> Fraction:
        raise NotImplementedError

    __call__ = evaluate

    def with_space(self, space: FiniteSpace) -> "Measure":
        """The same atoms viewed on a space that contains them all."""
        return type(self)(space, self.weights)

    def __eq__(self, other):
        if self is other:
            return True
        return (
            type(self) is type(other)
            and self.weights == other.weights
            and self.space.same_as(other.space)
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.kind, tuple(self.weights.items())))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{p!r}: {format_scalar(w)}" for p, w in self.weights.items())
        return f"{type(self).__name__}({{{body}}})"


class MaxMinMeasure(Measure):
    """``max_i (λ_i ∧ δ_{x_i})`` with weights in (-inf, +inf] and at least one +inf."""

    __slots__ = ()
    kind = "max-min"
    TOP = POS_INF

    def evaluate(self, phi: TestFunction) -> Fraction:
        return eval_maxmin(self, phi)

    __call__ = evaluate


class MaxPlusMeasure(Measure):
    """``max_i (β_i + δ_{x_i})`` with weights in (-inf, 0] and at least one 0."""

    __slots__ = ()
    kind = "max-plus"
    TOP = Fraction(0)

    def _check_weight(self, point, w):
        if w > 0:
            raise WeightAboveZero(f"max-plus weight {format_scalar(w)} at {point!r} exceeds 0")

    def evaluate(self, phi: TestFunction) -> Fraction:
        return eval_maxplus(self, phi)

    __call__ = evaluate


MEASURE_KINDS = {"max-min": MaxMinMeasure, "max-plus": MaxPlusMeasure}


def make_maxmin(space: FiniteSpace, atoms) -> MaxMinMeasure:
    return MaxMinMeasure(space, atoms)


def make_maxplus(space: FiniteSpace, atoms) -> MaxPlusMeasure:
    return MaxPlusMeasure(space, atoms)


def _values(mu: Measure, phi: TestFunction):
    if not mu.space.same_as(phi.space):
        raise MismatchedSpaces("measure and function live on different spaces")
    index = mu.space._index
    vals = phi.values
    return ((w, vals[index[p]]) for p, w in mu.weights.items())


def eval_maxmin(mu: MaxMinMeasure, phi: TestFunction) -> Fraction:
    if not isinstance(mu, MaxMinMeasure):
        raise KindMismatch("eval_maxmin needs a max-min measure")
    best = NEG_INF
    for w, v in _values(mu, phi):
        t = v if v <= w else w
        if t > best:
            best = t
    return best


def eval_maxplus(nu: MaxPlusMeasure, phi: TestFunction) -> Fraction:
    if not isinstance(nu, MaxPlusMeasure):
        raise KindMismatch("eval_maxplus needs a max-plus measure")
    best = NEG_INF
    for w, v in _values(nu, phi):
        # weights are finite (or the atom would be absent) and values are finite
        t = w + v
        if t > best:
            best = t
    return best


def support(mu: Measure) -> frozenset:
    return mu.support()


def combine(mu: MaxMinMeasure, lam, nu: MaxMinMeasure) -> MaxMinMeasure:
    """The max-min convex combination ``μ ∨ (λ ∧ ν)``, computed atomwise."""
    require_same(mu.space, nu.space)
    lam = ext(lam)
    atoms = dict(mu.weights)
    for p, w in nu.weights.items():
        atoms[p] = join(atoms.get(p, NEG_INF), meet(lam, w))
    return MaxMinMeasure(mu.space, atoms)


_OPS = {"join": join, "meet": meet, "translate": translate}


def pointwise(op: Union[str, Callable], phi: TestFunction, arg) -> TestFunction:
    """Apply ``join``/``meet``/``translate`` coordinatewise with a function or a constant."""
    name = op if isinstance(op, str) else getattr(op, "__name__", "")
    fn = _OPS[name] if isinstance(op, str) else op
    if isinstance(arg, TestFunction):
        require_same(phi.space, arg.space)
        others = arg.values
    else:
        c = ext(arg)
        if name == "translate" and c in (POS_INF, NEG_INF):
            raise NonFiniteTranslate("can only translate by a finite constant")
        others = (c,) * len(phi.space)
    return TestFunction(phi.space, [fn(a, b) for a, b in zip(phi.values, others)])


def from_functional(
    oracle: Callable[[TestFunction], ExtScalar], space: FiniteSpace, M, m
) -> MaxMinMeasure:
    """Recover max-min weights by probing ``oracle`` with two-level functions.

    For each point ``x`` the oracle is evaluated on the function equal to ``M``
    at ``x`` and ``m`` elsewhere.  A result of ``M`` means the weight is at
    least ``M`` and is promoted to ``+inf``; a result of ``m`` is promoted to
    ``-inf``.  The caller must choose ``m < M`` so that every finite weight of
    the underlying measure lies strictly between them.
    """
    M, m = finite(M), finite(m)
    if not m < M:
        raise OutOfRange("probe bounds need m < M")
    atoms = []
    for i, x in enumerate(space):
        probe = TestFunction(space, [M if j == i else m for j in range(len(space))])
        r = ext(oracle(probe))
        if r >= M:
            r = POS_INF
        elif r <= m:
            r = NEG_INF
        atoms.append((x, r))
    return MaxMinMeasure(space, atoms)


def weakstar_dist(mu: Measure, nu: Measure, probes: Iterable[TestFunction]) -> Fraction:
    """Largest evaluation gap over a finite probe set."""
    require_same(mu.space, nu.space)
    gaps = [abs(mu(phi) - nu(phi)) for phi in probes]
    if not gaps:
        raise EmptyProbeSet("need at least one probe function")
    return max(gaps)
