"""Flat spacetime of dimension d >= 2 with signature (+, -, ..., -).

Coordinate 0 is time and the future is the direction of increasing time.
Scalars are ``fractions.Fraction`` in exact mode and ``float`` in float
mode; every predicate here is exact in exact mode, so a pair on the light
cone is decided without any tolerance.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class NumericMode:
    kind: str = "exact"
    null_tolerance: float = 0.0

    def __post_init__(self):
        if self.kind not in ("exact", "float"):
            raise ValueError(f"unknown numeric mode {self.kind!r}")
        if self.kind == "exact" and self.null_tolerance != 0:
            raise ValueError("exact mode takes no null tolerance")
        if self.kind == "float" and not self.null_tolerance > 0:
            raise ValueError("float mode needs a positive null tolerance")

    @classmethod
    def approx(cls, tol: float = 1e-9) -> "NumericMode":
        return cls("float", float(tol))

    @property
    def exact(self) -> bool:
        return self.kind == "exact"


EXACT = NumericMode()


def to_scalar(value, mode: NumericMode = EXACT):
    """Coerce ``value`` to the scalar type of ``mode``.

    Strings of the form ``"p/q"`` are read as exact rationals.  Floats are
    converted to the rational they represent, bit for bit, in exact mode.
    """
    if mode.exact:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, float) and not math.isfinite(value):
            raise ValueError(f"non-finite coordinate {value!r}")
        return Fraction(value)
    return float(Fraction(value)) if isinstance(value, str) else float(value)


@dataclass(frozen=True)
class Event:
    coords: tuple
    id: int | None = field(default=None, compare=False)

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def time(self):
        return self.coords[0]

    def same_point(self, other: "Event") -> bool:
        return self.coords == other.coords


def event(coords: Sequence, mode: NumericMode = EXACT, id: int | None = None) -> Event:
    coords = tuple(to_scalar(c, mode) for c in coords)
    if len(coords) < 2:
        raise DimensionError("spacetime dimension must be at least 2")
    return Event(coords, id)


def _check_dims(*vectors):
    dims = {len(v) for v in vectors}
    if len(dims) != 1:
        raise DimensionError(f"dimension mismatch: {sorted(dims)}")
    (d,) = dims
    if d < 2:
        raise DimensionError("spacetime dimension must be at least 2")
    return d


def _coords(p):
    return p.coords if isinstance(p, Event) else tuple(p)


def quadratic_form(v: Sequence, dim: int | None = None):
    """Minkowski interval ``v0**2 - sum(vi**2)`` of a d-vector."""
    v = _coords(v)
    if dim is not None and len(v) != dim:
        raise DimensionError(f"expected a {dim}-vector, got length {len(v)}")
    _check_dims(v)
    return v[0] * v[0] - sum(c * c for c in v[1:])


def squared_distance(x, y):
    x, y = _coords(x), _coords(y)
    _check_dims(x, y)
    return sum((b - a) * (b - a) for a, b in zip(x, y))


class ConeClass(str, enum.Enum):
    EQUAL = "Equal"
    TIMELIKE_FUTURE = "TimelikeFuture"
    TIMELIKE_PAST = "TimelikePast"
    NULL_FUTURE = "NullFuture"
    NULL_PAST = "NullPast"
    SPACELIKE = "Spacelike"

    @property
    def timelike(self) -> bool:
        return self in (ConeClass.TIMELIKE_FUTURE, ConeClass.TIMELIKE_PAST)

    @property
    def null(self) -> bool:
        return self in (ConeClass.NULL_FUTURE, ConeClass.NULL_PAST)

    def reversed(self) -> "ConeClass":
        return _REVERSED[self]


_REVERSED = {
    ConeClass.EQUAL: ConeClass.EQUAL,
    ConeClass.SPACELIKE: ConeClass.SPACELIKE,
    ConeClass.TIMELIKE_FUTURE: ConeClass.TIMELIKE_PAST,
    ConeClass.TIMELIKE_PAST: ConeClass.TIMELIKE_FUTURE,
    ConeClass.NULL_FUTURE: ConeClass.NULL_PAST,
    ConeClass.NULL_PAST: ConeClass.NULL_FUTURE,
}


def classify_delta(delta: Sequence, mode: NumericMode = EXACT) -> ConeClass:
    """Cone class of the displacement ``delta`` = y - x."""
    delta = tuple(delta)
    _check_dims(delta)
    norm2 = sum(c * c for c in delta)
    if norm2 == 0:
        return ConeClass.EQUAL
    q = quadratic_form(delta)
    if mode.exact:
        on_cone = q == 0
    else:
        # relative band; a null vector has |Q| <= tol * |delta|^2
        on_cone = abs(q) <= mode.null_tolerance * norm2
    if on_cone:
        return ConeClass.NULL_FUTURE if delta[0] > 0 else ConeClass.NULL_PAST
    if q > 0:
        return ConeClass.TIMELIKE_FUTURE if delta[0] > 0 else ConeClass.TIMELIKE_PAST
    return ConeClass.SPACELIKE


def classify_pair(x, y, mode: NumericMode = EXACT) -> ConeClass:
    x, y = _coords(x), _coords(y)
    _check_dims(x, y)
    return classify_delta([b - a for a, b in zip(x, y)], mode)


def euclidean_ball_contains(x, epsilon, y) -> bool:
    """Open Euclidean ball of radius ``epsilon`` about ``x``."""
    if not epsilon > 0:
        raise ValueError(f"epsilon must be positive, got {epsilon!r}")
    return squared_distance(x, y) < epsilon * epsilon


# --------------------------------------------------------------------------
# space-cone partition


class Side(str, enum.Enum):
    POSITIVE = "Positive"
    NEGATIVE = "Negative"


def _dot(a, b):
    return sum(p * q for p, q in zip(a, b))


def _rank(vectors) -> int:
    rows = [[Fraction(c) for c in v] for v in vectors]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(rank + 1, len(rows)):
            f = rows[r][col] / rows[rank][col]
            rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def complete_basis(direction: Sequence) -> tuple:
    """Orthogonal (unnormalised) basis of space whose first vector is ``direction``.

    Gram-Schmidt against the standard basis, so rational input stays rational.
    """
    direction = [c if isinstance(c, float) else Fraction(c) for c in direction]
    n = len(direction)
    zero = direction[0] * 0
    basis = [tuple(direction)]
    for k in range(n):
        v = [zero + (1 if i == k else 0) for i in range(n)]
        for b in basis:
            bb = _dot(b, b)
            c = _dot(v, b) / bb
            v = [vi - c * bi for vi, bi in zip(v, b)]
        if any(vi != 0 for vi in v) and (not isinstance(v[0], float) or _dot(v, v) > 1e-24):
            basis.append(tuple(v))
        if len(basis) == n:
            break
    return tuple(basis)


@dataclass(frozen=True)
class PartitionFrame:
    """Hyperplane data that splits each space cone into S+ and S-.

    ``direction`` is the spatial normal u; a spacelike y is on the positive
    side of x when <spatial(y - x), u> > 0.  Ties on the hyperplane go down
    ``tiebreak_basis`` until a nonzero inner product appears.  With
    ``per_event`` set, events whose id is in the map use their own normal.
    ``pullback`` is only set by :meth:`transported`.
    """

    direction: tuple
    tiebreak_basis: tuple = ()
    per_event: Mapping[int, tuple] | None = None
    pullback: tuple | None = None

    def __post_init__(self):
        direction = tuple(self.direction)
        if not direction or all(c == 0 for c in direction):
            raise ValueError("partition direction must be nonzero")
        basis = tuple(tuple(b) for b in self.tiebreak_basis) or complete_basis(direction)
        if basis[0] != direction:
            raise ValueError("first tie-break vector must equal the direction")
        if len(basis) != len(direction) or any(len(b) != len(direction) for b in basis):
            raise DimensionError("tie-break basis must span space")
        if _rank(basis) != len(direction):
            raise ValueError("tie-break basis is not linearly independent")
        object.__setattr__(self, "direction", direction)
        object.__setattr__(self, "tiebreak_basis", basis)
        if self.per_event is not None:
            bases = {}
            for key, u in dict(self.per_event).items():
                u = tuple(u)
                if len(u) != len(direction):
                    raise DimensionError("per-event direction has wrong length")
                if all(c == 0 for c in u):
                    raise ValueError(f"zero partition direction for event {key}")
                bases[int(key)] = complete_basis(u)
            object.__setattr__(self, "per_event", bases)

    @property
    def dim(self) -> int:
        return len(self.direction) + 1

    @property
    def scope(self) -> str:
        return "global" if self.per_event is None else "per-event"

    @property
    def key(self) -> tuple:
        per = None if self.per_event is None else tuple(sorted(self.per_event.items()))
        return (self.tiebreak_basis, per, self.pullback)

    def basis_at(self, x: Event) -> tuple:
        if self.per_event is not None and x.id in self.per_event:
            return self.per_event[x.id]
        return self.tiebreak_basis

    def transported(self, g: "Transform") -> "PartitionFrame":
        """The frame carried along by ``g``: sides of (g x, g y) equal sides of (x, y)."""
        inv = g.lorentz_inverse()
        pull = inv if self.pullback is None else _matmul(self.pullback, inv)
        per = None if self.per_event is None else {k: b[0] for k, b in self.per_event.items()}
        return PartitionFrame(self.direction, self.tiebreak_basis, per, tuple(map(tuple, pull)))

    def to_json(self) -> dict:
        out = {"direction": [str(c) for c in self.direction]}
        if self.per_event is not None:
            out["per_event"] = {str(k): [str(c) for c in v[0]]
                                for k, v in sorted(self.per_event.items())}
        return out


def global_frame(direction: Sequence, mode: NumericMode = EXACT) -> PartitionFrame:
    return PartitionFrame(tuple(to_scalar(c, mode) for c in direction))


def default_frame(dim: int, mode: NumericMode = EXACT) -> PartitionFrame:
    return global_frame([1] + [0] * (dim - 2), mode)


def partition_side(frame: PartitionFrame, x: Event, y: Event,
                   mode: NumericMode = EXACT) -> Side:
    x_c, y_c = _coords(x), _coords(y)
    _check_dims(x_c, y_c)
    if len(x_c) != frame.dim:
        raise DimensionError(f"frame is for dimension {frame.dim}, events have {len(x_c)}")
    delta = [b - a for a, b in zip(x_c, y_c)]
    if frame.pullback is not None:
        delta = [_dot(row, delta) for row in frame.pullback]
    if classify_delta(delta, mode) is not ConeClass.SPACELIKE:
        raise ValueError("partition_side needs a spacelike pair")
    spatial = delta[1:]
    for b in frame.basis_at(x):
        s = _dot(spatial, b)
        if s > 0:
            return Side.POSITIVE
        if s < 0:
            return Side.NEGATIVE
    raise AssertionError("tie-break basis failed to separate a spacelike pair")


# --------------------------------------------------------------------------
# the symmetry group: orthochronous Lorentz maps, dilatations, translations


def _matmul(a, b):
    bt = list(zip(*b))
    return [[_dot(row, col) for col in bt] for row in a]


def _det(m) -> Fraction:
    rows = [[Fraction(c) for c in r] for r in m]
    n, det = len(rows), Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det *= rows[c][c]
        for r in range(c + 1, n):
            f = rows[r][c] / rows[c][c]
            rows[r] = [a - f * b for a, b in zip(rows[r], rows[c])]
    return det


def _metric(d):
    return [[(1 if i == j == 0 else -1 if i == j else 0) for j in range(d)] for i in range(d)]


@dataclass(frozen=True)
class Transform:
    """x -> scale * (linear @ x) + translation."""

    linear: tuple
    scale: object = 1
    translation: tuple | None = None
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        linear = tuple(tuple(r) for r in self.linear)
        d = len(linear)
        if d < 2 or any(len(r) != d for r in linear):
            raise DimensionError("linear part must be a square matrix, d >= 2")
        translation = tuple(self.translation) if self.translation is not None else (0,) * d
        if len(translation) != d:
            raise DimensionError("translation has wrong length")
        object.__setattr__(self, "linear", linear)
        object.__setattr__(self, "translation", translation)
        if self.check:
            self._validate()

    def _validate(self):
        eta = _metric(self.dim)
        lhs = _matmul(_matmul(list(zip(*self.linear)), eta), self.linear)
        approx = any(isinstance(c, float) for r in self.linear for c in r)
        for i in range(self.dim):
            for j in range(self.dim):
                diff = lhs[i][j] - eta[i][j]
                if (abs(diff) > 1e-9) if approx else (diff != 0):
                    raise ValueError("linear part does not preserve the quadratic form")
        if not self.linear[0][0] > 0:
            raise ValueError("linear part is not orthochronous")
        if not _det(self.linear) > 0:
            raise ValueError("linear part is not proper")
        if not self.scale > 0:
            raise ValueError("dilatation must be positive")

    @property
    def dim(self) -> int:
        return len(self.linear)

    def lorentz_inverse(self):
        # L^-1 = eta L^T eta for any Q-preserving L
        eta = _metric(self.dim)
        return _matmul(_matmul(eta, list(zip(*self.linear))), eta)

    def __call__(self, x: Event) -> Event:
        return apply_transform(self, x)

    def compose(self, other: "Transform") -> "Transform":
        """self after other."""
        lin = _matmul(self.linear, other.linear)
        shifted = [_dot(r, other.translation) for r in self.linear]
        trans = tuple(self.scale * s + t for s, t in zip(shifted, self.translation))
        return Transform(lin, self.scale * other.scale, trans, check=self.check and other.check)


def apply_transform(g: Transform, x: Event) -> Event:
    c = _coords(x)
    if len(c) != g.dim:
        raise DimensionError(f"transform is {g.dim}-dimensional, event is {len(c)}")
    out = tuple(g.scale * _dot(row, c) + t for row, t in zip(g.linear, g.translation))
    return Event(out, x.id if isinstance(x, Event) else None)


def identity(dim: int) -> Transform:
    return Transform([[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)])


def dilatation(dim: int, scale) -> Transform:
    return Transform(identity(dim).linear, scale)


def translation(vector: Sequence) -> Transform:
    vector = tuple(vector)
    return Transform(identity(len(vector)).linear, 1, vector)


def _rational_sqrt(f: Fraction) -> Fraction | None:
    n, d = math.isqrt(f.numerator), math.isqrt(f.denominator)
    if n * n == f.numerator and d * d == f.denominator:
        return Fraction(n, d)
    return None


def boost(dim: int, axis: int, velocity) -> Transform:
    """Active boost with the given velocity along spatial axis ``axis`` (1-based).

    A point at rest moves with ``velocity`` after the map.  Exact rational
    boosts need a rational gamma, e.g. v = 3/5 gives gamma = 5/4.
    """
    if not 1 <= axis < dim:
        raise DimensionError(f"axis {axis} out of range for dimension {dim}")
    if isinstance(velocity, float):
        if abs(velocity) >= 1:
            raise ValueError("superluminal boost")
        gamma = 1.0 / math.sqrt(1.0 - velocity * velocity)
        one, zero = 1.0, 0.0
    else:
        velocity = Fraction(velocity)
        if abs(velocity) >= 1:
            raise ValueError("superluminal boost")
        gamma = _rational_sqrt(1 / (1 - velocity * velocity))
        if gamma is None:
            raise ValueError(f"velocity {velocity} has irrational gamma")
        one, zero = Fraction(1), Fraction(0)
    m = [[one if i == j else zero for j in range(dim)] for i in range(dim)]
    m[0][0] = m[axis][axis] = gamma
    m[0][axis] = m[axis][0] = gamma * velocity
    return Transform(m)


def pythagorean_velocity(p: int, q: int) -> Fraction:
    """2pq / (p^2 + q^2); its gamma (p^2 + q^2) / |p^2 - q^2| is rational."""
    return Fraction(2 * p * q, p * p + q * q)


def rotation(dim: int, i: int, j: int, p: int, q: int) -> Transform:
    """Rotation in the spatial (i, j) plane by the angle with tan(theta/2) = q/p."""
    if not (1 <= i < dim and 1 <= j < dim and i != j):
        raise DimensionError("rotation plane must be two distinct spatial axes")
    r = p * p + q * q
    c, s = Fraction(p * p - q * q, r), Fraction(2 * p * q, r)
    m = [[Fraction(int(a == b)) for b in range(dim)] for a in range(dim)]
    m[i][i] = m[j][j] = c
    m[i][j], m[j][i] = -s, s
    return Transform(m)


def time_reflection(dim: int) -> Transform:
    """t -> -t.  Not in the symmetry group; used as a negative control."""
    m = [[Fraction(int(a == b)) * (-1 if a == 0 else 1) for b in range(dim)] for a in range(dim)]
    return Transform(m, check=False)


def _floated(g: Transform) -> Transform:
    return Transform([[float(c) for c in r] for r in g.linear], float(g.scale),
                     tuple(float(t) for t in g.translation))


def random_transform(seed: int, mode: NumericMode = EXACT, dim: int = 4) -> Transform:
    """Deterministic element of the symmetry group built from rational pieces."""
    rng = np.random.default_rng(seed)
    g = identity(dim)
    pieces = []
    for _ in range(int(rng.integers(1, 3))):
        q = int(rng.integers(1, 6))
        p = q + int(rng.integers(1, 6))
        v = pythagorean_velocity(p, q) * (1 if rng.random() < 0.5 else -1)
        pieces.append(boost(dim, int(rng.integers(1, dim)), v))
    if dim >= 3:
        for _ in range(int(rng.integers(1, 4))):
            i, j = (int(a) for a in rng.choice(np.arange(1, dim), size=2, replace=False))
            pieces.append(rotation(dim, i, j, int(rng.integers(1, 8)), int(rng.integers(1, 8))))
    rng.shuffle(pieces)
    for piece in pieces:
        g = piece.compose(g)
    scale = Fraction(int(rng.integers(1, 9)), int(rng.integers(1, 9)))
    shift = tuple(Fraction(int(rng.integers(-8, 9)), int(rng.integers(1, 9))) for _ in range(dim))
    g = Transform(g.linear, scale, shift)
    return g if mode.exact else _floated(g)
