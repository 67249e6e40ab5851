"""Universes, membership functions, linguistic variables and fuzzification.

A linguistic variable ties a named quantity (say, a temperature) to a
uniformly discretized universe of discourse and a list of linguistic terms.
Each term is described by one of five parameterized membership shapes, all
callable: ``mf(x)`` returns the membership grade of ``x`` in ``[0, 1]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields

import numpy as np

from .errors import InvalidUniverse, NonFiniteInput, ValidationError


def _readonly(values) -> np.ndarray:
    arr = np.ascontiguousarray(values, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Universe:
    """Uniformly sampled base set of a linguistic variable.

    ``points`` is derived: ``n`` samples evenly spaced from ``min`` to
    ``max`` inclusive.
    """

    min: float
    max: float
    n: int
    points: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "min", float(self.min))
        object.__setattr__(self, "max", float(self.max))
        if self.n != int(self.n):
            raise InvalidUniverse(f"sample count must be an integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        if not (math.isfinite(self.min) and math.isfinite(self.max)):
            raise InvalidUniverse("universe bounds must be finite")
        if not self.min < self.max:
            raise InvalidUniverse(f"need min < max, got [{self.min}, {self.max}]")
        if self.n < 2:
            raise InvalidUniverse(f"need at least 2 samples, got {self.n}")
        pts = np.linspace(self.min, self.max, self.n)
        diffs = np.diff(pts)
        if not np.all(diffs > 0.0):
            raise InvalidUniverse("sample spacing underflows; use fewer samples")
        # the realized grid must be uniform to within 1e-9 of the span,
        # which a huge offset-to-span ratio makes unrepresentable
        step = (self.max - self.min) / (self.n - 1)
        if not np.all(np.abs(diffs - step) <= 1e-9 * (self.max - self.min)):
            raise InvalidUniverse(
                f"range [{self.min}, {self.max}] is too narrow relative to its "
                f"magnitude for a uniform grid"
            )
        object.__setattr__(self, "points", _readonly(pts))

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.min + self.max)

    def clamp(self, x: float) -> float:
        """Saturate a crisp value to the universe bounds."""
        return min(max(x, self.min), self.max)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Universe):
            return NotImplemented
        return (self.min, self.max, self.n) == (other.min, other.max, other.n)

    def __hash__(self) -> int:
        return hash((self.min, self.max, self.n))


class MembershipFunction:
    """Base class of the five shape families. Instances are callable and
    total over the reals: any ``x`` maps to a grade in ``[0, 1]``."""

    def __call__(self, x: float) -> float:
        raise NotImplementedError

    def support(self) -> tuple[float, float]:
        """Closure of ``{x : grade(x) > 0}`` as an interval; infinite ends
        where the shape never reaches zero."""
        raise NotImplementedError

    def _coerce(self, *names: str) -> None:
        for name in names:
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ValidationError(
                    f"{type(self).__name__}.{name} must be a number, got {value!r}"
                )
            if not math.isfinite(float(value)):
                raise ValidationError(f"{type(self).__name__}.{name} must be finite")
            object.__setattr__(self, name, float(value))


@dataclass(frozen=True)
class Triangular(MembershipFunction):
    """Triangle with feet ``a``, ``c`` and peak ``b``. Degenerate edges
    (``a == b`` or ``b == c``) evaluate as a vertical jump at the peak."""

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        self._coerce("a", "b", "c")
        if not (self.a <= self.b <= self.c):
            raise ValidationError(
                f"triangular parameters must satisfy a <= b <= c, got "
                f"({self.a}, {self.b}, {self.c})"
            )
        if not self.a < self.c:
            raise ValidationError("triangular support must have positive width (a < c)")

    def __call__(self, x: float) -> float:
        if x == self.b:
            return 1.0
        if x <= self.a or x >= self.c:
            return 0.0
        if x < self.b:
            return (x - self.a) / (self.b - self.a)
        return (self.c - x) / (self.c - self.b)

    def support(self) -> tuple[float, float]:
        return (self.a, self.c)


@dataclass(frozen=True)
class Trapezoidal(MembershipFunction):
    """Trapezoid with feet ``a``, ``d`` and plateau ``[b, c]``."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        self._coerce("a", "b", "c", "d")
        if not (self.a <= self.b <= self.c <= self.d):
            raise ValidationError(
                f"trapezoidal parameters must satisfy a <= b <= c <= d, got "
                f"({self.a}, {self.b}, {self.c}, {self.d})"
            )
        if not self.a < self.d:
            raise ValidationError("trapezoidal support must have positive width (a < d)")

    def __call__(self, x: float) -> float:
        if self.b <= x <= self.c:
            return 1.0
        if x <= self.a or x >= self.d:
            return 0.0
        if x < self.b:
            return (x - self.a) / (self.b - self.a)
        return (self.d - x) / (self.d - self.c)

    def support(self) -> tuple[float, float]:
        return (self.a, self.d)


@dataclass(frozen=True)
class Gaussian(MembershipFunction):
    """Bell curve ``exp(-(x - center)^2 / (2 sigma^2))``; never reaches zero."""

    center: float
    sigma: float

    def __post_init__(self) -> None:
        self._coerce("center", "sigma")
        if not self.sigma > 0:
            raise ValidationError(f"gaussian sigma must be positive, got {self.sigma}")

    def __call__(self, x: float) -> float:
        z = (x - self.center) / self.sigma
        return math.exp(-0.5 * z * z)

    def support(self) -> tuple[float, float]:
        return (-math.inf, math.inf)


@dataclass(frozen=True)
class ZShoulder(MembershipFunction):
    """Left shoulder: grade 1 up to ``a``, falling linearly to 0 at ``b``."""

    a: float
    b: float

    def __post_init__(self) -> None:
        self._coerce("a", "b")
        if not self.a < self.b:
            raise ValidationError(f"shoulder needs a < b, got ({self.a}, {self.b})")

    def __call__(self, x: float) -> float:
        if x <= self.a:
            return 1.0
        if x >= self.b:
            return 0.0
        return (self.b - x) / (self.b - self.a)

    def support(self) -> tuple[float, float]:
        return (-math.inf, self.b)


@dataclass(frozen=True)
class SShoulder(MembershipFunction):
    """Right shoulder: grade 0 up to ``a``, rising linearly to 1 at ``b``."""

    a: float
    b: float

    def __post_init__(self) -> None:
        self._coerce("a", "b")
        if not self.a < self.b:
            raise ValidationError(f"shoulder needs a < b, got ({self.a}, {self.b})")

    def __call__(self, x: float) -> float:
        if x <= self.a:
            return 0.0
        if x >= self.b:
            return 1.0
        return (x - self.a) / (self.b - self.a)

    def support(self) -> tuple[float, float]:
        return (self.a, math.inf)


def mf_parameters(mf: MembershipFunction) -> list[float]:
    """Shape parameters in declaration order, e.g. ``[a, b, c]`` for a triangle."""
    return [getattr(mf, f.name) for f in fields(mf)]


@dataclass(frozen=True)
class LinguisticTerm:
    """One qualitative label of a variable, e.g. ``"TM"`` for medium."""

    name: str
    mf: MembershipFunction

    def __post_init__(self) -> None:
        if not isinstance(self.name, str) or not self.name:
            raise ValidationError("term name must be a non-empty string")
        if not isinstance(self.mf, MembershipFunction):
            raise ValidationError(
                f"term {self.name!r} needs a membership function, got {self.mf!r}"
            )


@dataclass(frozen=True)
class LinguisticVariable:
    """A named quantity described by linguistic terms over a universe."""

    name: str
    universe: Universe
    terms: tuple[LinguisticTerm, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.name, str) or not self.name:
            raise ValidationError("variable name must be a non-empty string")
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise ValidationError(f"variable {self.name!r} needs at least one term")
        seen = set()
        for term in self.terms:
            if term.name in seen:
                raise ValidationError(
                    f"variable {self.name!r} has duplicate term {term.name!r}"
                )
            seen.add(term.name)
            lo, hi = term.mf.support()
            if hi < self.universe.min or lo > self.universe.max:
                raise ValidationError(
                    f"term {term.name!r} lies entirely outside the universe "
                    f"[{self.universe.min}, {self.universe.max}]"
                )

    @property
    def term_names(self) -> tuple[str, ...]:
        return tuple(t.name for t in self.terms)

    def term_index(self, name: str) -> int:
        for i, term in enumerate(self.terms):
            if term.name == name:
                return i
        raise ValidationError(f"variable {self.name!r} has no term {name!r}")


@dataclass(frozen=True, eq=False)
class FuzzySet:
    """Vector of membership grades over a universe's sample points."""

    universe: Universe
    grades: np.ndarray

    def __post_init__(self) -> None:
        g = _readonly(self.grades)
        if g.ndim != 1 or g.shape[0] != self.universe.n:
            raise ValidationError(
                f"grades must be a vector of length {self.universe.n}, "
                f"got shape {g.shape}"
            )
        if not np.all((g >= 0.0) & (g <= 1.0)):
            raise ValidationError("grades must lie in [0, 1]")
        object.__setattr__(self, "grades", g)

    def __len__(self) -> int:
        return self.universe.n

    def __array__(self, dtype=None, copy=None):
        if dtype is not None:
            return self.grades.astype(dtype)
        return self.grades

    def __eq__(self, other) -> bool:
        if not isinstance(other, FuzzySet):
            return NotImplemented
        return self.universe == other.universe and np.array_equal(
            self.grades, other.grades
        )

    __hash__ = None


def discretize(mf: MembershipFunction, universe: Universe) -> FuzzySet:
    """Sample a membership function over a universe's points."""
    return FuzzySet(universe, [mf(float(p)) for p in universe.points])


def singleton_fuzzify(x0: float, var: LinguisticVariable) -> np.ndarray:
    """Grade a crisp value against every term of a variable.

    The value is clamped to the universe before evaluation, so out-of-range
    readings saturate instead of failing. Returns one grade per term.
    """
    x = float(x0)
    if not math.isfinite(x):
        raise NonFiniteInput(f"crisp input must be finite, got {x0!r}")
    xc = var.universe.clamp(x)
    return np.array([term.mf(xc) for term in var.terms])
