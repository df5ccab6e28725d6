"""Weighted inner-product structure on tables over {0,1}^n.

A weight distribution is a strictly positive probability mass on the cube
vertices. Besides inner products and distances it provides the
per-cardinality conditional means of a function, the quantity every
closed-form result downstream is built from.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatchError, DomainError
from .functions import PseudoBooleanFunction
from .masks import check_n, level_sum


@dataclass(frozen=True, eq=False)
class WeightDistribution:
    """Normalized positive vertex weights with cached per-level masses."""

    n: int
    w: np.ndarray
    level_mass: np.ndarray = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "n", check_n(self.n))
        w = np.asarray(self.w, dtype=np.float64)
        if w.shape != (1 << self.n,):
            raise DomainError(
                f"weight table for n={self.n} must have length {1 << self.n}"
            )
        if not np.all(np.isfinite(w)) or np.any(w <= 0.0):
            raise DomainError("weights must be finite and strictly positive")
        w = w / w.sum()
        w.flags.writeable = False
        mass = level_sum(self.n, w)
        mass.flags.writeable = False
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "level_mass", mass)

    def tail_mass(self) -> np.ndarray:
        """T with T[s] = mass of all vertices of cardinality >= s (T[n+1] = 0)."""
        return np.concatenate((np.cumsum(self.level_mass[::-1])[::-1], [0.0]))


@dataclass(frozen=True, eq=False)
class CardinalityProfile:
    """Per-cardinality values of (or conditional means over) the levels 0..n."""

    n: int
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "n", check_n(self.n))
        vals = np.asarray(self.values, dtype=np.float64)
        if vals.shape != (self.n + 1,):
            raise DomainError(f"profile for n={self.n} must have length {self.n + 1}")
        if not np.all(np.isfinite(vals)):
            raise DomainError("profile entries must be finite")
        vals = vals.copy()
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    def __getitem__(self, s: int) -> float:
        return float(self.values[s])


def uniform_weights(n: int) -> WeightDistribution:
    """Equal mass 2^-n on every vertex; level masses are C(n,s)/2^n."""
    n = check_n(n)
    return WeightDistribution(n, np.full(1 << n, 2.0 ** -n))


def product_weights(p) -> WeightDistribution:
    """Independent coordinates: vertex mass is prod p_i^{x_i} (1-p_i)^{1-x_i}."""
    p = np.asarray(p, dtype=np.float64)
    if p.ndim != 1 or p.size == 0:
        raise DomainError("p must be a nonempty sequence of probabilities")
    if not np.all(np.isfinite(p)) or np.any(p <= 0.0) or np.any(p >= 1.0):
        raise DomainError("each probability must lie strictly inside (0, 1)")
    n = check_n(p.size)
    w = np.ones(1)
    for pi in p:
        w = np.concatenate([w * (1.0 - pi), w * pi])
    return WeightDistribution(n, w)


def explicit_weights(raw) -> WeightDistribution:
    """Arbitrary positive vertex masses, normalized to total mass 1."""
    raw = np.asarray(raw, dtype=np.float64)
    if raw.ndim != 1 or raw.size < 2 or raw.size & (raw.size - 1):
        raise DomainError("raw weights must be a sequence of length 2^n")
    n = check_n(raw.size.bit_length() - 1)
    return WeightDistribution(n, raw)


def _check_same_n(*objs):
    ns = {o.n for o in objs}
    if len(ns) != 1:
        raise DimensionMismatchError(f"operands disagree on n: {sorted(ns)}")


def inner_product(
    f: PseudoBooleanFunction, g: PseudoBooleanFunction, w: WeightDistribution
) -> float:
    _check_same_n(f, g, w)
    return float(np.dot(w.w * f.values, g.values))


def expectation(f: PseudoBooleanFunction, w: WeightDistribution) -> float:
    """Mean of f under w, i.e. the inner product of f with the constant 1."""
    _check_same_n(f, w)
    return float(np.dot(w.w, f.values))


def distance(
    f: PseudoBooleanFunction, g: PseudoBooleanFunction, w: WeightDistribution
) -> float:
    """Weighted root-mean-square distance; zero iff the tables coincide."""
    _check_same_n(f, g, w)
    diff = f.values - g.values
    return float(np.sqrt(np.dot(w.w * diff, diff)))


def level_expectation(
    f: PseudoBooleanFunction, w: WeightDistribution
) -> CardinalityProfile:
    """Conditional mean of f given the input has exactly s ones, for s = 0..n.

    For uniform weights this is the plain average over each level.
    """
    _check_same_n(f, w)
    sums = level_sum(f.n, w.w * f.values)
    return CardinalityProfile(f.n, sums / w.level_mass)


def weight_is_symmetric(w: WeightDistribution, tol: float = 1e-12) -> bool:
    """True iff the vertex mass depends only on the vertex cardinality."""
    from .masks import level_order

    order, starts = level_order(w.n)
    vals = w.w[order]
    spread = np.maximum.reduceat(vals, starts) - np.minimum.reduceat(vals, starts)
    return bool(np.all(spread <= tol))


def weight_is_self_dual(w: WeightDistribution, tol: float = 1e-12) -> bool:
    """True iff every vertex carries the same mass as its complement."""
    return bool(np.all(np.abs(w.w - w.w[::-1]) <= tol))
