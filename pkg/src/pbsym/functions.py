"""Dense pseudo-Boolean functions on {0,1}^n and their standard transforms.

A function f: {0,1}^n -> R is stored as a table of 2^n doubles; the entry
at mask b is f evaluated at the point whose i-th coordinate is bit i-1 of b.
The same table doubles as the set-function view v(S) = f(1_S), with S
encoded by its membership bitmask.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping

import numpy as np

from .errors import DimensionMismatchError, DomainError
from .masks import check_n, level_sizes, level_sum, popcounts


def _as_table(n: int, values) -> np.ndarray:
    table = np.asarray(values, dtype=np.float64)
    if table.shape != (1 << n,):
        raise DomainError(
            f"table for n={n} must have length {1 << n}, got shape {table.shape}"
        )
    if not np.all(np.isfinite(table)):
        raise DomainError("table entries must be finite")
    table = table.copy()
    table.flags.writeable = False
    return table


@dataclass(frozen=True, eq=False)
class PseudoBooleanFunction:
    """Real-valued function on the vertices of the n-cube, 1 <= n <= 24."""

    n: int
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "n", check_n(self.n))
        object.__setattr__(self, "values", _as_table(self.n, self.values))

    def __call__(self, mask: int) -> float:
        return float(self.values[mask])

    @classmethod
    def constant(cls, n: int, value: float) -> "PseudoBooleanFunction":
        return cls(n, np.full(1 << check_n(n), float(value)))


@dataclass(frozen=True, eq=False)
class SetFunctionView:
    """Set-function face of a table: v(S) is the entry at the bitmask of S."""

    n: int
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "n", check_n(self.n))
        object.__setattr__(self, "values", _as_table(self.n, self.values))

    def of(self, members: Iterable[int]) -> float:
        from .masks import mask_of

        return float(self.values[mask_of(members, self.n)])

    def at_mask(self, mask: int) -> float:
        return float(self.values[mask])


@dataclass(frozen=True)
class MoebiusRepresentation:
    """Sparse multilinear-monomial coefficients: f = sum_S coeff[S] * prod_{i in S} x_i."""

    n: int
    coefficients: Mapping[int, float]

    def __post_init__(self):
        object.__setattr__(self, "n", check_n(self.n))
        full = (1 << self.n) - 1
        clean = {}
        for m, v in self.coefficients.items():
            m = int(m)
            if not 0 <= m <= full:
                raise DomainError(f"subset mask {m} outside 0..{full}")
            v = float(v)
            if not np.isfinite(v):
                raise DomainError("coefficients must be finite")
            if v != 0.0:
                clean[m] = v
        object.__setattr__(self, "coefficients", clean)

    @property
    def degree(self) -> int:
        if not self.coefficients:
            return 0
        return max(int(popcounts(self.n)[m]) for m in self.coefficients)

    def dense(self) -> np.ndarray:
        table = np.zeros(1 << self.n)
        for m, v in self.coefficients.items():
            table[m] = v
        return table


@dataclass(frozen=True)
class Permutation:
    """Rearrangement of the variable slots 1..n; image[j-1] = pi(j)."""

    n: int
    image: tuple

    def __post_init__(self):
        object.__setattr__(self, "n", check_n(self.n))
        image = tuple(int(i) for i in self.image)
        if sorted(image) != list(range(1, self.n + 1)):
            raise DomainError(f"image {image} is not a bijection of 1..{self.n}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(n, tuple(range(1, n + 1)))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self . other)(j) = self(other(j))."""
        if self.n != other.n:
            raise DimensionMismatchError("cannot compose permutations of different n")
        return Permutation(self.n, tuple(self.image[other.image[j] - 1] for j in range(self.n)))


def from_set_function(v: SetFunctionView) -> PseudoBooleanFunction:
    """Typed cast: the set function and the point function share one table."""
    return PseudoBooleanFunction(v.n, v.values)


def as_set_function(f: PseudoBooleanFunction) -> SetFunctionView:
    return SetFunctionView(f.n, f.values)


def moebius_transform(f: PseudoBooleanFunction) -> MoebiusRepresentation:
    """Monomial coefficients of f, by the in-place subset butterfly, O(n 2^n)."""
    a = f.values.copy()
    for i in range(f.n):
        step = 1 << i
        view = a.reshape(-1, 2, step)
        view[:, 1, :] -= view[:, 0, :]
    return MoebiusRepresentation(f.n, {m: v for m, v in enumerate(a) if v != 0.0})


def inverse_moebius(m: MoebiusRepresentation) -> PseudoBooleanFunction:
    """Recover the value table by subset sums (inverse butterfly of moebius_transform)."""
    a = m.dense()
    for i in range(m.n):
        step = 1 << i
        view = a.reshape(-1, 2, step)
        view[:, 1, :] += view[:, 0, :]
    return PseudoBooleanFunction(m.n, a)


def order_statistic(n: int, k: int) -> PseudoBooleanFunction:
    """k-th smallest of the n Boolean inputs: 1 iff at least n-k+1 inputs are 1.

    k=0 and k=n+1 are the constant-0 and constant-1 extensions.
    """
    n = check_n(n)
    if not 0 <= k <= n + 1:
        raise DomainError(f"order statistic index {k} outside 0..{n + 1}")
    return PseudoBooleanFunction(n, (popcounts(n) >= n - k + 1).astype(np.float64))


def elementary_symmetric(n: int, d: int) -> PseudoBooleanFunction:
    """Sum of all degree-d monomials; its value at a mask of size m is C(m, d)."""
    n = check_n(n)
    if not 0 <= d <= n:
        raise DomainError(f"degree {d} outside 0..{n}")
    per_level = np.array([comb(m, d) for m in range(n + 1)], dtype=np.float64)
    return PseudoBooleanFunction(n, per_level[popcounts(n)])


def is_symmetric(f: PseudoBooleanFunction, tol: float = 1e-9) -> bool:
    """True iff the table is constant on every cardinality level, within tol."""
    if tol < 0:
        raise DomainError("tolerance must be nonnegative")
    from .masks import level_order

    order, starts = level_order(f.n)
    vals = f.values[order]
    spread = np.maximum.reduceat(vals, starts) - np.minimum.reduceat(vals, starts)
    return bool(np.all(spread <= tol))


def permute(f: PseudoBooleanFunction, p: Permutation) -> PseudoBooleanFunction:
    """Variable rearrangement: result(x_1,...,x_n) = f(x_{pi(1)},...,x_{pi(n)})."""
    if f.n != p.n:
        raise DimensionMismatchError(f"function has n={f.n}, permutation has n={p.n}")
    b = np.arange(1 << f.n, dtype=np.int64)
    idx = np.zeros_like(b)
    for j, pj in enumerate(p.image):
        idx |= ((b >> (pj - 1)) & 1) << j
    return PseudoBooleanFunction(f.n, f.values[idx])


def symmetrize(f: PseudoBooleanFunction) -> PseudoBooleanFunction:
    """Average of f over all variable rearrangements.

    Computed per cardinality level: the orbit average at a mask of size s is
    the plain mean of f over all masks of size s, so no factorial enumeration
    is needed.
    """
    means = level_sum(f.n, f.values) / level_sizes(f.n)
    return PseudoBooleanFunction(f.n, means[popcounts(f.n)])


def dual(f: PseudoBooleanFunction) -> PseudoBooleanFunction:
    """Complement-and-flip: result at x is 1 - f(complement of x)."""
    return PseudoBooleanFunction(f.n, 1.0 - f.values[::-1])


def multilinear_extension(f: PseudoBooleanFunction, point) -> float:
    """Unique multilinear interpolant of the table, evaluated at a real point.

    Equals the expectation of f under independent Bernoulli coordinates with
    success probabilities given by ``point``.
    """
    point = np.asarray(point, dtype=np.float64)
    if point.shape != (f.n,):
        raise DimensionMismatchError(
            f"evaluation point must have {f.n} coordinates, got shape {point.shape}"
        )
    factors = np.ones(1)
    for p in point:
        factors = np.concatenate([factors * (1.0 - p), factors * p])
    return float(factors @ f.values)
