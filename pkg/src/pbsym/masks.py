"""Bitmask bookkeeping for the Boolean cube {0,1}^n.

Masks index the cube: bit i (least significant first) of mask b carries
variable x_{i+1}, so popcount(b) is the number of ones in the point.
Tables indexed by mask are the package-wide dense representation.
"""

from functools import lru_cache

import numpy as np

from .errors import DomainError

MAX_VARS = 24  # dense tables are 2^n doubles; 24 keeps them under 128 MiB


def check_n(n: int) -> int:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise DomainError(f"number of variables must be an integer, got {n!r}")
    if n < 1 or n > MAX_VARS:
        raise DomainError(f"number of variables must be in 1..{MAX_VARS}, got {n}")
    return int(n)


@lru_cache(maxsize=None)
def popcounts(n: int) -> np.ndarray:
    """Read-only array p with p[b] = popcount(b) for all masks b < 2^n."""
    out = np.zeros(1 << n, dtype=np.uint8)
    masks = np.arange(1 << n, dtype=np.uint32)
    for i in range(n):
        out += ((masks >> i) & 1).astype(np.uint8)
    out.flags.writeable = False
    return out


@lru_cache(maxsize=None)
def level_sizes(n: int) -> np.ndarray:
    """Read-only array with entry s equal to C(n, s), the size of level s."""
    sizes = np.bincount(popcounts(n), minlength=n + 1).astype(np.int64)
    sizes.flags.writeable = False
    return sizes


@lru_cache(maxsize=None)
def level_order(n: int):
    """Masks sorted by popcount plus the start offset of each level.

    Returns (order, starts): order is a permutation of 0..2^n-1 grouping
    masks by cardinality, starts[s] is the first index of level s in it.
    """
    order = np.argsort(popcounts(n), kind="stable").astype(np.int64)
    starts = np.concatenate(([0], np.cumsum(level_sizes(n))[:-1]))
    order.flags.writeable = False
    starts.flags.writeable = False
    return order, starts


def level_sum(n: int, table: np.ndarray) -> np.ndarray:
    """Per-cardinality sums: out[s] = sum of table entries at masks of size s."""
    return np.bincount(popcounts(n), weights=table, minlength=n + 1)


def mask_of(members, n: int) -> int:
    """Bitmask of a subset given by 1-based member indices."""
    m = 0
    for i in members:
        if not 1 <= i <= n:
            raise DomainError(f"member {i} outside 1..{n}")
        m |= 1 << (i - 1)
    return m


def members_of(mask: int) -> list:
    """1-based member indices of a subset bitmask."""
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]
