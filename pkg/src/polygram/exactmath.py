"""Exact integer plumbing: binomials, divisors, compositions, ordered set partitions.

Counts are plain Python ints and rationals are :class:`fractions.Fraction`,
both of which are arbitrary precision and normalized on construction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Sequence

__all__ = [
    "Fraction",
    "InexactDivisionError",
    "OrderedSetPartition",
    "binomial",
    "compositions",
    "divisor_sieve",
    "divisors",
    "exact_div",
    "fubini",
    "inverse_power",
    "ordered_set_partitions",
    "positive_vector",
]


class InexactDivisionError(ArithmeticError):
    """A closed form that must be integral left a nonzero remainder."""


def exact_div(numerator: int, denominator: int) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise InexactDivisionError(
            f"{numerator} is not divisible by {denominator} (remainder {r})"
        )
    return q


def positive_vector(values: Sequence[int], what: str = "entry") -> tuple[int, ...]:
    """Validate a nonempty vector of positive integers (heights, volumes)."""
    values = tuple(values)
    if not values:
        raise ValueError(f"{what} vector must be nonempty")
    if any(v < 1 for v in values):
        raise ValueError(f"every {what} must be >= 1, got {values}")
    return values


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be nonnegative")
    return math.comb(n, k)


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in ascending order (trial division)."""
    if n < 1:
        raise ValueError(f"divisors() needs n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def divisor_sieve(limit: int) -> list[list[int]]:
    """``table[n]`` is the ascending divisor list of n, for 1 <= n <= limit.

    ``table[0]`` is an empty list.
    """
    table: list[list[int]] = [[] for _ in range(limit + 1)]
    for d in range(1, limit + 1):
        for multiple in range(d, limit + 1, d):
            table[multiple].append(d)
    return table


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Yield the k-tuples of positive integers summing to n, lexicographically.

    There are C(n-1, k-1) of them; nothing is yielded when k > n.
    """
    if k < 1 or n < 1 or k > n:
        return
    if k == 1:
        yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def fubini(k: int) -> int:
    """Number of ordered set partitions of a k-set, by F(n) = sum C(n,j) F(n-j)."""
    if k == 0:
        return 1
    return sum(binomial(k, j) * fubini(k - j) for j in range(1, k + 1))


class OrderedSetPartition(tuple):
    """An ordered sequence of disjoint nonempty blocks covering {1..k}.

    Blocks are stored as sorted tuples. Instances are immutable.
    """

    def __new__(cls, blocks: Sequence[Sequence[int]], k: int | None = None):
        normalized = tuple(tuple(sorted(b)) for b in blocks)
        seen = [x for b in normalized for x in b]
        if any(len(b) == 0 for b in normalized):
            raise ValueError("ordered set partition has an empty block")
        if len(seen) != len(set(seen)):
            raise ValueError("blocks of an ordered set partition must be disjoint")
        if k is None:
            k = len(seen)
        if sorted(seen) != list(range(1, k + 1)):
            raise ValueError(f"blocks {normalized} do not cover {{1..{k}}}")
        return super().__new__(cls, normalized)

    @property
    def k(self) -> int:
        return sum(len(b) for b in self)

    def block_of(self) -> dict[int, int]:
        """Map each element to the (0-based) index of its block."""
        return {x: i for i, b in enumerate(self) for x in b}

    def __repr__(self) -> str:
        inner = ", ".join("{" + ",".join(map(str, b)) + "}" for b in self)
        return f"OrderedSetPartition({inner})"


def _set_partitions(elements: tuple[int, ...], blocks: int) -> Iterator[list[tuple[int, ...]]]:
    # unordered partitions of `elements` into exactly `blocks` blocks
    if blocks == 0:
        if not elements:
            yield []
        return
    if len(elements) < blocks:
        return
    first, rest = elements[0], elements[1:]
    # first element alone
    for part in _set_partitions(rest, blocks - 1):
        yield [(first,)] + part
    # first element joins an existing block
    for part in _set_partitions(rest, blocks):
        for i in range(len(part)):
            yield part[:i] + [(first,) + part[i]] + part[i + 1:]


def ordered_set_partitions(k: int) -> Iterator[OrderedSetPartition]:
    """Yield every ordered set partition of {1..k} exactly once.

    Order: by number of blocks, descending (all singletons first, the single
    block {1..k} last); within a block count, lexicographically on the
    sequence of sorted blocks. There are ``fubini(k)`` partitions.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    elements = tuple(range(1, k + 1))
    for nblocks in range(k, 0, -1):
        level = [
            tuple(order)
            for part in _set_partitions(elements, nblocks)
            for order in permutations(part)
        ]
        level.sort()
        for blocks in level:
            yield OrderedSetPartition(blocks, k)


def inverse_power(n: int, exponent: int) -> Fraction:
    """Exact value of n ** -exponent for any integer exponent."""
    if exponent >= 0:
        return Fraction(1, n**exponent)
    return Fraction(n ** (-exponent))
