"""Parallelogram polyhypercubes in dimension d >= 2.

Projecting a d-dimensional parallelogram polyhypercube onto each plane
spanned by the width axis and one height axis gives d-1 parallelogram
polyominoes of the same width, and the object is recovered from them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from polygram.dirichlet import dirichlet_power_coefficient
from polygram.exactmath import binomial, exact_div
from polygram.polyomino import count_width_height
from polygram.table import CountTable

MAX_DIMENSION = 6


@dataclass(frozen=True)
class HyperBoxSpec:
    dimension: int
    width: int
    heights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "heights", tuple(self.heights))
        if self.dimension < 2:
            raise ValueError("dimension must be >= 2")
        if self.width < 1:
            raise ValueError("width must be >= 1")
        if len(self.heights) != self.dimension - 1:
            raise ValueError(
                f"dimension {self.dimension} needs {self.dimension - 1} heights, got {len(self.heights)}"
            )
        if any(h < 1 for h in self.heights):
            raise ValueError("heights must be >= 1")


def _check_dimension(d: int, max_dimension: int) -> None:
    if d > max_dimension:
        raise ValueError(f"dimension {d} exceeds the configured cap {max_dimension}")


def count_hyper(spec: HyperBoxSpec, max_dimension: int = MAX_DIMENSION) -> int:
    """Polyhypercubes of the given width and per-axis heights: prod_i g(k, n_i)."""
    _check_dimension(spec.dimension, max_dimension)
    count = 1
    for n in spec.heights:
        count *= count_width_height(spec.width, n)
    return count


def count_hyper_closed_form(spec: HyperBoxSpec) -> int:
    """prod_i n_i C(n_i+k-1, k-1)^2 / (k^(d-1) prod_i (n_i+k-1)), with one exact division."""
    k = spec.width
    numerator, denominator = 1, k ** (spec.dimension - 1)
    for n in spec.heights:
        numerator *= n * binomial(n + k - 1, k - 1) ** 2
        denominator *= n + k - 1
    return exact_div(numerator, denominator)


def count_hyper_fixed_volumes(d: int, volumes: Sequence[int], max_dimension: int = MAX_DIMENSION) -> int:
    """Polyhypercubes of dimension d whose i-th hyperplateau has volume n_i."""
    if d < 2:
        raise ValueError("dimension must be >= 2")
    _check_dimension(d, max_dimension)
    return dirichlet_power_coefficient(volumes, d)


def table_hyper(d: int, K: int, N: int, max_dimension: int = MAX_DIMENSION) -> CountTable:
    """s(k, n_1..n_{d-1}) for k <= K and every height <= N; the last height spans the columns."""
    _check_dimension(d, max_dimension)
    axes = ("k",) + tuple(f"n{i}" for i in range(1, d - 1))
    rows = {}
    for k in range(1, K + 1):
        for lead in product(range(1, N + 1), repeat=d - 2):
            rows[(k,) + lead] = tuple(
                count_hyper(HyperBoxSpec(d, k, lead + (last,)), max_dimension)
                for last in range(1, N + 1)
            )
    return CountTable(f"s{d}", axes, f"n{d - 1}", tuple(range(1, N + 1)), rows, {"d": d, "K": K, "N": N})
