"""Parallelogram polyominoes counted by column heights, width, area and height."""

from __future__ import annotations

from typing import Sequence

from polygram.exactmath import binomial, exact_div, positive_vector
from polygram.series import TruncatedSeries, one_minus_x_power
from polygram.table import CountTable

# (k, n) cell of Table 1 that is misprinted as 551 in circulation; the true value is 55.
TABLE1_TYPO_CELL = (3, 8)
TABLE1_TYPO_NOTE = (
    "b(3,8) = 55; the value 551 seen in the commonly printed table is a typo "
    "(row n=8 must sum to 242, OEIS A006958)"
)


class SeriesInconsistencyError(RuntimeError):
    """A series identity that must hold exactly did not."""


def count_fixed_columns(heights: Sequence[int]) -> int:
    """Number of parallelogram polyominoes whose i-th column has ``heights[i]`` cells.

    Adjacent columns of heights a and b can be glued in min(a, b) ways.
    """
    heights = positive_vector(heights, "column height")
    count = 1
    for a, b in zip(heights, heights[1:]):
        count *= min(a, b)
    return count


def _width_area_levels(K: int, N: int) -> list[list[int]]:
    """``out[k][n]`` = b(k, n) for 0 <= k <= K, 0 <= n <= N.

    DP state: columns placed, area used, height of the last column.
    level[n][h] counts prefixes of area n whose last column has height h.
    """
    out = [[0] * (N + 1) for _ in range(K + 1)]
    if K < 1 or N < 1:
        return out
    level = [[0] * (N + 1) for _ in range(N + 1)]
    for h in range(1, N + 1):
        level[h][h] = 1
    out[1] = [sum(level[n]) for n in range(N + 1)]
    for k in range(2, K + 1):
        nxt = [[0] * (N + 1) for _ in range(N + 1)]
        # area before the new column is at least k-1
        for area in range(k - 1, N):
            row = level[area]
            if not any(row):
                continue
            for h in range(1, N - area + 1):
                total = 0
                for hp in range(1, area + 1):
                    if row[hp]:
                        total += min(hp, h) * row[hp]
                nxt[area + h][h] += total
        level = nxt
        out[k] = [sum(level[n]) for n in range(N + 1)]
    return out


def count_width_area(k: int, n: int) -> int:
    """b(k, n): parallelogram polyominoes with k columns and n cells."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be >= 1")
    if k > n:
        return 0
    return _width_area_levels(k, n)[k][n]


def table_b(K: int, N: int) -> CountTable:
    """Grid of b(k, n) for 1 <= k <= K, 1 <= n <= N."""
    if K < 1 or N < 1:
        raise ValueError("K and N must be >= 1")
    levels = _width_area_levels(K, N)
    rows = {(k,): tuple(levels[k][1:]) for k in range(1, K + 1)}
    notes = []
    if TABLE1_TYPO_CELL[0] <= K and TABLE1_TYPO_CELL[1] <= N:
        notes.append(TABLE1_TYPO_NOTE)
    return CountTable("b", ("k",), "n", tuple(range(1, N + 1)), rows, {"K": K, "N": N}, notes)


def count_width_height(k: int, n: int) -> int:
    """g(k, n): parallelogram polyominoes of width k and height n (Narayana numbers).

    g(k, n) = C(k+n-1, k) C(k+n-1, n) / (k+n-1), the division being exact.
    """
    if k < 1 or n < 1:
        raise ValueError("k and n must be >= 1")
    s = k + n - 1
    return exact_div(binomial(s, k) * binomial(s, n), s)


def table_g(K: int, N: int) -> CountTable:
    rows = {(k,): tuple(count_width_height(k, n) for n in range(1, N + 1)) for k in range(1, K + 1)}
    return CountTable("g", ("k",), "n", tuple(range(1, N + 1)), rows, {"K": K, "N": N})


def series_G(k: int, N: int) -> TruncatedSeries:
    """Height generating function of width-k parallelogram polyominoes, up to x**N."""
    if k < 1 or N < 0:
        raise ValueError("need k >= 1 and N >= 0")
    return TruncatedSeries((0,) + tuple(count_width_height(k, n) for n in range(1, N + 1)))


def numerator_B(k: int, order: int | None = None) -> TruncatedSeries:
    """Numerator polynomial of G_k(x) = B(x) / (1-x)**(2k-1).

    Obtained as G_k(x) (1-x)**(2k-1) computed to ``order`` (default 3k); every
    coefficient past degree max(k-1, 1) must vanish, otherwise
    :class:`SeriesInconsistencyError` is raised.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if order is None:
        order = 3 * k
    top = max(k - 1, 1)
    if order <= top:
        raise ValueError(f"order {order} too small to certify a degree-{top} numerator")
    product = series_G(k, order) * one_minus_x_power(2 * k - 1, order)
    tail = product.coefficients[top + 1:]
    if any(tail):
        raise SeriesInconsistencyError(
            f"G_{k}(x)(1-x)^{2 * k - 1} has nonzero coefficients past degree {top}: {tail}"
        )
    return product.truncate(top)
