"""Parallelogram polycubes counted by plateau volumes, width, volume, height and depth.

A plateau of volume n is a rectangle of height v and depth n/v for some
divisor v of n. Two adjacent plateaus of shapes (v, w) and (v', w') glue in
min(v, v') * min(w, w') ways.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from polygram.exactmath import binomial, divisor_sieve, divisors, exact_div, positive_vector
from polygram.polyomino import count_width_height, series_G
from polygram.series import BivariateSeries
from polygram.table import CountTable


@dataclass(frozen=True, order=True)
class PlateauShape:
    height: int
    depth: int

    def __post_init__(self):
        if self.height < 1 or self.depth < 1:
            raise ValueError("plateau height and depth must be >= 1")

    @property
    def volume(self) -> int:
        return self.height * self.depth

    def gluings(self, other: "PlateauShape") -> int:
        return min(self.height, other.height) * min(self.depth, other.depth)


def plateau_shapes(volume: int) -> list[PlateauShape]:
    return [PlateauShape(v, volume // v) for v in divisors(volume)]


def count_fixed_plateaus(volumes: Sequence[int]) -> int:
    """p(n_1..n_k): parallelogram polycubes whose i-th plateau has volume n_i.

    Transfer along the plateaus, the state being the current plateau's shape.
    """
    volumes = positive_vector(volumes, "plateau volume")
    weights = {s: 1 for s in plateau_shapes(volumes[0])}
    for n in volumes[1:]:
        weights = {
            s: sum(w * prev.gluings(s) for prev, w in weights.items())
            for s in plateau_shapes(n)
        }
    return sum(weights.values())


def _width_volume_levels(K: int, N: int) -> list[list[int]]:
    """``out[k][n]`` = c(k, n) for 0 <= k <= K, 0 <= n <= N.

    DP state: plateaus placed, volume used, shape (v, w) of the last plateau.
    """
    out = [[0] * (N + 1) for _ in range(K + 1)]
    if K < 1 or N < 1:
        return out
    divs = divisor_sieve(N)
    shapes = [[(v, n // v) for v in divs[n]] for n in range(N + 1)]
    # level[n] maps shape -> count of prefixes with volume n ending in that shape
    level: list[dict[tuple[int, int], int]] = [dict() for _ in range(N + 1)]
    for n in range(1, N + 1):
        for s in shapes[n]:
            level[n][s] = 1
    out[1] = [sum(level[n].values()) for n in range(N + 1)]
    for k in range(2, K + 1):
        nxt: list[dict[tuple[int, int], int]] = [dict() for _ in range(N + 1)]
        for used in range(k - 1, N):
            prev = level[used]
            if not prev:
                continue
            for vol in range(1, N - used + 1):
                target = nxt[used + vol]
                for v, w in shapes[vol]:
                    total = 0
                    for (pv, pw), count in prev.items():
                        total += min(pv, v) * min(pw, w) * count
                    target[(v, w)] = target.get((v, w), 0) + total
        level = nxt
        out[k] = [sum(level[n].values()) for n in range(N + 1)]
    return out


def count_width_volume(k: int, n: int) -> int:
    """c(k, n): parallelogram polycubes of width k and volume n."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be >= 1")
    if k > n:
        return 0
    return _width_volume_levels(k, n)[k][n]


def table_c(K: int, N: int) -> CountTable:
    """Grid of c(k, n) for 1 <= k <= K, 1 <= n <= N."""
    if K < 1 or N < 1:
        raise ValueError("K and N must be >= 1")
    levels = _width_volume_levels(K, N)
    rows = {(k,): tuple(levels[k][1:]) for k in range(1, K + 1)}
    return CountTable("c", ("k",), "n", tuple(range(1, N + 1)), rows, {"K": K, "N": N})


def count_whd(k: int, n: int, m: int) -> int:
    """s(k, n, m): parallelogram polycubes of width k, height n and depth m.

    Closed form n m C(n+k-1, k-1)^2 C(m+k-1, k-1)^2 / (k^2 (n+k-1) (m+k-1)),
    evaluated as one big numerator and one exact division.
    """
    if k < 1 or n < 1 or m < 1:
        raise ValueError("k, n and m must be >= 1")
    numerator = n * m * binomial(n + k - 1, k - 1) ** 2 * binomial(m + k - 1, k - 1) ** 2
    denominator = k * k * (n + k - 1) * (m + k - 1)
    return exact_div(numerator, denominator)


def table_s(K: int, N: int, M: int) -> CountTable:
    rows = {
        (k, n): tuple(count_whd(k, n, m) for m in range(1, M + 1))
        for k in range(1, K + 1)
        for n in range(1, N + 1)
    }
    return CountTable("s", ("k", "n"), "m", tuple(range(1, M + 1)), rows, {"K": K, "N": N, "M": M})


def series_S(k: int, Nx: int, Ny: int) -> BivariateSeries:
    """Height/depth generating function of width-k parallelogram polycubes.

    It factors as G_k(x) G_k(y).
    """
    return BivariateSeries.outer(series_G(k, Nx), series_G(k, Ny))


def whd_product(k: int, n: int, m: int) -> int:
    """s(k, n, m) through the projection bijection: g(k, n) g(k, m)."""
    return count_width_height(k, n) * count_width_height(k, m)
