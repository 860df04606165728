"""Truncated power series with exact integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass

from polygram.exactmath import binomial


@dataclass(frozen=True)
class TruncatedSeries:
    """sum coefficients[i] x**i, known exactly up to and including x**order."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, exponent: int) -> int:
        return self.coefficients[exponent]

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        for i, a in enumerate(self.coefficients[: order + 1]):
            if a:
                for j, b in enumerate(other.coefficients[: order + 1 - i]):
                    out[i + j] += a * b
        return TruncatedSeries(tuple(out))

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coefficients[: order + 1])

    def degree(self) -> int:
        """Largest exponent with a nonzero coefficient, -1 for the zero series."""
        for i in range(self.order, -1, -1):
            if self.coefficients[i]:
                return i
        return -1

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if i == 0:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"


def one_minus_x_power(power: int, order: int) -> TruncatedSeries:
    """(1 - x)**power truncated at ``order``."""
    return TruncatedSeries(
        tuple((-1) ** i * binomial(power, i) for i in range(order + 1))
    )


@dataclass(frozen=True)
class BivariateSeries:
    """sum grid[n][m] x**n y**m for n <= order_x, m <= order_y."""

    grid: tuple[tuple[int, ...], ...]

    @property
    def order_x(self) -> int:
        return len(self.grid) - 1

    @property
    def order_y(self) -> int:
        return len(self.grid[0]) - 1

    def coefficient(self, n: int, m: int) -> int:
        return self.grid[n][m]

    @classmethod
    def outer(cls, fx: TruncatedSeries, fy: TruncatedSeries) -> "BivariateSeries":
        return cls(tuple(tuple(a * b for b in fy.coefficients) for a in fx.coefficients))
