"""Multiple-zeta expansion of the width-k polyomino Dirichlet series, and its powers.

The Dirichlet series of parallelogram polyominoes with prescribed column
heights is

    V_k(x_1..x_k) = sum over n in N^k of min(n_1,n_2)...min(n_{k-1},n_k) / (n_1^x_1 ... n_k^x_k).

Splitting the sum according to the order pattern of (n_1..n_k) writes V_k as
a sum of multiple zeta functions, one per ordered set partition of
{1..k}. Blocks collect equal n's; earlier blocks hold larger values.

Arguments are kept symbolic: a set of variables plus an integer offset.
Truncated sums are evaluated exactly with :class:`fractions.Fraction`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from polygram.exactmath import (
    OrderedSetPartition,
    divisors,
    fubini,
    inverse_power,
    ordered_set_partitions,
    positive_vector,
)

MAX_EXPANSION_WIDTH = 8


@dataclass(frozen=True)
class LinearExponent:
    """sum of x_j over ``variables``, minus ``offset``."""

    variables: tuple[int, ...]
    offset: int = 0

    def __post_init__(self):
        if not self.variables:
            raise ValueError("a zeta argument needs at least one variable")
        object.__setattr__(self, "variables", tuple(sorted(self.variables)))
        if self.offset < 0:
            raise ValueError("offsets are nonnegative")

    def evaluate(self, x: Sequence[int]) -> int:
        return sum(x[j - 1] for j in self.variables) - self.offset

    def __str__(self) -> str:
        text = "+".join(f"x{j}" for j in self.variables)
        return f"{text}-{self.offset}" if self.offset else text


@dataclass(frozen=True)
class ZetaTerm:
    """zeta_l(e_1, ..., e_l), summed over n_1 > n_2 > ... > n_l >= 1."""

    arguments: tuple[LinearExponent, ...]

    def __post_init__(self):
        if not self.arguments:
            raise ValueError("a zeta term has depth >= 1")
        seen = [j for a in self.arguments for j in a.variables]
        if len(seen) != len(set(seen)):
            raise ValueError(f"zeta arguments share variables: {self}")

    @property
    def depth(self) -> int:
        return len(self.arguments)

    @property
    def width(self) -> int:
        return sum(len(a.variables) for a in self.arguments)

    def __str__(self) -> str:
        return "zeta(" + ", ".join(map(str, self.arguments)) + ")"


@dataclass(frozen=True)
class ZetaExpansion:
    width: int
    terms: tuple[ZetaTerm, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __str__(self) -> str:
        return " + ".join(map(str, self.terms))


def zeta_term_from_partition(partition: Sequence[Sequence[int]], k: int) -> ZetaTerm:
    """Zeta term contributed by one ordered set partition of {1..k}.

    For each element m of block i, the exponent of block i drops by one when
    m-1 lies in a strictly earlier block, and by one more when m+1 lies in
    block i or an earlier one.
    """
    partition = OrderedSetPartition(partition, k)
    where = partition.block_of()
    arguments = []
    for i, block in enumerate(partition):
        offset = 0
        for m in block:
            if m - 1 >= 1 and where[m - 1] <= i - 1:
                offset += 1
            if m + 1 <= k and where[m + 1] <= i:
                offset += 1
        arguments.append(LinearExponent(block, offset))
    return ZetaTerm(tuple(arguments))


def expand_V(k: int, max_width: int = MAX_EXPANSION_WIDTH) -> ZetaExpansion:
    """All fubini(k) zeta terms of V_k, in ordered-set-partition order."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > max_width:
        raise ValueError(
            f"refusing to expand V_{k}: {fubini(k)} terms exceeds the width cap {max_width}"
        )
    return ZetaExpansion(k, tuple(zeta_term_from_partition(s, k) for s in ordered_set_partitions(k)))


_TERM_RE = re.compile(r"zeta\(([^()]*)\)")
_ARG_RE = re.compile(r"^\s*(x\d+(?:\s*\+\s*x\d+)*)\s*(?:-\s*(\d+))?\s*$")


def parse_term(text: str) -> ZetaTerm:
    """Inverse of ``str(ZetaTerm)``, e.g. ``zeta(x1+x3, x2-2)``."""
    match = _TERM_RE.fullmatch(text.strip())
    if not match:
        raise ValueError(f"not a zeta term: {text!r}")
    arguments = []
    for chunk in match.group(1).split(","):
        arg = _ARG_RE.match(chunk)
        if not arg:
            raise ValueError(f"cannot parse zeta argument {chunk!r}")
        variables = tuple(int(v.strip()[1:]) for v in arg.group(1).split("+"))
        arguments.append(LinearExponent(variables, int(arg.group(2) or 0)))
    return ZetaTerm(tuple(arguments))


def parse_expansion(text: str) -> ZetaExpansion:
    terms = tuple(parse_term(m.group(0)) for m in _TERM_RE.finditer(text))
    width = max((j for t in terms for a in t.arguments for j in a.variables), default=0)
    return ZetaExpansion(width, terms)


# -- truncated evaluation ----------------------------------------------------


def truncated_V(k: int, x: Sequence[int], N: int) -> Fraction:
    """Exact sum defining V_k over (n_1..n_k) in {1..N}^k at integer exponents x.

    Evaluated by transfer along the coordinates, O(k N^2) rational operations.
    """
    if len(x) != k:
        raise ValueError(f"need {k} exponents, got {len(x)}")
    if N < 1:
        return Fraction(0)
    # acc[n] = sum over (n_1..n_i) with n_i = n of the partial summand
    acc = [Fraction(0)] + [inverse_power(n, x[0]) for n in range(1, N + 1)]
    for i in range(1, k):
        acc = [Fraction(0)] + [
            inverse_power(n, x[i]) * sum(min(p, n) * acc[p] for p in range(1, N + 1))
            for n in range(1, N + 1)
        ]
    return sum(acc, Fraction(0))


def truncated_zeta_term(term: ZetaTerm, x: Sequence[int], N: int) -> Fraction:
    """Exact sum over N >= n_1 > ... > n_l >= 1 of prod n_i^-e_i, e_i evaluated at x."""
    exponents = [a.evaluate(x) for a in term.arguments]
    if N < term.depth:
        return Fraction(0)
    # tail[n] = sum over chains n = n_i > ... > n_l for the innermost arguments
    tail = [Fraction(0)] + [inverse_power(n, exponents[-1]) for n in range(1, N + 1)]
    for e in reversed(exponents[:-1]):
        below = Fraction(0)
        nxt = [Fraction(0)] * (N + 1)
        for n in range(1, N + 1):
            nxt[n] = inverse_power(n, e) * below
            below += tail[n]
        tail = nxt
    return sum(tail, Fraction(0))


@dataclass
class ExpansionReport:
    k: int
    x: tuple[int, ...]
    N: int
    direct: Fraction
    expanded: Fraction
    per_term: list[tuple[str, Fraction]]

    @property
    def ok(self) -> bool:
        return self.direct == self.expanded

    def __bool__(self) -> bool:
        return self.ok

    def lines(self) -> list[str]:
        status = "equal" if self.ok else "DIFFER"
        out = [f"V_{self.k} at x={self.x}, N={self.N}: direct={self.direct} expanded={self.expanded} ({status})"]
        out += [f"  {name} = {value}" for name, value in self.per_term]
        return out


def verify_expansion(k: int, x: Sequence[int], N: int) -> ExpansionReport:
    """Compare the truncated V_k with the sum of its truncated zeta terms."""
    x = tuple(x)
    direct = truncated_V(k, x, N)
    per_term = [(str(t), truncated_zeta_term(t, x, N)) for t in expand_V(k)]
    expanded = sum((v for _, v in per_term), Fraction(0))
    return ExpansionReport(k, x, N, direct, expanded, per_term)


def order_pattern(values: Sequence[int]) -> OrderedSetPartition:
    """Ordered set partition of positions grouped by equal value, largest value first."""
    groups: dict[int, list[int]] = {}
    for pos, v in enumerate(values, start=1):
        groups.setdefault(v, []).append(pos)
    return OrderedSetPartition([groups[v] for v in sorted(groups, reverse=True)], len(values))


def term_matches(term: ZetaTerm, values: Sequence[int]) -> bool:
    """True when ``values`` lies in the summation domain of ``term``.

    Variables sharing an argument must carry equal values, and argument
    values must strictly decrease along the term.
    """
    levels = []
    for arg in term.arguments:
        seen = {values[j - 1] for j in arg.variables}
        if len(seen) != 1:
            return False
        levels.append(seen.pop())
    return all(a > b for a, b in zip(levels, levels[1:]))


# -- Dirichlet convolution powers --------------------------------------------


def min_product(v: Sequence[int]) -> int:
    out = 1
    for a, b in zip(v, v[1:]):
        out *= min(a, b)
    return out


def _tuple_divisors(n: tuple[int, ...]) -> list[tuple[int, ...]]:
    return list(product(*(divisors(x) for x in n)))


def dirichlet_power_coefficient(n: Sequence[int], d: int) -> int:
    """Coefficient at n of V_k^(d-1), i.e. the (d-1)-fold coordinatewise Dirichlet
    self-convolution of the min-product family.

    This counts d-dimensional parallelogram polyhypercubes whose i-th
    hyperplateau has volume n_i.
    """
    n = positive_vector(n, "volume")
    if d < 2:
        raise ValueError("dimension d must be >= 2")
    # power[u] for every coordinatewise divisor u of n
    box = _tuple_divisors(n)
    power = {u: min_product(u) for u in box}
    for _ in range(d - 2):
        power = {
            u: sum(
                power[v] * min_product(tuple(a // b for a, b in zip(u, v)))
                for v in _tuple_divisors(u)
            )
            for u in box
        }
    return power[n]

