"""Slow, obviously-correct reference computations used only by the tests."""

from fractions import Fraction
from itertools import product
from math import factorial


def trial_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def all_compositions(n, k):
    return [c for c in product(range(1, n + 1), repeat=k) if sum(c) == n]


def min_chain(v):
    out = 1
    for a, b in zip(v, v[1:]):
        out *= min(a, b)
    return out


def plateau_divisor_sum(ns):
    """Divisor-tuple sum of paired minima, written out directly."""
    total = 0
    for vs in product(*(trial_divisors(n) for n in ns)):
        ws = [n // v for n, v in zip(ns, vs)]
        term = 1
        for i in range(len(ns) - 1):
            term *= min(vs[i], vs[i + 1]) * min(ws[i], ws[i + 1])
        total += term
    return total


def fubini_by_surjections(k):
    # ordered set partitions of a k-set = surjections onto {1..l}, summed over l
    total = 0
    for l in range(1, k + 1):
        total += sum(1 for f in product(range(l), repeat=k) if len(set(f)) == l)
    return total


def direct_V(k, x, N):
    total = Fraction(0)
    for ns in product(range(1, N + 1), repeat=k):
        den = Fraction(1)
        for n, e in zip(ns, x):
            den *= Fraction(n) ** e
        total += min_chain(ns) / den
    return total


def ordered_factorizations(n, parts):
    return sum(1 for fs in product(trial_divisors(n), repeat=parts) if _prod(fs) == n)


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def catalan(m):
    return factorial(2 * m) // (factorial(m) * factorial(m + 1))
