#!/usr/bin/env python3
"""Regenerate the OEIS b-file prefixes under tests/data/bfiles.

No network is used: each prefix is rebuilt from the sequence's defining
formula, independently of the polygram package.

  A006958  parallelogram polyominoes by area, g.f. q J1(q)/J0(q) with
           J1 = sum (-1)^n q^((n+1)(n+2)/2) / ((q)_n (q)_(n+1)),
           J0 = sum (-1)^n q^(n(n+1)/2) / (q)_n^2
  A174158  squared Narayana triangle, T(n,k) = (C(n,k) C(n,k-1) / n)^2
  A045943  3 n (n+1) / 2
  A000891  (2n)! (2n+1)! / (n!^2 (n+1)!^2)
  A319743  row sums of A174158
"""

from math import comb, factorial
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "bfiles"


def series_mul(a, b, order):
    out = [0] * (order + 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b[: order + 1 - i]):
                out[i + j] += x * y
    return out


def series_inv(a, order):
    out = [0] * (order + 1)
    out[0] = 1
    for n in range(1, order + 1):
        out[n] = -sum(a[i] * out[n - i] for i in range(1, n + 1) if i < len(a))
    return out


def q_pochhammer(n, order):
    out = [1] + [0] * order
    for i in range(1, n + 1):
        factor = [0] * (order + 1)
        factor[0] = 1
        if i <= order:
            factor[i] = -1
        out = series_mul(out, factor, order)
    return out


def a006958(terms):
    order = terms
    j1 = [0] * (order + 1)
    j0 = [0] * (order + 1)
    for n in range(order + 1):
        e1 = (n + 1) * (n + 2) // 2
        if e1 <= order:
            den = series_inv(series_mul(q_pochhammer(n, order), q_pochhammer(n + 1, order), order), order)
            for i, c in enumerate(den[: order + 1 - e1]):
                j1[e1 + i] += (-1) ** n * c
        e0 = n * (n + 1) // 2
        if e0 <= order:
            qn = q_pochhammer(n, order)
            den = series_inv(series_mul(qn, qn, order), order)
            for i, c in enumerate(den[: order + 1 - e0]):
                j0[e0 + i] += (-1) ** n * c
    gf = series_mul(j1, series_inv(j0, order), order)
    return {n: gf[n] for n in range(1, order + 1)}


def narayana_sq(n, k):
    return (comb(n, k) * comb(n, k - 1) // n) ** 2


def a174158(rows):
    out, i = {}, 1
    for n in range(1, rows + 1):
        for k in range(1, n + 1):
            out[i] = narayana_sq(n, k)
            i += 1
    return out


def write(name, entries, title):
    lines = [f"# {name}: {title}", "# prefix regenerated from the defining formula (scripts/make_bfiles.py)"]
    lines += [f"{i} {v}" for i, v in sorted(entries.items())]
    (OUT / f"b{name[1:]}.txt").write_text("\n".join(lines) + "\n", encoding="ascii")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    write("A006958", a006958(30), "parallelogram polyominoes with n cells")
    write("A174158", a174158(12), "squares of the Narayana triangle, read by rows")
    write("A045943", {n: 3 * n * (n + 1) // 2 for n in range(0, 31)}, "3n(n+1)/2")
    write("A000891", {n: factorial(2 * n) * factorial(2 * n + 1) // (factorial(n) ** 2 * factorial(n + 1) ** 2)
                      for n in range(0, 21)}, "(2n)!(2n+1)!/(n!^2 (n+1)!^2)")
    write("A319743", {n: sum(narayana_sq(n, k) for k in range(1, n + 1)) for n in range(1, 21)},
          "row sums of squared Narayana numbers")


if __name__ == "__main__":
    main()
