"""Cross-validation suite behind ``polygram verify``.

Every check is deterministic and reports the first counterexample it finds.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Iterator

from polygram import oracle
from polygram.dirichlet import (
    dirichlet_power_coefficient,
    expand_V,
    order_pattern,
    term_matches,
    verify_expansion,
    zeta_term_from_partition,
)
from polygram.exactmath import compositions, fubini
from polygram.hyperd import HyperBoxSpec, count_hyper, count_hyper_closed_form, count_hyper_fixed_volumes
from polygram.oeis import align, find_bfile, parse_bfile
from polygram.polycube import count_fixed_plateaus, count_whd, count_width_volume, series_S, table_c, whd_product
from polygram.polyomino import (
    SeriesInconsistencyError,
    count_fixed_columns,
    count_width_area,
    count_width_height,
    numerator_B,
    table_b,
)
from polygram.reference import A006958_START, TABLE1, TABLE2

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""

    def line(self) -> str:
        return f"{self.status} {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class VerifyConfig:
    max_area: int = 10
    max_volume: int = 8
    expansion_width: int = 4
    expansion_order: int = 6
    max_dimension: int = 5
    oeis_dir: str | None = None
    min_shared: int = 10


def first_mismatch(pairs: Iterable[tuple[object, int, int]]) -> tuple[int, str]:
    """Consume (key, expected, got) triples; return (count checked, first failure or '')."""
    checked = 0
    for key, expected, got in pairs:
        checked += 1
        if expected != got:
            return checked, f"at {key}: expected {expected}, got {got}"
    return checked, ""


def _result(name: str, pairs: Iterable[tuple[object, int, int]]) -> CheckResult:
    checked, failure = first_mismatch(pairs)
    if failure:
        return CheckResult(name, FAIL, failure)
    return CheckResult(name, PASS, f"{checked} values agree")


def compare_table(computed: dict, reference: dict) -> Iterator[tuple[object, int, int]]:
    for cell in sorted(reference):
        yield cell, reference[cell], computed.get(cell, 0)


# -- individual checks -------------------------------------------------------


def check_table1(reference: dict = TABLE1) -> CheckResult:
    table = table_b(10, 10)
    computed = {cell: v for cell, v in table.cells()}
    return _result("table b(k,n) vs reference Table 1", compare_table(computed, reference))


def check_table2(reference: dict = TABLE2) -> CheckResult:
    table = table_c(10, 10)
    computed = {cell: v for cell, v in table.cells()}
    return _result("table c(k,n) vs reference Table 2", compare_table(computed, reference))


def check_row_sums(reference: dict = TABLE1) -> CheckResult:
    """Reference Table 1 row sums against the leading A006958 terms."""
    pairs = (
        (f"n={n}", A006958_START[n - 1], sum(reference.get((k, n), 0) for k in range(1, 11)))
        for n in range(1, 11)
    )
    return _result("Table 1 row sums vs A006958", pairs)


def check_oracle_polyominoes(cfg: VerifyConfig) -> list[CheckResult]:
    shapes = list(oracle.enumerate_polyominoes(cfg.max_area))
    by_area = oracle.tally(shapes, "width_area")
    by_heights = oracle.tally(shapes, "column_heights")
    box = cfg.max_area
    in_box = oracle.enumerate_polyominoes(max_extent_sum=box)
    by_height = oracle.tally(in_box, "width_height")
    return [
        _result(
            f"oracle polyominoes by (width, area), area <= {cfg.max_area}",
            (((k, n), by_area.get((k, n), 0), count_width_area(k, n))
             for n in range(1, cfg.max_area + 1) for k in range(1, n + 1)),
        ),
        _result(
            f"oracle polyominoes by column heights, area <= {cfg.max_area}",
            ((m, by_heights.get(m, 0), count_fixed_columns(m))
             for n in range(1, cfg.max_area + 1) for k in range(1, n + 1) for m in compositions(n, k)),
        ),
        _result(
            f"oracle polyominoes by (width, height), k+n <= {box}",
            (((k, n), by_height.get((k, n), 0), count_width_height(k, n))
             for k in range(1, box) for n in range(1, box + 1 - k)),
        ),
    ]


def check_oracle_polycubes(cfg: VerifyConfig) -> list[CheckResult]:
    cubes = list(oracle.enumerate_polycubes(cfg.max_volume))
    by_volume = oracle.tally(cubes, "width_volume")
    by_plateaus = oracle.tally(cubes, "plateau_volumes")
    box = cfg.max_volume + 1
    in_box = oracle.enumerate_polycubes(max_extent_sum=box)
    by_whd = oracle.tally(in_box, "width_height_depth")
    plateau_keys = [v for n in range(1, cfg.max_volume + 1) for k in range(1, n + 1) for v in compositions(n, k)]
    return [
        _result(
            f"oracle polycubes by (width, volume), volume <= {cfg.max_volume}",
            (((k, n), by_volume.get((k, n), 0), count_width_volume(k, n))
             for n in range(1, cfg.max_volume + 1) for k in range(1, n + 1)),
        ),
        _result(
            f"oracle polycubes by plateau volumes, total <= {cfg.max_volume}",
            ((v, by_plateaus.get(v, 0), count_fixed_plateaus(v)) for v in plateau_keys),
        ),
        _result(
            f"oracle polycubes by (width, height, depth), k+n+m <= {box}",
            (((k, n, m), by_whd.get((k, n, m), 0), count_whd(k, n, m))
             for k in range(1, box) for n in range(1, box - k) for m in range(1, box + 1 - k - n)),
        ),
    ]


def check_expansion(cfg: VerifyConfig) -> list[CheckResult]:
    out = []
    failure = ""
    checked = 0
    for k in range(1, cfg.expansion_width + 1):
        for x in product((3, 4, 5), repeat=k):
            for N in range(1, cfg.expansion_order + 1):
                checked += 1
                report = verify_expansion(k, x, N)
                if not report.ok:
                    failure = report.lines()[0]
                    break
            if failure:
                break
        if failure:
            break
    name = f"zeta expansion identity, k <= {cfg.expansion_width}, N <= {cfg.expansion_order}"
    out.append(CheckResult(name, FAIL, failure) if failure else CheckResult(name, PASS, f"{checked} exact equalities"))
    out.append(_result(
        "expansion term counts vs Fubini numbers, k <= 6",
        ((k, fubini(k), len(expand_V(k))) for k in range(1, 7)),
    ))
    out.append(check_domain_tiling(4, 6))
    return out


def check_domain_tiling(max_k: int, max_n: int) -> CheckResult:
    """Each tuple in {1..N}^k lies in exactly one term's summation domain."""
    name = f"order-pattern domain tiling, k <= {max_k}, N <= {max_n}"
    for k in range(1, max_k + 1):
        terms = list(expand_V(k))
        for values in product(range(1, max_n + 1), repeat=k):
            hits = [t for t in terms if term_matches(t, values)]
            if len(hits) != 1:
                return CheckResult(name, FAIL, f"{values} matched {len(hits)} terms")
            if hits[0] != zeta_term_from_partition(order_pattern(values), k):
                return CheckResult(name, FAIL, f"{values} matched the wrong term {hits[0]}")
    return CheckResult(name, PASS)


def check_convolution(max_k: int = 3, max_n: int = 12) -> CheckResult:
    pairs = (
        (n, count_fixed_plateaus(n), dirichlet_power_coefficient(n, 3))
        for k in range(1, max_k + 1)
        for n in product(range(1, max_n + 1), repeat=k)
    )
    return _result(f"square of V_k vs plateau counts, k <= {max_k}, n_i <= {max_n}", pairs)


def check_factorizations(cfg: VerifyConfig) -> list[CheckResult]:
    whd = (
        ((k, n, m), whd_product(k, n, m), count_whd(k, n, m))
        for k in range(1, 11) for n in range(1, 11) for m in range(1, 11)
    )

    def hyper_pairs():
        for d in range(2, cfg.max_dimension + 1):
            for k in range(1, 7):
                for heights in product(range(1, 7), repeat=d - 1):
                    spec = HyperBoxSpec(d, k, heights)
                    yield (d, k, heights), count_hyper(spec), count_hyper_closed_form(spec)

    def ordered_factorizations():
        for d in range(2, cfg.max_dimension + 1):
            for n in range(1, 61):
                yield (d, n), _count_ordered_factorizations(n, d - 1), count_hyper_fixed_volumes(d, (n,))

    return [
        _result("s(k,n,m) closed form vs g(k,n) g(k,m), k,n,m <= 10", whd),
        _result(f"polyhypercube closed form vs product form, d <= {cfg.max_dimension}, k,n_i <= 6", hyper_pairs()),
        _result("width-1 hyperplateau counts vs ordered factorizations, n <= 60", ordered_factorizations()),
    ]


def _count_ordered_factorizations(n: int, parts: int) -> int:
    if parts == 1:
        return 1
    return sum(_count_ordered_factorizations(n // f, parts - 1) for f in range(1, n + 1) if n % f == 0)


def check_series() -> list[CheckResult]:
    def s_pairs():
        for k in range(1, 6):
            S = series_S(k, 8, 8)
            for n in range(1, 9):
                for m in range(1, 9):
                    yield (k, n, m), count_whd(k, n, m), S.coefficient(n, m)

    return [_result("S_k(x,y) coefficients vs s(k,n,m), k <= 5", s_pairs()), _check_numerators()]


def _check_numerators() -> CheckResult:
    name = "numerator B: degree k-1, nonnegative, palindromic, zero tail, k <= 8"
    for k in range(2, 9):
        try:
            B = numerator_B(k, 3 * k)
        except SeriesInconsistencyError as exc:
            return CheckResult(name, FAIL, str(exc))
        body = B.coefficients[1:]
        if B.degree() != k - 1 or any(c < 0 for c in B.coefficients) or body != body[::-1]:
            return CheckResult(name, FAIL, f"k={k}: B = {B}")
    return CheckResult(name, PASS)


# -- OEIS --------------------------------------------------------------------


def sequence_a006958(terms: int = 16) -> list[int]:
    return list(table_b(terms, terms).column_sums().values())


def sequence_a174158(rows: int = 10) -> list[int]:
    """s(k, n, n) read along antidiagonals k + n = l, k ascending."""
    return [count_whd(k, l - k, l - k) for l in range(2, rows + 2) for k in range(1, l)]


def sequence_a045943(terms: int = 20) -> list[int]:
    return [count_whd(2, 2, m) for m in range(1, terms + 1)]


def sequence_a000891(terms: int = 15) -> list[int]:
    return [count_whd(n, n, 1) for n in range(1, terms + 1)]


def sequence_a319743(terms: int = 15) -> list[int]:
    return [sum(count_whd(k, l - k, l - k) for k in range(1, l)) for l in range(2, terms + 2)]


OEIS_TARGETS: dict[str, tuple[str, Callable[[], list[int]]]] = {
    "A006958": ("row sums of b(k,n)", sequence_a006958),
    "A174158": ("s(k,n,n)", sequence_a174158),
    "A045943": ("s(2,2,m)", sequence_a045943),
    "A000891": ("s(n,n,1)", sequence_a000891),
    "A319743": ("sum over n+k=l of s(k,n,n)", sequence_a319743),
}


def check_oeis(oeis_dir: str | None, min_shared: int = 10) -> list[CheckResult]:
    out = []
    for seq_id, (label, make) in OEIS_TARGETS.items():
        name = f"OEIS {seq_id} vs {label}"
        path = find_bfile(oeis_dir, seq_id) if oeis_dir else None
        if path is None:
            out.append(CheckResult(name, SKIP, "no b-file supplied"))
            continue
        alignment = align(make(), parse_bfile(path), min_shared=min_shared)
        out.append(CheckResult(name, PASS if alignment.ok else FAIL, alignment.detail))
    return out


def run_checks(cfg: VerifyConfig) -> list[CheckResult]:
    results = [check_table1(), check_table2(), check_row_sums()]
    results += check_oracle_polyominoes(cfg)
    results += check_oracle_polycubes(cfg)
    results += check_expansion(cfg)
    results.append(check_convolution())
    results += check_factorizations(cfg)
    results += check_series()
    results += check_oeis(cfg.oeis_dir, cfg.min_shared)
    return results


def format_report(results: list[CheckResult]) -> str:
    lines = [r.line() for r in results]
    failed = sum(r.status == FAIL for r in results)
    skipped = sum(r.status == SKIP for r in results)
    lines.append(f"{len(results) - failed - skipped} passed, {failed} failed, {skipped} skipped")
    return "\n".join(lines) + "\n"
