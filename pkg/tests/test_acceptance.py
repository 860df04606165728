"""Exit criteria for the package, one test per criterion.

Every comparison is exact; runtime budgets are asserted where one is set.
A PASS/FAIL line per criterion is printed in the pytest terminal summary.
"""

import functools
import io
import time
from contextlib import redirect_stdout
from itertools import product

from conftest import ACCEPTANCE_RESULTS, BFILE_DIR
from polygram import oracle
from polygram.checks import OEIS_TARGETS
from polygram.cli import main
from polygram.dirichlet import (
    dirichlet_power_coefficient,
    expand_V,
    order_pattern,
    term_matches,
    verify_expansion,
    zeta_term_from_partition,
)
from polygram.exactmath import compositions, fubini
from polygram.hyperd import HyperBoxSpec, count_hyper, count_hyper_closed_form
from polygram.oeis import align, find_bfile, parse_bfile, parse_bfile_text
from polygram.polycube import count_fixed_plateaus, count_whd, count_width_volume, series_S
from polygram.polyomino import count_width_area, count_width_height, numerator_B, table_b
from polygram.reference import TABLE1_PRINTED, TABLE2, V2_PRINTED
from polygram.table import CountTable

from brute import catalan


def criterion(number, title):
    def wrap(test):
        @functools.wraps(test)
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                detail = test(*args, **kwargs) or ""
            except BaseException as exc:
                ACCEPTANCE_RESULTS.append((number, title, False, f"{type(exc).__name__}: {exc}"[:200]))
                raise
            elapsed = time.perf_counter() - start
            ACCEPTANCE_RESULTS.append((number, title, True, f"{detail}; {elapsed:.2f}s".lstrip("; ")))
        return run
    return wrap


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def cli_table(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        assert main(argv) == 0
    return buf.getvalue()


@criterion(1, "Table 1 reproduction")
def test_table1_reproduction():
    text, elapsed = timed(lambda: cli_table(["table", "b", "--k", "10", "--n", "10"]))
    table = CountTable.from_csv(text)
    cells = dict(table.cells())
    agree = [cell for cell in TABLE1_PRINTED if cells[cell] == TABLE1_PRINTED[cell]]
    assert len(agree) == 99
    assert cells[(3, 8)] == 55
    sums = [sum(cells[(k, n)] for k in range(1, 11)) for n in range(1, 11)]
    assert sums == [1, 2, 4, 9, 20, 46, 105, 242, 557, 1285]
    assert elapsed < 1.0
    return "99/100 printed cells, (3,8)=55"


@criterion(2, "Table 2 reproduction")
def test_table2_reproduction():
    text, elapsed = timed(lambda: cli_table(["table", "c", "--k", "10", "--n", "10"]))
    cells = dict(CountTable.from_csv(text).cells())
    assert cells == TABLE2
    assert elapsed < 1.0
    return "100/100 cells"


@criterion(3, "Oracle equivalence, polyominoes")
def test_oracle_polyominoes():
    def work():
        by_area = oracle.tally(oracle.enumerate_polyominoes(10), "width_area")
        for n in range(1, 11):
            for k in range(1, 11):
                assert by_area.get((k, n), 0) == count_width_area(k, n)
        by_height = oracle.tally(oracle.enumerate_polyominoes(max_extent_sum=10), "width_height")
        for k in range(1, 10):
            for n in range(1, 11 - k):
                assert by_height.get((k, n), 0) == count_width_height(k, n)
    _, elapsed = timed(work)
    assert elapsed < 10.0


@criterion(4, "Oracle equivalence, polycubes")
def test_oracle_polycubes():
    def work():
        cubes = list(oracle.enumerate_polycubes(8))
        by_volume = oracle.tally(cubes, "width_volume")
        for n in range(1, 9):
            for k in range(1, 9):
                assert by_volume.get((k, n), 0) == count_width_volume(k, n)
        by_plateaus = oracle.tally(cubes, "plateau_volumes")
        for total in range(1, 9):
            for k in range(1, total + 1):
                for ns in compositions(total, k):
                    assert by_plateaus.get(ns, 0) == count_fixed_plateaus(ns)
        by_box = oracle.tally(oracle.enumerate_polycubes(max_extent_sum=9), "width_height_depth")
        for k, n, m in product(range(1, 8), repeat=3):
            if k + n + m <= 9:
                assert by_box.get((k, n, m), 0) == count_whd(k, n, m)
    _, elapsed = timed(work)
    assert elapsed < 60.0


@criterion(5, "Expansion identity")
def test_expansion_identity():
    def work():
        for k in range(1, 5):
            for x in product((3, 4, 5), repeat=k):
                for N in range(1, 9):
                    assert verify_expansion(k, x, N).ok, (k, x, N)
        for k in range(1, 7):
            assert len(expand_V(k)) == fubini(k)
        assert tuple(map(str, expand_V(2))) == V2_PRINTED
    _, elapsed = timed(work)
    assert elapsed < 30.0


@criterion(6, "Convolution identity (square of V_k)")
def test_convolution_identity():
    def work():
        for k in range(1, 4):
            for ns in product(range(1, 13), repeat=k):
                assert dirichlet_power_coefficient(ns, 3) == count_fixed_plateaus(ns), ns
    _, elapsed = timed(work)
    assert elapsed < 10.0


@criterion(7, "Factorization identities")
def test_factorization_identities():
    for k, n, m in product(range(1, 11), repeat=3):
        assert count_whd(k, n, m) == count_width_height(k, n) * count_width_height(k, m)
    for d in range(2, 6):
        for k in range(1, 7):
            for heights in product(range(1, 7), repeat=d - 1):
                spec = HyperBoxSpec(d, k, heights)
                expected = 1
                for n in heights:
                    expected *= count_width_height(k, n)
                # the closed forms raise InexactDivisionError on any remainder
                assert count_hyper(spec) == count_hyper_closed_form(spec) == expected


@criterion(8, "Series identities")
def test_series_identities():
    for k in range(1, 6):
        S = series_S(k, 8, 8)
        for n in range(1, 9):
            for m in range(1, 9):
                assert S.coefficient(n, m) == count_whd(k, n, m)
    # B_0 is forced to x by G_1(x) = x/(1-x); the degree rule k-1 starts at k = 2
    assert numerator_B(1, 3).coefficients == (0, 1)
    for k in range(2, 9):
        B = numerator_B(k, 3 * k)  # raises if any coefficient past degree k-1 survives
        assert B.degree() == k - 1
        assert all(c >= 0 for c in B.coefficients)
        body = B.coefficients[1:]
        assert body == body[::-1]


@criterion(9, "OEIS cross-checks")
def test_oeis_cross_checks():
    details = []
    for seq_id in ("A174158", "A045943", "A000891", "A319743", "A006958"):
        path = find_bfile(BFILE_DIR, seq_id)
        assert path is not None, seq_id
        _, make = OEIS_TARGETS[seq_id]
        alignment = align(make(), parse_bfile(path), window=5, min_shared=10)
        assert alignment.ok, alignment.detail
        assert alignment.shared >= 10
        details.append(f"{seq_id}:{alignment.shared}")
    return ", ".join(details)


@criterion(10, "Property suite")
def test_property_suite():
    for k, n in product(range(1, 13), repeat=2):
        assert count_width_height(k, n) == count_width_height(n, k)
    for m in range(1, 13):
        assert sum(count_width_height(k, m + 1 - k) for k in range(1, m + 1)) == catalan(m)
    for k in range(1, 5):
        terms = list(expand_V(k))
        for values in product(range(1, 7), repeat=k):
            hits = [t for t in terms if term_matches(t, values)]
            assert hits == [zeta_term_from_partition(order_pattern(values), k)]
    for seq_id in OEIS_TARGETS:
        seq = parse_bfile(find_bfile(BFILE_DIR, seq_id))
        assert parse_bfile_text(seq.to_bfile()).entries == seq.entries
    table = table_b(10, 10)
    assert CountTable.from_csv(table.to_csv()).same_entries(table)
    assert CountTable.from_json(table.to_json()).same_entries(table)
