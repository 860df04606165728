from itertools import permutations, product

import pytest
from hypothesis import given, strategies as st

from brute import ordered_factorizations
from polygram.hyperd import (
    HyperBoxSpec,
    count_hyper,
    count_hyper_closed_form,
    count_hyper_fixed_volumes,
    table_hyper,
)
from polygram.polycube import count_fixed_plateaus, count_whd
from polygram.polyomino import count_fixed_columns, count_width_height


def test_count_hyper_examples():
    assert count_hyper(HyperBoxSpec(3, 2, (2, 2))) == 9 == count_whd(2, 2, 2)
    assert count_hyper(HyperBoxSpec(4, 2, (2, 2, 2))) == 27
    for d in range(2, 7):
        assert count_hyper(HyperBoxSpec(d, 1, tuple(range(1, d)))) == 1


def test_spec_validation():
    with pytest.raises(ValueError):
        HyperBoxSpec(1, 2, ())
    with pytest.raises(ValueError):
        HyperBoxSpec(3, 2, (1,))
    with pytest.raises(ValueError):
        HyperBoxSpec(3, 0, (1, 1))
    with pytest.raises(ValueError):
        HyperBoxSpec(3, 2, (1, 0))


def test_dimension_cap():
    spec = HyperBoxSpec(7, 2, (1,) * 6)
    with pytest.raises(ValueError, match="cap"):
        count_hyper(spec)
    assert count_hyper(spec, max_dimension=7) == 1
    with pytest.raises(ValueError):
        count_hyper_fixed_volumes(7, (2,))


def test_closed_form_agrees_with_product_form():
    for d in range(2, 6):
        for k in range(1, 7):
            for heights in product(range(1, 7), repeat=d - 1):
                spec = HyperBoxSpec(d, k, heights)
                expected = 1
                for n in heights:
                    expected *= count_width_height(k, n)
                assert count_hyper(spec) == count_hyper_closed_form(spec) == expected


def test_three_dimensions_reduce_to_polycubes():
    for k, n, m in product(range(1, 9), repeat=3):
        assert count_hyper(HyperBoxSpec(3, k, (n, m))) == count_whd(k, n, m)


@given(st.integers(2, 6).flatmap(
    lambda d: st.tuples(st.just(d), st.integers(1, 8), st.lists(st.integers(1, 8), min_size=d - 1, max_size=d - 1))
))
def test_height_permutation_symmetry(args):
    d, k, heights = args
    base = count_hyper(HyperBoxSpec(d, k, tuple(heights)))
    for perm in set(permutations(heights)):
        assert count_hyper(HyperBoxSpec(d, k, perm)) == base


def test_fixed_volume_examples():
    assert count_hyper_fixed_volumes(2, (3, 1, 4)) == count_fixed_columns((3, 1, 4))
    assert count_hyper_fixed_volumes(3, (2, 2)) == 6 == count_fixed_plateaus((2, 2))
    assert count_hyper_fixed_volumes(4, (2,)) == 3


def test_fixed_volumes_in_three_dimensions():
    for k in range(1, 4):
        for ns in product(range(1, 11), repeat=k):
            assert count_hyper_fixed_volumes(3, ns) == count_fixed_plateaus(ns)


def test_width_one_counts_ordered_factorizations():
    for d in range(2, 6):
        for n in range(1, 61):
            assert count_hyper_fixed_volumes(d, (n,)) == ordered_factorizations(n, d - 1)


def test_table_hyper_layout():
    table = table_hyper(4, 2, 3)
    assert table.index_axes == ("k", "n1", "n2")
    assert table.value_axis == "n3"
    assert table[(2, 2, 2, 2)] == 27
    assert len(table.rows) == 2 * 3 * 3
