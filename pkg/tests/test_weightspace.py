"""Weight-space enumeration, counting, lookup, and degree constraints."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperdet import (
    ExponentArray,
    Format,
    Weight,
    count_weight_space,
    enumerate_weight_space,
    index_of,
    invariant_degree_info,
    parse_matrix_form,
    slice_sums_from_weight,
    weight_of,
)

from expected_values import (
    DEGREE_INFO,
    LEMMA11_ORBITS,
    LEMMA12_WEIGHTS,
    WEIGHT_ZERO_COUNTS,
)

F332 = Format(3, 3, 2)


@pytest.mark.parametrize("dims,degree", sorted(WEIGHT_ZERO_COUNTS))
def test_weight_zero_counts(dims, degree):
    fmt = Format(*dims)
    expected = WEIGHT_ZERO_COUNTS[(dims, degree)]
    basis = enumerate_weight_space(fmt, degree)
    assert len(basis) == expected
    assert count_weight_space(fmt, degree) == expected


def test_basis_sorted_weighted_and_unique():
    basis = enumerate_weight_space(F332, 6)
    flats = [a.flat for a in basis]
    assert flats == sorted(flats)
    assert len(set(flats)) == len(flats)
    for a in basis:
        assert a.degree == 6
        assert weight_of(a).is_zero


def test_minimal_element_is_first_orbit_representative():
    basis = enumerate_weight_space(F332, 6)
    assert basis[0] == parse_matrix_form(LEMMA11_ORBITS[0][1])


def test_higher_weight_spaces_counts_and_minima():
    for concat, size, rep_text in LEMMA12_WEIGHTS:
        weight = Weight.from_concat(F332, concat)
        basis = enumerate_weight_space(F332, 6, weight)
        assert len(basis) == size
        assert basis[0] == parse_matrix_form(rep_text)
        assert all(weight_of(a) == weight for a in basis)


def test_slice_sums_from_weight():
    sums = slice_sums_from_weight(F332, 6, Weight.zero(F332))
    assert sums.t1 == (2, 2, 2)
    assert sums.t2 == (2, 2, 2)
    assert sums.t3 == (3, 3)
    sums = slice_sums_from_weight(
        F332, 6, Weight.from_concat(F332, (2, -1, 0, 0, 0))
    )
    assert sums.t1 == (3, 1, 2)
    # non-integral solution: no arrays of this weight
    assert slice_sums_from_weight(F332, 7, Weight.zero(F332)) is None
    assert enumerate_weight_space(F332, 7) == []
    # negative solution: T1 = (-2, 4, 4)
    neg = Weight.from_concat(F332, (-6, 0, 0, 0, 0))
    assert slice_sums_from_weight(F332, 6, neg) is None


def test_index_of_is_one_based_and_total():
    basis = enumerate_weight_space(F332, 6)
    for n, a in enumerate(basis, start=1):
        assert index_of(a, basis) == n
    outside = ExponentArray(F332, (6,) + (0,) * 17)
    assert index_of(outside, basis) is None


@given(
    st.tuples(st.integers(1, 3), st.integers(1, 3), st.integers(1, 3)),
    st.data(),
)
@settings(max_examples=60, deadline=None)
def test_enumeration_contains_every_array_of_its_weight(dims, data):
    fmt = Format(*dims)
    flat = data.draw(st.tuples(*[st.integers(0, 2)] * fmt.size))
    arr = ExponentArray(fmt, flat)
    weight = weight_of(arr)
    basis = enumerate_weight_space(fmt, arr.degree, weight)
    assert index_of(arr, basis) is not None
    assert count_weight_space(fmt, arr.degree, weight) == len(basis)
    assert all(weight_of(b) == weight and b.degree == arr.degree
               for b in basis)


def test_degree_info():
    for dims, (step, hyperdet_degree) in DEGREE_INFO.items():
        info = invariant_degree_info(Format(*dims))
        assert info.lcm_step == step
        assert info.hyperdet_degree == hyperdet_degree


def test_non_multiple_degrees_are_empty():
    for degree in (1, 2, 3, 4, 5):
        if degree % 6:
            assert count_weight_space(F332, degree) == 0
    assert count_weight_space(Format(2, 2, 3), 4) == 0


def test_degree_zero_is_the_zero_array():
    basis = enumerate_weight_space(F332, 0)
    assert basis == [ExponentArray.zero(F332)]
