"""Smoke tests for the python extension: exactness, shapes, error mapping."""

import math

import pytest

import mahonia


def test_inversion_counts():
    assert mahonia.inv_bruteforce(3) == [1, 2, 2, 1]
    assert mahonia.inv_closed(4, 2) == 5
    assert mahonia.inv_recurrence(4, 2) == 5
    assert mahonia.inv_pentagonal(5, 5) == 22
    row = mahonia.inv_genfun(6)
    assert sum(row) == math.factorial(6)
    assert row == mahonia.inv_recurrence_row(6)


def test_results_are_exact_python_ints():
    row = mahonia.inv_genfun(40)
    assert all(isinstance(v, int) for v in row)
    assert sum(row) == math.factorial(40)  # 48 digits, only exact if nothing rounds
    assert mahonia.inv_closed(40, 200) == row[200]


def test_composition_counts():
    assert mahonia.comp_genfun(2, 3) == [1, 2, 3, 2, 1]
    assert mahonia.comp_closed(2, 3, 2) == 3
    assert mahonia.comp_recurrence(2, 3, -1) == 0
    assert sum(mahonia.comp_bruteforce(3, 4)) == 4**3


def test_prefix_and_monomial_counts():
    for n in range(1, 7):
        top = n * (n - 1) // 2
        running = 0
        for t in range(top + 1):
            running += mahonia.inv_closed(n, t)
            assert mahonia.inv_prefix_closed(n, t) == running
            assert mahonia.standard_monomial_count_L(n, t) == running


def test_qanalog():
    assert mahonia.q_factorial(3) == [1, 2, 2, 1]
    assert mahonia.gaussian_binomial(4, 2) == [1, 1, 2, 1, 1]
    assert mahonia.gauss_coefficient_C(4, 2, 5) == 2
    assert mahonia.subset_sum_count(4, 2, 5) == 2
    terms = mahonia.cauchy_product(2)
    assert terms == {(0, 0): 1, (1, 1): 1, (1, 2): 1, (2, 3): 1}


def test_hilbert():
    assert mahonia.restricted_binomial(5, 2) == 10
    assert mahonia.restricted_binomial(2, 5) == 0
    assert mahonia.koszul_hilbert([1, 2, 3], 3) == mahonia.standard_monomial_count_L(3, 3)
    assert mahonia.elementary_symmetric_at_init(3, 2) == 11
    assert mahonia.complete_symmetric_eval([2, 3], 2) == 19
    assert mahonia.groebner_f_eval(2, 1, [1, 2]) == 0
    report = mahonia.verify_orbit_vanishing(4)
    assert report["all_zero"] and report["evaluations"] == 96


def test_posets():
    assert mahonia.divisor_rank_genfun([(2, 2), (3, 1)]) == [1, 2, 2, 1]
    assert mahonia.brute_divisor_rank_genfun(30) == [1, 3, 3, 1]
    assert mahonia.factorize(12) == [(2, 2), (3, 1)]
    assert mahonia.involution_weight([(1, 3), (2, 4)]) == 1
    assert mahonia.involution_rank_genfun(2) == [1, 1, 1]
    assert sum(mahonia.involution_rank_genfun(5)) == mahonia.odd_double_factorial(5)


def test_resource_guard_maps_to_python_exception():
    with pytest.raises(mahonia.ResourceGuardError):
        mahonia.inv_bruteforce(12)
    with pytest.raises(mahonia.ResourceGuardError):
        mahonia.involution_rank_genfun(9)


def test_domain_errors_map_to_value_error():
    with pytest.raises(ValueError):
        mahonia.inv_pentagonal(4, 5)
    with pytest.raises(ValueError):
        mahonia.gaussian_binomial(3, 4)
    with pytest.raises(ValueError):
        mahonia.involution_weight([(2, 1)])
