"""Integrality decision versus brute-force scanning."""

import random
from fractions import Fraction as F

import pytest

from conftest import A010049, QUAD_LIN, rand_family_instance, rand_perturbed_instance

from fibrec import FibExpr, Integral, NonIntegral, brute_scan, is_integer_sequence


def test_integral_examples():
    assert is_integer_sequence(A010049) == Integral((0, 1, 1, 3))
    assert is_integer_sequence(QUAD_LIN) == Integral((1, 1, 2, 2, 4, 7))
    assert is_integer_sequence(FibExpr.zero()) == Integral(())


def test_non_integral_example():
    verdict = is_integer_sequence(FibExpr.of([(0, [0, F(1, 2)])]))
    assert verdict == NonIntegral(1, F(1, 2))


def test_witness_is_least_non_negative():
    # w_0 integer, w_1 and w_2 not: the reported witness must be 1
    e = FibExpr.of([(0, [F(1, 3)])])
    verdict = is_integer_sequence(e)
    assert isinstance(verdict, NonIntegral)
    assert verdict.witness_n == 1
    assert verdict.value == F(1, 3)


def test_brute_scan_examples():
    assert brute_scan(A010049, -40, 40) is None
    assert brute_scan(FibExpr.of([(0, [0, F(1, 2)])]), -10, 10) == -7
    assert brute_scan(FibExpr.zero(), -5, 5) is None
    with pytest.raises(ValueError):
        brute_scan(A010049, 4, 2)


def test_counterexample_reevaluates_to_reported_value():
    rng = random.Random(101)
    seen = 0
    while seen < 20:
        e = rand_perturbed_instance(rng)
        verdict = is_integer_sequence(e)
        if isinstance(verdict, NonIntegral):
            assert e.at(verdict.witness_n) == verdict.value
            assert verdict.value.denominator > 1
            seen += 1


def test_family_instances_are_always_integral():
    rng = random.Random(103)
    for _ in range(40):
        e = rand_family_instance(rng)
        assert isinstance(is_integer_sequence(e), Integral)


def test_decision_agrees_with_brute_scan():
    rng = random.Random(107)
    for i in range(60):
        e = rand_family_instance(rng) if i % 2 == 0 else rand_perturbed_instance(rng)
        verdict = is_integer_sequence(e)
        witness = brute_scan(e, -40, 40)
        assert isinstance(verdict, Integral) == (witness is None)
