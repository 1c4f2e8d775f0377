"""Split-bundle calculus and the hypothesis predicates."""

import math
import random
from fractions import Fraction

import pytest

from hilbdim.errors import NonIntegralError
from hilbdim.p1_bundles import (
    SplitBundle,
    check_fibration_bound,
    check_scroll_p2_splitting,
    check_scroll_q_splitting,
    cohomology,
    derive_eb,
    dual,
    infer_a1_lower,
    sym,
    tensor,
    twist,
)


def test_split_bundle_normalization():
    assert SplitBundle((3, 1, 2)).degrees == (1, 2, 3)
    assert SplitBundle((5,)).rank == 1
    assert SplitBundle((0, 1, 1, 1)).e == 3
    with pytest.raises(ValueError):
        SplitBundle(())


def test_sym_examples():
    assert sym(SplitBundle((0, 1, 1, 1)), 2).degrees == (0, 1, 1, 1, 2, 2, 2, 2, 2, 2)
    assert sym(SplitBundle((2, 5)), 0).degrees == (0,)
    with pytest.raises(ValueError):
        sym(SplitBundle((1,)), -1)


@pytest.mark.parametrize("e1,a", [(4, 2), (4, 3), (5, 3), (7, 1), (6, 6)])
def test_sym_square_of_rank_two(e1, a):
    expected = tuple(sorted((2 * a, e1, 2 * (e1 - a))))
    assert sym(SplitBundle((a, e1 - a)), 2).degrees == expected


def test_twist_tensor_dual():
    assert twist(SplitBundle((2, 3)), -1).degrees == (1, 2)
    assert tensor(SplitBundle((1,)), SplitBundle((2,))).degrees == (3,)
    assert dual(SplitBundle((0, 1, 1, 1))).degrees == (-1, -1, -1, 0)


def test_cohomology_values():
    assert cohomology(SplitBundle((-2,))) == (0, 1)
    assert cohomology(SplitBundle((0, 1, 1, 1))) == (7, 0)
    assert cohomology(SplitBundle((-1,))) == (0, 0)


def test_cohomology_euler_characteristic():
    rng = random.Random(3)
    for _ in range(200):
        degrees = tuple(rng.randint(-6, 6) for _ in range(rng.randint(1, 6)))
        bundle = SplitBundle(degrees)
        h0, h1 = cohomology(bundle)
        assert h0 - h1 == bundle.e + bundle.rank


def test_sym_rank_and_degree():
    rng = random.Random(5)
    for _ in range(100):
        rank = rng.randint(1, 5)
        bundle = SplitBundle(tuple(rng.randint(-3, 4) for _ in range(rank)))
        k = rng.randint(0, 4)
        power = sym(bundle, k)
        expected_rank = math.comb(rank + k - 1, k)
        assert power.rank == expected_rank
        assert Fraction(power.e) == Fraction(expected_rank * k * bundle.e, rank)


def test_balanced_bundle_self_test():
    rng = random.Random(9)
    for _ in range(200):
        degrees = tuple(rng.randint(-4, 4) for _ in range(rng.randint(1, 5)))
        bundle = SplitBundle(degrees)
        _, h1 = cohomology(tensor(bundle, dual(bundle)))
        balanced = max(degrees) - min(degrees) <= 1
        assert (h1 == 0) == balanced


def test_derive_eb_examples():
    assert derive_eb(7, 3, 2) == (3, 1)
    assert derive_eb(9, 7, 3) == (3, 0)
    with pytest.raises(NonIntegralError):
        derive_eb(8, 3, 3)
    with pytest.raises(ValueError):
        derive_eb(7, 3, 4)


def test_derive_eb_round_trip():
    for alpha in (2, 3):
        for e in range(0, 9):
            for b in range(-5, 6):
                d = alpha * e + b
                g = (alpha * (e + b - 2) + (alpha - 2) * d) // 2 + 1
                assert derive_eb(d, g, alpha) == (e, b)


def test_scroll_p2_splitting_predicate():
    assert check_scroll_p2_splitting(4, 2)
    assert check_scroll_p2_splitting(5, 3)
    assert not check_scroll_p2_splitting(5, 4)


def test_scroll_q_splitting_predicate():
    assert check_scroll_q_splitting(3, 3, 2, 2)
    assert not check_scroll_q_splitting(3, 3, 3, 2)
    assert check_scroll_q_splitting(4, 4, 2, 2)


def test_fibration_bound():
    assert check_fibration_bound(2, 1, 0)
    assert check_fibration_bound(2, -2, 1)
    assert check_fibration_bound(2, 3, -1)
    assert not check_fibration_bound(2, -2, 0)


def test_infer_a1_lower_rules():
    assert infer_a1_lower(2, 0).lower == 0
    assert infer_a1_lower(2, -2, case_hint=5).lower == 1
    assert infer_a1_lower(2, 2).lower == -1
    assert infer_a1_lower(3, 2).lower == 0
    assert infer_a1_lower(3, 3).lower == -1
    for bound in (infer_a1_lower(2, 0), infer_a1_lower(2, -2, 5), infer_a1_lower(2, 2)):
        assert bound.rule
