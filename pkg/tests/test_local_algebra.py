from __future__ import annotations

import random
from fractions import Fraction

import pytest

from frontals.local_algebra import is_finite_up_to, multiplicity
from frontals.maps import PolyMap, compose, corank_at_zero
from frontals.poly import Poly, PolyError

from helpers import random_linear_iso, random_origin_germ

XY = ("x", "y")


def test_fold_multiplicity():
    f = PolyMap.from_exprs(["1/2*x^2 + x*y", "y"], XY)
    result = multiplicity(f)
    assert result.value == 2
    assert result.dimension_sequence[result.jet_order] == 2


def test_swallowtail_multiplicity():
    f = PolyMap.from_exprs(["1/3*x^3 + x*y", "y"], XY)
    assert multiplicity(f).value == 3


def test_identity_multiplicity():
    assert multiplicity(PolyMap.identity(XY)).value == 1


def test_four_k_multiplicity_is_three_for_all_k():
    for k in (2, 3, 4, 5):
        for sign in ("+", "-"):
            f = PolyMap.from_exprs([f"1/3*x^3 {sign} x*y^{k}", "y"], XY)
            assert multiplicity(f).value == 3


def test_univariate_normal_forms():
    for delta in (1, 2, 3):
        g = PolyMap((Poly(("x",), {(delta,): Fraction(1, delta)}),))
        assert multiplicity(g).value == delta


def test_brute_force_square_example():
    # oracle: quotient by (x^2, y^2) has monomial basis {1, x, y, x*y}
    f = PolyMap.from_exprs(["x^2", "y^2"], XY)
    result = multiplicity(f, 6)
    assert result.value == 4
    assert is_finite_up_to(f, 6)


def test_non_finite_germ_does_not_stabilize():
    # oracle: no power of y ever lies in the ideal (x^2)
    f = PolyMap.from_exprs(["x^2", "0"], XY)
    result = multiplicity(f, 12)
    assert result.value is None
    assert not result.stabilized
    assert not is_finite_up_to(f, 12)
    # codimension keeps growing with the jet order
    assert result.dimension_sequence[-1] > result.dimension_sequence[-3]


def test_requires_origin_preserving():
    with pytest.raises(PolyError):
        multiplicity(PolyMap.from_exprs(["x + 1", "y"], XY))


def test_requires_equidimensional():
    with pytest.raises(PolyError):
        multiplicity(PolyMap.from_exprs(["x", "y", "x*y"], XY))


def test_dimension_sequence_is_monotone():
    # truncating the order-(k+1) system one degree down reproduces the order-k
    # system exactly, so the codimension sequence never decreases
    rng = random.Random(1111)
    germs = [
        PolyMap.from_exprs(["1/3*x^3 + x*y", "y"], XY),
        PolyMap.from_exprs(["1/2*x^2 + x*y", "y"], XY),
    ] + [random_origin_germ(rng, 2, 3) for _ in range(10)]
    for f in germs:
        seq = multiplicity(f, 10).dimension_sequence
        assert all(a <= b for a, b in zip(seq, seq[1:])), (f, seq)


def test_invariance_under_linear_isomorphisms():
    rng = random.Random(909)
    for _ in range(12):
        n = rng.choice([1, 2])
        f = random_origin_germ(rng, n, 3)
        base = multiplicity(f, 10)
        if not base.stabilized:
            continue
        pre = compose(f, random_linear_iso(rng, n))
        post = compose(random_linear_iso(rng, n), f)
        assert multiplicity(pre, 10).value == base.value
        assert multiplicity(post, 10).value == base.value


def test_multiplicity_one_iff_corank_zero():
    rng = random.Random(1010)
    seen_units = 0
    for _ in range(30):
        n = rng.choice([1, 2])
        f = random_origin_germ(rng, n, 3)
        result = multiplicity(f, 10)
        if not result.stabilized:
            continue
        if result.value == 1:
            seen_units += 1
            assert corank_at_zero(f) == 0
        if corank_at_zero(f) == 0:
            assert result.value == 1
    assert seen_units > 0
