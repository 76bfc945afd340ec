"""Tests for the exact coefficient ring (Gaussian rationals, bigraded scalars)."""

import random
from fractions import Fraction

import pytest

from kdeform.errors import TruncationMismatch
from kdeform.scalar import GR_I, GR_ONE, GaussianRational, Scalar, gr


def rand_gr(rng):
    return GaussianRational(
        Fraction(rng.randint(-6, 6), rng.randint(1, 5)),
        Fraction(rng.randint(-6, 6), rng.randint(1, 5)),
    )


def rand_scalar(rng, trunc=None, min_h=-1, max_h=3, max_xi=3, nterms=4):
    if trunc is not None:
        min_h = max(min_h, 0)
    terms = {}
    for _ in range(rng.randint(0, nterms)):
        key = (rng.randint(min_h, max_h), rng.randint(0, max_xi))
        terms[key] = rand_gr(rng)
    return Scalar(terms, trunc)


def test_gaussian_rational_basics():
    assert GR_I * GR_I == GaussianRational(-1)
    assert gr("1/3") + gr("1/6") == gr("1/2")
    z = gr(2, 3)
    assert z * z.conjugate() == gr(13)
    assert (GR_ONE / z) * z == GR_ONE
    assert gr(0, 2) / GR_I == gr(2)
    assert repr(gr(-1, 1)) == "(-1 + 1*i)"


def test_gaussian_rational_mixed_ops_with_ints():
    assert 2 * GR_I - 1 == gr(-1, 2)
    assert (GR_I + 1) * (GR_I - 1) == gr(-2)
    assert Fraction(1, 2) * gr(4) == gr(2)


def test_scalar_monomials_and_coeffs():
    s = Scalar.h(2) * Scalar.xi() * 3
    assert s.coeff(2, 1) == gr(3)
    assert s.coeff(0, 0) == gr(0)
    assert not Scalar.zero()
    assert Scalar.one().constant_value() == GR_ONE


def test_laurent_h_degrees():
    kappa = Scalar.h(-1)
    assert (kappa * Scalar.h(3)).coeff(2, 0) == GR_ONE
    assert kappa.min_h_degree() == -1
    assert kappa.has_negative_h()
    # h^(-2) at h = 2/3 evaluates to 9/4
    assert Scalar.h(-2).specialize(Fraction(2, 3)) == gr("9/4")


def test_xi_degree_must_be_nonnegative():
    with pytest.raises(ValueError):
        Scalar.xi(-1)
    with pytest.raises(ValueError):
        Scalar.one().shift(0, -1)


def test_truncation_drops_high_bigrades():
    t = (3, 3)
    one_plus_h = Scalar.one(t) + Scalar.h(1, t)
    p = one_plus_h * one_plus_h * one_plus_h * one_plus_h
    assert p.coeff(3, 0) == gr(4)
    assert p.coeff(4, 0) == gr(0)
    assert p.trunc == t


def test_trunc_mixing_rules():
    exact = Scalar.h()
    t33 = Scalar.h(1, (3, 3))
    t22 = Scalar.h(1, (2, 2))
    assert (exact * t33).trunc == (3, 3)
    assert (t33 + exact).trunc == (3, 3)
    with pytest.raises(TruncationMismatch):
        t33 * t22
    with pytest.raises(TruncationMismatch):
        t33 + t22


def test_retrunc_only_tightens():
    s = Scalar.h(1, (3, 3)) + Scalar.h(3, (3, 3))
    down = s.retrunc((2, 2))
    assert down.coeff(1, 0) == GR_ONE and down.coeff(3, 0) == gr(0)
    with pytest.raises(TruncationMismatch):
        down.retrunc((3, 3))
    with pytest.raises(TruncationMismatch):
        down.retrunc(None)
    exact = Scalar.h()
    assert exact.retrunc((1, 1)).trunc == (1, 1)


def test_conjugate_real_and_imaginary_h():
    s = Scalar.i() * Scalar.h()  # i*h
    assert s.conjugate() == -s
    # with an imaginary deformation parameter, i*h is self-conjugate
    assert s.conjugate(h_sign=-1) == s
    t = Scalar.h(2) * Scalar.i()
    assert t.conjugate(h_sign=-1) == -t


def test_specialize_is_ring_homomorphism():
    rng = random.Random(20140815)
    for _ in range(40):
        a = rand_scalar(rng)
        b = rand_scalar(rng)
        hv = Fraction(rng.randint(1, 7), rng.randint(1, 7))
        xv = Fraction(rng.randint(-5, 5), rng.randint(1, 7))
        assert (a * b).specialize(hv, xv) == a.specialize(hv, xv) * b.specialize(hv, xv)
        assert (a + b).specialize(hv, xv) == a.specialize(hv, xv) + b.specialize(hv, xv)


def test_ring_axioms_random():
    rng = random.Random(99)
    for trunc in [(3, 3), None]:
        for _ in range(30):
            a = rand_scalar(rng, trunc=trunc)
            b = rand_scalar(rng, trunc=trunc)
            c = rand_scalar(rng, trunc=trunc)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a * b == b * a
            assert a + (-a) == Scalar.zero(trunc)


def test_laurent_requires_exact_mode():
    # dropping bigrades from a Laurent series is not a ring quotient, so
    # negative h-degrees are rejected whenever a finite truncation is on
    with pytest.raises(ValueError):
        Scalar.h(-1, (3, 3))
    with pytest.raises(ValueError):
        Scalar.h(-1) * Scalar.one((3, 3))
    with pytest.raises(ValueError):
        Scalar.h(-1) + Scalar.one((3, 3))
    with pytest.raises(ValueError):
        Scalar.one((3, 3)).shift(-1)
    with pytest.raises(ValueError):
        Scalar.h(-1).retrunc((3, 3))
    # nonnegative results of mixed products are fine: kappa * h^2 = h
    mixed = Scalar.h(-1) * Scalar.h(2, (3, 3))
    assert mixed == Scalar.h(1, (3, 3))


def test_table_cell_evaluation():
    # frozen arithmetic check: -(3 + 4*(kappa*xi)^2)/9 at kappa*xi = 1/2 is -4/9
    kx = Scalar.h(-1) * Scalar.xi()
    expr = (Scalar.rational(3) + Scalar.rational(4) * kx * kx) * Fraction(-1, 9)
    assert expr.specialize(2, 1) == gr("-4/9")


def test_h_zero_part_and_shift():
    s = Scalar.one() + Scalar.h() * 5 + Scalar.xi() * 7
    assert s.h_zero_part() == Scalar.one() + Scalar.xi() * 7
    assert Scalar.h(-2).shift(3) == Scalar.h(1)
    shifted = Scalar.one((2, 2)).shift(2)
    assert shifted.coeff(2, 0) == GR_ONE
    assert shifted.shift(1).is_zero()  # pushed past the truncation
