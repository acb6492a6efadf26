"""Tests for the graded polynomial ring and determinant engines."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from heckebn.errors import FieldMismatchError
from heckebn.poly import (
    ALPHA,
    BETA,
    GAMMA,
    H,
    GradedPoly,
    PolyMatrix,
    det,
    det_bareiss,
    det_interpolate,
    det_minor_expansion,
    det_mod_univariate,
    det_numeric,
    exact_div,
    poly_from_coeffs,
    root_multiplicity,
)


def sample_p2() -> GradedPoly:
    # h^3/6 - beta*h/6 + gamma/3
    return (
        H**3 * Fraction(1, 6)
        - BETA * H * Fraction(1, 6)
        + GAMMA * Fraction(1, 3)
    )


def test_ring_basics():
    p = (H + ALPHA) * (H - ALPHA)
    assert p == H**2 - ALPHA**2
    assert (BETA**2 - 4).substitute(beta=2).is_zero()
    assert sample_p2().coefficient_of((1, 0, 1, 0)) == Fraction(-1, 6)
    q = Fraction(1, 360) - BETA * Fraction(1, 72) + BETA**2 * Fraction(1, 90)
    assert q.degree_in("beta") == 2
    assert q.degree_in("h") == 0
    assert GradedPoly.zero().degree_in("beta") == -1


def test_substitute_and_evaluate():
    p = sample_p2()
    assert p.substitute(h=1, gamma=0) == Fraction(1, 6) - BETA * Fraction(1, 6)
    assert p.evaluate(h=1, beta=4, gamma=0) == Fraction(-1, 2)
    with pytest.raises(ValueError):
        p.evaluate(h=1)
    with pytest.raises(ValueError):
        p.substitute(delta=1)


def test_homogeneity():
    p = sample_p2()
    assert p.is_homogeneous(3)
    assert p.half_degree() == 3
    assert not (H + BETA).is_homogeneous()
    assert GradedPoly.zero().is_homogeneous(7)
    # products add half-degrees
    q = BETA * H - GAMMA
    assert (p * q).is_homogeneous(6)


def test_pow_and_scalars():
    assert (H + 1) ** 3 == H**3 + 3 * H**2 + 3 * H + 1
    assert (H * Fraction(1, 2)) * 2 == H
    assert H**0 == GradedPoly.one()


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        H + GradedPoly.symbol("h", modulus=5)
    with pytest.raises(FieldMismatchError):
        PolyMatrix.build([[H, 1], [1, GradedPoly.one(7)]])


def test_mod_coercion():
    p = GradedPoly.constant(Fraction(1, 2), modulus=7)
    assert p == GradedPoly.constant(4, modulus=7)
    q = (Fraction(1, 360) - BETA * Fraction(1, 72) + BETA**2 * Fraction(1, 90))
    r = q.reduce_mod(11)
    # 1/360 = 1/8 = 7, -1/72 = -1/6 = 9, 1/90 = 1/2 = 6 (mod 11)
    assert r.beta_coefficients() == [7, 9, 6]
    with pytest.raises(ZeroDivisionError):
        GradedPoly.constant(Fraction(1, 11), modulus=11)


def test_json_round_trip():
    p = sample_p2()
    obj = p.to_json_obj()
    assert obj == [
        {"e": [0, 0, 0, 1], "c": "1/3"},
        {"e": [1, 0, 1, 0], "c": "-1/6"},
        {"e": [3, 0, 0, 0], "c": "1/6"},
    ]
    assert GradedPoly.from_json_obj(obj) == p
    m = p.reduce_mod(5)
    assert GradedPoly.from_json_obj(m.to_json_obj(), modulus=5) == m


def test_exact_div():
    num = (H + BETA) * (H**2 - GAMMA) * 6
    assert exact_div(num, (H + BETA) * 2) == (H**2 - GAMMA) * 3
    with pytest.raises(ArithmeticError):
        exact_div(H**2 + 1, H + 1)


def test_det_small_examples():
    assert det(PolyMatrix.build([[1]])) == 1
    m = PolyMatrix.build([[BETA, 1], [4, BETA]])
    assert det(m) == BETA**2 - 4
    # row swap flips the sign
    m2 = PolyMatrix.build([[4, BETA], [BETA, 1]])
    assert det(m2) == -(BETA**2 - 4)


def _random_poly(rng: random.Random, symbols: int, modulus=None) -> GradedPoly:
    coeffs = {}
    for _ in range(rng.randint(1, 3)):
        mono = [0, 0, 0, 0]
        for i in range(symbols):
            mono[i] = rng.randint(0, 2)
        coeffs[tuple(mono)] = rng.randint(-4, 4)
    return GradedPoly(coeffs, modulus)


def test_det_engines_agree_multivariate():
    rng = random.Random(20260501)
    for _ in range(8):
        rows = [[_random_poly(rng, 4) for _ in range(4)] for _ in range(4)]
        m = PolyMatrix.build(rows)
        d1 = det_minor_expansion(m)
        d2 = det_bareiss(m)
        d3 = det(m)
        assert d1 == d2 == d3


def test_det_engines_agree_univariate():
    rng = random.Random(77)
    for _ in range(8):
        rows = [
            [poly_from_coeffs([rng.randint(-3, 3) for _ in range(3)]) for _ in range(4)]
            for _ in range(4)
        ]
        m = PolyMatrix.build(rows)
        assert det_interpolate(m) == det_minor_expansion(m) == det(m)


def test_det_mod_dense_matches_minor():
    rng = random.Random(11)
    for p in (5, 11, 101):
        for _ in range(6):
            rows = [[_random_poly(rng, 0, p) * 1 for _ in range(3)] for _ in range(3)]
            # univariate in beta
            rows = [
                [
                    poly_from_coeffs([rng.randint(0, p - 1) for _ in range(3)], "beta", p)
                    for _ in range(3)
                ]
                for _ in range(3)
            ]
            m = PolyMatrix.build(rows, modulus=p)
            dense = det(m)
            assert dense == det_minor_expansion(m)
            coeff_rows = [[e.beta_coefficients() for e in row] for row in m.entries]
            assert poly_from_coeffs(det_mod_univariate(coeff_rows, p), "beta", p) == dense


def test_det_mod_python_fallback_path():
    # big prime pushes the engine off the numpy path
    p = 2**31 - 1
    rows = [
        [poly_from_coeffs([1, 2], "beta", p), poly_from_coeffs([3], "beta", p)],
        [poly_from_coeffs([0, 5], "beta", p), poly_from_coeffs([7, 1], "beta", p)],
    ]
    m = PolyMatrix.build(rows, modulus=p)
    assert det(m) == det_minor_expansion(m)


def test_det_numeric():
    rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 5)]]
    assert det_numeric(rows) == Fraction(1, 10) - Fraction(1, 12)
    assert det_numeric([[Fraction(0)]]) == 0


def test_det_singular_and_zero_column():
    m = PolyMatrix.build([[H, H], [H, H]])
    assert det(m).is_zero()
    m2 = PolyMatrix.build([[0, H], [0, H**2]])
    assert det_bareiss(m2).is_zero()
    assert det_minor_expansion(m2).is_zero()


def test_root_multiplicity():
    p = (1 - BETA) * (1 - 4 * BETA) * Fraction(1, 360)
    assert root_multiplicity(p, 1) == 1
    assert root_multiplicity(p, Fraction(1, 4)) == 1
    assert root_multiplicity(p, 3) == 0
    q = (BETA - 2) ** 3 * (BETA + 1)
    assert root_multiplicity(q, 2) == 3
    assert root_multiplicity(q, -1) == 1
    with pytest.raises(ValueError):
        root_multiplicity(GradedPoly.zero(), 1)
    with pytest.raises(ValueError):
        root_multiplicity(H * BETA, 1)


def test_coeff_lists():
    q = Fraction(1, 360) - BETA * Fraction(1, 72) + BETA**2 * Fraction(1, 90)
    assert q.beta_coefficients() == [
        Fraction(1, 360),
        Fraction(-1, 72),
        Fraction(1, 90),
    ]
    assert GradedPoly.zero().beta_coefficients() == [0]
    with pytest.raises(ValueError):
        (H * BETA).beta_coefficients()
