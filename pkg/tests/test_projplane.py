"""Plane geometry: polars, Pascal hexagons, dependence certificates."""

from fractions import Fraction

import pytest

from coble import (
    BinForm,
    Conic,
    DegenerateError,
    Mat,
    MoebiusMap,
    PlaneLine,
    PlanePoint,
    coeff_matrix_det,
    dependence_certificate,
    fixed_quadratic,
    involution_from_fixed_quadratic,
    pascal_points,
    pole_of_quadratic,
    veronese,
)
from coble.projplane import seed_parameter

from conftest import rand_involution

NEGATE = MoebiusMap(-1, 0, 0, 1)
INVERT = MoebiusMap(0, 1, 1, 0)
NEG_INVERT = MoebiusMap(0, -1, 1, 0)


def test_polar_line_of_center():
    conic = Conic.standard()
    line = conic.polar_line(PlanePoint((0, 1, 0)))
    assert line == PlaneLine((0, 1, 0))  # X1 = 0 up to scale


def test_polar_of_conic_point_is_tangent():
    conic = Conic.standard()
    for t in (0, 1, -2, Fraction(3, 4)):
        p = veronese(t, 1)
        tangent = conic.polar_line(p)
        assert tangent.contains(p)


def test_pole_polar_round_trip(rng):
    conic = Conic.standard()
    for _ in range(50):
        coords = [rng.randint(-9, 9) for _ in range(3)]
        if not any(coords):
            continue
        x = PlanePoint(coords)
        assert conic.pole(conic.polar_line(x)) == x


def test_degenerate_conic_rejected():
    degenerate = Conic(Mat(((1, 0, 0), (0, 0, 0), (0, 0, 0))))
    with pytest.raises(DegenerateError):
        degenerate.polar_line(PlanePoint((0, 1, 0)))


def test_pole_of_quadratic_matches_lifted_fixed_point():
    # the pole of p,q,r is [2r, -q, 2p]; its polar pulls back to the quadratic
    conic = Conic.standard()
    f = BinForm((3, -5, 7))
    pole = pole_of_quadratic(f)
    polar = conic.polar_line(pole)
    pulled = BinForm((polar.coords[0], polar.coords[1], polar.coords[2]))
    assert pulled.proportional_to(f)


def test_pascal_on_six_integer_parameters():
    conic = Conic.standard()
    points = [veronese(t, 1) for t in range(6)]
    result = pascal_points(conic, points)
    assert result.collinear


def test_pascal_random_suite(rng):
    conic = Conic.standard()
    for _ in range(200):
        params = set()
        while len(params) < 6:
            params.add(Fraction(rng.randint(-40, 40), rng.randint(1, 12)))
        assert pascal_points(conic, [veronese(t, 1) for t in params]).collinear


def test_pascal_rejects_repeated_points():
    conic = Conic.standard()
    p = [veronese(t, 1) for t in (0, 1, 2)]
    with pytest.raises(DegenerateError) as err:
        pascal_points(conic, p + p)
    assert err.value.kind == "hexagon-degenerate"


def test_pascal_rejects_off_conic_points():
    conic = Conic.standard()
    points = [veronese(t, 1) for t in range(5)] + [PlanePoint((1, 1, 2))]
    with pytest.raises(DegenerateError) as err:
        pascal_points(conic, points)
    assert err.value.kind == "not-on-conic"


def test_certificate_for_sigma3_equal_sigma1():
    # g = s1 s2 s1 is 1/t: not the identity, squares to the identity
    cert = dependence_certificate(NEGATE, INVERT, NEGATE)
    assert cert.closure_ok
    assert cert.collinear
    assert cert.pascal_points is None  # two involutions coincide
    assert cert.centers_det == 0


def test_certificate_rejects_identity_composite():
    with pytest.raises(DegenerateError) as err:
        dependence_certificate(NEG_INVERT, INVERT, NEGATE)  # s3 s2 s1 = 1
    assert err.value.kind == "composite-identity"


def test_certificate_rejects_non_involution():
    with pytest.raises(DegenerateError):
        dependence_certificate(MoebiusMap(1, 1, 0, 1), INVERT, NEGATE)


def test_certificate_rejects_infinite_order_composite():
    s3 = involution_from_fixed_quadratic(BinForm((1, 0, 3)))
    with pytest.raises(DegenerateError) as err:
        dependence_certificate(NEGATE, INVERT, s3)
    assert err.value.kind == "composite-not-period-two"


def test_centers_det_is_four_times_coeff_det(rng):
    done = 0
    while done < 60:
        s1, s2 = rand_involution(rng), rand_involution(rng)
        u = _centralizer_element(rng, s2 @ s1)
        if u is None:
            continue
        s3 = u @ s1 @ u.inverse()
        g = s3 @ s2 @ s1
        if g.is_identity():
            continue
        cert = _retry_certificate(s1, s2, s3)
        if cert is None:
            continue
        done += 1
        fs = [fixed_quadratic(s) for s in (s1, s2, s3)]
        assert cert.centers_det == 4 * coeff_matrix_det(*fs)
        assert cert.collinear == (coeff_matrix_det(*fs) == 0)
        assert cert.collinear


def test_certificate_pascal_cross_check(rng):
    done = 0
    while done < 30:
        s1, s2 = rand_involution(rng), rand_involution(rng)
        u = _centralizer_element(rng, s2 @ s1)
        if u is None:
            continue
        s3 = u @ s1 @ u.inverse()
        if (s3 @ s2 @ s1).is_identity() or s3 == s1 or s3 == s2 or s1 == s2:
            continue
        cert = _retry_certificate(s1, s2, s3)
        if cert is None or cert.pascal_points is None:
            continue
        done += 1
        assert cert.pascal_matches_centers


def _centralizer_element(rng, h):
    # invertible elements of span{1, h} commute with h
    for _ in range(20):
        x, y = rng.randint(-5, 5), rng.randint(-5, 5)
        a = x + y * h.a
        b = y * h.b
        c = y * h.c
        d = x + y * h.d
        if a * d - b * c != 0:
            return MoebiusMap(a, b, c, d)
    return None


def _retry_certificate(s1, s2, s3, attempts=10):
    for seed in range(attempts):
        try:
            return dependence_certificate(s1, s2, s3, seed=seed)
        except DegenerateError as err:
            if not err.retryable:
                return None
    return None


def test_seed_parameters_are_distinct():
    seen = {seed_parameter(n) for n in range(20)}
    assert len(seen) == 20
