"""Involutions on the line and their conic lifts."""

import pytest

from coble import (
    BinForm,
    DegenerateError,
    Mat,
    MoebiusMap,
    compose,
    fixed_quadratic,
    involution_from_fixed_quadratic,
    involution_from_pencil,
    jacobian_pair,
    substitute,
    sym2_lift,
    veronese,
)
from coble.binforms import add_scaled

from conftest import rand_nonzero, rand_quadratic, rand_squarefree_quadratic

UV = BinForm((0, 1, 0))
U2_MINUS_V2 = BinForm((1, 0, -1))
U2_PLUS_V2 = BinForm((1, 0, 1))

NEGATE = MoebiusMap(-1, 0, 0, 1)  # t -> -t
INVERT = MoebiusMap(0, 1, 1, 0)  # t -> 1/t
NEG_INVERT = MoebiusMap(0, -1, 1, 0)  # t -> -1/t


def test_involutions_from_the_three_named_quadratics():
    assert involution_from_fixed_quadratic(UV) == NEGATE
    assert involution_from_fixed_quadratic(U2_MINUS_V2) == INVERT
    assert involution_from_fixed_quadratic(U2_PLUS_V2) == NEG_INVERT


def test_parabolic_quadratic_is_rejected():
    with pytest.raises(DegenerateError) as err:
        involution_from_fixed_quadratic(BinForm((1, 2, 1)))  # (U+V)^2
    assert err.value.kind == "degenerate-involution"


def test_involution_square_and_trace(rng):
    for _ in range(100):
        f = rand_squarefree_quadratic(rng)
        inv = involution_from_fixed_quadratic(f)
        assert inv.a + inv.d == 0
        assert inv.is_involution()
        assert fixed_quadratic(inv).proportional_to(f)


def test_pencil_involutions():
    assert involution_from_pencil(U2_MINUS_V2, U2_PLUS_V2) == NEGATE
    assert involution_from_pencil(BinForm((1, 0, 0)), BinForm((0, 0, 1))) == NEGATE
    # J(UV, U^2 - V^2) = -2(U^2 + V^2), hence t -> -1/t
    assert involution_from_pencil(UV, U2_MINUS_V2) == NEG_INVERT


def test_pencil_rejects_shared_roots():
    with pytest.raises(DegenerateError) as err:
        involution_from_pencil(UV, BinForm((1, 0, 0)))
    assert err.value.kind == "non-coprime-pair"


def test_compose_identity_example():
    assert compose(NEG_INVERT, compose(INVERT, NEGATE)).is_identity()


def test_involution_predicates():
    assert not MoebiusMap(1, 1, 0, 1).is_involution()  # t -> t + 1
    assert INVERT.is_involution()
    assert not MoebiusMap.identity().is_involution()


def test_fixed_quadratic_examples():
    assert fixed_quadratic(NEGATE).proportional_to(UV)
    assert fixed_quadratic(INVERT).proportional_to(U2_MINUS_V2)
    with pytest.raises(DegenerateError):
        fixed_quadratic(MoebiusMap.identity())
    with pytest.raises(DegenerateError):
        fixed_quadratic(MoebiusMap(1, 1, 0, 1))


def test_pencil_preservation(rng):
    # sigma fixes every member of its pencil, as forms up to scale
    cases = 0
    while cases < 20:
        a, b = rand_quadratic(rng), rand_quadratic(rng)
        try:
            sigma = involution_from_pencil(a, b)
        except DegenerateError:
            continue
        cases += 1
        for _ in range(50):
            member = add_scaled(rand_nonzero(rng), a, rand_nonzero(rng), b)
            if member is None:
                continue
            assert substitute(member, sigma).proportional_to(member)


def test_pencil_fixed_divisor_is_the_jacobian(rng):
    done = 0
    while done < 100:
        a, b = rand_quadratic(rng), rand_quadratic(rng)
        try:
            sigma = involution_from_pencil(a, b)
        except DegenerateError:
            continue
        done += 1
        assert fixed_quadratic(sigma).proportional_to(jacobian_pair(a, b))


def test_sym2_lift_examples():
    assert sym2_lift(MoebiusMap.identity()) == Mat.identity(3)
    lifted = sym2_lift(NEGATE)
    assert lifted == Mat(((1, 0, 0), (0, -1, 0), (0, 0, 1)))
    swap = sym2_lift(INVERT)
    assert swap == Mat(((0, 0, 1), (0, 1, 0), (1, 0, 0)))


def test_sym2_lift_commutes_with_embedding(rng):
    from coble.projplane import PlanePoint

    for _ in range(50):
        m = _rand_map(rng)
        u, v = rng.randint(-9, 9), rng.randint(1, 9)
        direct = veronese(*m.apply(u, v))
        lifted = PlanePoint(sym2_lift(m).apply(veronese(u, v).coords))
        assert direct == lifted


def test_sym2_lift_homomorphism_up_to_scale(rng):
    for _ in range(50):
        f, g = _rand_map(rng), _rand_map(rng)
        lhs = sym2_lift(f @ g)
        rhs = sym2_lift(f) @ sym2_lift(g)
        flat_l = [x for row in lhs.rows for x in row]
        flat_r = [x for row in rhs.rows for x in row]
        pivot = next(i for i, x in enumerate(flat_l) if x)
        assert all(x * flat_r[pivot] == y * flat_l[pivot] for x, y in zip(flat_l, flat_r))


def test_sym2_lift_preserves_conic(rng):
    from coble.projplane import Conic, PlanePoint

    conic = Conic.standard()
    for _ in range(50):
        m = _rand_map(rng)
        u, v = rng.randint(-9, 9), rng.randint(1, 9)
        image = PlanePoint(sym2_lift(m).apply(veronese(u, v).coords))
        assert conic.contains(image)


def _rand_map(rng):
    from coble.engine import random_invertible_map

    return random_invertible_map(rng)


def test_projective_equality_is_cross_multiplicative():
    assert MoebiusMap(2, 0, 0, 2) == MoebiusMap.identity()
    assert MoebiusMap(-3, 0, 0, 3) == NEGATE
    assert MoebiusMap(1, 0, 0, 2) != MoebiusMap(1, 0, 0, 3)
