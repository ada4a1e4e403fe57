"""Sextic ingestion: implicitization, node verification, fiber extraction."""

from fractions import Fraction

import pytest

from coble import (
    BinForm,
    DegenerateError,
    PlanePoint,
    SexticParam,
    implicitize,
    is_singular_at,
    make_param_with_fibers,
    node_fiber,
)
from coble.binforms import conv_coeffs
from coble.sextic import MONOMIALS6, composite_coeffs


def split_fiber(s: int, t: int) -> BinForm:
    # (U - sV)(U - tV)
    return BinForm((1, -(s + t), s * t))


def rand_param(rng) -> SexticParam:
    while True:
        forms = []
        for _ in range(3):
            coeffs = [rng.randint(-9, 9) for _ in range(7)]
            if not any(coeffs):
                coeffs[0] = 1
            forms.append(BinForm(coeffs))
        param = SexticParam(tuple(forms))
        try:
            param.validate()
        except DegenerateError:
            continue
        return param


def test_monomial_order_is_graded_lex():
    assert MONOMIALS6[0] == (6, 0, 0)
    assert MONOMIALS6[1] == (5, 1, 0)
    assert MONOMIALS6[-1] == (0, 0, 6)
    assert len(MONOMIALS6) == 28


def test_implicitize_rejects_degenerate_image():
    # [V^6 : UV^5 : U^2V^4] traces a conic, not a sextic
    param = SexticParam(
        (
            BinForm((0, 0, 0, 0, 0, 0, 1)),
            BinForm((0, 0, 0, 0, 0, 1, 0)),
            BinForm((0, 0, 0, 0, 1, 0, 0)),
        )
    )
    with pytest.raises(DegenerateError) as err:
        implicitize(param)
    assert err.value.kind == "non-birational"


def test_implicitize_gives_exact_vanishing(rng):
    done = 0
    while done < 5:
        param = rand_param(rng)
        try:
            curve = implicitize(param)
        except DegenerateError:
            continue
        done += 1
        assert curve.total_degree() == 6 and curve.is_homogeneous()
        assert not any(composite_coeffs(curve, param))


def test_implicitize_is_sample_independent(rng):
    param, _ = make_param_with_fibers([split_fiber(1, 4)], rng)
    first = implicitize(param)
    other_samples = [Fraction(k, 2) for k in range(1, 75, 2)]
    second = implicitize(param, samples=other_samples)
    assert first == second  # both are primitive integer vectors


def test_forced_node_fiber_extraction(rng):
    for s, t in ((0, 1), (2, 5), (-3, 4)):
        fiber = split_fiber(s, t)
        param, nodes = make_param_with_fibers([fiber], rng)
        assert len(nodes) == 1
        got = node_fiber(param, nodes[0])
        assert got.proportional_to(fiber)
        curve = implicitize(param)
        assert is_singular_at(curve, nodes[0])


def test_node_fiber_divides_every_line_pullback(rng):
    fiber = split_fiber(1, 3)
    param, nodes = make_param_with_fibers([fiber], rng)
    p = nodes[0]
    # a third line through p, independent from the two used internally
    a, b, c = p.coords
    third = (b + c, -a, -a)
    if not any(third):
        third = (b, -a, 0)
    pullback = [Fraction(0)] * 7
    for scale, form in zip(third, param.phi):
        for k, coeff in enumerate(form.coeffs):
            pullback[k] += scale * coeff
    remainder = _poly_rem(pullback, list(node_fiber(param, p).coeffs))
    assert not any(remainder)


def _poly_rem(a, b):
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    while len(a) >= len(b):
        if a[0]:
            f = a[0] / b[0]
            for i in range(1, len(b)):
                a[i] -= f * b[i]
        a.pop(0)
    return a


def test_point_off_curve_reports_degree_zero(rng):
    param, _ = make_param_with_fibers([split_fiber(0, 2)], rng)
    curve = implicitize(param)
    p = None
    for x in range(1, 50):
        candidate = PlanePoint((x, 1, 1))
        if curve.evaluate(candidate.coords) != 0:
            p = candidate
            break
    with pytest.raises(DegenerateError) as err:
        node_fiber(param, p)
    assert err.value.kind == "not-on-curve"


def test_smooth_point_reported(rng):
    param, nodes = make_param_with_fibers([split_fiber(0, 2)], rng)
    curve = implicitize(param)
    for t in range(3, 40):
        p = PlanePoint(param.evaluate(Fraction(t), 1))
        if is_singular_at(curve, p):
            continue
        with pytest.raises(DegenerateError) as err:
            node_fiber(param, p)
        assert err.value.kind == "smooth-point"
        return
    raise AssertionError("no smooth point found")


def test_chain_rule_consistency(rng):
    # a successful squarefree fiber implies a singular image point
    fiber = split_fiber(2, 7)
    param, nodes = make_param_with_fibers([fiber], rng)
    curve = implicitize(param)
    assert node_fiber(param, nodes[0]).proportional_to(fiber)
    assert is_singular_at(curve, nodes[0])


def test_common_root_rejected():
    shared = BinForm((1, -1))  # U - V
    base = [1, 0, 0, 0, 0, 1]
    lifted = conv_coeffs(shared.coeffs, base)
    param = SexticParam((BinForm(lifted), BinForm(lifted), BinForm(lifted)))
    with pytest.raises(DegenerateError) as err:
        param.validate()
    assert err.value.kind == "common-root"


def test_singularity_of_coordinate_triangle():
    from coble import MPoly

    x0, x1, x2 = MPoly.gens(("X0", "X1", "X2"))
    triangle = x0 * x1 * x2
    assert is_singular_at(triangle, PlanePoint((1, 0, 0)))
    assert not is_singular_at(triangle, PlanePoint((1, 1, 0)))


def test_mpoly_json_round_trip(rng):
    from coble import MPoly

    param, _ = make_param_with_fibers([split_fiber(0, 3)], rng)
    curve = implicitize(param)
    assert MPoly.from_json(curve.to_json()) == curve
    assert SexticParam.from_json(param.to_json()) == param


def test_binform_json_round_trip():
    f = BinForm((1, Fraction(-7, 2), 10))
    assert BinForm.from_json(f.to_json()) == f


def test_irreducible_fiber_constructions(rng):
    # conjugate parameter pairs: the node is rational although the two
    # branch parameters are not
    fiber = BinForm((1, 0, 1))
    param, nodes = make_param_with_fibers([fiber], rng)
    assert node_fiber(param, nodes[0]).proportional_to(fiber)
    assert is_singular_at(implicitize(param), nodes[0])


def _param_with_conditions(rng, condition_rows):
    # random parametrization whose components satisfy the linear conditions
    from coble.linalg import Mat, nullspace

    basis = nullspace(Mat(condition_rows))
    while True:
        forms = []
        for _ in range(3):
            combo = [rng.randint(-9, 9) for _ in basis]
            cs = [sum(c * vec[k] for c, vec in zip(combo, basis)) for k in range(7)]
            if any(cs):
                forms.append(BinForm(cs))
        if len(forms) < 3:
            continue
        param = SexticParam(tuple(forms))
        try:
            param.validate()
        except DegenerateError:
            continue
        return param


def _eval_row(s):
    # row of the functional phi -> phi(s, 1)
    return [Fraction(s) ** (6 - k) for k in range(7)]


def _derivative_row(s):
    # row of the functional phi -> d/dt phi(t, 1) at t = s
    return [(6 - k) * Fraction(s) ** max(0, 5 - k) for k in range(7)]


def test_cusp_like_fiber_reported(rng):
    # vanishing derivative vector at t = 2: every line pullback has a
    # double root there, so the fiber quadratic is a square
    for _ in range(5):
        param = _param_with_conditions(rng, [_derivative_row(2)])
        p = PlanePoint(param.evaluate(2, 1))
        with pytest.raises(DegenerateError) as err:
            node_fiber(param, p)
        assert err.value.kind == "cusp-like-fiber"


def test_worse_singularity_reported(rng):
    # three parameters 0, 1, 2 forced onto one point: fiber degree >= 3
    rows = [
        [a - b for a, b in zip(_eval_row(0), _eval_row(1))],
        [a - b for a, b in zip(_eval_row(1), _eval_row(2))],
    ]
    for _ in range(5):
        param = _param_with_conditions(rng, rows)
        p = PlanePoint(param.evaluate(0, 1))
        with pytest.raises(DegenerateError) as err:
            node_fiber(param, p)
        assert err.value.kind == "worse-singularity"
