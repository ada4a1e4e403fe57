"""The tetrahedron quintic: multiplicities, the cross-term condition, orbits."""

import itertools
from fractions import Fraction

import pytest

from coble import (
    DegenerateError,
    MPoly,
    QuinticMember,
    SchemaError,
    apply_group_element,
    expand_equation,
    is_codim3_member,
    moduli_dimensions,
    multiplicity_along_line,
    multiplicity_at_point,
    orbit_invariants,
    polar_condition,
    tetrahedron_report,
)
from coble.linalg import Mat
from coble.quintic import TERM_MONOMIALS, invariant_exponents, random_member

from conftest import rand_nonzero


def member(alpha=1, beta=1, gamma=1, **q_entries):
    order = ("x00", "x01", "x02", "x03", "x11", "x12", "x13", "x22", "x23", "x33")
    q = tuple(Fraction(q_entries.get(k, 0)) for k in order)
    return QuinticMember(alpha, beta, gamma, q)


def test_expand_simple_member():
    m = member(x00=1)  # q = X0^2
    eq = expand_equation(m)
    expected = MPoly(
        ("X0", "X1", "X2", "X3"),
        {
            (1, 2, 2, 0): 1,
            (1, 2, 0, 2): 1,
            (1, 0, 2, 2): 1,
            (2, 1, 1, 1): 1,
        },
    )
    assert eq == expected


def test_zero_quadric_is_accepted():
    eq = expand_equation(member())
    assert len(eq.terms) == 3


def test_expanded_equation_is_quintic(rng):
    for _ in range(30):
        m = random_member(rng, generic=False)
        eq = expand_equation(m)
        assert eq.is_homogeneous() and eq.total_degree() == 5


def test_alpha_beta_gamma_must_be_nonzero():
    with pytest.raises(SchemaError):
        QuinticMember(0, 1, 1, (0,) * 10)


def test_vertex_multiplicities():
    generic = member(x00=1)
    eq = expand_equation(generic)
    assert multiplicity_at_point(eq, (1, 0, 0, 0)) == 3
    flat = member(x01=1)  # X0^2 coefficient vanishes
    assert multiplicity_at_point(expand_equation(flat), (1, 0, 0, 0)) == 4
    # a point off the surface
    assert multiplicity_at_point(eq, (1, 1, 1, 1)) == 0


def test_edge_multiplicities():
    eq = expand_equation(member(x00=1))
    x2 = (0, 0, 1, 0)
    x3 = (0, 0, 0, 1)
    assert multiplicity_along_line(eq, x2, x3) == 2  # edge X2 = X3 = 0
    x0 = (1, 0, 0, 0)
    x1 = (0, 1, 0, 0)
    assert multiplicity_along_line(eq, x0, x1) == 1  # triangle edge


def test_tetrahedron_report_for_random_generic_members(rng):
    for _ in range(25):
        m = random_member(rng)
        report = tetrahedron_report(m)
        assert report["vertex"] == 3
        assert report["vertex_edges"] == [2, 2, 2]
        assert report["triangle_edges"] == [1, 1, 1]


def test_dependent_edge_forms_rejected():
    eq = expand_equation(member(x00=1))
    with pytest.raises(DegenerateError):
        multiplicity_along_line(eq, (1, 0, 0, 0), (2, 0, 0, 0))


def test_codim3_and_polar_conditions():
    diagonal = member(x00=1, x11=1, x22=2, x33=3)
    assert is_codim3_member(diagonal)
    assert all(polar_condition(diagonal, k) for k in (1, 2, 3))

    crossed = member(x00=1, x11=1, x12=1, x22=2, x33=3)
    assert not is_codim3_member(crossed)
    assert not polar_condition(crossed, 1)

    # cross-term free but with a rank-deficient restricted quadric
    flat = member(x00=1, x11=1, x22=1)
    assert is_codim3_member(flat)
    with pytest.raises(DegenerateError) as err:
        polar_condition(flat, 1)
    assert err.value.kind == "degenerate-quadric"


def test_codim3_iff_all_polar_conditions(rng):
    for _ in range(200):
        m = random_member(rng, generic=False)
        try:
            polars = [polar_condition(m, k) for k in (1, 2, 3)]
        except DegenerateError:
            continue
        assert is_codim3_member(m) == all(polars)


def test_invariant_exponents_annihilate_the_weights():
    for exps in invariant_exponents():
        for k in range(4):
            assert sum(e * mono[k] for e, mono in zip(exps, TERM_MONOMIALS)) == 0
    assert len(invariant_exponents()) == 9


def test_orbit_invariants_constant_on_orbits(rng):
    perms = list(itertools.permutations((1, 2, 3)))
    for _ in range(100):
        m = random_member(rng)
        scales = tuple(rand_nonzero(rng) for _ in range(4))
        moved = apply_group_element(m, scales, rng.choice(perms))
        assert orbit_invariants(moved) == orbit_invariants(m)


def test_orbit_invariants_distinguish_random_members(rng):
    for _ in range(100):
        a, b = random_member(rng), random_member(rng)
        if a.coefficient_vector() == b.coefficient_vector():
            continue
        assert orbit_invariants(a) != orbit_invariants(b)


def test_invariant_denominators_only_involve_the_tetrahedron_coefficients():
    # with pivots on (alpha, beta, gamma, q0), every kernel vector carries q0
    # with a non-negative exponent, so valid members never hit a zero
    # denominator: a vanishing q0 merely zeroes some invariant values
    for exps in invariant_exponents():
        assert all(e >= 0 for e in exps[3:])
    degenerate = member(x11=1, x22=1, x33=1)  # q0 = 0
    values = orbit_invariants(degenerate)
    assert len(values) == 9


def test_vanishing_denominator_guard():
    from coble.quintic import _evaluate_invariants

    bad = (Fraction(0),) * 13  # alpha = 0 cannot occur in a valid member
    with pytest.raises(DegenerateError) as err:
        _evaluate_invariants(bad)
    assert err.value.kind == "non-generic-member"


def test_group_action_preserves_the_family(rng):
    for _ in range(30):
        m = random_member(rng, generic=False)
        scales = tuple(rand_nonzero(rng) for _ in range(4))
        perm = rng.choice(list(itertools.permutations((1, 2, 3))))
        moved = apply_group_element(m, scales, perm)
        assert set(expand_equation(moved).terms) <= set(TERM_MONOMIALS)


def test_moduli_dimensions():
    assert moduli_dimensions() == {
        "ambient": 12,
        "group": 3,
        "quotient": 9,
        "codim3_quotient": 6,
    }


def test_multiplicity_requires_homogeneous_input():
    x = MPoly.gens(("X0", "X1", "X2", "X3"))
    with pytest.raises(SchemaError):
        multiplicity_at_point(x[0] + x[1] ** 2, (1, 0, 0, 0))


def test_multiplicity_invariant_under_coordinate_change():
    # G(x) = F(x0 + x1, x1, x2, x3); the vertex (0,1,0,0) of F pulls back
    # to (-1,1,0,0), where G must have the same multiplicity
    eq = expand_equation(member(x00=1))
    gens = MPoly.gens(("X0", "X1", "X2", "X3"))
    shifted = eq.substitute({"X0": gens[0] + gens[1]})
    assert multiplicity_at_point(shifted, (-1, 1, 0, 0)) == multiplicity_at_point(
        eq, (0, 1, 0, 0)
    )
    assert multiplicity_at_point(shifted, (1, 0, 0, 0)) == multiplicity_at_point(
        eq, (1, 0, 0, 0)
    )


def test_restricted_quadric_matrix_symmetry(rng):
    from coble.quintic import _restricted_quadric_matrix

    for _ in range(20):
        m = random_member(rng, generic=False)
        mat = _restricted_quadric_matrix(m)
        assert mat == Mat(tuple(zip(*mat.rows)))
