"""The singular quintic model with a tetrahedron of multiple edges.

Members are alpha*X0*X1^2*X2^2 + beta*X0*X1^2*X3^2 + gamma*X0*X2^2*X3^2 +
X1*X2*X3*q(X0..X3) with alpha, beta, gamma nonzero and q a quadric stored
in the fixed monomial order X0^2, X0X1, X0X2, X0X3, X1^2, X1X2, X1X3,
X2^2, X2X3, X3^2. The family is preserved by the group generated by
coordinate scalings and permutations of X1, X2, X3; orbit invariants are
weight-zero Laurent monomials in the 13 coefficients, minimized
lexicographically over the six permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from .errors import DegenerateError, SchemaError
from .linalg import Mat, invert, nullspace, primitive_integer
from .mpoly import MPoly
from .scalars import as_scalar, format_scalar

VARS = ("X0", "X1", "X2", "X3")

QUADRIC_MONOMIALS = (
    (2, 0, 0, 0),
    (1, 1, 0, 0),
    (1, 0, 1, 0),
    (1, 0, 0, 1),
    (0, 2, 0, 0),
    (0, 1, 1, 0),
    (0, 1, 0, 1),
    (0, 0, 2, 0),
    (0, 0, 1, 1),
    (0, 0, 0, 2),
)

# cross terms among X1X2, X1X3, X2X3
_CROSS_SLOTS = (5, 6, 8)

# the full degree-5 monomial attached to each of the 13 coefficients:
# three tetrahedron terms, then X1*X2*X3 times each quadric monomial
TERM_MONOMIALS = ((1, 2, 2, 0), (1, 2, 0, 2), (1, 0, 2, 2)) + tuple(
    (e0, e1 + 1, e2 + 1, e3 + 1) for (e0, e1, e2, e3) in QUADRIC_MONOMIALS
)


@dataclass(frozen=True)
class QuinticMember:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    q: tuple

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            value = as_scalar(getattr(self, name))
            if value == 0:
                raise SchemaError("zero-parameter", f"{name} must be nonzero")
            object.__setattr__(self, name, value)
        qs = tuple(as_scalar(x) for x in self.q)
        if len(qs) != 10:
            raise SchemaError("quadric", "q takes exactly 10 coefficients")
        object.__setattr__(self, "q", qs)

    def coefficient_vector(self) -> tuple:
        return (self.alpha, self.beta, self.gamma) + self.q

    def to_json(self) -> dict:
        return {
            "alpha": format_scalar(self.alpha),
            "beta": format_scalar(self.beta),
            "gamma": format_scalar(self.gamma),
            "q": [format_scalar(x) for x in self.q],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "QuinticMember":
        try:
            return cls(doc["alpha"], doc["beta"], doc["gamma"], tuple(doc["q"]))
        except (KeyError, TypeError) as exc:
            raise SchemaError("quintic", f"bad quintic document: {doc!r}") from exc


def expand_equation(member: QuinticMember) -> MPoly:
    """The fully expanded degree-5 equation of the member."""
    terms = {}
    for coeff, mono in zip(member.coefficient_vector(), TERM_MONOMIALS):
        if coeff:
            terms[mono] = terms.get(mono, Fraction(0)) + coeff
    return MPoly(VARS, terms)


def member_from_equation(equation: MPoly) -> QuinticMember:
    """Inverse of expand_equation; rejects polynomials outside the family."""
    if equation.vars != VARS:
        raise SchemaError("quintic", "equation must live in X0..X3")
    leftovers = set(equation.terms) - set(TERM_MONOMIALS)
    if leftovers:
        raise SchemaError("quintic", f"equation has terms outside the family: {leftovers}")
    coeffs = [equation.coeff(mono) for mono in TERM_MONOMIALS]
    return QuinticMember(coeffs[0], coeffs[1], coeffs[2], tuple(coeffs[3:]))


# -- local multiplicities ------------------------------------------------


def _check_surface(surface: MPoly):
    if surface.is_zero():
        raise SchemaError("zero-polynomial", "multiplicities of the zero polynomial")
    if not surface.is_homogeneous():
        raise SchemaError("not-homogeneous", "multiplicities need a homogeneous form")


def multiplicity_at_point(surface: MPoly, point) -> int:
    """Order of vanishing at a point of projective space: move the point to
    the first coordinate vertex by an invertible linear substitution and read
    off the lowest total degree in the remaining variables."""
    _check_surface(surface)
    n = len(surface.vars)
    p = tuple(as_scalar(x) for x in point)
    if len(p) != n or not any(p):
        raise SchemaError("point", f"need a nonzero point with {n} coordinates")
    pivot = next(i for i, x in enumerate(p) if x)
    columns = [p] + [tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n) if j != pivot]
    gens = MPoly.gens(surface.vars)
    mapping = {
        surface.vars[i]: sum((columns[j][i] * gens[j] for j in range(n)), MPoly.zero(surface.vars))
        for i in range(n)
    }
    shifted = surface.substitute(mapping)
    degree = surface.total_degree()
    return degree - max(e[0] for e in shifted.terms)


def multiplicity_along_line(surface: MPoly, form1, form2) -> int:
    """Vanishing order along the codimension-2 linear subspace cut by two
    independent linear forms: minimum total degree in the two forms after a
    linear change making them the first two coordinates."""
    _check_surface(surface)
    n = len(surface.vars)
    l1 = tuple(as_scalar(x) for x in form1)
    l2 = tuple(as_scalar(x) for x in form2)
    if len(l1) != n or len(l2) != n:
        raise SchemaError("form", f"linear forms need {n} coefficients")
    units = [tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n)]
    change = None
    for extra in combinations(range(n), n - 2):
        candidate = Mat([l1, l2] + [units[j] for j in extra])
        if candidate.det() != 0:
            change = candidate
            break
    if change is None:
        raise DegenerateError("dependent-forms", "the two linear forms are proportional")
    back = invert(change)
    gens = MPoly.gens(surface.vars)
    mapping = {
        surface.vars[i]: sum(
            (back.rows[i][j] * gens[j] for j in range(n)), MPoly.zero(surface.vars)
        )
        for i in range(n)
    }
    shifted = surface.substitute(mapping)
    return min(e[0] + e[1] for e in shifted.terms)


TRIPLE_VERTEX = (1, 0, 0, 0)

# edges as the index pair of the two coordinates that vanish on them
VERTEX_EDGES = ((2, 3), (1, 3), (1, 2))
TRIANGLE_EDGES = ((0, 3), (0, 2), (0, 1))


def _edge_forms(pair):
    return tuple(
        tuple(Fraction(int(i == which)) for i in range(4)) for which in pair
    )


def tetrahedron_report(member: QuinticMember) -> dict:
    """Multiplicity of the member at the triple vertex and along all six
    tetrahedron edges."""
    surface = expand_equation(member)
    report = {
        "vertex": multiplicity_at_point(surface, TRIPLE_VERTEX),
        "vertex_edges": [],
        "triangle_edges": [],
    }
    for pair in VERTEX_EDGES:
        report["vertex_edges"].append(multiplicity_along_line(surface, *_edge_forms(pair)))
    for pair in TRIANGLE_EDGES:
        report["triangle_edges"].append(multiplicity_along_line(surface, *_edge_forms(pair)))
    return report


# -- the codimension-3 condition ------------------------------------------


def is_codim3_member(member: QuinticMember) -> bool:
    """True when q carries none of the cross terms X1X2, X1X3, X2X3."""
    return all(member.q[slot] == 0 for slot in _CROSS_SLOTS)


def _restricted_quadric_matrix(member: QuinticMember) -> Mat:
    # symmetric matrix of q(0, X1, X2, X3) in the variables X1, X2, X3
    q = member.q
    half = Fraction(1, 2)
    return Mat(
        (
            (q[4], half * q[5], half * q[6]),
            (half * q[5], q[7], half * q[8]),
            (half * q[6], half * q[8], q[9]),
        )
    )


def polar_condition(member: QuinticMember, k: int) -> bool:
    """Whether the polar of the k-th triangle vertex with respect to the
    restricted quadric q(0, X1, X2, X3) is the opposite coordinate line,
    i.e. d q_hat / d X_k is proportional to X_k."""
    if k not in (1, 2, 3):
        raise SchemaError("index", "polar conditions are indexed by 1, 2, 3")
    matrix = _restricted_quadric_matrix(member)
    if matrix.det() == 0:
        raise DegenerateError(
            "degenerate-quadric", "the restricted quadric is singular; no polar lines"
        )
    row = matrix.rows[k - 1]
    return all(row[j] == 0 for j in range(3) if j != k - 1)


# -- orbit invariants -------------------------------------------------------


_EXPONENTS_CACHE = None


def invariant_exponents() -> tuple:
    """Integer exponent vectors spanning the weight-zero Laurent monomials in
    the 13 coefficients: a kernel basis of the 4x13 matrix whose columns are
    the degree-5 monomials attached to each coefficient."""
    global _EXPONENTS_CACHE
    if _EXPONENTS_CACHE is None:
        weight_rows = [
            [Fraction(mono[k]) for mono in TERM_MONOMIALS] for k in range(4)
        ]
        basis = nullspace(Mat(weight_rows))
        _EXPONENTS_CACHE = tuple(primitive_integer(vec) for vec in basis)
    return _EXPONENTS_CACHE


def _evaluate_invariants(vec) -> tuple:
    exponents = invariant_exponents()
    for exps in exponents:
        for c, e in zip(vec, exps):
            if e < 0 and c == 0:
                raise DegenerateError(
                    "non-generic-member",
                    "a coefficient appearing in an invariant denominator vanishes",
                )
    values = []
    for exps in exponents:
        val = Fraction(1)
        for c, e in zip(vec, exps):
            if e:
                val *= c**e
        values.append(val)
    return tuple(values)


def apply_group_element(member: QuinticMember, scales, perm) -> QuinticMember:
    """Act by X0 -> s0*X0, Xk -> sk*X_perm(k) for a permutation of (1,2,3);
    the family is preserved, so the result is again a member."""
    ss = tuple(as_scalar(s) for s in scales)
    if len(ss) != 4 or any(s == 0 for s in ss):
        raise SchemaError("scales", "need four nonzero scale factors")
    if sorted(perm) != [1, 2, 3]:
        raise SchemaError("permutation", "perm must permute (1, 2, 3)")
    gens = MPoly.gens(VARS)
    mapping = {"X0": ss[0] * gens[0]}
    for k in (1, 2, 3):
        mapping[f"X{k}"] = ss[k] * gens[perm[k - 1]]
    return member_from_equation(expand_equation(member).substitute(mapping))


def orbit_invariants(member: QuinticMember) -> tuple:
    """Canonical invariant vector: evaluate the weight-zero monomials on the
    coefficient vector and minimize lexicographically over the six index
    permutations. Members in one group orbit get identical outputs."""
    best = None
    for perm in permutations((1, 2, 3)):
        permuted = apply_group_element(member, (1, 1, 1, 1), perm)
        values = _evaluate_invariants(permuted.coefficient_vector())
        if best is None or values < best:
            best = values
    return best


def moduli_dimensions() -> dict:
    """Parameter counts: the family is a projective space of dimension 12,
    the projectivized symmetry group has dimension 3, the quotient dimension
    is 9, and the cross-term-free slice descends to dimension 6."""
    ambient = len(TERM_MONOMIALS) - 1
    group = 3
    quotient = ambient - group
    return {
        "ambient": ambient,
        "group": group,
        "quotient": quotient,
        "codim3_quotient": quotient - len(_CROSS_SLOTS),
    }


def random_member(rng, generic: bool = True) -> QuinticMember:
    """Seeded random member; with ``generic`` the X0^2 coefficient of q and
    the restricted quadric are kept nondegenerate and all 13 coefficients
    nonzero (so orbit invariants are defined)."""
    while True:
        picks = [Fraction(rng.randint(-9, 9)) for _ in range(13)]
        if generic and any(x == 0 for x in picks):
            continue
        if any(x == 0 for x in picks[:3]):
            continue
        member = QuinticMember(picks[0], picks[1], picks[2], tuple(picks[3:]))
        if generic and _restricted_quadric_matrix(member).det() == 0:
            continue
        return member
