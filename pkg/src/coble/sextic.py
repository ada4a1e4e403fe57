"""Rational plane sextics from degree-6 parametrizations.

Implicitization is exact linear algebra: the 28 degree-6 monomials are
evaluated at 37 deterministic rational parameters (37 = 36 + 1, so that
vanishing at the samples is equivalent to the degree-36 composite vanishing
identically) and a one-dimensional kernel is demanded. Node fibers come
from the gcd of the pullbacks of two independent lines through the node;
only gcds over Q are computed, which is enough because the fiber quadratic
of a rational double point is itself rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .binforms import BinForm, conv_coeffs, discriminant, gcd_forms
from .errors import DegenerateError, SchemaError
from .linalg import Mat, nullspace, primitive_integer
from .mpoly import MPoly
from .projplane import PlanePoint
from .scalars import as_scalar

PLANE_VARS = ("X0", "X1", "X2")

SAMPLE_COUNT = 37


def degree6_monomials() -> tuple:
    """The 28 exponent triples of degree 6, graded-lex descending."""
    out = []
    for a in range(6, -1, -1):
        for b in range(6 - a, -1, -1):
            out.append((a, b, 6 - a - b))
    return tuple(out)


MONOMIALS6 = degree6_monomials()


@dataclass(frozen=True)
class SexticParam:
    phi: tuple  # three BinForms of degree 6

    def __post_init__(self):
        forms = tuple(self.phi)
        if len(forms) != 3 or not all(isinstance(f, BinForm) for f in forms):
            raise SchemaError("param", "a parametrization is a triple of binary forms")
        if any(f.degree != 6 for f in forms):
            raise SchemaError("degree", "parametrization components must have degree 6")
        object.__setattr__(self, "phi", forms)

    def validate(self):
        """Enforce the no-common-root invariant (checked lazily so that
        degenerate inputs can still be fed to implicitize and rejected there)."""
        g = gcd_forms(gcd_forms(self.phi[0], self.phi[1]), self.phi[2])
        if g.degree > 0:
            raise DegenerateError(
                "common-root", "parametrization components share a root"
            )

    def evaluate(self, u, v) -> tuple:
        return tuple(f.evaluate(u, v) for f in self.phi)

    def to_json(self) -> dict:
        return {"phi": [f.to_json() for f in self.phi]}

    @classmethod
    def from_json(cls, doc: dict) -> "SexticParam":
        try:
            forms = tuple(BinForm.from_json(d) for d in doc["phi"])
        except (KeyError, TypeError) as exc:
            raise SchemaError("param", f"bad parametrization document: {doc!r}") from exc
        return cls(forms)


def default_samples() -> list:
    out = [Fraction(0)]
    k = 1
    while len(out) < SAMPLE_COUNT:
        out.append(Fraction(k))
        out.append(Fraction(-k))
        k += 1
    return out[:SAMPLE_COUNT]


def implicitize(param: SexticParam, samples=None) -> MPoly:
    """The unique-up-to-scale sextic form vanishing on the image.

    Returns the kernel vector of the sample-evaluation matrix, normalized to
    coprime integer coefficients with positive leading term. Kernel dimension
    zero is impossible for a well-formed evaluation and reported as an
    internal failure; dimension two or more means the parametrization is not
    birational onto a sextic.
    """
    ts = list(samples) if samples is not None else default_samples()
    if len(set(ts)) < SAMPLE_COUNT:
        raise SchemaError("samples", f"need at least {SAMPLE_COUNT} distinct parameters")
    rows = []
    for t in ts:
        x = param.evaluate(as_scalar(t), 1)
        rows.append([x[0] ** a * x[1] ** b * x[2] ** c for (a, b, c) in MONOMIALS6])
    kernel = nullspace(Mat(rows))
    if not kernel:
        raise RuntimeError("implicitization kernel is empty; this indicates a bug")
    if len(kernel) > 1:
        raise DegenerateError(
            "non-birational",
            f"kernel dimension {len(kernel)}: the parametrization is not birational "
            "onto a sextic",
        )
    vec = primitive_integer(kernel[0])
    lead = next(v for v in vec if v)
    if lead < 0:
        vec = tuple(-v for v in vec)
    return MPoly(PLANE_VARS, {mono: c for mono, c in zip(MONOMIALS6, vec) if c})


def composite_coeffs(curve: MPoly, param: SexticParam) -> list:
    """Coefficients of the degree-36 binary form curve(phi0, phi1, phi2);
    all zero exactly when the parametrization lies on the curve."""
    if curve.vars != PLANE_VARS:
        raise SchemaError("variables", f"curve must live in {PLANE_VARS}")
    if not curve.is_homogeneous() or curve.total_degree() != 6:
        raise SchemaError("degree", "composition expects a homogeneous sextic")
    powers = []
    for f in param.phi:
        table = [[Fraction(1)]]
        for _ in range(6):
            table.append(conv_coeffs(table[-1], f.coeffs))
        powers.append(table)
    out = [Fraction(0)] * 37
    for (a, b, c), coeff in curve.terms.items():
        term = conv_coeffs(conv_coeffs(powers[0][a], powers[1][b]), powers[2][c])
        for k, t in enumerate(term):
            out[k] += coeff * t
    return out


def is_singular_at(curve: MPoly, p: PlanePoint) -> bool:
    """All three partials vanish at p (exactly); Euler's relation then forces
    the point onto the curve as well."""
    if not curve.is_homogeneous():
        raise SchemaError("not-homogeneous", "singularity test needs a homogeneous form")
    return all(curve.derivative(v).evaluate(p.coords) == 0 for v in curve.vars)


def _two_lines_through(p: PlanePoint) -> tuple:
    x0, x1, x2 = p.coords
    if x0:
        return ((x1, -x0, Fraction(0)), (x2, Fraction(0), -x0))
    if x1:
        return ((Fraction(1), Fraction(0), Fraction(0)), (Fraction(0), x2, -x1))
    return ((Fraction(1), Fraction(0), Fraction(0)), (Fraction(0), Fraction(1), Fraction(0)))


def _line_pullback(line, param: SexticParam):
    out = [Fraction(0)] * 7
    for scale, form in zip(line, param.phi):
        if scale:
            for k, c in enumerate(form.coeffs):
                out[k] += scale * c
    return out


def node_fiber(param: SexticParam, p: PlanePoint) -> BinForm:
    """The parameter pair over an ordinary double point: the gcd of the
    pullbacks of two independent lines through p, demanded to be a squarefree
    quadratic. Other gcd degrees are reported distinctly: degree 0 means p is
    off the curve, degree 1 a smooth point, a square quadratic a cusp-like
    fiber, and degree 3+ a worse singularity."""
    param.validate()
    line1, line2 = _two_lines_through(p)
    pullbacks = []
    for line in (line1, line2):
        cs = _line_pullback(line, param)
        if not any(cs):
            raise DegenerateError("image-on-line", "the image is contained in a line")
        pullbacks.append(BinForm(cs))
    g = gcd_forms(pullbacks[0], pullbacks[1])
    if g.degree == 0:
        raise DegenerateError("not-on-curve", "the point is not on the image curve")
    if g.degree == 1:
        raise DegenerateError("smooth-point", "the point is a smooth point of the image")
    if g.degree >= 3:
        raise DegenerateError(
            "worse-singularity", f"fiber has degree {g.degree}; not an ordinary node"
        )
    if discriminant(g) == 0:
        raise DegenerateError("cusp-like-fiber", "the fiber quadratic has a double root")
    return g


# -- forced-node constructions -------------------------------------------


def _rational_sqrt(x: Fraction):
    if x < 0:
        return None
    rn, rd = isqrt(x.numerator), isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def _fiber_condition(fiber: BinForm):
    """One linear condition on the 7 coefficients of a degree-6 form that
    forces equal values on the two roots of ``fiber``, together with an
    extractor giving that common value. Works for split quadratics (including
    a root at infinity) and for quadratics irreducible over Q, where the two
    conjugate conditions combine into one rational condition via the linear
    remainder modulo the fiber."""
    if fiber.degree != 2:
        raise SchemaError("degree", "node fibers are quadratics")
    if discriminant(fiber) == 0:
        raise DegenerateError("cusp-like-fiber", "fiber quadratic must be squarefree")
    m0, m1, m2 = fiber.coeffs

    if m0 == 0:
        reps = ((Fraction(1), Fraction(0)), (-m2, m1))
    else:
        root = _rational_sqrt(discriminant(fiber))
        if root is not None:
            reps = ((-m1 + root, 2 * m0), (-m1 - root, 2 * m0))
        else:
            reps = None

    if reps is not None:
        (u1, v1), (u2, v2) = reps
        row = tuple(u1 ** (6 - k) * v1**k - u2 ** (6 - k) * v2**k for k in range(7))

        def extract(phi_coeff_lists):
            return tuple(
                sum(c * u1 ** (6 - k) * v1**k for k, c in enumerate(cs))
                for cs in phi_coeff_lists
            )

        return row, extract

    # irreducible case: u^2 = -(m1*u + m2)/m0 modulo the fiber; track the
    # linear remainder of each monomial u^(6-k)
    rem = [(Fraction(0), Fraction(1))]  # (u-coefficient, constant) of u^0
    for _ in range(6):
        r1, r0 = rem[-1]
        # multiply by u: r1*u^2 + r0*u
        rem.append((r0 - r1 * m1 / m0, -r1 * m2 / m0))
    row = tuple(rem[6 - k][0] for k in range(7))

    def extract(phi_coeff_lists):
        return tuple(
            sum(c * rem[6 - k][1] for k, c in enumerate(cs)) for cs in phi_coeff_lists
        )

    return row, extract


def make_param_with_fibers(fibers, rng, tries: int = 200):
    """Seeded random parametrization whose fibers over constructed nodes are
    the given squarefree quadratics. Returns (param, node points); redraws
    until the parametrization is birational with the requested node fibers.
    """
    fibers = list(fibers)
    conditions = [_fiber_condition(f) for f in fibers]
    rows = Mat([row for row, _ in conditions])
    basis = nullspace(rows)
    for _ in range(tries):
        coeff_lists = []
        for _component in range(3):
            while True:
                combo = [rng.randint(-9, 9) for _ in basis]
                cs = [
                    sum(c * vec[k] for c, vec in zip(combo, basis))
                    for k in range(7)
                ]
                if any(cs):
                    break
            # component scaling is a coordinate scaling of the plane; it
            # keeps the node structure and shrinks the arithmetic
            coeff_lists.append([Fraction(v) for v in primitive_integer(cs)])
        try:
            param = SexticParam(tuple(BinForm(cs) for cs in coeff_lists))
            param.validate()
            implicitize(param)
            nodes = []
            for fiber, (_, extract) in zip(fibers, conditions):
                p = PlanePoint(extract(coeff_lists))
                if not node_fiber(param, p).proportional_to(fiber):
                    raise DegenerateError("fiber-mismatch", "constructed fiber disagrees")
                nodes.append(p)
        except (DegenerateError, SchemaError):
            continue
        return param, nodes
    raise DegenerateError("seed-exhausted", "no valid forced-node parametrization found")
