"""Exact plane projective geometry.

Points and lines are rational triples up to scale with exact incidence;
the fixed conic for all involution-lifting work is X0*X2 - X1^2 = 0 with
the embedding (U : V) -> [U^2, UV, V^2]. Under that choice the isolated
fixed point (pole) of the lifted involution with fixed quadratic
p*U^2 + q*U*V + r*V^2 is [2r, -q, 2p], whose polar line pulls back to the
quadratic itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .binforms import BinForm
from .errors import DegenerateError, SchemaError
from .linalg import Mat, invert
from .moebius import MoebiusMap, compose, fixed_quadratic
from .scalars import as_scalar, format_scalar


class _ProjTriple:

    __slots__ = ("coords",)

    def __init__(self, coords):
        cs = tuple(as_scalar(c) for c in coords)
        if len(cs) != 3:
            raise SchemaError("shape", "plane coordinates are triples")
        if not any(cs):
            raise SchemaError("zero-vector", "the zero triple is not projective")
        self.coords = cs

    def dot(self, other) -> Fraction:
        return sum(a * b for a, b in zip(self.coords, other.coords))

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        mine, theirs = self.coords, other.coords
        pivot = next(i for i, x in enumerate(mine) if x)
        if not theirs[pivot]:
            return False
        return all(x * theirs[pivot] == y * mine[pivot] for x, y in zip(mine, theirs))

    def __hash__(self):
        pivot = next(x for x in self.coords if x)
        return hash((type(self).__name__, tuple(x / pivot for x in self.coords)))

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(format_scalar(c) for c in self.coords)})"

    def to_json(self) -> dict:
        return {"coords": [format_scalar(c) for c in self.coords]}

    @classmethod
    def from_json(cls, doc: dict):
        try:
            coords = doc["coords"]
        except (KeyError, TypeError) as exc:
            raise SchemaError("coords", f"bad coordinate document: {doc!r}") from exc
        return cls(coords)


def _cross(x, y):
    return (
        x[1] * y[2] - x[2] * y[1],
        x[2] * y[0] - x[0] * y[2],
        x[0] * y[1] - x[1] * y[0],
    )


class PlanePoint(_ProjTriple):

    def join(self, other: "PlanePoint") -> "PlaneLine":
        cs = _cross(self.coords, other.coords)
        if not any(cs):
            raise DegenerateError("coincident-points", "no unique line through equal points")
        return PlaneLine(cs)


class PlaneLine(_ProjTriple):

    def meet(self, other: "PlaneLine") -> PlanePoint:
        cs = _cross(self.coords, other.coords)
        if not any(cs):
            raise DegenerateError("coincident-lines", "no unique intersection of equal lines")
        return PlanePoint(cs)

    def contains(self, point: PlanePoint) -> bool:
        return self.dot(point) == 0


def collinear(p1: PlanePoint, p2: PlanePoint, p3: PlanePoint) -> bool:
    return Mat([p1.coords, p2.coords, p3.coords]).det() == 0


def veronese(u, v) -> PlanePoint:
    u, v = as_scalar(u), as_scalar(v)
    return PlanePoint((u * u, u * v, v * v))


class Conic:
    """A plane conic given by a symmetric 3x3 matrix up to scale."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: Mat):
        if matrix.nrows != 3 or matrix.ncols != 3:
            raise SchemaError("shape", "conic matrices are 3x3")
        if matrix.transpose() != matrix:
            raise SchemaError("symmetry", "conic matrices must be symmetric")
        self.matrix = matrix

    @classmethod
    def standard(cls) -> "Conic":
        # X0*X2 - X1^2 as the symmetric form ((0,0,1),(0,-2,0),(1,0,0))/2
        return cls(Mat(((0, 0, 1), (0, -2, 0), (1, 0, 0))))

    def contains(self, p: PlanePoint) -> bool:
        mp = self.matrix.apply(p.coords)
        return sum(a * b for a, b in zip(mp, p.coords)) == 0

    def is_nondegenerate(self) -> bool:
        return self.matrix.det() != 0

    def polar_line(self, x: PlanePoint) -> PlaneLine:
        """The polar of x: coefficient triple (matrix of the conic) * x."""
        if not self.is_nondegenerate():
            raise DegenerateError("degenerate-conic", "polar lines need a rank-3 conic")
        return PlaneLine(self.matrix.apply(x.coords))

    def pole(self, line: PlaneLine) -> PlanePoint:
        if not self.is_nondegenerate():
            raise DegenerateError("degenerate-conic", "poles need a rank-3 conic")
        return PlanePoint(invert(self.matrix).apply(line.coords))


def pole_of_quadratic(f: BinForm) -> PlanePoint:
    """Center of the lifted involution with fixed quadratic p,q,r on the
    standard conic: the point [2r, -q, 2p]."""
    if f.degree != 2:
        raise SchemaError("degree", "poles are attached to quadratics")
    p, q, r = f.coeffs
    return PlanePoint((2 * r, -q, 2 * p))


@dataclass(frozen=True)
class PascalResult:
    x1: PlanePoint
    x2: PlanePoint
    x3: PlanePoint
    collinear: bool

    def points(self):
        return (self.x1, self.x2, self.x3)

    def to_json(self) -> dict:
        return {
            "points": [p.to_json() for p in self.points()],
            "collinear": self.collinear,
        }


def pascal_points(conic: Conic, points) -> PascalResult:
    """Hexagon construction: with L1 = p1p2, L2 = p3p4, L3 = p5p6 and
    M1 = p4p5, M2 = p6p1, M3 = p2p3, return the intersections x_k = L_k ^ M_k
    and whether they are collinear (always true for points on a conic).
    """
    pts = list(points)
    if len(pts) != 6:
        raise SchemaError("arity", "the hexagon construction takes six points")
    for i in range(6):
        for j in range(i + 1, 6):
            if pts[i] == pts[j]:
                raise DegenerateError(
                    "hexagon-degenerate", f"points {i + 1} and {j + 1} coincide"
                )
    for i, p in enumerate(pts):
        if not conic.contains(p):
            raise DegenerateError("not-on-conic", f"point {i + 1} is not on the conic")
    p1, p2, p3, p4, p5, p6 = pts
    lines = [
        (p1.join(p2), p4.join(p5)),
        (p3.join(p4), p6.join(p1)),
        (p5.join(p6), p2.join(p3)),
    ]
    xs = []
    for k, (lk, mk) in enumerate(lines):
        if lk == mk:
            raise DegenerateError(
                "hexagon-degenerate", f"opposite sides {k + 1} coincide; no intersection point"
            )
        xs.append(lk.meet(mk))
    return PascalResult(xs[0], xs[1], xs[2], collinear(*xs))


def seed_parameter(n: int) -> tuple:
    """Deterministic rational parameter sequence 0, 1, -1, 2, -2, ..."""
    if n < 0:
        raise SchemaError("seed", "seeds are non-negative integers")
    magnitude = (n + 1) // 2
    value = magnitude if n % 2 else -magnitude
    return (Fraction(value), Fraction(1))


@dataclass(frozen=True)
class DependenceCertificate:
    """Witness that the fixed quadratics of a period-two composite are
    linearly dependent: the three involution centers are collinear."""

    seed: int
    parameter: tuple
    hexagon: tuple  # six parameter pairs on the line
    closure_ok: bool
    fixed_quadratics: tuple  # BinForm x3
    centers: tuple  # PlanePoint x3
    centers_det: Fraction
    collinear: bool
    pascal_points: tuple | None
    pascal_matches_centers: bool | None

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "parameter": [format_scalar(x) for x in self.parameter],
            "hexagon": [[format_scalar(u), format_scalar(v)] for (u, v) in self.hexagon],
            "closure_ok": self.closure_ok,
            "fixed_quadratics": [f.to_json() for f in self.fixed_quadratics],
            "centers": [c.to_json() for c in self.centers],
            "centers_det": format_scalar(self.centers_det),
            "collinear": self.collinear,
            "pascal_points": None
            if self.pascal_points is None
            else [p.to_json() for p in self.pascal_points],
            "pascal_matches_centers": self.pascal_matches_centers,
        }


def _param_eq(x, y) -> bool:
    return x[0] * y[1] == x[1] * y[0]


def dependence_certificate(
    s1: MoebiusMap, s2: MoebiusMap, s3: MoebiusMap, seed: int = 0
) -> DependenceCertificate:
    """Certify the dependence of the three fixed quadratics of involutions
    whose composite g = s3 o s2 o s1 has order exactly two.

    Builds the hexagon p2 = s1 p1, p3 = s2 p2, p4 = s3 p3, p5 = s1 p4,
    p6 = s2 p5 on the standard conic, checks the closure s3 p6 = p1, and
    returns the three involution centers together with their collinearity
    verdict. When the three involutions are pairwise distinct the classical
    hexagon-side construction is run as a cross-check; a seed whose hexagon
    degenerates raises a retryable error. When two involutions coincide the
    side construction is impossible for every seed and is reported as
    skipped (None).
    """
    for i, s in enumerate((s1, s2, s3)):
        if not s.is_involution():
            raise DegenerateError("not-an-involution", f"map {i + 1} is not an involution")
    g = compose(s3, compose(s2, s1))
    if g.is_identity():
        raise DegenerateError(
            "composite-identity",
            "the composite is the identity; the hexagon closes trivially and certifies nothing",
        )
    if not (g @ g).is_identity():
        raise DegenerateError(
            "composite-not-period-two", "the composite squared must be the identity"
        )

    fixed = tuple(fixed_quadratic(s) for s in (s1, s2, s3))
    centers = tuple(pole_of_quadratic(f) for f in fixed)
    centers_det = Mat([c.coords for c in centers]).det()

    p1 = seed_parameter(seed)
    steps = (s1, s2, s3, s1, s2)
    params = [p1]
    for s in steps:
        params.append(s.apply_param(params[-1]))
    closure = s3.apply_param(params[-1])
    closure_ok = _param_eq(closure, p1)
    assert closure_ok, "hexagon closure failed despite period-two composite"

    pairwise_distinct = s1 != s2 and s1 != s3 and s2 != s3
    pascal_pts = None
    pascal_match = None
    if pairwise_distinct:
        points = [veronese(u, v) for (u, v) in params]
        # sides spanned by consecutive involution orbits; each pair must be
        # a genuine pair of distinct points for this seed
        spans = [(0, 1), (2, 3), (4, 5), (3, 4), (5, 0), (1, 2)]
        for i, j in spans:
            if points[i] == points[j]:
                raise DegenerateError(
                    "hexagon-degenerate",
                    f"seed {seed} collapses hexagon vertices {i + 1} and {j + 1}; retry "
                    "with a different seed",
                    retryable=True,
                )
        l1, l2, l3 = (
            points[0].join(points[1]),
            points[2].join(points[3]),
            points[4].join(points[5]),
        )
        m1, m2, m3 = (
            points[3].join(points[4]),
            points[5].join(points[0]),
            points[1].join(points[2]),
        )
        for k, (lk, mk) in enumerate(((l1, m1), (l2, m2), (l3, m3))):
            if lk == mk:
                raise DegenerateError(
                    "hexagon-degenerate",
                    f"seed {seed} makes opposite sides {k + 1} coincide; retry with a "
                    "different seed",
                    retryable=True,
                )
        # l1^m1 is the center of s1, l2^m2 of s3, l3^m3 of s2
        pascal_pts = (l1.meet(m1), l2.meet(m2), l3.meet(m3))
        pascal_match = (
            pascal_pts[0] == centers[0]
            and pascal_pts[1] == centers[2]
            and pascal_pts[2] == centers[1]
        )

    return DependenceCertificate(
        seed=seed,
        parameter=p1,
        hexagon=tuple(params),
        closure_ok=closure_ok,
        fixed_quadratics=fixed,
        centers=centers,
        centers_det=centers_det,
        collinear=centers_det == 0,
        pascal_points=pascal_pts,
        pascal_matches_centers=pascal_match,
    )
