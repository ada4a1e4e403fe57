"""Projective-line automorphisms as 2x2 exact matrices up to scale.

An involution with fixed divisor F = p*U^2 + q*U*V + r*V^2 (squarefree) is
the trace-zero map ((-q, -2r), (2p, q)): its square is (q^2 - 4pr) times the
identity and its fixed points are exactly the roots of F. The involution
attached to a base-point-free pencil of quadratics is recovered from the
Jacobian of any two generators.
"""

from __future__ import annotations

from fractions import Fraction

from .binforms import BinForm, discriminant, jacobian_pair, resultant
from .errors import DegenerateError, SchemaError
from .linalg import Mat
from .scalars import as_scalar, format_scalar


class MoebiusMap:
    """Invertible map (U : V) -> (aU + bV : cU + dV), identified up to scale."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        a, b, c, d = (as_scalar(x) for x in (a, b, c, d))
        if a * d - b * c == 0:
            raise DegenerateError("singular-map", "2x2 matrix with zero determinant")
        self.a, self.b, self.c, self.d = a, b, c, d

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls(1, 0, 0, 1)

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def apply(self, u, v) -> tuple:
        u, v = as_scalar(u), as_scalar(v)
        return (self.a * u + self.b * v, self.c * u + self.d * v)

    def apply_param(self, param) -> tuple:
        return self.apply(*param)

    def __matmul__(self, other: "MoebiusMap") -> "MoebiusMap":
        # (self o other): apply other first
        return MoebiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def is_identity(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def is_involution(self) -> bool:
        """Order exactly two: the square is scalar but the map itself is not."""
        return not self.is_identity() and (self @ self).is_identity()

    def __eq__(self, other):
        if not isinstance(other, MoebiusMap):
            return NotImplemented
        mine, theirs = self.entries(), other.entries()
        pivot = next(i for i, x in enumerate(mine) if x)
        if not theirs[pivot]:
            return False
        return all(x * theirs[pivot] == y * mine[pivot] for x, y in zip(mine, theirs))

    def __hash__(self):
        entries = self.entries()
        pivot = next(x for x in entries if x)
        return hash(tuple(x / pivot for x in entries))

    def __repr__(self):
        return "MoebiusMap(%s, %s, %s, %s)" % tuple(format_scalar(x) for x in self.entries())

    def to_json(self) -> dict:
        return {
            "matrix": [
                [format_scalar(self.a), format_scalar(self.b)],
                [format_scalar(self.c), format_scalar(self.d)],
            ]
        }

    @classmethod
    def from_json(cls, doc: dict) -> "MoebiusMap":
        try:
            (a, b), (c, d) = doc["matrix"]
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError("moebius", f"bad map document: {doc!r}") from exc
        return cls(a, b, c, d)


def compose(f: MoebiusMap, g: MoebiusMap) -> MoebiusMap:
    """f o g (g applied first)."""
    return f @ g


def involution_from_fixed_quadratic(fixed: BinForm) -> MoebiusMap:
    """The unique involution whose fixed divisor is the squarefree quadratic
    ``fixed`` = p*U^2 + q*U*V + r*V^2."""
    if fixed.degree != 2:
        raise SchemaError("degree", "fixed divisor must be a quadratic")
    if discriminant(fixed) == 0:
        raise DegenerateError(
            "degenerate-involution",
            "fixed quadratic has a double root; no two-fixed-point involution exists",
        )
    p, q, r = fixed.coeffs
    return MoebiusMap(-q, -2 * r, 2 * p, q)


def involution_from_pencil(a: BinForm, b: BinForm) -> MoebiusMap:
    """The involution swapping the two roots of every member x*a + y*b.

    Generators must be coprime quadratics (nonzero resultant); the fixed
    divisor is their Jacobian.
    """
    if a.degree != 2 or b.degree != 2:
        raise SchemaError("degree", "pencil generators must be quadratics")
    if resultant(a, b) == 0:
        raise DegenerateError(
            "non-coprime-pair", "pencil generators share a root; the involution is undefined"
        )
    jac = jacobian_pair(a, b)
    if jac is None:
        raise DegenerateError("non-coprime-pair", "pencil generators are proportional")
    return involution_from_fixed_quadratic(jac)


def fixed_quadratic(f: MoebiusMap) -> BinForm:
    """Fixed divisor of an involution: for ((a, b), (c, d)) the quadratic
    c*U^2 + (d - a)*U*V - b*V^2. Round-trips with the constructor up to scale."""
    if f.is_identity():
        raise DegenerateError("identity-map", "every point of the identity is fixed")
    if not f.is_involution():
        raise DegenerateError("not-an-involution", "fixed divisor is defined for involutions")
    return BinForm((f.c, f.d - f.a, -f.b))


def sym2_lift(f: MoebiusMap) -> Mat:
    """Symmetric-square action on the plane of the conic embedding
    (U : V) -> [U^2, UV, V^2]; satisfies lift o embed = embed o f."""
    a, b, c, d = f.entries()
    return Mat(
        (
            (a * a, 2 * a * b, b * b),
            (a * c, a * d + b * c, b * d),
            (c * c, 2 * c * d, d * d),
        )
    )
