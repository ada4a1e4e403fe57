"""Homogeneous binary forms in U, V.

A form of degree d is stored as its d+1 coefficients ordered from U^d down
to V^d; degree-2 forms a1*U^2 + a2*U*V + a3*V^2 are the restriction
divisors that drive the classifier. The Jacobian of a pair of quadratics is
normalized with the fixed (2, 4, 2) coefficient pattern below; the 3x3
determinant identity of the classifier (detF = -16 * detA^2) holds for this
normalization only, so callers must not rescale.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegenerateError, SchemaError
from .linalg import Mat
from .scalars import as_scalar, format_scalar


class BinForm:

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(as_scalar(c) for c in coeffs)
        if not cs:
            raise SchemaError("degree", "a binary form needs at least one coefficient")
        if not any(cs):
            raise SchemaError("zero-form", "the zero form is not a BinForm")
        self.coeffs = cs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, u, v) -> Fraction:
        u, v = as_scalar(u), as_scalar(v)
        d = self.degree
        return sum(c * u ** (d - i) * v**i for i, c in enumerate(self.coeffs))

    def proportional_to(self, other: "BinForm") -> bool:
        if not isinstance(other, BinForm) or self.degree != other.degree:
            return False
        return _proportional(self.coeffs, other.coeffs)

    def __eq__(self, other):
        if not isinstance(other, BinForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        d = self.degree
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            eu, ev = d - i, i
            mono = "*".join(
                ([f"U^{eu}" if eu > 1 else "U"] if eu else [])
                + ([f"V^{ev}" if ev > 1 else "V"] if ev else [])
            )
            if not mono:
                parts.append(format_scalar(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{format_scalar(c)}*{mono}")
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    def __repr__(self):
        return f"BinForm({str(self)})"

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [format_scalar(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, doc: dict) -> "BinForm":
        try:
            degree, coeffs = int(doc["degree"]), list(doc["coeffs"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError("binform", f"bad binary-form document: {doc!r}") from exc
        if len(coeffs) != degree + 1:
            raise SchemaError("binform", "coefficient count disagrees with degree")
        return cls(coeffs)


def _proportional(xs, ys) -> bool:
    if len(xs) != len(ys):
        return False
    pivot = next((i for i, x in enumerate(xs) if x), None)
    if pivot is None:
        return not any(ys)
    if not ys[pivot]:
        return False
    return all(x * ys[pivot] == y * xs[pivot] for x, y in zip(xs, ys))


def _require_degree(form: BinForm, degree: int, role: str):
    if form.degree != degree:
        raise SchemaError("degree", f"{role} must have degree {degree}, got {form.degree}")


def jacobian_coeffs(a, b) -> tuple:
    """Jacobian coefficient triple for quadratics given as coefficient triples.

    J(A,B) = (d_U A)(d_V B) - (d_V A)(d_U B); entries may come from any
    commutative ring (Fractions or polynomial indeterminates).
    """
    return (
        2 * (a[0] * b[1] - a[1] * b[0]),
        4 * (a[0] * b[2] - a[2] * b[0]),
        2 * (a[1] * b[2] - a[2] * b[1]),
    )


def jacobian_pair(a: BinForm, b: BinForm):
    """Jacobian of two quadratics; None when it cancels (proportional inputs)."""
    _require_degree(a, 2, "Jacobian input")
    _require_degree(b, 2, "Jacobian input")
    cs = jacobian_coeffs(a.coeffs, b.coeffs)
    if not any(cs):
        return None
    return BinForm(cs)


def coeff_matrix_det(a1: BinForm, a2: BinForm, a3: BinForm) -> Fraction:
    """Determinant of the 3x3 coefficient matrix in the basis U^2, UV, V^2.

    Zero exactly when the three quadratics are linearly dependent.
    """
    for f in (a1, a2, a3):
        _require_degree(f, 2, "coefficient-matrix input")
    return Mat([a1.coeffs, a2.coeffs, a3.coeffs]).det()


def discriminant(f: BinForm) -> Fraction:
    _require_degree(f, 2, "discriminant input")
    p, q, r = f.coeffs
    return q * q - 4 * p * r


def add_scaled(x, a: BinForm, y, b: BinForm):
    """x*a + y*b for same-degree forms; None when the combination cancels."""
    if a.degree != b.degree:
        raise SchemaError("degree", "cannot combine forms of different degrees")
    x, y = as_scalar(x), as_scalar(y)
    cs = tuple(x * ca + y * cb for ca, cb in zip(a.coeffs, b.coeffs))
    if not any(cs):
        return None
    return BinForm(cs)


# -- gcd over Q ---------------------------------------------------------


def _split_monomial_factors(cs):
    """Strip the exact U- and V-powers dividing the form.

    Returns (u_power, v_power, core) where core is the coefficient list of
    the remaining form, whose first and last entries are nonzero.
    """
    nonzero = [i for i, c in enumerate(cs) if c]
    v_pow = nonzero[0]
    u_pow = len(cs) - 1 - nonzero[-1]
    core = list(cs[v_pow : len(cs) - u_pow])
    return u_pow, v_pow, core


def _poly_mod(a, b):
    # univariate remainder; coefficient lists are highest-degree-first
    a = list(a)
    while len(a) >= len(b):
        if a[0]:
            f = a[0] / b[0]
            for i in range(1, len(b)):
                a[i] -= f * b[i]
        a.pop(0)
        while a and not a[0]:
            a.pop(0)
    return a


def _uni_gcd(a, b):
    while b:
        a, b = b, _poly_mod(a, b)
    lead = a[0]
    return [x / lead for x in a]


def gcd_forms(f: BinForm, g: BinForm) -> BinForm:
    """A gcd over Q, normalized so the leading nonzero coefficient is 1.

    Common factors that only exist over an extension field do not appear;
    the result is constant (degree 0) for coprime inputs.
    """
    uf, vf, core_f = _split_monomial_factors(f.coeffs)
    ug_, vg, core_g = _split_monomial_factors(g.coeffs)
    u_pow, v_pow = min(uf, ug_), min(vf, vg)
    core = _uni_gcd(core_f, core_g)
    coeffs = [Fraction(0)] * v_pow + core + [Fraction(0)] * u_pow
    return BinForm(coeffs)


def divides(f: BinForm, g: BinForm) -> bool:
    """Exact polynomial division test: does f divide g?"""
    if f.degree > g.degree:
        return False
    uf, vf, core_f = _split_monomial_factors(f.coeffs)
    ug_, vg, core_g = _split_monomial_factors(g.coeffs)
    if uf > ug_ or vf > vg:
        return False
    return not _poly_mod(core_g, core_f)


# -- substitution and resultants -----------------------------------------


def conv_coeffs(xs, ys):
    """Coefficient-list product of two binary forms (may be all zeros)."""
    out = [Fraction(0)] * (len(xs) + len(ys) - 1)
    for i, x in enumerate(xs):
        if not x:
            continue
        for j, y in enumerate(ys):
            out[i + j] += x * y
    return out


def _linear_power(a, b, k):
    out = [Fraction(1)]
    for _ in range(k):
        out = conv_coeffs(out, [a, b])
    return out


def _matrix_of(m):
    if hasattr(m, "a"):
        return (as_scalar(m.a), as_scalar(m.b)), (as_scalar(m.c), as_scalar(m.d))
    rows = tuple(tuple(as_scalar(x) for x in row) for row in m)
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise SchemaError("shape", "substitution needs a 2x2 matrix")
    return rows


def substitute(f: BinForm, m) -> BinForm:
    """Pull back f along the linear substitution U -> aU+bV, V -> cU+dV.

    ``m`` is a MoebiusMap or a 2x2 matrix ((a, b), (c, d)); it must be
    invertible, so the result is again a nonzero form of the same degree.
    """
    (a, b), (c, d) = _matrix_of(m)
    if a * d - b * c == 0:
        raise DegenerateError("singular-substitution", "substitution matrix is singular")
    deg = f.degree
    result = [Fraction(0)] * (deg + 1)
    for i, coeff in enumerate(f.coeffs):
        if not coeff:
            continue
        term = conv_coeffs(_linear_power(a, b, deg - i), _linear_power(c, d, i))
        for k, t in enumerate(term):
            result[k] += coeff * t
    return BinForm(result)


def resultant(f: BinForm, g: BinForm) -> Fraction:
    """Homogeneous resultant via the Sylvester matrix; zero iff f, g share a
    projective root (including roots at infinity)."""
    m, n = f.degree, g.degree
    if m == 0 or n == 0:
        const = f.coeffs[0] if m == 0 else g.coeffs[0]
        other = n if m == 0 else m
        return const**other
    size = m + n
    rows = []
    for shift in range(n):
        rows.append([Fraction(0)] * shift + list(f.coeffs) + [Fraction(0)] * (n - 1 - shift))
    for shift in range(m):
        rows.append([Fraction(0)] * shift + list(g.coeffs) + [Fraction(0)] * (m - 1 - shift))
    assert all(len(r) == size for r in rows)
    return Mat(rows).det()
