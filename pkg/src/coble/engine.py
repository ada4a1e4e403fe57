"""The three-way boundary classifier.

A restriction triple is three pairwise-coprime quadratics A1, A2, A3. Each
pair spans a base-point-free pencil whose involution is computed from the
Jacobian; with sigma_k attached to the pair omitting A_k, the composite
g = sigma3 o sigma2 o sigma1 decides the verdict:

  NODAL_IDENTITY  the A_i are linearly dependent: all three pencils agree,
                  g is that single involution (g^2 = 1, g != 1);
  CODIM3_FAMILY   independent A_i with g = 1: each A_i is then forced to be
                  the fixed divisor of sigma_i;
  POMPILJ_FAILS   independent A_i with g != 1: then also g^2 != 1, because
                  dependent fixed divisors would force det A = 0 through the
                  exact identity det F = -16 * (det A)^2.

The identity itself is proved once and for all by expanding det F + 16 *
(det A)^2 over nine polynomial indeterminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import random

from .binforms import (
    BinForm,
    add_scaled,
    coeff_matrix_det,
    discriminant,
    jacobian_coeffs,
    jacobian_pair,
    resultant,
    substitute,
)
from .errors import CobleError, DegenerateError, SchemaError
from .linalg import Mat
from .moebius import MoebiusMap, fixed_quadratic, involution_from_pencil
from .mpoly import MPoly
from .projplane import DependenceCertificate, dependence_certificate, seed_parameter
from .scalars import format_scalar

NODAL_IDENTITY = "NODAL_IDENTITY"
CODIM3_FAMILY = "CODIM3_FAMILY"
POMPILJ_FAILS = "POMPILJ_FAILS"
LABELS = (NODAL_IDENTITY, CODIM3_FAMILY, POMPILJ_FAILS)

JACOBIAN_DET_CONSTANT = Fraction(-16)


@dataclass(frozen=True)
class RestrictionTriple:
    a1: BinForm
    a2: BinForm
    a3: BinForm

    def __post_init__(self):
        for f in self.forms():
            if not isinstance(f, BinForm) or f.degree != 2:
                raise SchemaError("degree", "restriction triples hold three quadratics")
        pairs = ((1, 2, self.a1, self.a2), (1, 3, self.a1, self.a3), (2, 3, self.a2, self.a3))
        for i, j, f, g in pairs:
            if resultant(f, g) == 0:
                raise DegenerateError(
                    "non-coprime-pair", f"forms {i} and {j} share a root"
                )
            jac = jacobian_pair(f, g)
            if jac is None or discriminant(jac) == 0:
                raise DegenerateError(
                    "degenerate-involution",
                    f"the pencil spanned by forms {i} and {j} has a parabolic involution",
                )

    def forms(self) -> tuple:
        return (self.a1, self.a2, self.a3)

    def to_json(self) -> dict:
        return {"A": [f.to_json() for f in self.forms()]}

    @classmethod
    def from_json(cls, doc: dict) -> "RestrictionTriple":
        try:
            forms = [BinForm.from_json(d) for d in doc["A"]]
        except (KeyError, TypeError) as exc:
            raise SchemaError("triple", f"bad restriction-triple document: {doc!r}") from exc
        if len(forms) != 3:
            raise SchemaError("triple", "expected exactly three quadratics under 'A'")
        return cls(forms[0], forms[1], forms[2])


def conjugate_triple(triple: RestrictionTriple, m: MoebiusMap) -> RestrictionTriple:
    """Apply one invertible substitution to all three forms."""
    return RestrictionTriple(*(substitute(f, m) for f in triple.forms()))


@dataclass(frozen=True)
class PencilSystem:
    sigmas: tuple  # MoebiusMap x3
    g: MoebiusMap
    fixed_divisors: tuple  # BinForm x3; F_k is the Jacobian of the pair omitting A_k


def sigmas_and_composite(triple: RestrictionTriple) -> PencilSystem:
    """sigma_k from the pencil of the two forms other than A_k, the composite
    g = sigma3 o sigma2 o sigma1, and the Jacobian fixed divisors F_k."""
    a1, a2, a3 = triple.forms()
    s1 = involution_from_pencil(a2, a3)
    s2 = involution_from_pencil(a1, a3)
    s3 = involution_from_pencil(a1, a2)
    return PencilSystem(
        sigmas=(s1, s2, s3),
        g=s3 @ s2 @ s1,
        fixed_divisors=(jacobian_pair(a2, a3), jacobian_pair(a1, a3), jacobian_pair(a1, a2)),
    )


@dataclass(frozen=True)
class Classification:
    label: str
    rank: int
    det_a: Fraction
    det_f: Fraction
    sigmas: tuple
    g: MoebiusMap
    g_squared: MoebiusMap
    fixed_divisors: tuple
    common_involution: MoebiusMap | None
    fixed_point_coincidence: tuple | None
    witness_moved: tuple | None
    certificate: DependenceCertificate | None

    def to_json(self) -> dict:
        certs: dict = {
            "g_is_identity": self.g.is_identity(),
            "g_squared_is_identity": self.g_squared.is_identity(),
        }
        if self.common_involution is not None:
            certs["common_involution"] = self.common_involution.to_json()
        if self.fixed_point_coincidence is not None:
            certs["fixed_point_coincidence"] = list(self.fixed_point_coincidence)
        if self.witness_moved is not None:
            certs["witness_moved_by_g_squared"] = [format_scalar(x) for x in self.witness_moved]
        if self.certificate is not None:
            certs["dependence"] = self.certificate.to_json()
        return {
            "label": self.label,
            "rank": self.rank,
            "detA": format_scalar(self.det_a),
            "detF": format_scalar(self.det_f),
            "sigma": [s.to_json() for s in self.sigmas],
            "g": self.g.to_json(),
            "g2": self.g_squared.to_json(),
            "F": [f.to_json() for f in self.fixed_divisors],
            "certificates": certs,
        }


def _moved_witness(map_: MoebiusMap) -> tuple:
    # a map other than the identity fixes at most two points of the line
    for n in range(5):
        u, v = seed_parameter(n)
        iu, iv = map_.apply(u, v)
        if iu * v != iv * u:
            return (u, v)
    raise AssertionError("a non-identity map moved none of five parameters")


def classify(triple: RestrictionTriple) -> Classification:
    system = sigmas_and_composite(triple)
    s1, s2, s3 = system.sigmas
    det_a = coeff_matrix_det(*triple.forms())
    det_f = coeff_matrix_det(*system.fixed_divisors)
    g = system.g
    g2 = g @ g
    rank = 3 if det_a else 2

    common = None
    coincidence = None
    witness = None
    certificate = None
    if rank < 3:
        label = NODAL_IDENTITY
        assert s1 == s2 == s3, "dependent coprime triple must give one pencil involution"
        assert g == s1 and g2.is_identity()
        common = s1
        certificate = dependence_certificate(s1, s2, s3, seed=0)
    elif g.is_identity():
        label = CODIM3_FAMILY
        coincidence = tuple(
            fixed_quadratic(s).proportional_to(a)
            for s, a in zip(system.sigmas, triple.forms())
        )
    else:
        label = POMPILJ_FAILS
        assert not g2.is_identity(), (
            "independent forms with a period-two composite contradict the determinant identity"
        )
        witness = _moved_witness(g2)

    return Classification(
        label=label,
        rank=rank,
        det_a=det_a,
        det_f=det_f,
        sigmas=system.sigmas,
        g=g,
        g_squared=g2,
        fixed_divisors=system.fixed_divisors,
        common_involution=common,
        fixed_point_coincidence=coincidence,
        witness_moved=witness,
        certificate=certificate,
    )


# -- the determinant identity ----------------------------------------------


@dataclass(frozen=True)
class DetIdentityCheck:
    det_f: Fraction
    det_a: Fraction
    constant: Fraction
    ok: bool

    def to_json(self) -> dict:
        return {
            "detF": format_scalar(self.det_f),
            "detA": format_scalar(self.det_a),
            "constant": format_scalar(self.constant),
            "ok": self.ok,
        }


def verify_det_identity(a1: BinForm, a2: BinForm, a3: BinForm) -> DetIdentityCheck:
    """Per-instance check of det F = -16 (det A)^2; no coprimality needed,
    dependent triples satisfy it with both sides zero."""
    for f in (a1, a2, a3):
        if f.degree != 2:
            raise SchemaError("degree", "the determinant identity takes three quadratics")
    rows_f = [
        jacobian_coeffs(a2.coeffs, a3.coeffs),
        jacobian_coeffs(a1.coeffs, a3.coeffs),
        jacobian_coeffs(a1.coeffs, a2.coeffs),
    ]
    det_f = Mat(rows_f).det()
    det_a = Mat([a1.coeffs, a2.coeffs, a3.coeffs]).det()
    ok = det_f == JACOBIAN_DET_CONSTANT * det_a * det_a
    return DetIdentityCheck(det_f=det_f, det_a=det_a, constant=JACOBIAN_DET_CONSTANT, ok=ok)


def prove_det_identity_symbolically(constant: Fraction = JACOBIAN_DET_CONSTANT) -> bool:
    """Expand det F - constant * (det A)^2 over nine independent
    indeterminates and test for the zero polynomial. A False return means the
    Jacobian normalization and the constant disagree."""
    names = tuple(f"a{i}{j}" for i in (1, 2, 3) for j in (1, 2, 3))
    gens = MPoly.gens(names)
    a_rows = (gens[0:3], gens[3:6], gens[6:9])
    f_rows = (
        jacobian_coeffs(a_rows[1], a_rows[2]),
        jacobian_coeffs(a_rows[0], a_rows[2]),
        jacobian_coeffs(a_rows[0], a_rows[1]),
    )
    det_f = Mat(f_rows).det()
    det_a = Mat(a_rows).det()
    return (det_f - constant * det_a * det_a).is_zero()


# -- seeded case generators -------------------------------------------------


def _random_quadratic(rng: random.Random) -> BinForm:
    while True:
        coeffs = [rng.randint(-9, 9) for _ in range(3)]
        if any(coeffs):
            return BinForm(coeffs)


def _random_nonzero(rng: random.Random) -> Fraction:
    while True:
        value = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if value:
            return value


def random_invertible_map(rng: random.Random) -> MoebiusMap:
    while True:
        a, b, c, d = (rng.randint(-5, 5) for _ in range(4))
        if a * d - b * c:
            return MoebiusMap(a, b, c, d)


def codim3_family_triple(c) -> RestrictionTriple:
    """The one-parameter family (UV, U^2 - c V^2, U^2 + c V^2), c nonzero;
    its composite is the identity for every c."""
    c = Fraction(c) if not isinstance(c, Fraction) else c
    if c == 0:
        raise DegenerateError("zero-parameter", "the family needs a nonzero parameter")
    return RestrictionTriple(BinForm((0, 1, 0)), BinForm((1, 0, -c)), BinForm((1, 0, c)))


def generate_case(label: str, seed: int = 0, max_tries: int = 200) -> RestrictionTriple:
    """Deterministic generator for each classifier branch."""
    if label not in LABELS:
        raise SchemaError("label", f"unknown label {label!r}; expected one of {LABELS}")
    rng = random.Random(seed)
    for _ in range(max_tries):
        try:
            if label == NODAL_IDENTITY:
                a1, a2 = _random_quadratic(rng), _random_quadratic(rng)
                if resultant(a1, a2) == 0:
                    continue
                a3 = add_scaled(_random_nonzero(rng), a1, _random_nonzero(rng), a2)
                triple = RestrictionTriple(a1, a2, a3)
            elif label == CODIM3_FAMILY:
                triple = codim3_family_triple(_random_nonzero(rng))
                if rng.random() < 0.5:
                    triple = conjugate_triple(triple, random_invertible_map(rng))
            else:
                triple = RestrictionTriple(
                    _random_quadratic(rng), _random_quadratic(rng), _random_quadratic(rng)
                )
        except (DegenerateError, SchemaError):
            continue
        if classify(triple).label == label:
            return triple
    raise CobleError("seed-exhausted", f"no {label} case found within {max_tries} draws")
