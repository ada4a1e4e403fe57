"""A tour of the three classifier verdicts.

Given three pairwise-coprime quadratics, the composite of the three pencil
involutions is either one single involution (dependent forms), the
identity (the codimension-3 family), or a map of infinite order in the
generic case. The exact identity det F = -16 (det A)^2 rules the middle
ground out: no independent triple has a period-two composite.
"""

from coble import (
    BinForm,
    RestrictionTriple,
    classify,
    codim3_family_triple,
    generate_case,
    prove_det_identity_symbolically,
    verify_det_identity,
)

print("The determinant identity, proved once over nine indeterminates:")
print(f"  detF == -16 * detA^2 expands to zero: {prove_det_identity_symbolically()}")
check = verify_det_identity(BinForm((1, 0, 0)), BinForm((0, 1, 0)), BinForm((0, 0, 1)))
print(f"  pinned constant on the basis triple: detA = {check.det_a}, detF = {check.det_f}")

print()
print("Verdict 1: the worked triple (UV, U^2 - V^2, U^2 + V^2).")
result = classify(codim3_family_triple(1))
print(f"  label = {result.label}, rank = {result.rank}")
print(f"  g is the identity: {result.g.is_identity()}")
print(f"  each A_i is the fixed divisor of sigma_i: {result.fixed_point_coincidence}")

print()
print("Verdict 2: a dependent triple A3 = A1 + A2.")
a1, a2 = BinForm((0, 1, 0)), BinForm((1, 0, -1))
a3 = BinForm((1, 1, -1))
result = classify(RestrictionTriple(a1, a2, a3))
print(f"  label = {result.label}, rank = {result.rank}")
print(f"  all three involutions coincide: {result.common_involution!r}")
print(f"  g^2 is the identity: {result.g_squared.is_identity()}")
print(f"  dependence certificate collinear: {result.certificate.collinear}")

print()
print("Verdict 3: a generic triple.")
result = classify(RestrictionTriple(BinForm((0, 1, 0)), BinForm((1, 0, -1)), BinForm((1, 0, 3))))
print(f"  label = {result.label}, detA = {result.det_a}")
u, v = result.witness_moved
print(f"  g^2 moves the parameter ({u} : {v})")

print()
print("Seeded generators hit every branch:")
for label in ("NODAL_IDENTITY", "CODIM3_FAMILY", "POMPILJ_FAILS"):
    triple = generate_case(label, seed=1)
    print(f"  {label:15s} <- {[str(f) for f in triple.forms()]}")
