"""Pencils of binary quadratics and their involutions.

Two coprime quadratics A, B span a pencil x*A + y*B. Every member has two
roots, and there is a unique involution of the line swapping the two roots
of each member; its fixed points are the roots of the Jacobian J(A, B).
"""

from coble import (
    BinForm,
    compose,
    fixed_quadratic,
    involution_from_fixed_quadratic,
    involution_from_pencil,
    jacobian_pair,
    substitute,
)

UV = BinForm((0, 1, 0))
U2_MINUS_V2 = BinForm((1, 0, -1))
U2_PLUS_V2 = BinForm((1, 0, 1))

print("The three classical fixed divisors and their involutions:")
for f in (UV, U2_MINUS_V2, U2_PLUS_V2):
    sigma = involution_from_fixed_quadratic(f)
    print(f"  fixed divisor {f}  ->  map {sigma!r}")

print()
print("The pencil spanned by U^2 - V^2 and U^2 + V^2:")
jac = jacobian_pair(U2_MINUS_V2, U2_PLUS_V2)
print(f"  Jacobian = {jac} (proportional to UV: {jac.proportional_to(UV)})")
sigma = involution_from_pencil(U2_MINUS_V2, U2_PLUS_V2)
print(f"  pencil involution = {sigma!r}  (t -> -t)")

print()
print("It fixes every member of the pencil, as forms up to scale:")
for x, y in ((1, 1), (2, -3), (5, 7)):
    member = BinForm([x * a + y * b for a, b in zip(U2_MINUS_V2.coeffs, U2_PLUS_V2.coeffs)])
    pulled = substitute(member, sigma)
    print(f"  {x}*A + {y}*B = {member}; pullback proportional: {pulled.proportional_to(member)}")

print()
print("Composing the three involutions gives the identity:")
s1 = involution_from_fixed_quadratic(UV)
s2 = involution_from_fixed_quadratic(U2_MINUS_V2)
s3 = involution_from_fixed_quadratic(U2_PLUS_V2)
g = compose(s3, compose(s2, s1))
print(f"  s3 o s2 o s1 = {g!r} is the identity: {g.is_identity()}")

print()
print("Round trip: the fixed divisor of the constructed involution")
print(f"  fixed_quadratic(s2) = {fixed_quadratic(s2)} (started from {U2_MINUS_V2})")
