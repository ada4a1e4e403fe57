"""The singular quintic with a tetrahedron of multiple edges.

Members alpha*X0*X1^2*X2^2 + beta*X0*X1^2*X3^2 + gamma*X0*X2^2*X3^2 +
X1*X2*X3*q have a triple point at [1,0,0,0], double edges through it, and
simple triangle edges. The cross-term-free members form the slice whose
boundary composite is the identity; orbit invariants canonicalize members
under scalings and coordinate permutations.
"""

import random
from fractions import Fraction

from coble import (
    QuinticMember,
    apply_group_element,
    expand_equation,
    is_codim3_member,
    moduli_dimensions,
    orbit_invariants,
    polar_condition,
    tetrahedron_report,
)

member = QuinticMember(1, 2, 3, (1, 0, 0, 0, 1, 0, 0, 2, 0, 5))
print("A cross-term-free member:")
print(f"  equation: {expand_equation(member)}")
report = tetrahedron_report(member)
print(f"  multiplicity at the vertex [1,0,0,0]: {report['vertex']}")
print(f"  multiplicities along the edges through it: {report['vertex_edges']}")
print(f"  multiplicities along the triangle edges:  {report['triangle_edges']}")
print(f"  cross terms absent: {is_codim3_member(member)}")
print(f"  polar conditions: {[polar_condition(member, k) for k in (1, 2, 3)]}")

print()
crossed = QuinticMember(1, 2, 3, (1, 0, 0, 0, 1, 4, 0, 2, 0, 5))
print("Adding an X1*X2 cross term breaks the first polar condition:")
print(f"  cross terms absent: {is_codim3_member(crossed)}")
print(f"  polar conditions: {[polar_condition(crossed, k) for k in (1, 2, 3)]}")

print()
print("Orbit invariants are constant under the symmetry group:")
rng = random.Random(3)
scales = tuple(Fraction(rng.randint(1, 9)) for _ in range(4))
moved = apply_group_element(member, scales, (3, 1, 2))
print(f"  scales {tuple(map(str, scales))}, permutation (3, 1, 2)")
print(f"  invariants agree: {orbit_invariants(member) == orbit_invariants(moved)}")

print()
dims = moduli_dimensions()
print(
    f"Dimension count: family {dims['ambient']}, group {dims['group']}, "
    f"quotient {dims['quotient']}, cross-term-free quotient {dims['codim3_quotient']}"
)
