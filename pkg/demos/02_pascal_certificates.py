"""Pascal's hexagon and dependence certificates.

Six points on a conic give three intersection points of opposite hexagon
sides, and those are always collinear. For three involutions whose
composite has order two, walking a point around the hexagon p -> s1(p) ->
s2(s1(p)) -> ... closes up, and the centers of the three lifted involutions
are collinear, which certifies that their fixed divisors are linearly
dependent binary quadratics.
"""

import random
from fractions import Fraction

from coble import (
    BinForm,
    Conic,
    MoebiusMap,
    coeff_matrix_det,
    dependence_certificate,
    fixed_quadratic,
    pascal_points,
    veronese,
)

conic = Conic.standard()

print("Pascal's theorem on the parameters 0..5:")
points = [veronese(t, 1) for t in range(6)]
result = pascal_points(conic, points)
for k, x in enumerate(result.points(), start=1):
    print(f"  x{k} = {x!r}")
print(f"  collinear: {result.collinear}")

print()
print("A seeded random hexagon:")
rng = random.Random(0)
params = set()
while len(params) < 6:
    params.add(Fraction(rng.randint(-20, 20), rng.randint(1, 8)))
print(f"  parameters: {sorted(params)}")
print(f"  collinear: {pascal_points(conic, [veronese(t, 1) for t in params]).collinear}")

print()
print("Dependence certificate for s1: t -> -t, s2: t -> 1/t, s3 := s1.")
print("The composite g = s1 o s2 o s1 equals t -> 1/t: order two, not the identity.")
s1 = MoebiusMap(-1, 0, 0, 1)
s2 = MoebiusMap(0, 1, 1, 0)
cert = dependence_certificate(s1, s2, s1)
print(f"  hexagon parameters: {[tuple(map(str, p)) for p in cert.hexagon]}")
print(f"  closure verified: {cert.closure_ok}")
print(f"  centers: {[repr(c) for c in cert.centers]}")
print(f"  centers determinant: {cert.centers_det} -> collinear: {cert.collinear}")
fs = [fixed_quadratic(s) for s in (s1, s2, s1)]
print(f"  coefficient determinant of the fixed divisors: {coeff_matrix_det(*fs)}")
print("  (two involutions coincide here, so the side construction is skipped:")
print(f"   pascal_points = {cert.pascal_points})")

print()
print("A triple with three distinct involutions runs the full side construction.")
print("Seeds whose hexagon degenerates raise a retryable error; try the next one:")
s3 = MoebiusMap(3, 4, 4, -3)  # conjugate of s1 by an element commuting with s2 o s1
for seed in range(10):
    try:
        cert = dependence_certificate(s1, s2, s3, seed=seed)
    except Exception as err:
        print(f"  seed {seed}: {err}")
        continue
    print(f"  seed {seed}: hexagon is in general position")
    break
print(f"  side intersections match the centers: {cert.pascal_matches_centers}")
print(f"  collinear: {cert.collinear}")
