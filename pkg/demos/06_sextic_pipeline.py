"""From a parametrized sextic to a classified restriction triple.

A degree-6 parametrization with a forced double point is implicitized by
exact linear algebra; the fiber over each node is a binary quadratic
recovered as a gcd of line pullbacks. Three node fibers form a restriction
triple and the classifier issues its verdict.
"""

import random

from coble import (
    BinForm,
    RestrictionTriple,
    classify,
    implicitize,
    is_singular_at,
    make_param_with_fibers,
    node_fiber,
)
from coble.sextic import composite_coeffs

rng = random.Random(12)

print("Force a node with parameter pair {1, 4}: fiber (U - V)(U - 4V).")
fiber = BinForm((1, -5, 4))
param, nodes = make_param_with_fibers([fiber], rng)
for k, f in enumerate(param.phi):
    print(f"  phi_{k} = {f}")
node = nodes[0]
print(f"  node: {node!r}")

curve = implicitize(param)
print(f"  implicit sextic has {len(curve.terms)} terms, degree {curve.total_degree()}")
print(f"  exact vanishing of the degree-36 composite: {not any(composite_coeffs(curve, param))}")
print(f"  the node is a singular point: {is_singular_at(curve, node)}")
print(f"  recovered fiber: {node_fiber(param, node)} (matches: "
      f"{node_fiber(param, node).proportional_to(fiber)})")

print()
print("Three planted fibers, one of them irreducible over Q (conjugate pair):")
fibers = [BinForm((0, 1, 0)), BinForm((1, 0, -1)), BinForm((1, 0, 1))]
param, nodes = make_param_with_fibers(fibers, rng)
extracted = [node_fiber(param, p) for p in nodes]
for f in extracted:
    print(f"  fiber: {f}")
verdict = classify(RestrictionTriple(*extracted))
print(f"  classifier verdict: {verdict.label} (g identity: {verdict.g.is_identity()})")
