"""The Picard lattice of a ten-point blow-up of the plane.

Divisor classes are vectors d*L + sum(m_i E_i) with the pairing
d*d' - sum(m_i m_i'). The named classes of the ten-nodal sextic model
(boundary curve, cubics through nine points, elliptic pencils, the
quintic polarization H, and the effective (-2)-classes R_i) satisfy a
table of exact intersection numbers, re-derived here.
"""

from coble import (
    DivClass,
    arithmetic_genus,
    intersect,
    is_minus_two,
    named_class,
    verify_paper_table,
)

print("Named classes:")
for name, idx in (("C", None), ("K", None), ("H", None), ("Ecal", 1), ("P", 1), ("R", 1)):
    cls = named_class(name, idx)
    shown = name if idx is None else f"{name}_{idx}"
    print(f"  {shown:6s} = {cls!r}")

print()
print("Key numbers:")
C, K, H = named_class("C"), named_class("K"), named_class("H")
print(f"  C.C  = {intersect(C, C)}   (boundary sextic has self-intersection -4)")
print(f"  K.K  = {intersect(K, K)}")
print(f"  H.H  = {intersect(H, H)}   (H embeds the surface as a quintic)")
print(f"  p_a of the plane sextic class: {arithmetic_genus(DivClass(6, (0,) * 10))}")
print(f"  p_a of the elliptic pencil P_1: {arithmetic_genus(named_class('P', 1))}")
print(f"  R_1 is a (-2)-class: {is_minus_two(named_class('R', 1))}")

print()
print("Full table:")
print(verify_paper_table())
