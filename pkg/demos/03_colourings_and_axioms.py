#!/usr/bin/env python3
"""Colourings of the rank-1 crystal and the admissibility axioms.

A colouring assigns a ring element to every signed string edge; its
congruence class [psi](n,k) = psi^-(n,k) psi^+(n,n-k+1) determines all
derived structures.  Four axioms (deformation, regularity, quotient,
Verma) single out the colourings whose deformed module family is
consistent.
"""

from fractions import Fraction

from qcolour.crystal import (ClassicalColouring, Edge, PointwiseColouring,
                             PolySeriesColouring, QuantumColouring, V,
                             check_h_admissible, congruence,
                             h_admissible_expansion, isogeny_colouring,
                             interpolation_colouring, poly_uv,
                             specialize_colouring)
from qcolour.series import format_series

cl = ClassicalColouring()
qu = QuantumColouring(order=6)

print("classical edge (-,3,2):", cl.eval_edge(Edge(-1, 3, 2)))
print("quantum edge (+,5,2):  ", format_series(qu.eval_edge(Edge(1, 5, 2))))

# Congruence classes in closed bivariate form.
print("\n[psi_cl] =", congruence(cl, 1).closed_form[0])
print("[psi_q]_0 =", congruence(qu, 3).closed_form[0])

# Both built-in colourings satisfy all four axioms.
for psi, name in ((cl, "classical"), (qu, "quantum")):
    rep = check_h_admissible(psi, 6)
    verdicts = " ".join(f"{v.name}:{v.status}" for v in rep.verdicts())
    print(f"{name:9} -> {verdicts}")
    assert rep.all_pass()

# A first-order perturbation psi(v) = v + h breaks the Verma symmetry.
one = poly_uv({(0, 0): Fraction(1)})
pert = PolySeriesColouring([V, one], [V, one], order=6)
rep = check_h_admissible(pert, 6)
print("\nperturbed verma axiom:", rep.verma.status,
      "at h-order", rep.verma.order)
assert rep.verma.status == "fail"

# Transformers: reindexing along an isogeny, and the affine blend that
# interpolates two colourings over rational functions regular at 0, 1.
two = isogeny_colouring(cl, 2, 0)
print("\nisogeny-squeezed classical value at (n,k)=(4,2):", two.minus(4, 2))

blend = interpolation_colouring(cl, cl, 2)
val = blend.minus(4, 2)
print("interpolated value at (4,2):", val,
      "-> at u=1:", val.at(1), " at u=0:", val.at(0))
at0 = specialize_colouring(blend, 0)
print("specialized at u=0, edge (4,2):", at0.minus(4, 2))

# Every scalar colouring expands into an admissible polynomial family
# that reproduces it at h = 1 on the modelled strings.
table = PointwiseColouring(rule=lambda s, n, k: Fraction(k * k, k + 1))
expn = h_admissible_expansion(table, 3)
assert check_h_admissible(expn, 4).all_pass()
tot = sum((p(Fraction(3), Fraction(2)) for p in expn.minus_coeffs),
          Fraction(0))
print("\nexpansion at h=1 on edge (3,2):", tot,
      "  original:", table.minus(3, 2))
assert tot == table.minus(3, 2)
