#!/usr/bin/env python3
"""Generalised Cartan matrices, root data and the Langlands dual.

A symmetrisable matrix carries a vector d with d_i C_ij = d_j C_ji; the
dual root datum lives on the transposed matrix and embeds into the
original weight lattice with scalings d / d_i.
"""

from qcolour.rootdata import (RootDatum, cartan_by_name, check_cone_avoidance,
                              check_unique_dominant, finite_type_names,
                              langlands_dual, serre_exponent_set,
                              shifted_weyl_action, validate_gcm)

b2 = validate_gcm([[2, -1], [-2, 2]])
print("B2 entries:", b2.entries)
print("symmetriser d =", b2.d, " finite type:", b2.is_finite_type())

datum = RootDatum.standard(b2, "B2")
dual, iso = langlands_dual(datum)
print("dual matrix:", dual.cartan.entries, " (this is C2)")
print("embedding scalings xi =", iso.xi)
print("dual root images:", [iso.apply(r) for r in dual.roots])

g2 = RootDatum.standard(cartan_by_name("G2"), "G2")
_, iso_g2 = langlands_dual(g2)
print("\nG2 scalings xi =", iso_g2.xi, " (lcm of (3,1) over each d_i)")

# The shifted reflection s_i * lam = s_i(lam + rho) - rho.
a2 = RootDatum.standard(cartan_by_name("A2"), "A2")
print("\ns_0 * 0        =", shifted_weyl_action(a2, [0], (0, 0)))
print("(s_0 s_1) * 0  =", shifted_weyl_action(a2, [0, 1], (0, 0)),
      " (equals -alpha_1 - 2 alpha_0)")

# Root-lattice combinatorics: the finite set A built from Serre-type
# exponents has 0 as its only dominant element, and avoids the shifted
# lower cones -- exhaustively checkable matrix by matrix.
print("\nA for A2:", serre_exponent_set(cartan_by_name("A2")))
for name in finite_type_names(3):
    cm = cartan_by_name(name)
    if cm.rank < 2:
        continue
    dom = check_unique_dominant(cm)
    cone = check_cone_avoidance(cm)
    print(f"{name:10} dominant:{dom.passed}  cones:{cone.passed}")
    assert dom.passed and cone.passed
