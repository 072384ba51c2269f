#!/usr/bin/env python3
"""The two-parameter interpolation algebra and its specializations.

The double deformation replaces each quantum integer [a] at Q = exp(h)
by [a] at Q T^{a}, where T = exp(h') and {a} is a Laurent polynomial in
Q^a taking the value 1 exactly when g divides a after specializing Q to
a primitive 2g-th root of unity.  Setting h' = 0 recovers the usual
quantum module; setting Q = eps exposes a copy of the g-rescaled
quantum algebra on the g-divisible weight part.
"""

from qcolour.langint import (build_hh_module, commutator_check,
                             dual_generators, dual_relations_report,
                             gen_quantum_number, hp0_slice_matches_quantum,
                             interpolation_poly, power_commutation_residual,
                             dual_module_decomposition, specialize_eps)
from qcolour.scalars import CyclotomicScalar
from qcolour.series import format_series

g = 3
p = interpolation_poly(g)
eps = CyclotomicScalar.zeta(2 * g)
print("P(u) for g = 3:", p)
print("values at eps^l:", [p(eps ** l) for l in range(2 * g)])

x = gen_quantum_number(2, g, 4, 3)
print("\n[2] at Q T^{2}:", format_series(x))
print("its h' = 0 slice:", format_series(x.specialize_hp0()))

n = 6
m = build_hh_module("finite", n, g, 6, 4)
assert hp0_slice_matches_quantum(m).passed
assert commutator_check(m).passed
print(f"\nfinite module n = {n}, g = {g}: h'=0 slice and the "
      "commutator-mod-h' check both pass")

# Specialization at Q = eps and the fundamental commutation identity on
# the g-divisible weight part.
rep = power_commutation_residual("finite", n, g, 4)
print("fundamental identity residual:",
      "zero" if rep.passed else rep.max_nonzero_order)
assert rep.passed

em = specialize_eps("finite", n, g, 4)
da = dual_generators(em)
print("dual sub-basis module indices:", da.indices,
      " dual Cartan values:", da.lh_values)
assert dual_relations_report(da).passed
print("dual ladder operators satisfy the g-rescaled quantum relation")

# The dual module decomposes as predicted: one string for odd g,
# two strings for even g.
for nn, gg in ((6, 3), (4, 2), (2, 2), (0, 2)):
    verdict, kernel, char = dual_module_decomposition(nn, gg, 4)
    assert verdict.passed
    print(f"n={nn}, g={gg}: dual highest weights {sorted(kernel, reverse=True)}"
          f", dual character {dict(sorted(char.items(), reverse=True))}")
