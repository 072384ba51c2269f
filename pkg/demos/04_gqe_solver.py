#!/usr/bin/env python3
"""The triangular equation behind deformed commutation relations.

For colourings psi1, psi2 the system T(psi1) M = N(psi2)[d] asks for a
column of polynomials M_p(u) with series coefficients.  Row (n, p)
reads

    sum over a <= p of M_a(n-2p+2a) [psi1](n,p)!/[psi1](n,p-a)!
        = [psi2](n, p-d)   (when 0 < p-d <= n, else 0).

Degree -1 with psi1 = psi2 rewrites the raising-lowering product; the
degree-0 equation against the classical colouring drives the
trivialisation of the raising generator.
"""

from qcolour.crystal import ClassicalColouring, QuantumColouring
from qcolour.gqe import (GqeEquation, NoSolution, deformed_commutator_operator,
                         solve)
from qcolour.repmod import build_L
from qcolour.series import format_series

cl = ClassicalColouring()
qu = QuantumColouring(order=6)

# Classical case: the solution collapses to (u, 1, 0, ...).
sol = solve(GqeEquation.build(cl, cl, -1, order=6, p_max=24))
print("classical degree -1:")
for p in range(sol.support()):
    print(f"  M_{p} =", format_series(sol.entry(p)))

# Quantum case: the solver rediscovers the quantum commutation relation
# ([X+, X-] = [H]): entry 0 is the truncated quantum integer of u and
# entry 1 is constant 1.
sq = solve(GqeEquation.build(qu, qu, -1, order=6, p_max=24))
print("\nquantum degree -1 (support, degrees):", sq.support(), sq.degrees)
for p in range(sq.support()):
    print(f"  M_{p} =", format_series(sq.entry(p)))

# The rewritten product equals the module-side product on every string.
for n in (2, 5, 8):
    m = build_L(n, qu, order=6)
    lhs = deformed_commutator_operator(sq, m)
    rhs = m.operator("X0+").compose(m.operator("X0-"))
    assert (lhs - rhs).is_zero()
print("\noperator identity X+X- = sum (X-)^a M_a(H) (X+)^a holds on n <= 8")

# Non-admissible input: the solve refutes with a concrete witness row.
from fractions import Fraction
from qcolour.crystal import PolySeriesColouring, V, poly_uv
pert = PolySeriesColouring([V, poly_uv({(0, 0): Fraction(1)})],
                           [V, poly_uv({(0, 0): Fraction(1)})], order=6)
res = solve(GqeEquation.build(pert, pert, -1, order=6))
assert isinstance(res, NoSolution)
print(f"perturbed colouring: no solution, witness row "
      f"(n={res.n}, p={res.p}), h-order {res.h_order}")
