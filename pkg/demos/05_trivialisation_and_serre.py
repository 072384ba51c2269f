#!/usr/bin/env python3
"""Trivialising the raising generator and the rewritten Serre sums.

The degree-0 solution Sbar against the classical colouring rewrites the
raising generator as sum over a of (X-)^a Sbar_{a+1}(H) (X+)^{a+1}.  In
the rescaled basis where the lowering generator acts classically, this
operator acts by exactly n - p + 1: the whole deformed module family is
carried back to the undeformed one.  The same rewriting turns the
classical Serre sum into one that vanishes on rank-2 modules.
"""

from qcolour.crystal import ClassicalColouring, QuantumColouring
from qcolour.gqe import (GqeEquation, gqe_serre_residual, solve,
                         trivialised_generator)
from qcolour.repmod import a2_vector_module, build_L
from qcolour.series import format_series

cl = ClassicalColouring()
qu = QuantumColouring(order=6)

sbar = solve(GqeEquation.build(qu, cl, 0, order=6))
print("degree-0 solution against the classical colouring:")
for p in range(sbar.support()):
    print(f"  Sbar_{p} =", format_series(sbar.entry(p)))

n = 6
m = build_L(n, qu, order=6)
op = trivialised_generator(sbar, m, basis="classical")
print(f"\nrewritten raising generator on the n = {n} string "
      "(classical basis):")
for p in range(1, n + 1):
    print(f"  b_{n},{p} -> {format_series(op.entry(p - 1, p))} "
          f"* b_{n},{p-1}   (classical coefficient {n - p + 1})")

# Rank-2 witness: the rewritten Serre sum annihilates the quantum
# 3-dimensional module; with classical inputs it reduces to the
# ordinary Serre relation.
mq = a2_vector_module("quantum", order=6)
res_q = gqe_serre_residual(mq, 0, 1, sbar, -1)
sbar_cl = solve(GqeEquation.build(cl, cl, 0, order=6))
res_cl = gqe_serre_residual(mq, 0, 1, sbar_cl, -1)
print("\nSerre residual, quantum inputs:  ",
      "zero" if res_q is None else f"first nonzero h-order {res_q}")
print("Serre residual, classical inputs:",
      "zero" if res_cl is None else f"first nonzero h-order {res_cl}")
assert res_q is None and res_cl is None
