#!/usr/bin/env python3
"""Characters, Freudenthal multiplicities and Langlands duality.

Restricting a character to the dual-embedded weight sublattice and
re-coordinating gives the dual character; for the B2/C2 pair the dual
of an irreducible always contains the matching dual irreducible.
"""

from qcolour.crystal import ClassicalColouring
from qcolour.repmod import (build_L, character, decompose_into_irreducibles,
                            freudenthal_char, isogeny_restrict,
                            restrict_character)
from qcolour.rootdata import (RootDatum, cartan_by_name, langlands_dual,
                              rank1_isogeny)

cl = ClassicalColouring()

# Rank 1: restriction along a scaling isogeny.  Odd scalings keep one
# string; even scalings split weights of both parities.
iso3 = rank1_isogeny(3, "weight")
chi6 = character(build_L(6, cl))
print("chi(L(6)) restricted by 3:", restrict_character(chi6, iso3))
iso2 = rank1_isogeny(2, "weight")
chi4 = character(build_L(4, cl))
print("chi(L(4)) restricted by 2:", restrict_character(chi4, iso2),
      " (the weights of L(2) + L(1))")

# Module-level restriction agrees with the character-level one.
m = isogeny_restrict(build_L(6, cl), iso3)
assert character(m) == restrict_character(chi6, iso3)

# Rank 2: B2 and its dual.
b2 = RootDatum.standard(cartan_by_name("B2"), "B2")
dual, iso = langlands_dual(b2)
print("\nB2 symmetrisers:", b2.cartan.d, " dual matrix:",
      dual.cartan.entries)

for lam_dual in ((1, 0), (0, 1), (2, 0), (1, 1)):
    lam = iso.apply(lam_dual)
    chi = freudenthal_char(b2, lam)
    dec = decompose_into_irreducibles(restrict_character(chi, iso), dual)
    pretty = " + ".join(f"{v} L{w}" for w, v in sorted(dec.items()))
    print(f"L_B2{lam} (dim {sum(chi.values())}) restricts to: {pretty}")
    assert dec.get(lam_dual, 0) >= 1
print("\nevery dual decomposition contains its matching irreducible")
