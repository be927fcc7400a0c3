"""Cohomology behind wild representation type.

For each listed space, two ACM bundles F_1, F_2 are fixed.  Decomposing
F_1 (x) F_2 over the Levi factor and applying Borel-Bott-Weil to every summand
gives h^1 (which must be at least 4) and checks that all other cohomology
vanishes, including after twisting by the canonical bundle.
"""
from acmforge.wildness import WILD_PAIRS, verify_prop44

for family, k in WILD_PAIRS:
    rep = verify_prop44(family, k)
    print(rep.summary())
    for hw, mult in rep.decomposition.items():
        print(f"    {mult} x E{hw}")
