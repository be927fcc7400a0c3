"""Borel-Bott-Weil in action: cohomology of twists of a homogeneous bundle.

Sweeping the twist t shows the three regimes: only H^0 for small t, only top
cohomology past M, and in between either nothing (ACM) or some intermediate
H^p (not ACM).
"""
from acmforge.acm import associated_datum
from acmforge.bbw import canonical_twist, cohomology
from acmforge.lie import dim_X


def sweep(family, k, lam):
    n = dim_X(family, k)
    top = int(associated_datum(family, k, lam).max)
    print(f"{family}/P(alpha_{k}), lambda={lam}, dim X = {n}, M = {top}")
    for t in range(1, -top - 3, -1):
        p = cohomology(family, k, lam, t)
        deg = "-" if p.nonzero_degree is None else f"H^{p.nonzero_degree} = {p.dimension}"
        flag = "  <- intermediate" if p.nonzero_degree not in (None, 0, n) else ""
        print(f"  t={t:>4}: {deg}{flag}")
    print()


sweep("G2", 2, (2, 0))
sweep("E6", 2, (0, 0, 0, 1, 1, 0))

for family, n in [("E6", 6), ("E7", 7), ("E8", 8), ("F4", 4), ("G2", 2)]:
    print(family, "canonical twists:", [canonical_twist(family, k).m for k in range(1, n + 1)])
