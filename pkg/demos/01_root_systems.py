"""Tour of the exceptional root systems: sizes, highest roots, parabolic data."""
from acmforge.lie import FAMILIES, build_root_system, dim_X, levi_subsystem, pairing, rho

for family in FAMILIES:
    rs = build_root_system(family)
    print(f"{family}: rank {rs.rank}, {len(rs.positive_roots)} positive roots, highest root {rs.highest_root}")
    print(f"  simple root norms {[str(c) for c in rs.norms]}; (rho, theta) = {pairing(rho(rs), rs.highest_root, rs)}")
    for k in range(1, rs.rank + 1):
        levi = levi_subsystem(rs, k)
        print(f"  G/P(alpha_{k}): dim {dim_X(rs, k):>3}   Levi components {levi.components}")
    print()
