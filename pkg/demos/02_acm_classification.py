"""Decide the ACM property from the associated datum, then classify a whole space.

The datum of an initialized weight is a multiset of rationals; the bundle is
ACM exactly when every integer from 1 up to the maximum occurs in it.
"""
from acmforge import associated_datum, enumerate_acm, is_acm
from acmforge.tableio import emit_latex


def show(family, k, lam):
    v = is_acm(family, k, lam)
    vals = ", ".join(str(q) for q in sorted(v.datum.values))
    print(f"{family}/P(alpha_{k}) lambda={lam}")
    print(f"  T = {{{vals}}}")
    print(f"  M = {v.datum.max}; ACM = {v.is_acm}; missing levels = {v.missing_levels}\n")


show("E6", 2, (2, 0, 1, 0, 0, 0))
show("E6", 2, (0, 0, 0, 1, 1, 0))
show("G2", 2, (2, 0))

# twisting by O(s) never changes the verdict
print("twisted weight", is_acm("E6", 2, (2, 7, 1, 0, 0, 0)).is_acm, "\n")

for family, k in [("G2", 2), ("F4", 4), ("F4", 1), ("E7", 7)]:
    table = enumerate_acm(family, k)
    print(f"{family}/P(alpha_{k}): {table.count} initialized ACM bundles out of {table.candidates} candidates")
    for row in table.rows:
        print("   ", row, "M =", associated_datum(family, k, row).max)
print()
print(emit_latex(enumerate_acm("E7", 7)))
