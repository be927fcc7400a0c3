"""Cohomology checks behind the wild-representation-type argument.

For each space X = G/P(alpha_k) in the table of pairs below, F_1 and F_2 are
irreducible homogeneous ACM bundles and the argument needs

* h^1(F_1 (x) F_2) >= 4 and h^i(F_1 (x) F_2) = 0 for i != 1;
* h^i(F_1^v (x) F_2^v) = 0 for every i, which by Serre duality is the
  vanishing of all cohomology of F_1 (x) F_2 (x) O_X(m) with K_X = O_X(m).

The published reference data (pairs, pairing witnesses, twisted weights)
are kept here as plain tables so they can be checked independently.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .acm import is_acm
from .bbw import canonical_twist, cohomology
from .levi import klimyk_tensor
from .lie import levi_subsystem, pairing, root_system

__all__ = [
    "UnsupportedSpaceError",
    "WildnessReport",
    "WILD_PAIRS",
    "SUMMAND_PAIRINGS",
    "TWISTED_WITNESSES",
    "PUBLISHED_DECOMPOSITIONS",
    "wild_pair_spaces",
    "table1_pair",
    "verify_acm_pair",
    "verify_prop44",
    "weight",
    "witness_pairing",
]


class UnsupportedSpaceError(ValueError):
    pass


def weight(rank, **coeffs):
    """Build a weight from keyword coefficients, e.g. ``weight(4, l1=2, l3=-1)``."""
    w = [0] * rank
    for key, v in coeffs.items():
        w[int(key[1:]) - 1] = v
    return tuple(w)


def _root(rank, *parts):
    """Sum of simple roots given as (index, multiplicity) pairs."""
    m = [0] * rank
    for i, c in parts:
        m[i - 1] += c
    return tuple(m)


_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}

# (family, k) -> (F_1, F_2) as {node: coefficient}
_PAIRS = {
    ("E7", 1): ({2: 2}, {7: 2, 1: -2}),
    ("E", 2): ({1: 3}, {3: 1, 2: -2}),
    ("E", 3): ({1: 2}, {4: 1, 3: -2}),
    ("E", 4): ({1: 1, 2: 1, 3: 1}, {5: 1, 4: -2}),
    ("E", 5): ({1: 1, 4: 1}, {6: 1, 5: -2}),
    ("E", 6): ({1: 1, 5: 1}, {7: 1, 6: -2}),
    ("E8", 7): ({1: 1, 6: 1}, {8: 1, 7: -2}),
    ("F4", 1): ({4: 3}, {4: 1, 1: -2}),
    ("F4", 2): ({1: 2}, {3: 2, 2: -2}),
    ("F4", 3): ({1: 1, 2: 1}, {4: 1, 3: -2}),
}


def _expand_pairs():
    table = {}
    for (fam, k), (f1, f2) in _PAIRS.items():
        fams = ["E6", "E7", "E8"] if fam == "E" else [fam]
        for f in fams:
            n = _RANK[f]
            if k == 6 and f == "E6":
                continue
            table[(f, k)] = (
                tuple(f1.get(i + 1, 0) for i in range(n)),
                tuple(f2.get(i + 1, 0) for i in range(n)),
            )
    return dict(sorted(table.items()))


WILD_PAIRS = _expand_pairs()


def wild_pair_spaces():
    return list(WILD_PAIRS)


def table1_pair(family, k):
    """Highest weights (F_1, F_2) for the space G/P(alpha_k)."""
    key = (str(family).upper(), k)
    if key not in WILD_PAIRS:
        raise UnsupportedSpaceError(f"{key[0]}/P(alpha_{k}) has no listed (F_1, F_2) pair")
    return WILD_PAIRS[key]


def verify_acm_pair(family, k) -> bool:
    f1, f2 = table1_pair(family, k)
    return is_acm(family, k, f1).is_acm and is_acm(family, k, f2).is_acm


# Published decompositions of F_1 (x) F_2 for the connected Levi cases, and
# the pairing (mu_l + rho, alpha) claimed for a chosen positive root alpha.
# Rows: (family, k, mu_l, alpha, value)
def _summand_pairings():
    rows = []
    e7 = lambda **c: weight(7, **c)
    r7 = lambda *p: _root(7, *p)
    rows += [
        ("E7", 1, e7(l1=-2, l2=2, l7=2), r7((1, 1), (3, 1)), 0),
        ("E7", 1, e7(l1=-2, l3=2), r7((1, 1)), -1),
        ("E7", 1, e7(l1=-2, l2=1, l3=1, l7=1), r7((1, 1)), -1),
    ]
    for f in ("E6", "E7", "E8"):
        n = _RANK[f]
        rows += [
            (f, 2, weight(n, l1=3, l2=-2, l3=1), _root(n, (2, 1), (4, 1)), 0),
            (f, 2, weight(n, l1=2, l2=-2, l4=1), _root(n, (2, 1)), -1),
        ]
    f4 = lambda **c: weight(4, **c)
    r4 = lambda *p: _root(4, *p)
    rows += [
        ("F4", 1, f4(l1=-2, l3=1, l4=3), r4((1, 1), (2, 1)), 0),
        ("F4", 1, f4(l1=-2, l2=1, l4=2), r4((1, 1)), -1),
        ("F4", 1, f4(l1=-1, l4=3), r4((1, 1)), 0),
        ("F4", 1, f4(l1=-1, l3=1, l4=1), r4((1, 1)), 0),
    ]
    return tuple(rows)


SUMMAND_PAIRINGS = _summand_pairings()

PUBLISHED_DECOMPOSITIONS = {}
for _fam, _k, _mu, _a, _v in SUMMAND_PAIRINGS:
    PUBLISHED_DECOMPOSITIONS.setdefault((_fam, _k), []).append(_mu)
PUBLISHED_DECOMPOSITIONS = {key: tuple(v) for key, v in PUBLISHED_DECOMPOSITIONS.items()}


# Twisted weights mu_l + m lambda_k with a root alpha claimed to satisfy
# (mu_l + m lambda_k + rho, alpha) = 0.  Rows: (family, k, weight, alpha)
def _twisted_witnesses():
    rows = []
    for f in ("E6", "E7", "E8"):
        n = _RANK[f]
        full = [(i, 1) for i in range(1, n + 1)]
        rows.append((f, 3, weight(n, l1=2, l3=-(2 * n - 1), l4=1),
                     _root(n, *full, *[(j, 1) for j in range(4, n - 1)])))
        rows.append((f, 4, weight(n, l1=1, l2=1, l3=1, l5=1, l4=-(n + 3)),
                     _root(n, *[(i, 1) for i in range(1, n)])))
        rows.append((f, 5, weight(n, l1=1, l4=1, l5=-(n + 5), l6=1), _root(n, *full, (4, 1))))
        if n != 6:
            rows.append((f, 6, weight(n, l1=1, l5=1, l6=-(n + 8), l7=1),
                         _root(n, *full, (3, 1), (4, 2), (5, 1))))
    rows.append(("E8", 7, weight(8, l1=1, l6=1, l7=-21, l8=1), (1, 1, 1, 2, 1, 1, 1, 1)))
    rows.append(("F4", 2, weight(4, l1=2, l2=-7, l3=2), (1, 1, 2, 0)))
    rows.append(("F4", 3, weight(4, l1=1, l2=1, l3=-9, l4=1), (1, 1, 1, 0)))
    rows += [
        ("E7", 1, weight(7, l1=-19, l2=2, l7=2), (1, 2, 2, 3, 2, 2, 1)),
        ("E7", 1, weight(7, l1=-19, l3=2), (1, 2, 2, 4, 3, 2, 1)),
        ("E7", 1, weight(7, l1=-19, l2=1, l3=1, l7=1), (1, 2, 2, 3, 3, 2, 1)),
        ("E6", 2, weight(6, l1=3, l2=-13, l3=1), (1, 1, 2, 2, 1, 1)),
        ("E6", 2, weight(6, l1=2, l2=-13, l4=1), (1, 1, 2, 2, 2, 1)),
        ("E7", 2, weight(7, l1=3, l2=-16, l3=1), (1, 1, 2, 2, 2, 2, 1)),
        ("E7", 2, weight(7, l1=2, l2=-16, l4=1), (1, 1, 2, 2, 2, 2, 1)),
        ("E8", 2, weight(8, l1=3, l2=-19, l3=1), (1, 1, 2, 3, 2, 2, 2, 1)),
        ("E8", 2, weight(8, l1=2, l2=-19, l4=1), (1, 1, 2, 3, 2, 2, 2, 1)),
        ("F4", 1, weight(4, l1=-10, l3=1, l4=3), (1, 2, 3, 2)),
        ("F4", 1, weight(4, l1=-10, l2=1, l4=2), (1, 2, 4, 2)),
        ("F4", 1, weight(4, l1=-9, l4=3), (1, 2, 4, 2)),
        ("F4", 1, weight(4, l1=-9, l3=1, l4=1), (1, 2, 4, 2)),
    ]
    return tuple(rows)


TWISTED_WITNESSES = _twisted_witnesses()


@dataclass
class WildnessReport:
    family: str
    k: int
    f1: tuple[int, ...]
    f2: tuple[int, ...]
    decomposition: dict
    h_profile: dict
    canonical_m: int
    twisted_profiles: dict = field(repr=False)
    twisted_vanishing: bool = False
    h1_at_least_4: bool = False
    concentrated_in_degree_1: bool = False
    connected_levi: bool = False

    @property
    def passed(self) -> bool:
        return self.h1_at_least_4 and self.concentrated_in_degree_1 and self.twisted_vanishing

    def summary(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        h = ", ".join(f"h^{d}={v}" for d, v in sorted(self.h_profile.items())) or "all zero"
        return (
            f"{self.family}/P(alpha_{self.k}): {mark}  summands={len(self.decomposition)}  "
            f"{h}  twisted-by-K vanishing={self.twisted_vanishing}"
        )


def verify_prop44(family, k) -> WildnessReport:
    """Recompute the cohomology of F_1 (x) F_2 and of its canonical twist."""
    rs = root_system(family)
    f1, f2 = table1_pair(rs.family, k)
    levi = levi_subsystem(rs, k)
    decomposition = klimyk_tensor(rs, k, f1, f2)
    total = {}
    for mu, mult in decomposition.items():
        for d, v in cohomology(rs, k, mu, 0).as_dict().items():
            total[d] = total.get(d, 0) + mult * v
    m = canonical_twist(rs, k).m
    twisted = {mu: cohomology(rs, k, mu, m) for mu in decomposition}
    return WildnessReport(
        family=rs.family,
        k=k,
        f1=f1,
        f2=f2,
        decomposition=decomposition,
        h_profile=total,
        canonical_m=m,
        twisted_profiles=twisted,
        twisted_vanishing=all(p.nonzero_degree is None for p in twisted.values()),
        h1_at_least_4=total.get(1, 0) >= 4,
        concentrated_in_degree_1=set(total) <= {1},
        connected_levi=len(levi.components) == 1,
    )


def witness_pairing(family, mu, alpha):
    """``(mu + rho, alpha)`` for a tabulated weight and root."""
    rs = root_system(family)
    return pairing(tuple(a + 1 for a in mu), alpha, rs)
