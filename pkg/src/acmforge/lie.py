"""Exceptional root systems in simple-root coordinates.

Roots are integer tuples ``(m_1, ..., m_n)`` meaning ``sum m_i alpha_i``;
weights are integer tuples ``(a_1, ..., a_n)`` over the fundamental weights.
Node labels follow Bourbaki (for E_n the branch node 2 hangs off node 4).
All scalars are exact: ints and :class:`fractions.Fraction`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "FAMILIES",
    "Root",
    "RootSystem",
    "LeviSystem",
    "LieError",
    "root_system",
    "build_root_system",
    "pairing",
    "support_roots",
    "dim_X",
    "levi_subsystem",
    "rho",
    "fundamental",
    "root_to_weight",
]


class LieError(ValueError):
    """Invalid input to a root-system operation (bad rank, index, family)."""


# (rank, Dynkin edges as (i, j) 1-based, squared lengths (alpha_i, alpha_i))
_DATA = {
    "E6": (6, [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)], (2,) * 6),
    "E7": (7, [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)], (2,) * 7),
    "E8": (8, [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)], (2,) * 8),
    "F4": (4, [(1, 2), (2, 3), (3, 4)], (2, 2, 1, 1)),
    "G2": (2, [(1, 2)], (2, 6)),
}

FAMILIES = tuple(_DATA)


def _gram(family):
    """Symmetric matrix of (alpha_i, alpha_j) for the simple roots."""
    n, edges, norms = _DATA[family]
    b = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        b[i][i] = Fraction(norms[i])
    for i, j in edges:
        i, j = i - 1, j - 1
        # adjacent simple roots: (a_i, a_j) = -max(c_i, c_j) / 2
        v = -Fraction(max(norms[i], norms[j]), 2)
        b[i][j] = b[j][i] = v
    return b


@dataclass(frozen=True, order=True)
class Root:
    coeffs: tuple[int, ...]
    normsq: Fraction = field(compare=False)

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def __str__(self):
        return "(" + ",".join(map(str, self.coeffs)) + ")"


@dataclass(frozen=True)
class RootSystem:
    """Immutable positive root data for one exceptional family.

    ``cartan[i][j]`` is ``<alpha_i, alpha_j^vee> = 2(alpha_i, alpha_j)/c_j``, so
    row ``i`` lists the coordinates of ``alpha_i`` over the fundamental weights.
    """

    family: str
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    norms: tuple[Fraction, ...]

    @property
    def rank(self) -> int:
        return len(self.norms)

    @property
    def highest_root(self) -> Root:
        return max(self.positive_roots, key=lambda r: r.height)

    def index_of(self, coeffs) -> int:
        return self._index[tuple(coeffs)]

    def __contains__(self, coeffs) -> bool:
        return tuple(coeffs) in self._index

    @property
    def _index(self):
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {r.coeffs: i for i, r in enumerate(self.positive_roots)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def with_norms(self, norms) -> "RootSystem":
        """Copy with the simple-root squared lengths replaced (used for scale checks)."""
        norms = tuple(Fraction(c) for c in norms)
        roots = tuple(
            Root(r.coeffs, _normsq(r.coeffs, self.cartan, norms)) for r in self.positive_roots
        )
        return RootSystem(self.family, self.cartan, roots, norms)

    def __repr__(self):
        return f"RootSystem({self.family}, {len(self.positive_roots)} positive roots)"


def _normsq(m, cartan, norms):
    # (beta, beta) = sum_ij m_i m_j (a_i, a_j), (a_i, a_j) = cartan[i][j] c_j / 2
    n = len(m)
    return sum(
        (Fraction(m[i] * m[j] * cartan[i][j]) * norms[j] / 2 for i in range(n) for j in range(n)),
        Fraction(0),
    )


def _generate_positive_roots(cartan):
    """Positive roots from the Cartan matrix, height by height via root strings."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    known = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # p = how far the alpha_i string extends below beta
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                pair = sum(beta[j] * cartan[j][i] for j in range(n))
                q = p - pair
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(known)


@lru_cache(maxsize=None)
def build_root_system(family: str) -> RootSystem:
    """Construct the positive root system of ``family`` (one of E6, E7, E8, F4, G2)."""
    family = str(family).upper()
    if family not in _DATA:
        raise LieError(f"unknown exceptional family {family!r}; expected one of {FAMILIES}")
    gram = _gram(family)
    n = len(gram)
    norms = tuple(gram[i][i] for i in range(n))
    cartan = tuple(tuple(int(2 * gram[i][j] / norms[j]) for j in range(n)) for i in range(n))
    roots = tuple(Root(m, _normsq(m, cartan, norms)) for m in _generate_positive_roots(cartan))
    return RootSystem(family, cartan, roots, norms)


def root_system(rs) -> RootSystem:
    """Accept either a family name or an existing RootSystem."""
    return rs if isinstance(rs, RootSystem) else build_root_system(rs)


def _coeffs(x):
    return x.coeffs if isinstance(x, Root) else tuple(x)


def pairing(w, alpha, rs) -> Fraction:
    """Killing pairing ``(w, alpha) = 1/2 sum a_i m_i c_i`` of a weight with a root.

    ``alpha`` may be a :class:`Root` or any integer vector in simple-root
    coordinates (it need not be a root).
    """
    rs = root_system(rs)
    m = _coeffs(alpha)
    if len(w) != rs.rank or len(m) != rs.rank:
        raise LieError(f"rank mismatch: weight {len(w)}, root {len(m)}, system {rs.rank}")
    return sum((Fraction(a * mi) * c for a, mi, c in zip(w, m, rs.norms)), Fraction(0)) / 2


def _check_k(rs, k):
    if not isinstance(k, int) or not 1 <= k <= rs.rank:
        raise LieError(f"node index k={k!r} out of range 1..{rs.rank} for {rs.family}")


def support_roots(rs, k: int) -> tuple[Root, ...]:
    """Positive roots with nonzero alpha_k coefficient, in the system's order."""
    rs = root_system(rs)
    _check_k(rs, k)
    return tuple(r for r in rs.positive_roots if r.coeffs[k - 1] != 0)


def dim_X(rs, k: int) -> int:
    """Dimension of G/P(alpha_k)."""
    return len(support_roots(rs, k))


def rho(rs) -> tuple[int, ...]:
    return (1,) * root_system(rs).rank


def fundamental(rs, i: int) -> tuple[int, ...]:
    rs = root_system(rs)
    _check_k(rs, i)
    return tuple(int(j == i - 1) for j in range(rs.rank))


def root_to_weight(rs, m) -> tuple[int, ...]:
    """Express ``sum m_i alpha_i`` over the fundamental weights."""
    rs = root_system(rs)
    m = _coeffs(m)
    n = rs.rank
    return tuple(sum(m[i] * rs.cartan[i][j] for i in range(n)) for j in range(n))


@dataclass(frozen=True)
class LeviSystem:
    """Root data of the Levi factor of P(alpha_k), kept in G coordinates."""

    parent: RootSystem
    k: int
    positive_roots: tuple[Root, ...]
    nodes: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def rho_levi(self) -> tuple[Fraction, ...]:
        """Half-sum of Levi positive roots over the fundamental weights of G.

        Coordinates off ``k`` are all 1; the ``k``-th one may be fractional.
        """
        n = self.parent.rank
        total = [0] * n
        for r in self.positive_roots:
            for j, v in enumerate(root_to_weight(self.parent, r)):
                total[j] += v
        return tuple(Fraction(v, 2) for v in total)

    def __repr__(self):
        comps = " x ".join(f"{{{','.join(map(str, c))}}}" for c in self.components)
        return f"LeviSystem({self.parent.family}, k={self.k}, {len(self.positive_roots)} roots, {comps})"


def levi_subsystem(rs, k: int) -> LeviSystem:
    """Positive roots with ``m_k = 0`` and the connected components of the diagram minus node k."""
    rs = root_system(rs)
    _check_k(rs, k)
    roots = tuple(r for r in rs.positive_roots if r.coeffs[k - 1] == 0)
    nodes = tuple(i for i in range(1, rs.rank + 1) if i != k)
    seen, comps = set(), []
    for start in nodes:
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in nodes:
                if j not in seen and rs.cartan[i - 1][j - 1] != 0:
                    seen.add(j)
                    stack.append(j)
        comps.append(tuple(sorted(comp)))
    return LeviSystem(rs, k, roots, nodes, tuple(comps))
