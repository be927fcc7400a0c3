"""Weights and tensor products of irreducible modules of the Levi factor of P(alpha_k).

Everything lives in the fundamental-weight coordinates of G.  The Levi
factor only sees the nodes ``i != k``; the ``k``-th coordinate of a weight
rides along (it moves whenever a Levi root with nonzero ``alpha_k``-pairing is
subtracted) but is never used for dominance or singularity tests.

Weight multiplicities come from Freudenthal's recursion on the dominant
weights, tensor products from Klimyk's signed reflection rule.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction

from .bbw import dominant_conjugate
from .lie import levi_subsystem, pairing, root_system, root_to_weight

__all__ = [
    "dominant_weights",
    "module_weights",
    "levi_weights",
    "levi_dimension",
    "subsystem_dimension",
    "klimyk_tensor",
    "decomposition_dimension",
]


def _subsystem(rs, nodes):
    nodes = tuple(sorted(nodes))
    off = [i for i in range(rs.rank) if i + 1 not in nodes]
    roots = tuple(r for r in rs.positive_roots if all(r.coeffs[i] == 0 for i in off))
    return nodes, roots


def _is_dominant(mu, nodes):
    return all(mu[i - 1] >= 0 for i in nodes)


def _check_dominant(mu, nodes, what="weight"):
    if not _is_dominant(mu, nodes):
        raise ValueError(f"{what} {mu} is not dominant on nodes {nodes}")


def _sub(mu, nu):
    return tuple(a - b for a, b in zip(mu, nu))


def _add(mu, nu):
    return tuple(a + b for a, b in zip(mu, nu))


def dominant_weights(rs, nodes, mu):
    """Dominant weights below ``mu`` with their depth vectors (``mu - nu`` in root coordinates).

    Any dominant weight below ``mu`` is reached from ``mu`` by subtracting
    positive roots while staying dominant, so a search over that move set is
    complete.
    """
    rs = root_system(rs)
    nodes, roots = _subsystem(rs, nodes)
    mu = tuple(mu)
    _check_dominant(mu, nodes)
    root_w = [(r.coeffs, root_to_weight(rs, r)) for r in roots]
    depth = {mu: (0,) * rs.rank}
    stack = [mu]
    while stack:
        nu = stack.pop()
        d = depth[nu]
        for m, w in root_w:
            cand = _sub(nu, w)
            if cand not in depth and _is_dominant(cand, nodes):
                depth[cand] = _add(d, m)
                stack.append(cand)
    return depth


def _freudenthal(rs, nodes, mu):
    """Multiplicities of the dominant weights of the irreducible module ``V(mu)``."""
    nodes, roots = _subsystem(rs, nodes)
    depth = dominant_weights(rs, nodes, mu)
    order = sorted(depth, key=lambda nu: (sum(depth[nu]), depth[nu]))
    two_rho = (2,) * rs.rank
    mult = {mu: 1}
    root_w = [(r, root_to_weight(rs, r)) for r in roots]
    for nu in order[1:]:
        total = Fraction(0)
        for r, w in root_w:
            x = nu
            while True:
                x = _add(x, w)
                dom, _ = dominant_conjugate(rs, x, nodes=nodes)
                # dominant weights above nu were handled earlier in depth order
                if dom not in depth:
                    break
                total += mult[dom] * pairing(x, r, rs)
        # (mu + rho, mu + rho) - (nu + rho, nu + rho) = (mu + nu + 2 rho, mu - nu)
        denom = pairing(_add(_add(mu, nu), two_rho), depth[nu], rs)
        val = 2 * total / denom
        assert val.denominator == 1 and val >= 0, (nu, val)
        mult[nu] = int(val)
    return {nu: m for nu, m in mult.items() if m}


def _orbit(rs, nu, nodes):
    seen = {nu}
    stack = [nu]
    while stack:
        x = stack.pop()
        for i in nodes:
            a = x[i - 1]
            if a > 0:
                y = tuple(v - a * c for v, c in zip(x, rs.cartan[i - 1]))
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return seen


def module_weights(rs, nodes, mu) -> Counter:
    """All weights (with multiplicity) of the irreducible module of the sub-diagram ``nodes``."""
    rs = root_system(rs)
    nodes = tuple(sorted(nodes))
    out = Counter()
    for nu, m in _freudenthal(rs, nodes, tuple(mu)).items():
        for x in _orbit(rs, nu, nodes):
            out[x] = m
    return out


def _levi_nodes(rs, k):
    return levi_subsystem(rs, k).nodes


def levi_weights(rs, k, mu) -> Counter:
    """Weights of the irreducible P(alpha_k)-module with highest weight ``mu``."""
    rs = root_system(rs)
    return module_weights(rs, _levi_nodes(rs, k), tuple(mu))


def subsystem_dimension(rs, nodes, mu) -> int:
    """Weyl dimension formula restricted to the roots supported on ``nodes``."""
    rs = root_system(rs)
    nodes, roots = _subsystem(rs, nodes)
    _check_dominant(tuple(mu), nodes)
    shifted = tuple(a + 1 for a in mu)
    r = (1,) * rs.rank
    d = Fraction(1)
    for root in roots:
        d *= pairing(shifted, root, rs) / pairing(r, root, rs)
    assert d.denominator == 1
    return int(d)


def levi_dimension(rs, k, mu) -> int:
    rs = root_system(rs)
    return subsystem_dimension(rs, _levi_nodes(rs, k), mu)


def klimyk_tensor(rs, k, mu, nu) -> dict:
    """Decompose ``V(mu) (x) V(nu)`` over the Levi of P(alpha_k).

    Returns ``{highest_weight: multiplicity}``.  Runs over the weights of
    the smaller factor; the shift by rho is G's rho, which agrees with the
    Levi half-sum on every Levi coroot.
    """
    rs = root_system(rs)
    nodes, roots = _subsystem(rs, _levi_nodes(rs, k))
    mu, nu = tuple(mu), tuple(nu)
    _check_dominant(mu, nodes, "first factor")
    _check_dominant(nu, nodes, "second factor")
    if subsystem_dimension(rs, nodes, nu) > subsystem_dimension(rs, nodes, mu):
        mu, nu = nu, mu
    acc = Counter()
    for w, m in module_weights(rs, nodes, nu).items():
        x = tuple(a + b + 1 for a, b in zip(mu, w))
        if any(pairing(x, r, rs) == 0 for r in roots):
            continue
        dom, steps = dominant_conjugate(rs, x, nodes=nodes)
        acc[tuple(a - 1 for a in dom)] += -m if steps % 2 else m
    if any(v < 0 for v in acc.values()):
        raise AssertionError(f"negative multiplicity in Klimyk sum: {dict(acc)}")
    return {hw: v for hw, v in sorted(acc.items()) if v}


def decomposition_dimension(rs, k, decomposition) -> int:
    return sum(m * levi_dimension(rs, k, hw) for hw, m in decomposition.items())
