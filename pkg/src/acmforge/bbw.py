"""Borel-Bott-Weil cohomology of irreducible homogeneous bundles on G/P(alpha_k)."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .acm import associated_datum, check_admissible, normalize_initialized
from .lie import LieError, dim_X, pairing, rho, root_system, root_to_weight, support_roots

__all__ = [
    "SingularWeightError",
    "Singular",
    "Regular",
    "CohomologyProfile",
    "CanonicalTwist",
    "classify_weight",
    "dominant_conjugate",
    "weyl_dimension",
    "cohomology",
    "canonical_twist",
    "twist_sweep",
    "acm_cross_check",
]


class SingularWeightError(ValueError):
    pass


@dataclass(frozen=True)
class Singular:
    witness: object  # Root pairing to zero

    def __str__(self):
        return f"singular (witness {self.witness})"


@dataclass(frozen=True)
class Regular:
    index: int

    def __str__(self):
        return f"regular of index {self.index}"


@dataclass(frozen=True)
class CohomologyProfile:
    status: object
    nonzero_degree: int | None
    dimension: int
    dominant_weight: tuple[int, ...] | None

    def h(self, i: int) -> int:
        return self.dimension if i == self.nonzero_degree else 0

    def as_dict(self) -> dict[int, int]:
        return {} if self.nonzero_degree is None else {self.nonzero_degree: self.dimension}


@dataclass(frozen=True)
class CanonicalTwist:
    m: int

    def __int__(self):
        return self.m


def classify_weight(rs, mu):
    """Singular (first zero-pairing positive root) or Regular(#negative pairings)."""
    rs = root_system(rs)
    neg = 0
    for r in rs.positive_roots:
        p = pairing(mu, r, rs)
        if p == 0:
            return Singular(r)
        if p < 0:
            neg += 1
    return Regular(neg)


def _reflect(rs, mu, i):
    a = mu[i]
    row = rs.cartan[i]
    return tuple(x - a * c for x, c in zip(mu, row))


def dominant_conjugate(rs, mu, nodes=None):
    """Move ``mu`` into the dominant chamber by simple reflections.

    Reflects at the lowest-index negative coordinate until none is left and
    returns ``(dominant_weight, number_of_reflections)``.  ``nodes`` restricts
    the reflections to a sub-diagram (used for Levi factors).
    """
    rs = root_system(rs)
    mu = tuple(mu)
    idx = range(rs.rank) if nodes is None else [i - 1 for i in sorted(nodes)]
    if any(mu[i] == 0 for i in idx) and nodes is None:
        raise SingularWeightError(f"weight {mu} is singular")
    steps = 0
    while True:
        for i in idx:
            if mu[i] < 0:
                mu = _reflect(rs, mu, i)
                steps += 1
                break
            if mu[i] == 0 and nodes is None:
                raise SingularWeightError(f"weight {mu} is singular")
        else:
            return mu, steps


def weyl_dimension(rs, mu) -> int:
    """Dimension of the irreducible G-module with dominant highest weight ``mu``."""
    rs = root_system(rs)
    mu = tuple(mu)
    if len(mu) != rs.rank:
        raise LieError(f"weight has {len(mu)} coefficients, {rs.family} has rank {rs.rank}")
    if any(a < 0 for a in mu):
        raise ValueError(f"weight {mu} is not dominant")
    shifted = tuple(a + 1 for a in mu)
    r = rho(rs)
    num, den = 1, 1
    for root in rs.positive_roots:
        num *= pairing(shifted, root, rs)
        den *= pairing(r, root, rs)
    d = Fraction(num) / Fraction(den)
    assert d.denominator == 1, d
    return int(d)


def cohomology(rs, k, lam, t=0) -> CohomologyProfile:
    """Cohomology of ``E_lam(t)``, the bundle with highest weight ``lam + t lambda_k``."""
    rs = root_system(rs)
    lam = check_admissible(rs, k, lam)
    mu = tuple(a + 1 + (t if i == k - 1 else 0) for i, a in enumerate(lam))
    return _bbw(rs, mu)


def _bbw(rs, shifted):
    status = classify_weight(rs, shifted)
    if isinstance(status, Singular):
        return CohomologyProfile(status, None, 0, None)
    dom, _ = dominant_conjugate(rs, shifted)
    hw = tuple(a - 1 for a in dom)
    return CohomologyProfile(status, status.index, weyl_dimension(rs, hw), hw)


def canonical_twist(rs, k) -> CanonicalTwist:
    """Integer m with K_X = O_X(m), from the sum of the roots with m_k != 0."""
    rs = root_system(rs)
    total = [0] * rs.rank
    for r in support_roots(rs, k):
        for i, m in enumerate(r.coeffs):
            total[i] += m
    w = root_to_weight(rs, total)
    if any(v != 0 for i, v in enumerate(w) if i != k - 1):
        raise AssertionError(f"root sum {w} is not a multiple of lambda_{k}")
    return CanonicalTwist(-w[k - 1])


def twist_sweep(rs, k, lam, ts=None):
    """Classify ``lam + rho - t lambda_k`` for each integer t (sweep sign convention: larger t means a more negative twist)."""
    rs = root_system(rs)
    lam = check_admissible(rs, k, lam)
    if ts is None:
        top = math.floor(associated_datum(rs, k, normalize_initialized(lam, k)[0]).max)
        ts = range(-1, top + 2)
    out = {}
    for t in ts:
        mu = tuple(a + 1 - (t if i == k - 1 else 0) for i, a in enumerate(lam))
        out[t] = classify_weight(rs, mu)
    return out


def acm_cross_check(rs, k, lam) -> bool:
    """Compare the datum verdict with a direct BBW scan over the twists.

    Checks that ``lam + rho - t lambda_k`` is regular of index 0 for t <= 0,
    regular of index dim X for t > M, and that "no intermediate cohomology
    for 1 <= t <= M" agrees with the datum criterion.
    """
    from .acm import is_acm

    rs = root_system(rs)
    lam = check_admissible(rs, k, lam)
    init, _ = normalize_initialized(lam, k)
    verdict = is_acm(rs, k, init)
    top = verdict.datum.max
    n = dim_X(rs, k)
    sweep = twist_sweep(rs, k, init, range(0, math.floor(top) + 2))
    ok = True
    intermediate = False
    for t, st in sweep.items():
        if t <= 0:
            ok &= st == Regular(0)
        elif t > top:
            ok &= st == Regular(n)
        elif isinstance(st, Regular) and 0 < st.index < n:
            intermediate = True
    return ok and (verdict.is_acm == (not intermediate))
