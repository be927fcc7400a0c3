"""ACM criterion for irreducible homogeneous bundles on G/P(alpha_k).

For an initialized weight ``lam`` (``a_k = 0``, ``a_i >= 0`` otherwise) the
associated datum is the multiset

    T = { (lam + rho, alpha) / (lam_k, alpha) : alpha > 0, m_k(alpha) != 0 }

and ``E_lam`` is ACM exactly when every integer ``1 <= l <= max T`` occurs in T.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

import numpy as np

from .lie import LieError, dim_X, pairing, root_system, support_roots

__all__ = [
    "InvalidWeightError",
    "BudgetExceededError",
    "AssociatedDatum",
    "AcmVerdict",
    "ClassificationTable",
    "DEFAULT_BUDGET",
    "check_admissible",
    "normalize_initialized",
    "associated_datum",
    "is_acm",
    "search_simplex",
    "count_candidates",
    "enumerate_acm",
]

DEFAULT_BUDGET = 10**8


class InvalidWeightError(LieError):
    """Weight is not the highest weight of an irreducible bundle on G/P(alpha_k)."""


class BudgetExceededError(RuntimeError):
    """Candidate simplex larger than the allowed budget; ``partial`` holds what was scanned."""

    def __init__(self, message, partial=None, candidates=None):
        super().__init__(message)
        self.partial = partial
        self.candidates = candidates


@dataclass(frozen=True)
class AssociatedDatum:
    values: tuple[Fraction, ...]
    max: Fraction

    def multiplicity(self, level) -> int:
        return sum(1 for v in self.values if v == level)

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class AcmVerdict:
    is_acm: bool
    missing_levels: tuple[int, ...]
    datum: AssociatedDatum
    weight: tuple[int, ...]
    twist: int = 0

    def __bool__(self):
        return self.is_acm


@dataclass(frozen=True)
class ClassificationTable:
    family: str
    k: int
    dim_x: int
    rows: tuple[tuple[int, ...], ...]
    caps: tuple[int, ...] | None = None
    candidates: int = 0
    partial: bool = False
    metadata: dict = field(default_factory=dict, compare=False)

    @property
    def rank(self) -> int:
        return len(self.rows[0]) if self.rows else root_system(self.family).rank

    @property
    def count(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)


def check_admissible(rs, k, lam):
    rs = root_system(rs)
    lam = tuple(int(a) for a in lam)
    if len(lam) != rs.rank:
        raise InvalidWeightError(f"weight has {len(lam)} coefficients, {rs.family} has rank {rs.rank}")
    if not 1 <= k <= rs.rank:
        raise LieError(f"node index k={k} out of range 1..{rs.rank} for {rs.family}")
    bad = [i + 1 for i, a in enumerate(lam) if a < 0 and i != k - 1]
    if bad:
        raise InvalidWeightError(
            f"coefficients a_i must be >= 0 for i != k={k}; negative at i={bad}"
        )
    return lam


def normalize_initialized(lam, k):
    """Clear the k-th coefficient; returns ``(initialized_weight, removed_twist)``."""
    lam = tuple(lam)
    if not 1 <= k <= len(lam):
        raise LieError(f"node index k={k} out of range 1..{len(lam)}")
    bad = [i + 1 for i, a in enumerate(lam) if a < 0 and i != k - 1]
    if bad:
        raise InvalidWeightError(f"negative coefficient at i={bad} (i != k={k})")
    twist = lam[k - 1]
    return lam[: k - 1] + (0,) + lam[k:], twist


def associated_datum(rs, k, lam) -> AssociatedDatum:
    """Exact datum, one value per support root in root order (duplicates kept)."""
    rs = root_system(rs)
    lam = check_admissible(rs, k, lam)
    if lam[k - 1] != 0:
        raise InvalidWeightError(f"weight is not initialized: a_{k} = {lam[k - 1]}")
    shifted = tuple(a + 1 for a in lam)
    lk = tuple(int(i == k - 1) for i in range(rs.rank))
    values = tuple(pairing(shifted, r, rs) / pairing(lk, r, rs) for r in support_roots(rs, k))
    return AssociatedDatum(values, max(values))


def _missing(values, top):
    present = {int(v) for v in values if v.denominator == 1}
    return tuple(l for l in range(1, math.floor(top) + 1) if l not in present)


def is_acm(rs, k, lam) -> AcmVerdict:
    """Decide the ACM property; non-initialized input is twisted to a_k = 0 first."""
    rs = root_system(rs)
    lam = check_admissible(rs, k, lam)
    init, twist = normalize_initialized(lam, k)
    datum = associated_datum(rs, k, init)
    missing = _missing(datum.values, datum.max)
    return AcmVerdict(not missing, missing, datum, init, twist)


# -- enumeration ---------------------------------------------------------------


def _integer_norms(rs):
    """Squared lengths scaled to coprime positive integers (the datum is scale free)."""
    den = reduce(math.lcm, (Fraction(c).denominator for c in rs.norms), 1)
    ints = [int(Fraction(c) * den) for c in rs.norms]
    g = reduce(math.gcd, ints)
    return [c // g for c in ints]


def search_simplex(rs, k):
    """Integer form ``sum_{i != k} w_i a_i <= bound`` bounding every ACM weight.

    Evaluating the datum at the highest root gives a value linear in the a_i
    with positive coefficients; it cannot exceed max T, which cannot exceed
    dim X for an ACM bundle.
    """
    rs = root_system(rs)
    c = _integer_norms(rs)
    theta = rs.highest_root.coeffs
    w = [theta[i] * c[i] for i in range(rs.rank)]
    bound = dim_X(rs, k) * w[k - 1] - sum(w)
    weights = tuple(0 if i == k - 1 else w[i] for i in range(rs.rank))
    return weights, bound


def _ranges(rs, k, caps):
    weights, bound = search_simplex(rs, k)
    hi = []
    for i, w in enumerate(weights):
        if i == k - 1:
            hi.append(0)
            continue
        top = bound // w if bound >= 0 else -1
        if caps is not None:
            top = min(top, caps[i])
        hi.append(top)
    return weights, bound, hi


def _suffix_counts(weights, bound, hi, k):
    """``C[i][r]``: lattice points in coordinates ``i..n-1`` with weighted sum at most ``r``."""
    n = len(weights)
    C = [None] * (n + 1)
    C[n] = [1] * (bound + 1)
    for i in range(n - 1, -1, -1):
        nxt = C[i + 1]
        if i == k - 1 or weights[i] == 0:
            C[i] = list(nxt)
            continue
        w = weights[i]
        row = []
        for r in range(bound + 1):
            row.append(sum(nxt[r - a * w] for a in range(min(hi[i], r // w) + 1)))
        C[i] = row
    return C


def count_candidates(rs, k, caps=None) -> int:
    """Number of lattice points in the search simplex (intersected with ``caps``)."""
    rs = root_system(rs)
    weights, bound, hi = _ranges(rs, k, caps)
    if bound < 0:
        return 0
    return _suffix_counts(weights, bound, hi, k)[0][bound]


def _simplex_points(weights, bound, hi, k, prefix):
    """All lattice points of the simplex whose leading coordinates equal ``prefix``, lex order."""
    n = len(weights)
    used = sum(a * w for a, w in zip(prefix, weights))
    pts = np.array([prefix], dtype=np.int64)
    rem = np.array([bound - used], dtype=np.int64)
    if rem[0] < 0:
        return np.zeros((0, n), dtype=np.int64)
    for i in range(len(prefix), n):
        w = weights[i]
        if i == k - 1 or w == 0:
            reps = np.ones(len(pts), dtype=np.int64)
        else:
            reps = np.minimum(rem // w, hi[i]) + 1
        idx = np.repeat(np.arange(len(pts)), reps)
        # offsets 0..reps-1 within each group
        starts = np.cumsum(reps) - reps
        vals = np.arange(len(idx)) - np.repeat(starts, reps)
        if i == k - 1:
            vals = np.zeros_like(vals)
        pts = np.column_stack([pts[idx], vals])
        rem = rem[idx] - vals * w
    return pts


def _acm_mask(pts, num, den, dimx):
    """Vectorized exact ACM test on integer rows ``pts`` (initialized weights)."""
    if len(pts) == 0:
        return np.zeros(0, dtype=bool)
    N = (pts + 1) @ num  # numerators, shape (P, |support|)
    fl = N // den
    top = fl.max(axis=1)  # floor(M) = max of floors
    ok = top <= dimx
    integral = (N % den) == 0
    hits = np.zeros((len(pts), dimx + 2), dtype=bool)
    rows, cols = np.nonzero(integral & (fl <= dimx + 1))
    hits[rows, fl[rows, cols]] = True
    hits[:, 0] = True
    # first absent level >= 1
    first_missing = np.argmin(hits, axis=1)
    first_missing[hits.all(axis=1)] = dimx + 2
    return ok & (first_missing > top)


def _datum_matrices(rs, k):
    c = _integer_norms(rs)
    sup = support_roots(rs, k)
    num = np.array([[r.coeffs[i] * c[i] for r in sup] for i in range(rs.rank)], dtype=np.int64)
    den = np.array([r.coeffs[k - 1] * c[k - 1] for r in sup], dtype=np.int64)
    return num, den


def _scan_prefix(args):
    family, k, caps, prefix = args
    rs = root_system(family)
    weights, bound, hi = _ranges(rs, k, caps)
    num, den = _datum_matrices(rs, k)
    pts = _simplex_points(weights, bound, hi, k, prefix)
    mask = _acm_mask(pts, num, den, dim_X(rs, k))
    return [tuple(int(x) for x in row) for row in pts[mask]], len(pts)


# upper limit on the points materialized by one work unit
UNIT_SIZE = 1 << 20


def _units(weights, bound, hi, k, C, size=UNIT_SIZE):
    """Prefixes in lex order whose completions number at most ``size`` (or are full points)."""
    n = len(weights)

    def walk(prefix, used):
        i = len(prefix)
        if i == n or C[i][bound - used] <= size:
            yield prefix, C[i][bound - used]
            return
        if i == k - 1:
            yield from walk(prefix + (0,), used)
            return
        for a in range(min((bound - used) // weights[i], hi[i]) + 1):
            yield from walk(prefix + (a,), used + a * weights[i])

    if bound >= 0:
        yield from walk((), 0)


def enumerate_acm(rs, k, caps=None, budget=DEFAULT_BUDGET, jobs=1) -> ClassificationTable:
    """All initialized ACM weights on G/P(alpha_k), sorted lexicographically.

    ``caps`` (one upper bound per coordinate) intersects the search simplex
    with a box; the result is then flagged partial.  Raises
    :class:`BudgetExceededError` when the candidate count exceeds ``budget``;
    its ``partial`` table holds the rows found among the lexicographically
    first candidates that fit the budget.
    """
    rs = root_system(rs)
    if not isinstance(k, int) or not 1 <= k <= rs.rank:
        raise LieError(f"node index k={k!r} out of range 1..{rs.rank} for {rs.family}")
    if caps is not None:
        caps = tuple(int(c) for c in caps)
        if len(caps) != rs.rank or any(c < 0 for c in caps):
            raise LieError(f"caps must be {rs.rank} nonnegative integers, got {caps}")
    weights, bound, hi = _ranges(rs, k, caps)
    C = _suffix_counts(weights, bound, hi, k) if bound >= 0 else None
    total = C[0][bound] if C else 0
    dimx = dim_X(rs, k)
    over = total > budget
    size = max(1, min(UNIT_SIZE, budget)) if over else UNIT_SIZE

    rows, scanned, results = [], 0, []
    if over:
        # scan the lexicographically first units that fit inside the budget
        for prefix, n in _units(weights, bound, hi, k, C, size):
            if scanned + n > budget:
                break
            res = _scan_prefix((rs.family, k, caps, prefix))
            results.append(res)
            scanned += res[1]
    else:
        tasks = [(rs.family, k, caps, p) for p, _ in _units(weights, bound, hi, k, C)]
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as ex:
                results = list(ex.map(_scan_prefix, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
        else:
            results = [_scan_prefix(t) for t in tasks]
    for found, n in results:
        rows.extend(found)
    rows.sort()
    table = ClassificationTable(
        rs.family,
        k,
        dimx,
        tuple(rows),
        caps=caps,
        candidates=total,
        partial=caps is not None or over,
        metadata={"search_bound": bound, "search_weights": weights},
    )
    if over:
        raise BudgetExceededError(
            f"{rs.family}/P(alpha_{k}): {total} candidates exceed budget {budget}",
            partial=table,
            candidates=total,
        )
    return table
