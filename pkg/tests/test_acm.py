import itertools
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from acmforge.acm import (
    BudgetExceededError,
    InvalidWeightError,
    _acm_mask,
    _datum_matrices,
    associated_datum,
    count_candidates,
    enumerate_acm,
    is_acm,
    normalize_initialized,
    search_simplex,
)
from acmforge.lie import FAMILIES, LieError, build_root_system, dim_X
from reference_data import E6_MU, E6_MU_DATUM, E6_NU, E6_NU_DATUM, G2_DATA

ROOT_LISTS = {f: [r.coeffs for r in build_root_system(f).positive_roots] for f in FAMILIES}


def fracs(items):
    return Counter(Fraction(x) for x in items)


# closed forms written out per family, independent of the pairing code
def closed_form(family, k, a):
    out = []
    for m in ROOT_LISTS[family]:
        if m[k - 1] == 0:
            continue
        if family.startswith("E"):
            out.append(Fraction(sum((ai + 1) * mi for ai, mi in zip(a, m)), m[k - 1]))
        elif family == "F4":
            num = 2 * (a[0] + 1) * m[0] + 2 * (a[1] + 1) * m[1] + (a[2] + 1) * m[2] + (a[3] + 1) * m[3]
            out.append(Fraction(num, 2 * m[k - 1] if k in (1, 2) else m[k - 1]))
        else:
            num = (a[0] + 1) * m[0] + 3 * (a[1] + 1) * m[1]
            out.append(Fraction(num, m[0] if k == 1 else 3 * m[1]))
    return out


def initialized(family, k, max_coeff=6):
    n = build_root_system(family).rank
    return st.lists(st.integers(0, max_coeff), min_size=n, max_size=n).map(
        lambda a: tuple(0 if i == k - 1 else x for i, x in enumerate(a))
    )


def test_e6_node2_accepted_example():
    d = associated_datum("E6", 2, E6_MU)
    assert Counter(d.values) == fracs(E6_MU_DATUM)
    assert d.max == 14
    v = is_acm("E6", 2, E6_MU)
    assert v.is_acm and v.missing_levels == ()


def test_e6_node2_rejected_example():
    d = associated_datum("E6", 2, E6_NU)
    assert Counter(d.values) == fracs(E6_NU_DATUM)
    v = is_acm("E6", 2, E6_NU)
    assert not v.is_acm
    assert v.datum.max == 15
    assert v.missing_levels == (2, 14)


@pytest.mark.parametrize("key,expected", list(G2_DATA.items()))
def test_g2_data(key, expected):
    k, lam = key
    assert Counter(associated_datum("G2", k, lam).values) == fracs(expected)


def test_datum_size_and_max():
    for family in FAMILIES:
        rs = build_root_system(family)
        for k in range(1, rs.rank + 1):
            d = associated_datum(rs, k, (0,) * rs.rank)
            assert len(d) == dim_X(rs, k)
            assert d.max == max(d.values)
            assert all(v > 0 for v in d.values)
            assert d.multiplicity(1) >= 1


@pytest.mark.parametrize("family", FAMILIES)
def test_line_bundles_are_acm(family):
    n = build_root_system(family).rank
    for k in range(1, n + 1):
        assert is_acm(family, k, (0,) * n).is_acm


def test_normalize_initialized():
    assert normalize_initialized((2, 0, 1, 0, 0, 0), 2) == ((2, 0, 1, 0, 0, 0), 0)
    assert normalize_initialized((0, 0, 5, 0), 3) == ((0, 0, 0, 0), 5)
    assert normalize_initialized((2, -3), 2) == ((2, 0), -3)
    with pytest.raises(InvalidWeightError):
        normalize_initialized((-1, 0), 2)


def test_datum_rejects_uninitialized_and_inadmissible():
    with pytest.raises(InvalidWeightError):
        associated_datum("G2", 2, (1, 1))
    with pytest.raises(InvalidWeightError):
        associated_datum("G2", 2, (-1, 0))
    with pytest.raises(LieError):
        associated_datum("G2", 3, (0, 0))


@pytest.mark.parametrize("family", FAMILIES)
@settings(max_examples=200, deadline=None)
@given(data=st.data())
def test_closed_form_agreement(family, data):
    n = build_root_system(family).rank
    k = data.draw(st.integers(1, n))
    a = data.draw(initialized(family, k, 12))
    assert Counter(associated_datum(family, k, a).values) == Counter(closed_form(family, k, a))


@settings(max_examples=150, deadline=None)
@given(family=st.sampled_from(FAMILIES), data=st.data())
def test_twist_invariance(family, data):
    n = build_root_system(family).rank
    k = data.draw(st.integers(1, n))
    a = data.draw(initialized(family, k))
    s = data.draw(st.integers(-30, 30))
    twisted = tuple(x + (s if i == k - 1 else 0) for i, x in enumerate(a))
    v0, v1 = is_acm(family, k, a), is_acm(family, k, twisted)
    assert v0.is_acm == v1.is_acm
    assert v0.missing_levels == v1.missing_levels
    assert v1.twist == s


@settings(max_examples=100, deadline=None)
@given(
    family=st.sampled_from(FAMILIES),
    scale=st.fractions(min_value=Fraction(1, 7), max_value=9).filter(lambda q: q > 0),
    data=st.data(),
)
def test_scale_invariance(family, scale, data):
    rs = build_root_system(family)
    k = data.draw(st.integers(1, rs.rank))
    a = data.draw(initialized(family, k))
    scaled = rs.with_norms([scale * c for c in rs.norms])
    assert associated_datum(scaled, k, a).values == associated_datum(rs, k, a).values


@settings(max_examples=150, deadline=None)
@given(family=st.sampled_from(FAMILIES), data=st.data())
def test_large_max_is_never_acm(family, data):
    n = build_root_system(family).rank
    k = data.draw(st.integers(1, n))
    a = data.draw(initialized(family, k, 30))
    v = is_acm(family, k, a)
    assert v.is_acm == (not v.missing_levels)
    if v.datum.max > dim_X(family, k):
        assert not v.is_acm


@settings(max_examples=200, deadline=None)
@given(family=st.sampled_from(FAMILIES), data=st.data())
def test_vectorized_test_matches_exact(family, data):
    rs = build_root_system(family)
    k = data.draw(st.integers(1, rs.rank))
    pts = data.draw(st.lists(initialized(family, k, 4), min_size=1, max_size=20))
    num, den = _datum_matrices(rs, k)
    mask = _acm_mask(np.array(pts, dtype=np.int64), num, den, dim_X(rs, k))
    expected = [is_acm(rs, k, p).is_acm and is_acm(rs, k, p).datum.max <= dim_X(rs, k) for p in pts]
    assert list(mask) == expected


@pytest.mark.parametrize("family,k", [("G2", 1), ("G2", 2), ("F4", 1), ("F4", 4), ("E6", 6)])
def test_enumeration_matches_bruteforce_box(family, k):
    # any ACM weight has M <= dim X, so it lies in the simplex; a box scan must agree
    rs = build_root_system(family)
    table = enumerate_acm(rs, k)
    weights, bound = search_simplex(rs, k)
    top = max(bound // w for i, w in enumerate(weights) if i != k - 1)

    free = [range(0, top + 1) if i != k - 1 else range(1) for i in range(rs.rank)]
    found = []
    for a in itertools.product(*free):
        if is_acm(rs, k, a).is_acm:
            found.append(a)
    assert tuple(sorted(found)) == table.rows


def test_enumeration_rows_are_valid():
    table = enumerate_acm("F4", 2)
    assert list(table.rows) == sorted(set(table.rows))
    for row in table.rows:
        assert row[1] == 0 and all(x >= 0 for x in row)
        v = is_acm("F4", 2, row)
        assert v.is_acm and v.datum.max <= table.dim_x


def test_candidate_count_matches_enumerated_points():
    rs = build_root_system("F4")
    for k in range(1, 5):
        assert enumerate_acm(rs, k).candidates == count_candidates(rs, k)


def test_caps_give_subset_flagged_partial():
    full = enumerate_acm("F4", 2)
    capped = enumerate_acm("F4", 2, caps=(2, 0, 1, 1))
    assert capped.partial and not full.partial
    assert set(capped.rows) == {r for r in full.rows if r[0] <= 2 and r[2] <= 1 and r[3] <= 1}
    empty = enumerate_acm("G2", 2, caps=(0, 0))
    assert empty.rows == ((0, 0),)


def test_budget_guard_returns_partial():
    with pytest.raises(BudgetExceededError) as info:
        enumerate_acm("E8", 4, budget=50_000)
    exc = info.value
    assert exc.partial.partial
    assert exc.candidates > 50_000
    assert all(is_acm("E8", 4, r).is_acm for r in exc.partial.rows)


def test_jobs_do_not_change_result():
    assert enumerate_acm("F4", 2, jobs=1).rows == enumerate_acm("F4", 2, jobs=3).rows


def test_bad_k_rejected():
    with pytest.raises(LieError):
        enumerate_acm("G2", 0)
