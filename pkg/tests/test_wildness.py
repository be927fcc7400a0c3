import pytest

from acmforge.bbw import Singular, classify_weight
from acmforge.lie import build_root_system
from acmforge.wildness import (
    WILD_PAIRS,
    SUMMAND_PAIRINGS,
    TWISTED_WITNESSES,
    UnsupportedSpaceError,
    table1_pair,
    verify_acm_pair,
    verify_prop44,
    witness_pairing,
)

# h^1(F_1 (x) F_2) recomputed here; only ">= 4" is externally anchored
H1 = {
    ("E6", 2): 351, ("E6", 3): 27, ("E6", 4): 27, ("E6", 5): 27,
    ("E7", 1): 49400, ("E7", 2): 7371, ("E7", 3): 133, ("E7", 4): 133, ("E7", 5): 133, ("E7", 6): 133,
    ("E8", 2): 4881384, ("E8", 3): 3875, ("E8", 4): 3875, ("E8", 5): 3875, ("E8", 6): 3875, ("E8", 7): 3875,
    ("F4", 2): 52, ("F4", 3): 52,
}


def test_nineteen_spaces():
    assert len(WILD_PAIRS) == 19
    assert ("E6", 6) not in WILD_PAIRS


@pytest.mark.parametrize(
    "key,pair",
    [
        (("E7", 1), ((0, 2, 0, 0, 0, 0, 0), (-2, 0, 0, 0, 0, 0, 2))),
        (("F4", 2), ((2, 0, 0, 0), (0, -2, 2, 0))),
        (("E8", 7), ((1, 0, 0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 0, 0, -2, 1))),
        (("F4", 3), ((1, 1, 0, 0), (0, 0, -2, 1))),
    ],
)
def test_table1_pair(key, pair):
    assert table1_pair(*key) == pair


def test_unsupported_space():
    with pytest.raises(UnsupportedSpaceError):
        table1_pair("G2", 1)
    with pytest.raises(UnsupportedSpaceError):
        verify_prop44("E6", 6)


@pytest.mark.parametrize("key", sorted(WILD_PAIRS))
def test_pairs_are_acm(key):
    assert verify_acm_pair(*key)


@pytest.mark.parametrize("key", sorted(H1))
def test_prop44_passes(key):
    rep = verify_prop44(*key)
    assert rep.passed, rep.summary()
    assert rep.h_profile == {1: H1[key]}
    connected = {("E6", 2), ("E7", 1), ("E7", 2), ("E8", 2)}
    assert rep.connected_levi == (key in connected)


def test_disconnected_cases_reduce_to_adjoint_or_minuscule():
    from acmforge.bbw import weyl_dimension

    for key, h1 in H1.items():
        rep = verify_prop44(*key)
        if not rep.connected_levi:
            n = len(rep.f1)
            assert h1 == weyl_dimension(key[0], (1,) + (0,) * (n - 1))


def test_f4_node1_tensor_has_no_cohomology():
    # recomputed: every summand of F_1 (x) F_2 is singular after the rho shift
    rep = verify_prop44("F4", 1)
    assert rep.decomposition == {(-2, 0, 0, 4): 1, (-2, 0, 1, 2): 1, (-1, 0, 0, 2): 1}
    assert rep.h_profile == {}
    assert rep.twisted_vanishing
    assert not rep.passed


@pytest.mark.parametrize("row", SUMMAND_PAIRINGS, ids=lambda r: f"{r[0]}-{r[1]}-{r[2]}")
def test_summand_pairings(row):
    family, k, mu, alpha, value = row
    assert witness_pairing(family, mu, alpha) == value


def test_twisted_weights_are_singular():
    for family, k, w, alpha in TWISTED_WITNESSES:
        rs = build_root_system(family)
        assert alpha in rs
        assert isinstance(classify_weight(rs, tuple(a + 1 for a in w)), Singular)


def test_twisted_witnesses_mostly_pair_to_zero():
    bad = [(f, k, w) for f, k, w, a in TWISTED_WITNESSES if witness_pairing(f, w, a) != 0]
    assert set(bad) == {("E7", 2, (2, -16, 0, 1, 0, 0, 0)), ("E8", 7, (1, 0, 0, 0, 0, 1, -21, 1))}


def test_summary_line():
    line = verify_prop44("E6", 3).summary()
    assert line.startswith("E6/P(alpha_3): PASS")
