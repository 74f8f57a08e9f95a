import pytest
from hypothesis import given, strategies as st

from partition_forge import partitions as P


def parts(max_len=6, max_part=8):
    return st.lists(
        st.integers(1, max_part), min_size=0, max_size=max_len
    ).map(lambda xs: tuple(sorted(xs, reverse=True)))


def test_minimal_profile_example():
    assert P.minimal_profile((5, 3, 3, 2)) == "110100110"


def test_framed_profile_example():
    assert P.profile((5, 3, 3, 2), 8, 8) == "0000110100110111"


def test_profile_arm_leg_example():
    p = P.minimal_profile((5, 3, 3, 2))
    assert (2, 6) in P.inversions(p)
    assert P.profile_arm(p, 2, 6) == 1
    assert P.profile_leg(p, 2, 6) == 2


def test_inversion_count_example():
    assert len(P.inversions(P.minimal_profile((5, 3, 3, 2)))) == 13


def test_partition_of_profile_examples():
    assert P.partition_of_profile("110100110") == (5, 3, 3, 2)
    assert P.partition_of_profile("0000110100110111") == (5, 3, 3, 2)
    assert P.partition_of_profile("") == ()
    assert P.partition_of_profile("0011") == ()


def test_conjugate_small():
    assert P.conjugate((5, 3, 3, 2)) == (4, 4, 3, 1, 1)
    assert P.conjugate(()) == ()


def test_corner_counts():
    p = P.minimal_profile((5, 3, 3, 2))
    assert P.outside_corners(p) == [2, 4, 8]
    assert P.inside_corners(p) == [3, 6]


@given(parts())
def test_profile_round_trip(la):
    assert P.partition_of_profile(P.minimal_profile(la)) == la


@given(parts())
def test_generalized_profile_round_trip(la):
    zeros = len(la) + 2
    ones = (la[0] if la else 0) + 3
    p = P.profile(la, zeros, ones)
    assert len(p) == zeros + ones
    assert P.partition_of_profile(p) == la


@given(parts())
def test_conjugate_involution(la):
    assert P.conjugate(P.conjugate(la)) == la


@given(parts())
def test_conjugate_profile_matches(la):
    assert P.partition_of_profile(
        P.conjugate_profile(P.minimal_profile(la))
    ) == P.conjugate(la)


@given(parts())
def test_inversions_are_boxes(la):
    p = P.minimal_profile(la)
    inv = P.inversions(p)
    assert len(inv) == sum(la)
    got = sorted((P.profile_arm(p, i, j), P.profile_leg(p, i, j)) for i, j in inv)
    want = sorted((P.arm(la, s), P.leg(la, s)) for s in P.cells(la))
    assert got == want


@given(parts())
def test_hook_is_arm_plus_leg(la):
    p = P.minimal_profile(la)
    for i, j in P.inversions(p):
        assert j - i == P.profile_arm(p, i, j) + P.profile_leg(p, i, j) + 1
    for s in P.cells(la):
        assert P.hook(la, s) == P.arm(la, s) + P.leg(la, s) + 1


@given(parts())
def test_corner_balance(la):
    if la:
        p = P.minimal_profile(la)
        assert len(P.outside_corners(p)) == len(P.inside_corners(p)) + 1


def test_partition_counts():
    # p(0)..p(10)
    want = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert [len(P.partitions_of(n)) for n in range(11)] == want


@given(parts(4, 6), parts(4, 6))
def test_union_intersect_lattice(la, mu):
    u, m = P.union(la, mu), P.intersect(la, mu)
    assert P.contains(u, la) and P.contains(u, mu)
    assert P.contains(la, m) and P.contains(mu, m)
    assert sum(u) + sum(m) >= sum(la) + sum(mu) - 0  # submodular sanity
    assert sum(u) + sum(m) == sum(la) + sum(mu)


@given(parts(4, 6), parts(4, 6))
def test_order_compare(la, mu):
    c = P.order_compare(la, mu)
    if c == "equal":
        assert la == mu
    elif c == "less":
        assert P.contains(mu, la) and la != mu
    elif c == "greater":
        assert P.contains(la, mu) and la != mu
    else:
        assert not P.contains(la, mu) and not P.contains(mu, la)


@given(parts(4, 5))
def test_hstrips_down(la):
    downs = P.hstrips_down(la)
    assert len(set(downs)) == len(downs)
    for mu in downs:
        assert P.is_horizontal_strip(la, mu)
    # every subdiagram that is a horizontal strip shows up
    for mu in P.partitions_upto(sum(la)):
        if P.is_horizontal_strip(la, mu):
            assert mu in downs


@given(parts(3, 4), st.integers(0, 3))
def test_hstrips_up(mu, extra):
    cap = sum(mu) + extra
    ups = P.hstrips_up(mu, cap)
    assert len(set(ups)) == len(ups)
    for la in ups:
        assert P.is_horizontal_strip(la, mu)
        assert sum(la) <= cap
    for la in P.partitions_upto(cap):
        if P.is_horizontal_strip(la, mu):
            assert la in ups


@given(parts(4, 5))
def test_strip_duality(la):
    for mu in P.hstrips_down(la):
        assert P.is_vertical_strip(P.conjugate(la), P.conjugate(mu))


def test_add_remove_box():
    assert P.add_box((3, 1), 2) == (3, 2)
    assert P.add_box((3, 1), 3) == (3, 1, 1)
    assert P.remove_box((3, 1), 2) == (3,)
    with pytest.raises(AssertionError):
        P.add_box((3, 1), 1 + 10)
