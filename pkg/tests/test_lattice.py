"""Lattice construction and order algebra, checked against direct scans."""

from itertools import product

import pytest

from linrel.errors import (
    CyclicOrderError,
    DuplicateNameError,
    NotALatticeError,
    UnknownElementError,
)
from linrel.lattice import build_lattice, chain, lattice_from_leq, powerset_lattice


def scan_join(lat, a, b):
    """Independent oracle: least element among all upper bounds."""
    ubs = [c for c in lat.elements if lat.leq(a, c) and lat.leq(b, c)]
    least = [u for u in ubs if all(lat.leq(u, c) for c in ubs)]
    assert len(least) == 1
    return least[0]


def scan_meet(lat, a, b):
    lbs = [c for c in lat.elements if lat.leq(c, a) and lat.leq(c, b)]
    greatest = [u for u in lbs if all(lat.leq(c, u) for c in lbs)]
    assert len(greatest) == 1
    return greatest[0]


def test_one_point_lattice():
    lat = build_lattice(["a"], [])
    assert lat.top == "a" == lat.bottom
    assert lat.leq("a", "a")


def test_two_chain():
    lat = build_lattice(["0", "1"], [("0", "1")])
    assert lat.top == "1" and lat.bottom == "0"
    assert lat.leq("0", "1")
    assert not lat.leq("1", "0")


def test_diamond_join_meet_against_scan():
    lat = build_lattice(["0", "x", "y", "1"],
                        [("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")])
    assert not lat.leq("x", "y") and not lat.leq("y", "x")
    for a, b in product(lat.elements, repeat=2):
        assert lat.join((a, b)) == scan_join(lat, a, b)
        assert lat.meet((a, b)) == scan_meet(lat, a, b)
    assert lat.join(("x", "y")) == "1"
    assert lat.meet(("x", "y")) == "0"


def test_empty_join_and_meet():
    lat = build_lattice(["0", "x", "y", "1"],
                        [("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")])
    assert lat.join([]) == "0"
    assert lat.meet([]) == "1"
    assert lat.join(["x"]) == "x"
    assert lat.meet(["x"]) == "x"


def test_chain_meet():
    lat = chain(["0", "1"])
    assert lat.meet(["0", "1"]) == "0"


def test_duplicate_name_rejected():
    with pytest.raises(DuplicateNameError):
        build_lattice(["a", "a"], [])


def test_unknown_cover_name_rejected():
    with pytest.raises(UnknownElementError):
        build_lattice(["a"], [("a", "b")])


def test_cycle_rejected():
    with pytest.raises(CyclicOrderError):
        build_lattice(["a", "b"], [("a", "b"), ("b", "a")])


def test_non_lattice_rejected():
    # two maximal elements: the pair (b, c) has no join
    with pytest.raises(NotALatticeError) as exc:
        build_lattice(["a", "b", "c"], [("a", "b"), ("a", "c")])
    assert "b" in str(exc.value) and "c" in str(exc.value)


def test_unknown_element_in_ops():
    lat = chain(["0", "1"])
    with pytest.raises(UnknownElementError):
        lat.leq("0", "zz")
    with pytest.raises(UnknownElementError):
        lat.join(["zz"])


@pytest.mark.parametrize("lat", [
    chain(["0", "1"]),
    chain(["0", "m", "1"]),
    build_lattice(["0", "x", "y", "1"],
                  [("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")]),
    powerset_lattice(["p", "q", "r"]),
])
def test_semilattice_laws_exhaustive(lat):
    els = lat.elements
    assert len(els) <= 8
    for a in els:
        assert lat.join((a, a)) == a
        assert lat.meet((a, a)) == a
    for a, b in product(els, repeat=2):
        assert lat.join((a, b)) == lat.join((b, a))
        assert lat.meet((a, b)) == lat.meet((b, a))
        assert lat.leq(a, lat.join((a, b)))
        assert lat.leq(lat.meet((a, b)), a)
    for a, b, c in product(els, repeat=3):
        assert lat.join((lat.join((a, b)), c)) == lat.join((a, lat.join((b, c))))
        assert lat.meet((lat.meet((a, b)), c)) == lat.meet((a, lat.meet((b, c))))


def test_opposite_is_involution():
    lat = build_lattice(["0", "x", "y", "1"],
                        [("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")])
    opp = lat.opposite()
    assert opp.top == "0" and opp.bottom == "1"
    assert opp.leq("1", "x") and not opp.leq("x", "1")
    assert opp.join(("x", "y")) == "0"
    assert opp.opposite() == lat


def test_lattice_from_leq_matches_build():
    lat = chain(["0", "m", "1"])
    rebuilt = lattice_from_leq(lat.elements, lat.leq_matrix)
    assert rebuilt == lat


def test_lattice_from_leq_rejects_broken_order():
    with pytest.raises(CyclicOrderError):
        lattice_from_leq(["a", "b"], [[True, True], [True, True]])
