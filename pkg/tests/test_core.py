import pytest

from futs import BOOL, RAT, build_futs, continuation_universe
from futs.continuation import make_continuation, zero
from futs.core import Component, FutsType
from futs.errors import (
    DuplicateKey,
    IndexOutOfRange,
    LevelMismatch,
    UnknownLabel,
    UnknownState,
)

LTS_TYPE = FutsType([Component(("a",), [BOOL])])
PA_TYPE = FutsType([Component(("a",), [RAT, BOOL])])


def test_empty_assignment_is_all_zero():
    futs = build_futs(LTS_TYPE, ["x", "y"])
    for s in futs.states:
        assert futs.theta(0, s, "a") == zero(BOOL)


def test_unknown_state_and_label():
    with pytest.raises(UnknownState):
        build_futs(LTS_TYPE, ["x"], [(0, "z", "a", {"x": True})])
    with pytest.raises(UnknownState):
        build_futs(LTS_TYPE, ["x"], [(0, "x", "a", {"z": True})])
    with pytest.raises(UnknownLabel):
        build_futs(LTS_TYPE, ["x"], [(0, "x", "b", {"x": True})])


def test_simple_futs():
    futs = build_futs(LTS_TYPE, ["s", "t"], [(0, "s", "a", {"t": True})])
    assert futs.theta(0, "s", "a") == make_continuation(BOOL, {1: True})
    assert futs.theta(0, "t", "a") == zero(BOOL)
    with pytest.raises(IndexOutOfRange):
        futs.theta(1, "s", "a")


def test_level_mismatch():
    with pytest.raises(LevelMismatch):
        build_futs(PA_TYPE, ["x"], [(0, "x", "a", {"x": True})])
    with pytest.raises(LevelMismatch):
        build_futs(LTS_TYPE, ["x"], [(0, "x", "a", [({"x": 1}, True)])])


def test_double_assignment():
    with pytest.raises(DuplicateKey):
        build_futs(LTS_TYPE, ["x"], [(0, "x", "a", {"x": True}), (0, "x", "a", {})])


def test_universe():
    simple = build_futs(LTS_TYPE, ["x"], [(0, "x", "a", {"x": True})])
    with pytest.raises(IndexOutOfRange):
        continuation_universe(simple, 0, 1)
    two = build_futs(
        PA_TYPE,
        ["s", "u", "v"],
        [(0, "s", "a", [({"u": 1}, True), ({"u": "1/2", "v": "1/2"}, True)])],
    )
    assert len(continuation_universe(two, 0, 1)) == 2
    shared = build_futs(
        PA_TYPE,
        ["s", "t", "u"],
        [(0, "s", "a", [({"u": 1}, True)]), (0, "t", "a", [({"u": 1}, True)])],
    )
    assert len(continuation_universe(shared, 0, 1)) == 1


def test_round_trip_and_universe_scan():
    from futs.testkit import random_model

    for seed in range(20):
        futs = random_model("futs", seed, 4, 0.4).model
        for i, comp in enumerate(futs.type.components):
            for level in range(1, comp.depth):
                found = set()
                frontier = [phi for _, phi in futs.assigned(i)]
                for lvl in range(comp.depth - 1, level - 1, -1):
                    ids = {k for phi in frontier for k in phi.support}
                    frontier = [futs.registry.get(lvl, k) for k in ids]
                    found = ids
                assert set(futs.universe(i, level)) == found


def test_theta_round_trips_assignments():
    from fractions import Fraction as F

    from futs.continuation import unfold

    futs = build_futs(
        PA_TYPE,
        ["s", "u", "v"],
        [(0, "s", "a", [({"u": 1}, True), ({"u": "1/2", "v": "0.5"}, True)])],
    )
    expected = (
        BOOL,
        frozenset(
            {
                ((RAT, frozenset({(1, F(1))})), True),
                ((RAT, frozenset({(1, F(1, 2)), (2, F(1, 2))})), True),
            }
        ),
    )
    assert unfold(futs.theta(0, "s", "a"), futs.registry) == expected
