from fractions import Fraction as F

import pytest

from futs import (
    CtmcModel,
    ImcModel,
    LtsModel,
    MaModel,
    PaModel,
    coarsest_bisimulation,
    decode,
    encode,
    is_bisimulation,
)
from futs.concrete import (
    brute_force_concrete,
    concrete_coarsest,
    is_concrete_bisimulation,
    is_imc_bisimulation,
    is_lts_bisimulation,
    is_lumping,
    is_ma_bisimulation,
    is_pa_bisimulation,
)
from futs.continuation import make_continuation, unfold, zero
from futs.encodings import kind_of
from futs.errors import CarrierMismatch, ModelError, NotStochastic
from futs.lifting import Partition
from futs.semiring import BOOL, RAT
from futs.testkit import random_equivalence, random_model

L1 = LtsModel(["p", "q", "p1", "q1", "q2"], ["a"], [("p", "a", "p1"), ("q", "a", "q1"), ("q", "a", "q2")])
C1 = CtmcModel(
    ["s0", "s1", "s2", "u"],
    [("s0", 1, "s1"), ("s0", 1, "s2"), ("s1", 2, "u"), ("s2", 2, "u")],
)
I1 = ImcModel(["p", "q", "p1", "q1"], ["a"], [("p", "a", "p1"), ("q", "a", "q1")], [("p", 1, "p")])
P1_STEPS = [("s", "a", {"u": 1}), ("t", "a", {"u": "1/2", "v": "1/2"})]
P1 = PaModel(["s", "t", "u", "v", "w"], ["a"], P1_STEPS)
M1 = MaModel(["s", "t", "u", "v", "w"], ["a"], P1_STEPS, [("u", 1, "w"), ("v", 1, "w")])


def part(model, *blocks):
    return Partition.from_blocks(model.states, [b.split() for b in blocks])


def test_lts_encoding():
    futs = encode(LtsModel(["p", "q"], ["a"], []))
    assert all(futs.theta(0, s, "a") == zero(BOOL) for s in futs.states)
    futs = encode(LtsModel(["p", "q"], ["a"], [("p", "a", "q")]))
    assert futs.theta(0, "p", "a") == make_continuation(BOOL, {futs.index["q"]: True})


def test_ctmc_sums_duplicate_rates():
    futs = encode(CtmcModel(["s", "t"], [("s", "1/2", "t"), ("s", "1/2", "t")]))
    assert futs.theta(0, "s", "delta")(futs.index["t"]) == 1
    assert futs.theta(0, "t", "delta") == zero(RAT)


def test_dtmc_must_be_stochastic():
    with pytest.raises(NotStochastic):
        CtmcModel(["s", "t"], [("s", "1/2", "t"), ("t", 1, "t")], dtmc=True)
    CtmcModel(["s", "t"], [("s", "1/2", "t"), ("s", "1/2", "s"), ("t", 1, "t")], dtmc=True)


def test_imc_components():
    only_i = encode(ImcModel(["p", "q"], ["a"], [("p", "a", "q")], []))
    assert not list(only_i.assigned(1))
    only_m = encode(ImcModel(["p", "q"], ["a"], [], [("p", 3, "q")]))
    assert not list(only_m.assigned(0))


def test_pa_encoding():
    futs = encode(PaModel(["s", "u"], ["a"], [("s", "a", {"u": 1})]))
    u = futs.index["u"]
    assert unfold(futs.theta(0, "s", "a"), futs.registry) == (
        BOOL,
        frozenset({((RAT, frozenset({(u, F(1))})), True)}),
    )
    assert futs.theta(0, "u", "a") == zero(BOOL, level=2)


def test_ma_components():
    assert not list(encode(MaModel(["s", "u"], ["a"], [("s", "a", {"u": 1})], [])).assigned(1))
    assert not list(encode(MaModel(["s", "u"], ["a"], [], [("s", 1, "u")])).assigned(0))


@pytest.mark.parametrize(
    "bad",
    [
        lambda: LtsModel(["p"], ["a"], [("p", "b", "p")]),
        lambda: LtsModel(["p"], ["delta"], []),
        lambda: LtsModel(["p", "p"], ["a"], []),
        lambda: CtmcModel(["s"], [("s", 0, "s")]),
        lambda: PaModel(["s", "u", "v"], ["a"], [("s", "a", {"u": "1/2", "v": "1/3"})]),
        lambda: MaModel(["s"], ["a"], [], [("s", 1, "x")]),
    ],
)
def test_validation(bad):
    with pytest.raises(ModelError):
        bad()


def test_concrete_examples():
    assert is_lts_bisimulation(L1, part(L1, "p q", "p1 q1 q2"))
    assert not is_lts_bisimulation(L1, part(L1, "p q p1 q1 q2"))
    assert is_lumping(C1, part(C1, "s1 s2"))
    assert not is_lumping(C1, part(C1, "s0 s1"))
    assert not is_imc_bisimulation(I1, part(I1, "p q p1 q1"))
    assert is_imc_bisimulation(I1, brute_force_concrete(I1))
    assert is_pa_bisimulation(P1, part(P1, "s t", "u v w"))
    assert not is_pa_bisimulation(P1, part(P1, "s t", "u w", "v"))
    assert is_ma_bisimulation(M1, part(M1, "s t", "u v", "w"))
    assert not is_ma_bisimulation(M1, part(M1, "s t", "u w", "v"))
    for m in (L1, C1, I1, P1, M1):
        assert is_concrete_bisimulation(m, Partition.identity(m.states))


def test_concrete_carrier_mismatch():
    with pytest.raises(CarrierMismatch):
        is_lumping(C1, Partition.identity(["s0"]))


def test_worked_coarsest():
    # Each worked partition is the brute-force oracle's answer.
    expected = {
        "l1": (L1, [["p", "q"], ["p1", "q1", "q2"]]),
        "c1": (C1, [["s0"], ["s1", "s2"], ["u"]]),
        "i1": (I1, [["p"], ["q"], ["p1", "q1"]]),
        "p1": (P1, [["s", "t"], ["u", "v", "w"]]),
        "m1": (M1, [["s", "t"], ["u", "v"], ["w"]]),
    }
    for m, blocks in expected.values():
        want = Partition.from_blocks(m.states, blocks)
        assert brute_force_concrete(m) == want
        assert coarsest_bisimulation(encode(m)) == want
        assert concrete_coarsest(m) == want


@pytest.mark.parametrize("kind", ["lts", "ctmc", "dtmc", "imc", "pa", "ma"])
def test_correspondence_sample(kind):
    for seed in range(30):
        m = random_model(kind, seed, n_states=5, density=0.3).model
        futs = encode(m)
        for r in range(4):
            R = random_equivalence(m.states, seed * 10 + r)
            assert is_concrete_bisimulation(m, R) == is_bisimulation(futs, R)


@pytest.mark.parametrize("kind", ["lts", "ctmc", "dtmc", "imc", "pa", "ma"])
def test_decode_inverts_encode(kind):
    for seed in range(15):
        m = random_model(kind, seed, n_states=4, density=0.4).model
        back = decode(encode(m), kind)
        assert kind_of(back) == kind
        assert unfold_all(encode(back)) == unfold_all(encode(m))


def unfold_all(futs):
    return {
        (i, futs.states[x], label): unfold(phi, futs.registry)
        for i in range(len(futs.type.components))
        for (x, label), phi in futs.assigned(i)
    }
