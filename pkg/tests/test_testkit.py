from fractions import Fraction as F

import pytest

from futs import parse_model, serialize_model
from futs.errors import BadParams
from futs.testkit import random_equivalence, random_model

KINDS = ["lts", "ctmc", "dtmc", "imc", "pa", "ma", "futs"]


@pytest.mark.parametrize("kind", ["lts", "ctmc", "imc", "pa", "ma", "futs"])
def test_density_zero_is_transition_free(kind):
    doc = random_model(kind, 1, n_states=5, density=0)
    lines = serialize_model(doc).splitlines()
    assert not [line for line in lines if line.startswith("trans")]


def test_deterministic():
    a = serialize_model(random_model("lts", 7, 4))
    assert serialize_model(random_model("lts", 7, 4)) == a
    assert serialize_model(random_model("lts", 8, 4)) != a


def test_pa_distributions_sum_to_one():
    for seed in range(50):
        for _, _, dist in random_model("pa", seed, 5, 0.5).model.steps:
            assert sum(p for _, p in dist) == 1


def test_dtmc_rows_stochastic():
    for seed in range(50):
        m = random_model("dtmc", seed, 5, 0.3).model
        rows = {}
        for s, p, _ in m.rates:
            rows[s] = rows.get(s, F(0)) + p
        # states without outgoing mass are absorbing and allowed
        assert set(rows.values()) <= {1}


@pytest.mark.parametrize(
    "kwargs",
    [dict(n_states=0), dict(density=1.5), dict(density=-0.1), dict(rate_pool=()), dict(rate_pool=(0,))],
)
def test_bad_params(kwargs):
    with pytest.raises(BadParams):
        random_model("ctmc", 0, **kwargs)
    with pytest.raises(BadParams):
        random_model("nope", 0)


def test_random_equivalence():
    assert len(random_equivalence(["x"], 3)) == 1
    states = [f"s{i}" for i in range(8)]
    for seed in range(100):
        p = random_equivalence(states, seed)
        assert p == random_equivalence(states, seed)
        members = [s for block in p for s in block]
        assert sorted(members) == sorted(states)


@pytest.mark.parametrize("kind", KINDS)
def test_generated_models_round_trip(kind):
    for seed in range(30):
        text = serialize_model(random_model(kind, seed, n_states=5, density=0.3))
        assert serialize_model(parse_model(text)) == text
