from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from futs import semiring as sr
from futs.errors import MissingSemiringId, MixedSemiring

rationals = st.fractions(min_value=0, max_denominator=50).map(lambda q: F(q))
booleans = st.booleans()


def test_add_examples():
    assert sr.add(True, False) is True
    assert sr.add(F(0), F(3, 2)) == F(3, 2)
    assert sr.add(F(1, 2), F(1, 2)) == 1


def test_mul_examples():
    assert sr.mul(F(0), F(5)) == 0
    assert sr.mul(F(1), F(2, 3)) == F(2, 3)
    assert sr.mul(F(1, 2), F(1, 3)) == F(1, 6)
    assert sr.mul(True, False) is False


def test_sum_examples():
    assert sr.sum([], sr.RAT) == 0
    assert sr.sum([True, False, True]) is True
    assert sr.sum([F(1, 4), F(1, 4), F(1, 2)]) == 1


def test_mixed_semiring_rejected():
    with pytest.raises(MixedSemiring):
        sr.add(True, F(1))
    with pytest.raises(MixedSemiring):
        sr.mul(F(1), False)
    with pytest.raises(MixedSemiring):
        sr.sum([F(1), True])


def test_empty_sum_needs_semiring():
    with pytest.raises(MissingSemiringId):
        sr.sum([])


@pytest.mark.parametrize(
    "text, value",
    [("3", F(3)), ("3/4", F(3, 4)), ("0.25", F(1, 4)), (".5", F(1, 2)), ("6/8", F(3, 4))],
)
def test_parse_rational(text, value):
    assert sr.parse_rational(text) == value


@pytest.mark.parametrize("text", ["-1", "1/0", "abc", "1e3", "", "1/-2"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        sr.parse_rational(text)


def test_format_value_round_trips():
    for v in [F(0), F(7), F(3, 4), True, False]:
        assert sr.coerce(sr.format_value(v), sr.semiring_of(v)) == v


def _laws(a, b, c):
    assert sr.add(a, b) == sr.add(b, a)
    assert sr.add(sr.add(a, b), c) == sr.add(a, sr.add(b, c))
    assert sr.mul(sr.mul(a, b), c) == sr.mul(a, sr.mul(b, c))
    assert sr.mul(a, sr.add(b, c)) == sr.add(sr.mul(a, b), sr.mul(a, c))
    assert sr.mul(sr.add(a, b), c) == sr.add(sr.mul(a, c), sr.mul(b, c))
    r = sr.semiring_of(a)
    assert sr.mul(r.zero, a) == r.zero == sr.mul(a, r.zero)
    assert sr.add(r.zero, a) == a
    assert sr.mul(r.one, a) == a


@settings(max_examples=10_000, deadline=None)
@given(rationals, rationals, rationals)
def test_rational_laws(a, b, c):
    _laws(a, b, c)


@settings(max_examples=10_000, deadline=None)
@given(booleans, booleans, booleans)
def test_boolean_laws(a, b, c):
    _laws(a, b, c)


@given(st.lists(rationals, max_size=8), st.randoms())
def test_sum_order_independent(values, rnd):
    shuffled = list(values)
    rnd.shuffle(shuffled)
    assert sr.sum(values, sr.RAT) == sr.sum(shuffled, sr.RAT)
