"""Seeded random models and equivalence relations for property testing.

Rates and probabilities are drawn from a small pool of rationals so that
different sums collide often; that is what stresses exact splitting.
"""

import random
from fractions import Fraction

from .core import Component, FutsType, build_futs
from .encodings import DELTA, CtmcModel, ImcModel, LtsModel, MaModel, PaModel
from .errors import BadParams
from .lifting import Partition
from .model_io import KINDS, ModelDocument
from .semiring import BOOL, RAT

__all__ = ["DEFAULT_RATE_POOL", "random_model", "random_equivalence", "FUTS_TYPE"]

DEFAULT_RATE_POOL = (Fraction(1, 2), Fraction(1), Fraction(2))

# Type used for ``kind futs``: a simple, a two-level and a three-level component.
FUTS_TYPE = FutsType(
    [
        Component(("a",), [BOOL]),
        Component(("b", "c"), [RAT, BOOL]),
        Component((DELTA,), [BOOL, RAT, RAT]),
    ]
)


def _rng(tag, seed):
    return random.Random(f"{tag}:{seed}")


def _lts_part(rng, states, actions, density):
    return [(s, a, t) for s in states for a in actions for t in states if rng.random() < density]


def _rate_part(rng, states, density, pool):
    rates = []
    for s in states:
        for t in states:
            if rng.random() < density:
                rates.append((s, rng.choice(pool), t))
                if rng.random() < 0.2:
                    rates.append((s, rng.choice(pool), t))
    return rates


def _distribution(rng, states, pool):
    support = [t for t in states if rng.random() < 0.5] or [rng.choice(states)]
    weights = [rng.choice(pool) for _ in support]
    total = sum(weights)
    return [(t, w / total) for t, w in zip(support, weights)]


def _step_part(rng, states, actions, density, pool):
    steps = []
    seen = set()
    for s in states:
        for a in actions:
            for _ in range(2):
                if rng.random() < density:
                    dist = _distribution(rng, states, pool)
                    key = (s, a, frozenset(dist))
                    if key not in seen:
                        seen.add(key)
                        steps.append((s, a, dist))
    return steps


def _dtmc_part(rng, states, density, pool):
    rates = []
    for s in states:
        targets = [t for t in states if rng.random() < density]
        if targets:
            weights = [rng.choice(pool) for _ in targets]
            total = sum(weights)
            rates += [(s, w / total, t) for t, w in zip(targets, weights)]
    return rates


def _norm(spec, level):
    if level == 1:
        return frozenset(spec)
    return frozenset((_norm(inner, level - 1), v) for inner, v in spec)


def _spec(rng, semirings, states, density, pool):
    top = semirings[-1]

    def value():
        return True if top is BOOL else rng.choice(pool)

    if len(semirings) == 1:
        return [(t, value()) for t in states if rng.random() < density]
    inner = []
    seen = set()
    for _ in range(2):
        spec = _spec(rng, semirings[:-1], states, max(density, 0.4), pool)
        key = _norm(spec, len(semirings) - 1)
        if key not in seen:
            seen.add(key)
            inner.append((spec, value()))
    return inner


def _random_futs(rng, states, density, pool):
    assignments = []
    for i, comp in enumerate(FUTS_TYPE.components):
        for s in states:
            for label in comp.labels:
                if rng.random() < density:
                    assignments.append((i, s, label, _spec(rng, comp.semirings, states, density, pool)))
    return build_futs(FUTS_TYPE, states, assignments)


def random_model(kind, seed, n_states=4, density=0.3, rate_pool=DEFAULT_RATE_POOL, actions=("a", "b")):
    """A valid model document of ``kind``; identical arguments give an
    identical document."""
    if kind not in KINDS:
        raise BadParams(f"unknown kind {kind!r}")
    if not isinstance(n_states, int) or n_states < 1:
        raise BadParams("n_states must be a positive integer")
    if not 0 <= density <= 1:
        raise BadParams("density must lie in [0, 1]")
    pool = tuple(Fraction(r) for r in rate_pool)
    if not pool or any(r <= 0 for r in pool):
        raise BadParams("rate_pool must be a nonempty set of positive rationals")
    actions = tuple(actions)
    rng = _rng(kind, seed)
    states = tuple(f"s{i}" for i in range(n_states))
    if kind == "lts":
        model = LtsModel(states, actions, _lts_part(rng, states, actions, density))
    elif kind == "ctmc":
        model = CtmcModel(states, _rate_part(rng, states, density, pool))
    elif kind == "dtmc":
        model = CtmcModel(states, _dtmc_part(rng, states, density, pool), dtmc=True)
    elif kind == "imc":
        triples = _lts_part(rng, states, actions, density)
        model = ImcModel(states, actions, triples, _rate_part(rng, states, density, pool))
    elif kind == "pa":
        model = PaModel(states, actions, _step_part(rng, states, actions, density, pool))
    elif kind == "ma":
        steps = _step_part(rng, states, actions, density, pool)
        model = MaModel(states, actions, steps, _rate_part(rng, states, density / 2, pool))
    else:
        model = _random_futs(rng, states, density, pool)
    return ModelDocument(kind, model, (("generator", f"{kind} seed={seed} states={n_states} density={density}"),))


def random_equivalence(states, seed):
    """Random partition: each state joins an existing block or opens a new one."""
    states = tuple(states)
    if not states:
        raise BadParams("need at least one state")
    rng = _rng("eq", seed)
    labels = []
    opened = 0
    for _ in states:
        b = rng.randrange(opened + 1)
        opened = max(opened, b + 1)
        labels.append(b)
    return Partition(states, labels)
