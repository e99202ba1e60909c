"""Concrete quantitative models and their FuTS encodings.

=====  ==========================================  ==================
kind   FuTS type                                   shape
=====  ==========================================  ==================
lts    (A, [bool])                                 simple
ctmc   ({delta}, [rat])                            simple
dtmc   ({delta}, [rat]), rows sum to 1             simple
imc    (A, [bool]) x ({delta}, [rat])              combined
pa     (A, [rat, bool])                            nested
ma     (A, [rat, bool]) x ({delta}, [rat])         general
=====  ==========================================  ==================

``delta`` is the single label of the timed component; it may not be used
as an action name.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .core import Component, FutsType, build_futs
from .errors import ModelError, NotStochastic, TypeMismatch
from .semiring import BOOL, RAT, coerce

__all__ = [
    "DELTA",
    "RESERVED_LABELS",
    "LtsModel",
    "CtmcModel",
    "ImcModel",
    "PaModel",
    "MaModel",
    "make_distribution",
    "encode",
    "encode_lts",
    "encode_ctmc",
    "encode_imc",
    "encode_pa",
    "encode_ma",
    "decode",
    "kind_of",
]

DELTA = "delta"
RESERVED_LABELS = frozenset({DELTA, "δ"})


def _check_states(states):
    if len(set(states)) != len(states):
        raise ModelError("duplicate state names")
    if not states:
        raise ModelError("a model needs at least one state")


def _check_actions(actions):
    if len(set(actions)) != len(actions):
        raise ModelError("duplicate action names")
    if not actions:
        raise ModelError("at least one action must be declared")
    bad = RESERVED_LABELS.intersection(actions)
    if bad:
        raise ModelError(f"reserved label {sorted(bad)[0]!r} used as an action")


def _check_state(states, s):
    if s not in states:
        raise ModelError(f"unknown state {s!r}")


def _check_rates(states, rates):
    out = []
    for s, rate, t in rates:
        _check_state(states, s)
        _check_state(states, t)
        rate = coerce(rate, RAT)
        if rate <= 0:
            raise ModelError(f"rate {rate} of {s} -> {t} must be positive")
        out.append((s, rate, t))
    return tuple(out)


def make_distribution(states, mapping):
    """Canonical distribution: ``((state, p), ...)`` in declaration order,
    zero entries dropped, total mass exactly 1."""
    if hasattr(mapping, "items"):
        mapping = list(mapping.items())
    order = {s: i for i, s in enumerate(states)}
    seen = {}
    for s, p in mapping:
        _check_state(order, s)
        if s in seen:
            raise ModelError(f"state {s!r} listed twice in a distribution")
        seen[s] = coerce(p, RAT)
    total = sum(seen.values(), Fraction(0))
    if total != 1:
        raise ModelError(f"distribution mass is {total}, not 1")
    return tuple(sorted(((s, p) for s, p in seen.items() if p), key=lambda e: order[e[0]]))


def _check_steps(states, actions, steps):
    out = []
    seen = set()
    for s, a, dist in steps:
        _check_state(states, s)
        if a not in actions:
            raise ModelError(f"unknown action {a!r}")
        dist = make_distribution(states, dist)
        if (s, a, dist) in seen:
            raise ModelError(f"duplicate step {s} -{a}-> {dict(dist)}")
        seen.add((s, a, dist))
        out.append((s, a, dist))
    return tuple(out)


def _check_triples(states, actions, triples):
    out = []
    for s, a, t in triples:
        _check_state(states, s)
        _check_state(states, t)
        if a not in actions:
            raise ModelError(f"unknown action {a!r}")
        out.append((s, a, t))
    if len(set(out)) != len(out):
        raise ModelError("duplicate transition triple")
    return tuple(out)


@dataclass(frozen=True)
class LtsModel:
    states: tuple
    actions: tuple
    transitions: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "actions", tuple(self.actions))
        _check_states(self.states)
        _check_actions(self.actions)
        object.__setattr__(self, "transitions", _check_triples(self.states, self.actions, self.transitions))


@dataclass(frozen=True)
class CtmcModel:
    """Rate triples ``(s, rate, t)``; repeated endpoints are kept and only
    summed by the encoding.  With ``dtmc`` set, every state with outgoing
    mass must have total mass exactly 1."""

    states: tuple
    rates: tuple = ()
    dtmc: bool = False

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        _check_states(self.states)
        object.__setattr__(self, "rates", _check_rates(self.states, self.rates))
        if self.dtmc:
            check_stochastic(self)


def check_stochastic(model):
    out = {}
    for s, rate, _ in model.rates:
        out[s] = out.get(s, Fraction(0)) + rate
    for s, total in out.items():
        if total != 1:
            raise NotStochastic(f"outgoing probability of {s!r} is {total}, not 1")


@dataclass(frozen=True)
class ImcModel:
    states: tuple
    actions: tuple
    interactive: tuple = ()
    rates: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "actions", tuple(self.actions))
        _check_states(self.states)
        _check_actions(self.actions)
        object.__setattr__(self, "interactive", _check_triples(self.states, self.actions, self.interactive))
        object.__setattr__(self, "rates", _check_rates(self.states, self.rates))


@dataclass(frozen=True)
class PaModel:
    """Steps ``(s, a, distribution)``; distributions are given as mappings or
    pair sequences and stored canonically (see :func:`make_distribution`)."""

    states: tuple
    actions: tuple
    steps: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "actions", tuple(self.actions))
        _check_states(self.states)
        _check_actions(self.actions)
        object.__setattr__(self, "steps", _check_steps(self.states, self.actions, self.steps))


@dataclass(frozen=True)
class MaModel:
    states: tuple
    actions: tuple
    steps: tuple = ()
    rates: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "actions", tuple(self.actions))
        _check_states(self.states)
        _check_actions(self.actions)
        object.__setattr__(self, "steps", _check_steps(self.states, self.actions, self.steps))
        object.__setattr__(self, "rates", _check_rates(self.states, self.rates))


def kind_of(model):
    if isinstance(model, CtmcModel):
        return "dtmc" if model.dtmc else "ctmc"
    return {LtsModel: "lts", ImcModel: "imc", PaModel: "pa", MaModel: "ma"}[type(model)]


def _group(pairs):
    out = {}
    for key, item in pairs:
        out.setdefault(key, []).append(item)
    return out


def _interactive(component, triples):
    grouped = _group(((s, a), (t, True)) for s, a, t in triples)
    return [(component, s, a, targets) for (s, a), targets in grouped.items()]


def _timed(component, rates):
    sums = {}
    for s, rate, t in rates:
        row = sums.setdefault(s, {})
        row[t] = row.get(t, Fraction(0)) + rate
    return [(component, s, DELTA, row) for s, row in sums.items()]


def _immediate(component, steps):
    grouped = _group(((s, a), (dict(d), True)) for s, a, d in steps)
    return [(component, s, a, dists) for (s, a), dists in grouped.items()]


def encode_lts(m):
    ftype = FutsType([Component(m.actions, [BOOL])])
    return build_futs(ftype, m.states, _interactive(0, m.transitions))


def encode_ctmc(m):
    if m.dtmc:
        check_stochastic(m)
    ftype = FutsType([Component((DELTA,), [RAT])])
    return build_futs(ftype, m.states, _timed(0, m.rates))


def encode_imc(m):
    ftype = FutsType([Component(m.actions, [BOOL]), Component((DELTA,), [RAT])])
    return build_futs(ftype, m.states, _interactive(0, m.interactive) + _timed(1, m.rates))


def encode_pa(m):
    ftype = FutsType([Component(m.actions, [RAT, BOOL])])
    return build_futs(ftype, m.states, _immediate(0, m.steps))


def encode_ma(m):
    ftype = FutsType([Component(m.actions, [RAT, BOOL]), Component((DELTA,), [RAT])])
    return build_futs(ftype, m.states, _immediate(0, m.steps) + _timed(1, m.rates))


_ENCODERS = {
    LtsModel: encode_lts,
    CtmcModel: encode_ctmc,
    ImcModel: encode_imc,
    PaModel: encode_pa,
    MaModel: encode_ma,
}


def encode(model):
    return _ENCODERS[type(model)](model)


def _expected_type(kind, actions):
    timed = Component((DELTA,), [RAT])
    if kind in ("ctmc", "dtmc"):
        return [timed]
    interactive = Component(actions, [BOOL])
    immediate = Component(actions, [RAT, BOOL])
    return {
        "lts": [interactive],
        "imc": [interactive, timed],
        "pa": [immediate],
        "ma": [immediate, timed],
    }[kind]


def decode(futs, kind):
    """Read a FuTS of the right type back as a model of ``kind``.

    Inverse of the encoders up to merging of repeated rate triples.
    """
    comps = futs.type.components
    actions = comps[0].labels if kind not in ("ctmc", "dtmc") else ()
    if list(comps) != _expected_type(kind, actions):
        raise TypeMismatch(f"FuTS type does not match kind {kind!r}")
    names = futs.states

    def triples(i):
        return tuple(
            (names[x], label, names[t])
            for (x, label), phi in futs.assigned(i)
            for t, _ in phi.entries
        )

    def rates(i):
        return tuple(
            (names[x], rate, names[t])
            for (x, _), phi in futs.assigned(i)
            for t, rate in phi.entries
        )

    def steps(i):
        out = []
        for (x, label), phi in futs.assigned(i):
            for cid, _ in phi.entries:
                dist = futs.registry.get(1, cid)
                out.append((names[x], label, [(names[t], p) for t, p in dist.entries]))
        return tuple(out)

    if kind == "lts":
        return LtsModel(names, actions, triples(0))
    if kind in ("ctmc", "dtmc"):
        return CtmcModel(names, rates(0), dtmc=kind == "dtmc")
    if kind == "imc":
        return ImcModel(names, actions, triples(0), rates(1))
    if kind == "pa":
        return PaModel(names, actions, steps(0))
    return MaModel(names, actions, steps(0), rates(1))
