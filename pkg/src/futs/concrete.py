"""Classical bisimulation notions, checked directly on the concrete models.

Nothing here goes through continuations or liftings: these functions are
the independent side of every FuTS-versus-concrete comparison.
"""

from fractions import Fraction

from .bisim import coarsest_of, set_partitions
from .encodings import CtmcModel, ImcModel, LtsModel, MaModel, PaModel
from .errors import CarrierMismatch, TooManyStates
from .lifting import Partition

__all__ = [
    "is_lts_bisimulation",
    "is_lumping",
    "is_imc_bisimulation",
    "is_pa_bisimulation",
    "is_ma_bisimulation",
    "is_concrete_bisimulation",
    "concrete_coarsest",
    "brute_force_concrete",
]


def _check(model, R):
    if set(R.carrier) != set(model.states) or len(R.carrier) != len(model.states):
        raise CarrierMismatch("relation carrier differs from the model states")


def _related_pairs(R):
    for block in R:
        for s in block:
            for t in block:
                if s != t:
                    yield s, t


def _rate_to(rates, R):
    """``out[s][C]`` = total rate from ``s`` into class ``C`` (by block id)."""
    out = {}
    for s, rate, t in rates:
        row = out.setdefault(s, {})
        c = R.block_of[t]
        row[c] = row.get(c, Fraction(0)) + rate
    return out


def _can_reach(triples, R):
    """Set of ``(s, a, C)`` such that ``s -a-> s'`` for some ``s'`` in ``C``."""
    return {(s, a, R.block_of[t]) for s, a, t in triples}


def is_lts_bisimulation(m, R):
    """``R(s,t)`` and ``s -a-> s'`` imply some ``t -a-> t'`` with ``R(s',t')``."""
    _check(m, R)
    succ = {}
    for s, a, t in m.transitions:
        succ.setdefault((s, a), []).append(t)
    for s, t in _related_pairs(R):
        for a in m.actions:
            for s2 in succ.get((s, a), ()):
                if not any(R.same_block(s2, t2) for t2 in succ.get((t, a), ())):
                    return False
    return True


def is_lumping(m, R):
    """Related states have equal total rate into every class."""
    _check(m, R)
    rate = _rate_to(m.rates, R)
    for s, t in _related_pairs(R):
        if rate.get(s, {}) != rate.get(t, {}):
            return False
    return True


def is_imc_bisimulation(m, R):
    _check(m, R)
    reach = _can_reach(m.interactive, R)
    rate = _rate_to(m.rates, R)
    for s, t in _related_pairs(R):
        for C in R.blocks:
            for a in m.actions:
                if ((s, a, C) in reach) != ((t, a, C) in reach):
                    return False
            if rate.get(s, {}).get(C, 0) != rate.get(t, {}).get(C, 0):
                return False
    return True


def _class_masses(dist, R):
    out = {}
    for s, p in dist:
        c = R.block_of[s]
        out[c] = out.get(c, Fraction(0)) + p
    return out


def is_pa_bisimulation(m, R):
    """Every step of ``s`` is matched by a step of ``t`` with the same
    probability of entering each class."""
    _check(m, R)
    steps = {}
    for s, a, dist in m.steps:
        steps.setdefault((s, a), []).append(_class_masses(dist, R))
    for s, t in _related_pairs(R):
        for a in m.actions:
            theirs = steps.get((t, a), [])
            for mine in steps.get((s, a), ()):
                if mine not in theirs:
                    return False
    return True


def is_ma_bisimulation(m, R):
    """Immediate steps compared up to the lifting of ``R`` to the
    distributions that occur in ``m``; timed rates compared per class."""
    _check(m, R)
    # Distributions are lifted-equivalent iff they give every class the
    # same mass, so the mass vector itself names the lifted class.
    reach = {
        (s, a, frozenset(_class_masses(dist, R).items())) for s, a, dist in m.steps
    }
    gammas = {g for _, _, g in reach}
    rate = _rate_to(m.rates, R)
    for s, t in _related_pairs(R):
        for a in m.actions:
            for g in gammas:
                if ((s, a, g) in reach) != ((t, a, g) in reach):
                    return False
        if rate.get(s, {}) != rate.get(t, {}):
            return False
    return True


_CHECKERS = {
    LtsModel: is_lts_bisimulation,
    CtmcModel: is_lumping,
    ImcModel: is_imc_bisimulation,
    PaModel: is_pa_bisimulation,
    MaModel: is_ma_bisimulation,
}


def is_concrete_bisimulation(model, R):
    return _CHECKERS[type(model)](model, R)


def _signature(model, R, s):
    sig = []
    if isinstance(model, (LtsModel, ImcModel)):
        triples = model.transitions if isinstance(model, LtsModel) else model.interactive
        sig.append(frozenset((a, R.block_of[t]) for x, a, t in triples if x == s))
    if isinstance(model, (PaModel, MaModel)):
        sig.append(
            frozenset(
                (a, frozenset(_class_masses(d, R).items())) for x, a, d in model.steps if x == s
            )
        )
    if isinstance(model, (CtmcModel, ImcModel, MaModel)):
        sig.append(frozenset(_rate_to([r for r in model.rates if r[0] == s], R).get(s, {}).items()))
    return (R.block_of[s], tuple(sig))


def concrete_coarsest(model):
    """Coarsest concrete bisimulation by naive class-specific refinement."""
    R = Partition.one_block(model.states)
    while True:
        refined = Partition(model.states, [_signature(model, R, s) for s in model.states])
        if len(refined) == len(R):
            return R
        R = refined


def brute_force_concrete(model, max_states=6):
    if len(model.states) > max_states:
        raise TooManyStates(f"{len(model.states)} states exceeds the cap of {max_states}")
    check = _CHECKERS[type(model)]
    return coarsest_of(set_partitions(model.states), lambda p: check(model, p))
