"""State-to-function transition systems.

A :class:`Futs` has a finite ordered state set and, for each component
``i`` of its :class:`FutsType`, a total map ``(state, label) -> continuation``
whose nesting depth equals the number of semirings of that component.
Pairs that were never assigned denote the zero continuation.
"""

from dataclasses import dataclass

from .continuation import Continuation, ContinuationRegistry, make_continuation, zero
from .errors import (
    DuplicateKey,
    IndexOutOfRange,
    LevelMismatch,
    SemiringMismatch,
    UnknownLabel,
    UnknownState,
)
from .semiring import Semiring

__all__ = ["Component", "FutsType", "Futs", "build_futs", "continuation_universe"]


@dataclass(frozen=True)
class Component:
    """Label set ``labels`` and the semiring tower ``semirings`` (innermost first)."""

    labels: tuple
    semirings: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "semirings", tuple(self.semirings))
        if not self.labels:
            raise ValueError("a component needs at least one label")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"duplicate labels in {self.labels}")
        if not self.semirings:
            raise ValueError("a component needs at least one semiring")
        for r in self.semirings:
            if not isinstance(r, Semiring):
                raise TypeError(f"{r!r} is not a Semiring")

    @property
    def depth(self):
        return len(self.semirings)


@dataclass(frozen=True)
class FutsType:
    components: tuple

    def __post_init__(self):
        comps = tuple(
            c if isinstance(c, Component) else Component(*c) for c in self.components
        )
        if not comps:
            raise ValueError("a FuTS type needs at least one component")
        object.__setattr__(self, "components", comps)

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]


class Futs:
    """A validated FuTS.  Use :func:`build_futs` to construct one from raw data."""

    def __init__(self, futs_type, states, registry, transitions):
        self.type = futs_type
        self.states = tuple(states)
        self.index = {s: i for i, s in enumerate(self.states)}
        self.registry = registry
        # transitions[i][(state_index, label)] -> Continuation (nonzero only)
        self._theta = [dict(t) for t in transitions]

    def __repr__(self):
        return f"<Futs {len(self.states)} states, {len(self.type)} components>"

    def _component(self, component):
        if not 0 <= component < len(self.type):
            raise IndexOutOfRange(f"component {component} not in 0..{len(self.type) - 1}")
        return self.type[component]

    def state_index(self, state):
        if isinstance(state, int) and not isinstance(state, bool):
            if 0 <= state < len(self.states):
                return state
            raise UnknownState(state)
        try:
            return self.index[state]
        except KeyError:
            raise UnknownState(state) from None

    def theta(self, component, state, label):
        """The continuation ``theta_component(state)(label)``; zero if unassigned."""
        comp = self._component(component)
        if label not in comp.labels:
            raise UnknownLabel(label)
        x = self.state_index(state)
        found = self._theta[component].get((x, label))
        if found is None:
            return zero(comp.semirings[-1], comp.depth)
        return found

    def assigned(self, component):
        """Nonzero assignments of a component as ``((state_index, label), phi)`` pairs."""
        self._component(component)
        return sorted(self._theta[component].items(), key=lambda kv: kv[0][0])

    def universe(self, component, level):
        return continuation_universe(self, component, level)


def _to_continuation(spec, semirings, registry, index, where):
    """Turn a nested literal into a registered continuation.

    ``spec`` is a Continuation, a mapping ``state -> value`` (level 1),
    or an iterable of ``(inner_spec, value)`` pairs (level >= 2).
    """
    level = len(semirings)
    top = semirings[-1]
    if isinstance(spec, Continuation):
        if spec.level != level:
            raise LevelMismatch(f"{where}: expected level {level}, got {spec.level}")
        if spec.semiring is not top:
            raise SemiringMismatch(f"{where}: expected {top}, got {spec.semiring}")
        if level == 1:
            for k in spec.support:
                if not (isinstance(k, int) and 0 <= k < len(index)):
                    raise UnknownState(f"{where}: key {k!r}")
        else:
            for k in spec.support:
                inner = registry.get(level - 1, k)
                if inner.semiring is not semirings[-2]:
                    raise SemiringMismatch(f"{where}: inner key {k} has {inner.semiring}")
        return spec
    pairs = spec.items() if hasattr(spec, "items") else spec
    if level == 1:
        out = []
        for key, value in pairs:
            if isinstance(key, (dict, list, tuple, Continuation)):
                raise LevelMismatch(f"{where}: nested key at level 1")
            if key not in index:
                raise UnknownState(f"{where}: {key!r}")
            out.append((index[key], value))
        try:
            return make_continuation(top, out, 1)
        except DuplicateKey as exc:
            raise DuplicateKey(f"{where}: {exc}") from None
    out = []
    for inner_spec, value in pairs:
        if isinstance(inner_spec, str):
            raise LevelMismatch(f"{where}: state key {inner_spec!r} at level {level}")
        inner = _to_continuation(inner_spec, semirings[:-1], registry, index, where)
        out.append((registry.register(inner), value))
    try:
        return make_continuation(top, out, level)
    except DuplicateKey as exc:
        raise DuplicateKey(f"{where}: equal inner continuations listed twice") from exc


def build_futs(futs_type, states, assignments=()):
    """Validate raw data into a :class:`Futs`.

    ``assignments`` is an iterable of ``(component, state, label, spec)``
    where ``spec`` is described in :func:`_to_continuation`.  A pair
    ``(component, state, label)`` may be assigned at most once.
    """
    if not isinstance(futs_type, FutsType):
        futs_type = FutsType(futs_type)
    states = tuple(states)
    if len(set(states)) != len(states):
        raise DuplicateKey("duplicate state names")
    index = {s: i for i, s in enumerate(states)}
    registry = ContinuationRegistry()
    transitions = [dict() for _ in futs_type.components]
    for component, state, label, spec in assignments:
        if not 0 <= component < len(futs_type):
            raise IndexOutOfRange(f"component {component}")
        comp = futs_type[component]
        if state not in index:
            raise UnknownState(state)
        if label not in comp.labels:
            raise UnknownLabel(label)
        where = f"theta_{component + 1}({state})({label})"
        phi = _to_continuation(spec, comp.semirings, registry, index, where)
        key = (index[state], label)
        if key in transitions[component]:
            raise DuplicateKey(f"{where} assigned twice")
        if phi:
            registry.register(phi)
            transitions[component][key] = phi
        else:
            transitions[component][key] = None
    transitions = [{k: v for k, v in t.items() if v is not None} for t in transitions]
    return Futs(futs_type, states, registry, transitions)


def continuation_universe(futs, component, level):
    """Ids of the level-``level`` continuations reachable as keys inside
    ``theta_component``, in registration order."""
    comp = futs._component(component)
    if not 1 <= level < comp.depth:
        raise IndexOutOfRange(
            f"level {level} outside 1..{comp.depth - 1} for component {component}"
        )
    frontier = {k for _, phi in futs._theta[component].items() for k in phi.support}
    current = comp.depth - 1
    while current > level:
        frontier = {k for cid in frontier for k in futs.registry.get(current, cid).support}
        current -= 1
    return tuple(sorted(frontier))

