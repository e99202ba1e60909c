"""FuTS bisimulation: the transfer condition, the coarsest bisimulation by
signature refinement, and an exhaustive oracle for small systems."""

from dataclasses import dataclass

from .errors import CarrierMismatch, TooManyStates, UnknownState
from .lifting import Partition, block_signature, lift_chain

__all__ = [
    "Violation",
    "signatures",
    "find_violation",
    "is_bisimulation",
    "refinement_trace",
    "coarsest_bisimulation",
    "bisimilar",
    "set_partitions",
    "brute_force_coarsest",
]


@dataclass(frozen=True)
class Violation:
    """Two related states that a class of the lifted relation tells apart.

    ``klass`` is the offending class of the level below the top of the
    component's tower: a tuple of state names for depth-1 components, or of
    continuation ids otherwise.  ``left``/``right`` are the block sums.
    """

    x: str
    y: str
    component: int
    label: object
    klass: tuple
    left: object
    right: object


def _check_carrier(futs, partition):
    if set(partition.carrier) != set(futs.states) or len(partition.carrier) != len(futs.states):
        raise CarrierMismatch("partition carrier differs from the FuTS states")


def _tops(futs, partition):
    return [lift_chain(partition, futs, i).top for i in range(len(futs.type))]


def signatures(futs, partition, tops=None):
    """Per state, the tuple of block-sum vectors of every ``theta_i(x)(l)``
    against the top lifted partition of component ``i``."""
    _check_carrier(futs, partition)
    if tops is None:
        tops = _tops(futs, partition)
    sigs = [[] for _ in futs.states]
    for i, comp in enumerate(futs.type.components):
        top = tops[i]
        table = futs._theta[i]
        for x in range(len(futs.states)):
            for label in comp.labels:
                phi = table.get((x, label))
                if phi is not None:
                    sigs[x].append((i, label, block_signature(phi, top)))
    return [tuple(s) for s in sigs]


def find_violation(futs, partition):
    """First pair breaking the transfer condition, or ``None``.

    Pairs are scanned block by block, comparing each member with the
    block's first member.
    """
    _check_carrier(futs, partition)
    tops = _tops(futs, partition)
    sigs = signatures(futs, partition, tops)
    for block in partition:
        rx = futs.index[block[0]]
        for y in block[1:]:
            ry = futs.index[y]
            if sigs[rx] == sigs[ry]:
                continue
            return _explain(futs, tops, rx, ry)
    return None


def _explain(futs, tops, x, y):
    for i, comp in enumerate(futs.type.components):
        top = tops[i]
        for label in comp.labels:
            sx = dict(block_signature(futs.theta(i, x, label), top))
            sy = dict(block_signature(futs.theta(i, y, label), top))
            if sx == sy:
                continue
            zero = comp.semirings[-1].zero
            for b in sorted(set(sx) | set(sy)):
                lv, rv = sx.get(b, zero), sy.get(b, zero)
                if lv != rv:
                    members = top.blocks[b]
                    if comp.depth == 1:
                        members = tuple(futs.states[k] for k in members)
                    return Violation(futs.states[x], futs.states[y], i, label, members, lv, rv)
    raise AssertionError("signatures differ but no differing class found")


def is_bisimulation(futs, partition):
    return find_violation(futs, partition) is None


def refinement_trace(futs, initial=None):
    """Partitions visited by signature refinement, ending at the fixpoint.

    Each step splits every block by signature; the sequence is strictly
    increasing in block count and has at most ``len(futs.states)`` entries.
    """
    if initial is None:
        current = Partition.one_block(futs.states)
    else:
        _check_carrier(futs, initial)
        current = initial.restrict(futs.states)
    trace = [current]
    while True:
        sigs = signatures(futs, current)
        refined = Partition(
            futs.states,
            [(current.block_of[s], sigs[i]) for i, s in enumerate(futs.states)],
        )
        if len(refined) == len(current):
            return trace
        current = refined
        trace.append(current)


def coarsest_bisimulation(futs, initial=None):
    """Coarsest FuTS bisimulation refining ``initial`` (default: one block).

    ``initial`` is an extension for state-labelled variants; it is not part
    of the unlabelled setting.
    """
    return refinement_trace(futs, initial)[-1]


def bisimilar(futs, s, t):
    for state in (s, t):
        if state not in futs.index:
            raise UnknownState(state)
    return coarsest_bisimulation(futs).same_block(s, t)


def set_partitions(elements):
    """All partitions of ``elements`` (restricted growth strings)."""
    elements = tuple(elements)
    n = len(elements)
    if n == 0:
        yield Partition((), [])
        return
    labels = [0] * n

    def rec(i, top):
        if i == n:
            yield Partition(elements, list(labels))
            return
        for b in range(top + 2):
            labels[i] = b
            yield from rec(i + 1, max(top, b))

    labels[0] = 0
    yield from rec(1, 0)


DEFAULT_MAX_BRUTE = 6


def brute_force_coarsest(futs, max_states=DEFAULT_MAX_BRUTE, check=None):
    """Enumerate every equivalence on the states and return the coarsest one
    accepted by ``check`` (default: :func:`is_bisimulation`).

    Raises :class:`AssertionError` if the accepted relations have no
    unique coarsest element, which would contradict the theory.
    """
    if len(futs.states) > max_states:
        raise TooManyStates(f"{len(futs.states)} states exceeds the cap of {max_states}")
    if check is None:
        check = is_bisimulation
    return coarsest_of(set_partitions(futs.states), lambda p: check(futs, p))


def coarsest_of(partitions, accept):
    passing = [p for p in partitions if accept(p)]
    if not passing:
        raise AssertionError("no relation passed (the identity always should)")
    best = min(passing, key=len)
    for p in passing:
        if not p.refines(best):
            raise AssertionError(f"{p} passes but does not refine {best}")
    return best
