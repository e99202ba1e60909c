"""Quotient of a FuTS by a bisimulation and the coalgebra homomorphism test.

States of the quotient are named after the first member of each block, so
the canonical map sends every state to its block representative.
Product types are handled componentwise.
"""

from .bisim import find_violation
from .continuation import ContinuationRegistry, nested_pushforward, unfold
from .core import Futs
from .errors import CarrierMismatch, NotABisimulation, TypeMismatch, UnknownState

__all__ = ["quotient_futs", "check_homomorphism", "canonical_map"]


def canonical_map(partition):
    """``state -> name of its block``, the name being the block's first member."""
    return {x: partition.block(x)[0] for x in partition.carrier}


def quotient_futs(futs, partition):
    """Return ``(quotient, eps)`` where ``eps`` maps states to quotient states.

    Every member of a block must push forward to the same continuation; the
    first disagreement raises :class:`NotABisimulation` carrying a
    :class:`~futs.bisim.Violation` witness.
    """
    if set(partition.carrier) != set(futs.states):
        raise CarrierMismatch("partition carrier differs from the FuTS states")
    eps = canonical_map(partition)
    reps = [b[0] for b in sorted(partition, key=lambda b: futs.index[b[0]])]
    qindex = {name: i for i, name in enumerate(reps)}
    eps_idx = [qindex[eps[s]] for s in futs.states]
    registry = ContinuationRegistry()
    transitions = []
    for i, comp in enumerate(futs.type.components):
        table = {}
        memo = {}
        for rep in reps:
            members = partition.block(rep)
            for label in comp.labels:
                images = []
                for x in members:
                    phi = futs.theta(i, x, label)
                    images.append(nested_pushforward(eps_idx, phi, futs.registry, registry, memo))
                if any(img != images[0] for img in images[1:]):
                    witness = find_violation(futs, partition)
                    raise NotABisimulation(
                        f"blocks of the relation are not preserved at component "
                        f"{i + 1}, label {label!r}",
                        witness,
                    )
                if images[0]:
                    registry.register(images[0])
                    table[(qindex[rep], label)] = images[0]
        transitions.append(table)
    return Futs(futs.type, reps, registry, transitions), eps


def check_homomorphism(f, source, target):
    """True iff ``FS(f)(theta_source(x)(l)) == theta_target(f(x))(l)`` for
    every state ``x``, component and label.

    ``f`` maps source state names to target state names.
    """
    if source.type != target.type:
        raise TypeMismatch("source and target have different FuTS types")
    for x in source.states:
        if x not in f:
            raise UnknownState(f"map undefined on {x!r}")
        if f[x] not in target.index:
            raise UnknownState(f"{f[x]!r} is not a target state")
    f_idx = [target.index[f[x]] for x in source.states]
    scratch = ContinuationRegistry()
    memo = {}
    for i, comp in enumerate(source.type.components):
        for x in source.states:
            for label in comp.labels:
                pushed = nested_pushforward(f_idx, source.theta(i, x, label), source.registry, scratch, memo)
                expected = target.theta(i, f[x], label)
                if unfold(pushed, scratch) != unfold(expected, target.registry):
                    return False
    return True
