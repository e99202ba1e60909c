"""Equivalence relations as partitions, and their lifting to continuations.

Two continuations are related by the lifting of ``E`` when they assign the
same total weight to every block of ``E``.  For a tower of semirings the
lifting is applied level by level: states, then level-1 continuations,
then level-2 continuations keyed by level-1 ids, and so on.
"""

from . import continuation as cont
from .errors import CarrierMismatch, KeyOutsideCarrier, OverlappingBlocks

__all__ = ["Partition", "lift_once", "lift_chain", "LiftChain", "block_signature"]


class Partition:
    """An equivalence relation on an ordered finite carrier.

    Block ids are canonical: the id of a block is the carrier position of
    its first member.  Members inside a block keep carrier order and blocks
    are ordered by id.
    """

    __slots__ = ("carrier", "position", "block_of", "blocks")

    def __init__(self, carrier, labels):
        """``labels[i]`` is any hashable; equal labels put elements together."""
        self.carrier = tuple(carrier)
        if len(labels) != len(self.carrier):
            raise ValueError("one label per carrier element is required")
        self.position = {x: i for i, x in enumerate(self.carrier)}
        if len(self.position) != len(self.carrier):
            raise ValueError("carrier elements must be distinct")
        first = {}
        block_of = {}
        blocks = {}
        for i, (x, lab) in enumerate(zip(self.carrier, labels)):
            bid = first.setdefault(lab, i)
            block_of[x] = bid
            blocks.setdefault(bid, []).append(x)
        self.block_of = block_of
        self.blocks = {b: tuple(m) for b, m in blocks.items()}

    @classmethod
    def from_blocks(cls, carrier, blocks, complete=True):
        """Partition whose blocks are ``blocks``; unlisted elements become
        singletons when ``complete`` is true."""
        carrier = tuple(carrier)
        label = {}
        for n, block in enumerate(blocks):
            for x in block:
                if x not in carrier:
                    raise KeyOutsideCarrier(x)
                if x in label:
                    raise OverlappingBlocks(f"{x!r} is in two blocks")
                label[x] = ("b", n)
        missing = [x for x in carrier if x not in label]
        if missing and not complete:
            raise CarrierMismatch(f"elements not covered: {missing}")
        return cls(carrier, [label.get(x, ("s", x)) for x in carrier])

    @classmethod
    def identity(cls, carrier):
        carrier = tuple(carrier)
        return cls(carrier, list(range(len(carrier))))

    @classmethod
    def one_block(cls, carrier):
        carrier = tuple(carrier)
        return cls(carrier, [0] * len(carrier))

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks.values())

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return set(self.carrier) == set(other.carrier) and self.as_sets() == other.as_sets()

    def __hash__(self):
        return hash(self.as_sets())

    def __repr__(self):
        inner = ", ".join("{" + " ".join(map(str, b)) + "}" for b in self)
        return f"Partition({inner})"

    def as_sets(self):
        return frozenset(frozenset(b) for b in self.blocks.values())

    def block(self, x):
        return self.blocks[self.block_of[x]]

    def same_block(self, x, y):
        return self.block_of[x] == self.block_of[y]

    def refines(self, other):
        """True if every block of ``self`` lies inside a block of ``other``."""
        return all(
            len({other.block_of[x] for x in b}) == 1 for b in self.blocks.values()
        )

    def relabel(self, mapping):
        """The same partition with every element ``x`` renamed ``mapping[x]``."""
        return Partition([mapping[x] for x in self.carrier], [self.block_of[x] for x in self.carrier])

    def restrict(self, elements):
        elements = tuple(elements)
        return Partition(elements, [self.block_of[x] for x in elements])

    def join(self, other):
        """Finest partition coarser than both (transitive closure of the union)."""
        parent = {x: x for x in self.carrier}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for part in (self, other):
            for b in part.blocks.values():
                for y in b[1:]:
                    rx, ry = find(b[0]), find(y)
                    if rx != ry:
                        parent[ry] = rx
        return Partition(self.carrier, [find(x) for x in self.carrier])

    def meet(self, other):
        return Partition(self.carrier, [(self.block_of[x], other.block_of[x]) for x in self.carrier])


def block_signature(phi, partition):
    """Canonical tuple ``((block id, phi[B]), ...)`` over blocks meeting the
    support of ``phi``; blocks with sum zero are omitted."""
    acc = {}
    block_of = partition.block_of
    for key, value in phi.entries:
        try:
            b = block_of[key]
        except KeyError:
            raise KeyOutsideCarrier(f"key {key!r} not in the carrier") from None
        acc[b] = cont.sr.add(acc[b], value) if b in acc else value
    return tuple(sorted((b, v) for b, v in acc.items() if v))


def lift_once(partition, universe):
    """Lift ``partition`` to the continuations in ``universe``.

    ``universe`` is either a mapping ``element -> Continuation`` (the result
    is a partition of its keys) or a sequence of continuations (the result
    is a partition of the continuations themselves).
    """
    if hasattr(universe, "items"):
        elements = tuple(universe.keys())
        phis = tuple(universe.values())
    else:
        phis = tuple(dict.fromkeys(universe))
        elements = phis
    labels = [block_signature(phi, partition) for phi in phis]
    return Partition(elements, labels)


class LiftChain:
    """``levels[0]`` is the state partition (on state indices); ``levels[k]``
    partitions the level-k continuation ids of one component."""

    __slots__ = ("levels",)

    def __init__(self, levels):
        self.levels = tuple(levels)

    def __len__(self):
        return len(self.levels)

    def __getitem__(self, k):
        return self.levels[k]

    @property
    def top(self):
        return self.levels[-1]


def _index_partition(partition, futs):
    if set(partition.carrier) != set(futs.states):
        raise CarrierMismatch("partition carrier differs from the FuTS states")
    return partition.relabel(futs.index)


def lift_chain(partition, futs, component):
    """Lift a partition of ``futs.states`` through the semiring tower of
    ``component``, one level below its depth."""
    comp = futs._component(component)
    levels = [_index_partition(partition, futs)]
    for level in range(1, comp.depth):
        ids = futs.universe(component, level)
        universe = {cid: futs.registry.get(level, cid) for cid in ids}
        levels.append(lift_once(levels[-1], universe))
    return LiftChain(levels)
