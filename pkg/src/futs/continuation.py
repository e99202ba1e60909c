"""Finitely supported functions and their nesting.

A level-1 :class:`Continuation` maps keys (state indices) to semiring
values.  A level-k continuation, k >= 2, maps *ids* of level-(k-1)
continuations, as handed out by a :class:`ContinuationRegistry`, to values.
"""

from collections import defaultdict

from . import semiring as sr
from .errors import BadLevel, DuplicateKey, UnmappedKey

__all__ = [
    "Continuation",
    "ContinuationRegistry",
    "make_continuation",
    "zero",
    "evaluate",
    "block_sum",
    "pushforward",
    "nested_pushforward",
    "unfold",
]


class Continuation:
    """Immutable canonical finitely supported map ``key -> value``.

    Zero values are dropped and entries are sorted by key, so two
    continuations are equal exactly when their entry tuples are equal.
    """

    __slots__ = ("semiring", "level", "entries", "_lookup", "_hash")

    def __init__(self, semiring, entries, level=1):
        self.semiring = semiring
        self.level = level
        self.entries = entries
        self._lookup = dict(entries)
        self._hash = hash((semiring, level, entries))

    def __call__(self, key):
        return self._lookup.get(key, self.semiring.zero)

    def __eq__(self, other):
        if not isinstance(other, Continuation):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.semiring is other.semiring
            and self.level == other.level
            and self.entries == other.entries
        )

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __bool__(self):
        return bool(self.entries)

    @property
    def support(self):
        return tuple(k for k, _ in self.entries)

    def total(self):
        return sr.sum((v for _, v in self.entries), self.semiring)

    def __repr__(self):
        body = ", ".join(f"{k!r}: {sr.format_value(v)}" for k, v in self.entries)
        return f"Continuation({self.semiring.value}, L{self.level}, {{{body}}})"


def make_continuation(semiring, pairs, level=1):
    """Build the canonical continuation for ``pairs`` of ``(key, value)``.

    ``pairs`` may also be a mapping.  Values are coerced into ``semiring``.
    """
    if not isinstance(level, int) or level < 1:
        raise BadLevel(f"nesting level must be >= 1, got {level!r}")
    if hasattr(pairs, "items"):
        pairs = pairs.items()
    seen = {}
    for key, value in pairs:
        if key in seen:
            raise DuplicateKey(f"key {key!r} occurs twice")
        if level > 1 and not isinstance(key, int):
            raise BadLevel(f"level-{level} keys must be continuation ids, got {key!r}")
        seen[key] = sr.coerce(value, semiring)
    entries = tuple(sorted((k, v) for k, v in seen.items() if v))
    return Continuation(semiring, entries, level)


def zero(semiring, level=1):
    return Continuation(semiring, (), level)


def evaluate(phi, key):
    return phi(key)


def block_sum(phi, block):
    """Sum of ``phi`` over the keys in ``block`` (iterable)."""
    total = phi.semiring.zero
    lookup = phi._lookup
    for k in block:
        v = lookup.get(k)
        if v:
            total = sr.add(total, v)
    return total


def _accumulate(semiring, mapped, level):
    acc = {}
    for key, value in mapped:
        acc[key] = sr.add(acc[key], value) if key in acc else value
    entries = tuple(sorted((k, v) for k, v in acc.items() if v))
    return Continuation(semiring, entries, level)


def _apply(f, key):
    try:
        return f(key) if callable(f) else f[key]
    except (KeyError, IndexError) as exc:
        raise UnmappedKey(f"map undefined on key {key!r}") from exc


def pushforward(f, phi):
    """``FS(f)(phi)(y) = sum of phi(x) over x with f(x) = y``.

    ``f`` is a mapping or a callable from keys of ``phi`` to target keys.
    """
    return _accumulate(phi.semiring, ((_apply(f, k), v) for k, v in phi.entries), phi.level)


class ContinuationRegistry:
    """Append-only, hash-consed tables of continuations, one per level.

    ``register`` returns a stable integer id; registering an equal
    continuation again returns the existing id.
    """

    def __init__(self):
        self._tables = defaultdict(list)
        self._ids = defaultdict(dict)

    def register(self, phi):
        ids = self._ids[phi.level]
        found = ids.get(phi)
        if found is not None:
            return found
        table = self._tables[phi.level]
        ids[phi] = len(table)
        table.append(phi)
        return ids[phi]

    def lookup(self, phi):
        """Id of ``phi`` if registered, else ``None``."""
        return self._ids[phi.level].get(phi)

    def get(self, level, cid):
        try:
            return self._tables[level][cid]
        except IndexError:
            raise UnmappedKey(f"no continuation {cid} at level {level}") from None

    def ids(self, level):
        return range(len(self._tables[level]))

    def levels(self):
        return sorted(k for k, v in self._tables.items() if v)

    def __len__(self):
        return sum(len(t) for t in self._tables.values())


def nested_pushforward(f, phi, source, target, _memo=None):
    """Apply the functor ``FS(...FS(f, R1)..., Rk)`` to a level-k continuation.

    Keys of ``phi`` are ids in ``source``; the pushed-forward keys are
    registered in ``target``.  At level 1 this is :func:`pushforward`.
    """
    if phi.level == 1:
        return pushforward(f, phi)
    memo = {} if _memo is None else _memo
    mapped = []
    for cid, value in phi.entries:
        memo_key = (phi.level - 1, cid)
        if memo_key not in memo:
            inner = nested_pushforward(f, source.get(phi.level - 1, cid), source, target, memo)
            memo[memo_key] = target.register(inner)
        mapped.append((memo[memo_key], value))
    return _accumulate(phi.semiring, mapped, phi.level)


def unfold(phi, registry):
    """Registry-independent structural form of ``phi``.

    Level-1 continuations become a frozenset of ``(key, value)`` pairs;
    higher levels replace each id with the unfolded continuation it names.
    Two continuations living in different registries denote the same
    function iff their unfoldings are equal.
    """
    if phi.level == 1:
        return (phi.semiring, frozenset(phi.entries))
    return (
        phi.semiring,
        frozenset((unfold(registry.get(phi.level - 1, k), registry), v) for k, v in phi.entries),
    )

