"""
Nested lifting for probabilistic automata
=========================================

A probabilistic automaton maps each state and action to a set of
distributions.  As a FuTS its continuations live two levels deep: Boolean
weights over rational distributions over states.  Checking a candidate
equivalence means lifting it twice, first to distributions and then to
the sets of distributions.
"""
from futs import PaModel, coarsest_bisimulation, encode, is_bisimulation
from futs.lifting import Partition, lift_chain
from futs.model_io import serialize_futs

automaton = PaModel(
    ["s", "t", "u", "v", "w"],
    ["a"],
    [("s", "a", {"u": 1}), ("t", "a", {"u": "1/2", "v": "1/2"})],
)
futs = encode(automaton)
print(serialize_futs(futs))

###############################################################################
# Lifting step by step
# --------------------
# With ``u`` and ``v`` in one class, the Dirac distribution on ``u`` and the
# fair coin between ``u`` and ``v`` put the same mass on every class, so the
# first lift groups them together.

R = Partition.from_blocks(futs.states, [["s", "t"], ["u", "v", "w"]])
chain = lift_chain(R, futs, 0)
for level, part in enumerate(chain.levels):
    print(f"level {level}: {len(part)} classes")
print("bisimulation:", is_bisimulation(futs, R))

###############################################################################
# Separating u from v
# -------------------
# Once ``u`` and ``v`` are split, the two distributions disagree on the
# class ``{u}`` (1 against 1/2) and ``s``, ``t`` can no longer be related.

R2 = Partition.from_blocks(futs.states, [["s", "t"], ["u", "w"], ["v"]])
print("lifted classes:", len(lift_chain(R2, futs, 0)[1]))
print("bisimulation:", is_bisimulation(futs, R2))
print("coarsest:", sorted(map(sorted, coarsest_bisimulation(futs))))
