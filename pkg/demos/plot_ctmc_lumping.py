"""
Lumping a small Markov chain
============================

A continuous-time Markov chain becomes a FuTS with a single delay label
``delta`` whose continuations map target states to accumulated rates.
FuTS bisimulation over that encoding is exactly ordinary lumpability, so
the coarsest bisimulation is the coarsest lumping.
"""
from futs import (
    CtmcModel,
    check_homomorphism,
    coarsest_bisimulation,
    encode,
    is_bisimulation,
    quotient_futs,
    serialize_partition,
)
from futs.concrete import is_lumping
from futs.lifting import Partition

###############################################################################
# The chain
# ---------
# ``s0`` enters ``s1`` and ``s2`` at rate 1 each; both move on to ``u`` at
# rate 2.  The two middle states look alike from the outside.

chain = CtmcModel(
    ["s0", "s1", "s2", "u"],
    [("s0", 1, "s1"), ("s0", 1, "s2"), ("s1", 2, "u"), ("s2", 2, "u")],
)
futs = encode(chain)
for s in futs.states:
    phi = futs.theta(0, s, "delta")
    print(s, {futs.states[k]: str(v) for k, v in phi.entries})

###############################################################################
# Coarsest bisimulation
# ---------------------
# Partition refinement starts from one block and splits by the rate each
# state sends into every current block.

best = coarsest_bisimulation(futs)
print(serialize_partition(best, futs.states))
assert is_lumping(chain, best)

###############################################################################
# A wrong guess
# -------------
# Merging ``s0`` with ``s1`` fails: ``s0`` sends rate 2 into the merged
# middle class while ``s1`` sends nothing there.

guess = Partition.from_blocks(chain.states, [["s0", "s1"]])
print("futs bisimulation:", is_bisimulation(futs, guess))
print("lumping:          ", is_lumping(chain, guess))

###############################################################################
# The quotient
# ------------
# Rates into a class add up, so ``s0`` now reaches the merged state at
# rate 2.  The canonical map onto the quotient is a homomorphism.

small, eps = quotient_futs(futs, best)
for s in small.states:
    phi = small.theta(0, s, "delta")
    print(s, {small.states[k]: str(v) for k, v in phi.entries})
print("homomorphism:", check_homomorphism(eps, futs, small))
