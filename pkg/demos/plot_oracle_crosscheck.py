"""
Cross-checking against brute force
==================================

For small systems the coarsest bisimulation can be found by trying every
set partition.  This script generates random models of each class and
compares three answers: partition refinement on the FuTS, the classical
concrete notion, and the exhaustive search.
"""
import collections

from futs import brute_force_coarsest, coarsest_bisimulation, encode
from futs.concrete import concrete_coarsest
from futs.testkit import random_model

tally = collections.Counter()
for kind in ("lts", "ctmc", "imc", "pa", "ma"):
    for seed in range(40):
        m = random_model(kind, seed, n_states=5, density=0.3).model
        futs = encode(m)
        ours = coarsest_bisimulation(futs)
        same = ours == brute_force_coarsest(futs) == concrete_coarsest(m)
        tally[kind, same] += 1

for (kind, same), n in sorted(tally.items()):
    print(f"{kind:5} {'agree' if same else 'DISAGREE'}: {n}")

###############################################################################
# Raw FuTS
# --------
# The same comparison works for systems outside the five encodings.  This
# random instance mixes a Boolean component, a nested rational-Boolean
# component and a three-level one.

doc = random_model("futs", 3, n_states=4, density=0.4)
futs = doc.model
for comp in futs.type.components:
    print(comp.labels, [r.value for r in comp.semirings])
print(coarsest_bisimulation(futs) == brute_force_coarsest(futs))
