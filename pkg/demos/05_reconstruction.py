"""Recovering a network's shape from its resistances.

We hide a random minimal network, keep only its boundary resistance matrix,
read the strand permutation off the column ranks of the embedding, and
rebuild a network with the same strands. The rebuilt network has unit
conductances and canonical labels, so we compare strand permutations rather
than edge lists.
"""

import random

from circnet import (
    StrandPermutation,
    effective_resistance_matrix,
    network_from_tau,
    reconstruct_topology,
    serialize_network,
    strand_permutation,
)
from circnet.generate import random_conductance

rng = random.Random(5)
hidden_tau = StrandPermutation.parse("(1 6)(2 9)(3 8)(4 7)(5 10)")
shape = network_from_tau(hidden_tau)
hidden = shape.with_edges([type(e)(e.id, e.u, e.v, random_conductance(rng)) for e in shape.edges],
                          rotation=shape.rotation)
print("hidden network:", len(hidden.edges), "edges,", len(hidden.inner), "inner nodes")

R = effective_resistance_matrix(hidden)
rec = reconstruct_topology(R)
print("rank pattern g:", rec.pattern)
print("recovered tau: ", rec.tau)
print("round trip ok: ", rec.round_trip)
assert rec.tau == strand_permutation(hidden)
print()
print(serialize_network(rec.network))
