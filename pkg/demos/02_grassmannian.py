"""Resistance matrices as points of a totally non-negative Grassmannian.

Each n x n resistance matrix becomes an n x 2n matrix whose rows span an
(n-1)-dimensional space. For a planar network all maximal minors of that
space have the same sign. Scrambling the circular order breaks this, and the
check hands back a pair of minors with opposite signs.
"""

import random

from circnet import (
    alternating_row_sum,
    effective_resistance_matrix,
    is_tnn_point,
    omega_matrix,
    pluecker_coordinates,
    row_space_rank,
)
from circnet.generate import random_planar_network

R = [[0, 2, 2], [2, 0, 2], [2, 2, 0]]
om = omega_matrix(R)
print("embedding of the unit star:")
for row in om.as_lists():
    print("   ", " ".join(f"{str(x):>3}" for x in row))
print("rank:", row_space_rank(om), " alternating row sum:", [str(x) for x in alternating_row_sum(om)])
pt = pluecker_coordinates(om)
print("minors (colex):", " ".join(f"{''.join(map(str, I))}:{v}" for I, v in pt.items()))

net = random_planar_network(6, 4, random.Random(1))
R = effective_resistance_matrix(net)
verdict = is_tnn_point(omega_matrix(R), threads=4)
print(f"\nrandom planar network on 6 boundary nodes: tnn={verdict.ok}, rank={verdict.rank}")

# swap the labels of boundary nodes 2 and 3
swapped = [[R[p][q] for q in (0, 2, 1, 3, 4, 5)] for p in (0, 2, 1, 3, 4, 5)]
verdict = is_tnn_point(omega_matrix(swapped))
pos, neg = verdict.witness
pts = pluecker_coordinates(omega_matrix(swapped))
print(f"after swapping labels 2 and 3: tnn={verdict.ok}")
print(f"   minor {pos} = {pts[pos]}, minor {neg} = {pts[neg]}")
