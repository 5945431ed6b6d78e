"""Boundary measurements of a small resistor network.

A star with three unit spokes is the smallest network with an inner node.
We compute what an experimenter standing on the boundary can observe: the
response matrix (voltages in, currents out) and the effective resistances.
Then we check that a Y-Delta move leaves all of it unchanged, and that the
spanning-forest formula agrees with the linear algebra.
"""

from fractions import Fraction

from circnet import (
    boundary_currents,
    effective_resistance_matrix,
    harmonic_extension,
    network,
    response_matrix,
    star_triangle,
)
from circnet.matrix_tree import resistance_via_matrix_tree


def show(title, M):
    print(title)
    for row in M:
        print("   ", "  ".join(f"{str(x):>5}" for x in row))


star = network(3, [(1, 4, 1), (2, 4, 1), (3, 4, 1)],
               rotation={1: (1,), 2: (2,), 3: (3,), 4: (1, 2, 3)})

# Put 1 volt on boundary node 1 and ground the rest.
U = harmonic_extension(star, [1, 0, 0])
print("voltage at the centre:", U[4])
print("boundary currents:", [str(x) for x in boundary_currents(star, [1, 0, 0])])

show("response matrix", response_matrix(star))
R = effective_resistance_matrix(star)
show("effective resistances (two unit spokes in series)", R)

# The star and its Y-Delta image are indistinguishable from the boundary.
tri = star_triangle(star, 4)
print("triangle conductances:", [str(e.conductance) for e in tri.edges])
assert response_matrix(tri) == response_matrix(star)

# Spanning-forest cross-check on a network with mixed conductances.
net = network(3, [(1, 4, Fraction(1, 2)), (2, 4, 3), (3, 4, Fraction(7, 5)), (1, 2, 2)])
assert effective_resistance_matrix(net) == resistance_via_matrix_tree(net)
show("mixed network, solved two ways", effective_resistance_matrix(net))
