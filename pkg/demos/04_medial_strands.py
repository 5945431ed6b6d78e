"""Strands of the medial graph and what they say about minimality.

Each boundary node i contributes two strand endpoints, 2i-1 and 2i. A strand
crosses every edge it meets and pairs two endpoints. The resulting pairing is
the strand permutation. Strands that cross twice, cross themselves, or close
up signal a network that can be simplified without changing its boundary data.
"""

from circnet import is_minimal, network, strand_permutation


def describe(name, net):
    rep = is_minimal(net)
    print(f"{name}: tau = {strand_permutation(net)}  minimal = {rep.minimal}")
    for s in rep.trace.strands:
        label = f"{s.endpoints[0]}-{s.endpoints[1]}" if s.endpoints else "closed"
        print(f"    strand {label:>6} crosses edges {list(s.crossings)}")
    for d in rep.defects:
        print(f"    defect: {d}")


describe("star", network(3, [(1, 4, 1), (2, 4, 1), (3, 4, 1)],
                         rotation={1: (1,), 2: (2,), 3: (3,), 4: (1, 2, 3)}))
describe("single edge", network(2, [(1, 2, 1)], rotation={1: (1,), 2: (1,)}))
# two edges in series: same boundary data as one edge, but the strands form a lens
describe("path", network(2, [(1, 3, 1), (3, 2, 1)], rotation={1: (1,), 2: (2,), 3: (1, 2)}))
# two parallel paths enclose a face; the strand around it never reaches the boundary
describe("two paths", network(2, [(1, 3, 1), (1, 4, 1), (2, 3, 1), (2, 4, 1)],
                              rotation={1: (2, 1), 2: (3, 4), 3: (3, 1), 4: (4, 2)}))
