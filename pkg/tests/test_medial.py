import random

import pytest
from conftest import cycle4_net, edge_net, path_net, star_net, triangle_net

from circnet import (
    MissingRotation,
    NotInvolution,
    StrandPermutation,
    is_minimal,
    medial_trace,
    network,
    star_triangle,
    strand_permutation,
)
from circnet.generate import random_planar_network


class TestStrandPermutation:
    def test_parse_and_str(self):
        tau = StrandPermutation.parse("(14)(25)(36)")
        assert str(tau) == "(1 4)(2 5)(3 6)"
        assert StrandPermutation.parse(str(tau)) == tau
        assert tau(5) == 2

    def test_rejects_fixed_point(self):
        with pytest.raises(NotInvolution):
            StrandPermutation(2, {1: 1, 2: 3, 3: 2, 4: 4})

    def test_rejects_non_involution(self):
        with pytest.raises(NotInvolution):
            StrandPermutation(2, {1: 2, 2: 3, 3: 4, 4: 1})


class TestExamples:
    def test_star(self, star):
        assert str(strand_permutation(star)) == "(1 4)(2 5)(3 6)"
        rep = is_minimal(star)
        assert rep.minimal and rep.defects == []
        # each strand crosses two of the three spokes
        assert all(len(s.crossings) == 2 for s in rep.trace.strands)

    def test_single_edge(self, single_edge):
        assert str(strand_permutation(single_edge)) == "(1 3)(2 4)"
        assert is_minimal(single_edge).minimal

    def test_path_has_double_crossing(self, path):
        assert str(strand_permutation(path)) == "(1 4)(2 3)"
        rep = is_minimal(path)
        assert not rep.minimal
        assert [d.kind for d in rep.defects] == ["DoubleCrossing"]

    def test_triangle_and_cycle(self):
        assert is_minimal(triangle_net()).minimal
        assert str(strand_permutation(cycle4_net())) == "(1 6)(2 5)(3 8)(4 7)"
        assert is_minimal(cycle4_net()).minimal

    def test_self_loop_is_self_intersection(self):
        net = network(2, [(1, 2, 1), (1, 1, 1)], rotation={1: (1, 2, 2), 2: (1,)})
        rep = is_minimal(net)
        assert "SelfIntersection" in {d.kind for d in rep.defects}

    def test_closed_loop(self):
        # two parallel two-edge paths between boundary vertices 1 and 2
        net = network(2, [(1, 3, 1), (1, 4, 1), (2, 3, 1), (2, 4, 1)],
                      rotation={1: (2, 1), 2: (3, 4), 3: (3, 1), 4: (4, 2)})
        rep = is_minimal(net)
        assert "ClosedLoop" in {d.kind for d in rep.defects}
        closed = [s for s in rep.trace.strands if s.closed]
        assert len(closed) == 1 and sorted(closed[0].crossings) == [1, 2, 3, 4]

    def test_missing_rotation(self):
        with pytest.raises(MissingRotation):
            strand_permutation(network(2, [(1, 2, 1)]))

    def test_zero_edges_are_skipped(self):
        net = network(2, [(1, 2, 1), (1, 2, 0)], rotation={1: (1, 2), 2: (2, 1)})
        assert strand_permutation(net) == strand_permutation(edge_net())


def test_star_triangle_keeps_tau():
    tri = star_triangle(star_net(), 4)
    assert strand_permutation(tri) == strand_permutation(star_net())
    assert is_minimal(tri).minimal


def test_random_planar_networks():
    rng = random.Random(6)
    for _ in range(60):
        net = random_planar_network(rng.randint(2, 6), rng.randint(0, 5), rng)
        tr = medial_trace(net)
        # every positive edge is crossed by exactly two strand passages
        assert sorted(tr.passages) == sorted(e.id for e in net.positive_edges)
        tau = strand_permutation(net)
        assert all(tau(tau(i)) == i != tau(i) for i in range(1, 2 * net.n + 1))
