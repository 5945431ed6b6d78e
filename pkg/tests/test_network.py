import random
from fractions import Fraction as F

import pytest
import sympy
from conftest import CYCLE4_R, STAR_R, cycle4_net, edge_net, star_net, triangle_net
from hypothesis import given, settings
from hypothesis import strategies as st

from circnet import (
    DisconnectedNetwork,
    NotEligible,
    ValidationError,
    boundary_currents,
    effective_resistance_matrix,
    harmonic_extension,
    network,
    response_matrix,
    series_reduce,
    star_triangle,
)
from circnet.generate import random_connected_network, random_planar_network
from circnet.matrix_tree import resistance_via_matrix_tree


def laplacian_sympy(net):
    """Independent Laplacian via sympy, vertices in net.vertices order."""
    verts = list(net.vertices)
    idx = {v: k for k, v in enumerate(verts)}
    L = sympy.zeros(len(verts), len(verts))
    for e in net.positive_edges:
        a, b = idx[e.u], idx[e.v]
        if a == b:
            continue
        w = sympy.Rational(e.conductance.numerator, e.conductance.denominator)
        L[a, a] += w
        L[b, b] += w
        L[a, b] -= w
        L[b, a] -= w
    return L


class TestConstruction:
    def test_rejects_dangling_edge(self):
        with pytest.raises(ValidationError):
            network(2, [(1, 7, 1)], inner=[3])

    def test_rejects_negative_conductance(self):
        with pytest.raises(ValidationError):
            network(2, [(1, 2, -1)])

    def test_rejects_inner_id_in_boundary_range(self):
        with pytest.raises(ValidationError):
            network(3, [(1, 2, 1)], inner=[2])

    def test_bad_rotation(self):
        with pytest.raises(ValidationError):
            network(2, [(1, 2, 1)], rotation={1: (1, 1), 2: (1,)})

    def test_zero_conductance_edges_do_not_connect(self):
        net = network(2, [(1, 2, 0)])
        assert not net.connected
        with pytest.raises(DisconnectedNetwork):
            response_matrix(net)

    def test_zero_conductance_edge_is_ignored(self):
        a = network(3, [(1, 2, 1), (2, 3, 1), (1, 3, 0)])
        b = network(3, [(1, 2, 1), (2, 3, 1)])
        assert response_matrix(a) == response_matrix(b)


class TestHarmonicExtension:
    def test_path_midpoint_is_average(self):
        net = network(2, [(1, 3, 1), (3, 2, 1)])
        assert harmonic_extension(net, [1, 0])[3] == F(1, 2)

    def test_no_inner_nodes_is_identity(self):
        U = harmonic_extension(edge_net(), [F(3, 7), F(-2)])
        assert U == {1: F(3, 7), 2: F(-2)}

    def test_star_center(self):
        U = harmonic_extension(star_net(), [1, 0, 0])
        # direct solve of the inner Kirchhoff equation 3 U = 1
        x = sympy.symbols("x")
        assert U[4] == F(1, 3) == F(str(sympy.solve(3 * x - 1, x)[0]))

    def test_kirchhoff_holds_exactly(self):
        net = random_planar_network(4, 4, random.Random(3))
        U = harmonic_extension(net, [1, F(2, 3), 0, -5])
        for v in net.inner:
            flow = sum((e.conductance * (U[v] - U[e.other(v)]) for e in net.positive_edges
                        if v in (e.u, e.v) and e.u != e.v), F(0))
            assert flow == 0

    def test_disconnected(self):
        net = network(2, [(1, 3, 1)], inner=[3])
        with pytest.raises(DisconnectedNetwork):
            harmonic_extension(net, [1, 0])


class TestResponseMatrix:
    def test_single_edge(self):
        assert response_matrix(edge_net(2)) == [[2, -2], [-2, 2]]

    def test_star(self):
        third = F(1, 3)
        assert response_matrix(star_net()) == [[2 * third, -third, -third],
                                                [-third, 2 * third, -third],
                                                [-third, -third, 2 * third]]

    def test_path_series_law(self):
        net = network(2, [(1, 3, 1), (3, 2, 1)])
        assert response_matrix(net) == [[F(1, 2), F(-1, 2)], [F(-1, 2), F(1, 2)]]

    def test_matches_sympy_schur_complement(self):
        net = random_planar_network(4, 3, random.Random(11))
        L = laplacian_sympy(net)
        n = net.n
        A, B, C = L[:n, :n], L[:n, n:], L[n:, n:]
        expected = A - B * C.inv() * B.T
        got = response_matrix(net)
        assert all(F(str(expected[i, j])) == got[i][j] for i in range(n) for j in range(n))


class TestEffectiveResistance:
    def test_single_edge(self):
        assert effective_resistance_matrix(edge_net(2))[0][1] == F(1, 2)

    def test_star(self):
        assert effective_resistance_matrix(star_net()) == STAR_R

    def test_cycle4_series_parallel(self):
        # 1 ohm against 3 ohm in parallel: 3/4; 2 against 2: 1
        assert F(1 * 3, 1 + 3) == F(3, 4) and F(2 * 2, 2 + 2) == 1
        assert effective_resistance_matrix(cycle4_net()) == CYCLE4_R

    def test_matches_pseudoinverse_formula(self):
        # R_ij = L+_ii + L+_jj - 2 L+_ij on the full Laplacian
        net = random_planar_network(3, 3, random.Random(5))
        Lp = laplacian_sympy(net).pinv()
        R = effective_resistance_matrix(net)
        for i in range(3):
            for j in range(3):
                assert F(str(sympy.nsimplify(Lp[i, i] + Lp[j, j] - 2 * Lp[i, j]))) == R[i][j]


class TestBoundaryCurrents:
    def test_single_edge(self):
        assert boundary_currents(edge_net(2), [1, 0]) == [2, -2]

    def test_constant_voltage_gives_zero(self):
        net = random_planar_network(5, 3, random.Random(2))
        assert boundary_currents(net, [7] * 5) == [0] * 5

    def test_star_row(self):
        assert boundary_currents(star_net(), [1, 0, 0]) == [F(2, 3), F(-1, 3), F(-1, 3)]


class TestStarTriangle:
    def test_unit_star_becomes_third_triangle(self):
        tri = star_triangle(star_net(), 4)
        assert sorted(e.conductance for e in tri.edges) == [F(1, 3)] * 3
        assert tri.inner == ()
        assert response_matrix(tri) == response_matrix(star_net())

    def test_legs_three_give_unit_triangle(self):
        tri = star_triangle(star_net((3, 3, 3)), 4)
        assert [e.conductance for e in tri.edges] == [1, 1, 1]
        assert response_matrix(tri) == response_matrix(triangle_net())

    def test_zero_leg_passthrough(self):
        tri = star_triangle(network(3, [(1, 4, 1), (2, 4, 1), (3, 4, 0)]), 4)
        assert sorted(e.conductance for e in tri.edges) == [0, 0, F(1, 2)]

    def test_not_eligible(self):
        with pytest.raises(NotEligible):
            star_triangle(star_net(), 1)
        with pytest.raises(NotEligible):
            star_triangle(network(2, [(1, 3, 1), (3, 2, 1)]), 3)

    def test_preserves_response_on_random_networks(self):
        rng = random.Random(8)
        checked = 0
        for _ in range(40):
            net = random_planar_network(rng.randint(3, 5), rng.randint(1, 4), rng)
            M = response_matrix(net)
            for v in net.inner:
                if sum(1 for e in net.edges if v in (e.u, e.v)) == 3:
                    assert response_matrix(star_triangle(net, v)) == M
                    checked += 1
        assert checked > 10


def test_series_reduction_preserves_response():
    net = network(3, [(1, 4, 2), (4, 5, 3), (5, 2, F(1, 2)), (5, 3, 1)])
    reduced = series_reduce(net, 4)
    assert any(e.conductance == F(6, 5) for e in reduced.edges)
    assert response_matrix(reduced) == response_matrix(net)


@given(st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_resistance_matches_matrix_tree_oracle(seed):
    rng = random.Random(seed)
    nv = rng.randint(2, 8)
    net = random_connected_network(nv, rng.randint(2, nv), rng)
    assert effective_resistance_matrix(net) == resistance_via_matrix_tree(net)


@given(st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_boundary_data_invariants(seed):
    rng = random.Random(seed)
    net = random_planar_network(rng.randint(2, 6), rng.randint(0, 5), rng)
    M = response_matrix(net)
    n = net.n
    assert all(M[i][j] == M[j][i] for i in range(n) for j in range(n))
    assert all(sum(row) == 0 for row in M)
    assert all(M[i][i] >= 0 for i in range(n))
    u = [F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)]
    I = boundary_currents(net, u)
    assert I == [sum((M[i][j] * u[j] for j in range(n)), F(0)) for i in range(n)]
    assert sum(I) == 0
    R = effective_resistance_matrix(net)
    for a in range(n):
        assert R[a][a] == 0
        for b in range(n):
            if a != b:
                assert R[a][b] > 0
            for c in range(n):
                assert R[a][c] + R[b][c] - R[a][b] >= 0
