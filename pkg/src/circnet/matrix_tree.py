"""Effective resistances by enumerating spanning trees and 2-forests.

This is the combinatorial oracle for :func:`circnet.network.effective_resistance_matrix`.
It never touches a Laplacian: ``R_ij = F_ij / T`` where ``T`` sums the edge
weight products of all spanning trees and ``F_ij`` those of all spanning
2-forests that put ``i`` and ``j`` in different components.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DisconnectedNetwork, SizeLimitExceeded
from .network import CircularNetwork

DEFAULT_MAX_VERTICES = 12


def _forests(nv: int, edges: list[tuple[int, int, Fraction]]):
    """Yield ``(weight, parent)`` for each acyclic edge set of size nv-1 or nv-2.

    ``parent`` is a union-find array snapshot describing the components.
    """
    m = len(edges)
    target_hi = nv - 1
    target_lo = nv - 2
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(k, count, weight):
        if count >= target_lo:
            yield weight, count, [find(x) for x in range(nv)]
            if count == target_hi:
                return
        if m - k < target_lo - count:
            return
        for j in range(k, m):
            if m - j < target_lo - count:
                return
            a, b, w = edges[j]
            ra, rb = find(a), find(b)
            if ra == rb:
                continue
            parent[rb] = ra
            yield from rec(j + 1, count + 1, weight * w)
            parent[rb] = rb

    yield from rec(0, 0, Fraction(1))


def spanning_sums(net: CircularNetwork, max_vertices: int = DEFAULT_MAX_VERTICES):
    """Return ``(T, F)`` with ``F[i][j]`` the separating 2-forest sum for boundary pair i, j."""
    verts = net.vertices
    if len(verts) > max_vertices:
        raise SizeLimitExceeded(f"{len(verts)} vertices exceed the enumeration cap of {max_vertices}")
    net.require_connected()
    idx = {v: k for k, v in enumerate(verts)}
    edges = [(idx[e.u], idx[e.v], e.conductance) for e in net.positive_edges if e.u != e.v]
    nv, n = len(verts), net.n
    T = Fraction(0)
    F = [[Fraction(0)] * n for _ in range(n)]
    for weight, count, comp in _forests(nv, edges):
        if count == nv - 1:
            T += weight
            continue
        labels = comp[:n]
        for i in range(n):
            for j in range(i + 1, n):
                if labels[i] != labels[j]:
                    F[i][j] += weight
    for i in range(n):
        for j in range(i + 1, n):
            F[j][i] = F[i][j]
    return T, F


def resistance_via_matrix_tree(net: CircularNetwork, max_vertices: int = DEFAULT_MAX_VERTICES):
    T, F = spanning_sums(net, max_vertices)
    if T == 0:
        raise DisconnectedNetwork("no spanning tree")
    return [[F[i][j] / T for j in range(net.n)] for i in range(net.n)]
