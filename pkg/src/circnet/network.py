"""Circular planar electrical networks and their boundary data.

A network has boundary vertices ``1..n`` (clockwise on the disk boundary) and
inner vertices with ids ``> n``.  Conductances are exact rationals.  Edges of
conductance zero are kept in the data model but ignored by every solver.

Rotation systems are optional and only needed for medial-graph operations.
For an inner vertex the rotation is the clockwise cyclic order of its edge
ends.  For a boundary vertex it is a *linear* clockwise order that starts at
the edge closest to the boundary arc towards vertex ``i+1`` and ends at the
edge closest to the arc towards vertex ``i-1``.  A self-loop contributes two
entries with the same edge id (first occurrence is the ``u`` end).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import linalg
from .errors import DisconnectedNetwork, NotEligible, ValidationError


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int
    conductance: Fraction

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


@dataclass(frozen=True, eq=True)
class CircularNetwork:
    n: int
    inner: tuple[int, ...] = ()
    edges: tuple[Edge, ...] = ()
    rotation: Mapping[int, tuple[int, ...]] | None = field(default=None, compare=True, hash=False)

    def __post_init__(self):
        if self.n < 2:
            raise ValidationError(f"need at least 2 boundary vertices, got {self.n}")
        inner = tuple(sorted(self.inner))
        if len(set(inner)) != len(inner):
            raise ValidationError("duplicate inner vertex id")
        if any(v <= self.n for v in inner):
            raise ValidationError(f"inner vertex ids must exceed n={self.n}")
        edges = tuple(sorted(
            (e if isinstance(e, Edge) else Edge(e[0], e[1], e[2], linalg.to_fraction(e[3])) for e in self.edges),
            key=lambda e: e.id,
        ))
        edges = tuple(Edge(e.id, e.u, e.v, linalg.to_fraction(e.conductance)) for e in edges)
        ids = [e.id for e in edges]
        if len(set(ids)) != len(ids):
            raise ValidationError("duplicate edge id")
        verts = set(range(1, self.n + 1)) | set(inner)
        for e in edges:
            if e.u not in verts or e.v not in verts:
                raise ValidationError(f"edge {e.id} references unknown vertex")
            if e.conductance < 0:
                raise ValidationError(f"edge {e.id} has negative conductance")
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "edges", edges)
        if self.rotation is not None:
            rot = {int(v): tuple(r) for v, r in self.rotation.items()}
            _check_rotation(self.n, inner, edges, rot)
            object.__setattr__(self, "rotation", rot)

    # -- structure ---------------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1)) + self.inner

    def is_boundary(self, v: int) -> bool:
        return 1 <= v <= self.n

    @property
    def positive_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.conductance > 0)

    def edge(self, eid: int) -> Edge:
        for e in self.edges:
            if e.id == eid:
                return e
        raise KeyError(eid)

    @property
    def connected(self) -> bool:
        verts = self.vertices
        adj: dict[int, list[int]] = {v: [] for v in verts}
        for e in self.positive_edges:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(verts)

    def require_connected(self) -> None:
        if not self.connected:
            raise DisconnectedNetwork("network is not connected over positive-conductance edges")

    def laplacian(self) -> tuple[list[int], linalg.Matrix]:
        """Weighted Laplacian over all vertices, boundary first."""
        order = list(self.vertices)
        idx = {v: k for k, v in enumerate(order)}
        L = linalg.zeros(len(order), len(order))
        for e in self.positive_edges:
            if e.u == e.v:
                continue
            a, b, w = idx[e.u], idx[e.v], e.conductance
            L[a][a] += w
            L[b][b] += w
            L[a][b] -= w
            L[b][a] -= w
        return order, L

    def with_edges(self, edges: Iterable[Edge], inner: Sequence[int] | None = None, rotation=None) -> "CircularNetwork":
        return CircularNetwork(self.n, tuple(self.inner if inner is None else inner), tuple(edges), rotation)


def _check_rotation(n, inner, edges, rot):
    ends: dict[int, list[int]] = {v: [] for v in list(range(1, n + 1)) + list(inner)}
    for e in edges:
        if e.conductance == 0:
            continue
        ends[e.u].append(e.id)
        ends[e.v].append(e.id)
    for v, lst in rot.items():
        if v not in ends:
            raise ValidationError(f"rotation given for unknown vertex {v}")
    for v, expected in ends.items():
        got = rot.get(v, ())
        if sorted(got) != sorted(expected):
            # zero-conductance edges may be listed too; compare ignoring them
            zero = {e.id for e in edges if e.conductance == 0}
            if sorted(x for x in got if x not in zero) != sorted(expected):
                raise ValidationError(f"rotation at vertex {v} does not list each incident edge end exactly once")


def network(n: int, edges, inner=None, rotation=None) -> CircularNetwork:
    """Convenience constructor.

    ``edges`` is a sequence of ``(u, v, conductance)`` (ids assigned 1, 2, ...)
    or ``(id, u, v, conductance)``.  Inner vertices default to every endpoint
    larger than ``n``.
    """
    es = []
    for k, e in enumerate(edges, start=1):
        if len(e) == 3:
            es.append(Edge(k, e[0], e[1], linalg.to_fraction(e[2])))
        else:
            es.append(Edge(e[0], e[1], e[2], linalg.to_fraction(e[3])))
    if inner is None:
        inner = sorted({x for e in es for x in (e.u, e.v) if x > n})
    return CircularNetwork(n, tuple(inner), tuple(es), rotation)


# -- boundary data -----------------------------------------------------------


def _blocks(net: CircularNetwork):
    order, L = net.laplacian()
    n = net.n
    m = len(order)
    A = [row[:n] for row in L[:n]]
    B = [row[n:] for row in L[:n]]
    C = [row[n:] for row in L[n:m]]
    return order, A, B, C


def harmonic_extension(net: CircularNetwork, u: Sequence) -> dict[int, Fraction]:
    """Extend boundary voltages ``u`` (length n) to all vertices.

    Inner voltages solve Kirchhoff's current law exactly.
    """
    net.require_connected()
    u = [linalg.to_fraction(x) for x in u]
    if len(u) != net.n:
        raise ValueError(f"expected {net.n} boundary voltages, got {len(u)}")
    order, A, B, C = _blocks(net)
    out = {v: u[v - 1] for v in range(1, net.n + 1)}
    if C:
        # C x = -B^T u
        rhs = [[-sum((B[i][k] * u[i] for i in range(net.n)), Fraction(0))] for k in range(len(C))]
        x = linalg.solve(C, rhs)
        for k, v in enumerate(order[net.n:]):
            out[v] = x[k][0]
    return out


def response_matrix(net: CircularNetwork) -> linalg.Matrix:
    """Schur complement of the weighted Laplacian onto the boundary block."""
    net.require_connected()
    _, A, B, C = _blocks(net)
    if not C:
        return [row[:] for row in A]
    X = linalg.solve(C, linalg.transpose(B))  # C^{-1} B^T
    BX = linalg.matmul(B, X)
    return [[A[i][j] - BX[i][j] for j in range(net.n)] for i in range(net.n)]


def boundary_currents(net: CircularNetwork, u: Sequence) -> list[Fraction]:
    """Currents ``I_k = sum_j w_kj (U(k) - U(j))`` of the harmonic extension."""
    U = harmonic_extension(net, u)
    cur = [Fraction(0)] * net.n
    for e in net.positive_edges:
        if e.u == e.v:
            continue
        flow = e.conductance * (U[e.u] - U[e.v])
        if net.is_boundary(e.u):
            cur[e.u - 1] += flow
        if net.is_boundary(e.v):
            cur[e.v - 1] -= flow
    return cur


def resistance_from_response(M: Sequence[Sequence[Fraction]]) -> linalg.Matrix:
    """Effective resistances from a response matrix of a connected network.

    ``M U = e_j - e_i`` is singular with kernel spanned by the all-ones
    vector; the gauge is fixed by ``sum U = 0`` through the bordered system
    ``[[M, 1], [1^T, 0]]``.
    """
    n = len(M)
    bordered = [list(M[i]) + [Fraction(1)] for i in range(n)] + [[Fraction(1)] * n + [Fraction(0)]]
    try:
        X = linalg.inverse(bordered)
    except Exception as exc:
        raise DisconnectedNetwork("response matrix kernel is larger than the constants") from exc
    R = linalg.zeros(n, n)
    for i in range(n):
        for j in range(i + 1, n):
            # U = X[:, j] - X[:, i] restricted to the first n coordinates
            r = abs((X[i][j] - X[i][i]) - (X[j][j] - X[j][i]))
            R[i][j] = R[j][i] = r
    return R


def effective_resistance_matrix(net: CircularNetwork) -> linalg.Matrix:
    return resistance_from_response(response_matrix(net))


def star_triangle(net: CircularNetwork, center: int) -> CircularNetwork:
    """Replace the inner degree-3 star at ``center`` by a triangle.

    New conductances are ``w_i w_j / (w_1 + w_2 + w_3)``.  Zero legs are
    allowed (the triangle edges touching them get conductance 0).  The
    rotation system is carried along when present.
    """
    if net.is_boundary(center) or center not in net.inner:
        raise NotEligible(f"vertex {center} is not an inner vertex")
    legs = [e for e in net.edges if center in (e.u, e.v)]
    if len(legs) != 3 or any(e.u == e.v for e in legs):
        raise NotEligible(f"vertex {center} has degree {len(legs)}, need 3")
    if net.rotation is not None and center in net.rotation:
        order = [eid for eid in net.rotation[center] if eid in {e.id for e in legs}]
        legs = sorted(legs, key=lambda e: order.index(e.id))
    total = sum((e.conductance for e in legs), Fraction(0))
    ends = [e.other(center) for e in legs]
    ws = [e.conductance for e in legs]
    next_id = max(e.id for e in net.edges) + 1
    rest = [e for e in net.edges if center not in (e.u, e.v)]
    new = []
    for k in range(3):
        a, b = k, (k + 1) % 3
        w = ws[a] * ws[b] / total if total else Fraction(0)
        new.append(Edge(next_id + k, ends[a], ends[b], w))
    inner = [v for v in net.inner if v != center]
    rotation = None
    if net.rotation is not None:
        rotation = _triangle_rotation(net, center, legs, new)
    return net.with_edges(rest + new, inner, rotation)


def _triangle_rotation(net, center, legs, new):
    # Leg k (clockwise at center) is replaced by the triangle edges k-1 -> k and k -> k+1.
    # At the far end x_k, the leg's slot becomes: edge (k, k+1) then edge (k-1, k) clockwise.
    positive = {e.id for e in new if e.conductance > 0}
    rot = {}
    for v, lst in net.rotation.items():
        if v == center:
            continue
        out = []
        for eid in lst:
            k = next((i for i, leg in enumerate(legs) if leg.id == eid), None)
            if k is None:
                out.append(eid)
                continue
            for t in (new[k].id, new[(k - 1) % 3].id):
                if t in positive:
                    out.append(t)
        rot[v] = tuple(out)
    return rot


def series_reduce(net: CircularNetwork, vertex: int) -> CircularNetwork:
    """Replace an inner degree-2 vertex (conductances a, b) by one edge ab/(a+b)."""
    legs = [e for e in net.edges if vertex in (e.u, e.v)]
    if net.is_boundary(vertex) or len(legs) != 2:
        raise NotEligible(f"vertex {vertex} is not an inner degree-2 vertex")
    a, b = legs
    w = a.conductance * b.conductance / (a.conductance + b.conductance)
    e = Edge(min(a.id, b.id), a.other(vertex), b.other(vertex), w)
    rest = [x for x in net.edges if vertex not in (x.u, x.v)]
    rotation = None
    if net.rotation is not None:
        rotation = {v: tuple(e.id if x in (a.id, b.id) else x for x in lst)
                    for v, lst in net.rotation.items() if v != vertex}
    return net.with_edges(rest + [e], [v for v in net.inner if v != vertex], rotation)
