"""Seeded random network generators for tests, demos and the CLI.

``random_planar_network`` places boundary vertices clockwise on the unit
circle and inner vertices inside it, triangulates (Delaunay), keeps a random
spanning tree plus a random subset of the remaining edges, and reads the
rotation system off the straight-line drawing.  Floating point is used only
to lay out the drawing; conductances are exact rationals.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

import numpy as np
from scipy.spatial import Delaunay

from .network import CircularNetwork, Edge


def random_conductance(rng: random.Random, bound: int = 10) -> Fraction:
    return Fraction(rng.randint(1, bound), rng.randint(1, bound))


def _boundary_angle(i: int, n: int) -> float:
    return math.pi / 2 - 2 * math.pi * (i - 1) / n


def random_planar_network(n: int, n_inner: int, rng: random.Random, keep: float = 0.5,
                          bound: int = 10) -> CircularNetwork:
    """A connected circular planar network with a rotation system."""
    pts = [(math.cos(_boundary_angle(i, n)), math.sin(_boundary_angle(i, n))) for i in range(1, n + 1)]
    while len(pts) < n + n_inner:
        r = 0.85 * math.sqrt(rng.random())
        a = rng.uniform(0, 2 * math.pi)
        pts.append((r * math.cos(a), r * math.sin(a)))
    if len(pts) == 2:
        pairs = {(0, 1)}
    elif len(pts) == 3:
        pairs = {(0, 1), (0, 2), (1, 2)}
    else:
        tri = Delaunay(np.array(pts))
        pairs = set()
        for simplex in tri.simplices:
            s = sorted(int(x) for x in simplex)
            pairs.update({(s[0], s[1]), (s[0], s[2]), (s[1], s[2])})
    pairs = sorted(pairs)
    rng.shuffle(pairs)
    # random spanning tree (Kruskal on the shuffled order), then extra edges
    parent = list(range(len(pts)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            chosen.append((a, b))
        elif rng.random() < keep:
            chosen.append((a, b))
    chosen.sort()
    edges = [Edge(k, a + 1, b + 1, random_conductance(rng, bound)) for k, (a, b) in enumerate(chosen, start=1)]
    rotation = _rotation_from_drawing(n, pts, edges)
    inner = tuple(range(n + 1, len(pts) + 1))
    return CircularNetwork(n, inner, tuple(edges), rotation)


def _rotation_from_drawing(n, pts, edges):
    inc: dict[int, list[tuple[float, int]]] = {v: [] for v in range(1, len(pts) + 1)}
    for e in edges:
        for a, b in ((e.u, e.v), (e.v, e.u)):
            (x0, y0), (x1, y1) = pts[a - 1], pts[b - 1]
            inc[a].append((math.atan2(y1 - y0, x1 - x0), e.id))
    rot = {}
    for v, lst in inc.items():
        if v <= n:
            # clockwise, starting from the tangent pointing to vertex v+1
            start = _boundary_angle(v, n) - math.pi / 2
        else:
            start = 0.0
        rot[v] = tuple(eid for _, eid in sorted(lst, key=lambda t: ((start - t[0]) % (2 * math.pi), t[1])))
    return rot


def random_connected_network(n_vertices: int, n_boundary: int, rng: random.Random, extra: int = 4,
                             bound: int = 10) -> CircularNetwork:
    """A connected (not necessarily planar) network without rotation system."""
    verts = list(range(1, n_vertices + 1))
    order = verts[:]
    rng.shuffle(order)
    pairs = set()
    for k in range(1, len(order)):
        a, b = order[k], order[rng.randrange(k)]
        pairs.add((min(a, b), max(a, b)))
    candidates = [(a, b) for a in verts for b in verts if a < b and (a, b) not in pairs]
    rng.shuffle(candidates)
    pairs.update(candidates[:rng.randint(0, extra)])
    edges = [Edge(k, a, b, random_conductance(rng, bound)) for k, (a, b) in enumerate(sorted(pairs), start=1)]
    return CircularNetwork(n_boundary, tuple(range(n_boundary + 1, n_vertices + 1)), tuple(edges))


def planar_corpus(count: int, seed: int, n_range=(2, 6), max_inner: int = 5) -> list[CircularNetwork]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(*n_range)
        out.append(random_planar_network(n, rng.randint(0, max_inner), rng, keep=rng.random()))
    return out
