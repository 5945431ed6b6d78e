"""Recover network topology from an effective-resistance matrix.

Pipeline: resistance matrix -> n x 2n matrix -> column rank pattern ``g``
-> strand permutation ``tau = g + 1 (mod 2n)`` -> a lens-free chord diagram
-> its planar arrangement -> the network whose medial graph it is.

The chord diagram is drawn in the lower half-plane with endpoint ``k`` at
``(k, 0)``: chord ``(a, b)`` goes down from ``a`` to depth ``h``, across to
``x = b`` and back up.  Depths are ranked by span ``b - a`` (ties by ``a``),
which makes interleaving chords cross exactly once and all others never.
Walking the x-axis eastwards keeps the disk on the right, so increasing
``x`` is the clockwise direction of the boundary circle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import linalg
from .errors import (
    NotElectrical,
    NotRealizable,
    RankMismatch,
    RoundTripFailure,
    ZeroColumn,
)
from .grassmann import OmegaMatrix, omega_matrix
from .kalmanson import CharacterizationReport, characterize
from .medial import StrandPermutation, strand_permutation
from .network import CircularNetwork, Edge


@dataclass(frozen=True)
class RankPattern:
    n: int
    g: dict[int, int]

    def __call__(self, i: int) -> int:
        return self.g[i]

    def __str__(self):
        return " ".join(f"{i}->{j}" for i, j in sorted(self.g.items()))


def column_rank_pattern(omega: OmegaMatrix) -> RankPattern:
    """``g(i)``: the first ``j`` after ``i`` (cyclically) with column ``i`` in span(columns i+1..j)."""
    n, width = omega.shape
    r = linalg.rank(omega.as_lists())
    if r != n - 1:
        raise RankMismatch(f"row space has dimension {r}, expected {n - 1}")
    cols = [list(omega.column(j)) for j in range(1, width + 1)]
    g = {}
    for i in range(width):
        if all(x == 0 for x in cols[i]):
            raise ZeroColumn(f"column {i + 1} is zero")
        span: list[list] = []
        span_rank = 0
        for step in range(1, width):
            span.append(cols[(i + step) % width])
            span_rank = linalg.rank(span) if len(span) > 1 else int(any(span[0]))
            if linalg.rank(span + [cols[i]]) == span_rank:
                g[i + 1] = (i + step) % width + 1
                break
        else:
            raise RankMismatch(f"column {i + 1} is not in the span of the other columns")
    return RankPattern(n, g)


def tau_from_pattern(pattern: RankPattern) -> StrandPermutation:
    m = 2 * pattern.n
    return StrandPermutation(pattern.n, {i: pattern(i) % m + 1 for i in range(1, m + 1)})


def tau_from_resistance(R) -> StrandPermutation:
    return tau_from_pattern(column_rank_pattern(omega_matrix(R)))


# -- chord diagram arrangement -------------------------------------------------

_CW = {"N": 0, "E": 1, "S": 2, "W": 3}
_OPP = {"N": "S", "S": "N", "E": "W", "W": "E"}


@dataclass
class ChordDiagram:
    n: int
    chords: list[tuple[int, int]]
    depth: dict[tuple[int, int], int]
    # crossing key (chord, chord) -> position on each chord's path
    crossings: dict[tuple[tuple[int, int], tuple[int, int]], dict]

    @classmethod
    def from_tau(cls, tau: StrandPermutation) -> "ChordDiagram":
        chords = tau.pairs()
        order = sorted(chords, key=lambda c: (c[1] - c[0], c[0]))
        depth = {c: k + 1 for k, c in enumerate(order)}
        crossings = {}
        for P, Q in combinations(chords, 2):
            (a, b), (c, d) = P, Q
            if not (a < c < b < d or c < a < d < b):
                continue
            if c < a:
                P, Q = Q, P
                (a, b), (c, d) = P, Q
            hP, hQ = depth[P], depth[Q]
            if hP < hQ:
                # on P's horizontal at x = c, on Q's left vertical at depth hP
                info = {P: (hP + (c - a), "E"), Q: (hP, "S")}
            else:
                # on P's right vertical at depth hQ, on Q's horizontal at x = b
                info = {P: (hP + (b - a) + (hP - hQ), "N"), Q: (hQ + (b - c), "E")}
            crossings[tuple(sorted((P, Q)))] = info
        return cls(tau.n, chords, depth, crossings)

    def crossing_order(self, chord: tuple[int, int]) -> list:
        """Crossing keys along ``chord`` from its smaller endpoint."""
        keys = [k for k in self.crossings if chord in k]
        return sorted(keys, key=lambda k: self.crossings[k][chord][0])


@dataclass
class _Dart:
    tail: object
    head: object
    direction: str  # outgoing direction at tail
    chord: bool
    twin: int = -1


class _Arrangement:
    def __init__(self, diagram: ChordDiagram):
        self.diagram = diagram
        m = 2 * diagram.n
        self.darts: list[_Dart] = []
        self.out: dict[object, list[int]] = {}

        def add(u, v, du, dv, chord):
            a, b = len(self.darts), len(self.darts) + 1
            self.darts.append(_Dart(u, v, du, chord, b))
            self.darts.append(_Dart(v, u, dv, chord, a))
            self.out.setdefault(u, []).append(a)
            self.out.setdefault(v, []).append(b)

        for k in range(1, m + 1):
            add(("T", k), ("T", k % m + 1), "E", "W", False)
        for chord in diagram.chords:
            a, b = chord
            nodes = [(("T", a), "S")]
            for key in diagram.crossing_order(chord):
                nodes.append((("X", key), diagram.crossings[key][chord][1]))
            nodes.append((("T", b), "N"))
            for (u, du), (v, dv) in zip(nodes, nodes[1:]):
                add(u, v, du, _OPP[dv], True)
        for node, lst in self.out.items():
            lst.sort(key=lambda d: _CW[self.darts[d].direction])
        self.face_of: list[int] = [-1] * len(self.darts)
        self.faces: list[list[int]] = []
        for d in range(len(self.darts)):
            if self.face_of[d] >= 0:
                continue
            cyc = []
            x = d
            while self.face_of[x] < 0:
                self.face_of[x] = len(self.faces)
                cyc.append(x)
                x = self.next_in_face(x)
            if x != d:
                raise AssertionError("face tracing did not close")
            self.faces.append(cyc)

    def next_in_face(self, d: int) -> int:
        # face kept on the right: turn to the counterclockwise neighbour of the reverse dart
        t = self.darts[d].twin
        lst = self.out[self.darts[t].tail]
        return lst[(lst.index(t) - 1) % len(lst)]

    def euler_characteristic(self) -> int:
        return len(self.out) - len(self.darts) // 2 + len(self.faces)

    def arc_dart(self, k: int) -> int:
        """The dart from endpoint k to endpoint k+1 (disk side on its right)."""
        return next(d for d in self.out[("T", k)] if not self.darts[d].chord and self.darts[d].direction == "E")


def network_from_tau(tau: StrandPermutation, check: bool = True) -> CircularNetwork:
    """Canonical minimal network (unit conductances) whose strand permutation is ``tau``.

    Raises :class:`NotRealizable` when two boundary vertices would coincide.
    The round trip through :func:`strand_permutation` is verified whenever
    the result is connected.
    """
    n = tau.n
    arr = _Arrangement(ChordDiagram.from_tau(tau))
    if arr.euler_characteristic() != 2:
        raise AssertionError("chord arrangement is not planar")
    outer = arr.face_of[arr.darts[arr.arc_dart(1)].twin]
    # two-colour faces across chord segments; anchor: the face on arc (2i-1, 2i) is a vertex face
    color: dict[int, int] = {}
    stack = []
    for i in range(1, n + 1):
        f = arr.face_of[arr.arc_dart(2 * i - 1)]
        if color.get(f, 1) != 1:
            raise AssertionError("inconsistent face colouring")
        color[f] = 1
        stack.append(f)
    while stack:
        f = stack.pop()
        for d in arr.faces[f]:
            if not arr.darts[d].chord:
                continue
            g = arr.face_of[arr.darts[d].twin]
            want = 1 - color[f]
            if g in color:
                if color[g] != want:
                    raise AssertionError("inconsistent face colouring")
            else:
                color[g] = want
                stack.append(g)

    crossings = sorted(arr.diagram.crossings)
    edge_id = {key: k for k, key in enumerate(crossings, start=1)}

    vertex_of_face: dict[int, int] = {}
    for i in range(1, n + 1):
        f = arr.face_of[arr.arc_dart(2 * i - 1)]
        if f in vertex_of_face:
            raise NotRealizable(f"boundary vertices {vertex_of_face[f]} and {i} fall in the same face")
        vertex_of_face[f] = i

    def walk(f, start):
        cyc = arr.faces[f]
        k = cyc.index(start)
        seq = cyc[k + 1:] + cyc[:k + 1]
        return [edge_id[arr.darts[d].head[1]] for d in seq if arr.darts[d].head[0] == "X"]

    rotation = {}
    for i in range(1, n + 1):
        f = arr.face_of[arr.arc_dart(2 * i - 1)]
        rotation[i] = tuple(walk(f, arr.arc_dart(2 * i - 1)))
    inner_faces = []
    for f, c in sorted(color.items()):
        if c == 1 and f not in vertex_of_face and f != outer:
            ends = walk(f, arr.faces[f][-1])
            if not ends:
                raise AssertionError("inner vertex face without crossings")
            k = ends.index(min(ends))
            inner_faces.append((min(ends), f, tuple(ends[k:] + ends[:k])))
    for v, (_, f, ends) in enumerate(sorted(inner_faces), start=n + 1):
        vertex_of_face[f] = v
        rotation[v] = ends

    ends_of: dict[int, list[int]] = {}
    for f, v in vertex_of_face.items():
        for eid in rotation[v]:
            ends_of.setdefault(eid, []).append(v)
    edges = []
    for key, eid in edge_id.items():
        vs = ends_of.get(eid, [])
        if len(vs) != 2:
            raise AssertionError(f"crossing {key} touches {len(vs)} vertex faces")
        edges.append(Edge(eid, min(vs), max(vs), linalg.to_fraction(1)))
    inner = tuple(range(n + 1, n + 1 + len(inner_faces)))
    net = CircularNetwork(n, inner, tuple(edges), rotation)
    if check and net.connected:
        back = strand_permutation(net)
        if back != tau:
            raise RoundTripFailure(f"rebuilt network has strand permutation {back}, expected {tau}")
    return net


@dataclass
class Reconstruction:
    network: CircularNetwork
    report: CharacterizationReport
    pattern: RankPattern
    tau: StrandPermutation
    round_trip: bool


def reconstruct_topology(R, threads: int = 1) -> Reconstruction:
    report = characterize(R, threads=threads)
    if not report.electrical:
        raise NotElectrical(f"matrix is not planar-electrical: {report.witness()}", report)
    pattern = column_rank_pattern(omega_matrix(R))
    tau = tau_from_pattern(pattern)
    net = network_from_tau(tau)
    ok = net.connected and strand_permutation(net) == tau
    return Reconstruction(net, report, pattern, tau, ok)
