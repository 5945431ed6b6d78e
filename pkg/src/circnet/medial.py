"""Medial graph strands, strand permutations and minimality.

Strands are traced purely from the rotation system.  A medial edge is a
*corner* of the network: two consecutive edge ends around a vertex.  A strand
runs through a corner from one edge end to the next, crosses that edge at its
midpoint and continues in the corner on the opposite side at the far end; the
sense of travel around vertices alternates at every crossing.

Boundary endpoints are numbered so that ``2i-1`` and ``2i`` flank boundary
vertex ``i``: ``2i-1`` just before it and ``2i`` just after it, clockwise.
Around boundary vertex ``i`` the clockwise order is therefore
``[2i, e_1, ..., e_d, 2i-1]`` with ``e_1..e_d`` its rotation list.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import MissingRotation, NotInvolution, ValidationError
from .network import CircularNetwork


class StrandPermutation:
    """A fixed-point-free involution on ``{1, ..., 2n}``."""

    __slots__ = ("n", "_map")

    def __init__(self, n: int, mapping: Mapping[int, int]):
        self.n = n
        m = {int(k): int(v) for k, v in mapping.items()}
        pts = set(range(1, 2 * n + 1))
        if set(m) != pts or set(m.values()) != pts:
            raise NotInvolution(f"not a permutation of 1..{2 * n}")
        for i in pts:
            if m[i] == i or m[m[i]] != i:
                raise NotInvolution(f"not a fixed-point-free involution at {i}")
        self._map = m

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "StrandPermutation":
        m = {}
        for a, b in pairs:
            m[a] = b
            m[b] = a
        return cls(n, m)

    @classmethod
    def parse(cls, text: str) -> "StrandPermutation":
        """Parse cycle notation such as ``(1 4)(2 5)(3 6)`` or ``(14)(25)(36)``."""
        pairs = []
        for chunk in text.replace(")", "").split("("):
            chunk = chunk.strip()
            if not chunk:
                continue
            parts = chunk.replace(",", " ").split()
            if len(parts) == 1 and len(parts[0]) == 2:
                parts = list(parts[0])
            if len(parts) != 2:
                raise NotInvolution(f"cycle ({chunk}) is not a transposition")
            pairs.append((int(parts[0]), int(parts[1])))
        return cls.from_pairs(len(pairs), pairs)

    def __call__(self, i: int) -> int:
        return self._map[i]

    def pairs(self) -> list[tuple[int, int]]:
        return sorted((a, b) for a, b in self._map.items() if a < b)

    def as_dict(self) -> dict[int, int]:
        return dict(self._map)

    def __eq__(self, other):
        return isinstance(other, StrandPermutation) and self.n == other.n and self._map == other._map

    def __hash__(self):
        return hash((self.n, tuple(sorted(self._map.items()))))

    def __str__(self):
        return "".join(f"({a} {b})" for a, b in self.pairs())

    def __repr__(self):
        return f"StrandPermutation({self})"


# a slot in a vertex's clockwise order: either ("T", endpoint) or ("E", edge_id, end)
Slot = tuple


@dataclass
class Strand:
    endpoints: tuple[int, int] | None
    crossings: tuple[int, ...]

    @property
    def closed(self) -> bool:
        return self.endpoints is None


@dataclass
class MedialTrace:
    n: int
    strands: list[Strand]
    # edge id -> indices (into strands) of the two passages through its midpoint
    passages: dict[int, tuple[int, int]] = field(default_factory=dict)

    def pair_crossings(self) -> Counter:
        c = Counter()
        for a, b in self.passages.values():
            if a != b:
                c[(min(a, b), max(a, b))] += 1
        return c

    def self_crossings(self) -> Counter:
        return Counter(a for a, b in self.passages.values() if a == b)

    def closed_strands(self) -> list[int]:
        return [k for k, s in enumerate(self.strands) if s.closed]


def _slots(net: CircularNetwork) -> dict[int, list[Slot]]:
    if net.rotation is None:
        raise MissingRotation("medial operations need a rotation system")
    positive = {e.id: e for e in net.positive_edges}
    slots: dict[int, list[Slot]] = {}
    for v in net.vertices:
        seen: Counter = Counter()
        row: list[Slot] = []
        for eid in net.rotation.get(v, ()):
            e = positive.get(eid)
            if e is None:
                continue
            if e.u == e.v:
                end = seen[eid]
                seen[eid] += 1
            else:
                end = 0 if v == e.u else 1
            row.append(("E", eid, end))
        if net.is_boundary(v):
            row = [("T", 2 * v)] + row + [("T", 2 * v - 1)]
        slots[v] = row
    return slots


def medial_trace(net: CircularNetwork) -> MedialTrace:
    net.require_connected()
    slots = _slots(net)
    where: dict[Slot, tuple[int, int]] = {}
    for v, row in slots.items():
        for k, s in enumerate(row):
            if s in where:
                raise ValidationError(f"edge end {s} listed twice in the rotation")
            where[s] = (v, k)
    boundary = {v for v in slots if net.is_boundary(v)}
    used_corners: set[tuple[int, int]] = set()

    def walk(v, k, d, stop_corner=None):
        crossings = []
        while True:
            row = slots[v]
            L = len(row)
            t = k + d if v in boundary else (k + d) % L
            corner = (v, min(k, t) if v in boundary else (k if d == 1 else t))
            if corner == stop_corner and crossings:
                return None, crossings
            if corner in used_corners:
                raise ValidationError("inconsistent rotation system: medial corner traversed twice")
            used_corners.add(corner)
            target = row[t]
            if target[0] == "T":
                return target[1], crossings
            _, eid, end = target
            crossings.append(eid)
            v, k = where[("E", eid, 1 - end)]
            d = -d

    strands: list[Strand] = []
    done: set[int] = set()
    for t in range(1, 2 * net.n + 1):
        if t in done:
            continue
        i = (t + 1) // 2
        if t % 2 == 0:
            start = (i, 0, 1)
        else:
            start = (i, len(slots[i]) - 1, -1)
        end, cr = walk(*start)
        done.update((t, end))
        strands.append(Strand((t, end), tuple(cr)))

    # whatever corners remain belong to closed strands
    for v in sorted(slots):
        row = slots[v]
        ncorners = len(row) - 1 if v in boundary else len(row)
        for c in range(ncorners):
            if (v, c) in used_corners:
                continue
            _, cr = walk(v, c, 1, stop_corner=(v, c))
            strands.append(Strand(None, tuple(cr)))

    seen: dict[int, list[int]] = {}
    for k, s in enumerate(strands):
        for eid in s.crossings:
            seen.setdefault(eid, []).append(k)
    passages = {}
    for eid, ks in seen.items():
        if len(ks) != 2:
            raise ValidationError(f"edge {eid} crossed {len(ks)} times by strands")
        passages[eid] = (ks[0], ks[1])
    return MedialTrace(net.n, strands, dict(sorted(passages.items())))


def strand_permutation(net: CircularNetwork) -> StrandPermutation:
    tr = medial_trace(net)
    return StrandPermutation.from_pairs(net.n, [s.endpoints for s in tr.strands if s.endpoints])


@dataclass(frozen=True)
class Defect:
    kind: str  # "SelfIntersection" | "DoubleCrossing" | "ClosedLoop"
    strands: tuple

    def __str__(self):
        return f"{self.kind}{self.strands}"


@dataclass
class MinimalityReport:
    minimal: bool
    defects: list[Defect]
    trace: MedialTrace | None = None


def _label(tr: MedialTrace, k: int):
    s = tr.strands[k]
    return s.endpoints if s.endpoints else f"closed#{k}"


def is_minimal(net: CircularNetwork) -> MinimalityReport:
    tr = medial_trace(net)
    defects = []
    for k, count in sorted(tr.self_crossings().items()):
        defects.append(Defect("SelfIntersection", (_label(tr, k),)))
    for (a, b), count in sorted(tr.pair_crossings().items()):
        if count >= 2:
            defects.append(Defect("DoubleCrossing", (_label(tr, a), _label(tr, b))))
    for k in tr.closed_strands():
        defects.append(Defect("ClosedLoop", (_label(tr, k),)))
    return MinimalityReport(not defects, defects, tr)
