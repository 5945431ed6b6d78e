"""The n x 2n matrix built from a resistance matrix, and its Plücker coordinates.

For a symmetric zero-diagonal ``D`` the second differences are

    m_ij = -1/2 (D[i,j] + D[i+1,j+1] - D[i,j+1] - D[i+1,j])

with all indices cyclic mod n.  Row ``i`` of the n x 2n matrix carries
``(-1)**(i+j) m_ij`` in column ``2j``, ones in columns ``2i-1`` and ``2i+1``,
and the wrap-around entry of the last row is ``(-1)**n`` in column 1
(1-based indices throughout this docstring).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from . import linalg
from .errors import NonzeroDiagonal, NotSymmetric, RankMismatch

MAX_FULL_ENUMERATION_N = 9


def check_symmetric_zero_diagonal(D: Sequence[Sequence[Fraction]]) -> linalg.Matrix:
    D = linalg.as_matrix(D)
    n = len(D)
    if any(len(row) != n for row in D):
        raise NotSymmetric("matrix is not square")
    if not linalg.is_symmetric(D):
        raise NotSymmetric("matrix is not symmetric")
    if any(D[i][i] != 0 for i in range(n)):
        raise NonzeroDiagonal("matrix has a nonzero diagonal entry")
    return D


def second_differences(D: Sequence[Sequence[Fraction]]) -> linalg.Matrix:
    D = check_symmetric_zero_diagonal(D)
    n = len(D)
    if n < 2:
        raise ValueError("need n >= 2")
    half = Fraction(1, 2)
    m = linalg.zeros(n, n)
    for i in range(n):
        i1 = (i + 1) % n
        for j in range(n):
            j1 = (j + 1) % n
            m[i][j] = -half * (D[i][j] + D[i1][j1] - D[i][j1] - D[i1][j])
    return m


@dataclass(frozen=True)
class OmegaMatrix:
    """An n x 2n exact matrix; ``source`` is the matrix it was built from, if any."""

    rows: tuple[tuple[Fraction, ...], ...]
    source: tuple[tuple[Fraction, ...], ...] | None = None

    @classmethod
    def from_rows(cls, rows) -> "OmegaMatrix":
        return cls(tuple(tuple(r) for r in linalg.as_matrix(rows)))

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def column(self, j: int) -> tuple[Fraction, ...]:
        """Column ``j`` (1-based)."""
        return tuple(r[j - 1] for r in self.rows)

    def as_lists(self) -> linalg.Matrix:
        return [list(r) for r in self.rows]


def omega_matrix(D: Sequence[Sequence[Fraction]]) -> OmegaMatrix:
    m = second_differences(D)
    n = len(m)
    rows = linalg.zeros(n, 2 * n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            rows[i - 1][2 * j - 1] = m[i - 1][j - 1] * (-1) ** (i + j)
        rows[i - 1][2 * i - 2] = Fraction(1)
        if i < n:
            rows[i - 1][2 * i] = Fraction(1)
        else:
            rows[i - 1][0] = Fraction((-1) ** n)
    src = tuple(tuple(r) for r in linalg.as_matrix(D))
    return OmegaMatrix(tuple(tuple(r) for r in rows), src)


def row_space_rank(omega: OmegaMatrix) -> int:
    return linalg.rank(omega.as_lists())


def alternating_row_sum(omega: OmegaMatrix) -> list[Fraction]:
    """``sum_i (-1)**i row_i`` (1-based ``i``); the zero vector for every well-formed input."""
    width = omega.shape[1]
    out = [Fraction(0)] * width
    for i, row in enumerate(omega.rows, start=1):
        s = (-1) ** i
        for c in range(width):
            out[c] += s * row[c]
    return out


def colex_subsets(m: int, k: int) -> Iterator[tuple[int, ...]]:
    """k-subsets of {1..m} in colexicographic order."""
    return iter(sorted(combinations(range(1, m + 1), k), key=lambda s: s[::-1]))


@dataclass(frozen=True)
class GrassmannPoint:
    """Unnormalised Plücker coordinates of a point of Gr(k, m)."""

    k: int
    m: int
    coords: dict[tuple[int, ...], Fraction]

    def __getitem__(self, index) -> Fraction:
        return self.coords[tuple(sorted(index))]

    def items(self):
        return self.coords.items()

    def nonzero(self):
        return {I: v for I, v in self.coords.items() if v != 0}


def pluecker_coordinates(omega: OmegaMatrix, threads: int = 1, max_n: int | None = None) -> GrassmannPoint:
    """All maximal minors of ``omega`` with its last row deleted.

    Minors are keyed by sorted 1-based column subsets and enumerated in
    colexicographic order; ``threads`` only changes how the work is split.
    """
    n, width = omega.shape
    r = row_space_rank(omega)
    if r != n - 1:
        raise RankMismatch(f"row space has dimension {r}, expected {n - 1}")
    cap = MAX_FULL_ENUMERATION_N if max_n is None else max_n
    if n > cap:
        raise ValueError(f"n={n} exceeds the full-enumeration cap {cap}")
    prime = [list(row) for row in omega.rows[:-1]]
    rows, scales = linalg.integer_rows(prime)
    denom = 1
    for s in scales:
        denom *= s
    subsets = list(colex_subsets(width, n - 1))

    def minor(cols):
        return Fraction(linalg.int_det([[row[c - 1] for c in cols] for row in rows]), denom)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(minor, subsets, chunksize=64))
    else:
        values = [minor(c) for c in subsets]
    coords = dict(zip(subsets, values))
    if all(v == 0 for v in values):
        raise RankMismatch("all Plücker coordinates vanish")
    return GrassmannPoint(n - 1, width, coords)


@dataclass(frozen=True)
class TnnVerdict:
    ok: bool
    rank: int
    sign: int = 0
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def is_tnn_point(omega: OmegaMatrix, threads: int = 1, point: GrassmannPoint | None = None) -> TnnVerdict:
    """Decide whether ``omega`` represents a totally non-negative point.

    If every nonzero coordinate is negative the point is accepted after a
    global sign flip (``sign = -1``).  A mixed-sign point is rejected with a
    positive and a negative index set as witness.
    """
    n = omega.n
    r = row_space_rank(omega)
    if r != n - 1:
        return TnnVerdict(False, r, reason=f"rank {r} != {n - 1}")
    if point is None:
        point = pluecker_coordinates(omega, threads=threads)
    pos = next((I for I, v in point.items() if v > 0), None)
    neg = next((I for I, v in point.items() if v < 0), None)
    if pos is not None and neg is not None:
        return TnnVerdict(False, r, witness=(pos, neg), reason="mixed signs")
    return TnnVerdict(True, r, sign=1 if pos is not None else -1)


def even_coordinate_index(n: int) -> tuple[int, ...]:
    """The index set {2, 4, ..., 2n-2}."""
    return tuple(range(2, 2 * n - 1, 2))
