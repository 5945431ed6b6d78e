"""Metric-side checks and the planar-electrical characterization.

A symmetric matrix ``D`` with labels in a fixed circular order is the
effective-resistance matrix of a connected circular network exactly when it
is Kalmanson, its n x 2n matrix is a totally non-negative point and the
Plücker coordinate at {2, 4, ..., 2n-2} is nonzero.  Equivalently, when the
negated split coefficients form the response matrix of a (connected) dual
network.  :func:`characterize` runs both routes and reports whether they agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import linalg
from .errors import NonzeroDiagonal, NotSymmetric
from .grassmann import (
    GrassmannPoint,
    TnnVerdict,
    even_coordinate_index,
    is_tnn_point,
    omega_matrix,
    pluecker_coordinates,
    second_differences,
)


def check_metric_matrix(D) -> linalg.Matrix:
    D = linalg.as_matrix(D)
    n = len(D)
    if any(len(row) != n for row in D) or not linalg.is_symmetric(D):
        raise NotSymmetric("metric matrix must be square and symmetric")
    if any(D[i][i] != 0 for i in range(n)):
        raise NonzeroDiagonal("metric matrix must have zero diagonal")
    if any(x < 0 for row in D for x in row):
        raise ValueError("metric matrix entries must be non-negative")
    return D


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: tuple | None = None
    detail: str = ""

    def __bool__(self):
        return self.ok


def is_metric(D) -> Verdict:
    """Triangle inequalities over all triples.

    The witness is the sorted 1-based triple; ``detail`` names the long side.
    """
    D = check_metric_matrix(D)
    n = len(D)
    for tri in combinations(range(n), 3):
        for a, b, c in ((tri[0], tri[1], tri[2]), (tri[0], tri[2], tri[1]), (tri[1], tri[2], tri[0])):
            if D[a][c] + D[b][c] < D[a][b]:
                return Verdict(False, tuple(t + 1 for t in tri), f"d{a+1}{b+1} exceeds d{a+1}{c+1} + d{b+1}{c+1}")
    return Verdict(True)


def is_kalmanson(D) -> Verdict:
    """Check both Kalmanson inequalities for every i1 < i2 < i3 < i4.

    The witness is the violating quadruple (1-based) and the side that fails:
    ``"parallel"`` for ``d13 + d24 < d23 + d14`` and ``"adjacent"`` for
    ``d13 + d24 < d12 + d34``.
    """
    D = check_metric_matrix(D)
    n = len(D)
    for i1, i2, i3, i4 in combinations(range(n), 4):
        cross = D[i1][i3] + D[i2][i4]
        if cross < D[i2][i3] + D[i1][i4]:
            return Verdict(False, (i1 + 1, i2 + 1, i3 + 1, i4 + 1, "parallel"))
        if cross < D[i1][i2] + D[i3][i4]:
            return Verdict(False, (i1 + 1, i2 + 1, i3 + 1, i4 + 1, "adjacent"))
    return Verdict(True)


def split_decomposition(D) -> linalg.Matrix:
    """Coefficients ``1/2 (d[i,j] + d[i+1,j+1] - d[i,j+1] - d[i+1,j])`` of the circular split decomposition."""
    return [[-x for x in row] for row in second_differences(D)]


def circular_pairs(n: int, k: int):
    """Yield circular pairs ``(P, Q)`` of size k as 0-based index tuples.

    ``p1, ..., pk, qk, ..., q1`` run clockwise around the circle.
    """
    for S in combinations(range(n), 2 * k):
        for r in range(2 * k):
            seq = S[r:] + S[:r]
            yield seq[:k], tuple(reversed(seq[k:]))


def is_circular_response_matrix(M) -> Verdict:
    """Symmetric, zero row sums, and ``(-1)**k det M(P; Q) >= 0`` on every circular pair."""
    M = linalg.as_matrix(M)
    n = len(M)
    if any(len(row) != n for row in M) or not linalg.is_symmetric(M):
        return Verdict(False, None, "not symmetric")
    for i, row in enumerate(M):
        if sum(row) != 0:
            return Verdict(False, (i + 1,), "nonzero row sum")
    for k in range(1, n // 2 + 1):
        for P, Q in circular_pairs(n, k):
            d = linalg.det(linalg.submatrix(M, P, Q))
            if (-1) ** k * d < 0:
                return Verdict(False, (tuple(p + 1 for p in P), tuple(q + 1 for q in Q)), "negative circular minor")
    return Verdict(True)


@dataclass
class CharacterizationReport:
    n: int
    is_metric: Verdict
    is_kalmanson: Verdict
    tnn_verdict: TnnVerdict
    delta_even: Fraction
    dual_response: linalg.Matrix
    dual_response_valid: bool
    dual_witness: tuple | None = None
    pluecker: GrassmannPoint | None = field(default=None, repr=False)

    @property
    def electrical(self) -> bool:
        return bool(self.is_kalmanson) and bool(self.tnn_verdict) and self.delta_even != 0

    @property
    def dual_verdict(self) -> bool:
        return bool(self.is_kalmanson) and self.dual_response_valid

    @property
    def routes_agree(self) -> bool:
        return self.electrical == self.dual_verdict

    def witness(self):
        """The first failing sub-verdict and its certificate, or None."""
        if not self.is_kalmanson:
            return ("kalmanson", self.is_kalmanson.witness)
        if not self.tnn_verdict:
            return ("negative-minor", self.tnn_verdict.witness)
        if self.delta_even == 0:
            return ("zero-delta", even_coordinate_index(self.n))
        return None


def characterize(D, threads: int = 1) -> CharacterizationReport:
    """Run every check without short-circuiting."""
    D = check_metric_matrix(D)
    n = len(D)
    metric = is_metric(D)
    kal = is_kalmanson(D)
    omega = omega_matrix(D)
    point = pluecker_coordinates(omega, threads=threads)
    tnn = is_tnn_point(omega, point=point)
    delta = point[even_coordinate_index(n)] * (tnn.sign or 1)
    dual = [[-x for x in row] for row in split_decomposition(D)]
    resp = is_circular_response_matrix(dual)
    # a response matrix of a connected network has a nonzero reduced principal minor
    reduced = linalg.det([row[:-1] for row in dual[:-1]])
    valid = bool(resp) and reduced != 0
    witness = resp.witness if not resp else (None if reduced != 0 else "reduced minor vanishes")
    return CharacterizationReport(n, metric, kal, tnn, delta, dual, valid, witness, point)
