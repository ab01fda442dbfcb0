"""Exact integer matrices, Smith normal form and the abelian rank bound.

Everything here uses Python ints, so there is no overflow however large the
intermediate entries of an elimination get.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .presentation import Presentation


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        a, b = self.to_rows(), other.to_rows()
        return IntMatrix.from_rows(
            [[sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
             for i in range(self.rows)],
            cols=other.cols,
        )

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([[self[i, j] for i in range(self.rows)] for j in range(self.cols)],
                                   cols=self.rows)

    def determinant(self) -> int:
        """Fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        m = self.to_rows()
        sign, prev = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1] if n else 1

    def diagonal(self) -> list[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular and ``D`` diagonal."""

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix
    invariant_factors: tuple[int, ...]

    @property
    def diagonal(self) -> list[int]:
        return self.D.diagonal()

    @property
    def free_rank(self) -> int:
        """Free rank of the cokernel ``Z^cols / image``."""
        return self.D.cols - sum(1 for d in self.diagonal if d != 0)


def _smallest_pivot(a: list[list[int]], t: int) -> tuple[int, int] | None:
    best = None
    for i in range(t, len(a)):
        for j in range(t, len(a[0])):
            x = abs(a[i][j])
            if x and (best is None or x < best[0]):
                best = (x, i, j)
    return None if best is None else best[1:]


def smith_normal_form(A: IntMatrix) -> SmithDecomposition:
    """Diagonalize ``A`` over the integers.

    The pivot at each stage is the nonzero entry of smallest absolute value in
    the remaining block, first in row-major order on ties.  Diagonal entries
    come out nonnegative with each dividing the next.
    """
    m, n = A.rows, A.cols
    a = A.to_rows()
    u = IntMatrix.identity(m).to_rows()
    v = IntMatrix.identity(n).to_rows()

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            pivot = _smallest_pivot(a, t)
            if pivot is None:
                break
            pi, pj = pivot
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            if any(a[i][t] for i in range(t + 1, m)) or any(a[t][j] for j in range(t + 1, n)):
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p), None)
            if bad is None:
                break
            # pulls a non-multiple into row t; the next reduction yields a smaller pivot
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        if _smallest_pivot(a, t) is None:
            break

    D = IntMatrix.from_rows(a, cols=n)
    factors = tuple(d for d in D.diagonal() if d not in (0, 1))
    return SmithDecomposition(D, IntMatrix.from_rows(u, cols=m), IntMatrix.from_rows(v, cols=n), factors)


def abelianization_matrix(p: Presentation) -> IntMatrix:
    """Relator-by-generator matrix of exponent sums."""
    return IntMatrix.from_rows([[r.exponent_sum(j) for j in range(p.n)] for r in p.relators], cols=p.n)


class RankStatus(str, enum.Enum):
    PROVEN = "PROVEN"
    CONDITIONAL = "CONDITIONAL"


@dataclass(frozen=True)
class RankReport:
    """How much of the presentation rank the abelianization certifies.

    ``abelian_lower_bound`` is the minimal number of generators of ``H_1``,
    which bounds the group rank from below.  The group rank itself is not
    computable, so equality with the presentation rank is only claimed when
    this bound forces it.
    """

    presentation_rank: int
    abelian_lower_bound: int
    invariant_factors: tuple[int, ...]
    free_rank: int
    status: RankStatus

    def __post_init__(self):
        if not 0 <= self.abelian_lower_bound <= self.presentation_rank:
            raise ValueError("abelian lower bound must lie in [0, presentation rank]")


def rank_report(p: Presentation) -> RankReport:
    snf = smith_normal_form(abelianization_matrix(p))
    bound = len(snf.invariant_factors) + snf.free_rank
    status = RankStatus.PROVEN if bound == p.n else RankStatus.CONDITIONAL
    return RankReport(p.n, bound, snf.invariant_factors, snf.free_rank, status)
