# exact_linalg.py

"""
Exact rank and nullspace of integer matrices over the rationals.

Rank uses fraction-free (Bareiss) elimination on Python ints, so every
intermediate value is an exact minor and nothing can overflow. The nullspace
is read off a reduced row echelon form computed with fractions.Fraction.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

from errors import OutOfRange
from multigraph import Multigraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, row-major."""
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise OutOfRange(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = [list(r) for r in rows]
        cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise OutOfRange("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def get(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> List[List[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols, self.rows,
            tuple(self.get(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def shift_diagonal(self, value: int) -> "IntMatrix":
        """self - value * I (square matrices only)."""
        if self.rows != self.cols:
            raise OutOfRange("diagonal shift needs a square matrix")
        entries = list(self.entries)
        for i in range(self.rows):
            entries[i * self.cols + i] -= value
        return IntMatrix(self.rows, self.cols, tuple(entries))


@dataclass(frozen=True)
class RationalVector:
    entries: Tuple[Fraction, ...]

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def scaled(self, factor) -> "RationalVector":
        return RationalVector(tuple(x * factor for x in self.entries))

    def as_ints(self) -> List[int]:
        """Entries as ints; raises ValueError if any entry is not integral."""
        out = []
        for x in self.entries:
            if x.denominator != 1:
                raise ValueError(f"entry {x} is not an integer")
            out.append(x.numerator)
        return out


def adjacency_matrix(g: Multigraph) -> IntMatrix:
    """Entry (u, v) is the multiplicity of the edge {u, v}."""
    entries = [0] * (g.n * g.n)
    for u, v in g.edges:
        entries[u * g.n + v] += 1
        entries[v * g.n + u] += 1
    return IntMatrix(g.n, g.n, tuple(entries))


def mat_vec(m: IntMatrix, v: Sequence) -> List:
    """m @ v with whatever exact number type v carries (int or Fraction)."""
    if len(v) != m.cols:
        raise OutOfRange(f"vector of length {len(v)} for a matrix with {m.cols} columns")
    result = []
    for i in range(m.rows):
        row = m.entries[i * m.cols:(i + 1) * m.cols]
        result.append(sum((a * x for a, x in zip(row, v) if a), 0))
    return result


def integer_rank(m: IntMatrix) -> int:
    """
    Rank over Q by fraction-free elimination.

    The pivot is the first nonzero entry of the current column at or below
    the current row. After each step every entry below the pivot row is a
    minor of the original matrix, so the division by the previous pivot is
    exact.
    """
    a = m.to_rows()
    rows, cols = m.rows, m.cols
    rank = 0
    previous = 1
    for c in range(cols):
        if rank == rows:
            break
        pivot_row = next((r for r in range(rank, rows) if a[r][c] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != rank:
            a[rank], a[pivot_row] = a[pivot_row], a[rank]
        top = a[rank]
        p = top[c]
        for r in range(rank + 1, rows):
            row = a[r]
            factor = row[c]
            if factor == 0:
                for cc in range(c + 1, cols):
                    if row[cc]:
                        row[cc] = p * row[cc] // previous
            else:
                for cc in range(c + 1, cols):
                    row[cc] = (p * row[cc] - factor * top[cc]) // previous
                row[c] = 0
        previous = p
        rank += 1
    return rank


@lru_cache(maxsize=4096)
def eigen_multiplicity(g: Multigraph, lam: int) -> int:
    """Dimension of ker(A - lam*I); A is symmetric so this is the multiplicity of lam."""
    rank = integer_rank(adjacency_matrix(g).shift_diagonal(lam))
    multiplicity = g.n - rank
    logger.debug(f"n={g.n} lambda={lam}: rank {rank}, multiplicity {multiplicity}")
    return multiplicity


def matrix_eigen_multiplicity(m: IntMatrix, lam: int) -> int:
    """Geometric multiplicity of lam for a square integer matrix."""
    return m.cols - integer_rank(m.shift_diagonal(lam))


def _rref(m: IntMatrix) -> Tuple[List[List[Fraction]], List[int]]:
    a = [[Fraction(x) for x in row] for row in m.to_rows()]
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        pivot_row = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rational_nullspace(m: IntMatrix) -> List[RationalVector]:
    """
    Basis of ker(m) over Q, one vector per free column in ascending order.

    Each vector is scaled so its first nonzero entry is 1.
    """
    reduced, pivots = _rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for row_index, pc in enumerate(pivots):
            v[pc] = -reduced[row_index][free]
        lead = next(x for x in v if x != 0)
        basis.append(RationalVector(tuple(x / lead for x in v)))
    return basis


def is_in_kernel(m: IntMatrix, v: Iterable) -> bool:
    return all(x == 0 for x in mat_vec(m, list(v)))
