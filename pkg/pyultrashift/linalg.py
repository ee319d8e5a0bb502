from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

__all__ = [
    'IntMatrix', 'SmithForm',
    'exgcd', 'smith_normal_form', 'invariant_factors', 'rank', 'determinant',
    'is_unimodular', 'solve_row_combination',
]


@dataclass(frozen=True)
class IntMatrix:
    """An immutable matrix of arbitrary-precision integers; `ncols` is kept for matrices without rows."""

    rows: tuple[tuple[int, ...], ...]
    ncols: int

    def __post_init__(self) -> None:
        if self.ncols < 0:
            msg = 'The number of columns must be non-negative'
            raise ValueError(msg)
        if any(len(row) != self.ncols for row in self.rows):
            msg = f'Every row must have {self.ncols} entries'
            raise ValueError(msg)

    @classmethod
    def of(cls, rows: Iterable[Sequence[int]], ncols: int | None = None) -> IntMatrix:
        rows = tuple(tuple(int(a) for a in row) for row in rows)
        if ncols is None:
            if not rows:
                msg = 'The number of columns of a matrix without rows must be given'
                raise ValueError(msg)
            ncols = len(rows[0])

        return cls(rows, ncols)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> IntMatrix:
        return cls(tuple((0,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.rows[i][j]

    def transpose(self) -> IntMatrix:
        return IntMatrix(tuple(tuple(row[j] for row in self.rows) for j in range(self.ncols)), self.nrows)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            msg = f'Cannot multiply a {self.shape} matrix by a {other.shape} matrix'
            raise ValueError(msg)

        columns = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in columns) for row in self.rows),
            other.ncols,
        )

    def row_times(self, vector: Sequence[int]) -> tuple[int, ...]:
        """The row vector `vector . self`."""
        if len(vector) != self.nrows:
            msg = f'Expected a vector of length {self.nrows}'
            raise ValueError(msg)

        return tuple(
            sum(c * row[j] for c, row in zip(vector, self.rows))
            for j in range(self.ncols)
        )

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(min(self.shape)))

    def is_diagonal(self) -> bool:
        return all(a == 0 for i, row in enumerate(self.rows) for j, a in enumerate(row) if i != j)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


@dataclass(frozen=True)
class SmithForm:
    """`U @ M @ V == S` with `U`, `V` unimodular and `S` diagonal with `d1 | d2 | ...`."""

    S: IntMatrix
    U: IntMatrix
    V: IntMatrix

    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.S.diagonal() if d != 0)


def exgcd(a: int, b: int) -> tuple[int, int, int]:
    """Returns `(g, x, y)` with `x * a + y * b == g == gcd(a, b) >= 0`."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1

    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y

    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y

    return old_r, old_x, old_y


class _Reduction:
    """Row and column operations on a working copy of `M`, mirrored onto `U` and `V`."""

    def __init__(self, M: IntMatrix) -> None:
        self.D = M.to_lists()
        self.m, self.n = M.shape
        self.U = IntMatrix.identity(self.m).to_lists()
        self.V = IntMatrix.identity(self.n).to_lists()

    def swap_rows(self, i: int, k: int) -> None:
        if i != k:
            for A in (self.D, self.U):
                A[i], A[k] = A[k], A[i]

    def swap_cols(self, j: int, k: int) -> None:
        if j != k:
            for A in (self.D, self.V):
                for row in A:
                    row[j], row[k] = row[k], row[j]

    def combine_rows(self, i: int, k: int, x: int, y: int, z: int, w: int) -> None:
        """`row_i, row_k <- x row_i + y row_k, z row_i + w row_k` (with `xw - yz = 1`)."""
        for A in (self.D, self.U):
            ri, rk = A[i], A[k]
            A[i] = [x * a + y * b for a, b in zip(ri, rk)]
            A[k] = [z * a + w * b for a, b in zip(ri, rk)]

    def combine_cols(self, j: int, k: int, x: int, y: int, z: int, w: int) -> None:
        """`col_j, col_k <- x col_j + y col_k, z col_j + w col_k` (with `xw - yz = 1`)."""
        for A in (self.D, self.V):
            for row in A:
                a, b = row[j], row[k]
                row[j], row[k] = x * a + y * b, z * a + w * b

    def clear_col(self, t: int) -> bool:
        """Zeroes column `t` below the pivot. Returns False if it was already clear."""
        D = self.D
        changed = False

        for i in range(t + 1, self.m):
            a, b = D[t][t], D[i][t]
            if b == 0:
                continue

            changed = True
            if a != 0 and b % a == 0:
                self.combine_rows(t, i, 1, 0, -(b // a), 1)
            else:
                g, x, y = exgcd(a, b)
                self.combine_rows(t, i, x, y, -(b // g), a // g)

        return changed

    def clear_row(self, t: int) -> bool:
        """Zeroes row `t` right of the pivot. Returns False if it was already clear."""
        D = self.D
        changed = False

        for j in range(t + 1, self.n):
            a, b = D[t][t], D[t][j]
            if b == 0:
                continue

            changed = True
            if a != 0 and b % a == 0:
                self.combine_cols(t, j, 1, 0, -(b // a), 1)
            else:
                g, x, y = exgcd(a, b)
                self.combine_cols(t, j, x, y, -(b // g), a // g)

        return changed

    def pick_pivot(self, t: int) -> bool:
        """Moves a nonzero entry of least absolute value in the trailing block to `(t, t)`."""
        D = self.D
        best: tuple[int, int, int] | None = None

        for i in range(t, self.m):
            for j in range(t, self.n):
                a = abs(D[i][j])
                if a != 0 and (best is None or a < best[0]):
                    best = (a, i, j)

        if best is None:
            return False

        _, i, j = best
        self.swap_rows(t, i)
        self.swap_cols(t, j)
        return True

    def find_indivisible_row(self, t: int) -> int | None:
        D = self.D
        d = D[t][t]

        for i in range(t + 1, self.m):
            if any(D[i][j] % d != 0 for j in range(t + 1, self.n)):
                return i

        return None

    def run(self) -> None:
        for t in range(min(self.m, self.n)):
            if not self.pick_pivot(t):
                break

            while True:
                self.clear_col(t)
                if self.clear_row(t):
                    continue

                # the pivot must divide what is left, or the chain d1 | d2 | ... breaks
                i = self.find_indivisible_row(t)
                if i is None:
                    break
                self.combine_rows(t, i, 1, 1, 0, 1)

            if self.D[t][t] < 0:
                for A in (self.D, self.U):
                    A[t] = [-a for a in A[t]]


def smith_normal_form(M: IntMatrix) -> SmithForm:
    reduction = _Reduction(M)
    reduction.run()

    S = IntMatrix.of(reduction.D, M.ncols)
    U = IntMatrix.of(reduction.U, M.nrows)
    V = IntMatrix.of(reduction.V, M.ncols)

    assert U @ M @ V == S, 'Smith normal form transforms do not reproduce the matrix'
    assert S.is_diagonal()

    return SmithForm(S, U, V)

def invariant_factors(M: IntMatrix) -> tuple[int, ...]:
    return smith_normal_form(M).invariant_factors()

def rank(M: IntMatrix) -> int:
    return len(invariant_factors(M))


def determinant(M: IntMatrix) -> int:
    """Fraction-free (Bareiss) elimination; every division is exact."""
    n, m = M.shape
    if n != m:
        msg = f'Cannot take the determinant of a {M.shape} matrix'
        raise ValueError(msg)
    if n == 0:
        return 1

    A = M.to_lists()
    sign, prev = 1, 1

    for k in range(n - 1):
        if A[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if pivot is None:
                return 0
            A[k], A[pivot] = A[pivot], A[k]
            sign = -sign

        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev

        prev = A[k][k]

    return sign * A[n - 1][n - 1]

def is_unimodular(M: IntMatrix) -> bool:
    return M.nrows == M.ncols and determinant(M) in (1, -1)


def solve_row_combination(M: IntMatrix, b: Sequence[int]) -> tuple[int, ...] | None:
    """
    Finds an integer row vector `c` with `c . M == b`, or returns `None` if there is none.

    With `U M V = S`, the system becomes `(c U^-1) S = b V`, which is diagonal.
    """
    if len(b) != M.ncols:
        msg = f'Expected a vector of length {M.ncols}'
        raise ValueError(msg)

    snf = smith_normal_form(M)
    w = snf.V.row_times(b)
    diagonal = snf.S.diagonal()

    d: list[int] = [0] * M.nrows
    for j, target in enumerate(w):
        s = diagonal[j] if j < len(diagonal) else 0
        if s == 0:
            if target != 0:
                return None
        elif target % s != 0:
            return None
        else:
            d[j] = target // s

    c = snf.U.row_times(d)
    assert M.row_times(c) == tuple(b)

    return c
