"""Exact integer linear algebra: Smith normal form and friends.

Everything here works over plain Python ints (arbitrary precision), so the
results are exact regardless of pivot growth.  The central routine is
``smith_normal_form``, which diagonalizes D = P*A*Q with unimodular P, Q and
returns the full decomposition including inverses; kernels, cokernels and
integer solving are read off from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntegerMatrix:
    """Immutable integer matrix, row-major. 0-row / 0-column shapes are legal."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        """Build from a row list; ``cols`` pins the width of an empty matrix."""
        nrows = len(rows)
        if nrows == 0:
            return IntegerMatrix(0, cols or 0, ())
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        if cols is not None and cols != ncols:
            raise ValueError(f"rows have {ncols} entries, expected {cols}")
        return IntegerMatrix(nrows, ncols, tuple(int(v) for r in rows for v in r))

    @staticmethod
    def zeros(rows: int, cols: int) -> "IntegerMatrix":
        return IntegerMatrix(rows, cols, (0,) * (rows * cols))

    @staticmethod
    def identity(n: int) -> "IntegerMatrix":
        return IntegerMatrix(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @staticmethod
    def column(values: Iterable[int]) -> "IntegerMatrix":
        vals = tuple(int(v) for v in values)
        return IntegerMatrix(len(vals), 1, vals)

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(
            self.cols, self.rows, tuple(self.entry(i, j) for j in range(self.cols) for i in range(self.rows))
        )

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = [0] * (self.rows * other.cols)
        for i in range(self.rows):
            base = i * self.cols
            for k in range(self.cols):
                a = self.entries[base + k]
                if a:
                    kb = k * other.cols
                    ob = i * other.cols
                    for j in range(other.cols):
                        out[ob + j] += a * other.entries[kb + j]
        return IntegerMatrix(self.rows, other.cols, tuple(out))

    def hstack(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        rows = [list(self.row(i)) + list(other.row(i)) for i in range(self.rows)]
        return IntegerMatrix.from_rows(rows, cols=self.cols + other.cols)

    def take_columns(self, indices: Sequence[int]) -> "IntegerMatrix":
        rows = [[self.entry(i, j) for j in indices] for i in range(self.rows)]
        return IntegerMatrix(self.rows, len(indices), tuple(v for r in rows for v in r))

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{v}" for v in self.row(i)) for i in range(self.rows)) or "(empty)"


@dataclass(frozen=True)
class SNFDecomposition:
    """D = P*A*Q with P, Q unimodular; D diagonal with a divisibility chain."""

    matrix: IntegerMatrix
    D: IntegerMatrix
    P: IntegerMatrix
    P_inv: IntegerMatrix
    Q: IntegerMatrix
    Q_inv: IntegerMatrix
    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


@dataclass(frozen=True)
class CokernelPresentation:
    """coker(A) = Z^free_rank x prod Z/d for the torsion chain d.

    Generator vectors live in the codomain Z^m: ``free_generators`` are the
    last m-k columns of P_inv, ``torsion_generators`` the P_inv columns at
    the positions of invariant factors > 1.
    """

    torsion: tuple[int, ...]
    free_rank: int
    torsion_generators: IntegerMatrix
    free_generators: IntegerMatrix


class _Worker:
    """Mutable row/column reduction state maintaining D = P*A*Q throughout."""

    def __init__(self, a: IntegerMatrix):
        self.m, self.n = a.rows, a.cols
        self.d = a.to_rows()
        self.p = IntegerMatrix.identity(self.m).to_rows()
        self.pinv = IntegerMatrix.identity(self.m).to_rows()
        self.q = IntegerMatrix.identity(self.n).to_rows()
        self.qinv = IntegerMatrix.identity(self.n).to_rows()

    # Row ops act as D <- L*D, P <- L*P, P_inv <- P_inv*L^-1.
    def row_swap(self, i: int, j: int) -> None:
        self.d[i], self.d[j] = self.d[j], self.d[i]
        self.p[i], self.p[j] = self.p[j], self.p[i]
        for r in self.pinv:
            r[i], r[j] = r[j], r[i]

    def row_negate(self, i: int) -> None:
        self.d[i] = [-v for v in self.d[i]]
        self.p[i] = [-v for v in self.p[i]]
        for r in self.pinv:
            r[i] = -r[i]

    def row_add(self, i: int, j: int, k: int) -> None:
        """row_i += k * row_j"""
        if not k:
            return
        self.d[i] = [a + k * b for a, b in zip(self.d[i], self.d[j])]
        self.p[i] = [a + k * b for a, b in zip(self.p[i], self.p[j])]
        for r in self.pinv:
            r[j] -= k * r[i]

    # Column ops act as D <- D*R, Q <- Q*R, Q_inv <- R^-1*Q_inv.
    def col_swap(self, i: int, j: int) -> None:
        for r in self.d:
            r[i], r[j] = r[j], r[i]
        for r in self.q:
            r[i], r[j] = r[j], r[i]
        self.qinv[i], self.qinv[j] = self.qinv[j], self.qinv[i]

    def col_add(self, j: int, i: int, k: int) -> None:
        """col_j += k * col_i"""
        if not k:
            return
        for r in self.d:
            r[j] += k * r[i]
        for r in self.q:
            r[j] += k * r[i]
        self.qinv[i] = [a - k * b for a, b in zip(self.qinv[i], self.qinv[j])]


def smith_normal_form(a: IntegerMatrix) -> SNFDecomposition:
    """Classical reduction with minimal-|pivot| selection.

    Invariant factors come out positive and each divides the next.
    """
    w = _Worker(a)
    m, n = w.m, w.n
    t = 0
    while t < min(m, n):
        pivot = _find_pivot(w, t)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            w.row_swap(t, pi)
        if pj != t:
            w.col_swap(t, pj)
        _clear_cross(w, t)
        _force_divisibility(w, t)
        if w.d[t][t] < 0:
            w.row_negate(t)
        t += 1
    factors = []
    for i in range(min(m, n)):
        v = w.d[i][i]
        if v == 0:
            break
        factors.append(abs(v))
    dm = IntegerMatrix.from_rows(w.d, cols=n)
    return SNFDecomposition(
        matrix=a,
        D=dm,
        P=IntegerMatrix.from_rows(w.p, cols=m),
        P_inv=IntegerMatrix.from_rows(w.pinv, cols=m),
        Q=IntegerMatrix.from_rows(w.q, cols=n),
        Q_inv=IntegerMatrix.from_rows(w.qinv, cols=n),
        invariant_factors=tuple(factors),
    )


def _find_pivot(w: _Worker, t: int) -> tuple[int, int] | None:
    best = None
    best_abs = 0
    for i in range(t, w.m):
        row = w.d[i]
        for j in range(t, w.n):
            v = row[j]
            if v and (best is None or abs(v) < best_abs):
                best, best_abs = (i, j), abs(v)
                if best_abs == 1:
                    return best
    return best


def _clear_cross(w: _Worker, t: int) -> None:
    """Zero out column t below the pivot and row t right of it."""
    while True:
        # Pull the smallest nonzero of the pivot cross into the corner first,
        # so the Euclidean remainders shrink monotonically.
        for i in range(t + 1, w.m):
            if w.d[i][t] and abs(w.d[i][t]) < abs(w.d[t][t]):
                w.row_swap(t, i)
        for j in range(t + 1, w.n):
            if w.d[t][j] and abs(w.d[t][j]) < abs(w.d[t][t]):
                w.col_swap(t, j)
        dirty = False
        for i in range(t + 1, w.m):
            if w.d[i][t]:
                q = w.d[i][t] // w.d[t][t]
                w.row_add(i, t, -q)
                if w.d[i][t]:
                    dirty = True
        for j in range(t + 1, w.n):
            if w.d[t][j]:
                q = w.d[t][j] // w.d[t][t]
                w.col_add(j, t, -q)
                if w.d[t][j]:
                    dirty = True
        if not dirty:
            return


def _force_divisibility(w: _Worker, t: int) -> None:
    """Make the pivot divide every entry of the remaining block."""
    while True:
        piv = w.d[t][t]
        offender = None
        for i in range(t + 1, w.m):
            row = w.d[i]
            for j in range(t + 1, w.n):
                if row[j] % piv:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is None:
            return
        w.row_add(t, offender, 1)
        _clear_cross(w, t)


def kernel_basis(a: IntegerMatrix) -> IntegerMatrix:
    """Columns form a lattice basis of ker(A): the last n-k columns of Q."""
    snf = smith_normal_form(a)
    k = snf.rank
    return snf.Q.take_columns(range(k, a.cols))


def cokernel(a: IntegerMatrix) -> CokernelPresentation:
    snf = smith_normal_form(a)
    k = snf.rank
    torsion_positions = [i for i, d in enumerate(snf.invariant_factors) if d > 1]
    return CokernelPresentation(
        torsion=tuple(snf.invariant_factors[i] for i in torsion_positions),
        free_rank=a.rows - k,
        torsion_generators=snf.P_inv.take_columns(torsion_positions),
        free_generators=snf.P_inv.take_columns(range(k, a.rows)),
    )


def solve_integer(a: IntegerMatrix, b: IntegerMatrix) -> IntegerMatrix | None:
    """An integer X with A X = B, or None when no integer solution exists.

    Via the decomposition: with D = P A Q, X = Q * D^+ * (P B), where D^+
    divides through by the invariant factors; every division must be exact
    and the rows of P B beyond rank(A) must vanish.
    """
    if a.rows != b.rows:
        raise ValueError("A and B must have the same number of rows")
    snf = smith_normal_form(a)
    k = snf.rank
    c = snf.P @ b
    y_rows = [[0] * b.cols for _ in range(a.cols)]
    for i in range(a.rows):
        for j in range(b.cols):
            v = c.entry(i, j)
            if i < k:
                d = snf.invariant_factors[i]
                if v % d:
                    return None
                y_rows[i][j] = v // d
            elif v:
                return None
    x = snf.Q @ IntegerMatrix.from_rows(y_rows, cols=b.cols)
    return x
