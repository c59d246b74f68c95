"""Exact dense linear algebra over a FieldContext.

Everything here is plain Gaussian elimination with a deterministic pivot
rule (leftmost column first, then the first nonzero entry scanning down),
so rank, reduced row-echelon forms and null-space bases come out identical
on every run and under any worker partitioning upstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    RankDeficientError,
    SingularError,
)
from .field import FieldContext, FieldElement


@dataclass(frozen=True)
class MatrixFq:
    """Immutable row-major matrix over one field.

    ``entries[i][j]`` is the element in row i, column j.  Zero-row matrices
    are allowed (they show up as empty null-space bases and duals of full
    codes); zero-column ones are not.
    """

    ctx: FieldContext
    entries: tuple[tuple[FieldElement, ...], ...]

    def __post_init__(self):
        if self.entries:
            w = len(self.entries[0])
            if w == 0 or any(len(r) != w for r in self.entries):
                raise DimensionMismatchError("rows must be nonempty and equal length")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def row(self, i: int) -> tuple[FieldElement, ...]:
        if not 0 <= i < self.rows:
            raise IndexOutOfRangeError(f"row {i} out of range")
        return self.entries[i]

    def column(self, j: int) -> tuple[FieldElement, ...]:
        if not 0 <= j < self.cols:
            raise IndexOutOfRangeError(f"column {j} out of range")
        return tuple(r[j] for r in self.entries)


def matrix_from_rows(ctx: FieldContext, rows: Sequence[Sequence[FieldElement]]) -> MatrixFq:
    return MatrixFq(ctx, tuple(tuple(r) for r in rows))


def _eliminate(ctx: FieldContext, work: list[list[FieldElement]], reduce_up: bool) -> list[int]:
    """In-place row reduction; returns the pivot column list."""
    rows = len(work)
    cols = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = None
        for i in range(r, rows):
            if not ctx.is_zero(work[i][c]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = ctx.inv(work[r][c])
        work[r] = [ctx.mul(inv, x) for x in work[r]]
        span = range(rows) if reduce_up else range(r + 1, rows)
        for i in span:
            if i != r and not ctx.is_zero(work[i][c]):
                f = work[i][c]
                work[i] = [ctx.sub(x, ctx.mul(f, y)) for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def rank(mat: MatrixFq) -> int:
    work = [list(r) for r in mat.entries]
    return len(_eliminate(mat.ctx, work, reduce_up=False))


def rref(mat: MatrixFq) -> MatrixFq:
    """Reduced row-echelon form (unit pivots, zeros above and below)."""
    work = [list(r) for r in mat.entries]
    _eliminate(mat.ctx, work, reduce_up=True)
    return matrix_from_rows(mat.ctx, work)


def columns_independent(mat: MatrixFq, cols: Sequence[int]) -> bool:
    """Whether the selected columns are linearly independent.

    Short-circuits the elimination as soon as a pivot goes missing.
    """
    ctx = mat.ctx
    seen = set()
    for c in cols:
        if not 0 <= c < mat.cols:
            raise IndexOutOfRangeError(f"column {c} out of range")
        if c in seen:
            return False
        seen.add(c)
    s = len(cols)
    if s > mat.rows:
        return False
    work = [[row[c] for c in cols] for row in mat.entries]
    return len(_eliminate(ctx, work, reduce_up=False)) == s


def solve_square(a: MatrixFq, b: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
    """Unique solution x of A x = b for square A; SingularError otherwise."""
    ctx = a.ctx
    n = a.rows
    if a.cols != n:
        raise DimensionMismatchError("matrix is not square")
    if len(b) != n:
        raise DimensionMismatchError("right-hand side has wrong length")
    work = [list(row) + [b[i]] for i, row in enumerate(a.entries)]
    pivots = _eliminate(ctx, work, reduce_up=True)
    if pivots != list(range(n)):
        raise SingularError("coefficient matrix is singular")
    return tuple(work[i][n] for i in range(n))


def null_space(mat: MatrixFq) -> MatrixFq:
    """Basis of the right null space, one vector per row (possibly 0 rows).

    Each basis vector has a 1 in "its" free column, giving a deterministic
    reduced basis.  A full-rank input yields the empty matrix, whose column
    count reads back as 0.
    """
    ctx = mat.ctx
    cols = mat.cols
    work = [list(r) for r in mat.entries]
    pivots = _eliminate(ctx, work, reduce_up=True)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [ctx.zero()] * cols
        vec[f] = ctx.one()
        for i, pc in enumerate(pivots):
            vec[pc] = ctx.neg(work[i][f])
        basis.append(tuple(vec))
    return MatrixFq(mat.ctx, tuple(basis))


def mat_vec(mat: MatrixFq, x: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
    ctx = mat.ctx
    if len(x) != mat.cols:
        raise DimensionMismatchError("vector length does not match column count")
    out = []
    for row in mat.entries:
        acc = ctx.zero()
        for a, b in zip(row, x):
            acc = ctx.add(acc, ctx.mul(a, b))
        out.append(acc)
    return tuple(out)


def vec_mat(x: Sequence[FieldElement], mat: MatrixFq) -> tuple[FieldElement, ...]:
    ctx = mat.ctx
    if len(x) != mat.rows:
        raise DimensionMismatchError("vector length does not match row count")
    out = []
    for j in range(mat.cols):
        acc = ctx.zero()
        for i in range(mat.rows):
            acc = ctx.add(acc, ctx.mul(x[i], mat.entries[i][j]))
        out.append(acc)
    return tuple(out)


def require_full_row_rank(mat: MatrixFq) -> None:
    if rank(mat) != mat.rows:
        raise RankDeficientError(f"matrix has rank < {mat.rows}")
