"""Evaluation codes: monomial spaces evaluated on a set of field points.

A code is determined by a field, an ordered set of distinct evaluation
points and a strictly increasing exponent set E.  Codewords are the
evaluations (f(t) for t in points) of polynomials in span{x^e : e in E}.
Row j of the generator matrix is the monomial x^{E[j]} evaluated across the
points, with the convention 0^0 = 1 so the exponent 0 always contributes
the all-ones row.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Mapping, Sequence

from .errors import DimensionMismatchError, InvalidParamsError, ZeroMultiplierError
from .field import FieldContext, FieldElement, fe_pow
from .matrix import MatrixFq, matrix_from_rows


@dataclass(frozen=True)
class ExponentSet:
    """Strictly increasing tuple of non-negative monomial exponents."""

    exps: tuple[int, ...]

    def __post_init__(self):
        e = self.exps
        if not e:
            raise InvalidParamsError("exponent set must be nonempty")
        if e[0] < 0 or any(a >= b for a, b in zip(e, e[1:])):
            raise InvalidParamsError("exponents must be strictly increasing and >= 0")

    @property
    def k(self) -> int:
        return len(self.exps)

    @property
    def max_exp(self) -> int:
        return self.exps[-1]


@dataclass(frozen=True)
class EvalSet:
    """Ordered tuple of pairwise-distinct evaluation points."""

    points: tuple[FieldElement, ...]

    def __post_init__(self):
        if not self.points:
            raise InvalidParamsError("evaluation set must be nonempty")
        if len(set(self.points)) != len(self.points):
            raise InvalidParamsError("evaluation points must be pairwise distinct")

    @property
    def n(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class EvalCode:
    """An evaluation code plus provenance (family id and its parameters)."""

    ctx: FieldContext
    points: EvalSet
    exponents: ExponentSet
    family: str = "custom"
    params: Mapping = dc_field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.points.n

    @property
    def k(self) -> int:
        return self.exponents.k


@dataclass(frozen=True)
class GrsSpec:
    """Data of a generalized Reed-Solomon code: points, multipliers, dimension."""

    ctx: FieldContext
    points: EvalSet
    multipliers: tuple[FieldElement, ...]
    k: int

    def __post_init__(self):
        if len(self.multipliers) != self.points.n:
            raise DimensionMismatchError("need one multiplier per point")
        if not 1 <= self.k <= self.points.n:
            raise InvalidParamsError("dimension must satisfy 1 <= k <= n")
        for v in self.multipliers:
            if self.ctx.is_zero(v):
                raise ZeroMultiplierError("column multipliers must be nonzero")


def generator_matrix(code: EvalCode) -> MatrixFq:
    """k x n matrix whose row j evaluates the monomial x^{E[j]}."""
    ctx = code.ctx
    rows = []
    for e in code.exponents.exps:
        rows.append(tuple(fe_pow(ctx, t, e) for t in code.points.points))
    return matrix_from_rows(ctx, rows)


def encode(code: EvalCode, message: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
    """Evaluate the message polynomial sum(m_j * x^{E[j]}) at every point."""
    ctx = code.ctx
    if len(message) != code.k:
        raise DimensionMismatchError(f"message must have length {code.k}")
    out = []
    for t in code.points.points:
        acc = ctx.zero()
        for coeff, e in zip(message, code.exponents.exps):
            acc = ctx.add(acc, ctx.mul(coeff, fe_pow(ctx, t, e)))
        out.append(acc)
    return tuple(out)


def sumset(exponents: ExponentSet) -> ExponentSet:
    """The set {a + b : a, b in E} (a = b allowed), sorted increasing."""
    e = exponents.exps
    return ExponentSet(tuple(sorted({a + b for a in e for b in e})))


def is_arithmetic_progression(exponents: ExponentSet) -> bool:
    """Whether the exponents form an arithmetic progression.

    Sets of size 1 and 2 count as progressions.  Equivalent to the sumset
    having the minimum possible size 2k - 1.
    """
    e = exponents.exps
    if len(e) <= 2:
        return True
    step = e[1] - e[0]
    return all(b - a == step for a, b in zip(e, e[1:]))


def grs_generator(spec: GrsSpec) -> MatrixFq:
    """Generator matrix with entries v_i * alpha_i^j, j = 0..k-1."""
    ctx = spec.ctx
    rows = []
    for j in range(spec.k):
        rows.append(
            tuple(
                ctx.mul(v, fe_pow(ctx, a, j))
                for a, v in zip(spec.points.points, spec.multipliers)
            )
        )
    return matrix_from_rows(ctx, rows)
