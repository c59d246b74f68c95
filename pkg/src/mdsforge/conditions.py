"""Subset conditions on evaluation sets, counting oracles, bounds, search.

The central predicate: a point set T satisfies the order-r condition for
dimension k when every k-subset S of T has elementary symmetric value
e_r(S) different from a fixed target delta (default 0).  For r = 1 this
says all k-subset sums avoid delta.  Together with the exponent set
{0,...,k} minus {k-r}, the predicate is exactly equivalent to the
corresponding evaluation code being MDS: a k-subset with e_r(S) = 0 is the
root set of a monic polynomial whose x^(k-r) coefficient vanishes, i.e. of
a codeword supported off S, and conversely.

e_r values are maintained incrementally along the lexicographic subset
walk via the recurrence e_j <- e_j + alpha * e_{j-1}, so each extension
costs O(r) field operations.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence, Union

from .errors import (
    CharacteristicDividesKError,
    InfeasibleError,
    InvalidParamsError,
    TooLargeError,
)
from .field import ENUMERATION_GUARD, FieldContext, FieldElement

SUBSET_GUARD = 10**7

#: subset_sum_counts builds a (k+1) x q table, so refuse huge fields.
DP_FIELD_GUARD = 1 << 16


@dataclass(frozen=True)
class ConditionSpec:
    """Which subsets to test (size k), which e_r, and the forbidden value.

    ``delta`` is a field element; None means the zero of whatever field the
    check runs in.
    """

    k: int
    r: int = 1
    delta: Optional[FieldElement] = None

    def __post_init__(self):
        if self.k < 1:
            raise InvalidParamsError("k must be >= 1")
        if not 1 <= self.r <= self.k:
            raise InvalidParamsError("r must satisfy 1 <= r <= k")


def esym_value(ctx: FieldContext, elems: Sequence[FieldElement], r: int) -> FieldElement:
    """e_r of a sequence of field elements (direct product expansion)."""
    if not 0 <= r <= len(elems):
        raise InvalidParamsError("need 0 <= r <= number of elements")
    e = [ctx.one()] + [ctx.zero()] * r
    top = 0
    for a in elems:
        top = min(top + 1, r)
        for j in range(top, 0, -1):
            e[j] = ctx.add(e[j], ctx.mul(a, e[j - 1]))
    return e[r]


def check_esym(
    ctx: FieldContext,
    points: Sequence[FieldElement],
    spec: ConditionSpec,
    guard: int = SUBSET_GUARD,
) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Test e_r(S) != delta for every k-subset S of the points.

    Returns (True, None) when the condition holds, else (False, w) where w
    is the lexicographically first violating subset, given as indices into
    the point sequence.  With fewer than k points there is nothing to test
    and the condition holds vacuously (matching the counting oracle).
    """
    n = len(points)
    k, r = spec.k, spec.r
    total = comb(n, k)
    if total > guard:
        raise InfeasibleError(f"C({n},{k}) = {total} exceeds subset guard {guard}")
    delta = spec.delta if spec.delta is not None else ctx.zero()
    if len(delta) != ctx.m:
        raise InvalidParamsError("delta has the wrong number of digits")
    pts = list(points)
    add, mul = ctx.add, ctx.mul
    witness: Optional[tuple[int, ...]] = None
    chosen: list[int] = []

    def extend(start: int, evec: list[FieldElement]) -> bool:
        """DFS in index order; True means a violation was found."""
        depth = len(chosen)
        if depth == k:
            return evec[r] == delta
        for i in range(start, n - (k - depth) + 1):
            a = pts[i]
            nxt = list(evec)
            for j in range(min(depth + 1, r), 0, -1):
                nxt[j] = add(nxt[j], mul(a, nxt[j - 1]))
            chosen.append(i)
            if extend(i + 1, nxt):
                return True
            chosen.pop()
        return False

    e0 = [ctx.one()] + [ctx.zero()] * r
    if extend(0, e0):
        witness = tuple(chosen)
        return (False, witness)
    return (True, None)


def subset_sum_counts(
    ctx: FieldContext,
    points: Sequence[FieldElement],
    k: int,
    guard: int = DP_FIELD_GUARD,
) -> list[list[int]]:
    """Table N with N[j][v] = number of j-subsets of the points summing to
    the field element with counter index v.

    Polynomial-size dynamic program; the independent oracle for the r = 1
    condition (the condition holds for target s iff N[k][index(s)] == 0).
    """
    if k < 0:
        raise InvalidParamsError("k must be >= 0")
    q, p, m = ctx.q, ctx.p, ctx.m
    if q > guard:
        raise TooLargeError(f"field of size {q} exceeds DP guard {guard}")
    table = [[0] * q for _ in range(k + 1)]
    table[0][0] = 1
    if m == 1:
        def add_index(x: int, y: int) -> int:
            return (x + y) % p
    else:
        def add_index(x: int, y: int) -> int:
            out, mult = 0, 1
            for _ in range(m):
                out += ((x + y) % p) * mult
                x //= p
                y //= p
                mult *= p
            return out

    processed = 0
    for t in points:
        t_idx = ctx.to_int(t)
        processed += 1
        for j in range(min(k, processed), 0, -1):
            prev, cur = table[j - 1], table[j]
            for s_idx, cnt in enumerate(prev):
                if cnt:
                    cur[add_index(s_idx, t_idx)] += cnt
    return table


def shift_transform(
    ctx: FieldContext,
    points: Sequence[FieldElement],
    delta: FieldElement,
    k: int,
) -> tuple[FieldElement, ...]:
    """Translate points so k-subset sums hitting delta become sums hitting 0.

    Subtracts delta / k from every point; requires the characteristic not to
    divide k.  Sends {S : sum(S) = delta} bijectively onto {S' : sum(S') = 0},
    so the maximum set sizes for the two problems coincide.
    """
    if k % ctx.p == 0:
        raise CharacteristicDividesKError(f"characteristic {ctx.p} divides k={k}")
    shift = ctx.mul(delta, ctx.inv(ctx.scalar(k)))
    return tuple(ctx.sub(t, shift) for t in points)


# ---------------------------------------------------------------------------
# Existence bounds


@dataclass(frozen=True)
class BoundQuery:
    """Parameters of a counting bound: field size q, length n, dimension k.

    ``max_exp`` is the largest exponent of the intended exponent set (only
    the general variant uses it).  ``variant`` selects which sufficient
    condition to evaluate.
    """

    q: int
    n: int
    k: int
    max_exp: Optional[int] = None
    variant: str = "general"

    def __post_init__(self):
        if self.variant not in ("general", "vieta"):
            raise InvalidParamsError(f"unknown bound variant {self.variant!r}")


def existence_bound(query: BoundQuery) -> tuple[bool, int, int]:
    """Evaluate a sufficient counting condition for a non-RS MDS code to exist.

    general: C(q, n) > ((q^k - 1)/(q - 1)) * C(max_exp, k) * C(q - k, n - k)
    vieta:   C(q, n) > C(q, k - 1) * C(q - k, n - k)

    Returns (holds, lhs, rhs) with exact integer sides.
    """
    q, n, k = query.q, query.n, query.k
    if k < 3 or 2 * k > n:
        raise InvalidParamsError("bounds require 3 <= k <= n/2")
    if n > q:
        raise InvalidParamsError("need n <= q")
    lhs = comb(q, n)
    if query.variant == "general":
        if query.max_exp is None or query.max_exp < k - 1:
            raise InvalidParamsError("general variant needs max_exp >= k - 1")
        rhs = ((q**k - 1) // (q - 1)) * comb(query.max_exp, k) * comb(q - k, n - k)
    else:
        rhs = comb(q, k - 1) * comb(q - k, n - k)
    return (lhs > rhs, lhs, rhs)


# ---------------------------------------------------------------------------
# Search strategies


@dataclass(frozen=True)
class ExhaustiveSearch:
    """Scan all n-subsets of the field in colex order; first hit wins."""

    guard: int = SUBSET_GUARD


@dataclass(frozen=True)
class RandomSearch:
    """Draw candidate subsets from a dedicated seeded generator."""

    seed: int
    max_attempts: int = 1000


@dataclass(frozen=True)
class GreedySearch:
    """Grow a set through the field in counter order, never backtracking."""


SearchStrategy = Union[ExhaustiveSearch, RandomSearch, GreedySearch]


def _colex_combinations(limit: int, size: int):
    """All size-subsets of range(limit), ordered by largest element first."""
    if size == 0:
        yield ()
        return
    for top in range(size - 1, limit):
        for rest in _colex_combinations(top, size - 1):
            yield rest + (top,)


def search_eval_set(
    ctx: FieldContext,
    n: int,
    spec: ConditionSpec,
    strategy: SearchStrategy,
) -> Optional[tuple[FieldElement, ...]]:
    """Find n distinct field elements satisfying the subset condition.

    Deterministic given the strategy parameters.  Returns None when the
    strategy exhausts its budget without a hit (for the exhaustive strategy
    that is a proof that no such set exists).
    """
    q = ctx.q
    if not 1 <= n <= q:
        raise InvalidParamsError(f"need 1 <= n <= q = {q}")
    if q > ENUMERATION_GUARD:
        raise TooLargeError(f"field of size {q} exceeds enumeration guard")

    if isinstance(strategy, ExhaustiveSearch):
        if comb(q, n) > strategy.guard:
            raise InfeasibleError(
                f"C({q},{n}) = {comb(q, n)} exceeds search guard {strategy.guard}"
            )
        for combo in _colex_combinations(q, n):
            pts = tuple(ctx.from_int(v) for v in combo)
            ok, _ = check_esym(ctx, pts, spec)
            if ok:
                return pts
        return None

    if isinstance(strategy, RandomSearch):
        rng = random.Random(strategy.seed)
        for _ in range(strategy.max_attempts):
            combo = sorted(rng.sample(range(q), n))
            pts = tuple(ctx.from_int(v) for v in combo)
            ok, _ = check_esym(ctx, pts, spec)
            if ok:
                return pts
        return None

    if isinstance(strategy, GreedySearch):
        delta = spec.delta if spec.delta is not None else ctx.zero()
        chosen: list[FieldElement] = []
        k, r = spec.k, spec.r
        for v in range(q):
            cand = ctx.from_int(v)
            if len(chosen) + 1 >= k:
                conflict = any(
                    esym_value(ctx, [chosen[i] for i in rest] + [cand], r) == delta
                    for rest in itertools.combinations(range(len(chosen)), k - 1)
                )
                if conflict:
                    continue
            chosen.append(cand)
            if len(chosen) == n:
                return tuple(chosen)
        return None

    raise InvalidParamsError(f"unknown search strategy {strategy!r}")
