"""Exact arithmetic in GF(p^m), built as Z_p[x] modulo a monic irreducible.

Elements are little-endian digit vectors: ``(d0, d1, ..., d_{m-1})`` stands
for ``d0 + d1*z + ... + d_{m-1}*z^(m-1)`` where ``z`` is the residue class
of x.  Two elements are equal exactly when their digit tuples are equal, so
plain tuples double as hashable, canonical element values.  All arithmetic
goes through a :class:`FieldContext`; the tuples themselves carry no
behaviour.

``make_field(p, m)`` picks the modulus deterministically: the candidate
coefficient vectors are read as base-p counters (constant digit least
significant) and the first irreducible one wins.  Rebuilding a field with
the same (p, m) therefore always yields the same labels for every element.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import NotPrimeError, TooLargeError

FieldElement = tuple[int, ...]

#: Full-field enumeration refuses to run past this many elements unless the
#: caller raises the guard explicitly.
ENUMERATION_GUARD = 1 << 24

# Caches of multiplication/inversion results are capped so a long-running
# process over a big field cannot grow them without bound.
_CACHE_CAP = 1 << 20


def is_prime(n: int) -> bool:
    """Trial-division primality test; adequate for desk-scale moduli."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# Dense polynomial helpers over Z_p (little-endian coefficient lists).
# Only used while selecting/validating moduli, so clarity beats speed here.


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_divmod_rem(out, mod, p)


def _poly_divmod_rem(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    rem = [c % p for c in a]
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    for i in range(len(rem) - 1, dm - 1, -1):
        c = rem[i]
        if c:
            factor = (c * inv_lead) % p
            for j, mj in enumerate(mod):
                rem[i - dm + j] = (rem[i - dm + j] - factor * mj) % p
    del rem[dm:]
    return _poly_trim(rem)


def _poly_powmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    acc = _poly_divmod_rem(list(base), mod, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, acc, mod, p)
        acc = _poly_mulmod(acc, acc, mod, p)
        e >>= 1
    return result


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_divmod_rem(a, b, p)
    return a


def _minus_x(poly: Sequence[int], p: int) -> list[int]:
    diff = list(poly)
    while len(diff) < 2:
        diff.append(0)
    diff[1] = (diff[1] - 1) % p
    return _poly_trim(diff)


def poly_is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Whether a monic polynomial over Z_p is irreducible.

    Uses the classic probe: f of degree m is irreducible iff
    x^(p^m) == x (mod f) and gcd(x^(p^(m/d)) - x, f) = 1 for every prime
    divisor d of m.
    """
    m = len(coeffs) - 1
    if m < 1 or coeffs[-1] % p != 1:
        return False
    if m == 1:
        return True
    mod = [c % p for c in coeffs]
    if mod[0] == 0:  # divisible by x
        return False
    x = [0, 1]
    if _minus_x(_poly_powmod(x, p**m, mod, p), p):
        return False
    for d in _prime_divisors(m):
        diff = _minus_x(_poly_powmod(x, p ** (m // d), mod, p), p)
        g = _poly_gcd(diff, mod, p)
        if len(g) > 1:
            return False
    return True


def _prime_divisors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """First irreducible monic degree-m polynomial in base-p counter order."""
    if m == 1:
        return (0, 1)
    for v in range(p**m):
        coeffs = []
        t = v
        for _ in range(m):
            coeffs.append(t % p)
            t //= p
        coeffs.append(1)
        if poly_is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError(f"no irreducible degree-{m} polynomial over Z_{p} found")


class FieldContext:
    """Immutable handle for one concrete GF(p^m).

    Holds the characteristic, extension degree, modulus and everything
    precomputed for fast reduction.  Instances may be shared freely across
    threads; the internal result caches only ever gain entries.
    """

    __slots__ = ("p", "m", "q", "modulus", "_xpow", "_mul_cache", "_inv_cache")

    def __init__(self, p: int, m: int, modulus: Sequence[int]):
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        mod = tuple(int(c) % p for c in modulus[:-1]) + (int(modulus[-1]),)
        if len(mod) != m + 1 or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        if m > 1 and not poly_is_irreducible(mod, p):
            raise ValueError("modulus is reducible")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = mod
        # Reduction rows: digit vector of z^i for i = m .. 2m-2.
        xpow: list[tuple[int, ...]] = []
        if m > 1:
            cur = tuple((-c) % p for c in mod[:m])  # z^m
            xpow.append(cur)
            for _ in range(m - 2):
                shifted = (0,) + cur[: m - 1]
                head = cur[m - 1]
                if head:
                    red = xpow[0]
                    cur = tuple((s + head * r) % p for s, r in zip(shifted, red))
                else:
                    cur = shifted
                xpow.append(cur)
        self._xpow = tuple(xpow)
        self._mul_cache: dict = {}
        self._inv_cache: dict = {}

    # -- identities and coercions ------------------------------------------

    def zero(self) -> FieldElement:
        return (0,) * self.m

    def one(self) -> FieldElement:
        return (1,) + (0,) * (self.m - 1)

    def scalar(self, c: int) -> FieldElement:
        """The prime-subfield element c (an integer taken mod p)."""
        return (c % self.p,) + (0,) * (self.m - 1)

    def element(self, digits: Iterable[int]) -> FieldElement:
        d = tuple(int(x) % self.p for x in digits)
        if len(d) != self.m:
            raise ValueError(f"expected {self.m} digits, got {len(d)}")
        return d

    def from_int(self, v: int) -> FieldElement:
        """Inverse of :meth:`to_int`: base-p digits of v, low digit first."""
        if not 0 <= v < self.q:
            raise ValueError(f"counter value {v} outside [0, {self.q})")
        out = []
        for _ in range(self.m):
            out.append(v % self.p)
            v //= self.p
        return tuple(out)

    def to_int(self, a: FieldElement) -> int:
        v = 0
        for d in reversed(a):
            v = v * self.p + d
        return v

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p = self.p
        if self.m == 1:
            return ((a[0] + b[0]) % p,)
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a: FieldElement) -> FieldElement:
        p = self.p
        return tuple((-x) % p for x in a)

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p = self.p
        if self.m == 1:
            return ((a[0] - b[0]) % p,)
        return tuple((x - y) % p for x, y in zip(a, b))

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p = self.p
        m = self.m
        if m == 1:
            return ((a[0] * b[0]) % p,)
        key = (a, b) if a <= b else (b, a)
        cached = self._mul_cache.get(key)
        if cached is not None:
            return cached
        conv = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        out = conv[:m]
        for i in range(m, 2 * m - 1):
            c = conv[i]
            if c:
                red = self._xpow[i - m]
                for j in range(m):
                    out[j] += c * red[j]
        res = tuple(c % p for c in out)
        if len(self._mul_cache) < _CACHE_CAP:
            self._mul_cache[key] = res
        return res

    def inv(self, a: FieldElement) -> FieldElement:
        if self.m == 1:
            if a[0] == 0:
                raise ZeroDivisionError("inverse of zero")
            return (pow(a[0], self.p - 2, self.p),)
        cached = self._inv_cache.get(a)
        if cached is not None:
            return cached
        if not any(a):
            raise ZeroDivisionError("inverse of zero")
        res = self.pow(a, self.q - 2)
        if len(self._inv_cache) < _CACHE_CAP:
            self._inv_cache[a] = res
        return res

    def div(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.mul(a, self.inv(b))

    def pow(self, a: FieldElement, e: int) -> FieldElement:
        """a**e by literal square-and-multiply; 0**0 is defined as 1."""
        if e < 0:
            raise ValueError("exponent must be >= 0")
        if e == 0:
            return self.one()
        if not any(a):
            return self.zero()
        acc = self.one()
        base = a
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base) if e > 1 else base
            e >>= 1
        return acc

    def is_zero(self, a: FieldElement) -> bool:
        return not any(a)

    # -- misc ----------------------------------------------------------------

    def elements(self, guard: int = ENUMERATION_GUARD) -> list[FieldElement]:
        if self.q > guard:
            raise TooLargeError(f"field of size {self.q} exceeds enumeration guard {guard}")
        return [self.from_int(v) for v in range(self.q)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldContext)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"FieldContext(p={self.p}, m={self.m}, modulus={list(self.modulus)})"


def make_field(p: int, m: int = 1) -> FieldContext:
    """Build GF(p^m) with the canonical (counter-order smallest) modulus."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    return FieldContext(p, m, _smallest_irreducible(p, m))


def fe_pow(ctx: FieldContext, a: FieldElement, e: int) -> FieldElement:
    """Literal e-th power of a (no exponent reduction; 0**0 = 1)."""
    return ctx.pow(a, e)


def enumerate_field(ctx: FieldContext, guard: int = ENUMERATION_GUARD) -> list[FieldElement]:
    """All q elements in base-p counter order (digit 0 least significant)."""
    return ctx.elements(guard)
