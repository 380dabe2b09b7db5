"""Exact scalars and integer factorization.

Rationals are plain :class:`fractions.Fraction` values: always reduced,
denominator positive, immutable.  Division by zero raises
:class:`ZeroDivisionError`.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from gmpy2 import mpz

RationalLike = Union[int, str, Fraction]

TRIAL_LIMIT = 10**6
_BLOCK = 512
RHO_BUDGET = 10_000

__all__ = [
    "Fraction",
    "Factorization",
    "as_rational",
    "format_rational",
    "is_prime",
    "factorize",
]


def as_rational(value: RationalLike) -> Fraction:
    """Parse ``value`` (int, Fraction, or a string like ``"-3/2"``) exactly.

    Floats are refused since they would silently lose exactness.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {value!r}") from exc
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@lru_cache(maxsize=None)
def _small_primes(limit: int = TRIAL_LIMIT) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


@lru_cache(maxsize=None)
def _prime_blocks() -> tuple[tuple[int, tuple[int, ...]], ...]:
    # products of consecutive primes, so one gcd screens a whole block
    primes = _small_primes()
    blocks = []
    for i in range(0, len(primes), _BLOCK):
        chunk = primes[i : i + _BLOCK]
        blocks.append((math.prod(chunk), chunk))
    return tuple(blocks)


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# the bases above are a proof of primality below this bound
_MR_DETERMINISTIC_BOUND = 3317044064679887385961981


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n: int) -> bool:
    """Strong Lucas test with Selfridge's parameter choice (method A)."""
    if math.isqrt(n) ** 2 == n:
        return False
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    inv2 = pow(2, -1, n)
    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = (P * U + V) * inv2 % n, (D * U + P * V) * inv2 % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        if V == 0:
            return True
        Qk = Qk * Qk % n
    return False


def is_prime(n: int) -> bool:
    """Primality test.

    Proven correct below about 3.3e24 (Miller-Rabin on the first 13 prime
    bases); above that, Baillie-PSW, which has no known counterexample.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if not all(_strong_probable_prime(n, a) for a in _MR_BASES):
        return False
    if n < _MR_DETERMINISTIC_BOUND:
        return True
    return _strong_lucas_probable_prime(n)


def _brent(n: int, rng: random.Random, budget: int) -> int | None:
    """Brent's variant of Pollard's rho.

    Returns a nontrivial factor of the odd composite ``n``, or ``None`` once
    about ``budget`` iterations have been spent without success.
    """
    spent = 0
    while spent < budget:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g, r, q = 1, 1, 1
        x = ys = y
        while g == 1 and spent < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            spent += 2 * r
            r *= 2
        if g == 1:
            return None
        if g == n:
            # the batched product overshot; redo this batch one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    return None


def _xdbl(X: int, Z: int, a24: int, n: int) -> tuple[int, int]:
    s, d = (X + Z) ** 2 % n, (X - Z) ** 2 % n
    t = s - d
    return s * d % n, t * (d + a24 * t) % n


def _xadd(XP: int, ZP: int, XQ: int, ZQ: int, Xd: int, Zd: int, n: int) -> tuple[int, int]:
    u = (XP - ZP) * (XQ + ZQ)
    v = (XP + ZP) * (XQ - ZQ)
    return Zd * (u + v) ** 2 % n, Xd * (u - v) ** 2 % n


def _ladder(k: int, X: int, Z: int, a24: int, n: int) -> tuple[int, int]:
    """Montgomery ladder for ``k * (X:Z)``; the curve formulas are inlined."""
    if k == 1:
        return X, Z
    s, d = (X + Z) ** 2 % n, (X - Z) ** 2 % n
    t = s - d
    X0, Z0, X1, Z1 = X, Z, s * d % n, t * (d + a24 * t) % n
    for bit in bin(k)[3:]:
        u = (X1 - Z1) * (X0 + Z0)
        v = (X1 + Z1) * (X0 - Z0)
        Xa, Za = Z * (u + v) ** 2 % n, X * (u - v) ** 2 % n
        if bit == "1":
            s, d = (X1 + Z1) ** 2 % n, (X1 - Z1) ** 2 % n
            t = s - d
            X0, Z0, X1, Z1 = Xa, Za, s * d % n, t * (d + a24 * t) % n
        else:
            s, d = (X0 + Z0) ** 2 % n, (X0 - Z0) ** 2 % n
            t = s - d
            X0, Z0, X1, Z1 = s * d % n, t * (d + a24 * t) % n, Xa, Za
    return X0, Z0


_STAGE2_D = 210


def _ecm_curve(n: int, sigma: int, B1: int, B2: int) -> int:
    """One Montgomery-curve ECM trial (Suyama parametrization).

    Returns gcd found; 1 means the curve failed, ``n`` means it found
    every factor at once.
    """
    u, v = (sigma * sigma - 5) % n, 4 * sigma % n
    X, Z = pow(u, 3, n), pow(v, 3, n)
    den = 16 * pow(u, 3, n) * v % n
    g = math.gcd(den, n)
    if g != 1:
        return g
    a24 = pow(v - u, 3, n) * (3 * u + v) * pow(den, -1, n) % n

    for p in _small_primes():
        if p > B1:
            break
        pk = p
        while pk * p <= B1:
            pk *= p
        X, Z = _ladder(pk, X, Z, a24, n)
    g = math.gcd(Z, n)
    if g != 1:
        return g

    # stage 2: primes q = m*D +/- j in (B1, B2], gcd(j, D) = 1
    D = _STAGE2_D
    multiples = {1: (X, Z), 2: _xdbl(X, Z, a24, n)}
    for j in range(3, D // 2 + 1):
        multiples[j] = _xadd(*multiples[j - 1], X, Z, *multiples[j - 2], n)
    step = multiples[D // 2]
    step = _xdbl(*step, a24, n)
    m = max(1, B1 // D)
    prev = _ladder((m - 1) * D, X, Z, a24, n) if m > 1 else None
    cur = _ladder(m * D, X, Z, a24, n)
    acc = 1
    for pairs in _stage2_plan(B1, B2, m):
        Xr, Zr = cur
        for j in pairs:
            Xj, Zj = multiples[j]
            acc = acc * (Xr * Zj - Xj * Zr) % n
        if prev is None:
            nxt = _xdbl(*cur, a24, n)
        else:
            nxt = _xadd(*cur, *step, *prev, n)
        prev, cur = cur, nxt
    return math.gcd(acc, n)


@lru_cache(maxsize=None)
def _stage2_plan(B1: int, B2: int, m0: int) -> tuple[tuple[int, ...], ...]:
    # for each giant step m, the baby offsets j with m*D - j or m*D + j prime
    D = _STAGE2_D
    primes = set(p for p in _small_primes() if B1 < p <= B2) if B2 <= TRIAL_LIMIT else None
    plan = []
    m = m0
    while m * D - D // 2 <= B2:
        row = []
        for j in range(1, D // 2 + 1, 2):
            if math.gcd(j, D) != 1:
                continue
            if primes is None or (m * D - j) in primes or (m * D + j) in primes:
                row.append(j)
        plan.append(tuple(row))
        m += 1
    return tuple(plan)


# (B1, curves) stages; the last one repeats with growing B1
_ECM_SCHEDULE = ((400, 6), (2000, 25), (11000, 90))


def _ecm(n: int, rng: random.Random) -> int:
    B1 = 0
    for B1, curves in _ECM_SCHEDULE:
        for _ in range(curves):
            g = _ecm_curve(n, rng.randrange(6, n - 1), B1, 100 * B1)
            if 1 < g < n:
                return g
    while True:
        B1 *= 4
        g = _ecm_curve(n, rng.randrange(6, n - 1), B1, 100 * B1)
        if 1 < g < n:
            return g


def _split(n: int, rng: random.Random) -> int:
    """Nontrivial factor of the odd composite ``n`` (not a perfect square)."""
    # mpz roughly halves the cost of the modular arithmetic in both loops
    d = _brent(mpz(n), rng, RHO_BUDGET)
    if d is None:
        d = _ecm(mpz(n), rng)
    return int(d)


@dataclass(frozen=True)
class Factorization:
    """Signed prime factorization ``sign * prod(p**e)``."""

    sign: int
    factors: tuple[tuple[int, int], ...] = ()

    def value(self) -> int:
        return self.sign * math.prod(p**e for p, e in self.factors)

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        if not self.factors:
            return "1" if self.sign > 0 else "-1"
        body = " · ".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors)
        return body if self.sign > 0 else "-" + body


def _collect(primes: Iterable[int]) -> tuple[tuple[int, int], ...]:
    counts: dict[int, int] = {}
    for p in primes:
        counts[p] = counts.get(p, 0) + 1
    return tuple(sorted(counts.items()))


def factorize(n: int, seed: int = 0) -> Factorization:
    """Factor an integer into primes.

    Trial division over primes below ``TRIAL_LIMIT`` (screened blockwise by
    gcd), then Brent's variant of Pollard's rho with a fixed iteration
    budget, then elliptic-curve factoring for cofactors that rho could not
    split cheaply.  ``seed`` fixes the random walks and curves so runs are
    reproducible; the result does not depend on it.

    >>> str(factorize(12))
    '2^2 · 3'
    >>> str(factorize(-1))
    '-1'
    """
    n = int(n)
    if n == 0:
        return Factorization(0)
    sign = 1 if n > 0 else -1
    n = abs(n)
    found: list[int] = []

    for block, chunk in _prime_blocks():
        if n == 1 or chunk[0] * chunk[0] > n:
            break
        if math.gcd(n, block) == 1:
            continue
        for p in chunk:
            while n % p == 0:
                n //= p
                found.append(p)

    if n > 1:
        rng = random.Random(seed)
        stack = [n]
        while stack:
            m = stack.pop()
            if is_prime(m):
                found.append(m)
                continue
            r = math.isqrt(m)
            if r * r == m:
                stack += [r, r]
                continue
            d = _split(m, rng)
            stack += [d, m // d]
    return Factorization(sign, _collect(found))
