"""Exact integer arithmetic: factorization, primality, square classes.

Everything here works on plain Python ints (arbitrary precision) and
``fractions.Fraction``.  All values are immutable and all functions pure.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction


class ArithDomainError(ValueError):
    """Raised when an argument is outside a function's domain (e.g. zero)."""


# Deterministic Miller-Rabin witness set for n < 2^64 (Sinclair's bases).
_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_LIMIT = 10**6

_rng = random.Random(0x5EED)


def _miller_rabin_witness(n: int, a: int) -> bool:
    """True if a witnesses the compositeness of odd n > 2."""
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_probable_prime(n: int) -> bool:
    """Primality test: deterministic below 2^64, error < 2^-128 above."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < 2**64:
        bases = _MR_BASES_64
    else:
        bases = tuple(_rng.randrange(2, n - 1) for _ in range(64))
    return not any(_miller_rabin_witness(n, a) for a in bases)


def _pollard_brent(n: int) -> int:
    """Brent-cycle Pollard rho; returns a nontrivial factor of composite n."""
    if n % 2 == 0:
        return 2
    while True:
        y = _rng.randrange(1, n)
        c = _rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
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
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}.

    Trial division up to 10^6, then Pollard rho with Brent cycle detection
    on whatever remains.
    """
    if n < 1:
        raise ArithDomainError(f"factorize requires n >= 1, got {n}")
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    # wheel over 6k+-1
    p = 7
    step = 4
    while p <= _TRIAL_LIMIT and p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_brent(m)
        stack.append(d)
        stack.append(m // d)
    return dict(sorted(factors.items()))


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    return math.isqrt(n) ** 2 == n


@dataclass(frozen=True)
class SquareClass:
    """An element of Q*/(Q*)^2, represented by a squarefree nonzero integer."""

    rep: int

    def __post_init__(self):
        if self.rep == 0:
            raise ArithDomainError("square class representative must be nonzero")

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        return square_class_mul(self, other)


def _squarefree_part(n: int) -> int:
    """Squarefree kernel of a nonzero integer, sign preserved."""
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    for p, e in factorize(n).items():
        if e % 2:
            out *= p
    return sign * out


def squarefree_kernel(q) -> SquareClass:
    """The unique squarefree s with q = s * (rational square).

    Accepts ints, Fractions, or anything Fraction() takes.  A rational a/b
    is reduced to the integer a*b, which is congruent to it mod squares.
    """
    q = Fraction(q)
    if q == 0:
        raise ArithDomainError("zero has no square class")
    return SquareClass(_squarefree_part(q.numerator * q.denominator))


def square_class_mul(a: SquareClass, b: SquareClass) -> SquareClass:
    n = a.rep * b.rep
    g = math.gcd(a.rep, b.rep)
    # n = (n/g^2) * g^2 and n/g^2 is squarefree when a.rep, b.rep are
    return SquareClass(n // (g * g))


def squarefree_divisors(n: int) -> list[int]:
    """Positive squarefree divisors of |n|, sorted ascending."""
    if n == 0:
        raise ArithDomainError("zero has no divisors")
    primes = list(factorize(abs(n)))
    divs = [1]
    for p in primes:
        divs += [d * p for d in divs]
    return sorted(divs)
