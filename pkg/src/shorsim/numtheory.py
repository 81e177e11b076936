"""Arbitrary-precision number-theoretic primitives.

Everything in this module is pure and deterministic: gcd, modular
exponentiation, exact primality, prime factorization, multiplicative
order, and continued-fraction convergents. All functions accept plain
Python ints and never lose precision to floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


class NotCoprime(ValueError):
    """An operation required gcd(y, n) == 1 and it did not hold."""


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two nonnegative ints, not both zero."""
    if a < 0 or b < 0:
        raise ValueError("gcd arguments must be nonnegative")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def modpow(y: int, e: int, n: int) -> int:
    """y**e mod n by square-and-multiply; result in [0, n)."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    if n < 2:
        raise ValueError("modulus must be >= 2")
    return pow(y, e, n)


# Deterministic witness set: exact for every n below 3.3 * 10**24, far
# beyond the 10-digit inputs this package accepts.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Exact primality test (deterministic Miller-Rabin)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """Some nontrivial factor of an odd composite n. Deterministic sweep."""
    for c in range(1, 100):
        y = 2
        g = r = q = 1
        x = ys = y
        m = 128
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
            # backtrack one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"could not split {n}")


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((prime, multiplicity), ...), ascending."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    found: dict[int, int] = {}
    for p in (2, 3, 5, 7):
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
    f = 11
    while f <= 1000 and f * f <= n:
        while n % f == 0:
            found[f] = found.get(f, 0) + 1
            n //= f
        f += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        d = _pollard_brent(m)
        stack += [d, m // d]
    return tuple(sorted(found.items()))


@lru_cache(maxsize=4096)
def carmichael_lambda(n: int) -> int:
    """Exponent of the multiplicative group mod n (least universal order)."""
    if n < 1:
        raise ValueError("carmichael_lambda requires n >= 1")
    lam = 1
    for p, e in factorize(n):
        if p == 2:
            block = 1 if e == 1 else 2 if e == 2 else 1 << (e - 2)
        else:
            block = (p - 1) * p ** (e - 1)
        lam = lam * block // math.gcd(lam, block)
    return lam


def multiplicative_order(y: int, n: int, ceiling: int | None = None) -> int | None:
    """Least r >= 1 with y**r == 1 (mod n), or None when it exceeds `ceiling`.

    Computed exactly by reducing the group exponent lambda(n) one prime
    at a time, so even a rejected candidate costs only ~log(n) modular
    exponentiations rather than a walk of r multiplications.
    """
    if n < 2:
        raise ValueError("modulus must be >= 2")
    y %= n
    g = math.gcd(y, n)
    if g != 1:
        raise NotCoprime(f"gcd({y}, {n}) = {g}, order undefined")
    r = carmichael_lambda(n)
    for p, _ in factorize(r):
        while r % p == 0 and pow(y, r // p, n) == 1:
            r //= p
    if ceiling is not None and r > ceiling:
        return None
    return r


@dataclass(frozen=True)
class Convergent:
    """A continued-fraction convergent numerator/denominator, in lowest terms."""

    numerator: int
    denominator: int


def convergents(c: int, q: int, denom_bound: int) -> Convergent:
    """Largest-denominator convergent of c/q with denominator < denom_bound.

    c = 0 yields 0/1. The standard recurrence guarantees the result is in
    lowest terms.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    if not 0 <= c < q:
        raise ValueError("require 0 <= c < q")
    if denom_bound < 2:
        raise ValueError("denom_bound must be >= 2")
    h, h_prev = 1, 0
    k, k_prev = 0, 1
    best = Convergent(0, 1)
    a, b = c, q
    while b:
        t = a // b
        a, b = b, a - t * b
        h, h_prev = t * h + h_prev, h
        k, k_prev = t * k + k_prev, k
        if k >= denom_bound:
            break
        best = Convergent(h, k)
    return best
