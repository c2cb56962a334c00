"""Exact integer primitives.

Everything here works on Python ints, so magnitudes are unbounded and
nothing is ever rounded.
"""

from __future__ import annotations

import math
from functools import lru_cache

from sympy import primerange


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def jacobi(a: int, b: int) -> int:
    """Jacobi symbol (a/b) for odd b >= 3."""
    if b < 3 or b % 2 == 0:
        raise ValueError(f"jacobi needs an odd modulus >= 3, got {b}")
    a %= b
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if b % 8 in (3, 5):
                result = -result
        a, b = b, a
        if a % 4 == 3 and b % 4 == 3:
            result = -result
        a %= b
    return result if b == 1 else 0


def isqrt(a: int) -> tuple[int, bool]:
    """Return ``(floor(sqrt(a)), a is a perfect square)``."""
    if a < 0:
        raise ValueError("isqrt of a negative number")
    r = math.isqrt(a)
    return r, r * r == a


def is_square(a: int) -> bool:
    return a >= 0 and isqrt(a)[1]


def iroot(a: int, n: int) -> tuple[int, bool]:
    """Integer n-th root of a >= 0 by Newton iteration: ``(floor, exact)``."""
    if a < 0:
        raise ValueError("iroot of a negative number")
    if n < 1:
        raise ValueError("root index must be positive")
    if a < 2 or n == 1:
        return a, True
    if n == 2:
        return isqrt(a)
    # start above the root; Newton then decreases monotonically
    x = 1 << -(-a.bit_length() // n)
    while True:
        y = ((n - 1) * x + a // x ** (n - 1)) // n
        if y >= x:
            break
        x = y
    return x, x**n == a


@lru_cache(maxsize=None)
def _primes_upto(n: int) -> tuple[int, ...]:
    return tuple(primerange(2, n + 1))


def perfect_power(a: int) -> tuple[int, int] | None:
    """Write a = base**exp with the largest possible exp >= 2, or return None."""
    if a < 2:
        raise ValueError("perfect_power needs a >= 2")
    for p in _primes_upto(a.bit_length()):
        r, exact = iroot(a, p)
        if exact:
            inner = perfect_power(r) if r >= 2 else None
            if inner is None:
                return r, p
            return inner[0], inner[1] * p
    return None


def power_representations(a: int) -> list[tuple[int, int]]:
    """All (y, n) with y**n == a, y > 1, n > 1, ordered by n."""
    pp = perfect_power(a)
    if pp is None:
        return []
    base, e = pp
    return [(base ** (e // d), d) for d in range(2, e + 1) if e % d == 0]


def val2(a: int) -> int:
    """2-adic valuation of a nonzero integer."""
    if a == 0:
        raise ValueError("val2(0) is undefined")
    return (a & -a).bit_length() - 1


def valuation(a: int, p: int) -> int:
    if a == 0:
        raise ValueError("valuation of 0 is undefined")
    e = 0
    while a % p == 0:
        a //= p
        e += 1
    return e


def log_exact(a: int, base: int) -> int | None:
    """Return e with base**e == a (e >= 0), by repeated exact division."""
    if a < 1 or base < 2:
        return None
    e = 0
    while a % base == 0:
        a //= base
        e += 1
    return e if a == 1 else None


def sqrt_mod_pow2(a: int, k: int) -> list[int]:
    """All x in [0, 2**k) with x*x == a (mod 2**k), for odd a and k >= 3.

    Empty unless a == 1 (mod 8); otherwise exactly four roots.
    """
    if a % 2 == 0 or k < 3:
        raise ValueError("need odd a and k >= 3")
    if a % 8 != 1:
        return []
    mod = 1 << k
    r = 1
    # lift a root mod 2**i to a root mod 2**(i+1)
    for i in range(3, k):
        if (r * r - a) % (1 << (i + 1)):
            r += 1 << (i - 1)
    half = mod >> 1
    return sorted({r % mod, -r % mod, (r + half) % mod, (-r + half) % mod})
