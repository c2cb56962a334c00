"""Fibonacci and Lucas numbers, the equation u^2 - 5v^2 = +-4, and
perfect powers among F_k and L_k."""

from __future__ import annotations

from dataclasses import dataclass

from rnkit.arith import isqrt, perfect_power


@dataclass(frozen=True)
class FibLucasPair:
    k: int
    f: int
    l: int


def _fib_pair(k: int) -> tuple[int, int]:
    # fast doubling: returns (F_k, F_{k+1})
    if k == 0:
        return 0, 1
    a, b = _fib_pair(k >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if k & 1:
        return d, c + d
    return c, d


def fib_lucas(k: int) -> FibLucasPair:
    """F_k and L_k with F_0 = 0, F_1 = 1, L_0 = 2, L_1 = 1."""
    if k < 0:
        raise ValueError("index must be nonnegative")
    f, f1 = _fib_pair(k)
    return FibLucasPair(k, f, 2 * f1 - f)


def solve_pell5(bound: int) -> list[tuple[int, int, int, int]]:
    """Positive solutions (u, v) of u^2 - 5v^2 = +-4 with u <= bound.

    Each row is ``(u, v, k, sign)`` where (u, v) = (L_k, F_k) and
    ``sign`` is the right-hand side (+4 or -4).
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    rows = []
    k = 1
    while True:
        p = fib_lucas(k)
        if p.l > bound:
            break
        rows.append((p.l, p.f, k, p.l * p.l - 5 * p.f * p.f))
        k += 1
    return rows


def fib_lucas_powers(k_max: int) -> list[tuple[int, int, int, str]]:
    """All k <= k_max with F_k or L_k equal to z**n, z > 1, n > 1.

    Rows are ``(k, z, n, which)`` with ``which`` in {"F", "L"}; z**n is the
    maximal-exponent representation.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    hits = []
    for k in range(1, k_max + 1):
        p = fib_lucas(k)
        for which, value in (("F", p.f), ("L", p.l)):
            if value >= 2:
                pp = perfect_power(value)
                if pp is not None:
                    hits.append((k, pp[0], pp[1], which))
    return hits


def solve_pell5_scan(bound: int) -> list[tuple[int, int, int]]:
    """Brute-force (u, v, sign) over every u <= bound; no recurrence used."""
    out = []
    for u in range(1, bound + 1):
        for sign in (4, -4):
            rest = u * u - sign
            if rest > 0 and rest % 5 == 0:
                v = isqrt(rest // 5)
                if v[1]:
                    out.append((u, v[0], sign))
    return out
