"""Lehmer pairs, Lehmer numbers and primitive divisors.

A Lehmer pair (alpha, beta) is described by its parameter (a, c) with
a = (alpha + beta)^2, b = alpha*beta = (a - c)/4 and c = (alpha - beta)^2.
Lehmer numbers are computed straight from (a, b) by an integer recurrence,
so no radicals are ever formed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from math import factorial, prod

from sympy import factorint

from rnkit.arith import gcd


class InvalidLehmerParams(ValueError):
    pass


@dataclass(frozen=True)
class LehmerParams:
    a: int
    c: int

    def __post_init__(self):
        problem = lehmer_params_problem(self.a, self.c)
        if problem:
            raise InvalidLehmerParams(f"(a, c) = ({self.a}, {self.c}): {problem}")

    @property
    def b(self) -> int:
        return (self.a - self.c) // 4


def lehmer_params_problem(a: int, c: int) -> str | None:
    """Why (a, c) is not a normalized Lehmer parameter, or None if it is."""
    if a <= 0:
        return "a must be positive"
    if c == 0:
        return "c must be nonzero"
    if (a - c) % 4:
        return "a and c must agree mod 4"
    b = (a - c) // 4
    if b == 0:
        return "b = (a - c)/4 must be nonzero"
    if gcd(a, b) != 1:
        return "a and b must be coprime"
    # alpha/beta + beta/alpha = (a - 2b)/b; it is a root of unity exactly
    # when that value lies in {-2, -1, 0, 1, 2}, i.e. a in {0, b, 2b, 3b, 4b}
    if a in (b, 2 * b, 3 * b):
        return "alpha/beta is a root of unity"
    return None


def is_valid_params(a: int, c: int) -> bool:
    return lehmer_params_problem(a, c) is None


def normalize(a: int, c: int) -> tuple[int, int]:
    """Representative with a > 0 of the class {(a, c), (-a, -c)}.

    Multiplying alpha and beta by a unit in {+-1, +-sqrt(-1)} sends (a, c)
    to +-(a, c), so this is the equivalence used by the defective table.
    """
    return (-a, -c) if a < 0 else (a, c)


def lehmer_sequence(p: LehmerParams, k: int) -> list[int]:
    """[L_1, ..., L_k]."""
    if k < 1:
        raise ValueError("k must be >= 1")
    a, b = p.a, p.b
    seq = [1, 1]
    for i in range(3, k + 1):
        if i % 2:
            seq.append(a * seq[-1] - b * seq[-2])
        else:
            seq.append(seq[-1] - b * seq[-2])
    return seq[:k]


def lehmer_number(p: LehmerParams, k: int) -> int:
    return lehmer_sequence(p, k)[-1]


def expansion_coeff(k: int, i: int) -> int:
    """(k-i-1)! * k / ((k-2i)! * i!), the coefficient of the power-sum expansion."""
    if k < 1 or not 0 <= i <= k // 2:
        raise ValueError(f"need 0 <= i <= k/2, got k={k}, i={i}")
    if i == 0:
        return 1
    num = factorial(k - i - 1) * k
    den = factorial(k - 2 * i) * factorial(i)
    q, r = divmod(num, den)
    assert r == 0
    return q


def power_sum(s: int, q: int, k: int) -> int:
    """alpha^k + beta^k where alpha + beta = s and alpha*beta = q."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return sum(
        (-1) ** i * expansion_coeff(k, i) * s ** (k - 2 * i) * q**i for i in range(k // 2 + 1)
    )


def _primitive_part(p: LehmerParams, k: int) -> int:
    # strip from |L_k| every prime that divides a*c*L_1*...*L_{k-1}
    seq = lehmer_sequence(p, k)
    rest = abs(seq[-1])
    older = abs(p.a * p.c * prod(seq[:-1]))
    while (g := gcd(rest, older)) > 1:
        while rest % g == 0:
            rest //= g
    return rest


def has_primitive_divisor(p: LehmerParams, k: int, witness: bool = True) -> tuple[bool, int | None]:
    """Does L_k(alpha, beta) have a primitive divisor?

    Returns ``(answer, q)`` where q is the smallest primitive prime divisor
    when ``witness`` is set and the answer is yes. The yes/no answer itself
    needs no factorization.
    """
    if k <= 1:
        raise ValueError("primitive divisors are defined for k > 1")
    rest = _primitive_part(p, k)
    if rest == 1:
        return False, None
    if not witness:
        return True, None
    return True, min(factorint(rest))


def is_defective(a: int, c: int, k: int) -> bool:
    return not has_primitive_divisor(LehmerParams(a, c), k, witness=False)[0]


@dataclass(frozen=True)
class DefectiveEntry:
    k: int
    a: int
    c: int

    @property
    def valid(self) -> bool:
        return is_valid_params(self.a, self.c)


@lru_cache(maxsize=1)
def _table() -> tuple[DefectiveEntry, ...]:
    text = resources.files("rnkit").joinpath("data/defective_lehmer.txt").read_text()
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            k, a, c = map(int, line.split())
            rows.append(DefectiveEntry(k, a, c))
    return tuple(rows)


def all_defective_entries() -> tuple[DefectiveEntry, ...]:
    return _table()


def defective_table(k: int) -> list[DefectiveEntry]:
    """Parameters of k-defective Lehmer pairs for odd 6 < k <= 30."""
    if k % 2 == 0 or not 6 < k <= 30:
        raise ValueError("defective table covers odd k with 6 < k <= 30")
    return [e for e in _table() if e.k == k]


def in_defective_table(a: int, c: int, k: int) -> bool:
    a, c = normalize(a, c)
    return any(e.a == a and e.c == c for e in _table() if e.k == k)


def valid_params_in_box(limit: int) -> list[tuple[int, int]]:
    """Normalized valid parameters with 0 < a <= limit and |c| <= limit."""
    return [
        (a, c)
        for a in range(1, limit + 1)
        for c in range(-limit, limit + 1)
        if is_valid_params(a, c)
    ]

