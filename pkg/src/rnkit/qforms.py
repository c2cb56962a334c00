"""Representations d1*X^2 + d2*Y^2 = 2^(Z+2) with gcd(X, Y) = 1.

Every solution is generated from the least one (smallest Z) by raising
(X1*sqrt(d1) + Y1*sqrt(-d2))/2 to a power t, odd when d1 > 1. Elements of
Q(sqrt(d1), sqrt(-d2)) are kept as exact integer 4-tuples.
"""

from __future__ import annotations

from dataclasses import dataclass

from rnkit.arith import gcd, isqrt, sqrt_mod_pow2

DEFAULT_Z_BOUND = 64


class InvalidInstance(ValueError):
    pass


class ConsistencyError(RuntimeError):
    """An internal invariant guaranteed by the theory was violated."""


@dataclass(frozen=True)
class QFInstance:
    d1: int
    d2: int

    def __post_init__(self):
        if self.d1 < 1 or self.d2 < 1:
            raise InvalidInstance(f"coefficients must be positive: ({self.d1}, {self.d2})")
        if self.d2 == 1:
            # sqrt(-1) is an extra unit and the expansion from the least solution breaks
            raise InvalidInstance("d2 must exceed 1")
        if self.d1 % 2 == 0 or self.d2 % 2 == 0:
            raise InvalidInstance(f"coefficients must be odd: ({self.d1}, {self.d2})")
        if gcd(self.d1, self.d2) != 1:
            raise InvalidInstance(f"coefficients must be coprime: ({self.d1}, {self.d2})")

    def value(self, x: int, y: int) -> int:
        return self.d1 * x * x + self.d2 * y * y

    def passes_mod8(self) -> bool:
        """Odd squares are 1 mod 8, so a solution forces d1 + d2 = 0 (mod 8)."""
        return (self.d1 + self.d2) % 8 == 0


@dataclass(frozen=True, order=True)
class QFSolution:
    x: int
    y: int
    z: int

    def check(self, q: QFInstance) -> bool:
        return (
            self.x >= 1
            and self.y >= 1
            and self.z >= 1
            and gcd(self.x, self.y) == 1
            and q.value(self.x, self.y) == 1 << (self.z + 2)
        )


@dataclass(frozen=True)
class LeastSolution:
    x1: int
    y1: int
    z1: int

    def as_solution(self) -> QFSolution:
        return QFSolution(self.x1, self.y1, self.z1)


# --- exact arithmetic in Z[s, w] / (s^2 - d1, w^2 + d2) -------------------

Quad = tuple[int, int, int, int]  # coefficients of 1, s, w, s*w


def _qmul(u: Quad, v: Quad, d1: int, d2: int) -> Quad:
    a0, a1, a2, a3 = u
    b0, b1, b2, b3 = v
    return (
        a0 * b0 + d1 * a1 * b1 - d2 * a2 * b2 - d1 * d2 * a3 * b3,
        a0 * b1 + a1 * b0 - d2 * (a2 * b3 + a3 * b2),
        a0 * b2 + a2 * b0 + d1 * (a1 * b3 + a3 * b1),
        a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
    )


def _qpow(u: Quad, t: int, d1: int, d2: int) -> Quad:
    result: Quad = (1, 0, 0, 0)
    while t:
        if t & 1:
            result = _qmul(result, u, d1, d2)
        u = _qmul(u, u, d1, d2)
        t >>= 1
    return result


def ring_power(q: QFInstance, x: int, y: int, t: int) -> tuple[int, int]:
    """(X, Y) with (X sqrt(d1) + Y sqrt(-d2))/2 = ((x sqrt(d1) + y sqrt(-d2))/2)^t.

    Signs are kept; for d1 > 1, t must be odd.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if q.d1 > 1 and t % 2 == 0:
        raise ValueError("t must be odd when d1 > 1")
    c0, c1, c2, c3 = _qpow((0, x, y, 0), t, q.d1, q.d2)
    if q.d1 == 1:
        # s = 1: collapse onto the basis 1, w
        c0, c1, c2, c3 = 0, c0 + c1, c2 + c3, 0
    if c0 or c3:
        raise ConsistencyError("odd power left the s/w coset")
    den = 1 << (t - 1)
    if c1 % den or c2 % den:
        raise ConsistencyError("power is not an algebraic integer of the expected shape")
    return c1 // den, c2 // den


# --- least solution --------------------------------------------------------


def _reduced_short_vectors(d1: int, d2: int, r: int, modulus: int) -> list[tuple[int, int]]:
    """Candidates for the minimum of d1 X^2 + d2 Y^2 on {X = rY mod modulus}."""

    def qv(v):
        return d1 * v[0] * v[0] + d2 * v[1] * v[1]

    def bl(u, v):
        return d1 * u[0] * v[0] + d2 * u[1] * v[1]

    u, v = (modulus, 0), (r, 1)
    while True:
        if qv(u) < qv(v):
            u, v = v, u
        nv = qv(v)
        mu = (2 * bl(u, v) + nv) // (2 * nv)
        u = (u[0] - mu * v[0], u[1] - mu * v[1])
        if qv(u) >= nv:
            break
    s = (u[0] + v[0], u[1] + v[1])
    d = (u[0] - v[0], u[1] - v[1])
    return [v, u, s, d]


def solutions_at(q: QFInstance, z: int) -> list[QFSolution]:
    """All positive primitive solutions with the given Z, via lattice reduction."""
    if z < 1:
        raise ValueError("z must be >= 1")
    if not q.passes_mod8():
        return []
    k = z + 2
    modulus = 1 << k
    target = (-q.d2 * pow(q.d1, -1, modulus)) % modulus
    found = set()
    for r in sqrt_mod_pow2(target, k):
        for x, y in _reduced_short_vectors(q.d1, q.d2, r, modulus):
            x, y = abs(x), abs(y)
            if x and y and gcd(x, y) == 1 and q.value(x, y) == modulus:
                found.add(QFSolution(x, y, z))
    return sorted(found)


def scan_solutions_at(q: QFInstance, z: int) -> list[QFSolution]:
    """Same as :func:`solutions_at` by exhaustive search over X."""
    target = 1 << (z + 2)
    out = []
    for x in range(1, isqrt(target // q.d1)[0] + 1):
        rest = target - q.d1 * x * x
        if rest <= 0 or rest % q.d2:
            continue
        y, exact = isqrt(rest // q.d2)
        if exact and gcd(x, y) == 1:
            out.append(QFSolution(x, y, z))
    return out


def scan_solutions(q: QFInstance, z_max: int) -> list[QFSolution]:
    """Exhaustive list of solutions with Z <= z_max (no structure used)."""
    return [s for z in range(1, z_max + 1) for s in scan_solutions_at(q, z)]


def least_solution(
    q: QFInstance, z_bound: int = DEFAULT_Z_BOUND, method: str = "lattice"
) -> LeastSolution | None:
    """Solution with minimal Z <= z_bound, or None if there is none in range.

    ``None`` only means "nothing up to z_bound"; it is never a proof of
    unsolvability (except through the mod 8 filter).
    """
    if z_bound < 1:
        raise ValueError("z_bound must be >= 1")
    if not q.passes_mod8():
        return None
    finder = {"lattice": solutions_at, "scan": scan_solutions_at}[method]
    for z in range(1, z_bound + 1):
        sols = finder(q, z)
        if len(sols) > 1:
            raise ConsistencyError(f"two solutions with Z = {z} for {q}: {sols}")
        if sols:
            s = sols[0]
            return LeastSolution(s.x, s.y, s.z)
    return None


def expand(q: QFInstance, least: LeastSolution, t: int) -> QFSolution:
    """The solution with Z = Z1 * t generated from the least solution."""
    x, y = ring_power(q, least.x1, least.y1, t)
    sol = QFSolution(abs(x), abs(y), least.z1 * t)
    if not sol.check(q):
        raise ConsistencyError(f"power {t} of {least} does not solve {q}")
    return sol


def expand_solutions(q: QFInstance, least: LeastSolution, t_max: int) -> list[tuple[int, QFSolution]]:
    """All (t, solution) for admissible t <= t_max (odd t when d1 > 1)."""
    if t_max < 1:
        raise ValueError("t_max must be >= 1")
    step = 2 if q.d1 > 1 else 1
    return [(t, expand(q, least, t)) for t in range(1, t_max + 1, step)]


def distinct_z_check(sols) -> bool:
    """True iff distinct solutions never share a Z value."""
    unique = set(sols)
    return len({s.z for s in unique}) == len(unique)


def composed_least(q: QFInstance, least: LeastSolution) -> LeastSolution:
    """Least solution of X^2 + d1*d2*Y^2 = 2^(Z+2) built from that of (d1, d2)."""
    if min(q.d1, q.d2) <= 1:
        raise ValueError("composition needs min(d1, d2) > 1")
    x, y, z = least.x1, least.y1, least.z1
    diff = abs(q.d1 * x * x - q.d2 * y * y)
    if diff % 2:
        raise ConsistencyError("d1 X1^2 - d2 Y1^2 must be even")
    out = LeastSolution(diff // 2, x * y, 2 * z)
    if not out.as_solution().check(QFInstance(1, q.d1 * q.d2)):
        raise ConsistencyError(f"composed {out} does not solve (1, {q.d1 * q.d2})")
    return out


def solve_one_coeff(D: int, z_bound: int = DEFAULT_Z_BOUND) -> list[tuple[int, int]]:
    """All (y, z), z <= z_bound, with 1 + D*y^2 = 2^(z+2)."""
    if D < 1 or D % 2 == 0:
        raise ValueError("D must be a positive odd integer")
    out = []
    for z in range(1, z_bound + 1):
        rest = (1 << (z + 2)) - 1
        if rest % D == 0:
            y, exact = isqrt(rest // D)
            if exact and y >= 1:
                out.append((y, z))
    return out
