"""Solutions of D1*x^2 + D2^m = 2^(n+2): brute-force oracle, structural
classification by parity of m, and the count verdicts."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from rnkit.arith import gcd, isqrt, log_exact
from rnkit.qforms import (
    DEFAULT_Z_BOUND,
    LeastSolution,
    QFInstance,
    expand,
    least_solution,
)

DEFAULT_N_MAX = 200

# Theorem B: the only instances with d1 > 1 and more than two solutions
THEOREM_B_EXCEPTIONS = {(3, 5): 4, (5, 3): 4, (13, 3): 3, (31, 97): 3}

# odd m, t > 1: (d1, d2) -> [(t, case, expected (x, m, n))]
ODD_M_TABLE = {
    (5, 3): [(9, "i", (19, 5, 9)), (5, "iv", (5, 1, 5)), (3, "x", (1, 3, 3))],
    (3, 5): [(7, "ii", (13, 1, 7)), (5, "vii", (1, 3, 5))],
    (13, 3): [(7, "iii", (71, 1, 14)), (3, "xi", (1, 5, 6))],
    (21, 11): [(5, "v", (79, 1, 15))],
    (3, 29): [(5, "vi", (209, 1, 15))],
    (11, 5): [(5, "viii", (19, 3, 10))],
}

# even m, t' > 1
EVEN_M_TABLE = {
    (7, 3): [(3, "i", (5, 4, 6))],
    (7, 5): [(3, "ii", (17, 2, 9))],
    (15, 7): [(3, "iii", (33, 2, 12))],
}

# the single family instance that keeps an even-m solution
FAMILY_EVEN_SURVIVOR = (31, 97)


class InvalidInstance(ValueError):
    pass


class NoLeastSolution(LookupError):
    """No least solution of the relevant quadratic equation within z_bound."""

    def __init__(self, d1: int, d2: int, z_bound: int):
        super().__init__(f"no solution of {d1}X^2 + {d2}Y^2 = 2^(Z+2) with Z <= {z_bound}")
        self.z_bound = z_bound


@dataclass(frozen=True)
class Instance:
    d1: int
    d2: int

    def __post_init__(self):
        for name in ("d1", "d2"):
            v = getattr(self, name)
            if v < 1 or v % 2 == 0:
                raise InvalidInstance(f"{name} must be a positive odd integer, got {v}")
        if self.d2 <= 1:
            raise InvalidInstance(f"d2 must exceed 1, got {self.d2}")
        if gcd(self.d1, self.d2) != 1:
            raise InvalidInstance(
                f"d1 and d2 must be coprime, gcd({self.d1}, {self.d2}) = {gcd(self.d1, self.d2)}"
            )

    @property
    def key(self) -> tuple[int, int]:
        return self.d1, self.d2


@dataclass(frozen=True)
class Solution:
    x: int
    m: int
    n: int

    def sort_key(self):
        return self.n, self.m, self.x

    def satisfies(self, inst: Instance) -> bool:
        return min(self.x, self.m, self.n) >= 1 and (
            inst.d1 * self.x * self.x + inst.d2**self.m == 1 << (self.n + 2)
        )

    def as_tuple(self) -> tuple[int, int, int]:
        return self.x, self.m, self.n


def brute_force(inst: Instance, n_max: int = DEFAULT_N_MAX) -> list[Solution]:
    """Every solution with n <= n_max, by testing each (n, m) for a square."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    d1, d2 = inst.d1, inst.d2
    out = []
    for n in range(1, n_max + 1):
        target = 1 << (n + 2)
        power, m = d2, 1
        while power < target:
            rest = target - power
            if rest % d1 == 0:
                x, exact = isqrt(rest // d1)
                if exact:
                    out.append(Solution(x, m, n))
            power *= d2
            m += 1
    return out


@dataclass
class ParityPart:
    """Structural solutions for one parity of m.

    ``coverage`` is the largest n for which the set is claimed complete;
    None means complete for every n.
    """

    parity: str
    solutions: dict[Solution, str] = field(default_factory=dict)
    least: LeastSolution | None = None
    coverage: int | None = None
    notes: list[str] = field(default_factory=list)
    discrepancies: list[str] = field(default_factory=list)


def family_params(inst: Instance, least: LeastSolution | None) -> tuple[int, int] | None:
    """(lambda, Z1) if d1 X1^2 = 2^Z1 - lambda and d2 = 3*2^Z1 + lambda with Y1 = 1."""
    if least is None or least.y1 != 1:
        return None
    lam = (1 << least.z1) - inst.d1 * least.x1 * least.x1
    if lam in (1, -1) and inst.d2 == 3 * (1 << least.z1) + lam:
        return lam, least.z1
    return None


def _from_power(
    inst: Instance, q: QFInstance, least: LeastSolution, t: int, m_offset: int
) -> Solution | None:
    sol = expand(q, least, t)
    e = log_exact(sol.y, inst.d2)
    if e is None:
        return None
    return Solution(sol.x, 2 * e + m_offset, sol.z)


def _apply_table(part, inst, q, least, table, m_offset, lemma):
    for t, case, expected in table.get(inst.key, []):
        sol = _from_power(inst, q, least, t, m_offset)
        label = f"{lemma}({case})"
        if sol is None:
            part.discrepancies.append(f"{label}: power t={t} of the least solution gives no solution")
            continue
        if sol.as_tuple() != expected:
            part.discrepancies.append(f"{label}: computed {sol.as_tuple()}, table lists {expected}")
        part.solutions.setdefault(sol, label)


def classify_odd_m(inst: Instance, z_bound: int = DEFAULT_Z_BOUND) -> ParityPart:
    """Solutions with odd m from the least solution of d1 X^2 + d2 Y^2 = 2^(Z+2)."""
    if inst.d1 <= 1:
        raise ValueError("structural classification needs d1 > 1")
    part = ParityPart("odd")
    q = QFInstance(inst.d1, inst.d2)
    if not q.passes_mod8():
        return part
    least = least_solution(q, z_bound)
    if least is None:
        raise NoLeastSolution(inst.d1, inst.d2, z_bound)
    part.least = least

    # t = 1: Y1 must be a power of d2
    e = log_exact(least.y1, inst.d2)
    if e is not None:
        part.solutions[Solution(least.x1, 2 * e + 1, least.z1)] = "3.1(xii)"

    fam = family_params(inst, least)
    if fam is not None:
        lam, z1 = fam
        sol = _from_power(inst, q, least, 3, 1)
        if sol is None:
            part.discrepancies.append("3.1(ix): cube of the least solution gives no solution")
        else:
            part.solutions.setdefault(sol, "3.1(ix)")
            minus_x = least.x1 * ((1 << (z1 + 1)) - lam)
            if minus_x != sol.x:
                part.notes.append(
                    f"3.1(ix) sign: x = X1(2^(Z1+1) + lambda) = {sol.x}, "
                    f"not X1(2^(Z1+1) - lambda) = {minus_x} (lambda={lam}, Z1={z1})"
                )

    _apply_table(part, inst, q, least, ODD_M_TABLE, 1, "3.1")
    return part


def classify_even_m(inst: Instance, z_bound: int = DEFAULT_Z_BOUND) -> ParityPart:
    """Solutions with even m from the least solution of d1 X^2 + d2^2 Y^2 = 2^(Z+2)."""
    if inst.d1 <= 1:
        raise ValueError("structural classification needs d1 > 1")
    part = ParityPart("even")
    q = QFInstance(inst.d1, inst.d2 * inst.d2)
    if not q.passes_mod8():
        return part

    odd_q = QFInstance(inst.d1, inst.d2)
    odd_least = least_solution(odd_q, z_bound) if odd_q.passes_mod8() else None
    if family_params(inst, odd_least) is not None and inst.key != FAMILY_EVEN_SURVIVOR:
        part.notes.append("4.5: family instance, no even-m solutions")
        return part

    least = least_solution(q, z_bound)
    if least is None:
        raise NoLeastSolution(q.d1, q.d2, z_bound)
    part.least = least

    e = log_exact(least.y1, inst.d2)
    if e is not None:
        part.solutions[Solution(least.x1, 2 * e + 2, least.z1)] = "3.3(iv)"

    _apply_table(part, inst, q, least, EVEN_M_TABLE, 2, "3.3")
    return part


def theorem_a_expected(d2: int) -> int | None:
    """Exact count for the exceptional d2 when d1 = 1, else None (count <= 1)."""
    if d2 == 7:
        return 6
    if d2 == 23:
        return 2
    r = log_exact(d2 + 1, 2)
    if r is not None and r > 3:
        return 2
    return None


@dataclass(frozen=True)
class ClassifiedSolution:
    solution: Solution
    case: str
    provenance: str  # "structural", "brute-force" or "both"


@dataclass
class Classification:
    instance: Instance
    n_max: int
    z_bound: int
    entries: list[ClassifiedSolution]
    family: tuple[int, int] | None = None
    least: LeastSolution | None = None
    least_even: LeastSolution | None = None
    notes: list[str] = field(default_factory=list)
    discrepancies: list[str] = field(default_factory=list)

    @property
    def solutions(self) -> list[Solution]:
        return [e.solution for e in self.entries]

    @property
    def count(self) -> int:
        return len(self.entries)

    @property
    def count_odd(self) -> int:
        return sum(1 for s in self.solutions if s.m % 2)

    @property
    def count_even(self) -> int:
        return self.count - self.count_odd

    @property
    def theorem_a_mode(self) -> bool:
        return self.instance.d1 == 1

    @property
    def theorem_a_exception(self) -> bool:
        return self.theorem_a_mode and theorem_a_expected(self.instance.d2) is not None

    @property
    def theorem_b_exception(self) -> bool:
        return not self.theorem_a_mode and self.instance.key in THEOREM_B_EXCEPTIONS

    @property
    def exception(self) -> bool:
        return self.theorem_a_exception or self.theorem_b_exception

    @property
    def consistent(self) -> bool:
        """Count agrees with Theorem A (d1 = 1) or Theorem B (d1 > 1)."""
        if self.theorem_a_mode:
            expected = theorem_a_expected(self.instance.d2)
            return self.count <= 1 if expected is None else self.count == expected
        expected = THEOREM_B_EXCEPTIONS.get(self.instance.key)
        return self.count <= 2 if expected is None else self.count == expected

    @property
    def has_discrepancy(self) -> bool:
        return bool(self.discrepancies)

    def case_of(self, sol: Solution) -> str:
        for e in self.entries:
            if e.solution == sol:
                return e.case
        raise KeyError(sol)


def _structural(inst: Instance, z_bound: int, fn) -> ParityPart:
    try:
        return fn(inst, z_bound)
    except NoLeastSolution as exc:
        part = ParityPart("odd" if fn is classify_odd_m else "even", coverage=z_bound)
        part.notes.append(f"{exc}; structural set covers n <= {z_bound} only")
        return part


def classify(
    inst: Instance, n_max: int = DEFAULT_N_MAX, z_bound: int = DEFAULT_Z_BOUND
) -> Classification:
    """Merge the structural classification with the brute-force oracle.

    Disagreements are reported in ``discrepancies``, never resolved.
    """
    oracle = brute_force(inst, n_max)
    if inst.d1 == 1:
        entries = [ClassifiedSolution(s, "brute-force-only", "brute-force") for s in oracle]
        return Classification(inst, n_max, z_bound, entries)

    odd = _structural(inst, z_bound, classify_odd_m)
    even = _structural(inst, z_bound, classify_even_m)
    result = Classification(
        inst,
        n_max,
        z_bound,
        [],
        family=family_params(inst, odd.least),
        least=odd.least,
        least_even=even.least,
    )
    result.notes += odd.notes + even.notes
    result.discrepancies += odd.discrepancies + even.discrepancies

    structural = {**odd.solutions, **even.solutions}
    oracle_set = set(oracle)
    for sol, case in structural.items():
        if not sol.satisfies(inst):
            result.discrepancies.append(f"structural {sol.as_tuple()} ({case}) does not satisfy the equation")
            continue
        if sol.n <= n_max and sol not in oracle_set:
            result.discrepancies.append(f"structural {sol.as_tuple()} ({case}) missed by brute force")
        prov = "both" if sol in oracle_set else "structural"
        result.entries.append(ClassifiedSolution(sol, case, prov))
    for sol in oracle:
        if sol in structural:
            continue
        part = odd if sol.m % 2 else even
        if part.coverage is None or sol.n <= part.coverage:
            result.discrepancies.append(
                f"brute force found {sol.as_tuple()} outside the {part.parity}-m classification"
            )
        result.entries.append(ClassifiedSolution(sol, "brute-force-only", "brute-force"))
    result.entries.sort(key=lambda e: e.solution.sort_key())
    return result


@dataclass(frozen=True)
class ScanRow:
    d1: int
    d2: int
    count: int
    exception: bool
    consistent: bool


def valid_instances(d_max: int, d1_min: int = 3) -> list[Instance]:
    return [
        Instance(d1, d2)
        for d1 in range(d1_min, d_max + 1, 2)
        for d2 in range(3, d_max + 1, 2)
        if gcd(d1, d2) == 1
    ]


def _scan_row(args) -> ScanRow:
    d1, d2, n_max = args
    inst = Instance(d1, d2)
    count = len(brute_force(inst, n_max))
    expected = THEOREM_B_EXCEPTIONS.get(inst.key)
    consistent = count <= 2 if expected is None else count == expected
    return ScanRow(d1, d2, count, expected is not None, consistent)


def scan(d_max: int, n_max: int = 100, jobs: int = 1) -> list[ScanRow]:
    """Brute-force census of every valid instance with 1 < d1, d2 <= d_max."""
    if d_max < 3:
        raise ValueError("d_max must be >= 3")
    work = [(i.d1, i.d2, n_max) for i in valid_instances(d_max)]
    if jobs <= 1:
        return [_scan_row(w) for w in work]
    jobs = min(jobs, os.cpu_count() or 1)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_scan_row, work, chunksize=max(1, len(work) // (8 * jobs))))
