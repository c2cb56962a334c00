"""Bounded searches for the auxiliary exponential equations.

Every verifier is a plain loop over its variable ranges with exact
arithmetic. It returns the full set of solutions it finds together with
the set the literature claims, so a report can only ever say "confirmed
within bounds".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from sympy import factorint, isprime, primerange

from rnkit.arith import iroot, isqrt, log_exact, power_representations, valuation

CONFIRMED = "confirmed-within-bounds"
DISCREPANCY = "discrepancy"


@dataclass(frozen=True)
class LemmaReport:
    lemma: str
    claimed: frozenset
    found: frozenset
    bounds: dict
    verdict: str
    note: str = ""

    @property
    def confirmed(self) -> bool:
        return self.verdict == CONFIRMED

    def to_dict(self) -> dict:
        def enc(v):
            if isinstance(v, (list, tuple, frozenset, set)):
                return [enc(u) for u in (sorted(v) if isinstance(v, (set, frozenset)) else v)]
            return str(v)

        return {
            "lemma": self.lemma,
            "bounds": {k: enc(v) for k, v in self.bounds.items()},
            "claimed": enc(self.claimed),
            "found": enc(self.found),
            "verdict": self.verdict,
            "note": self.note,
        }


def make_report(
    lemma: str,
    claimed: Iterable,
    found: Iterable,
    bounds: dict,
    in_bounds: Callable[[tuple], bool] | None = None,
    note: str = "",
) -> LemmaReport:
    claimed, found = frozenset(claimed), frozenset(found)
    reachable = {c for c in claimed if in_bounds is None or in_bounds(c)}
    ok = found <= claimed and reachable <= found
    return LemmaReport(lemma, claimed, found, dict(bounds), CONFIRMED if ok else DISCREPANCY, note)


def verify_catalan(x_max: int = 10**4, y_max: int = 10**4, m_max: int = 20, n_max: int = 20) -> LemmaReport:
    """x^m - y^n = 1 with min(x, y, m, n) > 1."""
    lower = {}
    for y in range(2, y_max + 1):
        for n in range(2, n_max + 1):
            lower.setdefault(y**n + 1, []).append((y, n))
    found = set()
    for x in range(2, x_max + 1):
        for m in range(2, m_max + 1):
            for y, n in lower.get(x**m, ()):
                found.add((x, y, m, n))
    bounds = {"x": x_max, "y": y_max, "m": m_max, "n": n_max}
    return make_report(
        "2.8",
        {(3, 2, 2, 3)},
        found,
        bounds,
        lambda t: t[0] <= x_max and t[1] <= y_max and t[2] <= m_max and t[3] <= n_max,
    )


def verify_pow23(sign: int, r_max: int = 60, s_max: int = 60, n_max: int = 20) -> LemmaReport:
    """2^r * 3^s + sign = y^n with y > 1, n > 1 (sign=+1 and sign=-1)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    found = set()
    for r in range(1, r_max + 1):
        for s in range(1, s_max + 1):
            for y, n in power_representations((2**r) * (3**s) + sign):
                if n <= n_max:
                    found.add((r, s, y, n))
    bounds = {"r": r_max, "s": s_max, "n": n_max}
    if sign == 1:
        claimed = {(3, 1, 5, 2), (4, 1, 7, 2), (5, 2, 17, 2)}
        return make_report(
            "2.11", claimed, found, bounds, lambda t: t[0] <= r_max and t[1] <= s_max and t[3] <= n_max
        )
    return make_report("2.12", set(), found, bounds)


def verify_3s_pm1(sign: int, r_max: int = 60, n_max: int = 20, allow_3_divides_y: bool = False) -> LemmaReport:
    """2^r + sign = 3^s * y^n with s >= 1, y > 1, n > 1 and 3 not dividing y.

    ``allow_3_divides_y`` drops the last side condition.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    found = set()
    for r in range(1, r_max + 1):
        v = 2**r + sign
        if v < 3:
            continue
        top = valuation(v, 3)
        exponents = range(1, top + 1) if allow_3_divides_y else ([top] if top else [])
        for s in exponents:
            w = v // 3**s
            if w < 2:
                continue
            for y, n in power_representations(w):
                if n <= n_max:
                    found.add((r, s, y, n))
    bounds = {"r": r_max, "n": n_max, "allow_3_divides_y": allow_3_divides_y}
    return make_report("2.9" if sign == 1 else "2.10", set(), found, bounds)


def verify_lemma_2_5(x_max: int = 10**4) -> LemmaReport:
    found = set()
    for x in range(1, x_max + 1):
        v = x**3 + 1
        if v % 3 == 0:
            y, exact = isqrt(v // 3)
            if exact:
                found.add((x, y))
    return make_report("2.5", set(), found, {"x": x_max})


def verify_lemma_2_6(x_max: int = 10**4, p_max: int = 19) -> LemmaReport:
    found = set()
    primes = list(primerange(3, p_max + 1))
    for x in range(-x_max, x_max + 1):
        if abs(x) <= 1:
            continue
        v = x * x + x + 1
        if v % 3:
            continue
        for p in primes:
            y, exact = iroot(v // 3, p)
            if exact and y > 1:
                found.add((x, y, p))
    return make_report("2.6", set(), found, {"|x|": x_max, "p": primes})


def verify_lemma_2_7(r_max: int = 60, n_max: int = 20) -> LemmaReport:
    found = set()
    for r in range(1, r_max + 1):
        v = 2**r + 1
        if v % 3 == 0 and v // 3 >= 2:
            for y, n in power_representations(v // 3):
                if n <= n_max:
                    found.add((r, y, n))
    return make_report("2.7", set(), found, {"r": r_max, "n": n_max})


def verify_lemma_4_1(x_max: int = 10**4, n_max: int = 20) -> LemmaReport:
    found = set()
    for x in range(2, x_max + 1):
        for n in range(2, n_max + 1):
            num = x**n + 1
            if num % (x + 1) == 0:
                y, exact = isqrt(num // (x + 1))
                if exact:
                    found.add((x, y, n))
    return make_report("4.1", set(), found, {"x": x_max, "n": n_max})


def verify_small_curves(
    x_max: int = 10**4, p_max: int = 19, r_max: int = 60, n_max: int = 20, x_max_41: int = 10**4
) -> list[LemmaReport]:
    """x^3 + 1 = 3y^2; x^2 + x + 1 = 3y^p; (2^r + 1)/3 = y^n; (x^n + 1)/(x + 1) = y^2."""
    return [
        verify_lemma_2_5(x_max),
        verify_lemma_2_6(x_max, p_max),
        verify_lemma_2_7(r_max, n_max),
        verify_lemma_4_1(x_max_41, n_max),
    ]


def verify_97(r_max: int = 60) -> LemmaReport:
    """2^(2r-3) - 2^r + 1 = 97^s with r >= 5."""
    if r_max < 5:
        raise ValueError("r_max must be >= 5")
    found = set()
    for r in range(5, r_max + 1):
        s = log_exact(2 ** (2 * r - 3) - 2**r + 1, 97)
        if s is not None and s >= 1:
            found.add((r, s))
    return make_report("4.2", {(5, 1)}, found, {"r": r_max})


def _coeff_power_search(d1: int, base: int, z_max: int) -> set:
    # d1*x^2 + base^(2y) = 2^(z+2)
    found = set()
    step = base * base
    for z in range(1, z_max + 1):
        target = 1 << (z + 2)
        power, y = step, 1
        while power < target:
            rest = target - power
            if rest % d1 == 0:
                x, exact = isqrt(rest // d1)
                if exact:
                    found.add((x, y, z))
            power *= step
            y += 1
    return found


def verify_lemma_4_3(z_max: int = 60) -> LemmaReport:
    return make_report("4.3", set(), _coeff_power_search(7, 25, z_max), {"z": z_max})


def verify_lemma_4_4(z_max: int = 60) -> LemmaReport:
    return make_report("4.4", set(), _coeff_power_search(15, 49, z_max), {"z": z_max})


def verify_4344(z_max: int = 60) -> list[LemmaReport]:
    """7x^2 + 25^(2y) = 2^(z+2) and 15x^2 + 49^(2y) = 2^(z+2)."""
    return [verify_lemma_4_3(z_max), verify_lemma_4_4(z_max)]


def birkhoff_vandiver_check(x: int, p: int) -> bool:
    """Primes q of (x^p - 1)/(x - 1) satisfy q = p or q = 1 (mod 2p), and p divides it at most once."""
    if abs(x) <= 1:
        raise ValueError("need |x| > 1")
    if p < 3 or not isprime(p):
        raise ValueError("p must be an odd prime")
    quotient = (x**p - 1) // (x - 1)
    for q, e in factorint(abs(quotient)).items():
        if q == p:
            if e > 1:
                return False
        elif q % (2 * p) != 1:
            return False
    return True


def verify_birkhoff_vandiver(x_max: int = 50, p_max: int = 13) -> LemmaReport:
    primes = list(primerange(3, p_max + 1))
    found = {
        (x, p)
        for x in range(-x_max, x_max + 1)
        if abs(x) > 1
        for p in primes
        if not birkhoff_vandiver_check(x, p)
    }
    return make_report("2.2", set(), found, {"|x|": x_max, "p": primes})
