"""The full bounded lemma suite: one :class:`LemmaReport` per lemma id."""

from __future__ import annotations

import random
from functools import partial

from rnkit import auxdioph, fiblucas, lehmer, qforms
from rnkit.arith import gcd
from rnkit.auxdioph import LemmaReport, make_report

LEMMA_IDS = (
    "2.2", "2.3", "2.4", "2.5", "2.6", "2.7", "2.8", "2.9", "2.10", "2.11", "2.12",
    "2.13", "2.14", "2.15", "2.16", "2.17", "2.18", "2.19", "4.1", "4.2", "4.3", "4.4",
)  # fmt: skip


def lemma_2_3(k_max: int = 60, u_max: int = 10**4) -> LemmaReport:
    bad = set()
    for k in range(k_max + 1):
        p = fiblucas.fib_lucas(k)
        if (p.f * p.l % 2 == 0) != (k % 3 == 0):
            bad.add(("i", k))
        if gcd(p.f, p.l) != (2 if k % 3 == 0 else 1):
            bad.add(("ii", k))
        if p.l * p.l - 5 * p.f * p.f != (-1) ** k * 4:
            bad.add(("iii", k))
    fast = {(u, v, s) for u, v, _, s in fiblucas.solve_pell5(u_max)}
    for row in fast.symmetric_difference(fiblucas.solve_pell5_scan(u_max)):
        bad.add(("iv",) + row)
    return make_report("2.3", set(), bad, {"k": k_max, "u": u_max})


def lemma_2_4(k_max: int = 200) -> LemmaReport:
    found = {(w, k, z, n) for k, z, n, w in fiblucas.fib_lucas_powers(k_max)}
    claimed = {("F", 6, 2, 3), ("F", 12, 12, 2), ("L", 3, 2, 2)}
    return make_report("2.4", claimed, found, {"k": k_max}, lambda t: t[1] <= k_max)


def sample_qf_instances(count: int = 30, d_max: int = 60, seed: int = 0) -> list[qforms.QFInstance]:
    """Seeded sample of valid (d1, d2) with d1 + d2 = 0 (mod 8)."""
    pool = [
        qforms.QFInstance(d1, d2)
        for d1 in range(1, d_max + 1, 2)
        for d2 in range(3, d_max + 1, 2)
        if gcd(d1, d2) == 1 and (d1 + d2) % 8 == 0
    ]
    return random.Random(seed).sample(pool, count)


def lemma_2_13(count: int = 30, z_max: int = 24, seed: int = 0) -> LemmaReport:
    """Powers of the least solution give exactly the exhaustive solution set."""
    bad = set()
    for q in sample_qf_instances(count, seed=seed):
        brute = set(qforms.scan_solutions(q, z_max))
        least = qforms.least_solution(q, z_max)
        generated = set()
        if least is not None:
            generated = {
                s for _, s in qforms.expand_solutions(q, least, z_max // least.z1) if s.z <= z_max
            }
        for s in brute ^ generated:
            bad.add((q.d1, q.d2, s.x, s.y, s.z))
    return make_report("2.13", set(), bad, {"instances": count, "z": z_max, "seed": seed})


def lemma_2_14(count: int = 30, z_max: int = 24, seed: int = 0) -> LemmaReport:
    bad = {
        (q.d1, q.d2)
        for q in sample_qf_instances(count, seed=seed)
        if not qforms.distinct_z_check(qforms.scan_solutions(q, z_max))
    }
    return make_report("2.14", set(), bad, {"instances": count, "z": z_max, "seed": seed})


def lemma_2_15(d_max: int = 50, z_bound: int = qforms.DEFAULT_Z_BOUND) -> LemmaReport:
    bad = set()
    for d1 in range(3, d_max + 1, 2):
        for d2 in range(3, d_max + 1, 2):
            if gcd(d1, d2) != 1:
                continue
            q = qforms.QFInstance(d1, d2)
            least = qforms.least_solution(q, z_bound)
            if least is None:
                continue
            composed = qforms.composed_least(q, least)
            direct = qforms.least_solution(qforms.QFInstance(1, d1 * d2), 2 * z_bound)
            if composed != direct:
                bad.add((d1, d2))
    return make_report("2.15", set(), bad, {"d1": d_max, "d2": d_max, "z": z_bound})


def lemma_2_16(d_max: int = 60, z_max: int = 24) -> LemmaReport:
    bad = set()
    for d1 in range(3, d_max + 1, 2):
        for d2 in range(3, d_max + 1, 2):
            if gcd(d1, d2) != 1 or (d1 + d2) % 8:
                continue
            q, q1 = qforms.QFInstance(d1, d2), qforms.QFInstance(1, d1 * d2)
            zs = {z for z in range(1, z_max + 1) if qforms.solutions_at(q, z)}
            zs1 = {z for z in range(1, z_max + 1) if qforms.solutions_at(q1, z)}
            bad |= {(d1, d2, z) for z in zs & zs1}
    return make_report("2.16", set(), bad, {"d1": d_max, "d2": d_max, "z": z_max})


def lemma_2_17(d_max: int = 2000, z_bound: int = qforms.DEFAULT_Z_BOUND) -> LemmaReport:
    """Solutions of 1 + D y^2 = 2^(z+2) other than (Y1', Z1') with X1' = 1."""
    found = set()
    for D in range(3, d_max + 1, 2):
        sols = qforms.solve_one_coeff(D, z_bound)
        if not sols:
            continue
        least = qforms.least_solution(qforms.QFInstance(1, D), z_bound)
        for y, z in sols:
            if least is None or least.x1 != 1 or (y, z) != (least.y1, least.z1):
                found.add((D, y, z))
    return make_report("2.17", {(7, 3, 4)}, found, {"D": d_max, "z": z_bound})


def lemma_2_18(box: int = 24) -> LemmaReport:
    """Defective pairs found in a parameter box against the stored table."""
    params = lehmer.valid_params_in_box(box)
    found = {(k, a, c) for k in range(7, 31, 2) for a, c in params if lehmer.is_defective(a, c, k)}
    claimed = {(e.k, e.a, e.c) for e in lehmer.all_defective_entries() if e.valid}
    skipped = [e for e in lehmer.all_defective_entries() if not e.valid]
    note = "all table entries are valid parameters; (14, -22) included"
    if skipped:
        note = "invalid table entries skipped: " + ", ".join(f"({e.k}, {e.a}, {e.c})" for e in skipped)
    return make_report(
        "2.18",
        claimed,
        found,
        {"|a|": box, "|c|": box, "k": "odd 7..29"},
        lambda t: abs(t[1]) <= box and abs(t[2]) <= box,
        note,
    )


def lemma_2_19(k_min: int = 31, k_max: int = 41, box: int = 20) -> LemmaReport:
    params = lehmer.valid_params_in_box(box)
    found = {(k, a, c) for k in range(k_min, k_max + 1) for a, c in params if lehmer.is_defective(a, c, k)}
    return make_report("2.19", set(), found, {"k": f"{k_min}..{k_max}", "|a|": box, "|c|": box})


VERIFIERS = {
    "2.2": auxdioph.verify_birkhoff_vandiver,
    "2.3": lemma_2_3,
    "2.4": lemma_2_4,
    "2.5": auxdioph.verify_lemma_2_5,
    "2.6": auxdioph.verify_lemma_2_6,
    "2.7": auxdioph.verify_lemma_2_7,
    "2.8": auxdioph.verify_catalan,
    "2.9": partial(auxdioph.verify_3s_pm1, 1),
    "2.10": partial(auxdioph.verify_3s_pm1, -1),
    "2.11": partial(auxdioph.verify_pow23, 1),
    "2.12": partial(auxdioph.verify_pow23, -1),
    "2.13": lemma_2_13,
    "2.14": lemma_2_14,
    "2.15": lemma_2_15,
    "2.16": lemma_2_16,
    "2.17": lemma_2_17,
    "2.18": lemma_2_18,
    "2.19": lemma_2_19,
    "4.1": auxdioph.verify_lemma_4_1,
    "4.2": auxdioph.verify_97,
    "4.3": auxdioph.verify_lemma_4_3,
    "4.4": auxdioph.verify_lemma_4_4,
}
assert tuple(VERIFIERS) == LEMMA_IDS


def run_lemma(lemma: str, **bounds) -> LemmaReport:
    """Report for one lemma id; keyword arguments override its default bounds."""
    if lemma not in VERIFIERS:
        raise KeyError(f"unknown lemma id {lemma!r}")
    return VERIFIERS[lemma](**bounds)


def run_all() -> list[LemmaReport]:
    return [run_lemma(lemma) for lemma in LEMMA_IDS]
