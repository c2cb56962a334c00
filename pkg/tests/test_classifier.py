import random

import pytest

from rnkit.classifier import (
    EVEN_M_TABLE,
    ODD_M_TABLE,
    THEOREM_B_EXCEPTIONS,
    Instance,
    InvalidInstance,
    Solution,
    brute_force,
    classify,
    classify_even_m,
    classify_odd_m,
    family_params,
    scan,
    theorem_a_expected,
    valid_instances,
)
from rnkit.qforms import QFInstance, least_solution


def tuples(sols):
    return {s.as_tuple() for s in sols}


@pytest.mark.parametrize("d1,d2", [(3, 9), (2, 5), (3, 1), (3, 4), (-3, 5)])
def test_instance_validation(d1, d2):
    with pytest.raises(InvalidInstance):
        Instance(d1, d2)


def test_brute_force_examples():
    assert tuples(brute_force(Instance(3, 5), 20)) == {(1, 1, 1), (3, 1, 3), (1, 3, 5), (13, 1, 7)}
    assert tuples(brute_force(Instance(13, 3), 20)) == {(1, 1, 2), (1, 5, 6), (71, 1, 14)}
    assert tuples(brute_force(Instance(31, 97), 20)) == {(1, 1, 5), (65, 1, 15), (15, 2, 12)}


def test_brute_force_solutions_satisfy_equation():
    for inst in valid_instances(25):
        for s in brute_force(inst, 80):
            assert s.satisfies(inst)


def test_classify_odd_m_examples():
    assert tuples(classify_odd_m(Instance(11, 5)).solutions) == {(1, 1, 2), (19, 3, 10)}
    assert tuples(classify_odd_m(Instance(21, 11)).solutions) == {(1, 1, 3), (79, 1, 15)}
    part = classify_odd_m(Instance(31, 97))
    assert part.solutions == {Solution(1, 1, 5): "3.1(xii)", Solution(65, 1, 15): "3.1(ix)"}


def test_family_sign_is_flagged():
    part = classify_odd_m(Instance(31, 97))
    assert any("3.1(ix) sign" in n and "63" in n and "65" in n for n in part.notes)
    assert part.discrepancies == []


def test_classify_even_m_examples():
    assert tuples(classify_even_m(Instance(7, 3)).solutions) == {(1, 2, 2), (5, 4, 6)}
    assert tuples(classify_even_m(Instance(15, 7)).solutions) == {(1, 2, 4), (33, 2, 12)}
    assert classify_even_m(Instance(3, 5)).solutions == {}
    assert not [s for s in brute_force(Instance(3, 5), 200) if s.m % 2 == 0]


def test_tables_reproduce_listed_tuples():
    for table, fn in ((ODD_M_TABLE, classify_odd_m), (EVEN_M_TABLE, classify_even_m)):
        for key, rows in table.items():
            part = fn(Instance(*key))
            assert part.discrepancies == []
            for _, _, expected in rows:
                assert Solution(*expected) in part.solutions


@pytest.mark.parametrize(
    "d,expected",
    [
        ((5, 3), {(1, 1, 1), (1, 3, 3), (5, 1, 5), (19, 5, 9)}),
        ((1, 7), {(1, 1, 1), (3, 1, 2), (5, 1, 3), (11, 1, 5), (13, 3, 7), (181, 1, 13)}),
        ((1, 23), {(3, 1, 3), (45, 1, 9)}),
    ],
)
def test_classify_examples(d, expected):
    c = classify(Instance(*d))
    assert tuples(c.solutions) == expected
    assert c.count == len(expected)
    assert c.consistent and c.exception
    assert not c.has_discrepancy


def test_solutions_sorted_by_n_then_m():
    c = classify(Instance(5, 3))
    keys = [s.sort_key() for s in c.solutions]
    assert keys == sorted(keys)


def test_theorem_a_expected():
    assert theorem_a_expected(7) == 6
    assert theorem_a_expected(23) == 2
    assert [theorem_a_expected(2**r - 1) for r in range(4, 12)] == [2] * 8
    assert theorem_a_expected(3) is None
    assert theorem_a_expected(11) is None


def test_oracle_agreement_random_instances():
    rng = random.Random(99)
    pool = valid_instances(60)
    for inst in rng.sample(pool, 120):
        c = classify(inst, 200)
        assert c.discrepancies == [], (inst, c.discrepancies)
        structural = {e.solution for e in c.entries if e.provenance != "brute-force" and e.solution.n <= 200}
        assert structural == set(brute_force(inst, 200))


def test_even_m_parity_law():
    for inst in valid_instances(60):
        for s in brute_force(inst, 120):
            if s.m % 2 == 0:
                assert inst.d1 % 8 == 7


def test_n_divisible_by_least_z():
    for inst in valid_instances(40):
        c = classify(inst, 150)
        for s in c.solutions:
            least = c.least if s.m % 2 else c.least_even
            if least is not None:
                assert s.n % least.z1 == 0


# (z1, lam) = (1, 1) would give d1 = 1
@pytest.mark.parametrize("z1,lam", [(z, s) for z in range(1, 13) for s in (1, -1) if (z, s) != (1, 1)])
def test_family_t3_solution(z1, lam):
    d1, d2 = 2**z1 - lam, 3 * 2**z1 + lam
    inst = Instance(d1, d2)
    least = least_solution(QFInstance(d1, d2))
    assert family_params(inst, least) == (lam, z1)
    part = classify_odd_m(inst)
    t3 = [s for s, case in part.solutions.items() if case == "3.1(ix)"]
    assert t3 == [Solution(2 ** (z1 + 1) + lam, 1, 3 * z1)]
    assert t3[0].satisfies(inst)
    assert t3[0] in brute_force(inst, 3 * z1)
    c = classify(inst, max(40, 3 * z1))
    assert not c.has_discrepancy
    if z1 >= 2:
        assert c.count_odd == 2
    if (d1, d2) != (31, 97):
        assert c.count_even == 0


def test_counts_at_200():
    expected = {
        (3, 5): 4, (5, 3): 4, (13, 3): 3, (31, 97): 3,
        (7, 3): 2, (7, 5): 2, (15, 7): 2, (11, 5): 2, (21, 11): 2, (3, 29): 2,
    }  # fmt: skip
    for key, n in expected.items():
        assert classify(Instance(*key), 200).count == n


def test_scan_small():
    rows = scan(5, 100)
    assert [(r.d1, r.d2, r.count) for r in rows] == [(3, 5, 4), (5, 3, 4)]
    assert all(r.exception and r.consistent for r in rows)
    assert scan(3, 100) == []
    with pytest.raises(ValueError):
        scan(2)


def test_scan_has_no_shortcut():
    # instances failing the mod 8 condition are still enumerated
    keys = {(r.d1, r.d2) for r in scan(11, 40)}
    assert (3, 7) in keys and (5, 7) in keys


def test_scan_parallel_matches_serial():
    assert scan(30, 60, jobs=2) == scan(30, 60, jobs=1)


def test_exception_table_matches_scan():
    rows = {(r.d1, r.d2): r for r in scan(100, 100)}
    for key, count in THEOREM_B_EXCEPTIONS.items():
        assert rows[key].count == count
