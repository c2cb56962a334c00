import random

import pytest

from rnkit.arith import gcd
from rnkit.qforms import (
    ConsistencyError,
    InvalidInstance,
    LeastSolution,
    QFInstance,
    QFSolution,
    composed_least,
    distinct_z_check,
    expand,
    expand_solutions,
    least_solution,
    ring_power,
    scan_solutions,
    scan_solutions_at,
    solutions_at,
    solve_one_coeff,
)


def valid_pairs(limit, d1_min=1):
    return [
        (d1, d2)
        for d1 in range(d1_min, limit + 1, 2)
        for d2 in range(3, limit + 1, 2)
        if gcd(d1, d2) == 1
    ]


@pytest.mark.parametrize("d1,d2", [(2, 5), (3, 9), (0, 5), (-3, 5), (3, 4), (15, 1)])
def test_invalid_instances(d1, d2):
    with pytest.raises(InvalidInstance):
        QFInstance(d1, d2)


@pytest.mark.parametrize(
    "d,expected",
    [((7, 25), (1, 1, 3)), ((3, 5), (1, 1, 1)), ((31, 97), (1, 1, 5)), ((13, 3), (1, 1, 2))],
)
def test_least_solution_examples(d, expected):
    q = QFInstance(*d)
    assert least_solution(q) == LeastSolution(*expected)
    assert least_solution(q, 16, method="scan") == LeastSolution(*expected)


def test_least_solution_none_within_bound():
    assert least_solution(QFInstance(3, 7)) is None  # 3 + 7 = 2 (mod 8)
    assert least_solution(QFInstance(31, 97), z_bound=4) is None


def test_lattice_matches_scan():
    for d1, d2 in valid_pairs(45):
        q = QFInstance(d1, d2)
        for z in range(1, 15):
            assert solutions_at(q, z) == scan_solutions_at(q, z), (d1, d2, z)


def test_ring_power_matches_repeated_multiplication():
    # (x sqrt(d1) + y sqrt(-d2))/2 times itself twice more, written out by hand
    d1, d2, x, y = 3, 5, 1, 1
    # square: (d1 x^2 - d2 y^2 + 2xy sqrt(-d1 d2))/4 = (-2 + 2 sqrt(-15))/4
    # cube: ((-2)x d1 ... ) collapses to (-12 sqrt(3) + 4 sqrt(-5))/8
    assert ring_power(QFInstance(d1, d2), x, y, 3) == (-3, 1)
    with pytest.raises(ValueError):
        ring_power(QFInstance(3, 5), 1, 1, 2)


def test_ring_power_d1_one_allows_even_powers():
    q = QFInstance(1, 7)
    # ((1 + sqrt(-7))/2)^2 = (-3 + sqrt(-7))/2
    assert ring_power(q, 1, 1, 2) == (-3, 1)


def test_expand_examples():
    q, least = QFInstance(3, 5), LeastSolution(1, 1, 1)
    assert expand(q, least, 1) == QFSolution(1, 1, 1)
    assert expand(q, least, 3) == QFSolution(3, 1, 3)
    assert expand(q, least, 5) == QFSolution(1, 5, 5)
    ts = [t for t, _ in expand_solutions(q, least, 9)]
    assert ts == [1, 3, 5, 7, 9]
    assert [t for t, _ in expand_solutions(QFInstance(1, 7), LeastSolution(1, 1, 1), 4)] == [1, 2, 3, 4]


def test_expand_rejects_wrong_least():
    with pytest.raises(ConsistencyError):
        expand(QFInstance(3, 5), LeastSolution(1, 3, 1), 3)


def test_expansion_is_complete_on_random_instances():
    rng = random.Random(2024)
    pool = [p for p in valid_pairs(60) if sum(p) % 8 == 0]
    for d1, d2 in rng.sample(pool, 30):
        q = QFInstance(d1, d2)
        brute = set(scan_solutions(q, 24))
        least = least_solution(q, 24)
        if least is None:
            assert brute == set()
            continue
        got = {s for _, s in expand_solutions(q, least, 24 // least.z1) if s.z <= 24}
        assert got == brute, (d1, d2)
        assert all(s.check(q) for s in got)
        assert distinct_z_check(brute)


def test_distinct_z_check():
    a, b = QFSolution(1, 1, 1), QFSolution(3, 1, 3)
    assert distinct_z_check([a, b])
    assert distinct_z_check([a, a])
    assert not distinct_z_check([a, QFSolution(5, 1, 1)])
    assert distinct_z_check(scan_solutions(QFInstance(3, 5), 20))


@pytest.mark.parametrize(
    "d,least,expected",
    [((3, 5), (1, 1, 1), (1, 1, 2)), ((5, 11), (1, 1, 2), (3, 1, 4)), ((13, 3), (1, 1, 2), (5, 1, 4))],
)
def test_composed_least_examples(d, least, expected):
    out = composed_least(QFInstance(*d), LeastSolution(*least))
    assert out == LeastSolution(*expected)
    assert least_solution(QFInstance(1, d[0] * d[1]), 20, method="scan") == out


def test_composed_least_rejects_d1_one():
    with pytest.raises(ValueError):
        composed_least(QFInstance(1, 7), LeastSolution(1, 1, 1))


def test_composed_least_sweep():
    for d1, d2 in valid_pairs(50, d1_min=3):
        if d2 == 1:
            continue
        q = QFInstance(d1, d2)
        least = least_solution(q)
        if least is not None:
            assert composed_least(q, least) == least_solution(QFInstance(1, d1 * d2), 128)


def test_distinct_z_between_forms():
    for d1, d2 in valid_pairs(40, d1_min=3):
        if d2 == 1 or (d1 + d2) % 8:
            continue
        zs = {s.z for s in scan_solutions(QFInstance(d1, d2), 20)}
        zs1 = {z for z in range(1, 21) if solutions_at(QFInstance(1, d1 * d2), z)}
        assert not zs & zs1


def test_solve_one_coeff_examples():
    assert solve_one_coeff(7, 10) == [(1, 1), (3, 4)]
    assert solve_one_coeff(15) == [(1, 2)]
    assert solve_one_coeff(5) == []


def test_solve_one_coeff_uniqueness():
    for D in range(3, 2001, 2):
        sols = solve_one_coeff(D)
        if not sols:
            continue
        least = least_solution(QFInstance(1, D))
        assert least.x1 == 1
        if D == 7:
            assert sols == [(1, 1), (3, 4)]
        else:
            assert sols == [(least.y1, least.z1)]
