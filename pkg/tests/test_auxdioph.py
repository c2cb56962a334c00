import json

import pytest

from rnkit import auxdioph
from rnkit.auxdioph import CONFIRMED, DISCREPANCY, birkhoff_vandiver_check, make_report


def test_catalan():
    assert auxdioph.verify_catalan(100, 100, 20, 20).found == {(3, 2, 2, 3)}
    r = auxdioph.verify_catalan(2, 2, 20, 20)
    assert r.found == set() and r.verdict == CONFIRMED  # (3,2,2,3) lies outside x <= 2
    assert auxdioph.verify_catalan(1000, 1000, 12, 12).found == {(3, 2, 2, 3)}


def test_pow23():
    plus = auxdioph.verify_pow23(1, 30, 30, 20)
    assert plus.found == {(3, 1, 5, 2), (4, 1, 7, 2), (5, 2, 17, 2)}
    assert plus.verdict == CONFIRMED
    assert auxdioph.verify_pow23(-1, 30, 30, 20).found == set()
    assert auxdioph.verify_pow23(1, 2, 30, 20).found == set()
    with pytest.raises(ValueError):
        auxdioph.verify_pow23(0)


def test_3s_pm1():
    assert auxdioph.verify_3s_pm1(1, 60).found == set()
    assert auxdioph.verify_3s_pm1(-1, 60).found == set()
    knob = auxdioph.verify_3s_pm1(1, 60, allow_3_divides_y=True)
    assert knob.found == set() and knob.bounds["allow_3_divides_y"]


def test_small_curves():
    reports = auxdioph.verify_small_curves(x_max=10**4, p_max=7, x_max_41=200)
    assert [r.lemma for r in reports] == ["2.5", "2.6", "2.7", "4.1"]
    assert all(r.found == set() and r.verdict == CONFIRMED for r in reports)


def test_lemma_2_6_excludes_trivial_points():
    # x = 1 and x = -2 give 3 = 3 * 1^p, ruled out by |x| > 1 and y > 1
    assert auxdioph.verify_lemma_2_6(500, 7).found == set()


def test_verify_97():
    assert (2**7 - 2**5 + 1) == 97
    assert auxdioph.verify_97(60).found == {(5, 1)}
    assert auxdioph.verify_97(5).found == {(5, 1)}
    with pytest.raises(ValueError):
        auxdioph.verify_97(4)


def test_4344():
    assert [r.found for r in auxdioph.verify_4344(60)] == [set(), set()]
    assert [r.found for r in auxdioph.verify_4344(3)] == [set(), set()]


def test_birkhoff_vandiver_examples():
    assert birkhoff_vandiver_check(2, 5)  # 31
    assert birkhoff_vandiver_check(4, 3)  # 21 = 3 * 7
    for bad in [(1, 3), (0, 3), (-1, 5)]:
        with pytest.raises(ValueError):
            birkhoff_vandiver_check(*bad)
    with pytest.raises(ValueError):
        birkhoff_vandiver_check(3, 9)
    with pytest.raises(ValueError):
        birkhoff_vandiver_check(3, 2)


def test_birkhoff_vandiver_sweep():
    assert auxdioph.verify_birkhoff_vandiver(50, 13).found == set()


def test_report_verdict_logic():
    assert make_report("x", {1}, {1}, {}).verdict == CONFIRMED
    assert make_report("x", {1}, {1, 2}, {}).verdict == DISCREPANCY
    assert make_report("x", {1, 99}, {1}, {}).verdict == DISCREPANCY
    assert make_report("x", {1, 99}, {1}, {}, lambda t: t < 50).verdict == CONFIRMED


def test_report_json_shape():
    r = auxdioph.verify_pow23(1, 10, 10, 10)
    doc = json.loads(json.dumps(r.to_dict()))
    assert doc["lemma"] == "2.11"
    assert doc["verdict"] == CONFIRMED
    assert ["3", "1", "5", "2"] in doc["found"]
    assert doc["bounds"]["r"] == "10"
