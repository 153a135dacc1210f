import pytest

from partition_lab.identity import (
    VerificationReport,
    image_gaps,
    p_via_main_theorem,
    structural_check,
    structural_witness,
    verify_range,
)
from partition_lab.squared import count_B


def test_n1_trivial():
    r = p_via_main_theorem(1)
    assert (r.lhs, r.rhs, r.match, r.per_m) == (1, 1, True, {})


def test_n5_matches_table_two():
    r = p_via_main_theorem(5)
    assert (r.lhs, r.rhs) == (7, 7)
    assert r.per_m == {3: 1, 8: 1, 12: 1, 15: 1, 19: 1, 24: 1}


def test_n21():
    r = p_via_main_theorem(21)
    assert r.lhs == 792 and r.match
    assert sum(r.per_m.values()) + 1 == r.rhs


def test_verify_range_small():
    assert [r.n for r in verify_range(1)] == [1]
    assert all(r.match for r in verify_range(10))


def test_verify_range_parallel_agrees():
    serial = verify_range(12)
    assert [r.to_json(True) for r in verify_range(12, jobs=3)] == [r.to_json(True) for r in serial]


def test_report_json():
    r = VerificationReport(3, 3, 3, {3: 1, 8: 1})
    assert r.to_json() == {"n": 3, "p_oracle": 3, "p_theorem": 3, "match": True}
    assert r.to_json(per_m=True)["per_m"] == {"3": 1, "8": 1}
    assert not VerificationReport(3, 3, 4).match


@pytest.mark.parametrize("n", range(2, 16))
def test_structural_check(n):
    assert structural_witness(n) is None
    assert structural_check(n)


def test_structural_small_cases():
    assert p_via_main_theorem(2).per_m == {3: 1}
    assert sum(p_via_main_theorem(5).per_m.values()) == 6
    assert 28 in p_via_main_theorem(6).per_m


def test_B_monotone_in_n():
    for m in range(1, 200):
        counts = [count_B(m, n) for n in range(1, 16)]
        assert counts == sorted(counts)


def test_contributing_m_bounds():
    for n in range(1, 16):
        for m in p_via_main_theorem(n).per_m:
            assert m <= n * n - 1 and m % 4 in (0, 3)


def test_image_gaps():
    assert image_gaps(10) == [1, 2, 4, 5, 6, 7, 9, 10]
    assert image_gaps(3) == [1, 2]
    with pytest.raises(ValueError):
        image_gaps(0)
