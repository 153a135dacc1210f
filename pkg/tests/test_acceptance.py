"""Exit criteria, one test per criterion; a PASS/FAIL line per test is
printed in the terminal summary."""

import random
import subprocess
import sys
import time
from math import isqrt

from oracles import brute_frequencies, decreasing_tuples, p_dp
from partition_lab.matrix import (
    TwoLineMatrix,
    ell,
    lift_from_M0,
    matrix_to_partition,
    partition_to_matrix,
    project_to_M0,
)
from partition_lab.partitions import Partition, enumerate_partitions
from partition_lab.path import hooks, matrix_to_path, weight_P
from partition_lab.squared import (
    SquaredPartition,
    count_B,
    frequency,
    matrix_from_tsquared,
    tsquared_from_matrix,
)
from partition_lab.identity import image_gaps


def test_1_main_theorem_to_40():
    start = time.perf_counter()
    res = subprocess.run([sys.executable, "-m", "partition_lab", "verify", "--to", "40",
                          "--format", "csv"], capture_output=True, text=True, timeout=300)
    elapsed = time.perf_counter() - start
    assert res.returncode == 0, res.stderr
    rows = [line.split(",") for line in res.stdout.splitlines()[1:]]
    assert len(rows) == 40
    for n, (col_n, p_oracle, p_theorem, match) in enumerate(rows, 1):
        assert int(col_n) == n
        assert int(p_oracle) == int(p_theorem) == p_dp(n)
        assert match == "true"
    assert elapsed < 300
    print(f"verify --to 40: {elapsed:.2f}s")


def test_2_table_one():
    expected = {
        (1, 1, 1, 1, 1): ((1, 1, 1, 1, 0), (0, 0, 0, 0, 1)),
        (2, 1, 1, 1): ((1, 1, 1, 0), (1, 0, 0, 1)),
        (2, 2, 1): ((2, 1, 0), (0, 1, 1)),
        (3, 1, 1): ((1, 1, 0), (2, 0, 1)),
        (3, 2): ((2, 0), (1, 2)),
        (4, 1): ((1, 0), (3, 1)),
        (5,): ((0,), (5,)),
    }
    got = {}
    for p in enumerate_partitions(5):
        m = partition_to_matrix(p)
        got[p.parts] = (m.top, m.bottom)
    assert got == expected


def test_3_table_two():
    rows = [
        ((1, 1, 1, 1, 0), (0, 0, 0, 0, 1), (9, 7, 5, 3), 24),
        ((1, 1, 1, 0), (1, 0, 0, 1), (7, 5, 3), 15),
        ((2, 1, 0), (0, 1, 1), (9, 7, 3), 19),
        ((1, 1, 0), (2, 0, 1), (5, 3), 8),
        ((2, 0), (1, 2), (7, 5), 12),
        ((1, 0), (3, 1), (3,), 3),
        ((0,), (5,), (), 0),
    ]
    for top, bottom, parts, m in rows:
        mat = TwoLineMatrix(top, bottom)
        assert hooks(mat).parts == parts
        assert weight_P(mat) == m


def test_4_worked_examples():
    m = partition_to_matrix(Partition((6, 5, 2, 2)))
    assert (m.top, m.bottom) == ((5, 2, 2, 0), (1, 3, 0, 2))
    assert matrix_to_partition(m).parts == (6, 5, 2, 2)

    m = partition_to_matrix(Partition((2, 2, 1, 1)))
    assert (m.top, m.bottom) == ((2, 1, 1, 0), (0, 1, 0, 1))
    assert matrix_to_path(m).reduced() == ((2, 4), (1, 4), (1, 3), (1, 2), (0, 2), (0, 0))
    assert hooks(m).parts == (11, 9, 5, 3) and weight_P(m) == 28
    sp = tsquared_from_matrix(m)
    assert sp.components == (2, 1, 1) and sp.m == (2 + 1 + 1) ** 2 + 2 * (4 + 1 + 1) == 28

    A = TwoLineMatrix((4, 1, 1, 0), (0, 3, 0, 1))
    B = TwoLineMatrix((3, 3, 0), (0, 0, 3))
    assert weight_P(A) == weight_P(B) == 72
    assert ell(A) == 10

    sp = SquaredPartition((3, 2, 2))
    assert sp.t == 3 and sp.m == 83 == (3 + 2 + 2) ** 2 + 2 * (9 + 4 + 4)
    assert weight_P(matrix_from_tsquared(sp)) == 83


def test_5_parity():
    start = time.perf_counter()
    bad = [m for m in range(1, 2001) if m % 4 in (1, 2) and frequency(m) != 0]
    elapsed = time.perf_counter() - start
    assert bad == []
    assert elapsed < 10
    print(f"parity sweep: {elapsed:.2f}s")


def test_6_oracle_equivalence():
    brute = brute_frequencies(625)
    via_matrices = {}
    for b in range(1, isqrt(625) + 1):
        for cs in decreasing_tuples(b):
            mat = matrix_from_tsquared(SquaredPartition(tuple(sorted(cs, reverse=True))))
            w = weight_P(mat)
            if w <= 625:
                via_matrices[w] = via_matrices.get(w, 0) + 1
    for m in range(1, 626):
        assert frequency(m) == brute.get(m, 0) == via_matrices.get(m, 0), m


def test_7_bijections():
    for n in range(31):
        for p in enumerate_partitions(n):
            if n == 0:
                continue
            mat = partition_to_matrix(p)
            assert matrix_to_partition(mat) == p
            assert partition_to_matrix(matrix_to_partition(mat)) == mat
            if len(p) >= 2:
                assert lift_from_M0(project_to_M0(p, n), n) == p

    for size in range(2, 26):
        for p in enumerate_partitions(size):
            if len(p) >= 2 and p[0] == p[1]:
                mat = partition_to_matrix(p)  # the M0 matrices with ell = size
                assert mat.bottom[0] == 0
                sp = tsquared_from_matrix(mat)
                assert matrix_from_tsquared(sp) == mat
                assert tsquared_from_matrix(matrix_from_tsquared(sp)) == sp

    rng = random.Random(7)
    for n in range(1, 21):
        for p in enumerate_partitions(n):
            mat = partition_to_matrix(p)
            for _ in range(20):
                delta = rng.randint(0, 1000)
                shifted = TwoLineMatrix(mat.top, (mat.bottom[0] + delta,) + mat.bottom[1:])
                assert hooks(shifted) == hooks(mat)


def test_8_frequency_values():
    targets = {324: 8, 291: 9, 312: 10}
    global_f = {m: frequency(m) for m in targets}
    restricted = {m: count_B(m, 21) for m in targets}
    matching = [name for name, vals in (("global f(m)", global_f), ("|B(m, 21)|", restricted))
                if vals == targets]
    print(f"global f: {global_f}; restricted to n=21: {restricted}; matching: {matching}")
    assert matching


def test_9_image_gaps():
    gaps = image_gaps(10)
    brute = brute_frequencies(10)
    assert gaps == [m for m in range(1, 11) if m not in brute]
    assert gaps == [1, 2, 4, 5, 6, 7, 9, 10]
    assert {5, 6, 9, 10} <= set(gaps)
