"""t-squared partitions and the sum / sum-of-squares systems.

A t-squared partition of m is m = b^2 + 2a with b = c_1 + ... + c_t and
a = c_1^2 + ... + c_t^2 for positive c_1 >= ... >= c_t. These are in
bijection with matrices whose bottom-left entry d_1 is zero, and their
count for a given m is the frequency f(m).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Iterator, Sequence

from partition_lab.matrix import TwoLineMatrix


@dataclass(frozen=True)
class SquaredPartition:
    components: tuple[int, ...]

    def __post_init__(self):
        cs = tuple(int(x) for x in self.components)
        object.__setattr__(self, "components", cs)
        if not cs:
            raise ValueError("a t-squared partition needs t >= 1 components")
        if any(x < 1 for x in cs) or any(cs[i] < cs[i + 1] for i in range(len(cs) - 1)):
            raise ValueError(f"components must be positive and weakly decreasing: {cs}")

    @property
    def t(self) -> int:
        return len(self.components)

    @property
    def b(self) -> int:
        return sum(self.components)

    @property
    def a(self) -> int:
        return sum(x * x for x in self.components)

    @property
    def m(self) -> int:
        return self.b ** 2 + 2 * self.a


@dataclass(frozen=True)
class SystemSolutionSet:
    """Canonical solutions of x_1 + ... + x_b = b, x_1^2 + ... + x_b^2 = a.

    Each solution is weakly decreasing and zero-padded to length b.
    """

    a: int
    b: int
    solutions: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "solutions": [list(s) for s in self.solutions]}


def tsquared_from_matrix(m: TwoLineMatrix) -> SquaredPartition:
    if m.bottom[0] != 0:
        raise ValueError(f"d_1 = {m.bottom[0]}, matrix is not in M0")
    if m.s == 1:
        raise ValueError("single-column matrices have no t-squared partition")
    return SquaredPartition(m.top[:-1])


def matrix_from_tsquared(sp: SquaredPartition) -> TwoLineMatrix:
    cs = sp.components
    bottom = (0,) + tuple(cs[i] - cs[i + 1] for i in range(len(cs) - 1)) + (cs[-1],)
    return TwoLineMatrix(cs + (0,), bottom)


def decompositions(m: int) -> list[tuple[int, int]]:
    """Pairs (a, b) with m = b^2 + 2a, a = b mod 2 and b^2 >= a >= b, by increasing b."""
    if m < 1:
        raise ValueError("m must be positive")
    out = []
    for b in range(1, isqrt(m) + 1):
        rest = m - b * b
        if rest % 2:
            continue
        a = rest // 2
        if a % 2 == b % 2 and b * b >= a >= b:
            out.append((a, b))
    return out


def _search(remaining: int, squares: int, slots: int, cap: int) -> Iterator[tuple[int, ...]]:
    # Positive, weakly decreasing x with sum `remaining`, sum of squares `squares`,
    # at most `slots` entries, each <= cap.
    if remaining == 0:
        if squares == 0:
            yield ()
        return
    if slots == 0:
        return
    # every x in [1, cap] has x <= x^2 <= cap * x; Cauchy-Schwarz on the suffix
    if not remaining <= squares <= cap * remaining:
        return
    if squares * slots < remaining * remaining:
        return
    if (squares - remaining) % 2:
        return
    top = min(cap, remaining, isqrt(squares))
    for x in range(top, 0, -1):
        for rest in _search(remaining - x, squares - x * x, slots - 1, x):
            yield (x,) + rest


@lru_cache(maxsize=None)
def _solutions(a: int, b: int) -> tuple[tuple[int, ...], ...]:
    return tuple(sol + (0,) * (b - len(sol)) for sol in _search(b, a, b, b))


def solve_system(a: int, b: int) -> SystemSolutionSet:
    """All canonical non-negative solutions of the (a, b) system, found by pruned DFS.

    Pairs outside the preconditions have no solutions at all: a and b must
    share parity because x^2 = x mod 2, and b^2 >= a >= b holds for any
    non-negative integer solution summing to b. They are rejected rather
    than answered with an empty set.
    """
    if b < 1 or a < 1:
        raise ValueError("a and b must be positive")
    if a % 2 != b % 2:
        raise ValueError(f"a = {a} and b = {b} differ in parity; x^2 = x (mod 2) forbids solutions")
    if not b * b >= a >= b:
        raise ValueError(f"(a, b) = ({a}, {b}) violates b^2 >= a >= b; no solution exists")
    return SystemSolutionSet(a, b, _solutions(a, b))


def all_solutions(m: int) -> list[SystemSolutionSet]:
    return [solve_system(a, b) for a, b in decompositions(m)]


def frequency(m: int) -> int:
    """Number of M0 matrices of hook weight m."""
    return sum(len(s) for s in all_solutions(m))


def admits_tsquared(m: int) -> bool:
    return frequency(m) >= 1


def B_solutions(m: int, n: int) -> list[SystemSolutionSet]:
    """Per decomposition, the solutions with b + c_1 <= n (matrix entry sum at most n)."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for full in all_solutions(m):
        kept = tuple(s for s in full.solutions if full.b + s[0] <= n)
        out.append(SystemSolutionSet(full.a, full.b, kept))
    return out


def count_B(m: int, n: int) -> int:
    return sum(len(s) for s in B_solutions(m, n))


def solution_to_tsquared(solution: Sequence[int]) -> SquaredPartition:
    return SquaredPartition(tuple(x for x in solution if x))
