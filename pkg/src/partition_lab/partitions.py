"""Unrestricted partitions and an independent counter for p(n)."""

from __future__ import annotations

from dataclasses import dataclass
import threading
from typing import Iterator

INT64_MAX = 2**63 - 1


def check_int64(value: int) -> int:
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise OverflowError(f"{value} does not fit in a signed 64-bit integer")
    return value


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(x < 1 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> list[Partition]:
    """Return every partition of `n` in reverse-lexicographic order.

    >>> [p.parts for p in enumerate_partitions(3)]
    [(3,), (2, 1), (1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return [Partition(parts) for parts in _partitions(n, n)]


_P_TABLE = [1]
_P_LOCK = threading.Lock()


def _extend_table(n: int) -> None:
    p = _P_TABLE
    for i in range(len(p), n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > i:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[i - g1]
            g2 = g1 + k
            if g2 <= i:
                total += sign * p[i - g2]
            k += 1
        p.append(check_int64(total))


def count_partitions_oracle(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence.

    Shares nothing with `enumerate_partitions`. Raises OverflowError once
    p(n) leaves the signed 64-bit range (n >= 406).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n >= len(_P_TABLE):
        with _P_LOCK:
            _extend_table(n)
    return _P_TABLE[n]
