"""Lattice paths of two-line matrices and the hook weight P(M)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate

from partition_lab.matrix import TwoLineMatrix, ell


@dataclass(frozen=True)
class LatticePath:
    """Points from the line x + y = n_line down to the origin.

    Zero-length moves are kept; use `reduced` for the path with repeated
    consecutive points collapsed.
    """

    points: tuple[tuple[int, int], ...]
    n_line: int

    def reduced(self) -> tuple[tuple[int, int], ...]:
        out = [self.points[0]]
        for pt in self.points[1:]:
            if pt != out[-1]:
                out.append(pt)
        return tuple(out)

    def to_json(self, reduced: bool = False) -> dict:
        pts = self.reduced() if reduced else self.points
        return {"points": [list(p) for p in pts]}


@dataclass(frozen=True)
class OddPartition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        ps = tuple(self.parts)
        object.__setattr__(self, "parts", ps)
        if any(x < 3 or x % 2 == 0 for x in ps):
            raise ValueError(f"parts must be odd and at least 3: {ps}")
        if any(ps[i] <= ps[i + 1] for i in range(len(ps) - 1)):
            raise ValueError(f"parts must be strictly decreasing: {ps}")

    @property
    def m(self) -> int:
        return sum(self.parts)

    def to_json(self) -> dict:
        return {"parts": list(self.parts), "m": self.m}


def matrix_to_path(m: TwoLineMatrix) -> LatticePath:
    """Start at (sum d, sum c), alternate left moves d_s..d_2 with down moves c_{s-1}..c_1.

    A single-column matrix gives the degenerate path (d_1, 0) -> (0, 0).
    """
    n = ell(m)
    s = m.s
    if s == 1:
        return LatticePath(((m.bottom[0], 0), (0, 0)), n)
    D = list(accumulate(m.bottom))  # D[k-1] = d_1 + ... + d_k
    C = list(accumulate(m.top))
    pts = [(D[s - 1], C[s - 2])]
    for k in range(s - 1, 0, -1):
        pts.append((D[k - 1], C[k - 1]))
        pts.append((D[k - 1], C[k - 2] if k >= 2 else 0))
    pts.append((0, 0))
    return LatticePath(tuple(pts), n)


def hooks(m: TwoLineMatrix) -> OddPartition:
    """Hook sizes read off the path reflected through x + y = ell(M).

    Block k contributes c_k values 2(h_k - i) - 1, i < c_k, where
    h_1 = n - d_1 and h_{k+1} = h_k - c_k - d_{k+1}.
    """
    n = ell(m)
    c, d = m.top, m.bottom
    parts: list[int] = []
    h = n - d[0]
    for k in range(m.s - 1):
        parts.extend(2 * (h - i) - 1 for i in range(c[k]))
        h = h - c[k] - d[k + 1]
    return OddPartition(tuple(parts))


def weight_P(m: TwoLineMatrix) -> int:
    return hooks(m).m
