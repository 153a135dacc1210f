"""Two-line matrix representation of partitions.

A matrix has a top row c_1..c_s and a bottom row d_1..d_s with

    c_s = 0,  d_s != 0,  c_j = c_{j+1} + d_{j+1}  (j < s).

Column sums give back the partition. Rows are stored as two parallel
tuples since every constraint is a recurrence along a row.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from partition_lab.partitions import Partition


@dataclass(frozen=True)
class Violation:
    rule: str
    column: int  # 1-based, 0 when the rule is not tied to a column
    message: str

    def __str__(self) -> str:
        where = f" (column {self.column})" if self.column else ""
        return f"{self.rule}{where}: {self.message}"


class InvalidMatrixError(ValueError):
    def __init__(self, violations: Sequence[Violation]):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


def validate(top: Sequence[int], bottom: Sequence[int]) -> list[Violation]:
    """Return every broken constraint; an empty list means the array is valid."""
    out: list[Violation] = []
    top, bottom = list(top), list(bottom)
    if len(top) != len(bottom):
        out.append(Violation("shape", 0, f"rows differ in length ({len(top)} vs {len(bottom)})"))
        return out
    if not top:
        out.append(Violation("shape", 0, "matrix has no columns"))
        return out
    for row_name, row in (("c", top), ("d", bottom)):
        for j, x in enumerate(row, 1):
            if not isinstance(x, int) or isinstance(x, bool):
                out.append(Violation("integer", j, f"{row_name}_{j} = {x!r} is not an integer"))
            elif x < 0:
                out.append(Violation("nonnegative", j, f"{row_name}_{j} = {x} < 0"))
    if out:
        return out
    s = len(top)
    if top[-1] != 0:
        out.append(Violation("c_s = 0", s, f"c_{s} = {top[-1]}"))
    if bottom[-1] == 0:
        out.append(Violation("d_s != 0", s, f"d_{s} = 0"))
    for j in range(s - 1):
        if top[j] != top[j + 1] + bottom[j + 1]:
            out.append(Violation(
                "c_j = c_{j+1} + d_{j+1}", j + 1,
                f"c_{j + 1} = {top[j]} != {top[j + 1]} + {bottom[j + 1]}",
            ))
    return out


@dataclass(frozen=True)
class TwoLineMatrix:
    """A validated two-line matrix; construction raises on any violation."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        violations = validate(self.top, self.bottom)
        if violations:
            raise InvalidMatrixError(violations)

    @property
    def s(self) -> int:
        return len(self.top)

    @property
    def columns(self) -> list[tuple[int, int]]:
        return list(zip(self.top, self.bottom))

    def to_json(self) -> dict:
        return {"top": list(self.top), "bottom": list(self.bottom)}

    @classmethod
    def from_json(cls, obj: dict) -> "TwoLineMatrix":
        if not isinstance(obj, dict) or set(obj) != {"top", "bottom"}:
            raise ValueError('matrix JSON must be {"top": [...], "bottom": [...]}')
        return cls(tuple(obj["top"]), tuple(obj["bottom"]))

    def __str__(self) -> str:
        width = max(len(str(x)) for x in self.top + self.bottom)
        row = lambda r: " ".join(str(x).rjust(width) for x in r)
        return f"[{row(self.top)}]\n[{row(self.bottom)}]"


def partition_to_matrix(p: Partition | Sequence[int]) -> TwoLineMatrix:
    """c_j = part_{j+1}, d_j = part_j - part_{j+1}, with c_s = 0 and d_s = part_s."""
    parts = tuple(p.parts if isinstance(p, Partition) else Partition(tuple(p)).parts)
    if not parts:
        raise ValueError("the empty partition has no two-line matrix")
    nxt = parts[1:] + (0,)
    return TwoLineMatrix(nxt, tuple(a - b for a, b in zip(parts, nxt)))


def matrix_to_partition(m: TwoLineMatrix) -> Partition:
    return Partition(tuple(c + d for c, d in zip(m.top, m.bottom)))


def ell(m: TwoLineMatrix) -> int:
    """Sum of all entries, i.e. the weight of the associated partition."""
    total = sum(m.top) + sum(m.bottom)
    alt = m.top[0] + m.bottom[0] + sum(m.top[:-1])
    assert total == alt, (m, total, alt)
    return total


def project_to_M0(p: Partition, n: int | None = None) -> TwoLineMatrix:
    """Send a partition with at least two parts to the matrix of (l2, l2, l3, ...).

    The result has d_1 = 0 and entry sum n - (l1 - l2).
    """
    if not isinstance(p, Partition):
        p = Partition(tuple(p))
    if n is not None and p.weight != n:
        raise ValueError(f"{p.parts} is not a partition of {n}")
    if len(p) < 2:
        raise ValueError("single-part partitions have no image in M0(n)")
    return partition_to_matrix((p[1],) + p.parts[1:])


def lift_from_M0(m: TwoLineMatrix, n: int) -> Partition:
    """Inverse of `project_to_M0`: put the slack n - ell(M) back on the first part."""
    if m.bottom[0] != 0:
        raise ValueError(f"d_1 = {m.bottom[0]}, matrix is not in M0")
    size = ell(m)
    if size > n:
        raise ValueError(f"ell(M) = {size} exceeds n = {n}")
    mu = matrix_to_partition(m).parts
    return Partition((mu[0] + n - size,) + mu[1:])
