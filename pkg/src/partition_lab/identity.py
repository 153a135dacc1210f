"""End-to-end checks of p(n) = sum_{m < n^2} |B(m, n)| + 1."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from partition_lab.matrix import ell, project_to_M0
from partition_lab.partitions import count_partitions_oracle, enumerate_partitions
from partition_lab.path import weight_P
from partition_lab.squared import B_solutions, count_B, frequency, tsquared_from_matrix

log = logging.getLogger(__name__)


@dataclass
class VerificationReport:
    n: int
    lhs: int
    rhs: int
    per_m: dict[int, int] = field(default_factory=dict)

    @property
    def match(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self, per_m: bool = False) -> dict:
        out = {"n": self.n, "p_oracle": self.lhs, "p_theorem": self.rhs, "match": self.match}
        if per_m:
            out["per_m"] = {str(m): k for m, k in sorted(self.per_m.items())}
        return out


def _candidate_ms(n: int):
    # only m = 0 or 3 (mod 4) can carry solutions
    return (m for m in range(1, n * n) if m % 4 in (0, 3))


def p_via_main_theorem(n: int) -> VerificationReport:
    if n < 1:
        raise ValueError("n must be positive")
    per_m = {}
    for m in _candidate_ms(n):
        k = count_B(m, n)
        if k:
            per_m[m] = k
    return VerificationReport(n, count_partitions_oracle(n), sum(per_m.values()) + 1, per_m)


def verify_range(n_max: int, jobs: int = 1) -> list[VerificationReport]:
    """Reports for n = 1..n_max; every n is checked even after a mismatch."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    ns = range(1, n_max + 1)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(p_via_main_theorem, ns))
    else:
        reports = [p_via_main_theorem(n) for n in ns]
    for r in reports:
        if not r.match:
            log.error("mismatch at n=%d: p(n)=%d, theorem gives %d, per_m=%s",
                      r.n, r.lhs, r.rhs, r.per_m)
    return reports


def structural_witness(n: int) -> str | None:
    """Walk partition -> M0 matrix -> t-squared -> solution tuple for every
    partition of n with two or more parts. Return a description of the first
    disagreement, or None."""
    if n < 2:
        raise ValueError("n must be at least 2")
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    for p in enumerate_partitions(n):
        if len(p) < 2:
            continue
        mat = project_to_M0(p, n)
        if ell(mat) > n:
            return f"{p.parts}: ell = {ell(mat)} exceeds {n}"
        sp = tsquared_from_matrix(mat)
        m = weight_P(mat)
        if sp.m != m:
            return f"{p.parts}: hook weight {m} != b^2 + 2a = {sp.m}"
        tup = sp.components + (0,) * (sp.b - sp.t)
        bucket = {s for sset in B_solutions(m, n) for s in sset.solutions if sset.b == sp.b}
        if tup not in bucket:
            return f"{p.parts}: solution {tup} missing from B({m}, {n})"
        key = (m,) + tup
        if key in seen:
            return f"{p.parts} and {seen[key]} both map to m={m}, {tup}"
        seen[key] = p.parts
    total = sum(count_B(m, n) for m in _candidate_ms(n))
    if total != len(seen):
        return f"chain image has {len(seen)} elements but sum of |B(m, {n})| is {total}"
    return None


def structural_check(n: int) -> bool:
    witness = structural_witness(n)
    if witness is not None:
        log.warning("structural check failed for n=%d: %s", n, witness)
    return witness is None


def image_gaps(limit: int) -> list[int]:
    """All m <= limit outside the image of P, ascending."""
    if limit < 1:
        raise ValueError("limit must be positive")
    return [m for m in range(1, limit + 1) if frequency(m) == 0]
