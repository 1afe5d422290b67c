"""Frieze entries phi_i(j), maximiser sets m_i and dense cycles."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .quiddity import (
    Cycle,
    ears,
    enumerate_rotation_classes,
    eta_product,
    is_quiddity_cycle,
)


def phi_row(c: Sequence[int], i: int) -> list[int]:
    """``[phi_i(1), ..., phi_i(n)]`` by the three-term recurrence.

    Starting from ``phi_i(i) = 0`` and ``phi_i(i + 1) = 1`` the row is
    continued cyclically with ``phi_i(l) = c_{l-1} phi_i(l-1) - phi_i(l-2)``.
    """
    n = len(c)
    if n < 3:
        raise ValueError("frieze rows need n >= 3")
    if not 1 <= i <= n:
        raise ValueError(f"position {i} out of range 1..{n}")
    row = [0] * n
    prev, cur = 0, 1
    row[i % n] = 1
    for step in range(2, n):
        j = (i - 1 + step) % n  # 0-based index of vertex i + step
        prev, cur = cur, c[(j - 1) % n] * cur - prev
        row[j] = cur
    return row


def phi_matrix(c: Sequence[int], i: int, j: int) -> int:
    """phi_i(j) straight from the (2,1) entry of a product of eta matrices."""
    if i == j:
        return 0
    lo, hi = min(i, j), max(i, j)
    return eta_product(c[lo - 1:hi - 1])[1][0]


@dataclass(frozen=True)
class FriezeTable:
    cycle: Cycle

    @cached_property
    def phi(self) -> tuple[tuple[int, ...], ...]:
        """``phi[i-1][j-1] == phi_i(j)``."""
        return tuple(tuple(phi_row(self.cycle, i)) for i in range(1, len(self.cycle) + 1))

    @property
    def n(self) -> int:
        return len(self.cycle)

    def rows(self) -> list[list[int]]:
        """Frieze rows ``0..n``; entry ``i-1`` of row ``k`` is ``phi_i(i+k)``.

        Row 0 and row n are zero rows, rows 1 and n - 1 are rows of ones and
        row 2 is the cycle shifted by one.
        """
        n = self.n
        return [[self.phi[i][(i + k) % n] for i in range(n)] for k in range(n + 1)]

    def m_sets(self) -> list[frozenset[int]]:
        return [_argmax(row) for row in self.phi]

    def render_text(self, periods: int = 2) -> str:
        """Staggered text layout: row ``k`` occupies every other column."""
        n = self.n
        rows = self.rows()
        width = 2 * n * periods
        cells = [[""] * width for _ in rows]
        for k, row in enumerate(rows):
            for x in range(width):
                if (x - k + 1) % 2 == 0:
                    i = (x - k - 1) // 2
                    cells[k][x] = str(row[i % n])
        w = max(len(s) for line in cells for s in line)
        return "\n".join(" ".join(s.rjust(w) for s in line).rstrip() for line in cells) + "\n"

    def to_json(self) -> dict:
        return {
            "c": list(self.cycle),
            "phi": [list(r) for r in self.phi],
            "m": [sorted(m) for m in self.m_sets()],
        }


def _argmax(row: Sequence[int]) -> frozenset[int]:
    top = max(row)
    return frozenset(j for j, v in enumerate(row, start=1) if v == top)


def frieze_pattern(c: Sequence[int]) -> FriezeTable:
    c = tuple(c)
    if len(c) < 3:
        raise ValueError("frieze patterns need n >= 3")
    if not is_quiddity_cycle(c):
        raise ValueError(f"{c} is not a quiddity cycle")
    return FriezeTable(c)


def m_set(c: Sequence[int], i: int) -> frozenset[int]:
    return _argmax(phi_row(c, i))


def m_sizes(c: Sequence[int]) -> list[int]:
    return [len(m_set(c, i)) for i in range(1, len(c) + 1)]


def is_dense(c: Sequence[int]) -> bool:
    sizes = m_sizes(c)
    n = len(sizes)
    return all(sizes[i] > 1 or sizes[(i + 1) % n] > 1 for i in range(n))


def classify_dense(max_len: int) -> list[Cycle]:
    """Minimal-rotation representatives of all dense cycles of length <= max_len."""
    if max_len < 3:
        raise ValueError("max_len must be >= 3")
    found = []
    for n in range(3, max_len + 1):
        found += [c for c in enumerate_rotation_classes(n) if is_dense(c)]
    return sorted(found, key=lambda c: (len(c), c))


def crossing_index(c: Sequence[int], e1: int, e2: int) -> int:
    """The unique l in [e1, e2) where phi_j(e1) - phi_j(e2) changes sign.

    phi_j(e1) < phi_j(e2) for e1 <= j < l, phi_l(e1) <= phi_l(e2) and
    phi_j(e1) > phi_j(e2) for l < j <= e2.
    """
    ear_set = ears(c)
    if e1 not in ear_set or e2 not in ear_set:
        raise ValueError(f"{e1} and {e2} must both be ears of {tuple(c)}")
    if not e1 < e2:
        raise ValueError("need e1 < e2")
    # diff[j] = phi_j(e1) - phi_j(e2), using phi_j(e) = phi_e(j)
    r1, r2 = phi_row(c, e1), phi_row(c, e2)
    diff = {j: r1[j - 1] - r2[j - 1] for j in range(e1, e2 + 1)}
    hits = [
        ell for ell in range(e1, e2)
        if diff[ell] <= 0
        and all(diff[j] < 0 for j in range(e1, ell))
        and all(diff[j] > 0 for j in range(ell + 1, e2 + 1))
    ]
    assert len(hits) == 1, f"sign pattern not unique: {hits}"
    return hits[0]


# The five dense cycles, as minimal rotations.
DENSE_CYCLES: tuple[Cycle, ...] = (
    (1, 1, 1),
    (1, 2, 1, 2),
    (1, 3, 1, 3, 1, 3),
    (1, 3, 1, 4, 1, 3, 1, 4),
    (1, 3, 1, 5, 1, 3, 1, 5, 1, 3, 1, 5),
)
