"""Positive roots of the rank-two arrangement of a cycle, and their poset."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .frieze import is_dense, phi_row
from .quiddity import Cycle

Root = tuple[int, int]


@dataclass(frozen=True)
class RootSystem2:
    cycle: Cycle
    chamber: int
    roots: tuple[Root, ...]  # roots[j-1] is the label of vertex j

    @property
    def positive_roots(self) -> frozenset[Root]:
        return frozenset(self.roots)

    def to_json(self) -> dict:
        return {
            "c": list(self.cycle),
            "chamber": self.chamber,
            "roots": [list(r) for r in self.roots],
            "max": [list(r) for r in sorted(maximal_roots(self))],
        }


def positive_roots(c: Sequence[int], i: int) -> RootSystem2:
    """Roots ``(phi_i(j), phi_{i+1}(j))`` at the chamber ``(i, i+1)``."""
    c = tuple(c)
    n = len(c)
    first = phi_row(c, i)
    second = phi_row(c, i % n + 1)
    roots = tuple(zip(first, second))
    assert len(set(roots)) == n, "duplicate roots"
    return RootSystem2(c, i, roots)


def poset_leq(r: Root, s: Root) -> bool:
    return r[0] <= s[0] and r[1] <= s[1]


def maximal_roots(R: RootSystem2 | Iterable[Root]) -> set[Root]:
    roots = set(R.roots) if isinstance(R, RootSystem2) else set(R)
    return {r for r in roots if not any(r != s and poset_leq(r, s) for s in roots)}


def strictly_dominates(top: Root, roots: Iterable[Root]) -> bool:
    return all(top[0] > u and top[1] > v for (u, v) in roots if (u, v) != top)


class MaxChamber(NamedTuple):
    chamber: int
    root: Root
    strict: bool


def unique_max_chamber(c: Sequence[int]) -> MaxChamber:
    """Smallest chamber whose root poset has a unique maximal element.

    For a cycle that is not dense the chamber returned is the smallest one
    where that maximum strictly dominates every other root.
    """
    c = tuple(c)
    need_strict = not is_dense(c)
    for i in range(1, len(c) + 1):
        R = positive_roots(c, i)
        tops = maximal_roots(R)
        if len(tops) != 1:
            continue
        (top,) = tops
        strict = strictly_dominates(top, R.roots)
        if strict or not need_strict:
            return MaxChamber(i, top, strict)
    raise AssertionError(f"no chamber with a unique maximal root for {c}")
