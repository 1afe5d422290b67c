"""Quiddity cycles (eta-sequences) and triangulations of convex polygons.

A cycle is stored as a plain tuple ``(c_1, ..., c_n)``.  Positions are
1-based and cyclic throughout the package, so position ``n + 1`` is
position ``1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Sequence

Matrix = tuple[tuple[int, int], tuple[int, int]]
Cycle = tuple[int, ...]

IDENTITY: Matrix = ((1, 0), (0, 1))
MINUS_IDENTITY: Matrix = ((-1, 0), (0, -1))


def eta(a: int) -> Matrix:
    return ((a, -1), (1, 0))


def xi(a: int) -> Matrix:
    """``eta(a) @ eta(1)``, the two-step matrix used for ear-stripping."""
    return matmul(eta(a), eta(1))


def matmul(m: Matrix, k: Matrix) -> Matrix:
    (a, b), (c, d) = m
    (e, f), (g, h) = k
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def det(m: Matrix) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def eta_product(c: Sequence[int]) -> Matrix:
    if len(c) == 0:
        raise ValueError("eta_product needs a nonempty sequence")
    m = IDENTITY
    for a in c:
        m = matmul(m, eta(a))
    return m


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def rotate(c: Sequence[int], k: int = 1) -> Cycle:
    """Shift left by ``k``: ``rotate((c1, c2, c3), 1) == (c2, c3, c1)``."""
    c = tuple(c)
    if not c:
        return c
    k %= len(c)
    return c[k:] + c[:k]


def reverse(c: Sequence[int]) -> Cycle:
    return tuple(reversed(tuple(c)))


def canonical_rotation(c: Sequence[int]) -> Cycle:
    """Lexicographically smallest rotation."""
    c = tuple(c)
    return min(rotate(c, k) for k in range(len(c)))


def canonical_dihedral(c: Sequence[int]) -> Cycle:
    return min(canonical_rotation(c), canonical_rotation(reverse(c)))


def ears(c: Sequence[int]) -> set[int]:
    return {i for i, a in enumerate(c, start=1) if a == 1}


def _first_ear(c: Cycle) -> int:
    try:
        return c.index(1) + 1
    except ValueError:
        return 0


def fan_cycle(n: int) -> Cycle:
    """``(n-2, 1, 2, ..., 2, 1)``: every triangle shares vertex 1."""
    if n < 3:
        raise ValueError("a fan needs n >= 3")
    return (n - 2, 1) + (2,) * (n - 3) + (1,)


def is_fan_shaped(c: Sequence[int]) -> bool:
    c = tuple(c)
    n = len(c)
    if n < 3:
        return False
    fan = fan_cycle(n)
    return any(rotate(c, k) == fan for k in range(n))


def insert_ear(c: Sequence[int], i: int) -> Cycle:
    """Insert a new entry 1 between positions ``i`` and ``i + 1``.

    Both cyclic neighbours of the new entry are incremented.  For ``i == n``
    the new ear becomes the last entry and ``c_n``, ``c_1`` grow by one.
    """
    c = list(c)
    n = len(c)
    if n < 2:
        raise ValueError("insert_ear needs a cycle of length >= 2")
    if not 1 <= i <= n:
        raise ValueError(f"position {i} out of range 1..{n}")
    c[i - 1] += 1
    c[i % n] += 1
    c.insert(i, 1)
    return tuple(c)


def _insert_ear_at(c: Cycle, p: int) -> Cycle:
    # The new ear ends up at position p of the result (1 <= p <= n + 1).
    n = len(c)
    out = list(c)
    out[(p - 2) % n] += 1
    out[(p - 1) % n] += 1
    out.insert(p - 1, 1)
    return tuple(out)


def remove_ear(c: Sequence[int], i: int) -> Cycle:
    c = list(c)
    n = len(c)
    if n < 3:
        raise ValueError("remove_ear needs a cycle of length >= 3")
    if not 1 <= i <= n:
        raise ValueError(f"position {i} out of range 1..{n}")
    if c[i - 1] != 1:
        raise ValueError(f"position {i} is not an ear (entry {c[i - 1]})")
    c[(i - 2) % n] -= 1
    c[i % n] -= 1
    del c[i - 1]
    return tuple(c)


def is_quiddity_cycle(seq: Sequence[int]) -> bool:
    """Recognise a cycle by peeling ears down to ``(0, 0)``."""
    try:
        c = tuple(int(a) for a in seq)
    except (TypeError, ValueError):
        return False
    if len(c) < 2:
        return False
    while len(c) > 2:
        if min(c) < 1:
            return False
        e = _first_ear(c)
        if e == 0:
            return False
        c = remove_ear(c, e)
    return c == (0, 0)


# Enumeration is a reverse search: the parent of a cycle is the cycle with its
# first ear removed, so every cycle of length n is produced exactly once.

def _children(c: Cycle) -> Iterator[Cycle]:
    for p in range(1, len(c) + 2):
        child = _insert_ear_at(c, p)
        if _first_ear(child) == p:
            yield child


def _grow(roots: Sequence[Cycle], n: int) -> list[Cycle]:
    out: list[Cycle] = []
    stack = list(roots)
    while stack:
        c = stack.pop()
        if len(c) == n:
            out.append(c)
        else:
            stack.extend(_children(c))
    return out


def _level(n: int) -> list[Cycle]:
    return sorted(_grow([(0, 0)], n))


def enumerate_cycles(n: int, shard: int = 0, shards: int = 1) -> list[Cycle]:
    """All quiddity cycles of length ``n`` in lexicographic order.

    Rotations count as distinct, so there are ``catalan(n - 2)`` of them.
    With ``shards > 1`` only the ``shard``-th part of a fixed partition of the
    search tree is returned; the parts are disjoint and their union is the
    full list.
    """
    if n < 2:
        raise ValueError("cycles have length >= 2")
    if shards < 1 or not 0 <= shard < shards:
        raise ValueError("need 0 <= shard < shards")
    if shards == 1:
        return sorted(_grow([(0, 0)], n))
    split = 2
    while split < n and catalan(split - 2) < 4 * shards:
        split += 1
    roots = _level(split)[shard::shards]
    return sorted(_grow(roots, n))


def enumerate_rotation_classes(n: int) -> list[Cycle]:
    """Lexicographically minimal representatives of the rotation classes."""
    if n < 2:
        raise ValueError("cycles have length >= 2")
    reps = {(0, 0)}
    for m in range(3, n + 1):
        nxt = set()
        for c in reps:
            for i in range(1, m):
                nxt.add(canonical_rotation(insert_ear(c, i)))
        reps = nxt
    return sorted(reps)


def psi(c: Sequence[int]) -> Cycle:
    """Strip every second ear: ``(c1, 1, c3, 1, ...) -> (c1 - 2, c3 - 2, ...)``."""
    c = tuple(c)
    if c == (1, 1, 1):
        raise ValueError("psi is undefined on (1, 1, 1)")
    if len(c) % 2 or len(c) < 4 or any(a != 1 for a in c[1::2]):
        raise ValueError("psi needs even length with every even-position entry equal to 1")
    return tuple(a - 2 for a in c[0::2])


def psi_inv(c: Sequence[int]) -> Cycle:
    out: list[int] = []
    for a in c:
        out += [a + 2, 1]
    return tuple(out)


@dataclass(frozen=True)
class Triangulation:
    n: int
    triangles: tuple[tuple[int, int, int], ...]
    diagonals: frozenset[tuple[int, int]] = field(init=False)
    dual_tree: dict[int, tuple[int, ...]] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        tris = tuple(sorted(tuple(sorted(t)) for t in self.triangles))
        object.__setattr__(self, "triangles", tris)
        edges: dict[tuple[int, int], list[int]] = {}
        for k, (a, b, c) in enumerate(tris):
            for e in ((a, b), (a, c), (b, c)):
                edges.setdefault(e, []).append(k)
        diagonals = frozenset(e for e in edges if not _is_side(e, self.n))
        object.__setattr__(self, "diagonals", diagonals)
        adj: dict[int, list[int]] = {k: [] for k in range(len(tris))}
        for e in diagonals:
            ts = edges[e]
            if len(ts) == 2:
                adj[ts[0]].append(ts[1])
                adj[ts[1]].append(ts[0])
        object.__setattr__(self, "dual_tree", {k: tuple(sorted(v)) for k, v in adj.items()})

    def degrees(self) -> Cycle:
        deg = [0] * self.n
        for t in self.triangles:
            for v in t:
                deg[v - 1] += 1
        return tuple(deg)

    def validate(self) -> None:
        n = self.n
        if n < 3 or len(self.triangles) != n - 2:
            raise ValueError("a triangulated n-gon has exactly n - 2 triangles")
        if any(not 1 <= v <= n for t in self.triangles for v in t):
            raise ValueError("vertex label out of range")
        diags = sorted(self.diagonals)
        if len(diags) != n - 3:
            raise ValueError("a triangulated n-gon has exactly n - 3 diagonals")
        for k, d in enumerate(diags):
            for e in diags[k + 1:]:
                if _crossing(d, e):
                    raise ValueError(f"diagonals {d} and {e} cross")
        # connected with n - 3 edges on n - 2 nodes: a tree
        seen = {0}
        stack = [0]
        while stack:
            for nb in self.dual_tree[stack.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        if len(seen) != len(self.triangles):
            raise ValueError("dual graph is not connected")


def _is_side(e: tuple[int, int], n: int) -> bool:
    a, b = e
    return b - a == 1 or (a == 1 and b == n)


def _crossing(d: tuple[int, int], e: tuple[int, int]) -> bool:
    a, b = d
    c, f = e
    return a < c < b < f or c < a < f < b


def cycle_to_triangulation(c: Sequence[int]) -> Triangulation:
    c = tuple(c)
    if len(c) < 3:
        raise ValueError("triangulations need n >= 3")
    if not is_quiddity_cycle(c):
        raise ValueError(f"{c} is not a quiddity cycle")
    labels = list(range(1, len(c) + 1))
    cur = c
    triangles = []
    while len(cur) > 3:
        e = _first_ear(cur)
        m = len(cur)
        triangles.append((labels[(e - 2) % m], labels[e - 1], labels[e % m]))
        cur = remove_ear(cur, e)
        del labels[e - 1]
    triangles.append(tuple(labels))
    return Triangulation(len(c), tuple(triangles))


def triangulation_to_cycle(t: Triangulation) -> Cycle:
    t.validate()
    return t.degrees()
