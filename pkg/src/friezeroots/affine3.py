"""Rank-three affine arrangements of imaginary type A_1^(1).

The root set attached to a cycle ``c`` and a rank-two chamber ``i`` is
``{(a, b, d) : (a, b) in +-R_i, d in Z}`` where ``R_i`` are the positive
roots of :func:`friezeroots.rank2roots.positive_roots`.  The arrangement is
studied in the affine slice ``z = 1``, where the root ``(a, b, d)`` becomes
the line ``a*x + b*y + d = 0``.  Since ``(1, 0)`` and ``(0, 1)`` are always
positive roots, the slice is periodic under ``Z^2`` and every chamber lies
inside a unit lattice square.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import NamedTuple, Optional, Sequence

from .exactgeom import Face, IntLine, Window, build_cell_complex
from .quiddity import Cycle, is_quiddity_cycle
from .rank2roots import positive_roots

Root3 = tuple[int, int, int]

FUNDAMENTAL_WINDOW = Window.of(-1, -1, 2, 2)
UNIT_SQUARE = Window.of(0, 0, 1, 1)
IMAGINARY_ROOT: Root3 = (0, 0, 1)


@dataclass(frozen=True)
class AffineRootSet:
    cycle: Cycle
    chamber: int
    positive: tuple[tuple[int, int], ...]

    @property
    def finite_roots(self) -> tuple[tuple[int, int], ...]:
        return self.positive + tuple((-a, -b) for a, b in self.positive)

    def __contains__(self, root) -> bool:
        a, b, _ = root
        return (a, b) in self.finite_roots

    def roots(self, d_bound: int) -> list[Root3]:
        """All roots with ``|d| <= d_bound``."""
        return [(a, b, d) for a, b in self.finite_roots for d in range(-d_bound, d_bound + 1)]


def affine_root_set(c: Sequence[int], chamber: int = 1) -> AffineRootSet:
    c = tuple(c)
    if len(c) < 3 or not is_quiddity_cycle(c):
        raise ValueError(f"{c} is not a quiddity cycle of length >= 3")
    if not 1 <= chamber <= len(c):
        raise ValueError(f"chamber {chamber} out of range 1..{len(c)}")
    return AffineRootSet(c, chamber, positive_roots(c, chamber).roots)


def slice_lines(A: AffineRootSet, window: Window, margin=0) -> set[IntLine]:
    """Every slice line meeting ``window`` inflated by ``margin``."""
    big = window.inflate(Fraction(margin)) if margin else window
    out = set()
    for a, b in A.positive:
        vals = [a * x + b * y for x, y in big.corners()]
        for d in range(ceil(-max(vals)), floor(-min(vals)) + 1):
            out.add(IntLine(a, b, d))
    return out


def det3(m) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


@dataclass(frozen=True)
class Chamber3:
    face: Face
    walls: tuple[IntLine, ...]
    normals: tuple[Root3, ...]  # inward: positive at the barycenter
    det_abs: Optional[int]  # None unless the cell is a triangle

    @property
    def is_triangle(self) -> bool:
        return len(self.walls) == 3

    def to_json(self) -> dict:
        return {
            "vertices": [[str(x), str(y)] for x, y in self.face.corners],
            "normals": [list(v) for v in self.normals],
        }


def _chamber(face: Face) -> Chamber3:
    bx, by = face.barycenter
    normals = []
    for ln in face.walls:
        s = 1 if ln.value(bx, by) > 0 else -1
        normals.append((s * ln.a, s * ln.b, s * ln.d))
    normals = tuple(normals)
    det_abs = abs(det3(normals)) if len(normals) == 3 else None
    return Chamber3(face, face.walls, normals, det_abs)


def _in_unit_cell(p, tx=0, ty=0) -> bool:
    return tx <= p[0] < tx + 1 and ty <= p[1] < ty + 1


def fundamental_cells(
    A: AffineRootSet,
    window: Window = FUNDAMENTAL_WINDOW,
    margin=1,
    offset: tuple[int, int] = (0, 0),
) -> list[Chamber3]:
    """Cells whose barycenter lies in ``[0, 1)^2`` shifted by ``offset``."""
    tx, ty = offset
    if not (window.x0 <= tx and window.y0 <= ty and tx + 1 <= window.x1 and ty + 1 <= window.y1):
        raise ValueError("window must contain the unit cell")
    cx = build_cell_complex(slice_lines(A, window, margin), window)
    return [
        _chamber(f) for f in cx.faces
        if not f.clipped and _in_unit_cell(f.barycenter, tx, ty)
    ]


class SimplicialVerdict(NamedTuple):
    simplicial: bool
    witness: Optional[Chamber3]
    cells: int


def is_simplicial_affine(
    c: Sequence[int], chamber: int = 1, window: Window = FUNDAMENTAL_WINDOW
) -> SimplicialVerdict:
    cells = fundamental_cells(affine_root_set(c, chamber), window)
    bad = next((ch for ch in cells if not ch.is_triangle), None)
    return SimplicialVerdict(bad is None, bad, len(cells))


def _simplicial_cells(c, chamber, window) -> list[Chamber3]:
    cells = fundamental_cells(affine_root_set(c, chamber), window)
    bad = next((ch for ch in cells if not ch.is_triangle), None)
    if bad is not None:
        raise ValueError(
            f"{tuple(c)} is not simplicial: cell with {len(bad.walls)} walls at {bad.face.corners}"
        )
    return cells


def determinant_classes(
    c: Sequence[int], chamber: int = 1, window: Window = FUNDAMENTAL_WINDOW
) -> dict[Fraction, int]:
    """Histogram of ``|det K| / |det C|`` over the fundamental chambers ``C``.

    The reference ``K`` is the first chamber of smallest ``|det|``, so every
    ratio is the determinant of a base change from ``C`` to ``K`` and lies in
    ``(0, 1]``.
    """
    cells = _simplicial_cells(c, chamber, window)
    ref = min(ch.det_abs for ch in cells)
    hist = Counter(Fraction(ref, ch.det_abs) for ch in cells)
    return dict(sorted(hist.items(), reverse=True))


class CAWitness(NamedTuple):
    cell: Chamber3
    root: Root3
    coordinates: tuple[Fraction, Fraction, Fraction]


class CAVerdict(NamedTuple):
    crystallographic: bool
    witness: Optional[CAWitness]
    d_bound: int


def coordinates_in_basis(root: Root3, basis: Sequence[Root3]) -> tuple[Fraction, ...]:
    """Solve ``root = sum k_i basis[i]`` by Cramer's rule."""
    D = det3(basis)
    if D == 0:
        raise ValueError("basis is singular")
    out = []
    for k in range(3):
        m = list(basis)
        m[k] = root
        out.append(Fraction(det3(m), D))
    return tuple(out)


def _ca_violation(coords) -> bool:
    if any(x.denominator != 1 for x in coords):
        return True
    return not (all(x >= 0 for x in coords) or all(x <= 0 for x in coords))


def crystallographic_check(
    c: Sequence[int], chamber: int = 1, d_bound: int = 3, window: Window = FUNDAMENTAL_WINDOW
) -> CAVerdict:
    """Check integrality and sign coherence of root coordinates per chamber.

    Only roots with ``|d| <= d_bound`` are examined, so ``True`` means no
    violation was found up to that height.
    """
    if d_bound < 2:
        raise ValueError("d_bound must be >= 2")
    A = affine_root_set(c, chamber)
    roots = A.roots(d_bound)
    for cell in _simplicial_cells(c, chamber, window):
        for r in roots:
            coords = coordinates_in_basis(r, cell.normals)
            if _ca_violation(coords):
                return CAVerdict(False, CAWitness(cell, r, coords), d_bound)
    return CAVerdict(True, None, d_bound)


def m_alpha(c: Sequence[int], i: int) -> int:
    """Roots at height one on the nearest intersection point along ``alpha_i``.

    Coordinates are those of the rank-two chamber ``(i - 1, i)``, where the
    root of vertex ``i`` is ``(1, 0)``; with ``alpha = (1, 0, 0)`` the count is
    taken over ``(a, b, 1)`` with maximal ``b``.
    """
    n = len(c)
    A = affine_root_set(c, (i - 2) % n + 1)
    assert A.positive[i - 1] == (1, 0)
    level = [(a, b) for a, b, d in A.roots(1) if d == 1]
    top = max(b for _, b in level)
    return sum(1 for _, b in level if b == top)


def analysis_report(c: Sequence[int], chamber: int = 1, d_bound: int = 3) -> dict:
    v = is_simplicial_affine(c, chamber)
    report = {
        "c": list(c),
        "chamber": chamber,
        "simplicial": v.simplicial,
        "cells": v.cells,
        "detClasses": None,
        "crystallographic": None,
        "dBound": d_bound,
    }
    if v.simplicial:
        report["detClasses"] = {str(k): n for k, n in determinant_classes(c, chamber).items()}
        report["crystallographic"] = crystallographic_check(c, chamber, d_bound).crystallographic
    return report
