"""Exact planar geometry of integer lines clipped to a rational window.

Coordinates are :class:`fractions.Fraction`; nothing in here compares
against a tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, cmp_to_key
from math import gcd, lcm
from typing import Iterable, NamedTuple, Optional

Rational = Fraction
Point = tuple[Fraction, Fraction]


@dataclass(frozen=True, order=True)
class IntLine:
    """The line ``a*x + b*y + d = 0`` in canonical form.

    ``gcd(a, b, d) == 1`` and the first nonzero of ``(a, b)`` is positive, so
    two instances are equal exactly when they describe the same line.
    """

    a: int
    b: int
    d: int

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("(a, b) must not be (0, 0)")
        g = gcd(self.a, self.b, self.d)
        s = 1 if (self.a > 0 or (self.a == 0 and self.b > 0)) else -1
        if g != 1 or s != 1:
            object.__setattr__(self, "a", s * self.a // g)
            object.__setattr__(self, "b", s * self.b // g)
            object.__setattr__(self, "d", s * self.d // g)

    @classmethod
    def from_rational(cls, a, b, d) -> IntLine:
        a, b, d = Fraction(a), Fraction(b), Fraction(d)
        m = lcm(a.denominator, b.denominator, d.denominator)
        return cls(int(a * m), int(b * m), int(d * m))

    def value(self, x, y):
        return self.a * x + self.b * y + self.d

    @property
    def direction(self) -> tuple[int, int]:
        return (-self.b, self.a)

    def translate(self, tx, ty) -> IntLine:
        """The image of this line under ``p -> p + (tx, ty)``."""
        return IntLine.from_rational(self.a, self.b, self.d - self.a * Fraction(tx) - self.b * Fraction(ty))

    def __str__(self):
        return f"{self.a}x{self.b:+d}y{self.d:+d}=0"


def intersect(l1: IntLine, l2: IntLine) -> Optional[Point]:
    den = l1.a * l2.b - l2.a * l1.b
    if den == 0:
        return None
    return (
        Fraction(l1.b * l2.d - l2.b * l1.d, den),
        Fraction(l2.a * l1.d - l1.a * l2.d, den),
    )


class Window(NamedTuple):
    x0: Fraction
    y0: Fraction
    x1: Fraction
    y1: Fraction

    @classmethod
    def of(cls, x0, y0, x1, y1) -> Window:
        w = cls(Fraction(x0), Fraction(y0), Fraction(x1), Fraction(y1))
        if not (w.x0 < w.x1 and w.y0 < w.y1):
            raise ValueError(f"degenerate window {w}")
        return w

    def corners(self) -> list[Point]:
        return [(self.x0, self.y0), (self.x1, self.y0), (self.x1, self.y1), (self.x0, self.y1)]

    def contains(self, p: Point) -> bool:
        return self.x0 <= p[0] <= self.x1 and self.y0 <= p[1] <= self.y1

    def inflate(self, m) -> Window:
        return Window.of(self.x0 - m, self.y0 - m, self.x1 + m, self.y1 + m)

    def shift(self, tx, ty) -> Window:
        return Window.of(self.x0 + tx, self.y0 + ty, self.x1 + tx, self.y1 + ty)

    def area(self) -> Fraction:
        return (self.x1 - self.x0) * (self.y1 - self.y0)

    def boundary(self) -> list[IntLine]:
        return [
            IntLine.from_rational(0, 1, -self.y0),
            IntLine.from_rational(1, 0, -self.x1),
            IntLine.from_rational(0, 1, -self.y1),
            IntLine.from_rational(1, 0, -self.x0),
        ]

    def cuts(self, line: IntLine) -> bool:
        """True if ``line`` meets the open window."""
        vals = [line.value(x, y) for x, y in self.corners()]
        return min(vals) < 0 < max(vals)


@dataclass(frozen=True)
class Face:
    """Convex cell; ``lines[k]`` supports the edge ``vertices[k] -> vertices[k+1]``."""

    vertices: tuple[Point, ...]
    lines: tuple[IntLine, ...]
    clipped: bool

    @cached_property
    def walls(self) -> tuple[IntLine, ...]:
        return tuple(dict.fromkeys(self.lines))

    @cached_property
    def corners(self) -> tuple[Point, ...]:
        """Vertices with straight angles removed."""
        return tuple(
            v for k, v in enumerate(self.vertices) if self.lines[k - 1] != self.lines[k]
        )

    @property
    def is_triangle(self) -> bool:
        return len(self.walls) == 3

    @cached_property
    def area(self) -> Fraction:
        return shoelace(self.vertices)

    @cached_property
    def barycenter(self) -> Point:
        cs = self.corners
        return (sum(p[0] for p in cs) / len(cs), sum(p[1] for p in cs) / len(cs))

    def contains(self, p: Point) -> bool:
        """Strict interior membership."""
        vs = self.vertices
        for k in range(len(vs)):
            (ax, ay), (bx, by) = vs[k], vs[(k + 1) % len(vs)]
            if (bx - ax) * (p[1] - ay) - (by - ay) * (p[0] - ax) <= 0:
                return False
        return True

    def translate(self, tx, ty) -> Face:
        return _normalized_face(
            [(x + tx, y + ty) for x, y in self.vertices],
            [ln.translate(tx, ty) for ln in self.lines],
            self.clipped,
        )


def shoelace(vs) -> Fraction:
    s = Fraction(0)
    for k in range(len(vs)):
        (ax, ay), (bx, by) = vs[k], vs[(k + 1) % len(vs)]
        s += ax * by - bx * ay
    return s / 2


def _normalized_face(vs, lines, clipped) -> Face:
    k = min(range(len(vs)), key=lambda t: (vs[t][1], vs[t][0]))
    return Face(tuple(vs[k:] + vs[:k]), tuple(lines[k:] + lines[:k]), clipped)


def _face_key(f: Face):
    return (f.vertices[0][1], f.vertices[0][0], f.vertices[1:])


@dataclass(frozen=True)
class CellComplex:
    window: Window
    lines: frozenset[IntLine]
    vertices: tuple[Point, ...]
    edges: tuple[tuple[Point, Point, IntLine], ...]
    faces: tuple[Face, ...]
    artificial: frozenset[IntLine]

    def euler_characteristic(self) -> int:
        """V - E + F counting the outer face; 2 for a connected plane graph."""
        return len(self.vertices) - len(self.edges) + len(self.faces) + 1

    def locate(self, p: Point) -> Optional[Face]:
        for f in self.faces:
            if f.contains(p):
                return f
        return None


def _half_plane(v) -> int:
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def _angle_cmp(u, v) -> int:
    hu, hv = _half_plane(u), _half_plane(v)
    if hu != hv:
        return hu - hv
    cross = u[0] * v[1] - u[1] * v[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


_angle_key = cmp_to_key(_angle_cmp)


def build_cell_complex(lines: Iterable[IntLine], window: Window) -> CellComplex:
    """Subdivide ``window`` by ``lines``.

    Lines are split against each other pairwise, the resulting plane graph is
    walked face by face.  Window sides that do not lie on an input line are
    reported in ``artificial`` and faces touching them carry ``clipped=True``.
    """
    lines = set(lines)
    real = {ln for ln in lines if window.cuts(ln)}
    boundary = window.boundary()
    # input lines that coincide with a window side are kept as real lines
    on_side = {ln for ln in lines if ln in boundary}
    artificial = frozenset(b for b in boundary if b not in on_side)
    all_lines = sorted(real | set(boundary))

    pts: dict[IntLine, set[Point]] = {ln: set() for ln in all_lines}
    for k, l1 in enumerate(all_lines):
        for l2 in all_lines[k + 1:]:
            p = intersect(l1, l2)
            if p is not None and window.contains(p):
                pts[l1].add(p)
                pts[l2].add(p)

    edges: list[tuple[Point, Point, IntLine]] = []
    out: dict[Point, list[tuple[tuple[int, int], Point, IntLine]]] = {}
    for ln in all_lines:
        dx, dy = ln.direction
        seq = sorted(pts[ln], key=lambda p: dx * p[0] + dy * p[1])
        for p, q in zip(seq, seq[1:]):
            edges.append((p, q, ln))
            out.setdefault(p, []).append(((dx, dy), q, ln))
            out.setdefault(q, []).append(((-dx, -dy), p, ln))

    # outgoing half-edges at each vertex, counterclockwise
    ccw: dict[Point, list[tuple[Point, IntLine]]] = {}
    pos: dict[tuple[Point, Point], int] = {}
    for v, hs in out.items():
        hs.sort(key=lambda h: _angle_key(h[0]))
        ccw[v] = [(q, ln) for _, q, ln in hs]
        for k, (q, _) in enumerate(ccw[v]):
            pos[(v, q)] = k

    faces: list[Face] = []
    used: set[tuple[Point, Point]] = set()
    for u, hs in ccw.items():
        for v, ln in hs:
            if (u, v) in used:
                continue
            vs, ls = [], []
            a, b, lab = u, v, ln
            while (a, b) not in used:
                used.add((a, b))
                vs.append(a)
                ls.append(lab)
                around = ccw[b]
                a, (b, lab) = b, around[pos[(b, a)] - 1]
            if shoelace(vs) > 0:
                clipped = any(x in artificial for x in ls)
                faces.append(_normalized_face(vs, ls, clipped))

    faces.sort(key=_face_key)
    return CellComplex(
        window=window,
        lines=frozenset(real | on_side),
        vertices=tuple(sorted(out, key=lambda p: (p[1], p[0]))),
        edges=tuple(edges),
        faces=tuple(faces),
        artificial=artificial,
    )
