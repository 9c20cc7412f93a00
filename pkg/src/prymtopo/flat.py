"""Polygon models of k-differentials with a single zero on their canonical cover.

A :class:`KPolygon` is a counter-clockwise polygon whose sides are glued in
pairs ``(i, j, m)``: side ``j`` traversed backwards is side ``i`` rotated by
``2 pi m / k``, i.e. ``v_j = -exp(2 pi i m / k) v_i`` for the side vectors.
Unfolding takes ``k`` rotated copies and glues them so that every
identification becomes a translation (the canonical k-cover).

Four families are provided:

* ``turtle_base(c)``: 4-differential on a torus, zero of angle 7(2pi/4), pole
  of angle 2pi/4, free side ``c``.
* ``hurricane_base(b)``: 6-differential on the sphere, zero 7(2pi/6), poles
  2pi/6, 2(2pi/6), 2(2pi/6), free side ``b``.
* ``c10_base()``: 10-differential kite, zero 7(2pi/10), poles 2pi/10, 2(2pi/10).
* ``c12_base()``: 12-differential kite, zero 7(2pi/12), poles 2pi/12, 4(2pi/12).

Every canonical cover is a genus-4 translation surface with one cone point of
angle 14 pi.
"""
from __future__ import annotations

import cmath
import json
import math
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .errors import DegenerateParameter, GluingError

TOL = 1e-9
TWO_PI = 2 * math.pi


def _root(k: int, m: int) -> complex:
    return cmath.exp(2j * math.pi * (m % k) / k)


def _as_complex(z) -> complex:
    if isinstance(z, (tuple, list)):
        x, y = z
        return complex(float(x), float(y))
    return complex(z)


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)

    def classes(self) -> list[list]:
        groups: dict = {}
        for x in sorted(self.parent):
            groups.setdefault(self.find(x), []).append(x)
        return sorted(groups.values())


def _interior_angles(edges: Sequence[complex]) -> list[float]:
    """Angle at vertex r, between incoming side r-1 and outgoing side r."""
    n = len(edges)
    return [math.pi - cmath.phase(edges[r] / edges[r - 1]) for r in range(n)]


def _vertices(edges: Sequence[complex], start: complex = 0j) -> list[complex]:
    pts = [start]
    for v in edges[:-1]:
        pts.append(pts[-1] + v)
    return pts


def _cross(u: complex, v: complex) -> float:
    return u.real * v.imag - u.imag * v.real


def _segments_meet(p1: complex, p2: complex, q1: complex, q2: complex) -> bool:
    """Closed segments p1p2 and q1q2 intersect (touching counts)."""
    d1 = _cross(q2 - q1, p1 - q1)
    d2 = _cross(q2 - q1, p2 - q1)
    d3 = _cross(p2 - p1, q1 - p1)
    d4 = _cross(p2 - p1, q2 - p1)
    if ((d1 > TOL and d2 < -TOL) or (d1 < -TOL and d2 > TOL)) and \
            ((d3 > TOL and d4 < -TOL) or (d3 < -TOL and d4 > TOL)):
        return True

    def on_segment(a, b, p, d):
        return abs(d) <= TOL and min(a.real, b.real) - TOL <= p.real <= max(a.real, b.real) + TOL \
            and min(a.imag, b.imag) - TOL <= p.imag <= max(a.imag, b.imag) + TOL

    return (on_segment(q1, q2, p1, d1) or on_segment(q1, q2, p2, d2)
            or on_segment(p1, p2, q1, d3) or on_segment(p1, p2, q2, d4))


def is_simple(vertices: Sequence[complex]) -> bool:
    n = len(vertices)
    segs = [(vertices[r], vertices[(r + 1) % n]) for r in range(n)]
    if any(abs(b - a) <= TOL for a, b in segs):
        return False
    for r in range(n):
        for s in range(r + 1, n):
            if s == r + 1 or (r == 0 and s == n - 1):
                continue
            if _segments_meet(*segs[r], *segs[s]):
                return False
    return True


def signed_area(vertices: Sequence[complex]) -> float:
    n = len(vertices)
    return 0.5 * sum(_cross(vertices[r], vertices[(r + 1) % n]) for r in range(n))


def _corner_classes(n_faces: int, n_edges: int, gluing: dict) -> list[list[tuple[int, int]]]:
    """Corners ``(face, r)`` identified by the side gluings.

    Side ``(s, i)`` runs from corner ``(s, i)`` to ``(s, i + 1)``; gluing it to
    side ``(t, j)`` with reversed orientation identifies ``(s, i) ~ (t, j + 1)``
    and ``(s, i + 1) ~ (t, j)``.
    """
    uf = _UnionFind([(s, r) for s in range(n_faces) for r in range(n_edges)])
    for (s, i), (t, j) in gluing.items():
        uf.union((s, i), (t, (j + 1) % n_edges))
        uf.union((s, (i + 1) % n_edges), (t, j))
    return uf.classes()


@dataclass(frozen=True)
class KPolygon:
    k: int
    edges: tuple[complex, ...]
    pairing: tuple[tuple[int, int, int], ...]
    cone_spec: tuple[tuple[str, int], ...]
    name: str = ""

    @property
    def n(self) -> int:
        return len(self.edges)

    def vertices(self) -> list[complex]:
        return _vertices(self.edges)

    def interior_angles(self) -> list[float]:
        return _interior_angles(self.edges)

    def side_gluing(self) -> dict[tuple[int, int], tuple[int, int]]:
        g = {}
        for i, j, _ in self.pairing:
            g[(0, i)] = (0, j)
            g[(0, j)] = (0, i)
        return g

    def vertex_classes(self) -> list[list[int]]:
        return [[r for _, r in cls] for cls in _corner_classes(1, self.n, self.side_gluing())]

    def cone_angles(self) -> list[float]:
        ang = self.interior_angles()
        return [sum(ang[r] for r in cls) for cls in self.vertex_classes()]

    def genus(self) -> int:
        chi = len(self.vertex_classes()) - self.n // 2 + 1
        return (2 - chi) // 2

    def validate(self) -> None:
        """Check closure, simplicity, pairing data and cone angles."""
        if abs(sum(self.edges)) > TOL:
            raise DegenerateParameter(f"{self.name}: polygon does not close")
        verts = self.vertices()
        if not is_simple(verts) or signed_area(verts) <= 0:
            raise DegenerateParameter(f"{self.name}: polygon is not simple and counter-clockwise")
        angle_sum = sum(self.interior_angles())
        if abs(angle_sum - (self.n - 2) * math.pi) > TOL:
            raise DegenerateParameter(f"{self.name}: interior angles sum to {angle_sum}")
        used = Counter(x for i, j, _ in self.pairing for x in (i, j))
        if sorted(used) != list(range(self.n)) or any(v != 1 for v in used.values()):
            raise GluingError(f"{self.name}: every side must occur in exactly one pair")
        for i, j, m in self.pairing:
            vi, vj = self.edges[i], self.edges[j]
            if abs(abs(vi) - abs(vj)) > TOL or abs(vj + _root(self.k, m) * vi) > TOL:
                raise GluingError(f"{self.name}: sides {i}, {j} do not differ by rotation {m}/{self.k}")
        want = sorted(mult for _, mult in self.cone_spec)
        got = sorted(a * self.k / TWO_PI for a in self.cone_angles())
        if len(want) != len(got) or any(abs(w - x) > TOL for w, x in zip(want, got)):
            raise DegenerateParameter(f"{self.name}: cone angles {got} (units 2pi/k) != {want}")

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "k": self.k,
            "edges": [[v.real, v.imag] for v in self.edges],
            "pairing": [list(p) for p in self.pairing],
            "cone_spec": [list(c) for c in self.cone_spec],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    @classmethod
    def from_dict(cls, data: dict) -> "KPolygon":
        return cls(int(data["k"]), tuple(complex(x, y) for x, y in data["edges"]),
                   tuple((int(i), int(j), int(m)) for i, j, m in data["pairing"]),
                   tuple((str(lab), int(m)) for lab, m in data["cone_spec"]), data.get("name", ""))


def _adjacent_pole(k: int, q: int) -> tuple[complex, int]:
    """Rotation taking side r-1 to side r when vertex r is a pole of angle q(2pi/k),
    and the pairing multiple ``m`` for the pair (r-1, r)."""
    m = (-q) % k
    return -_root(k, m), m


def _build(name: str, k: int, edges, pairing, cone_spec) -> KPolygon:
    p = KPolygon(k, tuple(complex(v) for v in edges), tuple(pairing), tuple(cone_spec), name)
    p.validate()
    return p


def turtle_base(c=(1.0, 0.3)) -> KPolygon:
    """Hexagon of the order-4 family; ``c`` is the free side (complex or (x, y)).

    Sides 0, 1 meet at the pole; sides (2, 4) and (3, 5) are interleaved so
    that the quotient is a torus.
    """
    c = _as_complex(c)
    if abs(c) <= TOL:
        raise DegenerateParameter("turtle: c must be nonzero")
    rot, m = _adjacent_pole(4, 1)  # rot = i
    v3 = -(1 + c)
    edges = [1, rot, c, v3, rot * c, rot * v3]
    return _build("turtle", 4, edges, [(0, 1, m), (2, 4, m), (3, 5, m)],
                  [("zero", 7), ("pole", 1)])


def hurricane_base(b=(0.9, 0.6)) -> KPolygon:
    """Hexagon of the order-6 family with three poles at alternate corners."""
    b = _as_complex(b)
    if abs(b) <= TOL:
        raise DegenerateParameter("hurricane: b must be nonzero")
    r1, m1 = _adjacent_pole(6, 1)
    r3, m3 = _adjacent_pole(6, 2)
    r5, m5 = _adjacent_pole(6, 2)
    v0, v2 = 1, b
    v4 = -(v0 + r1 * v0 + v2 + r3 * v2) / (1 + r5)
    edges = [v0, r1 * v0, v2, r3 * v2, v4, r5 * v4]
    return _build("hurricane", 6, edges, [(0, 1, m1), (2, 3, m3), (4, 5, m5)],
                  [("zero", 7), ("pole", 1), ("pole", 2), ("pole", 2)])


def _kite(name: str, k: int, q1: int, q3: int) -> KPolygon:
    r1, m1 = _adjacent_pole(k, q1)
    r3, m3 = _adjacent_pole(k, q3)
    v2 = -(1 + r1) / (1 + r3)
    return _build(name, k, [1, r1, v2, r3 * v2], [(0, 1, m1), (2, 3, m3)],
                  [("zero", 7), ("pole", q1), ("pole", q3)])


def c10_base() -> KPolygon:
    """Kite with corners 7pi/10, 2pi/10, 7pi/10, 2pi/5."""
    return _kite("c10", 10, 1, 2)


def c12_base() -> KPolygon:
    """Kite with corners 7pi/12, 2pi/12, 7pi/12, 2pi/3."""
    return _kite("c12", 12, 1, 4)


FAMILIES = {"turtle": turtle_base, "hurricane": hurricane_base, "c10": c10_base, "c12": c12_base}


# -- canonical covers --------------------------------------------------------

@dataclass(frozen=True)
class TranslationSurface:
    """Glued complex of ``degree`` rotated copies of a k-polygon.

    For ``degree == k`` every gluing is a translation. Smaller degrees give
    the intermediate covers, whose gluings still rotate by multiples of
    ``2 pi / residual_order``.
    """

    base: KPolygon
    degree: int
    faces: tuple[tuple[complex, ...], ...]
    gluing: dict = field(compare=False)
    vertex_classes: tuple[tuple[tuple[int, int], ...], ...]
    cone_angles: tuple[float, ...]
    genus: int

    @property
    def residual_order(self) -> int:
        return self.base.k // self.degree

    @property
    def is_translation(self) -> bool:
        return self.residual_order == 1

    def face_edges(self, s: int) -> list[complex]:
        f = self.faces[s]
        return [f[(r + 1) % len(f)] - f[r] for r in range(len(f))]

    def cone_points(self) -> list[int]:
        """Indices of vertex classes whose angle is not 2 pi."""
        return [c for c, a in enumerate(self.cone_angles) if abs(a - TWO_PI) > TOL]

    def gauss_bonnet_total(self) -> float:
        return sum(a - TWO_PI for a in self.cone_angles)

    def euler_characteristic(self) -> int:
        n = self.base.n
        return len(self.vertex_classes) - self.degree * n // 2 + self.degree

    def rotation_action(self) -> tuple[list[int], list[int]]:
        """Action of rotation by 2pi/k: (face permutation, vertex-class permutation).

        Raises :class:`GluingError` if the rotation does not respect the gluing.
        """
        d, n = self.degree, self.base.n
        faces = [(s + 1) % d for s in range(d)]
        for (s, i), (t, j) in self.gluing.items():
            if self.gluing[(faces[s], i)] != (faces[t], j):
                raise GluingError("rotation does not preserve the gluing")
        where = {corner: c for c, cls in enumerate(self.vertex_classes) for corner in cls}
        classes = []
        for cls in self.vertex_classes:
            images = {where[(faces[s], r)] for s, r in cls}
            if len(images) != 1:
                raise GluingError("rotation does not map vertex classes to vertex classes")
            classes.append(images.pop())
        return faces, classes


def unfold(p: KPolygon, degree: int | None = None) -> TranslationSurface:
    """Glue ``degree`` rotated copies of ``p`` (default: the full canonical k-cover).

    Copy ``s`` is ``p`` rotated by ``2 pi s / k``. Side ``i`` of copy ``s`` is
    glued to side ``j`` of copy ``s - m`` for each pair ``(i, j, m)``.
    """
    k = p.k
    d = k if degree is None else degree
    if d < 1 or k % d:
        raise GluingError(f"cover degree {d} does not divide k = {k}")
    base = p.vertices()
    faces = tuple(tuple(_root(k, s) * z for z in base) for s in range(d))
    edge_vec = [[_root(k, s) * v for v in p.edges] for s in range(d)]
    gluing: dict[tuple[int, int], tuple[int, int]] = {}
    for i, j, m in p.pairing:
        for s in range(d):
            t = (s - m) % d
            # residual rotation is a multiple of 2pi d / k
            rot = _root(k, t + m - s)
            if abs(edge_vec[t][j] + rot * edge_vec[s][i]) > TOL:
                raise GluingError(f"side {i} of copy {s} does not match side {j} of copy {t}")
            for a, b in (((s, i), (t, j)), ((t, j), (s, i))):
                if gluing.setdefault(a, b) != b:
                    raise GluingError(f"side {a} glued twice")
    if len(gluing) != d * p.n:
        raise GluingError("not every side is glued")
    # connectedness
    uf = _UnionFind(range(d))
    for (s, _), (t, _) in gluing.items():
        uf.union(s, t)
    if len(uf.classes()) != 1:
        raise GluingError(f"{d}-fold cover of {p.name} is disconnected")
    classes = _corner_classes(d, p.n, gluing)
    ang = p.interior_angles()
    cone = tuple(sum(ang[r] for _, r in cls) for cls in classes)
    chi = len(classes) - d * p.n // 2 + d
    if chi % 2:
        raise GluingError(f"odd Euler characteristic {chi}")
    return TranslationSurface(p, d, faces, gluing, tuple(tuple(c) for c in classes), cone, (2 - chi) // 2)


# -- SVG ---------------------------------------------------------------------

def _label(n: int) -> str:
    s = ""
    n += 1
    while n:
        n, r = divmod(n - 1, 26)
        s = chr(97 + r) + s
    return s


def _layout(p: KPolygon, d: int) -> list[list[complex]]:
    """Copies of ``p`` placed around a circle, each a translate of its face."""
    verts = p.vertices()
    centre = sum(verts) / len(verts)
    radius = max(abs(z - centre) for z in verts)
    R = 0.0 if d == 1 else 1.15 * radius / math.sin(math.pi / d)
    return [[_root(p.k, s) * (z - centre + R) for z in verts] for s in range(d)]


def _svg(polys: list[list[complex]], labels: list[list[str]], title: str) -> str:
    xs = [z.real for poly in polys for z in poly]
    ys = [z.imag for poly in polys for z in poly]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    scale = 560 / span
    pad = 20

    def pt(z):
        return (pad + (z.real - min(xs)) * scale, pad + (max(ys) - z.imag) * scale)

    w = (max(xs) - min(xs)) * scale + 2 * pad
    h = (max(ys) - min(ys)) * scale + 2 * pad
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.2f}" height="{h:.2f}" '
           f'viewBox="0 0 {w:.2f} {h:.2f}">', f"<title>{title}</title>"]
    font = max(8.0, min(16.0, 0.04 * span * scale))
    for face, (poly, labs) in enumerate(zip(polys, labels)):
        path = " ".join(f"{x:.3f},{y:.3f}" for x, y in map(pt, poly))
        out.append(f'<polygon points="{path}" fill="#dde8f5" stroke="#1f3b5c" stroke-width="1.2" '
                   f'data-face="{face}"/>')
        centre = sum(poly) / len(poly)
        for r, lab in enumerate(labs):
            a, b = poly[r], poly[(r + 1) % len(poly)]
            mid = (a + b) / 2
            mid += 0.12 * (centre - mid)
            x, y = pt(mid)
            out.append(f'<text x="{x:.3f}" y="{y:.3f}" font-size="{font:.1f}" text-anchor="middle" '
                       f'dominant-baseline="middle">{lab}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def svg_string(obj: KPolygon | TranslationSurface) -> str:
    if isinstance(obj, KPolygon):
        labels = [""] * obj.n
        for pair, (i, j, m) in enumerate(obj.pairing):
            labels[i] = labels[j] = _label(pair)
        return _svg([obj.vertices()], [labels], f"{obj.name} {obj.k}-differential")
    p, d = obj.base, obj.degree
    names: dict[tuple[int, int], str] = {}
    for side in sorted(obj.gluing):
        if side not in names:
            names[side] = names[obj.gluing[side]] = _label(len(names) // 2)
    labels = [[names[(s, r)] for r in range(p.n)] for s in range(d)]
    return _svg(_layout(p, d), labels, f"{p.name} {d}-fold cover, genus {obj.genus}")


def emit_svg(obj: KPolygon | TranslationSurface, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(svg_string(obj), encoding="utf-8")
    return path
