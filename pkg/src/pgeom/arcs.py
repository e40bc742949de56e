"""Projective planes, maximal arcs and the arc-to-partial-geometry construction."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .incidence import GeometryError, IncidenceStructure, dual
from .parallel import OrthogonalFamily, ParallelClass

# x^2+x+1, x^3+x+1, x^4+x+1 as bit patterns, keyed by field order
PRIMITIVE_POLYNOMIALS = {2: 0b11, 4: 0b111, 8: 0b1011, 16: 0b10011}


class PlaneError(GeometryError):
    def __init__(self, message: str, witness: Tuple[int, ...] = ()):
        super().__init__(message)
        self.witness = witness


class ArcError(GeometryError):
    def __init__(self, message: str, witness: Tuple[int, ...] = ()):
        super().__init__(message)
        self.witness = witness


class GF2m:
    """The field of order ``q = 2^m`` with elements encoded as bit polynomials."""

    def __init__(self, q: int):
        if q not in PRIMITIVE_POLYNOMIALS:
            raise ValueError(f"unsupported field order {q}")
        self.q = q
        self.poly = PRIMITIVE_POLYNOMIALS[q]
        m = q.bit_length() - 1
        self._mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(q):
                r = 0
                x, y = a, b
                while y:
                    if y & 1:
                        r ^= x
                    y >>= 1
                    x <<= 1
                    if x >> m & 1:
                        x ^= self.poly
                self._mul[a][b] = r

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return next(b for b in range(1, self.q) if self._mul[a][b] == 1)


def _normalized(F: GF2m, vec: Tuple[int, int, int]) -> Tuple[int, int, int]:
    """Scale so the last nonzero coordinate is 1."""
    last = next(c for c in reversed(vec) if c)
    inv = F.inv(last)
    return tuple(F.mul(c, inv) for c in vec)


def projective_points(q: int) -> List[Tuple[int, int, int]]:
    F = GF2m(q)
    reps = {_normalized(F, v) for v in product(range(q), repeat=3) if any(v)}
    return sorted(reps)


@dataclass(frozen=True)
class ProjectivePlane:
    order: int
    structure: IncidenceStructure
    coordinates: Optional[Tuple[Tuple[int, int, int], ...]] = None

    @property
    def n_points(self) -> int:
        return self.structure.v


@dataclass(frozen=True)
class MaximalArc:
    """A degree-``degree`` maximal arc: point indices of ``plane.structure``."""

    plane: ProjectivePlane
    points: FrozenSet[int]
    degree: int


@dataclass(frozen=True)
class ArcGeometry:
    """Output of :func:`construction1` with the maps back into the plane."""

    structure: IncidenceStructure
    point_map: Tuple[int, ...]  # geometry point -> plane point
    line_map: Tuple[int, ...]  # geometry line -> plane line


def desarguesian_plane(q: int) -> ProjectivePlane:
    """PG(2, q) for q in {2, 4, 8, 16}.

    Points and lines are both indexed by normalized coordinate vectors in
    lexicographic order; point x is on line a iff a.x = 0.
    """
    if q not in PRIMITIVE_POLYNOMIALS:
        raise ValueError(f"q must be one of 2, 4, 8, 16, got {q}")
    F = GF2m(q)
    pts = projective_points(q)
    lines = []
    for a in pts:
        line = []
        for i, x in enumerate(pts):
            s = F.mul(a[0], x[0]) ^ F.mul(a[1], x[1]) ^ F.mul(a[2], x[2])
            if s == 0:
                line.append(i)
        lines.append(line)
    return ProjectivePlane(q, IncidenceStructure(len(pts), lines), tuple(pts))


def verify_plane(S: IncidenceStructure) -> int:
    """The order q of a projective plane, or :class:`PlaneError` with a witness."""
    if S.b == 0 or not S.lines[0]:
        raise PlaneError("no lines")
    q = len(S.lines[0]) - 1
    if q < 2:
        raise PlaneError(f"lines of size {q + 1} are degenerate")
    n = q * q + q + 1
    if S.v != n or S.b != n:
        raise PlaneError(f"order {q} needs {n} points and lines, got v={S.v}, b={S.b}")
    for j, line in enumerate(S.lines):
        if len(line) != q + 1:
            raise PlaneError(f"line {j} has {len(line)} points, expected {q + 1}", (j,))
    for p, ls in enumerate(S.point_lines()):
        if len(ls) != q + 1:
            raise PlaneError(f"point {p} is on {len(ls)} lines, expected {q + 1}", (p,))
    masks = S.line_masks()
    for i in range(n):
        mi = masks[i]
        for j in range(i + 1, n):
            if bin(mi & masks[j]).count("1") != 1:
                raise PlaneError(f"lines {i} and {j} do not meet in exactly one point", (i, j))
    # with equal line counts, lines meeting pairwise once forces points joined once
    return q


def verify_arc(P: ProjectivePlane, pts: Iterable[int]) -> int:
    """The degree d of a maximal arc, or :class:`ArcError` naming a bad line."""
    pts = frozenset(pts)
    q = P.order
    mask = 0
    for p in pts:
        if not 0 <= p < P.structure.v:
            raise ArcError(f"point {p} is not in the plane", (p,))
        mask |= 1 << p
    d = None
    for j, m in enumerate(P.structure.line_masks()):
        k = bin(m & mask).count("1")
        if k == 0:
            continue
        if d is None:
            d = k
        elif k != d:
            raise ArcError(f"line {j} meets the set in {k} points, another line in {d}", (j,))
    if d is None or d < 2 or d >= q + 1:
        raise ArcError(f"degree {d} is not in [2, q]")
    if len(pts) != d * q - q + d:
        raise ArcError(f"{len(pts)} points, a maximal arc of degree {d} has {d * q - q + d}")
    return d


def make_arc(P: ProjectivePlane, pts: Iterable[int]) -> MaximalArc:
    pts = frozenset(pts)
    return MaximalArc(P, pts, verify_arc(P, pts))


def regular_hyperoval(P: ProjectivePlane) -> MaximalArc:
    """Conic {(t^2, t, 1)} together with (1, 0, 0) and its nucleus (0, 1, 0)."""
    if P.coordinates is None or P.order % 2:
        raise ValueError("needs a generated Desarguesian plane of even order")
    F = GF2m(P.order)
    index = {c: i for i, c in enumerate(P.coordinates)}
    pts = {index[(F.mul(t, t), t, 1)] for t in range(P.order)}
    pts.add(index[(1, 0, 0)])
    pts.add(index[(0, 1, 0)])
    arc = make_arc(P, pts)
    assert arc.degree == 2
    return arc


def denniston_arc(P: ProjectivePlane, d: int) -> MaximalArc:
    """Points (x, y, 1) with x^2 + bxy + y^2 in the additive subgroup {0..d-1}.

    ``b`` is the least field element making x^2 + bx + 1 irreducible.
    """
    q = P.order
    if P.coordinates is None or d < 2 or q % d or d >= q:
        raise ValueError(f"need a generated Desarguesian plane and a proper divisor d of q, got d={d}")
    F = GF2m(q)
    beta = next(b for b in range(1, q) if all(F.mul(x, x) ^ F.mul(b, x) ^ 1 for x in range(q)))
    index = {c: i for i, c in enumerate(P.coordinates)}
    pts = set()
    for x in range(q):
        for y in range(q):
            if F.mul(x, x) ^ F.mul(beta, F.mul(x, y)) ^ F.mul(y, y) < d:
                pts.add(index[(x, y, 1)])
    arc = make_arc(P, pts)
    assert arc.degree == d
    return arc


def dual_plane(P: ProjectivePlane) -> ProjectivePlane:
    return ProjectivePlane(P.order, dual(P.structure))


def dual_arc(A: MaximalArc) -> MaximalArc:
    """Lines missing the arc, as a maximal arc of degree q/d in the dual plane."""
    P = A.plane
    mask = 0
    for p in A.points:
        mask |= 1 << p
    external = [j for j, m in enumerate(P.structure.line_masks()) if not m & mask]
    D = dual_plane(P)
    arc = make_arc(D, external)
    assert arc.degree * A.degree == P.order
    return arc


def construction1(P: ProjectivePlane, A: MaximalArc) -> ArcGeometry:
    """Points off the arc, with the secant lines restricted to them."""
    d = verify_arc(P, A.points)
    keep = [p for p in range(P.structure.v) if p not in A.points]
    new_index = {p: i for i, p in enumerate(keep)}
    lines = []
    line_map = []
    for j, line in enumerate(P.structure.lines):
        inside = sum(1 for p in line if p in A.points)
        if inside == d:
            lines.append([new_index[p] for p in line if p not in A.points])
            line_map.append(j)
    return ArcGeometry(IncidenceStructure(len(keep), lines), tuple(keep), tuple(line_map))


def pencil_orthogonal_family(P: ProjectivePlane, A: MaximalArc, geometry: Optional[ArcGeometry] = None) -> OrthogonalFamily:
    """One parallel class per arc point: the restricted lines through it."""
    G = geometry or construction1(P, A)
    plane_to_geo: Dict[int, int] = {pl: j for j, pl in enumerate(G.line_map)}
    through = P.structure.point_lines()
    classes = []
    for x in sorted(A.points):
        classes.append(ParallelClass(tuple(sorted(plane_to_geo[pl] for pl in through[x]))))
    return OrthogonalFamily.build(G.structure, classes)
