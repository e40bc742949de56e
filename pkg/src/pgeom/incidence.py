"""Incidence structures, partial-geometry axioms and parameter arithmetic."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Tuple


class GeometryError(ValueError):
    """Raised when an input violates a structural precondition."""


@dataclass(frozen=True)
class IncidenceStructure:
    """Points ``0..v-1`` and an ordered tuple of lines (sorted point tuples).

    The position of a line in ``lines`` is its index.  Two structures are
    equal iff they have the same ``v`` and the same line list.
    """

    v: int
    lines: Tuple[Tuple[int, ...], ...]

    def __init__(self, v: int, lines: Iterable[Iterable[int]]):
        v = int(v)
        if v < 0:
            raise GeometryError(f"negative point count {v}")
        normalized = []
        for idx, line in enumerate(lines):
            pts = sorted(int(p) for p in line)
            for a, b in zip(pts, pts[1:]):
                if a == b:
                    raise GeometryError(f"line {idx} repeats point {a}")
            if pts and (pts[0] < 0 or pts[-1] >= v):
                raise GeometryError(f"line {idx} has a point outside [0, {v})")
            normalized.append(tuple(pts))
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "lines", tuple(normalized))

    @property
    def b(self) -> int:
        return len(self.lines)

    def point_lines(self) -> list[list[int]]:
        """For every point, the ascending list of line indices through it."""
        through: list[list[int]] = [[] for _ in range(self.v)]
        for j, line in enumerate(self.lines):
            for p in line:
                through[p].append(j)
        return through

    def line_masks(self) -> list[int]:
        """Each line as an integer bitmask over the points."""
        masks = []
        for line in self.lines:
            m = 0
            for p in line:
                m |= 1 << p
            masks.append(m)
        return masks

    def relabel(self, point_perm: Sequence[int], line_perm: Optional[Sequence[int]] = None) -> "IncidenceStructure":
        """Image under ``p -> point_perm[p]``; line ``j`` moves to ``line_perm[j]``."""
        images = [[point_perm[p] for p in line] for line in self.lines]
        if line_perm is not None:
            out: list = [None] * self.b
            for j, img in enumerate(images):
                out[line_perm[j]] = img
            images = out
        return IncidenceStructure(self.v, images)


@dataclass(frozen=True)
class PgParams:
    d: int
    d_prime: int
    s: int
    t: int
    alpha: int
    v: int
    b: int

    @property
    def q(self) -> int:
        return self.d * self.d_prime

    def swapped(self) -> "PgParams":
        """Parameters of the dual geometry."""
        return params_from_dd(self.d_prime, self.d)


@dataclass(frozen=True)
class PgVerdict:
    is_pg: bool
    s: Optional[int] = None
    t: Optional[int] = None
    alpha: Optional[int] = None
    violation: Optional[str] = None
    witness: Tuple[int, ...] = field(default=())

    @property
    def params(self) -> Optional[Tuple[int, int, int]]:
        if not self.is_pg:
            return None
        return (self.s, self.t, self.alpha)


def params_from_dd(d: int, d_prime: int) -> PgParams:
    if d < 2 or d_prime < 2:
        raise GeometryError(f"need d, d' >= 2, got ({d}, {d_prime})")
    s = d * (d_prime - 1)
    t = d_prime * (d - 1)
    alpha = (d - 1) * (d_prime - 1)
    q = d * d_prime
    v = (s + 1) * (q + 1)
    b = (t + 1) * (q + 1)
    # the general point/line count formulas must agree with the d, d' form
    assert v * alpha == (s + 1) * (s * t + alpha)
    assert b * alpha == (t + 1) * (s * t + alpha)
    return PgParams(d, d_prime, s, t, alpha, v, b)


def params_from_qd(q: int, d: int) -> PgParams:
    if d < 2 or q <= d or q % d:
        raise GeometryError(f"need 2 <= d < q with d | q, got q={q}, d={d}")
    p = params_from_dd(d, q // d)
    assert (p.s, p.t) == (q - d, q * (d - 1) // d)
    assert p.alpha * d == (q - d) * (d - 1)
    return p


def params_from_sta(s: int, t: int, alpha: int) -> Optional[PgParams]:
    """Recover ``(d, d')`` from ``(s, t, alpha)`` when they have the d, d' form."""
    # d' - d = s - t and d*d' = s + d  =>  d^2 + (s - t - 1) d - s = 0
    for d in range(2, s + 2):
        d_prime = d + s - t
        if d_prime < 2:
            continue
        if d * (d_prime - 1) == s and d_prime * (d - 1) == t and (d - 1) * (d_prime - 1) == alpha:
            return params_from_dd(d, d_prime)
    return None


def verify_pg(S: IncidenceStructure) -> PgVerdict:
    """Exhaustively check the four partial-geometry axioms."""
    if S.b == 0 or S.v == 0:
        return PgVerdict(False, violation="axiom 2: structure has no lines or no points")
    masks = S.line_masks()
    through = S.point_lines()

    # axiom 1: two points on at most one line
    seen: dict = {}
    for j, line in enumerate(S.lines):
        for i, a in enumerate(line):
            for c in line[i + 1:]:
                other = seen.setdefault((a, c), j)
                if other != j:
                    return PgVerdict(False, violation=f"axiom 1: points {a},{c} lie on lines {other} and {j}",
                                     witness=(a, c, other, j))

    k = len(S.lines[0])
    for j, line in enumerate(S.lines):
        if len(line) != k:
            return PgVerdict(False, violation=f"axiom 2: line {j} has {len(line)} points, line 0 has {k}",
                             witness=(j,))
    r = len(through[0])
    for p, ls in enumerate(through):
        if len(ls) != r:
            return PgVerdict(False, violation=f"axiom 3: point {p} is on {len(ls)} lines, point 0 on {r}",
                             witness=(p,))
    s, t = k - 1, r - 1
    if s < 1 or t < 1:
        return PgVerdict(False, violation=f"axioms 2/3: s={s}, t={t} must be >= 1")

    alpha = None
    for p in range(S.v):
        bit = 1 << p
        for j, m in enumerate(masks):
            if m & bit:
                continue
            count = sum(1 for i in through[p] if masks[i] & m)
            if alpha is None:
                alpha = count
            elif count != alpha:
                return PgVerdict(False, violation=f"axiom 4: point {p} off line {j} sees {count} lines, expected {alpha}",
                                 witness=(p, j))
    if alpha is None or alpha < 1:
        return PgVerdict(False, violation="axiom 4: alpha must be >= 1")
    return PgVerdict(True, s, t, alpha)


def dual(S: IncidenceStructure) -> IncidenceStructure:
    """Swap the roles of points and lines, keeping both indexings."""
    return IncidenceStructure(S.b, S.point_lines())
