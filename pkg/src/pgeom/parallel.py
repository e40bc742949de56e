"""Parallel classes of lines and families of pairwise orthogonal classes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .cliques import enumerate_cliques, max_clique
from .incidence import GeometryError, IncidenceStructure, PgParams, verify_pg
from .srg import Graph


@dataclass(frozen=True, order=True)
class ParallelClass:
    """Sorted line indices of pairwise disjoint lines covering every point."""

    line_indices: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "line_indices", tuple(sorted(self.line_indices)))

    def __len__(self):
        return len(self.line_indices)

    def __iter__(self):
        return iter(self.line_indices)

    def validate(self, S: IncidenceStructure) -> None:
        covered = 0
        for j in self.line_indices:
            for p in S.lines[j]:
                if covered >> p & 1:
                    raise GeometryError(f"point {p} is covered twice by class {self.line_indices}")
                covered |= 1 << p
        if covered != (1 << S.v) - 1:
            raise GeometryError(f"class {self.line_indices} does not cover every point")

    def one_based(self) -> Tuple[int, ...]:
        return tuple(j + 1 for j in self.line_indices)


@dataclass(frozen=True)
class OrthogonalFamily:
    """Pairwise orthogonal parallel classes plus per-line multiplicities."""

    classes: Tuple[ParallelClass, ...]
    multiplicities: Tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.classes)

    @classmethod
    def build(cls, S: IncidenceStructure, classes: Sequence[ParallelClass]) -> "OrthogonalFamily":
        classes = tuple(classes)
        for c in classes:
            c.validate(S)
        sets = [set(c.line_indices) for c in classes]
        for i in range(len(sets)):
            for j in range(i + 1, len(sets)):
                if len(sets[i] & sets[j]) != 1:
                    raise GeometryError(f"classes {i} and {j} share {len(sets[i] & sets[j])} lines, not 1")
        k = [0] * S.b
        for c in classes:
            for j in c.line_indices:
                k[j] += 1
        fam = cls(classes, tuple(k))
        fam.check_counting()
        return fam

    def check_counting(self) -> None:
        """Double-counting identities for classes and line multiplicities."""
        m = self.m
        size = len(self.classes[0]) if self.classes else 0
        if sum(self.multiplicities) != m * size:
            raise GeometryError("sum of multiplicities differs from m * class size")
        if sum(k * (k - 1) for k in self.multiplicities) != m * (m - 1):
            raise GeometryError("sum of k(k-1) differs from m(m-1)")


def disjointness_graph(S: IncidenceStructure) -> Graph:
    """Lines as vertices, adjacent when they share no point."""
    masks = S.line_masks()
    return Graph.from_predicate(masks, lambda a, b: not a & b)


def all_parallel_classes(S: IncidenceStructure, backend: str = "auto") -> List[ParallelClass]:
    verdict = verify_pg(S)
    if not verdict.is_pg:
        raise GeometryError(f"not a partial geometry: {verdict.violation}")
    k = verdict.s + 1
    if S.v % k:
        raise GeometryError(f"line size {k} does not divide v={S.v}")
    found = enumerate_cliques(disjointness_graph(S), S.v // k, backend=backend)
    classes = [ParallelClass(c) for c in found]
    for c in classes:
        c.validate(S)
    return classes


def orthogonality_graph(classes: Sequence[ParallelClass]) -> Graph:
    sets = [frozenset(c.line_indices) for c in classes]
    return Graph.from_predicate(sets, lambda a, b: len(a & b) == 1)


def max_orthogonal_family(S: IncidenceStructure, classes: Sequence[ParallelClass] = None) -> OrthogonalFamily:
    """A largest set of pairwise orthogonal parallel classes (lexicographically least)."""
    if classes is None:
        classes = all_parallel_classes(S)
    classes = sorted(classes)
    if not classes:
        return OrthogonalFamily((), (0,) * S.b)
    chosen = max_clique(orthogonality_graph(classes))
    return OrthogonalFamily.build(S, [classes[i] for i in chosen])


def theorem1_bound(p: PgParams, side: str = "primal") -> int:
    """Largest possible number of pairwise orthogonal parallel classes."""
    d, dp = p.d, p.d_prime
    if side == "primal":
        return d * (d * dp - dp + 1)
    if side == "dual":
        return dp * (dp * d - d + 1)
    raise ValueError(f"side must be 'primal' or 'dual', got {side!r}")


def check_tightness(F: OrthogonalFamily, p: PgParams) -> bool:
    """True iff the family meets the primal bound; then every line lies in d classes."""
    if F.m != theorem1_bound(p, "primal"):
        return False
    if any(k != p.d for k in F.multiplicities):
        raise GeometryError("family meets the bound but some line is not in exactly d classes")
    return True
