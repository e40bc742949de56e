"""Classification of the partial geometries whose point graph is the complement of T(m).

Points are the 2-subsets of ``{0..m-1}``.  A line is a clique of size
``m/2`` in the complement of T(m), i.e. a perfect matching.  Geometries
correspond to cliques of the right size in the graph Omega on perfect
matchings, where two matchings are adjacent iff they share at most one
pair.  For ``m = 10`` this yields the pg(4,6,3) classification.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .autiso import are_isomorphic, canonical_form
from .cliques import count_cliques, enumerate_cliques
from .gf2 import incidence_matrix, rank2
from .incidence import IncidenceStructure, verify_pg
from .parallel import disjointness_graph
from .srg import Graph, bose_geometric_check, is_srg, pseudo_geometric_params, triangular_graph

log = logging.getLogger(__name__)

# beyond this the matching graph is far too large to build
MAX_M = 12


@dataclass(frozen=True)
class OmegaGraph:
    m: int
    pairs: Tuple[Tuple[int, int], ...]  # point index -> 2-subset
    matchings: Tuple[Tuple[int, ...], ...]  # vertex -> sorted pair indices
    graph: Graph

    @property
    def n(self) -> int:
        return len(self.matchings)


def _perfect_matchings(elems: Tuple[int, ...]) -> Iterator[List[Tuple[int, int]]]:
    if not elems:
        yield []
        return
    a = elems[0]
    for i in range(1, len(elems)):
        rest = elems[1:i] + elems[i + 1:]
        for m in _perfect_matchings(rest):
            yield [(a, elems[i])] + m


def build_omega(m: int = 10) -> OmegaGraph:
    if m % 2 or not 6 <= m <= MAX_M:
        raise ValueError(f"m must be even and in [6, {MAX_M}], got {m}")
    pairs = tuple(combinations(range(m), 2))
    index = {p: i for i, p in enumerate(pairs)}
    Tbar = triangular_graph(m).complement()
    matchings = sorted(tuple(sorted(index[p] for p in mt)) for mt in _perfect_matchings(tuple(range(m))))
    for mt in matchings:
        for a, b in combinations(mt, 2):
            if not Tbar.has_edge(a, b):
                raise AssertionError(f"matching {mt} is not a clique of the complement of T({m})")
    expected = math.factorial(m) // (2 ** (m // 2) * math.factorial(m // 2))
    assert len(matchings) == expected
    sets = [frozenset(mt) for mt in matchings]
    G = Graph.from_predicate(sets, lambda x, y: len(x & y) <= 1)
    return OmegaGraph(m, pairs, tuple(matchings), G)


def geometry_size(omega: OmegaGraph) -> Tuple[Tuple[int, int, int], int]:
    """pg parameters fitting the complement of T(m) and the number of lines."""
    s, t, alpha = pseudo_geometric_params(is_srg(triangular_graph(omega.m).complement()))
    b = (t + 1) * (s * t + alpha) // alpha
    return (s, t, alpha), b


@dataclass
class Enumeration:
    omega: OmegaGraph
    count: int
    cliques: List[Tuple[int, ...]]

    def geometries(self, verify: bool = True) -> Iterator[IncidenceStructure]:
        Tbar = triangular_graph(self.omega.m).complement()
        for c in self.cliques:
            lines = [self.omega.matchings[i] for i in c]
            if verify and not bose_geometric_check(Tbar, lines):
                raise AssertionError(f"clique {c} does not give a partial geometry")
            yield IncidenceStructure(len(self.omega.pairs), lines)


def enumerate_geometries(omega: OmegaGraph, backend: str = "auto") -> Enumeration:
    _, b = geometry_size(omega)
    cliques = enumerate_cliques(omega.graph, b, backend=backend)
    return Enumeration(omega, len(cliques), cliques)


def fingerprint(S: IncidenceStructure) -> Tuple[int, int]:
    """(number of parallel classes, 2-rank)."""
    k = len(S.lines[0])
    n_classes = count_cliques(disjointness_graph(S), S.v // k) if S.v % k == 0 else 0
    return n_classes, rank2(incidence_matrix(S))


def _pair_images(m: int, perms: np.ndarray, pairs) -> np.ndarray:
    """For each permutation row, the index of the image of every pair."""
    pid = np.full((m, m), -1, dtype=np.int64)
    for i, (a, b) in enumerate(pairs):
        pid[a, b] = pid[b, a] = i
    A = np.array([p[0] for p in pairs])
    B = np.array([p[1] for p in pairs])
    return pid[perms[:, A], perms[:, B]]


def stabilizer_order(omega: OmegaGraph, clique: Sequence[int]) -> int:
    """Number of permutations of ``{0..m-1}`` fixing the set of matchings, by direct filtering."""
    m = omega.m
    pairs = omega.pairs
    masks = np.array([sum(1 << p for p in omega.matchings[i]) for i in clique], dtype=np.int64)
    target = np.sort(masks)
    lines = np.array([omega.matchings[i] for i in clique], dtype=np.int64)
    bit = np.left_shift(np.int64(1), np.arange(len(pairs), dtype=np.int64))
    total = 0
    for first in range(m):
        rest = [x for x in range(m) if x != first]
        perms = np.array([(first,) + p for p in permutations(rest)], dtype=np.int64)
        img = _pair_images(m, perms, pairs)
        alive = np.ones(len(perms), dtype=bool)
        for line in lines:
            image = np.bitwise_or.reduce(bit[img[:, line]], axis=1)
            pos = np.searchsorted(target, image)
            pos[pos == len(target)] = 0
            alive &= target[pos] == image
            keep = np.nonzero(alive)[0]
            img, alive = img[keep], alive[keep]
            if not len(img):
                break
        total += len(img)
    return total


@dataclass
class ClassInfo:
    representative: IncidenceStructure
    aut_order: int
    orbit_size: int
    fingerprint: Tuple[int, int]
    count: int  # members observed in the bucket
    stabilizer_order: Optional[int] = None


@dataclass
class ClassificationReport:
    m: int
    total_cliques: int
    classes: List[ClassInfo] = field(default_factory=list)

    @property
    def accounting_valid(self) -> bool:
        return (sum(c.orbit_size for c in self.classes) == self.total_cliques
                and all(c.orbit_size == c.count for c in self.classes))

    def summary(self) -> str:
        parts = ", ".join(f"{c.aut_order}×{c.orbit_size}" for c in self.classes)
        return f"{self.total_cliques} geometries, {len(self.classes)} classes ({parts})"

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "total_cliques": self.total_cliques,
            "accounting_valid": self.accounting_valid,
            "classes": [
                {
                    "aut_order": c.aut_order,
                    "orbit_size": c.orbit_size,
                    "members": c.count,
                    "parallel_classes": c.fingerprint[0],
                    "rank2": c.fingerprint[1],
                    "stabilizer_order": c.stabilizer_order,
                }
                for c in self.classes
            ],
        }


def classify_geometries(enum: Enumeration, sample: int = 50, seed: int = 0,
                        check_stabilizer: bool = True) -> ClassificationReport:
    """Bucket by fingerprint, canonicalize representatives and a sample of each bucket."""
    omega = enum.omega
    buckets: Dict[Tuple[int, int], List[int]] = {}
    reps: Dict[Tuple[int, int], IncidenceStructure] = {}
    for i, S in enumerate(enum.geometries()):
        fp = fingerprint(S)
        buckets.setdefault(fp, []).append(i)
        reps.setdefault(fp, S)
    rng = random.Random(seed)
    group = math.factorial(omega.m)
    report = ClassificationReport(omega.m, enum.count)
    # largest automorphism group first, as the classes are usually listed
    infos = []
    for fp, members in buckets.items():
        rep = reps[fp]
        cf = canonical_form(rep)
        picked = rng.sample(members, min(sample, len(members)))
        for j in picked:
            other = IncidenceStructure(rep.v, [omega.matchings[x] for x in enum.cliques[j]])
            if canonical_form(other).certificate != cf.certificate:
                raise AssertionError(f"bucket {fp} holds non-isomorphic geometries")
        stab = stabilizer_order(omega, enum.cliques[members[0]]) if check_stabilizer else None
        if stab is not None and stab != cf.aut_order:
            raise AssertionError(f"stabilizer order {stab} differs from automorphism order {cf.aut_order}")
        infos.append(ClassInfo(rep, cf.aut_order, group // cf.aut_order, fp, len(members), stab))
    infos.sort(key=lambda c: (-c.aut_order, c.fingerprint))
    for a, b in combinations(infos, 2):
        if are_isomorphic(a.representative, b.representative):
            raise AssertionError(f"buckets {a.fingerprint} and {b.fingerprint} share an isomorphism class")
    report.classes = infos
    return report


def classify_pg463(backend: str = "auto", sample: int = 50) -> ClassificationReport:
    omega = build_omega(10)
    enum = enumerate_geometries(omega, backend=backend)
    log.info("%d cliques of size 63", enum.count)
    return classify_geometries(enum, sample=sample)
