"""Canonical forms, automorphism group orders and isomorphism tests.

An incidence structure is treated as a vertex-coloured bipartite graph
(points first, then lines).  The search individualizes a vertex of the
non-singleton cell with the most non-trivial joins to other cells, refines to an equitable partition,
and recurses.  Leaves are compared by (refinement trace, relabelled
graph); the largest leaf is canonical.  Automorphisms found between
leaves prune sibling subtrees, and the group order is the product of
the stabilizer orbit lengths along the first path.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .gf2 import incidence_matrix, rank2
from .incidence import IncidenceStructure


@dataclass(frozen=True)
class CanonicalForm:
    certificate: bytes
    aut_order: int
    point_relabeling: Tuple[int, ...]  # point p -> canonical point index
    line_relabeling: Tuple[int, ...]  # line j -> canonical line index

    def canonical_structure(self, S: IncidenceStructure) -> IncidenceStructure:
        return S.relabel(self.point_relabeling, self.line_relabeling)


class _Partition:
    """Ordered partition: ``lab`` lists vertices, cells are ``[start, end)`` slices."""

    __slots__ = ("lab", "start_of", "cell_end")

    def __init__(self, lab, start_of, cell_end):
        self.lab = lab
        self.start_of = start_of
        self.cell_end = cell_end

    def copy(self) -> "_Partition":
        return _Partition(self.lab[:], self.start_of[:], dict(self.cell_end))

    def is_discrete(self) -> bool:
        return len(self.cell_end) == len(self.lab)

    def target_cell(self, nbrs) -> int:
        """First non-singleton cell joined non-trivially to the most cells."""
        best, best_score = None, -1
        sizes = self.cell_end
        for s in sorted(sizes):
            if sizes[s] - s == 1:
                continue
            cnt = {}
            for u in nbrs[self.lab[s]]:
                c = self.start_of[u]
                cnt[c] = cnt.get(c, 0) + 1
            score = sum(1 for c, k in cnt.items() if k < sizes[c] - c)
            if score > best_score:
                best, best_score = s, score
        return best


class _Search:
    def __init__(self, n: int, nbrs: List[List[int]], colours: Sequence[int]):
        self.n = n
        self.nbrs = nbrs
        order = sorted(range(n), key=lambda x: (colours[x], x))
        lab = order
        start_of = [0] * n
        cell_end = {}
        s = 0
        while s < n:
            e = s
            while e < n and colours[lab[e]] == colours[lab[s]]:
                e += 1
            for i in range(s, e):
                start_of[lab[i]] = s
            cell_end[s] = e
            s = e
        self.root = _Partition(lab, start_of, cell_end)
        self.generators: List[List[int]] = []
        self.first = None  # (path, traces, cert, lab, cells)
        self.best = None  # (traces, cert, lab)
        self.first_cells: List[List[int]] = []

    # refinement -----------------------------------------------------------
    def refine(self, P: _Partition, splitters) -> tuple:
        nbrs = self.nbrs
        lab, start_of, cell_end = P.lab, P.start_of, P.cell_end
        heap = list(splitters)
        heapq.heapify(heap)
        queued = set(heap)
        trace = []
        while heap:
            s = heapq.heappop(heap)
            queued.discard(s)
            cnt = {}
            for w in lab[s:cell_end[s]]:
                for u in nbrs[w]:
                    cnt[u] = cnt.get(u, 0) + 1
            touched = sorted({start_of[u] for u in cnt})
            for c in touched:
                ce = cell_end[c]
                if ce - c == 1:
                    trace.append((s, c, ((cnt[lab[c]], 1),)))
                    continue
                members = lab[c:ce]
                members.sort(key=lambda u: cnt.get(u, 0))
                keys = [cnt.get(u, 0) for u in members]
                if keys[0] == keys[-1]:
                    trace.append((s, c, ((keys[0], ce - c),)))
                    continue
                lab[c:ce] = members
                pieces = []
                i = c
                while i < ce:
                    j = i
                    while j < ce and keys[j - c] == keys[i - c]:
                        j += 1
                    pieces.append((i, j, keys[i - c]))
                    i = j
                for i, j, _ in pieces:
                    cell_end[i] = j
                    for x in range(i, j):
                        start_of[lab[x]] = i
                    if i not in queued:
                        heapq.heappush(heap, i)
                        queued.add(i)
                trace.append((s, c, tuple((k, j - i) for i, j, k in pieces)))
        return tuple(trace)

    def individualize(self, P: _Partition, w: int) -> Tuple[_Partition, tuple]:
        Q = P.copy()
        s = Q.start_of[w]
        e = Q.cell_end[s]
        lab = Q.lab
        i = lab.index(w, s, e)
        lab[s], lab[i] = lab[i], lab[s]
        Q.cell_end[s] = s + 1
        Q.cell_end[s + 1] = e
        for x in range(s + 1, e):
            Q.start_of[lab[x]] = s + 1
        trace = self.refine(Q, [s, s + 1])
        return Q, (s, trace)

    # leaves ---------------------------------------------------------------
    def certificate(self, lab: List[int]) -> tuple:
        pos = [0] * self.n
        for i, x in enumerate(lab):
            pos[x] = i
        nbrs = self.nbrs
        return tuple(tuple(sorted(pos[u] for u in nbrs[lab[i]])) for i in range(self.n))

    def _orbit_reps(self, path: Sequence[int]):
        """Union-find over generators fixing ``path`` pointwise."""
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            if all(g[p] == p for p in path):
                for x in range(self.n):
                    a, b = find(x), find(g[x])
                    if a != b:
                        if a < b:
                            parent[b] = a
                        else:
                            parent[a] = b
        return find

    def run(self) -> None:
        root = self.root
        trace = self.refine(root, sorted(root.cell_end))
        self.dfs(root, [], [trace])

    def dfs(self, P: _Partition, path: List[int], traces: List[tuple]) -> int:
        """Returns the level to resume at (``len(path)`` means carry on)."""
        level = len(path)
        if P.is_discrete():
            return self.leaf(P, path, traces)
        s = P.target_cell(self.nbrs)
        cell = sorted(P.lab[s:P.cell_end[s]])
        if self.first is None:
            self.first_cells.append(cell)
        explored: List[int] = []
        for w in cell:
            if explored:
                find = self._orbit_reps(path)
                rw = find(w)
                if any(find(x) == rw for x in explored):
                    continue
            Q, t = self.individualize(P, w)
            child_traces = traces + [t]
            if self.first is not None:
                eq_first = self.first[1][: level + 2] == child_traces
                best_prefix = self.best[0][: level + 2]
                if not eq_first and child_traces < best_prefix:
                    explored.append(w)
                    continue
            back = self.dfs(Q, path + [w], child_traces)
            explored.append(w)
            if back < level:
                return back
        return level

    def leaf(self, P: _Partition, path: List[int], traces: List[tuple]) -> int:
        cert = self.certificate(P.lab)
        level = len(path)
        if self.first is None:
            self.first = (list(path), traces, cert, P.lab[:])
            self.best = (traces, cert, P.lab[:])
            return level
        if traces == self.first[1] and cert == self.first[2]:
            flab = self.first[3]
            g = [0] * self.n
            for a, b in zip(flab, P.lab):
                g[a] = b
            self.generators.append(g)
            common = 0
            fpath = self.first[0]
            while common < min(len(fpath), level) and fpath[common] == path[common]:
                common += 1
            return common
        key = (traces, cert)
        bkey = (self.best[0], self.best[1])
        if key == bkey:
            blab = self.best[2]
            g = [0] * self.n
            for a, b in zip(blab, P.lab):
                g[a] = b
            self.generators.append(g)
        elif key > bkey:
            self.best = (traces, cert, P.lab[:])
        return level

    def group_order(self) -> int:
        order = 1
        fpath = self.first[0]
        for i, b in enumerate(fpath):
            find = self._orbit_reps(fpath[:i])
            rb = find(b)
            order *= sum(1 for x in self.first_cells[i] if find(x) == rb)
        return order


def _incidence_graph(S: IncidenceStructure):
    n = S.v + S.b
    nbrs: List[List[int]] = [[] for _ in range(n)]
    for j, line in enumerate(S.lines):
        for p in line:
            nbrs[p].append(S.v + j)
            nbrs[S.v + j].append(p)
    colours = [0] * S.v + [1] * S.b
    return n, nbrs, colours


def canonical_form(S: IncidenceStructure) -> CanonicalForm:
    n, nbrs, colours = _incidence_graph(S)
    if n == 0:
        return CanonicalForm(b"incidence 0 0", 1, (), ())
    search = _Search(n, nbrs, colours)
    search.run()
    lab = search.best[2]
    pos = [0] * n
    for i, x in enumerate(lab):
        pos[x] = i
    point_map = tuple(pos[p] for p in range(S.v))
    line_map = tuple(pos[S.v + j] - S.v for j in range(S.b))
    canon = S.relabel(point_map, line_map)
    text = f"incidence {S.v} {S.b}\n" + "\n".join(" ".join(map(str, l)) for l in canon.lines)
    return CanonicalForm(text.encode(), search.group_order(), point_map, line_map)


def aut_order(S: IncidenceStructure) -> int:
    return canonical_form(S).aut_order


def are_isomorphic(S1: IncidenceStructure, S2: IncidenceStructure) -> bool:
    if (S1.v, S1.b) != (S2.v, S2.b):
        return False
    if sorted(map(len, S1.lines)) != sorted(map(len, S2.lines)):
        return False
    return canonical_form(S1).certificate == canonical_form(S2).certificate


def graph_aut_order(n: int, edges: Sequence[Tuple[int, int]], colours: Optional[Sequence[int]] = None) -> int:
    """Automorphism group order of a vertex-coloured simple graph."""
    nbrs: List[List[int]] = [[] for _ in range(n)]
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    search = _Search(n, nbrs, colours or [0] * n)
    search.run()
    return search.group_order()


def quick_invariant(S: IncidenceStructure) -> tuple:
    """Cheap isomorphism invariant used to bucket structures before canonizing."""
    through = S.point_lines()
    masks = S.line_masks()
    meet = sorted(
        tuple(sorted(bin(masks[i] & masks[j]).count("1") for j in range(S.b) if j != i)) for i in range(S.b)
    )
    return (
        S.v,
        S.b,
        tuple(sorted(len(l) for l in S.lines)),
        tuple(sorted(len(t) for t in through)),
        rank2(incidence_matrix(S)),
        hash(tuple(meet)),
    )
