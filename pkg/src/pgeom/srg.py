"""Strongly regular graphs: measurement, parameter algebra and spectra.

All arithmetic is exact (integers and :class:`fractions.Fraction`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, isqrt
from typing import Iterable, Optional, Sequence, Tuple

from .incidence import IncidenceStructure, dual, verify_pg


class NotStronglyRegular(ValueError):
    """Refusal from :func:`is_srg`; ``witness`` names the offending vertices."""

    def __init__(self, message: str, witness: Tuple[int, ...] = ()):
        super().__init__(message)
        self.witness = witness


class SpectrumError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[i]`` is the neighbourhood bitmask of ``i``."""

    n: int
    adj: Tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        for i, a in enumerate(self.adj):
            if a >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            if a >> self.n:
                raise ValueError(f"vertex {i} has a neighbour >= n")
        for i, a in enumerate(self.adj):
            x = a
            while x:
                low = x & -x
                j = low.bit_length() - 1
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric edge {i}-{j}")
                x ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(n, tuple(adj))

    @classmethod
    def from_predicate(cls, items: Sequence, related) -> "Graph":
        n = len(items)
        adj = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if related(items[i], items[j]):
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        return cls(n, tuple(adj))

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, i: int) -> int:
        return bin(self.adj[i]).count("1")

    def edges(self) -> list[Tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n) if self.adj[i] >> j & 1]

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~a & ~(1 << i) for i, a in enumerate(self.adj)))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex ``i`` becomes ``perm[i]``."""
        return Graph.from_edges(self.n, ((perm[i], perm[j]) for i, j in self.edges()))


@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    lam: int
    mu: int

    def __iter__(self):
        return iter((self.n, self.k, self.lam, self.mu))

    def is_feasible(self) -> bool:
        return self.k < self.n and self.k * (self.k - self.lam - 1) == (self.n - self.k - 1) * self.mu


@dataclass(frozen=True)
class Eigenvalues:
    rho1: int
    rho2: int
    f: Optional[int] = None  # multiplicity of rho1
    g: Optional[int] = None  # multiplicity of rho2


def is_srg(G: Graph) -> SrgParams:
    """Measure (n, k, lambda, mu) by checking every vertex pair."""
    if G.n < 2:
        raise NotStronglyRegular("need at least two vertices")
    k = G.degree(0)
    for i in range(G.n):
        if G.degree(i) != k:
            raise NotStronglyRegular(f"vertex {i} has degree {G.degree(i)}, vertex 0 has {k}", (0, i))
    lam = mu = None
    for i in range(G.n):
        ai = G.adj[i]
        for j in range(i + 1, G.n):
            common = bin(ai & G.adj[j]).count("1")
            if ai >> j & 1:
                if lam is None:
                    lam = common
                elif common != lam:
                    raise NotStronglyRegular(f"adjacent {i},{j} share {common} neighbours, expected {lam}", (i, j))
            else:
                if mu is None:
                    mu = common
                elif common != mu:
                    raise NotStronglyRegular(f"non-adjacent {i},{j} share {common} neighbours, expected {mu}", (i, j))
    if lam is None or mu is None:
        # complete or edgeless graphs are excluded
        raise NotStronglyRegular("graph is complete or edgeless")
    return SrgParams(G.n, k, lam, mu)


def complement_params(p: SrgParams) -> SrgParams:
    n, k, lam, mu = p
    out = SrgParams(n, n - 1 - k, n - 2 * k + mu - 2, n - 2 * k + lam)
    if min(out) < 0:
        raise ValueError(f"complement of {p} has negative parameters")
    return out


def point_graph_params(s: int, t: int, alpha: int) -> SrgParams:
    n, rem = divmod((s + 1) * (s * t + alpha), alpha)
    if rem:
        raise ValueError("alpha does not divide (s+1)(st+alpha)")
    return SrgParams(n, s * (t + 1), s - 1 + t * (alpha - 1), alpha * (t + 1))


def line_graph_params(s: int, t: int, alpha: int) -> SrgParams:
    return point_graph_params(t, s, alpha)


def triangular_params(m: int) -> SrgParams:
    return SrgParams(comb(m, 2), 2 * (m - 2), m - 2, 4)


def _require_pg(S: IncidenceStructure):
    verdict = verify_pg(S)
    if not verdict.is_pg:
        raise ValueError(f"not a partial geometry: {verdict.violation}")


def point_graph(S: IncidenceStructure, check: bool = True) -> Graph:
    """Collinearity graph on the points."""
    if check:
        _require_pg(S)
    adj = [0] * S.v
    for m in S.line_masks():
        x = m
        while x:
            low = x & -x
            adj[low.bit_length() - 1] |= m
            x ^= low
    return Graph(S.v, tuple(a & ~(1 << i) for i, a in enumerate(adj)))


def line_graph(S: IncidenceStructure, check: bool = True) -> Graph:
    """Concurrence graph on the lines: adjacent iff they share a point."""
    if check:
        _require_pg(S)
    return point_graph(dual(S), check=False)


def triangular_graph(m: int) -> Graph:
    """T(m) on the 2-subsets of ``range(m)`` in lexicographic order."""
    if m < 4:
        raise ValueError(f"triangular graph needs m >= 4, got {m}")
    pairs = list(combinations(range(m), 2))
    return Graph.from_predicate(pairs, lambda a, b: bool(set(a) & set(b)))


def eigenvalues(p: SrgParams) -> Eigenvalues:
    """Restricted eigenvalues: roots of x^2 + (mu - lam) x + (mu - k)."""
    n, k, lam, mu = p
    disc = (mu - lam) ** 2 - 4 * (mu - k)
    root = isqrt(disc) if disc >= 0 else -1
    if root < 0 or root * root != disc or (lam - mu + root) % 2:
        raise SpectrumError(f"{p} has non-integral restricted eigenvalues")
    r1 = (lam - mu + root) // 2
    r2 = (lam - mu - root) // 2
    f = g = None
    if r1 != r2:
        # trace conditions: 1 + f + g = n and k + f r1 + g r2 = 0
        gn = k + (n - 1) * r1
        gd = r1 - r2
        if gn % gd == 0:
            g = gn // gd
            f = n - 1 - g
    return Eigenvalues(r1, r2, f, g)


def hoffman_bound(p: SrgParams) -> Tuple[Fraction, Fraction]:
    """Coclique bound n(-rho)/(k-rho) and the exterior degree kc/(n-c) at equality."""
    rho = eigenvalues(p).rho2
    c = Fraction(p.n * -rho, p.k - rho)
    ext = Fraction(p.k) * c / (p.n - c) if c != p.n else Fraction(0)
    return c, ext


def pseudo_geometric_params(p: SrgParams) -> Tuple[int, int, int]:
    """Integers (s, t, alpha) with point_graph_params(s, t, alpha) == p."""
    n, k, lam, mu = p
    # k = s(t+1) so s ranges over divisors of k, then mu = alpha(t+1)
    for s in range(1, k + 1):
        if k % s:
            continue
        t = k // s - 1
        if t < 1 or mu % (t + 1):
            continue
        alpha = mu // (t + 1)
        if alpha < 1:
            continue
        try:
            if point_graph_params(s, t, alpha) == p:
                return (s, t, alpha)
        except ValueError:
            continue
    raise ValueError(f"{p} is not pseudo-geometric")


def bose_geometric_check(G: Graph, cliques: Sequence[Iterable[int]]) -> bool:
    """Do these cliques form the line set of a partial geometry with point graph G?"""
    try:
        p = is_srg(G)
        s, t, alpha = pseudo_geometric_params(p)
    except ValueError:
        return False
    b = (t + 1) * (s * t + alpha) // alpha
    if len(cliques) != b:
        return False
    masks = []
    for c in cliques:
        c = list(c)
        if len(c) != s + 1 or len(set(c)) != s + 1:
            return False
        m = 0
        for x in c:
            m |= 1 << x
        for x in c:
            if (G.adj[x] | (1 << x)) & m != m:
                return False
        masks.append(m)
    for i in range(b):
        for j in range(i + 1, b):
            if bin(masks[i] & masks[j]).count("1") > 1:
                return False
    return True
