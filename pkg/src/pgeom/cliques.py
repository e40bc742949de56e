"""Exact-size clique enumeration and maximum-clique search on bitset graphs.

The search is branch-and-bound over candidate bitsets.  At every node the
candidates are greedily coloured; fewer colour classes than the number of
vertices still needed prunes the node.  Otherwise any clique of the
required size must use a vertex from the ``c - need + 1`` smallest classes,
and only those vertices are branched on.  Branches are disjoint, so every
clique is produced exactly once.

Two interchangeable backends run the same algorithm: a pure-Python one
(the reference) and a numba kernel for large graphs.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from .srg import Graph

log = logging.getLogger(__name__)

NUMBA_THRESHOLD = 96


class Mode(enum.Enum):
    ENUMERATE_ALL = "enumerate_all"
    COUNT_ONLY = "count_only"
    FIND_MAX = "find_max"


class CliqueLimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class CliqueQuery:
    target_size: int
    mode: Mode = Mode.ENUMERATE_ALL
    limit: Optional[int] = None

    def __post_init__(self):
        if self.target_size < 1:
            raise ValueError("target_size must be >= 1")
        if not isinstance(self.mode, Mode):
            object.__setattr__(self, "mode", Mode(self.mode))


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _colour_classes(adj, P: int) -> List[int]:
    classes = []
    while P:
        Q = P
        cls = 0
        while Q:
            low = Q & -Q
            cls |= low
            Q &= ~adj[low.bit_length() - 1]
            Q &= ~low
        classes.append(cls)
        P &= ~cls
    return classes


def _branch_set(adj, P: int, need: int) -> int:
    """Vertices one of which every ``need``-clique inside ``P`` must contain (0 = prune)."""
    classes = _colour_classes(adj, P)
    c = len(classes)
    if c < need:
        return 0
    classes.sort(key=_popcount)
    D = 0
    for cls in classes[: c - need + 1]:
        D |= cls
    return D


def _search_python(G: Graph, size: int, collect: bool, limit: Optional[int]):
    adj = G.adj
    found: list = []
    count = 0

    def expand(clique: list, P: int):
        nonlocal count
        need = size - len(clique)
        if need == 0:
            count += 1
            if collect:
                if limit is not None and count > limit:
                    raise CliqueLimitExceeded(f"more than {limit} cliques of size {size}")
                found.append(tuple(sorted(clique)))
            return
        if _popcount(P) < need:
            return
        D = _branch_set(adj, P, need)
        while D:
            low = D & -D
            v = low.bit_length() - 1
            clique.append(v)
            expand(clique, P & adj[v])
            clique.pop()
            P &= ~low
            D &= ~low
            if _popcount(P) < need:
                return

    expand([], (1 << G.n) - 1)
    return count, found


def _use_numba(G: Graph, backend: str) -> bool:
    if backend == "python":
        return False
    if backend == "numba":
        return True
    if G.n < NUMBA_THRESHOLD:
        return False
    from . import _kernel
    return _kernel.available()


def enumerate_cliques(G: Graph, q: Union[CliqueQuery, int], backend: str = "auto"):
    """All cliques of ``q.target_size`` vertices.

    Returns the lexicographically sorted list of sorted vertex tuples, or
    the count in ``COUNT_ONLY`` mode.  ``FIND_MAX`` ignores ``target_size``
    and returns ``[max_clique(G)]``.
    """
    if isinstance(q, int):
        q = CliqueQuery(q)
    if q.mode is Mode.FIND_MAX:
        return [max_clique(G, backend=backend)]
    collect = q.mode is Mode.ENUMERATE_ALL
    size = q.target_size
    if size > G.n:
        return [] if collect else 0
    if _use_numba(G, backend):
        from . import _kernel
        count, found = _kernel.search(G, size, collect, q.limit)
    else:
        count, found = _search_python(G, size, collect, q.limit)
    if not collect:
        return count
    found.sort()
    return found


def count_cliques(G: Graph, size: int, backend: str = "auto") -> int:
    return enumerate_cliques(G, CliqueQuery(size, Mode.COUNT_ONLY), backend=backend)


def _has_clique(G: Graph, P: int, need: int) -> Optional[Tuple[int, ...]]:
    """Some ``need``-clique inside ``P``, or None."""
    adj = G.adj
    if need == 0:
        return ()

    def expand(clique: list, P: int):
        k = need - len(clique)
        if k == 0:
            return tuple(clique)
        if _popcount(P) < k:
            return None
        D = _branch_set(adj, P, k)
        while D:
            low = D & -D
            v = low.bit_length() - 1
            clique.append(v)
            hit = expand(clique, P & adj[v])
            if hit is not None:
                return hit
            clique.pop()
            P &= ~low
            D &= ~low
        return None

    return expand([], P)


def clique_number(G: Graph) -> int:
    if G.n == 0:
        return 0
    full = (1 << G.n) - 1
    lo = 1
    hi = len(_colour_classes(G.adj, full))
    # largest k with a k-clique; colouring gives the initial upper bound
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if _has_clique(G, full, mid) is not None:
            lo = mid
        else:
            hi = mid - 1
    return lo


def max_clique(G: Graph, backend: str = "auto") -> Tuple[int, ...]:
    """A maximum clique; among those, the lexicographically least."""
    if G.n == 0:
        return ()
    omega = clique_number(G)
    chosen: list = []
    P = (1 << G.n) - 1
    for v in range(G.n):
        if len(chosen) == omega:
            break
        if not P >> v & 1:
            continue
        P &= ~(1 << v)
        rest = P & G.adj[v]
        if _has_clique(G, rest, omega - len(chosen) - 1) is not None:
            chosen.append(v)
            P = rest
    return tuple(chosen)
