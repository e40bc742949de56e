"""numba implementation of the clique search in :mod:`pgeom.cliques`.

The search state lives in caller-owned arrays so a call can stop when the
output buffer fills or a node budget is spent, and be resumed later.
"""

from __future__ import annotations

import logging
import time

import numpy as np

log = logging.getLogger(__name__)

try:
    import numba
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None

DONE, BUFFER_FULL, BUDGET = 0, 1, 2
# ctrl slots
_DEPTH, _STATE, _COUNT, _NODES, _STORED = range(5)


def available() -> bool:
    return numba is not None


if numba is not None:
    _M1 = np.uint64(0x5555555555555555)
    _M2 = np.uint64(0x3333333333333333)
    _M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
    _H01 = np.uint64(0x0101010101010101)

    @numba.njit(cache=True, inline="always")
    def _popcount(x):
        x = x - ((x >> np.uint64(1)) & _M1)
        x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
        x = (x + (x >> np.uint64(4))) & _M4
        return np.int64((x * _H01) >> np.uint64(56))

    @numba.njit(cache=True, inline="always")
    def _lowbit_index(x):
        return _popcount((x & (~x + np.uint64(1))) - np.uint64(1))

    @numba.njit(cache=True)
    def _count_bits(row, W):
        total = 0
        for w in range(W):
            total += _popcount(row[w])
        return total

    @numba.njit(cache=True)
    def _run(A, target, P, D, clique, ctrl, out, collect, budget, cls, csize, U, Q):
        n, W = A.shape
        depth = ctrl[_DEPTH]
        state = ctrl[_STATE]
        count = ctrl[_COUNT]
        nodes = ctrl[_NODES]
        stored = ctrl[_STORED]
        cap = out.shape[0]
        spent = 0
        status = DONE
        while depth >= 0:
            if state == 0:
                need = target - depth
                if need == 0:
                    if collect:
                        if stored == cap:
                            status = BUFFER_FULL
                            break
                        for i in range(target):
                            out[stored, i] = clique[i]
                        stored += 1
                    count += 1
                    nodes += 1
                    depth -= 1
                    state = 1
                    continue
                if spent >= budget:
                    status = BUDGET
                    break
                nodes += 1
                spent += 1
                if _count_bits(P[depth], W) < need:
                    depth -= 1
                    state = 1
                    continue
                # greedy colouring of the candidates
                for w in range(W):
                    U[w] = P[depth, w]
                c = 0
                while True:
                    empty = True
                    for w in range(W):
                        if U[w] != 0:
                            empty = False
                            break
                    if empty:
                        break
                    for w in range(W):
                        Q[w] = U[w]
                        cls[c, w] = 0
                    size = 0
                    for w in range(W):
                        while Q[w] != 0:
                            low = Q[w] & (~Q[w] + np.uint64(1))
                            v = w * 64 + _lowbit_index(Q[w])
                            cls[c, w] |= low
                            size += 1
                            for ww in range(w, W):
                                Q[ww] &= ~A[v, ww]
                            Q[w] &= ~low
                    for w in range(W):
                        U[w] &= ~cls[c, w]
                    csize[c] = size
                    c += 1
                if c < need:
                    depth -= 1
                    state = 1
                    continue
                # stable sort keeps ties in colouring order, matching the Python path
                order = np.argsort(csize[:c], kind="mergesort")
                for w in range(W):
                    D[depth, w] = 0
                for j in range(c - need + 1):
                    k = order[j]
                    for w in range(W):
                        D[depth, w] |= cls[k, w]
                state = 1
            else:
                need = target - depth
                v = -1
                if _count_bits(P[depth], W) >= need:
                    for w in range(W):
                        if D[depth, w] != 0:
                            v = w * 64 + _lowbit_index(D[depth, w])
                            break
                if v < 0:
                    depth -= 1
                    continue
                bit = np.uint64(1) << np.uint64(v & 63)
                D[depth, v >> 6] &= ~bit
                P[depth, v >> 6] &= ~bit
                for w in range(W):
                    P[depth + 1, w] = P[depth, w] & A[v, w]
                clique[depth] = v
                depth += 1
                state = 0
        ctrl[_DEPTH] = depth
        ctrl[_STATE] = state
        ctrl[_COUNT] = count
        ctrl[_NODES] = nodes
        ctrl[_STORED] = stored
        return status


def _words(x: int, W: int) -> np.ndarray:
    return np.frombuffer(x.to_bytes(W * 8, "little"), dtype="<u8")


def search(G, size: int, collect: bool, limit=None, budget: int = 2_000_000, initial_capacity: int = 1024):
    """Same contract as the Python search: ``(count, list of sorted tuples)``."""
    if numba is None:
        raise RuntimeError("numba is not installed")
    n = G.n
    W = max(1, (n + 63) // 64)
    A = np.empty((n, W), dtype=np.uint64)
    for i, a in enumerate(G.adj):
        A[i] = _words(a, W)
    P = np.zeros((size + 1, W), dtype=np.uint64)
    P[0] = _words((1 << n) - 1, W)
    D = np.zeros((size + 1, W), dtype=np.uint64)
    clique = np.zeros(size + 1, dtype=np.int64)
    ctrl = np.zeros(5, dtype=np.int64)
    cls = np.zeros((n + 1, W), dtype=np.uint64)
    csize = np.zeros(n + 1, dtype=np.int64)
    U = np.zeros(W, dtype=np.uint64)
    Q = np.zeros(W, dtype=np.uint64)
    cap = initial_capacity if collect else 0
    if collect and limit is not None:
        cap = min(cap, limit + 1)
    out = np.zeros((cap, size), dtype=np.int32)
    start = time.monotonic()
    last_report = start
    while True:
        status = _run(A, size, P, D, clique, ctrl, out, collect, budget, cls, csize, U, Q)
        if status == DONE:
            break
        if status == BUFFER_FULL:
            if limit is not None and ctrl[_STORED] > limit:
                from .cliques import CliqueLimitExceeded
                raise CliqueLimitExceeded(f"more than {limit} cliques of size {size}")
            new_cap = 2 * max(cap, 1)
            if limit is not None:
                new_cap = min(new_cap, limit + 1)
            grown = np.zeros((new_cap, size), dtype=np.int32)
            grown[:cap] = out
            out, cap = grown, new_cap
        now = time.monotonic()
        if now - last_report > 30:
            log.info("clique search: %d nodes, %d cliques, %.0fs", ctrl[_NODES], ctrl[_COUNT], now - start)
            last_report = now
    count = int(ctrl[_COUNT])
    if collect and limit is not None and count > limit:
        from .cliques import CliqueLimitExceeded
        raise CliqueLimitExceeded(f"more than {limit} cliques of size {size}")
    found = [tuple(sorted(map(int, row))) for row in out[: int(ctrl[_STORED])]] if collect else []
    return count, found
