import random

import pytest
from hypothesis import given, settings, strategies as st

from pgeom.gf2 import BinaryMatrix, incidence_matrix, rank2


def naive_rank(rows):
    """Row echelon form on lists of 0/1, eliminating by rows instead of columns."""
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] == 1), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] == 1:
                m[i] = [(a + b) % 2 for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def test_random_20x20_agree_with_oracle():
    rng = random.Random(20)
    for _ in range(100):
        density = rng.random()
        rows = [[int(rng.random() < density) for _ in range(20)] for _ in range(20)]
        assert rank2(BinaryMatrix.from_rows(rows)) == naive_rank(rows)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(0, 1), min_size=7, max_size=7), min_size=1, max_size=12))
def test_rank_invariants(rows):
    M = BinaryMatrix.from_rows(rows)
    r = rank2(M)
    assert r == naive_rank(rows)
    assert r == rank2(M.transpose())
    assert r <= min(M.rows, M.cols)


def test_matrix_accessors():
    M = BinaryMatrix.from_rows([[1, 0, 1], [0, 1, 1]])
    assert M[0, 2] == 1 and M[1, 0] == 0
    assert M.to_rows() == [[1, 0, 1], [0, 1, 1]]
    assert M.transpose().to_rows() == [[1, 0], [0, 1], [1, 1]]
    with pytest.raises(IndexError):
        M[2, 0]
    with pytest.raises(ValueError):
        BinaryMatrix(1, 2, (8,))


def test_rank_does_not_mutate():
    M = BinaryMatrix.from_rows([[1, 1], [1, 1]])
    before = M.bits
    assert rank2(M) == 1
    assert M.bits == before


@pytest.mark.parametrize("q,expected", [(2, 4), (4, 10), (8, 28)])
def test_plane_ranks(plane, q, expected):
    # 2-rank of PG(2, 2^e) is 3^e + 1
    assert rank2(incidence_matrix(plane(q).structure)) == expected


def test_catalog_ranks(G1, G2, W2):
    assert rank2(incidence_matrix(G1)) == 28
    assert rank2(incidence_matrix(G2)) == 34
    assert rank2(incidence_matrix(W2)) == 10
