import random
from collections import Counter
from itertools import permutations
from math import factorial, prod

import pytest
from hypothesis import given, settings, strategies as st

from pgeom.autiso import are_isomorphic, aut_order, canonical_form, graph_aut_order, quick_invariant
from pgeom.incidence import IncidenceStructure, dual


def brute_aut(S):
    """Count (point perm, line perm) pairs preserving incidence, by trying every point perm."""
    lines = Counter(S.lines)
    dup = prod(factorial(m) for m in lines.values())
    total = 0
    for sigma in permutations(range(S.v)):
        if Counter(tuple(sorted(sigma[p] for p in l)) for l in S.lines) == lines:
            total += dup
    return total


def shuffled(S, rng):
    pp = list(range(S.v))
    lp = list(range(S.b))
    rng.shuffle(pp)
    rng.shuffle(lp)
    return S.relabel(pp, lp)


def test_fano_plane(plane):
    assert aut_order(plane(2).structure) == 168 == brute_aut(plane(2).structure)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 7).flatmap(lambda v: st.tuples(
    st.just(v), st.lists(st.sets(st.integers(0, v - 1), max_size=v), max_size=7))))
def test_small_structures_against_oracle(data):
    v, lines = data
    S = IncidenceStructure(v, lines)
    assert aut_order(S) == brute_aut(S)


def test_trivial_cases():
    assert aut_order(IncidenceStructure(1, [[0]])) == 1
    assert aut_order(IncidenceStructure(3, [])) == 6
    assert canonical_form(IncidenceStructure(0, [])).aut_order == 1


@pytest.mark.parametrize("name,order", [("G1", 1512), ("G2", 216), ("W2", 720)])
def test_catalog_orders(request, name, order):
    S = request.getfixturevalue(name)
    assert aut_order(S) == order
    assert aut_order(dual(S)) == order


@pytest.mark.parametrize("q,order", [(4, 120960), (8, 49448448)])
def test_plane_collineation_groups(plane, q, order):
    # |PGammaL(3, q)|
    assert aut_order(plane(q).structure) == order


@pytest.mark.parametrize("name", ["G1", "G2", "W2"])
def test_certificate_invariant_under_relabeling(request, name):
    S = request.getfixturevalue(name)
    cert = canonical_form(S).certificate
    rng = random.Random(name)
    for _ in range(100):
        T = shuffled(S, rng)
        cf = canonical_form(T)
        assert cf.certificate == cert
        assert cf.canonical_structure(T) == canonical_form(S).canonical_structure(S)


def test_isomorphism(G1, G2, plane, hyperoval):
    from pgeom.arcs import construction1, dual_arc
    assert not are_isomorphic(G1, G2)
    A = dual_arc(hyperoval(8))
    assert are_isomorphic(construction1(A.plane, A).structure, dual(dual(G1)))
    assert quick_invariant(G1) != quick_invariant(G2)
    assert quick_invariant(G1) == quick_invariant(shuffled(G1, random.Random(1)))


def test_graph_aut_order():
    petersen_outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    assert graph_aut_order(10, petersen_outer + spokes + inner) == 120
    assert graph_aut_order(4, [(0, 1), (2, 3)], [0, 0, 1, 1]) == 4
