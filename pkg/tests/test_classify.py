import math

import pytest

from pgeom.classify import (build_omega, classify_geometries, enumerate_geometries, geometry_size, stabilizer_order)
from pgeom.incidence import verify_pg


@pytest.fixture(scope="module")
def omega10():
    return build_omega(10)


def test_omega_shape(omega10):
    assert omega10.n == 945 == math.factorial(10) // (2 ** 5 * math.factorial(5))
    assert len(omega10.pairs) == 45
    # 01 23 45 67 89 in pair indices
    first = tuple(omega10.pairs.index(p) for p in [(0, 1), (2, 3), (4, 5), (6, 7), (8, 9)])
    assert first in omega10.matchings
    assert list(omega10.matchings) == sorted(omega10.matchings)
    assert all(omega10.graph.degree(i) == 844 for i in range(0, 945, 97))


def test_omega_adjacency(omega10):
    m = omega10.matchings
    for i in range(0, 945, 61):
        for j in range(945):
            if i != j:
                assert omega10.graph.has_edge(i, j) == (len(set(m[i]) & set(m[j])) <= 1)


def test_geometry_size(omega10):
    assert geometry_size(omega10) == ((4, 6, 3), 63)


def test_m6_is_w2():
    om = build_omega(6)
    enum = enumerate_geometries(om)
    assert enum.count == 1
    (S,) = list(enum.geometries())
    assert verify_pg(S).params == (2, 2, 1)
    report = classify_geometries(enum)
    assert report.accounting_valid
    (c,) = report.classes
    assert c.aut_order == 720 == c.stabilizer_order and c.orbit_size == 1


def test_m8_has_no_geometry():
    # no pg(3,4,2) has the complement of T(8) as point graph
    om = build_omega(8)
    enum = enumerate_geometries(om)
    assert enum.count == 0
    report = classify_geometries(enum)
    assert report.classes == [] and report.accounting_valid


def test_stabilizer_filter():
    om = build_omega(8)
    # every permutation fixes the set of all matchings
    assert stabilizer_order(om, range(om.n)) == math.factorial(8)
    # a single matching is fixed by 2^4 * 4! permutations
    assert stabilizer_order(om, [0]) == 2 ** 4 * math.factorial(4)


def test_bad_m():
    for m in (5, 4, 14):
        with pytest.raises(ValueError):
            build_omega(m)
