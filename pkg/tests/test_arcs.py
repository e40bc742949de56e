import pytest

from pgeom.arcs import (ArcError, GF2m, PlaneError, construction1, denniston_arc, desarguesian_plane, dual_arc,
                        dual_plane, make_arc, pencil_orthogonal_family, projective_points, regular_hyperoval,
                        verify_arc, verify_plane)
from pgeom.incidence import IncidenceStructure, dual, params_from_qd, verify_pg
from pgeom.parallel import check_tightness


@pytest.mark.parametrize("q", [2, 4, 8, 16])
def test_field_axioms(q):
    F = GF2m(q)
    for a in range(1, q):
        assert F.mul(a, F.inv(a)) == 1
        for b in range(q):
            assert F.mul(a, b) == F.mul(b, a)
    # the multiplicative group is cyclic of order q - 1
    g = 2 if q > 2 else 1
    powers, x = set(), 1
    for _ in range(q - 1):
        powers.add(x)
        x = F.mul(x, g)
    assert len(powers) == q - 1


@pytest.mark.parametrize("q", [2, 4, 8, 16])
def test_desarguesian_planes(plane, q):
    P = plane(q)
    assert len(projective_points(q)) == q * q + q + 1
    assert verify_plane(P.structure) == q


def test_verify_plane_witness(plane):
    lines = list(plane(2).structure.lines)
    lines[0] = lines[1]
    with pytest.raises(PlaneError) as info:
        verify_plane(IncidenceStructure(7, lines))
    assert info.value.witness
    with pytest.raises(PlaneError):
        verify_plane(IncidenceStructure(4, [[0, 1], [2, 3]]))


@pytest.mark.parametrize("q", [4, 8, 16])
def test_hyperoval_and_dual(plane, q):
    P = plane(q)
    H = regular_hyperoval(P)
    assert H.degree == 2 and len(H.points) == q + 2
    D = dual_arc(H)
    assert D.degree == q // 2 and len(D.points) == (q // 2) * q - q + q // 2


def test_verify_arc_rejects(plane):
    P = plane(4)
    with pytest.raises(ArcError) as info:
        verify_arc(P, [0, 1, 2])
    assert info.value.witness
    with pytest.raises(ArcError):
        verify_arc(P, [99])


@pytest.mark.parametrize("q,d", [(4, 2), (8, 2), (8, 4), (16, 4)])
def test_construction1_parameters(plane, q, d):
    P = plane(q)
    A = denniston_arc(P, d)
    G = construction1(P, A)
    p = params_from_qd(q, d)
    assert verify_pg(G.structure).params == (p.s, p.t, p.alpha)
    assert (G.structure.v, G.structure.b) == (p.v, p.b)
    assert all(P.structure.lines[G.line_map[j]] for j in range(G.structure.b))
    assert set(G.point_map).isdisjoint(A.points)


@pytest.mark.parametrize("q,d", [(4, 2), (8, 2), (8, 4)])
def test_pencils_meet_bound(plane, q, d):
    P = plane(q)
    A = denniston_arc(P, d)
    fam = pencil_orthogonal_family(P, A)
    assert check_tightness(fam, params_from_qd(q, d))


def test_dual_arc_geometry_is_dual(plane, hyperoval):
    H = hyperoval(8)
    D = dual_arc(H)
    assert construction1(D.plane, D).structure == dual(construction1(plane(8), H).structure)
    assert dual_plane(plane(8)).structure == dual(plane(8).structure)


def test_make_arc_round_trip(plane):
    P = plane(4)
    H = regular_hyperoval(P)
    assert make_arc(P, H.points) == H


def test_unsupported_order():
    with pytest.raises(ValueError):
        desarguesian_plane(3)


@pytest.mark.slow
def test_pg16_regular_hyperoval_geometry(plane, hyperoval):
    from pgeom.autiso import aut_order
    from pgeom.gf2 import incidence_matrix, rank2
    S = construction1(plane(16), hyperoval(16)).structure
    assert rank2(incidence_matrix(S)) == 82
    # PGammaL(2,16) stabilizes the regular hyperoval: 16 * 17 * 15 * 4
    assert aut_order(S) == 16320
