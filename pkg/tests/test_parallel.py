import pytest

from pgeom import tables
from pgeom.incidence import GeometryError, IncidenceStructure, dual, params_from_dd
from pgeom.parallel import (OrthogonalFamily, ParallelClass, all_parallel_classes, check_tightness, disjointness_graph,
                            max_orthogonal_family, orthogonality_graph, theorem1_bound)


def as_sets(classes):
    return {frozenset(c.one_based()) for c in classes}


def test_g1_classes_match_table(G1):
    classes = all_parallel_classes(G1)
    assert len(classes) == 28
    assert as_sets(classes) == {frozenset(c) for c in tables.G1_PARALLEL_CLASSES}
    fam = OrthogonalFamily.build(G1, classes)
    assert set(fam.multiplicities) == {4}
    assert check_tightness(fam, params_from_dd(4, 2))


def test_g1_dual_classes_match_table(G1):
    classes = all_parallel_classes(dual(G1))
    assert as_sets(classes) == {frozenset(c) for c in tables.G1_DUAL_PARALLEL_CLASSES}
    fam = max_orthogonal_family(dual(G1), classes)
    assert fam.m == 10 and set(fam.multiplicities) == {2}
    assert check_tightness(fam, params_from_dd(2, 4))


def test_g2_unique_class(G2):
    classes = all_parallel_classes(G2)
    assert [c.one_based() for c in classes] == [tables.G2_PARALLEL_CLASS]
    lines = {G2.lines[j] for j in classes[0].line_indices}
    assert lines == {tuple(x - 1 for x in l) for l in tables.G2_PARALLEL_CLASS_LINES}
    assert as_sets(all_parallel_classes(dual(G2))) == {frozenset(c) for c in tables.G2_DUAL_PARALLEL_CLASSES}
    assert not check_tightness(max_orthogonal_family(G2), params_from_dd(4, 2))


def test_w2_six_orthogonal_classes(W2):
    classes = all_parallel_classes(W2)
    assert len(classes) == 6
    fam = max_orthogonal_family(W2, classes)
    assert fam.m == 6 == theorem1_bound(params_from_dd(2, 2))


@pytest.mark.parametrize("d,dp,primal,dual_", [(4, 2, 28, 10), (2, 4, 10, 28), (2, 2, 6, 6), (2, 8, 18, 120),
                                               (8, 2, 120, 18), (4, 4, 52, 52)])
def test_bound_values(d, dp, primal, dual_):
    p = params_from_dd(d, dp)
    assert theorem1_bound(p, "primal") == primal
    assert theorem1_bound(p, "dual") == dual_
    assert theorem1_bound(p.swapped(), "primal") == dual_
    with pytest.raises(ValueError):
        theorem1_bound(p, "both")


def test_class_validation(W2):
    with pytest.raises(GeometryError):
        ParallelClass((0, 1)).validate(W2)
    c = all_parallel_classes(W2)[0]
    c.validate(W2)
    assert ParallelClass((3, 1, 2)).line_indices == (1, 2, 3)


def test_family_rejects_non_orthogonal(W2):
    c = all_parallel_classes(W2)[0]
    with pytest.raises(GeometryError):
        OrthogonalFamily.build(W2, [c, c])


def test_counting_identities_fail_loudly():
    # two classes sharing no line: sum of k(k-1) is 0, not m(m-1) = 2
    fam = OrthogonalFamily((ParallelClass((0,)), ParallelClass((1,))), (1, 1))
    with pytest.raises(GeometryError):
        fam.check_counting()


def test_graph_helpers(W2):
    D = disjointness_graph(W2)
    assert all(D.degree(i) == 8 for i in range(W2.b))
    O = orthogonality_graph(all_parallel_classes(W2))
    assert O.n == 6 and all(O.degree(i) == 5 for i in range(6))


def test_non_pg_rejected():
    with pytest.raises(GeometryError):
        all_parallel_classes(IncidenceStructure(4, [[0, 1], [1, 2]]))
