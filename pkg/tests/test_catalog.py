import json

import pytest
from hypothesis import given, settings, strategies as st

from pgeom import tables
from pgeom.arcs import denniston_arc
from pgeom.catalog import (ArcRecord, GeometryError, OrbitPresentation, ParseError, builtin, convert_line_list,
                           expand_orbits, format_arcs, format_structure, main, parse_arcs, parse_structure,
                           read_arcs, read_structure, write_arcs, write_structure)
from pgeom.incidence import IncidenceStructure, dual, verify_pg


def test_g1_expansion(G1):
    assert G1.b == 63
    # representatives come first in each orbit block of nine
    for k, rep in enumerate(tables.G1_REPRESENTATIVES):
        assert G1.lines[9 * k] == tuple(x - 1 for x in rep)
    assert verify_pg(G1).params == (4, 6, 3)


def test_g2_expansion(G2):
    assert G2.b == 63 and len(set(G2.lines)) == 63
    assert G2.lines[0] == (13, 21, 29, 34, 39)
    assert verify_pg(G2).params == (4, 6, 3)


def test_identity_presentation():
    p = OrbitPresentation(4, (), ((0, 1), (1, 2), (2, 3)), (1, 1, 1))
    assert expand_orbits(p).lines == ((0, 1), (1, 2), (2, 3))


def test_early_collapse_rejected():
    p = OrbitPresentation(4, ((0, 1),), ((0, 1),), (2,))
    with pytest.raises(GeometryError):
        expand_orbits(p)
    with pytest.raises(GeometryError):
        expand_orbits(OrbitPresentation(4, ((0, 1),), ((0, 2),), (3,)))


def test_builtin_unknown():
    with pytest.raises(KeyError):
        builtin("G3")


@pytest.mark.parametrize("name", ["G1", "G2", "W2"])
def test_file_round_trip(tmp_path, name):
    S = builtin(name)
    for T in (S, dual(S)):
        path = tmp_path / "s.txt"
        write_structure(T, path)
        assert read_structure(path) == T
        assert path.read_bytes().endswith(b"\n")


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 9).flatmap(lambda v: st.tuples(
    st.just(v), st.lists(st.sets(st.integers(0, max(v - 1, 0)), max_size=v).map(sorted), max_size=8))))
def test_format_round_trip(data):
    v, lines = data
    S = IncidenceStructure(v, lines if v else [[] for _ in lines])
    assert parse_structure(format_structure(S)) == S


@pytest.mark.parametrize("text,lineno,fragment", [
    ("incidence 3 1\n0 0 1\n", 2, "duplicate point 0"),
    ("incidence 3 1\n0 5\n", 2, "outside"),
    ("# hi\nincidence 3 2\n0 1\n", 2, "announces 2"),
    ("incidenc 3 1\n0\n", 1, "expected 'incidence"),
    ("incidence 3 1\n0 x\n", 2, "integers"),
])
def test_parse_errors(text, lineno, fragment):
    with pytest.raises(ParseError) as info:
        parse_structure(text, "f.txt")
    assert info.value.lineno == lineno
    assert fragment in str(info.value) and f"f.txt:{lineno}" in str(info.value)


def test_comments_and_blank_lines():
    S = parse_structure("# a plane\n\nincidence 3 1  # header\n2 0 # line\n")
    assert S == IncidenceStructure(3, [[0, 2]])


def test_arc_files(tmp_path):
    arcs = [ArcRecord("PG(2,4)", 2, (0, 3, 5)), ArcRecord("PG(2,4)", 2, (1, 2))]
    path = tmp_path / "a.txt"
    write_arcs(arcs, path)
    assert read_arcs(path) == arcs
    with pytest.raises(ParseError):
        parse_arcs("arc PG(2,4) 2\n")
    with pytest.raises(ParseError):
        parse_arcs("arc PG(2,4)\n0 1\n")
    assert format_arcs(arcs).startswith("arc PG(2,4) 2\n0 3 5\n")


def test_converter():
    S = convert_line_list("1,2,3\n3 4 5\n", one_based=True)
    assert S == IncidenceStructure(5, [[0, 1, 2], [2, 3, 4]])


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_cli_verify(capsys):
    status, out, _ = run(capsys, "verify", "builtin:G1", "--dual")
    assert status == 0 and out.startswith("pg(6,4,3)")
    status, out, _ = run(capsys, "verify", "PG(2,8)")
    assert status == 0 and "order 8" in out


def test_cli_parallel_g2(capsys):
    status, out, _ = run(capsys, "parallel", "builtin:G2", "--max-orthogonal")
    assert status == 0
    assert out.splitlines()[0] == "25 26 27 28 29 30 61 62 63"
    assert "bound 28, not met" in out


def test_cli_json_is_deterministic(capsys):
    a = run(capsys, "--json", "parallel", "builtin:W2", "--max-orthogonal")[1]
    b = run(capsys, "--json", "parallel", "builtin:W2", "--max-orthogonal")[1]
    assert a == b
    data = json.loads(a)
    assert data["count"] == 6 and data["meets_bound"] and data["status"] == 0


def test_cli_rank_aut(capsys):
    assert run(capsys, "rank2", "builtin:G2")[1].strip() == "34"
    assert run(capsys, "aut", "builtin:G1")[1].strip() == "1512"
    assert json.loads(run(capsys, "--json", "aut", "builtin:W2")[1])["aut_order"] == 720


def test_cli_construct_and_reconstruct(capsys, tmp_path, plane):
    arc = tmp_path / "arc.txt"
    write_arcs([ArcRecord("PG(2,8)", 4, tuple(sorted(denniston_arc(plane(8), 4).points)))], arc)
    geo = tmp_path / "geo.txt"
    status, out, _ = run(capsys, "construct", "--plane", "PG(2,8)", "--arc", str(arc), "-o", str(geo))
    assert status == 0
    assert verify_pg(read_structure(geo)).params == (4, 6, 3)
    status, out, _ = run(capsys, "reconstruct", str(geo))
    assert status == 0 and "order 8, 2-rank 28" in out
    assert read_structure(tmp_path / "geo.plane.txt").v == 73


def test_cli_failures(capsys, tmp_path):
    status, _, err = run(capsys, "reconstruct", "builtin:G2", "-o", str(tmp_path / "x.txt"))
    assert status == 1 and "fewer than the bound 28" in err
    bad = tmp_path / "bad.txt"
    bad.write_text("incidence 3 1\n0 0 1\n")
    status, _, err = run(capsys, "verify", str(bad))
    assert status == 2 and "bad.txt:2" in err
    notpg = tmp_path / "notpg.txt"
    notpg.write_text("incidence 5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n")
    assert run(capsys, "verify", str(notpg))[0] == 1
    assert run(capsys, "verify", str(tmp_path / "missing.txt"))[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_cli_survey_without_arcs(capsys):
    status, out, _ = run(capsys, "survey", "--plane", "PG(2,16)")
    assert status == 0 and "no arcs supplied" in out


def test_cli_survey_small(capsys, tmp_path, plane):
    arc = tmp_path / "arcs.txt"
    write_arcs([ArcRecord("PG(2,8)", 4, tuple(sorted(denniston_arc(plane(8), 4).points)))] * 2, arc)
    data = json.loads(run(capsys, "--json", "survey", "--plane", "PG(2,8)", "--arcs", str(arc))[1])
    rows = data["rows"]
    assert [r["parallel_classes"] for r in rows] == [28, 28]
    assert all(r["isomorphic_to_others"] and r["rank2"] == 28 for r in rows)


def test_cli_convert(capsys, tmp_path):
    src = tmp_path / "raw.txt"
    src.write_text("1 2\n2 3\n")
    status, _, _ = run(capsys, "convert", str(src), str(tmp_path / "out.txt"), "--one-based")
    assert status == 0 and read_structure(tmp_path / "out.txt") == IncidenceStructure(3, [[0, 1], [1, 2]])
