"""Built-in geometries, the text file formats and the command-line interface.

Structure files::

    # comment
    incidence <v> <b>
    <0-based point indices of line 0, ascending>
    ...

A line without points is written as ``-``.

Arc files hold one or more blocks ``arc <plane-ref> <d>`` followed by a
single line of 0-based point indices.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple

from . import tables
from .arcs import (ArcError, MaximalArc, PlaneError, ProjectivePlane, construction1, desarguesian_plane, make_arc,
                   regular_hyperoval, verify_plane)
from .incidence import GeometryError, IncidenceStructure, dual, params_from_sta, verify_pg

log = logging.getLogger(__name__)


class ParseError(GeometryError):
    def __init__(self, message: str, lineno: Optional[int] = None, path: Optional[str] = None):
        where = f"{path or '<input>'}:{lineno}: " if lineno is not None else ""
        super().__init__(where + message)
        self.lineno = lineno


# ---------------------------------------------------------------------------
# orbit presentations


@dataclass(frozen=True)
class OrbitPresentation:
    """A point permutation in cycle form plus one line per line orbit (all 0-based)."""

    v: int
    cycles: Tuple[Tuple[int, ...], ...]
    representatives: Tuple[Tuple[int, ...], ...]
    orbit_lengths: Tuple[int, ...]

    @classmethod
    def one_based(cls, v, cycles, representatives, orbit_lengths) -> "OrbitPresentation":
        return cls(v, tuple(tuple(x - 1 for x in c) for c in cycles),
                   tuple(tuple(x - 1 for x in r) for r in representatives), tuple(orbit_lengths))

    def permutation(self) -> List[int]:
        perm = list(range(self.v))
        seen = set()
        for c in self.cycles:
            for i, x in enumerate(c):
                if x in seen or not 0 <= x < self.v:
                    raise GeometryError(f"cycle entry {x} repeated or out of range")
                seen.add(x)
                perm[x] = c[(i + 1) % len(c)]
        return perm


def expand_orbits(p: OrbitPresentation) -> IncidenceStructure:
    """Lines orbit by orbit: the representative, then its successive images."""
    if len(p.representatives) != len(p.orbit_lengths):
        raise GeometryError("one orbit length per representative is required")
    f = p.permutation()
    lines: List[Tuple[int, ...]] = []
    seen = set()
    for k, (rep, length) in enumerate(zip(p.representatives, p.orbit_lengths)):
        line = tuple(sorted(rep))
        for i in range(length):
            if line in seen:
                raise GeometryError(f"orbit {k} repeats a line after {i} of {length} steps")
            seen.add(line)
            lines.append(line)
            line = tuple(sorted(f[x] for x in line))
        if line != tuple(sorted(rep)):
            raise GeometryError(f"orbit {k} does not close after {length} steps")
    return IncidenceStructure(p.v, lines)


G1_PRESENTATION = OrbitPresentation.one_based(45, tables.G1_CYCLES, tables.G1_REPRESENTATIVES,
                                              tables.G1_ORBIT_LENGTHS)
G2_PRESENTATION = OrbitPresentation.one_based(45, tables.G2_CYCLES, tables.G2_REPRESENTATIVES,
                                              tables.G2_ORBIT_LENGTHS)

BUILTINS = ("G1", "G2", "W2")


def builtin(name: str) -> IncidenceStructure:
    if name == "G1":
        return expand_orbits(G1_PRESENTATION)
    if name == "G2":
        return expand_orbits(G2_PRESENTATION)
    if name == "W2":
        P = desarguesian_plane(4)
        return construction1(P, regular_hyperoval(P)).structure
    raise KeyError(f"unknown builtin {name!r}; choose from {', '.join(BUILTINS)}")


# ---------------------------------------------------------------------------
# file formats


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _ints(tokens: Sequence[str], lineno: int, path) -> List[int]:
    try:
        return [int(x) for x in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno, path) from None


def parse_structure(text: str, path: Optional[str] = None) -> IncidenceStructure:
    rows = list(_content_lines(text))
    if not rows:
        raise ParseError("empty file, expected 'incidence <v> <b>'", None, path)
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "incidence":
        raise ParseError(f"expected 'incidence <v> <b>', got {header!r}", lineno, path)
    v, b = _ints(parts[1:], lineno, path)
    if v < 0 or b < 0:
        raise ParseError("negative counts", lineno, path)
    body = rows[1:]
    if len(body) != b:
        raise ParseError(f"header announces {b} lines, found {len(body)}", lineno, path)
    lines = []
    for lineno, row in body:
        pts = [] if row == "-" else _ints(row.split(), lineno, path)
        for x in pts:
            if not 0 <= x < v:
                raise ParseError(f"point index {x} outside [0, {v})", lineno, path)
        if len(set(pts)) != len(pts):
            dup = next(x for x in pts if pts.count(x) > 1)
            raise ParseError(f"duplicate point {dup} in line", lineno, path)
        lines.append(pts)
    return IncidenceStructure(v, lines)


def format_structure(S: IncidenceStructure) -> str:
    out = [f"incidence {S.v} {S.b}"]
    out.extend(" ".join(map(str, line)) or "-" for line in S.lines)
    return "\n".join(out) + "\n"


def read_structure(path) -> IncidenceStructure:
    path = str(path)
    with open(path, encoding="utf-8") as fh:
        return parse_structure(fh.read(), path)


def write_structure(S: IncidenceStructure, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_structure(S))


@dataclass(frozen=True)
class ArcRecord:
    plane_ref: str
    degree: int
    points: Tuple[int, ...]


def parse_arcs(text: str, path: Optional[str] = None) -> List[ArcRecord]:
    rows = list(_content_lines(text))
    arcs = []
    i = 0
    while i < len(rows):
        lineno, header = rows[i]
        parts = header.split()
        if len(parts) != 3 or parts[0] != "arc":
            raise ParseError(f"expected 'arc <plane-ref> <d>', got {header!r}", lineno, path)
        (d,) = _ints(parts[2:], lineno, path)
        if i + 1 >= len(rows):
            raise ParseError("arc header without a point line", lineno, path)
        lineno, row = rows[i + 1]
        pts = _ints(row.split(), lineno, path)
        if len(set(pts)) != len(pts):
            raise ParseError("duplicate point in arc", lineno, path)
        arcs.append(ArcRecord(parts[1], d, tuple(sorted(pts))))
        i += 2
    return arcs


def format_arcs(arcs: Iterable[ArcRecord]) -> str:
    out = []
    for a in arcs:
        out.append(f"arc {a.plane_ref} {a.degree}")
        out.append(" ".join(map(str, a.points)))
    return "\n".join(out) + "\n"


def read_arcs(path) -> List[ArcRecord]:
    path = str(path)
    with open(path, encoding="utf-8") as fh:
        return parse_arcs(fh.read(), path)


def write_arcs(arcs: Iterable[ArcRecord], path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_arcs(arcs))


def convert_line_list(text: str, one_based: bool = False) -> IncidenceStructure:
    """Converter hook for bare line lists: one line per row, any whitespace, no header.

    ``v`` is taken as one more than the largest point index.
    """
    lines = []
    for lineno, row in _content_lines(text):
        pts = _ints(row.replace(",", " ").split(), lineno, None)
        if one_based:
            pts = [x - 1 for x in pts]
        if any(x < 0 for x in pts):
            raise ParseError("negative point index", lineno)
        lines.append(pts)
    v = 1 + max((max(l) for l in lines if l), default=-1)
    return IncidenceStructure(v, lines)


_PG_RE = re.compile(r"^PG\(2,(\d+)\)$")


def load_structure(spec: str) -> IncidenceStructure:
    """A path, ``builtin:<name>`` or ``PG(2,q)``."""
    if spec.startswith("builtin:"):
        return builtin(spec.split(":", 1)[1])
    m = _PG_RE.match(spec)
    if m and not os.path.exists(spec):
        return desarguesian_plane(int(m.group(1))).structure
    return read_structure(spec)


def load_plane(spec: str) -> ProjectivePlane:
    m = _PG_RE.match(spec)
    if m and not os.path.exists(spec):
        return desarguesian_plane(int(m.group(1)))
    S = load_structure(spec)
    return ProjectivePlane(verify_plane(S), S)


# ---------------------------------------------------------------------------
# CLI


class VerificationFailed(Exception):
    pass


def _describe(S: IncidenceStructure) -> dict:
    if S.v == S.b and S.lines:
        try:
            q = verify_plane(S)
            return {"kind": "projective_plane", "order": q, "v": S.v, "b": S.b}
        except PlaneError:
            pass
    verdict = verify_pg(S)
    if not verdict.is_pg:
        raise VerificationFailed(verdict.violation)
    s, t, alpha = verdict.params
    out = {"kind": "partial_geometry", "s": s, "t": t, "alpha": alpha, "v": S.v, "b": S.b}
    p = params_from_sta(s, t, alpha)
    if p is not None:
        out.update(d=p.d, d_prime=p.d_prime)
    return out


def _structure(args) -> IncidenceStructure:
    S = load_structure(args.file)
    return dual(S) if getattr(args, "dual", False) else S


def cmd_verify(args) -> Tuple[dict, str]:
    info = _describe(_structure(args))
    if info["kind"] == "projective_plane":
        text = f"projective plane of order {info['order']} ({info['v']} points, {info['b']} lines)"
    else:
        text = f"pg({info['s']},{info['t']},{info['alpha']}) with {info['v']} points, {info['b']} lines"
        if "d" in info:
            text += f"; d={info['d']}, d'={info['d_prime']}"
    return info, text


def cmd_rank2(args):
    from .gf2 import incidence_matrix, rank2
    r = rank2(incidence_matrix(_structure(args)))
    return {"rank2": r}, str(r)


def cmd_parallel(args):
    from .parallel import all_parallel_classes, max_orthogonal_family, theorem1_bound
    S = _structure(args)
    classes = sorted(all_parallel_classes(S))
    out = {"count": len(classes), "classes": [list(c.one_based()) for c in classes]}
    text = [" ".join(map(str, c.one_based())) for c in classes]
    text.append(f"{len(classes)} parallel classes")
    if args.max_orthogonal:
        fam = max_orthogonal_family(S, classes)
        verdict = verify_pg(S)
        p = params_from_sta(*verdict.params)
        out["max_orthogonal"] = fam.m
        if p is not None:
            bound = theorem1_bound(p, "primal")
            out["bound"] = bound
            out["meets_bound"] = fam.m == bound
            text.append(f"largest orthogonal family: {fam.m} (bound {bound}, {'met' if fam.m == bound else 'not met'})")
        else:
            text.append(f"largest orthogonal family: {fam.m}")
    return out, "\n".join(text)


def cmd_construct(args):
    P = load_plane(args.plane)
    arcs = read_arcs(args.arc)
    if len(arcs) != 1:
        raise ParseError(f"expected one arc, found {len(arcs)}", None, args.arc)
    A = make_arc(P, arcs[0].points)
    geo = construction1(P, A)
    text = format_structure(geo.structure)
    if args.output:
        write_structure(geo.structure, args.output)
    info = _describe(geo.structure)
    info["output"] = args.output
    return info, (text.rstrip("\n") if not args.output else f"wrote {args.output}")


def _default_output(spec: str) -> str:
    if spec.startswith("builtin:"):
        return spec.split(":", 1)[1] + ".plane.txt"
    return str(Path(spec).with_suffix("")) + ".plane.txt"


def cmd_reconstruct(args):
    from .gf2 import incidence_matrix, rank2
    from .reconstruct import ReconstructionError, reconstruct_from_geometry
    S = _structure(args)
    try:
        plane, arc, darc = reconstruct_from_geometry(S)
    except ReconstructionError as exc:
        raise VerificationFailed(str(exc)) from exc
    r = rank2(incidence_matrix(plane.structure))
    out_path = args.output or _default_output(args.file)
    write_structure(plane.structure, out_path)
    info = {"order": plane.order, "rank2": r, "arc_degree": arc.degree, "dual_arc_degree": darc.degree,
            "output": out_path}
    return info, f"projective plane of order {plane.order}, 2-rank {r}; wrote {out_path}"


def cmd_aut(args):
    from .autiso import aut_order
    n = aut_order(_structure(args))
    return {"aut_order": n}, str(n)


def cmd_classify(args):
    from .classify import classify_pg463
    report = classify_pg463(sample=args.sample)
    if not report.accounting_valid:
        log.error("orbit sizes do not add up to the clique count")
    lines = [report.summary()]
    for c in report.classes:
        lines.append(f"  aut {c.aut_order}: {c.count} cliques, orbit size {c.orbit_size}, "
                     f"{c.fingerprint[0]} parallel classes, 2-rank {c.fingerprint[1]}")
    if not report.accounting_valid:
        raise VerificationFailed("\n".join(lines))
    return report.to_dict(), "\n".join(lines)


def cmd_survey(args):
    from .autiso import canonical_form
    from .cliques import count_cliques
    from .gf2 import incidence_matrix, rank2
    from .parallel import disjointness_graph
    if not args.arcs:
        return {"rows": [], "notice": "no arcs supplied"}, "no arcs supplied; nothing to survey"
    P = load_plane(args.plane)
    records = read_arcs(args.arcs)
    rows = []
    certs = []
    for k, rec in enumerate(records, 1):
        A = make_arc(P, rec.points)
        if A.degree != rec.degree:
            raise VerificationFailed(f"arc {k} has degree {A.degree}, header says {rec.degree}")
        S = construction1(P, A).structure
        cf = canonical_form(S)
        k_size = len(S.lines[0])
        n_classes = count_cliques(disjointness_graph(S), S.v // k_size) if S.v % k_size == 0 else 0
        self_dual = None
        if S.v == S.b:
            self_dual = canonical_form(dual(S)).certificate == cf.certificate
        certs.append(cf.certificate)
        rows.append({"no": k, "arc": f"{rec.plane_ref}.{k}", "degree": A.degree, "aut_order": cf.aut_order,
                     "rank2": rank2(incidence_matrix(S)), "parallel_classes": n_classes, "self_dual": self_dual})
    for i, row in enumerate(rows):
        row["isomorphic_to_others"] = any(certs[j] == certs[i] for j in range(len(rows)) if j != i)
    yes = {True: "Yes", False: "No", None: "-"}
    header = f"{'#':>3}  {'arc':<16} {'|Aut(G)|':>9} {'2-rank':>7} {'par. cl.':>9} {'self-dual':>10} {'others':>7}"
    text = [header]
    for r in rows:
        text.append(f"{r['no']:>3}  {r['arc']:<16} {r['aut_order']:>9} {r['rank2']:>7} {r['parallel_classes']:>9} "
                    f"{yes[r['self_dual']]:>10} {yes[r['isomorphic_to_others']]:>7}")
    return {"rows": rows}, "\n".join(text)


def cmd_convert(args):
    with open(args.input, encoding="utf-8") as fh:
        S = convert_line_list(fh.read(), one_based=args.one_based)
    write_structure(S, args.output)
    return {"v": S.v, "b": S.b, "output": args.output}, f"wrote {args.output} ({S.v} points, {S.b} lines)"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pgeom", description="Partial geometries from maximal arcs.")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    ap.add_argument("--threads", type=int, default=None, help="cap on worker threads")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def structure_cmd(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="structure file, builtin:G1|G2|W2 or PG(2,q)")
        p.add_argument("--dual", action="store_true", help="use the dual structure")
        p.set_defaults(fn=fn)
        return p

    structure_cmd("verify", cmd_verify, "check the pg or plane axioms")
    structure_cmd("rank2", cmd_rank2, "2-rank of the incidence matrix")
    p = structure_cmd("parallel", cmd_parallel, "list parallel classes (1-based line indices)")
    p.add_argument("--max-orthogonal", action="store_true")
    structure_cmd("aut", cmd_aut, "automorphism group order")
    p = structure_cmd("reconstruct", cmd_reconstruct, "rebuild the projective plane")
    p.add_argument("-o", "--output")

    p = sub.add_parser("construct", help="geometry of an arc")
    p.add_argument("--plane", required=True)
    p.add_argument("--arc", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("classify-pg463", help="classify pg(4,6,3) with point graph the complement of T(10)")
    p.add_argument("--sample", type=int, default=50, help="members per bucket checked by canonical form")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("survey", help="per-arc table for a plane")
    p.add_argument("--plane", required=True)
    p.add_argument("--arcs")
    p.set_defaults(fn=cmd_survey)

    p = sub.add_parser("convert", help="bare line list to a structure file")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--one-based", action="store_true")
    p.set_defaults(fn=cmd_convert)
    return ap


def _set_threads(n: Optional[int]) -> None:
    if n is None:
        return
    if n < 1:
        raise ValueError("--threads must be positive")
    try:
        import numba
        numba.set_num_threads(min(n, numba.config.NUMBA_NUM_THREADS))
    except ImportError:
        pass


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    start = time.monotonic()
    try:
        _set_threads(args.threads)
        data, text = args.fn(args)
        status = 0
    except VerificationFailed as exc:
        data, text, status = {"error": str(exc)}, f"verification failed: {exc}", 1
    except (ParseError, OSError, KeyError, ValueError) as exc:
        if isinstance(exc, (PlaneError, ArcError)) or (isinstance(exc, GeometryError) and not isinstance(exc, ParseError)):
            data, text, status = {"error": str(exc)}, f"verification failed: {exc}", 1
        else:
            data, text, status = {"error": str(exc)}, f"error: {exc}", 2
    log.info("%s finished in %.2fs", args.command, time.monotonic() - start)
    if args.json:
        data = {"command": args.command, "status": status, **data}
        print(json.dumps(data, sort_keys=True))
    else:
        print(text, file=sys.stdout if status == 0 else sys.stderr)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
