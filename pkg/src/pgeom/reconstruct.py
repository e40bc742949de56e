"""Rebuilding a projective plane from a partial geometry and two orthogonal families.

Given a pg with parameters from ``(d, d')`` together with a bound-meeting
family ``C`` of parallel classes in it and a bound-meeting family ``C'`` in
its dual, every class of ``C`` becomes a new point and every class of
``C'`` a new line.  A geometry line is extended by the classes containing
it; a dual class becomes the line through the ``q + 1`` geometry points
that label its members.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .arcs import (ArcError, MaximalArc, PlaneError, ProjectivePlane, construction1, dual_arc, dual_plane,
                   make_arc, pencil_orthogonal_family, verify_plane)
from .autiso import are_isomorphic, canonical_form
from .cliques import enumerate_cliques
from .incidence import GeometryError, IncidenceStructure, PgParams, dual, params_from_sta, verify_pg
from .parallel import (OrthogonalFamily, all_parallel_classes, check_tightness, max_orthogonal_family,
                       orthogonality_graph, theorem1_bound)


class ReconstructionError(GeometryError):
    pass


@dataclass(frozen=True)
class ReconstructionInput:
    G: IncidenceStructure
    C: OrthogonalFamily
    Cprime: OrthogonalFamily


def _params(G: IncidenceStructure) -> PgParams:
    verdict = verify_pg(G)
    if not verdict.is_pg:
        raise ReconstructionError(f"input is not a partial geometry: {verdict.violation}")
    p = params_from_sta(*verdict.params)
    if p is None:
        raise ReconstructionError(f"pg{verdict.params} does not have the form of an arc geometry")
    return p


def _check_input(inp: ReconstructionInput) -> PgParams:
    p = _params(inp.G)
    D = dual(inp.G)
    for name, fam, S, side, k in (("C", inp.C, inp.G, "primal", p.d), ("C'", inp.Cprime, D, "dual", p.d_prime)):
        bound = theorem1_bound(p, side)
        if fam.m != bound:
            raise ReconstructionError(f"family {name} has {fam.m} classes, needs {bound}")
        if len(fam.multiplicities) != S.b:
            raise ReconstructionError(f"family {name} does not belong to a structure with {S.b} lines")
        try:
            OrthogonalFamily.build(S, fam.classes)
        except GeometryError as exc:
            raise ReconstructionError(f"family {name} is invalid: {exc}") from exc
        if any(m != k for m in fam.multiplicities):
            raise ReconstructionError(f"family {name}: some line is not in exactly {k} classes")
    return p


def reconstruct(inp: ReconstructionInput) -> Tuple[ProjectivePlane, MaximalArc, MaximalArc]:
    """The plane of order ``dd'``, the arc of new points and the dual arc of new lines."""
    p = _check_input(inp)
    G = inp.G
    v, b = G.v, G.b
    extra: List[List[int]] = [[] for _ in range(b)]
    for i, cls in enumerate(inp.C.classes):
        for j in cls.line_indices:
            extra[j].append(v + i)
    lines = [list(G.lines[j]) + extra[j] for j in range(b)]
    # a dual class is a set of geometry points
    lines.extend(list(cls.line_indices) for cls in inp.Cprime.classes)
    S = IncidenceStructure(v + inp.C.m, lines)
    try:
        q = verify_plane(S)
    except PlaneError as exc:
        raise ReconstructionError(f"families do not yield a projective plane: {exc}") from exc
    if q != p.q:
        raise ReconstructionError(f"plane has order {q}, expected {p.q}")
    plane = ProjectivePlane(q, S)
    try:
        arc = make_arc(plane, range(v, v + inp.C.m))
        darc = make_arc(dual_plane(plane), range(b, b + inp.Cprime.m))
    except ArcError as exc:
        raise ReconstructionError(f"new points or lines do not form maximal arcs: {exc}") from exc
    if (arc.degree, darc.degree) != (p.d, p.d_prime):
        raise ReconstructionError(f"arc degrees {(arc.degree, darc.degree)}, expected {(p.d, p.d_prime)}")
    return plane, arc, darc


def reconstruct_from_geometry(S: IncidenceStructure) -> Tuple[ProjectivePlane, MaximalArc, MaximalArc]:
    """Search both sides for bound-meeting families, then reconstruct."""
    p = _params(S)
    C = max_orthogonal_family(S)
    if not check_tightness(C, p):
        raise ReconstructionError(
            f"largest orthogonal family has {C.m} classes, fewer than the bound {theorem1_bound(p, 'primal')}")
    D = dual(S)
    Cp = max_orthogonal_family(D)
    if not check_tightness(Cp, p.swapped()):
        raise ReconstructionError(
            f"largest orthogonal family in the dual has {Cp.m} classes, fewer than the bound {theorem1_bound(p, 'dual')}")
    return reconstruct(ReconstructionInput(S, C, Cp))


def _tight_families(S: IncidenceStructure, bound: int) -> List[OrthogonalFamily]:
    classes = sorted(all_parallel_classes(S))
    if len(classes) < bound:
        return []
    chosen = enumerate_cliques(orthogonality_graph(classes), bound)
    return [OrthogonalFamily.build(S, [classes[i] for i in c]) for c in chosen]


@dataclass(frozen=True)
class UniquenessEvidence:
    primal_families: int
    dual_families: int
    planes: int  # reconstructions attempted
    distinct_planes: int  # isomorphism classes among them

    @property
    def collision(self) -> bool:
        return self.distinct_planes > 1


def uniqueness_evidence(S: IncidenceStructure) -> UniquenessEvidence:
    """Reconstruct from every pair of bound-meeting families and count distinct planes."""
    p = _params(S)
    Cs = _tight_families(S, theorem1_bound(p, "primal"))
    Cps = _tight_families(dual(S), theorem1_bound(p, "dual"))
    certs = set()
    n = 0
    for C in Cs:
        for Cp in Cps:
            plane, _, _ = reconstruct(ReconstructionInput(S, C, Cp))
            certs.add(canonical_form(plane.structure).certificate)
            n += 1
    return UniquenessEvidence(len(Cs), len(Cps), n, len(certs))


def roundtrip_check(P: ProjectivePlane, A: MaximalArc) -> bool:
    """Arc geometry, pencil families on both sides, reconstruction, then compare with ``P``."""
    geo = construction1(P, A)
    C = pencil_orthogonal_family(P, A, geo)
    dA = dual_arc(A)
    dgeo = construction1(dA.plane, dA)
    if dgeo.structure != dual(geo.structure):
        return False
    Cp = pencil_orthogonal_family(dA.plane, dA, dgeo)
    try:
        plane, arc, _ = reconstruct(ReconstructionInput(geo.structure, C, Cp))
    except ReconstructionError:
        return False
    if not are_isomorphic(plane.structure, P.structure):
        return False
    return are_isomorphic(construction1(plane, arc).structure, geo.structure)
