"""Partial geometries from maximal arcs in projective planes."""

from .arcs import (MaximalArc, ProjectivePlane, construction1, denniston_arc, desarguesian_plane, dual_arc,
                   make_arc, pencil_orthogonal_family, regular_hyperoval, verify_plane)
from .autiso import are_isomorphic, aut_order, canonical_form
from .catalog import builtin, expand_orbits, read_structure, write_structure
from .gf2 import incidence_matrix, rank2
from .incidence import IncidenceStructure, dual, params_from_dd, verify_pg
from .parallel import all_parallel_classes, max_orthogonal_family, theorem1_bound
from .reconstruct import reconstruct, reconstruct_from_geometry, roundtrip_check

__all__ = [
    "IncidenceStructure", "MaximalArc", "ProjectivePlane", "all_parallel_classes", "are_isomorphic",
    "aut_order", "builtin", "canonical_form", "construction1", "denniston_arc", "desarguesian_plane", "dual",
    "dual_arc", "expand_orbits", "incidence_matrix", "make_arc", "max_orthogonal_family", "params_from_dd",
    "pencil_orthogonal_family", "rank2", "read_structure", "reconstruct", "reconstruct_from_geometry",
    "regular_hyperoval", "roundtrip_check", "theorem1_bound", "verify_pg", "verify_plane", "write_structure",
]
