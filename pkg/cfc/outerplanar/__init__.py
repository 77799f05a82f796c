from cfc.outerplanar.atoms import EDGE, FACE, Atom, AtomTree, build_atom_tree
from cfc.outerplanar.configs import (
    VertexConfig,
    compatible,
    config_of,
    enumerate_vertex_configs,
)
from cfc.outerplanar.solver import (
    AtomProfile,
    OuterplanarSolution,
    process_atom,
    process_edge_atom,
    process_face_atom,
    profile_frame,
    solve_outerplanar,
)
from cfc.outerplanar.table import FeasibleTable

__all__ = [
    "EDGE",
    "FACE",
    "Atom",
    "AtomProfile",
    "AtomTree",
    "FeasibleTable",
    "OuterplanarSolution",
    "VertexConfig",
    "build_atom_tree",
    "compatible",
    "config_of",
    "enumerate_vertex_configs",
    "process_atom",
    "process_edge_atom",
    "process_face_atom",
    "profile_frame",
    "solve_outerplanar",
]
