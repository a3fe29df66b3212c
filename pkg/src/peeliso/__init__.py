"""Graph isomorphism by peeling unique vertices off BFS-level digraphs."""

from .digraph import UNREACHED, AuxiliaryDigraph, Characteristic, bfs_levels, build, characteristics, unique_vertices
from .graph import Graph, degree_vector, delete_vertices, parse_edge_list, permute, precheck, render_edge_list
from .history import CharacteristicHistory, histories_equal, positionally_equivalent, push_floor
from .matcher import Mode, Status, Verdict, run, verify_mapping
from .oracle import exact_isomorphism, fuzz_agreement

__version__ = "0.1.0"
