from ..core.perm import format_permutation, parse_permutation
from .fop import format_antichain, parse_fop, read_fop, write_fop
from .graphdump import dump_graph, parse_graph_dump, read_graph_dump
from .plc import format_point, parse_plc, parse_points, read_plc, read_points
from .report import format_check, format_hyperplanes, format_regions
