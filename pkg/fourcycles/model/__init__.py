from .cycle import FourCycle, Edge, CycleSpace, InvalidCycle, OutOfRange, \
    canonicalize_cycle, cycle_index, cycle_from_index, cycle_space, cycle_count, \
    edge_index, edge_from_index, pair_count, parse_compact, check_vertex
from .permutation import Permutation, InvalidPermutation, star_transpositions
from .system import CycleSystem, NotADecomposition, as_cycle, system_size
from .trade import Bitrade, MuWayTrade, TradePath, ConfigLabel, InvalidTrade, \
    InvalidPath, check_bitrade, cycle_set, vertex_set, format_cycles
from .action import apply_permutation, relabel
