from .moves import ConnectivityError, BudgetExceeded, MoveGraphStats, MoveGraphExplorer, \
    system_symmetric_difference, neighbors, neighbor_moves, neighbor_keys, class_signature, \
    bfs_connectivity, bfs_path
from .tree import TreeEdgeWitness, spanning_tree_witnesses
from .constructive import InvalidInput, ConstructiveEngine, constructive_path, seed_path, hub_automorphism
