from .degree import DegreeSolution, solve_degree_equations, is_graphical, max_foundation
from .graph import TradeGraph, union_graph, complete_minus_matching, complete_bipartite
from .detect import TradeError, decompositions_of_union, decompositions_of_edges, find_trades, mates, \
    may_have_mate, TradeScanner, cycle_order
from .classify import Unsupported, classify_config, classify_graph, reference_graphs, labeled, extend_muway, \
    max_mu, muway_isomorphic, double_diamond_chain, volume_witness, volume_witnesses, parse_part
from .census import configurations, census_classes, exhaustive_trade_census, volume2_configurations, \
    CensusClass, CensusRunner
