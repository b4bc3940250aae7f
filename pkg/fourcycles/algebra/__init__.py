from .matrix import InclusionMatrix, TooSmall, build_matrix
from .rank import bareiss_rank, modular_rank, modular_ranks, sparse_rank, exact_rank, nullity
from .kernel import TradeVector, InternalInconsistency, trade_vector, in_kernel, double_diamond_configurations, \
    double_diamond_vectors, double_diamond_span, configuration_count, DoubleDiamondSpan, dense_vectors
