"""
Trade vectors in the kernel of the inclusion matrix, and the span of the
double-diamond vectors.
"""
import time
from itertools import combinations
from math import comb

import numpy as np

from fourcycles.model import cycle_index, canonicalize_cycle, Bitrade
from fourcycles.algebra.matrix import InclusionMatrix, TooSmall
from fourcycles.algebra.rank import modular_ranks, sparse_rank, nullity
from fourcycles.utils.common import timesofar
from fourcycles.utils.loggers import get_logger


class InternalInconsistency(AssertionError):
    pass


class TradeVector(object):
    """+1 on the cycles of t1, -1 on those of t2, over the 3*C(n,4) cycles of K_n"""

    __slots__ = ("order", "entries")

    def __init__(self, order, entries):
        self.order = order
        self.entries = {c: v for c, v in sorted(entries.items()) if v}

    @property
    def support(self):
        return sorted(self.entries)

    def dense(self, length):
        out = [0] * length
        for c, v in self.entries.items():
            out[c] = v
        return out

    def __neg__(self):
        return TradeVector(self.order, {c: -v for c, v in self.entries.items()})

    def __eq__(self, other):
        return isinstance(other, TradeVector) and self.order == other.order and self.entries == other.entries

    def __hash__(self):
        return hash((self.order, tuple(self.entries.items())))

    def __repr__(self):
        return "<TradeVector K_%d %s>" % (self.order, " ".join("%+d@%d" % (v, c) for c, v in self.entries.items()))


def in_kernel(matrix, vector):
    entries = vector.entries if isinstance(vector, TradeVector) else vector
    return not any(matrix.multiply(entries))


def trade_vector(trade, n, matrix=None):
    """Signed indicator of a bitrade; M.x == 0 is checked before returning"""
    if max(trade.vertices) > n:
        raise TooSmall("trade on vertices up to %d does not fit K_%d" % (max(trade.vertices), n))
    entries = {}
    for c in trade.t1:
        entries[cycle_index(c, n)] = 1
    for c in trade.t2:
        entries[cycle_index(c, n)] = -1
    vector = TradeVector(n, entries)
    matrix = matrix or InclusionMatrix(n)
    if not in_kernel(matrix, vector):
        raise InternalInconsistency("vector of %s is not in the kernel of M" % trade)
    return vector


def double_diamond_configurations(n):
    """
    Yield (graph id, decompositions) for every K_{2,4} of K_n: the degree-4
    pair {x, y} and a 4-subset of the other vertices. Each graph has 3
    decompositions into two 4-cycles, one per pairing of the 4-subset.
    """
    for x, y in combinations(range(1, n + 1), 2):
        rest = [v for v in range(1, n + 1) if v not in (x, y)]
        for a, b, c, d in combinations(rest, 4):
            decs = []
            for (p, q), (r, s) in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
                decs.append((canonicalize_cycle(x, p, y, q), canonicalize_cycle(x, r, y, s)))
            yield ((x, y, a, b, c, d), decs)


def configuration_count(n):
    return comb(n, 2) * comb(n - 2, 4) * 3


class DoubleDiamondSpan(object):

    __slots__ = ("order", "configurations", "dd_vectors", "generated_rank", "nullity")

    def __init__(self, order, configurations, dd_vectors, generated_rank, nullity):
        self.order = order
        self.configurations = configurations
        self.dd_vectors = dd_vectors
        self.generated_rank = generated_rank
        self.nullity = nullity

    @property
    def spans(self):
        return self.generated_rank == self.nullity

    def __iter__(self):
        return iter((self.generated_rank, self.nullity, self.spans))

    def line(self):
        return "%d, %d, %d, %d, spans=%s" % (self.order, self.dd_vectors, self.generated_rank, self.nullity,
                                             "true" if self.spans else "false")

    def __repr__(self):
        return "<DoubleDiamondSpan K_%d %s>" % (self.order, self.line())


def double_diamond_vectors(n, matrix=None):
    """Pairwise differences of the 3 decompositions of every K_{2,4} of K_n"""
    matrix = matrix or InclusionMatrix(n)
    vectors = []
    for _, decs in double_diamond_configurations(n):
        for d1, d2 in combinations(decs, 2):
            vectors.append(trade_vector(Bitrade(d1, d2, validate=False), n, matrix))
    return vectors


def dense_vectors(vectors, ncols):
    """numpy int64 matrix with one row per TradeVector"""
    dense = np.zeros((len(vectors), ncols), dtype=np.int64)
    for i, v in enumerate(vectors):
        for c, x in v.entries.items():
            dense[i, c] = x
    return dense


def double_diamond_span(n):
    """
    Rank of the span of all double-diamond trade vectors of K_n against
    the nullity of M. The modular rank is a lower bound of the rational
    rank, which is at most the nullity: equality settles it, otherwise the
    rank is computed exactly.
    """
    if n < 6:
        raise TooSmall("K_%d has no double-diamond" % n)
    logger, _ = get_logger("algebra")
    t0 = time.time()
    matrix = InclusionMatrix(n)
    null = nullity(matrix)
    vectors = double_diamond_vectors(n, matrix)
    rank = max(modular_ranks(dense_vectors(vectors, matrix.ncols)))
    if rank < null:
        rank = sparse_rank(v.entries for v in vectors)
    logger.info("K_%d: %d double-diamond vectors span rank %d, nullity %d (%s)" %
                (n, len(vectors), rank, null, timesofar(t0)))
    return DoubleDiamondSpan(n, configuration_count(n), len(vectors), rank, null)
