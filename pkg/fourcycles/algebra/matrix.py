"""
Pair inclusion matrix of K_n: rows are the C(n,2) edges, columns the
3*C(n,4) 4-cycles, M[e][C] = 1 iff edge e lies on cycle C. Indices follow
fourcycles.model (lexicographic edges, cycles by 4-subset then shape).
"""
from math import comb

import numpy as np

from fourcycles.model import cycle_space, pair_count, cycle_count


class TooSmall(ValueError):
    pass


class InclusionMatrix(object):
    """Column-sparse: every column stores the 4 row indices of its edges"""

    def __init__(self, order):
        if order < 4:
            raise TooSmall("K_%d has no 4-cycle" % order)
        self.order = order
        space = cycle_space(order)
        index = {e: i for i, e in enumerate(space.edges)}
        self.columns = [tuple(sorted(index[e] for e in c.edges)) for c in space.cycles]

    @property
    def nrows(self):
        return pair_count(self.order)

    @property
    def ncols(self):
        return cycle_count(self.order)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def column_sums(self):
        return [len(c) for c in self.columns]

    def row_sums(self):
        sums = [0] * self.nrows
        for col in self.columns:
            for r in col:
                sums[r] += 1
        return sums

    def expected_row_sum(self):
        """Cycles through a given edge: 2 of the 3 on each 4-subset holding it"""
        return 2 * comb(self.order - 2, 2)

    def multiply(self, vector):
        """M.x for x given as {column: value} or as a full-length sequence"""
        items = vector.items() if isinstance(vector, dict) else enumerate(vector)
        out = [0] * self.nrows
        for j, v in items:
            if v:
                for r in self.columns[j]:
                    out[r] += v
        return out

    def rows(self):
        """Dense rows as lists of python ints"""
        dense = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.columns):
            for r in col:
                dense[r][j] = 1
        return dense

    def to_dense(self, dtype=np.int64):
        dense = np.zeros(self.shape, dtype=dtype)
        for j, col in enumerate(self.columns):
            dense[list(col), j] = 1
        return dense

    def to_text(self):
        """Row-major, one row per line, space-separated 0/1"""
        return "".join(" ".join(str(x) for x in row) + "\n" for row in self.rows())

    def __repr__(self):
        return "<InclusionMatrix K_%d %dx%d>" % (self.order, self.nrows, self.ncols)


def build_matrix(n):
    return InclusionMatrix(n)
