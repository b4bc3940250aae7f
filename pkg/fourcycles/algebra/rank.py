"""
Exact and modular ranks.

Modular ranks never exceed the rational rank, so a modular rank equal to
the number of rows (or to a known upper bound) settles the rational rank
without exact arithmetic. Otherwise the rank is computed exactly, by
fraction-free elimination over python integers.
"""
import logging
from fractions import Fraction

import numpy as np

from fourcycles.algebra.matrix import InclusionMatrix

logger = logging.getLogger(__name__)


def bareiss_rank(rows):
    """
    Rank of an integer matrix by fraction-free (Bareiss) elimination.
    Pivot: first nonzero entry in row-major order of the remaining rows.
    """
    a = [list(r) for r in rows]
    m = len(a)
    if not m:
        return 0
    ncols = len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = None
        for r in range(rank, m):
            if a[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        prow = a[rank]
        p = prow[col]
        for r in range(rank + 1, m):
            row = a[r]
            f = row[col]
            for c in range(col + 1, ncols):
                row[c] = (p * row[c] - f * prow[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def modular_rank(matrix, p):
    """Rank over GF(p), p prime below 2^31, numpy int64 elimination"""
    a = np.array(matrix, dtype=np.int64) % p
    if a.size == 0:
        return 0
    if a.shape[0] > a.shape[1]:
        a = a.T.copy()
    m, ncols = a.shape
    rank = 0
    for col in range(ncols):
        if rank == m:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if not len(nz):
            continue
        pivot = rank + int(nz[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        below = a[rank + 1:, col].copy()
        rows = np.nonzero(below)[0] + rank + 1
        if len(rows):
            a[rows] = (a[rows] - np.outer(a[rows, col], a[rank]) % p) % p
        rank += 1
    return rank


def sparse_rank(vectors):
    """
    Exact rational rank of sparse vectors ({column: int}), by incremental
    reduction against a basis keyed by pivot column.
    """
    basis = {}
    for v in vectors:
        row = {c: Fraction(x) for c, x in v.items() if x}
        while row:
            pivot = min(row)
            if pivot not in basis:
                lead = row[pivot]
                basis[pivot] = {c: x / lead for c, x in row.items()}
                break
            f = row[pivot]
            for c, x in basis[pivot].items():
                y = row.get(c, 0) - f * x
                if y:
                    row[c] = y
                else:
                    row.pop(c, None)
    return len(basis)


def modular_ranks(matrix, primes=None):
    from fourcycles import config
    return [modular_rank(matrix, p) for p in (primes or config.RANK_PRIMES)]


def exact_rank(m):
    """
    Rational rank of an InclusionMatrix (or of a list of integer rows).
    A modular pre-screen that reaches the row count settles the answer.
    """
    from fourcycles import config
    if isinstance(m, InclusionMatrix):
        if m.order > config.RANK_MAX_ORDER:
            from fourcycles.decompose import OrderTooLarge
            raise OrderTooLarge("rank of the inclusion matrix of K_%d is not supported (max order %d)" %
                                (m.order, config.RANK_MAX_ORDER))
        rows = m.rows()
        dense = m.to_dense()
    else:
        rows = [list(r) for r in m]
        dense = np.array(rows, dtype=np.int64)
    nrows = len(rows)
    ranks = modular_ranks(dense)
    logger.debug("modular ranks %s for %d rows" % (ranks, nrows))
    if max(ranks) == nrows:
        return nrows
    rank = bareiss_rank(rows)
    if any(r > rank for r in ranks):
        raise ArithmeticError("modular rank %s exceeds rational rank %d" % (ranks, rank))
    return rank


def nullity(m):
    """Dimension of the kernel: columns minus rank"""
    return m.ncols - exact_rank(m)
