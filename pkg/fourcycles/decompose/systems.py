import time

from fourcycles.decompose.exactcover import ExactCover
from fourcycles.model import CycleSystem, cycle_space
from fourcycles.utils.common import timesofar
from fourcycles.utils.loggers import get_logger
from fourcycles.utils.parallel_mp import run_parallel_on_iterable, agg_by_sum, agg_by_append


class OrderTooLarge(ValueError):
    pass


def admissible(n):
    """True iff a 4-CS(n) exists, i.e. n = 1 (mod 8)"""
    return n >= 1 and n % 8 == 1


def system_cover(n):
    """Exact cover problem: rows are the 3*C(n,4) cycles, columns the C(n,2) edges"""
    space = cycle_space(n)
    rows = {}
    for idx, m in enumerate(space.masks):
        rows[idx] = [e for e in range(len(space.edges)) if m >> e & 1]
    return ExactCover(rows, range(len(space.edges)))


def _branch_keys(item):
    n, row = item
    return [tuple(sorted(sol)) for sol in system_cover(n).solve((row,))]


def _branch_count(item):
    n, row = item
    return system_cover(n).count((row,))


class SystemEnumerator(object):
    """
    Labeled 4-CS(n) as exact covers of the edges of K_n by 4-cycles.
    The work is split on the candidates of the first branching column,
    each branch being searched by a worker process; results are sorted
    afterwards so the output does not depend on scheduling.
    """

    def __init__(self, n, num_workers=None):
        from fourcycles import config
        self.n = n
        self.num_workers = num_workers
        self.max_order = config.ENUMERATION_MAX_ORDER
        self.chunk_size = config.CHUNK_SIZE
        self.logger, self.logfile = get_logger("enumerate")

    def _check_order(self):
        if self.n > self.max_order:
            raise OrderTooLarge("exhaustive enumeration of 4-CS(%d) is not supported (max order %d)" %
                                (self.n, self.max_order))

    def _branches(self):
        _, rows = system_cover(self.n).branches()
        return [(self.n, r) for r in rows]

    def keys(self):
        """Sorted list of the cycle-index keys of every labeled system"""
        if not admissible(self.n):
            return []
        self._check_order()
        t0 = time.time()
        keys = run_parallel_on_iterable(_branch_keys, self._branches(), agg_function=agg_by_append,
                                        agg_function_init=[], chunk_size=self.chunk_size,
                                        num_workers=self.num_workers)
        keys.sort()
        self.logger.info("Enumerated %d labeled 4-CS(%d) in %s" % (len(keys), self.n, timesofar(t0)))
        return keys

    def systems(self):
        for key in self.keys():
            yield CycleSystem.from_key(self.n, key)

    def count(self):
        if not admissible(self.n):
            return 0
        self._check_order()
        t0 = time.time()
        total = run_parallel_on_iterable(_branch_count, self._branches(), agg_function=agg_by_sum,
                                         agg_function_init=0, chunk_size=self.chunk_size,
                                         num_workers=self.num_workers)
        self.logger.info("Counted %d labeled 4-CS(%d) in %s" % (total, self.n, timesofar(t0)))
        return total

    def first(self):
        """First system met by the search, or None. It contains the cycle (1,2,3,4)."""
        if not admissible(self.n):
            return None
        sol = system_cover(self.n).first()
        if sol is None:
            return None
        return CycleSystem.from_key(self.n, sol, validate=True)


def enumerate_systems(n, mode="all", num_workers=None):
    """
    mode "all": iterator over every labeled 4-CS(n), ordered by sorted
    cycle-index sequence; "count": their number; "first": one system or None.
    Inadmissible orders give nothing.
    """
    enumerator = SystemEnumerator(n, num_workers=num_workers)
    if mode == "all":
        return enumerator.systems()
    elif mode == "count":
        return enumerator.count()
    elif mode == "first":
        return enumerator.first()
    raise ValueError("unknown enumeration mode '%s'" % mode)
