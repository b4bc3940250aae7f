"""
The move graph of labeled systems: two systems are adjacent when one
becomes the other by a volume-2 or volume-3 trade.

Breadth-first exploration works on cycle-index keys. Trades are looked up
per subset of cycle indices and cached, since a subset of cycles of K_n
shows up in many systems.
"""
import os
import time
from collections import deque
from functools import lru_cache
from itertools import combinations

import psutil

from fourcycles.model import Bitrade, CycleSystem, TradePath, InvalidTrade, cycle_space
from fourcycles.trades import find_trades, mates, may_have_mate
from fourcycles.utils.common import timesofar
from fourcycles.utils.loggers import get_logger
from fourcycles.utils.parallel_mp import run_parallel_on_iterable


class ConnectivityError(Exception):
    pass


def system_symmetric_difference(a, b):
    """Bitrade (a - b, b - a) when these cycles form one, else None"""
    if a.order != b.order:
        raise ConnectivityError("systems of orders %d and %d" % (a.order, b.order))
    out_ = set(a.cycles) - set(b.cycles)
    in_ = set(b.cycles) - set(a.cycles)
    if not out_:
        return None
    try:
        return Bitrade(out_, in_)
    except InvalidTrade:
        return None


def neighbors(system):
    """Every system one volume-2/3 trade away, deduplicated and sorted"""
    found = set()
    for t in find_trades(system, "both"):
        found.add(t.apply_to(system))
    return sorted(found)


@lru_cache(maxsize=1 << 18)
def _subset_moves(order, subset):
    space = cycle_space(order)
    cycles = [space.cycles[i] for i in subset]
    if not may_have_mate(cycles):
        return ()
    return tuple(tuple(sorted(space.index(c) for c in alt)) for alt in mates(cycles))


def _connected_subsets(order, key):
    space = cycle_space(order)
    verts = [set(space.cycles[i]) for i in key]
    near = [[j for j in range(len(key)) if j != i and verts[i] & verts[j]] for i in range(len(key))]
    seen = set()
    for i in range(len(key)):
        for j in near[i]:
            if j > i:
                yield (key[i], key[j])
        for j, k in combinations(near[i], 2):
            triple = tuple(sorted((i, j, k)))
            if triple not in seen:
                seen.add(triple)
                yield tuple(key[x] for x in triple)


def neighbor_moves(order, key):
    """[(removed indices, added indices, new key)] for every trade inside the system "key" """
    moves = set()
    current = set(key)
    for subset in _connected_subsets(order, key):
        for alt in _subset_moves(order, subset):
            new = tuple(sorted((current - set(subset)) | set(alt)))
            moves.add((subset, alt, new))
    return sorted(moves)


def neighbor_keys(order, key):
    return sorted(set(m[2] for m in neighbor_moves(order, key)))


def class_signature(order, key, moves=None):
    """
    Isomorphism invariant: sorted multiset of each cycle's vertex
    intersection profile, plus the numbers of volume-2 and volume-3 moves.
    """
    space = cycle_space(order)
    verts = [set(space.cycles[i]) for i in key]
    profile = tuple(sorted(tuple(sorted(len(v & w) for w in verts if w is not v)) for v in verts))
    if moves is None:
        moves = neighbor_moves(order, key)
    return (profile, sum(1 for m in moves if len(m[0]) == 2), sum(1 for m in moves if len(m[0]) == 3))


def _expand(item):
    order, key = item
    moves = neighbor_moves(order, key)
    return [(key, sorted(set(m[2] for m in moves)), class_signature(order, key, moves))]


class MoveGraphStats(object):

    def __init__(self):
        self.vertex_count = 0
        self.component_count = None
        self.max_bfs_depth = 0
        self.class_coverage = set()
        self.complete = True
        self.reason = None
        self.elapsed = 0.0
        self.universe_size = None
        # systems whose class was left undecided, and the classes they may belong to
        self.unresolved = 0
        self.unresolved_labels = set()

    def __repr__(self):
        return "<MoveGraphStats reached=%d components=%s depth=%d classes=%s unresolved=%d%s>" % (
            self.vertex_count, self.component_count, self.max_bfs_depth, ",".join(sorted(self.class_coverage)),
            self.unresolved,
            "" if self.complete else " INCOMPLETE (%s)" % self.reason)


class BudgetExceeded(Exception):
    pass


class MoveGraphExplorer(object):
    """
    Breadth-first closure of a labeled system under trade moves, level by
    level. Stops, flagging the result incomplete, when the state, time or
    memory budget is exhausted.
    """
    RESOLVE_LIMIT = 64

    def __init__(self, max_states=None, max_seconds=None, max_memory_mb=None, num_workers=1,
                 track_classes=True):
        from fourcycles import config
        self.max_states = max_states or config.BFS_MAX_STATES
        self.max_seconds = max_seconds or config.BFS_MAX_SECONDS
        self.max_memory_mb = max_memory_mb or config.BFS_MAX_MEMORY_MB
        self.check_every = config.BFS_MEMORY_CHECK_EVERY
        self.num_workers = num_workers
        self.track_classes = track_classes
        self.logger, self.logfile = get_logger("connectivity")
        self.process = psutil.Process(os.getpid())
        self._signatures = None
        self._resolved = {}

    def _check_budget(self, visited, t0, processed):
        if len(visited) > self.max_states:
            raise BudgetExceeded("state budget of %d exceeded" % self.max_states)
        if time.time() - t0 > self.max_seconds:
            raise BudgetExceeded("time budget of %ss exceeded" % self.max_seconds)
        if processed % self.check_every == 0:
            rss = self.process.memory_info().rss / (1024 * 1024)
            if rss > self.max_memory_mb:
                raise BudgetExceeded("memory budget of %dMB exceeded (rss=%dMB)" % (self.max_memory_mb, rss))

    def reference_signatures(self):
        if self._signatures is None:
            from fourcycles.decompose import reference_systems
            self._signatures = {}
            for label, s in reference_systems():
                self._signatures.setdefault(class_signature(9, s.key), set()).add(label)
        return self._signatures

    def _cover(self, stats, key, signature):
        labels = self.reference_signatures().get(signature)
        if labels and len(labels) == 1:
            stats.class_coverage |= labels
            return
        if labels and labels <= stats.class_coverage:
            return
        # ambiguous signature: canonical labeling, a bounded number of times
        checks = self._resolved.get(signature, 0)
        if checks >= self.RESOLVE_LIMIT:
            stats.unresolved += 1
            stats.unresolved_labels |= (labels or set()) - stats.class_coverage
            return
        self._resolved[signature] = checks + 1
        from fourcycles.decompose import match_reference_class
        label = match_reference_class(CycleSystem.from_key(9, key))
        if label:
            stats.class_coverage.add(label)

    def _expand_level(self, order, frontier):
        if self.num_workers == 1:
            return [r for key in frontier for r in _expand((order, key))]
        return run_parallel_on_iterable(_expand, [(order, k) for k in frontier], chunk_size=256,
                                        num_workers=self.num_workers)

    def explore(self, start, universe=None):
        """
        MoveGraphStats of the component of start. With universe (a set of
        keys), every other component of the universe is explored as well to
        count components.
        """
        stats = MoveGraphStats()
        t0 = time.time()
        order = start.order
        visited = set()
        seeds = [start.key]
        components = 0
        try:
            while seeds:
                seed = seeds.pop()
                if seed in visited:
                    continue
                components += 1
                depth = self._component(order, seed, visited, stats, components == 1, t0)
                if components == 1:
                    stats.vertex_count = len(visited)
                    stats.max_bfs_depth = depth
                    self.logger.info("component of %r: %d systems, depth %d (%s)" %
                                     (start, stats.vertex_count, depth, timesofar(t0)))
                if universe is not None:
                    left = universe - visited
                    if left:
                        seeds.append(min(left))
            if universe is not None:
                stats.component_count = components
                stats.universe_size = len(universe)
                if not universe >= visited:
                    self.logger.warning("%d reached system(s) are outside the universe" % len(visited - universe))
        except BudgetExceeded as e:
            stats.complete = False
            stats.reason = str(e)
            if components == 1:
                stats.vertex_count = len(visited)
            self.logger.warning("exploration stopped: %s (%d systems reached)" % (e, len(visited)))
        stats.unresolved_labels -= stats.class_coverage
        if stats.unresolved:
            self.logger.warning("%d system(s) left without a class after %d canonical labelings per signature, "
                                "possibly %s" % (stats.unresolved, self.RESOLVE_LIMIT,
                                                 ",".join(sorted(stats.unresolved_labels)) or "covered classes"))
        stats.elapsed = time.time() - t0
        return stats

    def _component(self, order, seed, visited, stats, first, t0):
        track = first and self.track_classes and order == 9
        visited.add(seed)
        frontier = [seed]
        depth = 0
        processed = 0
        while frontier:
            nxt = []
            for key, keys, signature in self._expand_level(order, frontier):
                processed += 1
                if track:
                    self._cover(stats, key, signature)
                for k in keys:
                    if k not in visited:
                        visited.add(k)
                        nxt.append(k)
                self._check_budget(visited, t0, processed)
            nxt.sort()
            if nxt:
                depth += 1
                self.logger.debug("depth %d: %d new systems, %d total (%s)" % (depth, len(nxt), len(visited),
                                                                              timesofar(t0)))
            frontier = nxt
            if first:
                stats.max_bfs_depth = depth
        return depth


def bfs_connectivity(start, universe=None, max_states=None, max_seconds=None, max_memory_mb=None, num_workers=1):
    explorer = MoveGraphExplorer(max_states=max_states, max_seconds=max_seconds, max_memory_mb=max_memory_mb,
                                 num_workers=num_workers)
    return explorer.explore(start, universe=universe)


def bfs_path(a, b, max_states=None):
    """
    Shortest TradePath from a to b, or None when b is not reached within
    max_states systems.
    """
    from fourcycles import config
    max_states = max_states or config.PATH_BFS_MAX_STATES
    if a.order != b.order:
        raise ConnectivityError("systems of orders %d and %d" % (a.order, b.order))
    order = a.order
    space = cycle_space(order)
    previous = {a.key: None}
    queue = deque([a.key])
    while queue:
        key = queue.popleft()
        if key == b.key:
            steps = []
            while previous[key] is not None:
                parent, removed, added = previous[key]
                steps.append(([space.cycles[i] for i in removed], [space.cycles[i] for i in added]))
                key = parent
            return TradePath(a, steps[::-1])
        for removed, added, new in neighbor_moves(order, key):
            if new not in previous:
                previous[new] = (key, removed, added)
                if len(previous) > max_states:
                    return None
                queue.append(new)
    return None
