"""
Trade detection: re-decompose the union graph of 2 or 3 cycles of a system
and keep every decomposition sharing no cycle with the original ones.
"""
import time
from collections import Counter
from functools import lru_cache
from itertools import combinations

from fourcycles.decompose.exactcover import ExactCover
from fourcycles.model import Bitrade, CycleSystem, as_cycle, canonicalize_cycle
from fourcycles.trades.degree import max_foundation
from fourcycles.utils.common import timesofar
from fourcycles.utils.loggers import get_logger
from fourcycles.utils.parallel_mp import run_parallel_on_iterable


class TradeError(ValueError):
    pass


VOLUMES = {"2": (2,), "3": (3,), "both": (2, 3), 2: (2,), 3: (3,)}


def cycle_order(c):
    """Sort key matching cycle indices: 4-subset first, then traversal"""
    w, x, y, z = sorted(c)
    return ((w, x, y, z), 0 if c[2] == y else (1 if c[2] == z else 2))


def decomposition_order(cycles):
    return [cycle_order(c) for c in sorted(cycles, key=cycle_order)]


def graph_cycles(edges):
    """Every 4-cycle whose edges all belong to the edge set"""
    adj = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    found = set()
    for a, c in combinations(sorted(adj), 2):
        common = sorted(adj[a] & adj[c])
        for b, d in combinations(common, 2):
            found.add(canonicalize_cycle(a, b, c, d))
    return sorted(found, key=cycle_order)


def decompositions_of_edges(edges):
    """All partitions of an edge set into 4-cycles, as sorted cycle tuples"""
    edges = sorted(tuple(sorted(e)) for e in edges)
    if not edges:
        return [()]
    columns = {e: i for i, e in enumerate(edges)}
    candidates = graph_cycles(edges)
    rows = {i: [columns[e] for e in c.edges] for i, c in enumerate(candidates)}
    out = []
    for sol in ExactCover(rows, range(len(edges))).solve():
        out.append(tuple(sorted((candidates[i] for i in sol), key=cycle_order)))
    out.sort(key=lambda dec: [cycle_order(c) for c in dec])
    return out


@lru_cache(maxsize=65536)
def _local_decompositions(local_cycles):
    edges = [e for c in local_cycles for e in c.edges]
    return tuple(decompositions_of_edges(edges))


def _localize(cycles):
    verts = sorted(set(x for c in cycles for x in c))
    to_local = {x: i + 1 for i, x in enumerate(verts)}
    local = tuple(sorted((canonicalize_cycle(*(to_local[x] for x in c)) for c in cycles), key=cycle_order))
    return local, verts


def decompositions_of_union(cycles):
    """
    All decompositions into 4-cycles of the union graph of pairwise
    edge-disjoint cycles, as frozensets in deterministic order. The input
    decomposition is always one of them.
    """
    cycles = [as_cycle(c) for c in cycles]
    edges = [e for c in cycles for e in c.edges]
    if len(edges) != len(set(edges)):
        raise TradeError("cycles are not edge-disjoint")
    if not cycles:
        return [frozenset()]
    local, verts = _localize(cycles)
    out = []
    for dec in _local_decompositions(local):
        out.append(frozenset(canonicalize_cycle(*(verts[x - 1] for x in c)) for c in dec))
    out.sort(key=decomposition_order)
    return out


def may_have_mate(cycles):
    """
    Cheap necessary condition for a disjoint alternative decomposition:
    foundation at most 3 * volume and no two adjacent degree-2 vertices.
    """
    counts = Counter(x for c in cycles for x in c)
    if len(counts) > max_foundation(len(cycles)):
        return False
    for c in cycles:
        for u, v in c.edges:
            if counts[u] == 1 and counts[v] == 1:
                return False
    return True


def mates(cycles):
    """Decompositions of the union sharing no cycle with cycles"""
    original = frozenset(as_cycle(c) for c in cycles)
    if not may_have_mate(original):
        return []
    return [dec for dec in decompositions_of_union(original) if not dec & original]


class TradeScanner(object):
    """
    Volume-2 and volume-3 trades contained in a system. Candidate subsets
    are connected through shared vertices: pairs of vertex-sharing cycles
    and triples around a centre cycle sharing a vertex with both others.
    """

    def __init__(self, system):
        self.system = system
        self.cycles = system.cycles
        by_vertex = {}
        for i, c in enumerate(self.cycles):
            for x in c:
                by_vertex.setdefault(x, []).append(i)
        self.neighbours = []
        for i, c in enumerate(self.cycles):
            near = set()
            for x in c:
                near.update(by_vertex[x])
            near.discard(i)
            self.neighbours.append(sorted(near))

    def subsets(self, volume, centre):
        near = self.neighbours[centre]
        if volume == 2:
            for j in near:
                if j > centre:
                    yield (centre, j)
        elif volume == 3:
            for j, k in combinations(near, 2):
                yield tuple(sorted((centre, j, k)))
        else:
            raise TradeError("trade detection supports volumes 2 and 3, not %s" % volume)

    def scan_centre(self, volumes, centre):
        found = set()
        for volume in volumes:
            for subset in self.subsets(volume, centre):
                part = [self.cycles[i] for i in subset]
                for alt in mates(part):
                    found.add(Bitrade(part, alt, validate=False))
        return found

    def scan(self, volumes, centres=None):
        found = set()
        for centre in (range(len(self.cycles)) if centres is None else centres):
            found |= self.scan_centre(volumes, centre)
        return found


def _scan_chunk(item):
    order, key, volumes, centre = item
    scanner = _scanner_for(order, key)
    return [(tuple(t.t1), tuple(t.t2)) for t in scanner.scan_centre(volumes, centre)]


@lru_cache(maxsize=4)
def _scanner_for(order, key):
    return TradeScanner(CycleSystem.from_key(order, key))


def _agg_set(prev, curr):
    prev.update(curr)
    return prev


def find_trades(system, volume="both", num_workers=None, validate=True):
    """
    Every volume-2 and/or volume-3 Bitrade (t1 inside system, t2 disjoint
    from t1), deduplicated and sorted. Large systems are scanned in
    parallel, one task per centre cycle.
    """
    try:
        volumes = VOLUMES[volume]
    except KeyError:
        raise TradeError("volume must be 2, 3 or 'both', got %r" % (volume,))
    logger, _ = get_logger("trades")
    t0 = time.time()
    if num_workers is None and len(system) < 64:
        num_workers = 1
    if num_workers == 1:
        found = TradeScanner(system).scan(volumes)
    else:
        items = [(system.order, system.key, volumes, c) for c in range(len(system))]
        pairs = run_parallel_on_iterable(_scan_chunk, items, agg_function=_agg_set, agg_function_init=set(),
                                         chunk_size=4, num_workers=num_workers)
        found = set(Bitrade(t1, t2, validate=False) for t1, t2 in pairs)
    trades = sorted(found, key=lambda t: t.sort_key())
    if validate:
        for t in trades:
            Bitrade(t.t1, t.t2)
    logger.debug("%d trade(s) of volume %s in %r (%s)" % (len(trades), "/".join(map(str, volumes)),
                                                         system, timesofar(t0)))
    return trades
