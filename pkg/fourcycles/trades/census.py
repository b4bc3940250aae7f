"""
Exhaustive census of the union graphs of 2 or 3 edge-disjoint 4-cycles,
up to isomorphism, and of those carrying a bitrade.

Configurations are generated with the first cycle fixed to (1,2,3,4) and
every following cycle introducing its new vertices with the next free
labels, which reaches every configuration up to relabeling.
"""
import time
from itertools import combinations

import networkx as nx

from fourcycles.model import FourCycle
from fourcycles.trades.detect import decompositions_of_union
from fourcycles.trades.graph import TradeGraph
from fourcycles.trades.classify import classify_graph, Unsupported
from fourcycles.utils.common import timesofar
from fourcycles.utils.loggers import get_logger


def _shapes(w, x, y, z):
    return (FourCycle(w, x, y, z), FourCycle(w, x, z, y), FourCycle(w, y, x, z))


def configurations(volume, foundation):
    """Yield tuples of volume edge-disjoint cycles covering exactly vertices 1..foundation"""
    first = FourCycle(1, 2, 3, 4)

    def extend(cycles, used, edges):
        if len(cycles) == volume:
            if used == foundation:
                yield tuple(cycles)
            return
        last = len(cycles) == volume - 1
        for k in range(0, 5):
            if used + k > foundation or (last and used + k != foundation):
                continue
            new = tuple(range(used + 1, used + k + 1))
            for old in combinations(range(1, used + 1), 4 - k):
                for cyc in _shapes(*sorted(old + new)):
                    cedges = set(cyc.edges)
                    if cedges & edges:
                        continue
                    cycles.append(cyc)
                    yield from extend(cycles, used + k, edges | cedges)
                    cycles.pop()

    if foundation >= 4:
        yield from extend([first], 4, set(first.edges))


class CensusClass(object):

    __slots__ = ("volume", "foundation", "graph", "decompositions", "admits_mate", "label")

    def __init__(self, graph):
        self.graph = graph
        self.volume = graph.volume
        self.foundation = graph.foundation
        self.decompositions = decompositions_of_union(graph.cycles)
        self.admits_mate = any(not (a & b) for a, b in combinations(self.decompositions, 2))
        self.label = classify_graph(graph) if self.admits_mate else None

    def __repr__(self):
        return "<CensusClass vol=%d found=%d deg=%s decompositions=%d mate=%s label=%s>" % (
            self.volume, self.foundation, self.graph.degree_sequence(), len(self.decompositions),
            self.admits_mate, self.label or "-")


def census_classes(volume, foundation):
    """One CensusClass per isomorphism class of union graph, deterministic order"""
    buckets = {}
    reps = []
    for cycles in configurations(volume, foundation):
        graph = TradeGraph(cycles)
        h = nx.weisfeiler_lehman_graph_hash(graph.graph)
        bucket = buckets.setdefault(h, [])
        if any(graph.is_isomorphic(g) for g in bucket):
            continue
        bucket.append(graph)
        reps.append(graph)
    classes = [CensusClass(g) for g in reps]
    classes.sort(key=lambda c: (not c.admits_mate, c.graph.degree_sequence(), c.graph.edges))
    return classes


def default_foundations(volume):
    from fourcycles import config
    if volume == 2:
        return range(6, 9)
    low, high = config.CENSUS_FOUNDATIONS
    return range(low, high + 1)


def exhaustive_trade_census(volume=3, foundations=None):
    """
    [(foundation, number of trade classes)]: union graphs of volume
    edge-disjoint 4-cycles on that many vertices admitting two disjoint
    decompositions, up to isomorphism.
    """
    return [(f, sum(1 for c in classes if c.admits_mate))
            for f, classes in CensusRunner(volume, foundations).run()]


def volume2_configurations():
    """[(foundation, TradeGraph, admits_mate)] over every union graph of two edge-disjoint 4-cycles"""
    out = []
    for f, classes in CensusRunner(2).run():
        out.extend((f, c.graph, c.admits_mate) for c in classes)
    return out


class CensusRunner(object):

    def __init__(self, volume=3, foundations=None):
        if volume not in (2, 3):
            raise Unsupported("census of volume-%s trades is not supported" % volume)
        self.volume = volume
        self.foundations = list(foundations if foundations is not None else default_foundations(volume))
        self.logger, self.logfile = get_logger("census")
        self.results = []

    def run(self):
        self.results = []
        for f in self.foundations:
            t0 = time.time()
            classes = census_classes(self.volume, f)
            self.logger.info("volume %d, foundation %d: %d union graph(s), %d with a trade (%s)" %
                             (self.volume, f, len(classes), sum(1 for c in classes if c.admits_mate),
                              timesofar(t0)))
            self.results.append((f, classes))
        return self.results

    def table(self):
        import prettytable
        table = prettytable.PrettyTable(["volume", "foundation", "union graphs", "trade classes", "labels"])
        table.align["labels"] = "l"
        for f, classes in self.results:
            labels = [str(c.label) for c in classes if c.admits_mate]
            table.add_row([self.volume, f, len(classes), len(labels), ", ".join(labels) or "-"])
        return table.get_string()

    def lines(self):
        """Deterministic text body: one 'foundation count labels' line per foundation"""
        out = []
        for f, classes in self.results:
            labels = [str(c.label) for c in classes if c.admits_mate]
            out.append("%d %d %s" % (f, len(labels), ",".join(labels) or "-"))
        return out

