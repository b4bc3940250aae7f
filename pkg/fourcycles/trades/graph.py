"""
Union graphs of sets of 4-cycles (trade graphs) as networkx graphs.
"""
import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from fourcycles.model import as_cycle


class TradeGraph(object):
    """
    Union of the edges of a set of edge-disjoint 4-cycles. Every degree is
    even and positive, and there are 4 edges per cycle.
    """

    def __init__(self, cycles):
        self.cycles = tuple(sorted(as_cycle(c) for c in cycles))
        self.graph = nx.Graph()
        for c in self.cycles:
            for u, v in c.edges:
                if self.graph.has_edge(u, v):
                    raise ValueError("cycles are not edge-disjoint (edge %d-%d)" % (u, v))
                self.graph.add_edge(u, v)

    @property
    def vertices(self):
        return sorted(self.graph.nodes())

    @property
    def edges(self):
        return sorted(tuple(sorted(e)) for e in self.graph.edges())

    @property
    def volume(self):
        return len(self.cycles)

    @property
    def foundation(self):
        return self.graph.number_of_nodes()

    def degree_sequence(self):
        """Nonincreasing"""
        return sorted((d for _, d in self.graph.degree()), reverse=True)

    def degrees(self):
        return dict(self.graph.degree())

    def has_adjacent_degree2(self):
        """Two adjacent degree-2 vertices: such a graph has a single decomposition"""
        deg = self.degrees()
        return any(deg[u] == 2 and deg[v] == 2 for u, v in self.graph.edges())

    def degree2_share_neighbour(self):
        deg = self.degrees()
        low = [x for x in self.graph if deg[x] == 2]
        for i, x in enumerate(low):
            for y in low[i + 1:]:
                if set(self.graph[x]) & set(self.graph[y]):
                    return True
        return False

    def is_isomorphic(self, other):
        other = other.graph if isinstance(other, TradeGraph) else other
        return nx.is_isomorphic(self.graph, other)

    def isomorphisms(self, other):
        """Vertex maps self -> other"""
        other = other.graph if isinstance(other, TradeGraph) else other
        return GraphMatcher(self.graph, other).isomorphisms_iter()

    def automorphisms(self):
        return GraphMatcher(self.graph, self.graph).isomorphisms_iter()

    def __repr__(self):
        return "<TradeGraph v=%d e=%d deg=%s>" % (self.foundation, self.graph.number_of_edges(),
                                                 self.degree_sequence())


def union_graph(cycles):
    return TradeGraph(cycles).graph


def complete_minus_matching(n=6):
    g = nx.complete_graph(range(1, n + 1))
    g.remove_edges_from((2 * i + 1, 2 * i + 2) for i in range(n // 2))
    return g


def complete_bipartite(a, b):
    return nx.complete_bipartite_graph(a, b)
