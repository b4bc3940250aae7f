"""
Labels of volume-2/3 trades, mu-way extensions, double-diamond chains and
mu-way trades of any volume.
"""
from collections import deque
from functools import lru_cache

import networkx as nx

from fourcycles import catalog
from fourcycles.model import MuWayTrade, ConfigLabel, parse_compact, canonicalize_cycle, cycle_set
from fourcycles.trades.detect import decompositions_of_union, decomposition_order, TradeError
from fourcycles.trades.graph import TradeGraph


class Unsupported(ValueError):
    pass


def parse_part(row):
    """'1234 1536' -> frozenset of canonical cycles"""
    return frozenset(parse_compact(c) for c in catalog.split(row))


@lru_cache(maxsize=1)
def reference_graphs():
    """{label: TradeGraph} of the volume-2/3 trade configurations"""
    return {
        ConfigLabel.DD: TradeGraph(parse_part(catalog.DOUBLE_DIAMOND[0])),
        ConfigLabel.F6: TradeGraph(parse_part(catalog.F6_PARTS["T1"])),
        ConfigLabel.F7_TPRIME: TradeGraph(parse_part(catalog.TPRIME[0])),
        ConfigLabel.F7_TDOUBLEPRIME: TradeGraph(parse_part(catalog.TDOUBLEPRIME[0])),
        ConfigLabel.F7_TSTAR: TradeGraph(parse_part(catalog.TSTAR[0])),
        ConfigLabel.F8: TradeGraph(parse_part(catalog.F8_5WAY[0])),
        ConfigLabel.F8_DDCHAIN: TradeGraph(parse_part(catalog.F8_DDCHAIN[0])),
    }


def classify_graph(graph):
    """Label of a trade graph, OTHER when it matches no reference graph"""
    for label, ref in reference_graphs().items():
        if ref.volume != graph.volume or ref.foundation != graph.foundation:
            continue
        if ref.degree_sequence() == graph.degree_sequence() and graph.is_isomorphic(ref):
            return label
    return ConfigLabel.OTHER


def classify_config(trade):
    """
    DD, F6, F7-Tprime, F7-Tdoubleprime, F7-Tstar, F8 or F8-DDchain by isomorphism of
    the union graph. Every volume-2/3 bitrade has one of these labels.
    """
    if trade.volume > 3:
        raise Unsupported("classification of volume-%d trades is not supported" % trade.volume)
    label = classify_graph(TradeGraph(trade.t1))
    if label == ConfigLabel.OTHER:
        raise TradeError("unclassified volume-%d bitrade %s" % (trade.volume, trade))
    return label


def labeled(trade):
    return trade.with_config(classify_config(trade))


def _disjoint(a, b):
    return not (a & b)


def _muway_key(parts):
    return [decomposition_order(p) for p in parts]


def muway_isomorphic(a, b):
    """True iff a vertex map sends the parts of a onto the parts of b"""
    if a.mu != b.mu or a.volume != b.volume:
        return False
    ga, gb = TradeGraph(a.parts[0]), TradeGraph(b.parts[0])
    target = frozenset(b.parts)
    for iso in ga.isomorphisms(gb):
        image = frozenset(frozenset(canonicalize_cycle(*(iso[x] for x in c)) for c in p) for p in a.parts)
        if image == target:
            return True
    return False


def extend_muway(trade, up_to_isomorphism=False):
    """
    Maximal mu-way trades containing both parts of trade: maximal sets of
    pairwise cycle-disjoint decompositions of the union graph, sorted by
    decreasing mu. With up_to_isomorphism, extensions related by a vertex
    map are reported once.
    """
    t1, t2 = trade.t1, trade.t2
    others = [d for d in decompositions_of_union(t1)
              if d != t1 and d != t2 and _disjoint(d, t1) and _disjoint(d, t2)]
    g = nx.Graph()
    g.add_nodes_from(range(len(others)))
    for i in range(len(others)):
        for j in range(i + 1, len(others)):
            if _disjoint(others[i], others[j]):
                g.add_edge(i, j)
    extensions = []
    if not others:
        extensions.append(MuWayTrade([t1, t2]))
    else:
        for clique in nx.find_cliques(g):
            parts = [others[i] for i in sorted(clique)]
            parts.sort(key=decomposition_order)
            extensions.append(MuWayTrade([t1, t2] + parts))
    extensions.sort(key=lambda m: (-m.mu, _muway_key(m.parts[2:])))
    if up_to_isomorphism:
        unique = []
        for m in extensions:
            if not any(muway_isomorphic(m, u) for u in unique):
                unique.append(m)
        extensions = unique
    return extensions


def max_mu(trade):
    return max(m.mu for m in extend_muway(trade))


def _dd_move(a, b):
    return len(a - b) == 2


def double_diamond_chain(t1, t2):
    """
    Shortest list of decompositions t1, ..., t2 of the common union graph,
    consecutive ones differing by a volume-2 trade, or None.
    """
    t1 = cycle_set(t1)
    t2 = cycle_set(t2)
    decs = decompositions_of_union(t1)
    if t2 not in decs:
        raise TradeError("t1 and t2 don't decompose the same graph")
    previous = {t1: None}
    queue = deque([t1])
    while queue:
        current = queue.popleft()
        if current == t2:
            chain = []
            while current is not None:
                chain.append(current)
                current = previous[current]
            return chain[::-1]
        for d in decs:
            if d not in previous and _dd_move(current, d):
                previous[d] = current
                queue.append(d)
    return None


def _shifted_parts(rows, offset):
    return [frozenset(canonicalize_cycle(*(x + offset for x in parse_compact(c))) for c in catalog.split(r))
            for r in rows]


def volume_witness(s):
    """
    A 3-way trade of volume s >= 2, made of vertex-disjoint copies of the
    3-way double-diamond (volume 2) and of the 3-way foundation-6 trade
    (volume 3).
    """
    if s < 2:
        raise Unsupported("no 4-cycle trade of volume %d" % s)
    b = s % 2
    a = (s - 3 * b) // 2
    blocks = [catalog.DOUBLE_DIAMOND_3WAY] * a
    blocks += [(catalog.F6_PARTS["T1"], catalog.F6_PARTS["T2"], catalog.F6_PARTS["T3"])] * b
    parts = [set(), set(), set()]
    for num, rows in enumerate(blocks):
        for i, p in enumerate(_shifted_parts(rows, 6 * num)):
            parts[i] |= p
    return MuWayTrade(parts)


def volume_witnesses(volumes):
    return {s: volume_witness(s) for s in volumes}
