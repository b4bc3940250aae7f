"""
Vertices, edges and 4-cycles of K_n, their canonical forms and their
deterministic indexing.

Vertices are 1-based (1..n), edge and cycle indices are 0-based:

- edges {u,v}, u < v, are ranked in lexicographic order over all C(n,2) pairs,
- 4-cycles are ranked by 4-subset in lexicographic order, then, within the
  subset, by canonical tuple (3 cycles per subset, 3*C(n,4) in total).
"""
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import NamedTuple


class InvalidCycle(ValueError):
    pass


class OutOfRange(ValueError):
    pass


def check_vertex(x, n):
    if not (isinstance(x, int) and 1 <= x <= n):
        raise OutOfRange("vertex %r not in 1..%d" % (x, n))
    return x


class Edge(NamedTuple):
    u: int
    v: int
    index: int

    @classmethod
    def of(cls, u, v, n):
        if u > v:
            u, v = v, u
        return cls(u, v, edge_index(u, v, n))

    def __str__(self):
        return "%d-%d" % (self.u, self.v)


def pair_count(n):
    return comb(n, 2)


def cycle_count(n):
    return 3 * comb(n, 4)


def edge_index(u, v, n):
    """Lexicographic rank of {u,v} among the pairs of {1..n}"""
    if u > v:
        u, v = v, u
    if not (1 <= u < v <= n):
        raise OutOfRange("edge (%s,%s) not in K_%d" % (u, v, n))
    return (u - 1) * n - (u - 1) * u // 2 + (v - u - 1)


def edge_from_index(i, n):
    if not (0 <= i < pair_count(n)):
        raise OutOfRange("edge index %s out of 0..%d" % (i, pair_count(n) - 1))
    u = 1
    while i >= n - u:
        i -= n - u
        u += 1
    return (u, u + 1 + i)


def _subset_rank(subset, n):
    k = len(subset)
    return comb(n, k) - 1 - sum(comb(n - x, k - pos) for pos, x in enumerate(subset))


def _subset_unrank(rank, n, k):
    subset = []
    x = 1
    for slot in range(k, 0, -1):
        while comb(n - x, slot - 1) <= rank:
            rank -= comb(n - x, slot - 1)
            x += 1
        subset.append(x)
        x += 1
    return tuple(subset)


def canonical_tuple(a, b, c, d):
    """Lexicographically least of the 8 dihedral forms of the traversal a-b-c-d-a"""
    vs = (a, b, c, d)
    i = vs.index(min(vs))
    m, x, y, z = vs[i:] + vs[:i]
    if x < z:
        return (m, x, y, z)
    return (m, z, y, x)


class FourCycle(NamedTuple):
    """
    A 4-cycle of K_n, stored as its canonical tuple (a,b,c,d): a is the
    smallest vertex, b the smaller of a's two neighbours. Build instances
    with canonicalize_cycle() or FourCycle.of().
    """
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def of(cls, *vertices):
        if len(vertices) == 1:
            vertices = tuple(vertices[0])
        return canonicalize_cycle(*vertices)

    @property
    def vertices(self):
        return tuple(self)

    @property
    def edges(self):
        a, b, c, d = self
        return tuple(tuple(sorted(p)) for p in ((a, b), (b, c), (c, d), (d, a)))

    def __str__(self):
        return "%d %d %d %d" % tuple(self)

    @property
    def compact(self):
        """Form used in the literature tables, "1234" (single-digit vertices only)"""
        return "".join(str(x) for x in self)


def canonicalize_cycle(a, b, c, d):
    vs = (a, b, c, d)
    for x in vs:
        if not isinstance(x, int) or x < 1:
            raise InvalidCycle("not a vertex: %r in %r" % (x, vs))
    if len(set(vs)) != 4:
        raise InvalidCycle("duplicate vertices in %r" % (vs,))
    return FourCycle(*canonical_tuple(a, b, c, d))


def parse_compact(text):
    """'1536' -> (1,5,3,6) canonicalized, for single-digit table rows"""
    return canonicalize_cycle(*(int(ch) for ch in text))


def cycle_index(c, n):
    """Column of cycle c among all 3*C(n,4) cycles of K_n"""
    for x in c:
        check_vertex(x, n)
    a, b, cc, d = canonical_tuple(*c)
    w, x, y, z = sorted(c)
    base = 3 * _subset_rank((w, x, y, z), n)
    if cc == y:
        return base
    if cc == z:
        return base + 1
    return base + 2


def cycle_from_index(i, n):
    if not (0 <= i < cycle_count(n)):
        raise OutOfRange("cycle index %s out of 0..%d" % (i, cycle_count(n) - 1))
    q, r = divmod(i, 3)
    w, x, y, z = _subset_unrank(q, n, 4)
    if r == 0:
        return FourCycle(w, x, y, z)
    if r == 1:
        return FourCycle(w, x, z, y)
    return FourCycle(w, y, x, z)


class CycleSpace(object):
    """
    Precomputed tables for all cycles of K_n: canonical cycles and edge masks
    by cycle index, cycles through each edge, and a lookup from any traversal
    (a,b,c,d) to its cycle index, used for fast relabeling.
    """

    def __init__(self, n):
        if n < 4:
            raise OutOfRange("K_%d has no 4-cycle" % n)
        self.n = n
        self.edges = [(u, v) for u, v in combinations(range(1, n + 1), 2)]
        self.edge_bits = {e: 1 << i for i, e in enumerate(self.edges)}
        self.full_mask = (1 << len(self.edges)) - 1
        self.cycles = []
        self.masks = []
        self.lookup = {}
        for w, x, y, z in combinations(range(1, n + 1), 4):
            for c in ((w, x, y, z), (w, x, z, y), (w, y, x, z)):
                idx = len(self.cycles)
                cyc = FourCycle(*c)
                self.cycles.append(cyc)
                self.masks.append(self.mask_of(cyc))
                a, b, cc, d = c
                for rep in ((a, b, cc, d), (b, cc, d, a), (cc, d, a, b), (d, a, b, cc)):
                    self.lookup[rep] = idx
                    self.lookup[rep[::-1]] = idx
        self.edge_cycles = [[] for _ in self.edges]
        for idx, m in enumerate(self.masks):
            for e in range(len(self.edges)):
                if m >> e & 1:
                    self.edge_cycles[e].append(idx)

    def __repr__(self):
        return "<%s K_%d: %d edges, %d cycles>" % (self.__class__.__name__, self.n,
                                                   len(self.edges), len(self.cycles))

    def mask_of(self, cyc):
        m = 0
        for e in FourCycle(*cyc).edges:
            m |= self.edge_bits[e]
        return m

    def index(self, cyc):
        try:
            return self.lookup[tuple(cyc)]
        except KeyError:
            for x in cyc:
                check_vertex(x, self.n)
            raise InvalidCycle("not a 4-cycle traversal: %r" % (tuple(cyc),))

    def relabel(self, idx, images):
        """Index of cycle idx relabeled by images (tuple, images[x] = new label of x)"""
        a, b, c, d = self.cycles[idx]
        return self.lookup[(images[a], images[b], images[c], images[d])]

    def relabel_key(self, key, images):
        lookup = self.lookup
        cycles = self.cycles
        out = []
        for idx in key:
            a, b, c, d = cycles[idx]
            out.append(lookup[(images[a], images[b], images[c], images[d])])
        out.sort()
        return tuple(out)


@lru_cache(maxsize=16)
def cycle_space(n):
    return CycleSpace(n)
