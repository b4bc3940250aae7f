"""
Cyclic 4-cycle systems developed from base cycles under x -> x+1 (mod n).
"""
from collections import Counter

from fourcycles.model import CycleSystem, NotADecomposition, Permutation, Edge, \
    apply_permutation, canonicalize_cycle, pair_count


class CyclicStarter(object):
    """
    Base cycles of a cyclic 4-CS(order), on vertex labels 0..order-1 as
    they are usually printed. Vertex x is stored as x+1 once developed.
    """

    def __init__(self, order, base_cycles):
        self.order = order
        self.base_cycles = tuple(tuple(int(x) for x in c) for c in base_cycles)
        for c in self.base_cycles:
            if len(c) != 4 or len(set(x % order for x in c)) != 4:
                raise NotADecomposition("base cycle %r is not a 4-cycle mod %d" % (c, order))
            if any(not 0 <= x < order for x in c):
                raise NotADecomposition("base cycle %r has labels outside 0..%d" % (c, order - 1))

    @classmethod
    def parse(cls, order, text):
        """'0 3 1 12; 0 4 10 17' -> CyclicStarter"""
        bases = []
        for chunk in text.replace(",", " ").split(";"):
            if chunk.strip():
                bases.append(tuple(int(x) for x in chunk.split()))
        return cls(order, bases)

    def developed_cycles(self):
        n = self.order
        for base in self.base_cycles:
            for shift in range(n):
                yield canonicalize_cycle(*((x + shift) % n + 1 for x in base))

    def __repr__(self):
        return "<CyclicStarter n=%d %s>" % (self.order, "; ".join(" ".join(map(str, c)) for c in self.base_cycles))


def develop_cyclic(starter):
    """
    Develop every base cycle over the n shifts and return the validated
    system. The first edge covered twice (or, failing that, left
    uncovered) is reported through NotADecomposition.edge.
    """
    n = starter.order
    cycles = list(starter.developed_cycles())
    counts = Counter(e for c in cycles for e in c.edges)
    for e in sorted(counts):
        if counts[e] > 1:
            raise NotADecomposition("edge %d-%d is covered %d times by the developed cycles of %r" %
                                    (e[0], e[1], counts[e], starter), edge=Edge.of(e[0], e[1], n))
    if len(counts) != pair_count(n):
        for u in range(1, n + 1):
            for v in range(u + 1, n + 1):
                if (u, v) not in counts:
                    raise NotADecomposition("edge %d-%d is not covered by %r" % (u, v, starter),
                                            edge=Edge.of(u, v, n))
    return CycleSystem(n, cycles, validate=True)


def shift_permutation(n, step=1):
    return Permutation([(x - 1 + step) % n + 1 for x in range(1, n + 1)], check=False)


def is_shift_invariant(system):
    """True iff x -> x+1 (mod n) is an automorphism of system"""
    return apply_permutation(system, shift_permutation(system.order)) == system
