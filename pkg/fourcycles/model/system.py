from math import comb

from fourcycles.model.cycle import FourCycle, Edge, canonicalize_cycle, cycle_index, \
    cycle_from_index, edge_index, edge_from_index, cycle_space, pair_count


class NotADecomposition(ValueError):

    def __init__(self, msg, edge=None):
        super(NotADecomposition, self).__init__(msg)
        self.edge = edge


# systems up to this order are backed by a precomputed CycleSpace
SPACE_MAX_ORDER = 16


def as_cycle(c):
    if isinstance(c, FourCycle):
        return c
    if isinstance(c, str):
        return canonicalize_cycle(*(int(x) for x in (c.split() if " " in c.strip() else c)))
    return canonicalize_cycle(*c)


class CycleSystem(object):
    """
    A set of 4-cycles of K_n whose edges partition the edges of K_n
    (a 4-CS(n)). Systems are immutable: "key" is the sorted tuple of
    cycle indices and identifies the labeled system.
    """
    __slots__ = ("order", "key")

    def __init__(self, order, cycles, validate=True):
        self.order = order
        self.key = tuple(sorted(cycle_index(as_cycle(c), order) for c in cycles))
        if validate:
            self.validate()

    @classmethod
    def from_key(cls, order, key, validate=False):
        s = cls.__new__(cls)
        s.order = order
        s.key = tuple(sorted(key))
        if validate:
            s.validate()
        return s

    @property
    def cycles(self):
        if self.order <= SPACE_MAX_ORDER:
            space = cycle_space(self.order)
            return tuple(space.cycles[i] for i in self.key)
        return tuple(cycle_from_index(i, self.order) for i in self.key)

    def validate(self):
        n = self.order
        expected = pair_count(n)
        if len(set(self.key)) != len(self.key):
            raise NotADecomposition("a cycle appears twice in the system")
        seen = 0
        for c in self.cycles:
            for (u, v) in c.edges:
                bit = 1 << edge_index(u, v, n)
                if seen & bit:
                    raise NotADecomposition("edge %d-%d is covered twice (again by %s)" % (u, v, c),
                                            edge=Edge.of(u, v, n))
                seen |= bit
        if 4 * len(self.key) != expected or seen != (1 << expected) - 1:
            missing = (~seen) & ((1 << expected) - 1)
            idx = (missing & -missing).bit_length() - 1
            u, v = edge_from_index(idx, n)
            raise NotADecomposition("edge %d-%d is not covered (%d cycles for %d edges)" % (u, v, len(self.key), expected),
                                    edge=Edge.of(u, v, n))
        return True

    def replace(self, removed, added, validate=True):
        """The system with cycles "removed" swapped for "added"."""
        out_idx = set(cycle_index(as_cycle(c), self.order) for c in removed)
        in_idx = [cycle_index(as_cycle(c), self.order) for c in added]
        if not out_idx.issubset(self.key):
            raise NotADecomposition("removed cycles are not all in the system")
        key = [i for i in self.key if i not in out_idx] + in_idx
        return CycleSystem.from_key(self.order, key, validate=validate)

    def __contains__(self, c):
        return cycle_index(as_cycle(c), self.order) in set(self.key)

    def __iter__(self):
        return iter(self.cycles)

    def __len__(self):
        return len(self.key)

    def __eq__(self, other):
        return isinstance(other, CycleSystem) and self.order == other.order and self.key == other.key

    def __hash__(self):
        return hash((self.order, self.key))

    def __lt__(self, other):
        return (self.order, self.key) < (other.order, other.key)

    def __repr__(self):
        return "<CycleSystem 4-CS(%d): %s>" % (self.order, " ".join(c.compact if self.order < 10 else str(c)
                                                                     for c in self.cycles))

    def to_text(self):
        """One "a b c d" line per cycle, sorted by cycle index, then a blank line"""
        return "".join(str(c) + "\n" for c in self.cycles) + "\n"


def system_size(n):
    """Number of cycles of a 4-CS(n)"""
    return comb(n, 2) // 4
