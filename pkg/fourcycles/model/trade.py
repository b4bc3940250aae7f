"""
Trades between sets of 4-cycles, and paths of trades between systems.
"""
from enum import Enum

from fourcycles.model.system import CycleSystem, NotADecomposition, as_cycle


class InvalidTrade(ValueError):
    pass


class InvalidPath(ValueError):

    def __init__(self, msg, step=None):
        super(InvalidPath, self).__init__(msg)
        self.step = step


class ConfigLabel(str, Enum):
    DD = "DD"
    F6 = "F6"
    F7_TPRIME = "F7-Tprime"
    F7_TDOUBLEPRIME = "F7-Tdoubleprime"
    F7_TSTAR = "F7-Tstar"
    F8 = "F8"
    F8_DDCHAIN = "F8-DDchain"
    OTHER = "OTHER"

    def __str__(self):
        return self.value


def cycle_set(cycles):
    return frozenset(as_cycle(c) for c in cycles)


def edge_multiset(cycles):
    edges = []
    for c in cycles:
        edges.extend(c.edges)
    return sorted(edges)


def vertex_set(cycles):
    return frozenset(x for c in cycles for x in c)


def _sorted_cycles(cycles):
    return sorted(cycles)


def format_cycles(cycles, sep=", "):
    return sep.join(str(c) for c in _sorted_cycles(cycles))


def check_bitrade(t1, t2):
    """Raise InvalidTrade unless (t1, t2) is a bitrade"""
    for name, part in (("t1", t1), ("t2", t2)):
        edges = edge_multiset(part)
        if len(edges) != len(set(edges)):
            raise InvalidTrade("cycles of %s are not edge-disjoint" % name)
    if not t1 or len(t1) != len(t2):
        raise InvalidTrade("parts must be non-empty and of equal size (%d, %d)" % (len(t1), len(t2)))
    if t1 & t2:
        raise InvalidTrade("parts share cycle(s) %s" % format_cycles(t1 & t2))
    if edge_multiset(t1) != edge_multiset(t2):
        raise InvalidTrade("parts cover different edges")


class Bitrade(object):
    """
    A pair (t1, t2) of disjoint sets of edge-disjoint 4-cycles covering the
    same edges. volume = |t1|, foundation = number of vertices touched.
    """
    __slots__ = ("t1", "t2", "config")

    def __init__(self, t1, t2, config=None, validate=True):
        self.t1 = cycle_set(t1)
        self.t2 = cycle_set(t2)
        self.config = config
        if validate:
            check_bitrade(self.t1, self.t2)

    @property
    def volume(self):
        return len(self.t1)

    @property
    def foundation(self):
        return len(vertex_set(self.t1))

    @property
    def vertices(self):
        return vertex_set(self.t1)

    @property
    def edges(self):
        return edge_multiset(self.t1)

    def reversed(self):
        return Bitrade(self.t2, self.t1, config=self.config, validate=False)

    def with_config(self, config):
        return Bitrade(self.t1, self.t2, config=config, validate=False)

    def apply_to(self, system):
        """Swap t1 for t2 in system; t1 must be part of it"""
        if not all(c in system for c in self.t1):
            raise InvalidTrade("t1 is not contained in %r" % system)
        return system.replace(self.t1, self.t2)

    def sort_key(self):
        return (self.volume, sorted(self.t1), sorted(self.t2))

    def __eq__(self, other):
        return isinstance(other, Bitrade) and self.t1 == other.t1 and self.t2 == other.t2

    def __hash__(self):
        return hash((self.t1, self.t2))

    def __str__(self):
        return "vol=%d found=%d config=%s | t1=%s; t2=%s" % (self.volume, self.foundation,
                                                            self.config if self.config is not None else "-",
                                                            format_cycles(self.t1), format_cycles(self.t2))

    def __repr__(self):
        return "<Bitrade %s>" % self


class MuWayTrade(object):
    """mu >= 2 pairwise disjoint decompositions of one union graph"""
    __slots__ = ("parts",)

    def __init__(self, parts, validate=True):
        self.parts = tuple(cycle_set(p) for p in parts)
        if validate:
            if len(self.parts) < 2:
                raise InvalidTrade("a mu-way trade needs at least 2 parts")
            for i in range(len(self.parts)):
                for j in range(i + 1, len(self.parts)):
                    try:
                        check_bitrade(self.parts[i], self.parts[j])
                    except InvalidTrade as e:
                        raise InvalidTrade("parts %d and %d: %s" % (i + 1, j + 1, e))

    @property
    def mu(self):
        return len(self.parts)

    @property
    def volume(self):
        return len(self.parts[0])

    @property
    def foundation(self):
        return len(vertex_set(self.parts[0]))

    def bitrade(self, i=0, j=1):
        return Bitrade(self.parts[i], self.parts[j], validate=False)

    def __eq__(self, other):
        return isinstance(other, MuWayTrade) and set(self.parts) == set(other.parts)

    def __hash__(self):
        return hash(frozenset(self.parts))

    def __repr__(self):
        return "<MuWayTrade mu=%d vol=%d: %s>" % (self.mu, self.volume,
                                                  " | ".join(format_cycles(p) for p in self.parts))


class TradePath(object):
    """
    A start system and a list of (removed, added) steps. Each step must be
    a bitrade of volume 2 or 3 whose removed part belongs to the current system.
    """
    __slots__ = ("start", "steps")

    def __init__(self, start, steps=(), validate=True):
        self.start = start
        self.steps = tuple((cycle_set(r), cycle_set(a)) for r, a in steps)
        if validate:
            self.validate()

    def __len__(self):
        return len(self.steps)

    def systems(self):
        """Yield the start system and every system after each step"""
        current = self.start
        yield current
        for num, (removed, added) in enumerate(self.steps):
            current = self._apply(current, num, removed, added)
            yield current

    @staticmethod
    def _apply(current, num, removed, added):
        if len(removed) not in (2, 3):
            raise InvalidPath("step %d has volume %d" % (num, len(removed)), step=num)
        try:
            check_bitrade(removed, added)
        except InvalidTrade as e:
            raise InvalidPath("step %d is not a bitrade: %s" % (num, e), step=num)
        if not all(c in current for c in removed):
            raise InvalidPath("step %d removes cycles absent from the current system" % num, step=num)
        try:
            return current.replace(removed, added, validate=True)
        except NotADecomposition as e:
            raise InvalidPath("step %d breaks the system: %s" % (num, e), step=num)

    def validate(self):
        try:
            self.start.validate()
        except NotADecomposition as e:
            raise InvalidPath("start is not a system: %s" % e, step=None)
        for _ in self.systems():
            pass
        return True

    @property
    def end(self):
        current = self.start
        for removed, added in self.steps:
            current = current.replace(removed, added, validate=False)
        return current

    def bitrades(self):
        return [Bitrade(r, a, validate=False) for r, a in self.steps]

    def reversed(self):
        return TradePath(self.end, [(a, r) for r, a in reversed(self.steps)], validate=False)

    def __add__(self, other):
        if self.end != other.start:
            raise InvalidPath("paths don't meet: %r != %r" % (self.end, other.start))
        return TradePath(self.start, self.steps + other.steps, validate=False)

    def simplified(self):
        """Same endpoints, with every excursion returning to an earlier system cut out"""
        states = []
        steps = []
        position = {}
        current = self.start
        states.append(current)
        position[current.key] = 0
        for removed, added in self.steps:
            current = current.replace(removed, added, validate=False)
            if current.key in position:
                cut = position[current.key]
                for st in states[cut + 1:]:
                    del position[st.key]
                states = states[:cut + 1]
                steps = steps[:cut]
            else:
                position[current.key] = len(states)
                states.append(current)
                steps.append((removed, added))
        return TradePath(self.start, steps, validate=False)

    def __repr__(self):
        return "<TradePath %d step(s) from %r>" % (len(self.steps), self.start)
