"""
Isomorphism classes of labeled 4-cycle systems by minimal image.

The canonical form of a system is its least relabeling, comparing systems
by their sorted cycle-index keys. Cycle (1,2,3,4) has index 0, so the least
image always contains it: the "pruned" search only tries relabelings that
send one of the system's cycles onto (1,2,3,4), in each of its 8 dihedral
traversals, and permutes the remaining n-4 vertices freely. Every
relabeling reaching the minimum is met exactly once that way, so counting
them gives the automorphism group order. The "exhaustive" search walks all
n! permutations.
"""
import time
from itertools import permutations
from math import factorial

from fourcycles.model import CycleSystem, Permutation, cycle_space
from fourcycles.utils.common import timesofar
from fourcycles.utils.loggers import get_logger
from fourcycles.utils.parallel_mp import run_parallel_on_iterable
from fourcycles.decompose.systems import OrderTooLarge

CANONICAL_METHODS = ("pruned", "exhaustive")


class IsoClass(object):

    __slots__ = ("canonical_system", "representative_label", "automorphism_count", "witness", "size")

    def __init__(self, canonical_system, automorphism_count, witness=None, representative_label=None, size=None):
        self.canonical_system = canonical_system
        self.automorphism_count = automorphism_count
        # canonical_system == apply_permutation(input system, witness)
        self.witness = witness
        self.representative_label = representative_label
        # labeled systems in the class, when computed by an orbit sweep
        self.size = size

    @property
    def order(self):
        return self.canonical_system.order

    def with_label(self, label):
        return IsoClass(self.canonical_system, self.automorphism_count, self.witness, label, self.size)

    def __eq__(self, other):
        return isinstance(other, IsoClass) and self.canonical_system == other.canonical_system

    def __hash__(self):
        return hash(self.canonical_system)

    def __repr__(self):
        return "<IsoClass %s |Aut|=%d: %r>" % (self.representative_label or "-", self.automorphism_count,
                                              self.canonical_system)


def _dihedral(cycle):
    a, b, c, d = cycle
    rots = ((a, b, c, d), (b, c, d, a), (c, d, a, b), (d, a, b, c))
    return rots + tuple(r[::-1] for r in rots)


def _pruned_images(system):
    n = system.order
    for cyc in system.cycles:
        rest = [x for x in range(1, n + 1) if x not in cyc]
        for trav in _dihedral(cyc):
            table = [0] * (n + 1)
            for pos, x in enumerate(trav):
                table[x] = pos + 1
            for perm in permutations(range(5, n + 1)):
                for x, y in zip(rest, perm):
                    table[x] = y
                yield table


def _exhaustive_images(system):
    for perm in permutations(range(1, system.order + 1)):
        yield (0,) + perm


def canonical_label(system, method=None):
    """
    IsoClass of system: least relabeling, automorphism count and one
    witness permutation mapping system onto it. Two systems are isomorphic
    iff their canonical systems are equal.
    """
    from fourcycles import config
    method = method or config.CANONICAL_METHOD
    if method not in CANONICAL_METHODS:
        raise ValueError("unknown canonical labeling method '%s'" % method)
    n = system.order
    if n > config.ENUMERATION_MAX_ORDER:
        raise OrderTooLarge("canonical labeling of 4-CS(%d) is not supported (max order %d)" %
                            (n, config.ENUMERATION_MAX_ORDER))
    space = cycle_space(n)
    images = _pruned_images(system) if method == "pruned" else _exhaustive_images(system)
    best = None
    witness = None
    count = 0
    for table in images:
        key = space.relabel_key(system.key, table)
        if best is None or key < best:
            best = key
            witness = tuple(table[1:])
            count = 1
        elif key == best:
            count += 1
    return IsoClass(CycleSystem.from_key(n, best), count, witness=Permutation(witness, check=False))


def isomorphism(a, b, method=None):
    """A permutation p with apply_permutation(a, p) == b, or None"""
    ca = canonical_label(a, method)
    cb = canonical_label(b, method)
    if ca.canonical_system != cb.canonical_system:
        return None
    return ca.witness * cb.witness.inverse()


def are_isomorphic(a, b, method=None):
    return canonical_label(a, method).canonical_system == canonical_label(b, method).canonical_system


def _orbit_part(item):
    # relabelings of key sending vertex 1 to "first"
    n, key, first = item
    space = cycle_space(n)
    others = [y for y in range(1, n + 1) if y != first]
    orbit = set()
    for perm in permutations(others):
        orbit.add(space.relabel_key(key, (0, first) + perm))
    return orbit


def _agg_union(prev, curr):
    prev |= curr
    return prev


def system_orbit(system, num_workers=None):
    """Set of the keys of every relabeling of system"""
    n = system.order
    items = [(n, system.key, first) for first in range(1, n + 1)]
    return run_parallel_on_iterable(_orbit_part, items, agg_function=_agg_union, agg_function_init=set(),
                                    num_workers=num_workers)


class OrbitClassifier(object):
    """
    Split a collection of labeled systems of one order into isomorphism
    classes by orbit sweep: the least remaining key seeds an orbit built
    from all n! relabelings, which is removed from the collection. A
    collection closed under relabeling is partitioned exactly and
    automorphism counts follow from orbit sizes.
    """

    def __init__(self, num_workers=None):
        from fourcycles import config
        self.num_workers = num_workers
        self.max_order = config.ENUMERATION_MAX_ORDER
        self.logger, self.logfile = get_logger("classify")
        self.closed = True
        self.missing = 0

    def classify(self, systems):
        remaining = set()
        order = None
        for s in systems:
            if order is None:
                order = s.order
            elif s.order != order:
                raise ValueError("can't classify systems of orders %d and %d together" % (order, s.order))
            remaining.add(s.key)
        if not remaining:
            return []
        if order > self.max_order:
            raise OrderTooLarge("orbit classification of 4-CS(%d) is not supported" % order)
        t0 = time.time()
        classes = []
        self.closed = True
        self.missing = 0
        while remaining:
            seed = CycleSystem.from_key(order, min(remaining))
            orbit = system_orbit(seed, num_workers=self.num_workers)
            absent = len(orbit - remaining)
            if absent:
                self.closed = False
                self.missing += absent
                self.logger.warning("input is not closed under relabeling: %d relabeling(s) of %r missing" %
                                    (absent, seed))
            remaining -= orbit
            aut = factorial(order) // len(orbit)
            classes.append(IsoClass(CycleSystem.from_key(order, min(orbit)), aut, size=len(orbit)))
            self.logger.info("class #%d: %d labeled systems, |Aut|=%d (%s)" %
                             (len(classes), len(orbit), aut, timesofar(t0)))
        classes.sort(key=lambda c: c.canonical_system)
        return classes


def classify_systems(systems, num_workers=None):
    """Isomorphism classes of systems, sorted by canonical system"""
    return OrbitClassifier(num_workers=num_workers).classify(systems)
