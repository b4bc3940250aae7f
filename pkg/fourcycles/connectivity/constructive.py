"""
Trade paths between any two 4-CS(9) without searching the move graph.

Notation: X^p is apply_permutation(X, p), and (X^p)^q == X^(p*q). A path
from X to Y translated by p is a path from X^p to Y^p.

1. The spanning tree witnesses give, for every reference system S_k, a path
   P_k from S_1 to an anchor A_k = S_k^D_k.
2. The hub H is the anchor of S_8. A path R(t) from H to H^t is derived
   for every transposition t = (x 9): the seed path S_1 -> S_1^(7 9) is
   carried over to H, then conjugated by powers of an automorphism of H
   and combined through (a 9) = (a b)(b 9)(a b).
3. Any permutation is a product of transpositions (x 9), and the paths
   R(t) compose into a path from H to H^p.
4. a = A_i^alpha and b = A_j^beta are joined through H^alpha and H^beta.
"""
import time

from fourcycles import catalog
from fourcycles.decompose import reference_system, identify
from fourcycles.model import CycleSystem, TradePath, Permutation, NotADecomposition, InvalidPath, \
    apply_permutation, star_transpositions, parse_compact
from fourcycles.connectivity.moves import bfs_path, ConnectivityError
from fourcycles.connectivity.tree import spanning_tree_witnesses
from fourcycles.utils.common import timesofar
from fourcycles.utils.loggers import get_logger

PIVOT = 9


class InvalidInput(ValueError):
    pass


def seed_path():
    """The two-step path S1 -> S1^(7 9)"""
    start = reference_system(catalog.SEED_SYSTEM)
    steps = [([parse_compact(c) for c in catalog.split(r)], [parse_compact(c) for c in catalog.split(a)])
             for r, a in catalog.SEED_PATH]
    return TradePath(start, steps)


def hub_automorphism():
    return Permutation.from_cycles(9, catalog.HUB_AUTOMORPHISM)


class ConstructiveEngine(object):

    def __init__(self):
        from fourcycles import config
        self.path_max_states = config.PATH_BFS_MAX_STATES
        self.logger, self.logfile = get_logger("constructive")
        self.errata = []
        self.anchors = {}
        self.anchor_paths = {}
        self.transposition_paths = {}
        self.hub = None
        self.hub_automorphism = None
        self._ready = False

    def _erratum(self, msg):
        self.logger.warning("erratum: %s" % msg)
        self.errata.append(msg)

    def setup(self):
        if self._ready:
            return self
        t0 = time.time()
        self._anchors()
        self._hub()
        self._transpositions()
        self._ready = True
        self.logger.info("constructive engine ready: %d transposition paths, %d errata (%s)" %
                         (len(self.transposition_paths), len(self.errata), timesofar(t0)))
        return self

    def _anchors(self):
        witnesses = spanning_tree_witnesses()
        for w in witnesses:
            if w.erratum:
                self._erratum("spanning tree edge %s-%s: %s" % (w.i, w.j, w.erratum))
            if w.path is None:
                raise ConnectivityError("no witness for spanning tree edge %s-%s" % (w.i, w.j))
        root = catalog.SEED_SYSTEM
        start = reference_system(root)
        self.anchors = {root: Permutation.identity(9)}
        self.anchor_paths = {root: TradePath(start, [])}
        pending = list(witnesses)
        while pending:
            progress = False
            for w in list(pending):
                if w.i in self.anchors and w.j not in self.anchors:
                    # S_i^D -> (S_j^s)^D
                    d = self.anchors[w.i]
                    self.anchors[w.j] = w.sigma * d
                    self.anchor_paths[w.j] = self.anchor_paths[w.i] + apply_permutation(w.path, d)
                elif w.j in self.anchors and w.i not in self.anchors:
                    # reversed path: S_j^s -> S_i, translated to start at S_j^D
                    d = w.sigma.inverse() * self.anchors[w.j]
                    self.anchors[w.i] = d
                    self.anchor_paths[w.i] = self.anchor_paths[w.j] + apply_permutation(w.path.reversed(), d)
                elif w.i not in self.anchors:
                    continue
                pending.remove(w)
                progress = True
            if not progress:
                raise ConnectivityError("spanning tree does not reach %s" %
                                        ", ".join(sorted(set(x for w in pending for x in (w.i, w.j)))))
        for label, path in self.anchor_paths.items():
            expected = apply_permutation(reference_system(label), self.anchors[label])
            if path.end != expected:
                raise ConnectivityError("anchor path of %s ends at %r" % (label, path.end))

    def _hub(self):
        label = catalog.HUB_SYSTEM
        d = self.anchors[label]
        self.hub = apply_permutation(reference_system(label), d)
        sigma = hub_automorphism()
        if apply_permutation(reference_system(label), sigma) == reference_system(label):
            self.hub_automorphism = d.inverse() * sigma * d
        else:
            self._erratum("%s is not fixed by %s" % (label, sigma))
            self.hub_automorphism = None

    def hub_path(self, label):
        """Path from the anchor of label to the hub"""
        return (self.anchor_paths[label].reversed() + self.anchor_paths[catalog.HUB_SYSTEM]).simplified()

    def _seed_at_hub(self):
        a, b = catalog.SEED_TRANSPOSITION
        t = Permutation.transposition(9, a, b)
        try:
            seed = seed_path()
        except (InvalidPath, NotADecomposition) as e:
            self._erratum("seed path is invalid: %s" % e)
            return None
        start = reference_system(catalog.SEED_SYSTEM)
        if seed.end != apply_permutation(start, t):
            self._erratum("seed path does not end at %s^%s" % (catalog.SEED_SYSTEM, t))
            return None
        to_root = self.anchor_paths[catalog.HUB_SYSTEM].reversed()
        back = apply_permutation(self.anchor_paths[catalog.HUB_SYSTEM], t)
        return t, (to_root + seed + back).simplified()

    def _transpositions(self):
        known = {}
        seeded = self._seed_at_hub()
        if seeded:
            known[seeded[0]] = seeded[1]
        # conjugates by the hub automorphism
        if known and self.hub_automorphism is not None:
            t, path = seeded
            power = Permutation.identity(9)
            for _ in range(9):
                power = power * self.hub_automorphism
                conj = t.conjugate(power)
                if conj not in known:
                    known[conj] = apply_permutation(path, power)
        # (a 9) = (a b)(b 9)(a b)
        changed = True
        while changed:
            changed = False
            for x in range(1, PIVOT):
                target = Permutation.transposition(9, x, PIVOT)
                if target in known:
                    continue
                for y in range(1, PIVOT):
                    ab = Permutation.transposition(9, x, y) if x != y else None
                    b9 = Permutation.transposition(9, y, PIVOT)
                    if ab is not None and ab in known and b9 in known:
                        known[target] = self._compose([ab, b9, ab], known)
                        changed = True
                        break
        for x in range(1, PIVOT):
            target = Permutation.transposition(9, x, PIVOT)
            if target in known:
                continue
            self.logger.info("no derived path for %s, searching the move graph" % target)
            path = bfs_path(self.hub, apply_permutation(self.hub, target), max_states=self.path_max_states)
            if path is None:
                raise ConnectivityError("no path from the hub to its relabeling by %s" % target)
            known[target] = path
        self.transposition_paths = {t: p for t, p in known.items() if PIVOT in t.cycles()[0]}

    def _compose(self, factors, paths):
        """Path from H to H^(f1*f2*...*fk), f1 applied first"""
        path = TradePath(self.hub, [], validate=False)
        acc = Permutation.identity(9)
        for f in reversed(factors):
            path = path + apply_permutation(paths[f], acc)
            acc = f * acc
        return path

    def permutation_path(self, perm):
        """Path from the hub to hub^perm"""
        self.setup()
        factors = [Permutation.transposition(9, x, p) for x, p in star_transpositions(perm, PIVOT)]
        return self._compose(factors, self.transposition_paths).simplified()

    def locate(self, system):
        """(label, alpha) with system == anchor(label)^alpha"""
        label, gamma = identify(system)
        if label is None:
            raise InvalidInput("%r matches no reference system" % system)
        return label, self.anchors[label].inverse() * gamma

    def path(self, a, b):
        self.setup()
        for s in (a, b):
            if not isinstance(s, CycleSystem) or s.order != 9:
                raise InvalidInput("constructive paths join two 4-CS(9), got %r" % (s,))
            try:
                s.validate()
            except NotADecomposition as e:
                raise InvalidInput("%r is not a 4-CS(9): %s" % (s, e))
        if a == b:
            return TradePath(a, [])
        i, alpha = self.locate(a)
        j, beta = self.locate(b)
        first = apply_permutation(self.hub_path(i), alpha)
        middle = apply_permutation(self.permutation_path(beta * alpha.inverse()), alpha)
        last = apply_permutation(self.hub_path(j), beta).reversed()
        path = (first + middle + last).simplified()
        # full replay, every intermediate system revalidated
        path = TradePath(path.start, path.steps, validate=True)
        if path.start != a or path.end != b:
            raise ConnectivityError("constructed path joins %r and %r" % (path.start, path.end))
        return path


_engine = None


def constructive_path(a, b):
    """Valid TradePath from a to b assembled from the reference constructions"""
    global _engine
    if _engine is None:
        _engine = ConstructiveEngine()
    return _engine.path(a, b)
