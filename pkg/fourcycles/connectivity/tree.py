"""
Witnesses for the spanning tree over the 8 reference 4-CS(9): one trade
path per tree edge, a single volume-3 trade whenever one exists.
"""
from fourcycles import catalog
from fourcycles.decompose import reference_system, identify, match_reference_class
from fourcycles.model import Permutation, TradePath
from fourcycles.trades import classify_config, find_trades
from fourcycles.connectivity.moves import system_symmetric_difference, bfs_path
from fourcycles.utils.loggers import get_logger


class TreeEdgeWitness(object):
    """
    path leads from reference system i to target, which is reference
    system j relabeled by sigma (the identity when the rows differ exactly
    by the trade). bitrade is the single volume-3 step when the path has
    one, else None.
    """

    __slots__ = ("i", "j", "path", "config", "stated", "target", "sigma", "erratum")

    def __init__(self, i, j, path, config, stated, target, sigma, erratum=None):
        self.i = i
        self.j = j
        self.path = path
        self.config = config
        self.stated = stated
        self.target = target
        self.sigma = sigma
        self.erratum = erratum

    @classmethod
    def single(cls, i, j, bitrade, stated, target, sigma, erratum=None):
        path = TradePath(reference_system(i), [(bitrade.t1, bitrade.t2)], validate=False)
        return cls(i, j, path, bitrade.config, stated, target, sigma, erratum=erratum)

    @property
    def bitrade(self):
        if self.path is None or len(self.path) != 1:
            return None
        trade = self.path.bitrades()[0]
        return trade.with_config(self.config) if self.config is not None else trade

    @property
    def direct(self):
        return self.sigma.is_identity()

    def check(self):
        return self.path is not None and self.path.start == reference_system(self.i) \
            and self.path.end == self.target

    def __repr__(self):
        return "<TreeEdgeWitness %s-%s %s%s>" % (self.i, self.j, self.config or "%d steps" % len(self.path or ()),
                                                 " erratum: %s" % self.erratum if self.erratum else "")


def _substitute(i, j, stated):
    """
    A volume-3 trade taking S_i to a relabeling of S_j, preferring the
    stated configuration, as (bitrade, target); None when there is none.
    """
    found = []
    for t in find_trades(reference_system(i), 3):
        target = t.apply_to(reference_system(i))
        if match_reference_class(target) == j:
            config = classify_config(t)
            found.append((config != stated, t.with_config(config), target))
            if config == stated:
                break
    if not found:
        return None
    found.sort(key=lambda f: f[0])
    return found[0][1:]


def spanning_tree_witnesses(edges=None, max_states=None):
    """
    One TreeEdgeWitness per tree edge (i, j, stated configuration). An
    edge whose rows don't differ by a volume-3 trade of the stated kind is
    reported as an erratum, with a substitute volume-3 trade from S_i to a
    relabeling of S_j, else a shortest trade path from S_i to S_j. The
    path is None only when that search runs out of max_states.
    """
    logger, _ = get_logger("connectivity")
    witnesses = []
    for i, j, stated in (edges or catalog.SPANNING_TREE):
        a, b = reference_system(i), reference_system(j)
        t = system_symmetric_difference(a, b)
        erratum = None
        if t is not None and t.volume == 3:
            config = classify_config(t)
            if str(config) == stated:
                witnesses.append(TreeEdgeWitness.single(i, j, t.with_config(config), stated, b,
                                                        Permutation.identity(9)))
                continue
            erratum = "rows %s and %s differ by a %s trade, not %s" % (i, j, config, stated)
        elif t is not None:
            erratum = "rows %s and %s differ by a volume-%d trade" % (i, j, t.volume)
        else:
            erratum = "rows %s and %s do not differ by a trade (%d cycles differ)" % (
                i, j, len(set(a.cycles) - set(b.cycles)))
        logger.warning("spanning tree erratum on edge %s-%s: %s" % (i, j, erratum))
        sub = _substitute(i, j, stated)
        if sub is not None:
            trade, target = sub
            _, sigma = identify(target)
            logger.info("substitute witness for %s-%s: %s" % (i, j, trade))
            witnesses.append(TreeEdgeWitness.single(i, j, trade, stated, target, sigma, erratum=erratum))
            continue
        path = bfs_path(a, b, max_states=max_states)
        if path is not None:
            logger.info("substitute path for %s-%s: %d steps" % (i, j, len(path)))
        witnesses.append(TreeEdgeWitness(i, j, path, None, stated, b, Permutation.identity(9), erratum=erratum))
    return witnesses
