from functools import singledispatch

from fourcycles.model.cycle import FourCycle, canonicalize_cycle, cycle_space
from fourcycles.model.permutation import Permutation, InvalidPermutation
from fourcycles.model.system import CycleSystem, SPACE_MAX_ORDER
from fourcycles.model.trade import Bitrade, MuWayTrade, TradePath


@singledispatch
def apply_permutation(target, sigma):
    """
    Relabel every vertex x of target as sigma(x), re-canonicalizing cycles.
    Works on FourCycle, sets of cycles, CycleSystem, Bitrade, MuWayTrade and
    TradePath. apply_permutation(apply_permutation(X, s), t) equals
    apply_permutation(X, s * t).
    """
    raise TypeError("can't relabel %s" % type(target).__name__)


@apply_permutation.register(FourCycle)
def _(target, sigma):
    m = sigma.table
    a, b, c, d = target
    if max(target) > sigma.n:
        raise InvalidPermutation("%s has vertices beyond %d" % (target, sigma.n))
    return canonicalize_cycle(m[a], m[b], m[c], m[d])


@apply_permutation.register(frozenset)
@apply_permutation.register(set)
def _(target, sigma):
    return frozenset(apply_permutation(c, sigma) for c in target)


@apply_permutation.register(list)
@apply_permutation.register(tuple)
def _(target, sigma):
    return type(target)(apply_permutation(c, sigma) for c in target)


@apply_permutation.register(CycleSystem)
def _(target, sigma):
    if sigma.n != target.order:
        raise InvalidPermutation("permutation on %d points for a 4-CS(%d)" % (sigma.n, target.order))
    if target.order <= SPACE_MAX_ORDER:
        space = cycle_space(target.order)
        return CycleSystem.from_key(target.order, space.relabel_key(target.key, sigma.table))
    return CycleSystem(target.order, [apply_permutation(c, sigma) for c in target.cycles], validate=False)


@apply_permutation.register(Bitrade)
def _(target, sigma):
    return Bitrade(apply_permutation(target.t1, sigma), apply_permutation(target.t2, sigma),
                   config=target.config, validate=False)


@apply_permutation.register(MuWayTrade)
def _(target, sigma):
    return MuWayTrade([apply_permutation(p, sigma) for p in target.parts], validate=False)


@apply_permutation.register(TradePath)
def _(target, sigma):
    return TradePath(apply_permutation(target.start, sigma),
                     [(apply_permutation(r, sigma), apply_permutation(a, sigma)) for r, a in target.steps],
                     validate=False)


def relabel(target, sigma):
    """Shortcut accepting a Permutation or an image tuple"""
    if not isinstance(sigma, Permutation):
        sigma = Permutation(sigma)
    return apply_permutation(target, sigma)
