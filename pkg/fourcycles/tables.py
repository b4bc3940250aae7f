"""
Transcription check of the built-in tables: every system, trade and
construction of fourcycles.catalog is re-validated from scratch.
"""
from fourcycles import catalog
from fourcycles.decompose import reference_system, reference_classes, check_reference_rows, \
    CyclicStarter, develop_cyclic, is_shift_invariant, TableRowInvalid
from fourcycles.model import Bitrade, MuWayTrade, Permutation, ConfigLabel, apply_permutation
from fourcycles.trades import classify_config, parse_part, double_diamond_chain
from fourcycles.utils.loggers import get_logger


class TableCheck(object):
    """
    status: "ok", "erratum" (the table is wrong but a substitute witness
    was found) or "failed".
    """

    __slots__ = ("name", "status", "detail")

    def __init__(self, name, status, detail=""):
        if status is True or status is False:
            status = "ok" if status else "failed"
        self.name = name
        self.status = status
        self.detail = detail

    @property
    def ok(self):
        return self.status != "failed"

    def line(self):
        return "%-28s %-7s %s" % (self.name, self.status, self.detail)

    def __repr__(self):
        return "<TableCheck %s>" % self.line()


def _run(name, fun):
    try:
        detail = fun()
        return TableCheck(name, True, detail or "")
    except Exception as e:
        return TableCheck(name, False, "%s: %s" % (type(e).__name__, e))


def _labeled_bitrade(a, b, expected):
    t = Bitrade(parse_part(a), parse_part(b))
    label = classify_config(t)
    if label != expected:
        raise ValueError("classified %s, expected %s" % (label, expected))
    return "volume %d, foundation %d, %s" % (t.volume, t.foundation, label)


def _muway(rows, expected):
    m = MuWayTrade([parse_part(r) for r in rows])
    label = classify_config(m.bitrade(0, 1))
    if label != expected:
        raise ValueError("classified %s, expected %s" % (label, expected))
    return "%d-way, volume %d, %s" % (m.mu, m.volume, label)


def _chain(start, steps, end):
    current = parse_part(start)
    for removed, added in steps:
        Bitrade(parse_part(removed), parse_part(added))
        if not parse_part(removed) <= current:
            raise ValueError("step removes %s, absent from %s" % (removed, sorted(current)))
        current = (current - parse_part(removed)) | parse_part(added)
    if current != parse_part(end):
        raise ValueError("chain ends at %s" % sorted(current))
    return "%d double-diamond moves" % len(steps)


def _tstar_chain():
    chain = double_diamond_chain(parse_part(catalog.TSTAR[0]), parse_part(catalog.TSTAR[1]))
    if chain is None:
        return "no double-diamond chain between T1 and T2"
    return "%d double-diamond moves from T1 to T2" % (len(chain) - 1)


def _cyclic(n):
    system = develop_cyclic(CyclicStarter(n, catalog.CYCLIC_STARTERS[n]))
    if not is_shift_invariant(system):
        raise ValueError("developed system is not shift invariant")
    return "%d cycles" % len(system)


def _hub():
    s = reference_system(catalog.HUB_SYSTEM)
    sigma = Permutation.from_cycles(9, catalog.HUB_AUTOMORPHISM)
    if apply_permutation(s, sigma) != s:
        raise ValueError("%s is not fixed by %s" % (catalog.HUB_SYSTEM, sigma))
    return "%s fixed by %s" % (catalog.HUB_SYSTEM, sigma)


def _seed():
    from fourcycles.connectivity import seed_path
    path = seed_path()
    t = Permutation.transposition(9, *catalog.SEED_TRANSPOSITION)
    if path.end != apply_permutation(path.start, t):
        raise ValueError("seed path does not end at %s^%s" % (catalog.SEED_SYSTEM, t))
    labels = [str(classify_config(b)) for b in path.bitrades()]
    return "%s -> %s^%s via %s" % (catalog.SEED_SYSTEM, catalog.SEED_SYSTEM, t, ", ".join(labels))


def check_tables():
    """[TableCheck], errata logged as warnings"""
    logger, _ = get_logger("tables")
    checks = []
    for label, ok, msg in check_reference_rows():
        checks.append(TableCheck("system %s" % label, ok, msg))
    checks.append(_run("8 classes", lambda: "%d pairwise non-isomorphic rows" % len(reference_classes())))
    checks.append(_run("double-diamond", lambda: _labeled_bitrade(*catalog.DOUBLE_DIAMOND, ConfigLabel.DD)))
    checks.append(_run("double-diamond 3-way", lambda: _muway(catalog.DOUBLE_DIAMOND_3WAY, ConfigLabel.DD)))
    f6 = catalog.F6_PARTS
    checks.append(_run("F6 (T1,T2,T3)", lambda: _muway((f6["T1"], f6["T2"], f6["T3"]), ConfigLabel.F6)))
    checks.append(_run("F6 (T1,T2,T4)", lambda: _muway((f6["T1"], f6["T2"], f6["T4"]), ConfigLabel.F6)))
    checks.append(_run("F6 double-diamond chain",
                       lambda: _chain(f6["T1"], catalog.F6_DOUBLE_DIAMOND_CHAIN, f6["T2"])))
    checks.append(_run("T'", lambda: _labeled_bitrade(*catalog.TPRIME, ConfigLabel.F7_TPRIME)))
    checks.append(_run("T''", lambda: _labeled_bitrade(*catalog.TDOUBLEPRIME, ConfigLabel.F7_TDOUBLEPRIME)))
    checks.append(_run("T* (T1,T2)", lambda: _labeled_bitrade(catalog.TSTAR[0], catalog.TSTAR[1],
                                                              ConfigLabel.F7_TSTAR)))
    checks.append(_run("T* (T1,T3)", lambda: _labeled_bitrade(catalog.TSTAR[0], catalog.TSTAR[2],
                                                              ConfigLabel.F7_TSTAR)))
    checks.append(_run("T* double-diamond chain", _tstar_chain))
    checks.append(_run("F8 5-way", lambda: _muway(catalog.F8_5WAY, ConfigLabel.F8)))
    checks.append(_run("F8 double-diamond chain",
                       lambda: _labeled_bitrade(*catalog.F8_DDCHAIN, ConfigLabel.F8_DDCHAIN)))
    for n in sorted(catalog.CYCLIC_STARTERS):
        checks.append(_run("cyclic 4-CS(%d)" % n, lambda n=n: _cyclic(n)))
    checks.append(_run("hub automorphism", _hub))
    checks.append(_run("seed path", _seed))
    checks.extend(_tree_checks())
    for c in checks:
        if c.status != "ok":
            logger.warning("table erratum: %s" % c.line())
    return checks


def _tree_checks():
    from fourcycles.connectivity import spanning_tree_witnesses
    try:
        witnesses = spanning_tree_witnesses()
    except TableRowInvalid as e:
        return [TableCheck("spanning tree", False, str(e))]
    out = []
    for w in witnesses:
        name = "tree edge %s-%s" % (w.i, w.j)
        if w.erratum is None:
            out.append(TableCheck(name, True, str(w.config)))
        elif w.bitrade is not None:
            out.append(TableCheck(name, "erratum", "%s; substitute %s trade to %s^%s" % (w.erratum, w.config, w.j, w.sigma)))
        elif w.path is not None:
            out.append(TableCheck(name, "erratum", "%s; substitute path of %d steps" % (w.erratum, len(w.path))))
        else:
            out.append(TableCheck(name, False, "%s; no substitute" % w.erratum))
    return out
