"""
Machine-readable certificates. A certificate is a header

    # fourcycles 0.1.0
    # command: path --from S1 --to b.txt

followed by a line-oriented body: "key: value" scalars, and sections
opened by a bare "key:" line holding one item per line. Trade steps are
written "- a b c d  a b c d | + a b c d  a b c d".

Every kind is checked by replaying what it states (systems validated,
steps applied, witnesses re-classified, ranks spot-checked modulo one
prime), never by repeating the search that produced it.
"""
import re
from itertools import combinations

from fourcycles import get_version
from fourcycles.cli.io import ParseError, parse_cycle_line
from fourcycles.model import CycleSystem, TradePath, Bitrade, NotADecomposition, InvalidPath, InvalidTrade, \
    cycle_count, pair_count

KINDS = ("system", "trade-list", "path", "census", "rank", "kernel-span")

_KEY = re.compile(r"^([a-z][a-z0-9-]*):\s*(.*)$")


class Verdict(object):

    __slots__ = ("ok", "failing_step", "message")

    def __init__(self, ok, failing_step=None, message=""):
        self.ok = ok
        self.failing_step = failing_step
        self.message = message

    def __bool__(self):
        return self.ok

    def line(self):
        if self.ok:
            return "verified: %s" % self.message if self.message else "verified"
        step = "" if self.failing_step is None else " at step %d" % self.failing_step
        return "FAILED%s: %s" % (step, self.message)

    def __repr__(self):
        return "<Verdict %s>" % self.line()


class Certificate(object):

    def __init__(self, kind, scalars=None, sections=None, command=None, version=None):
        if kind not in KINDS:
            raise ParseError("unknown certificate kind '%s'" % kind)
        self.kind = kind
        self.scalars = dict(scalars or {})
        # ordered {name: [line, ...]}
        self.sections = dict(sections or {})
        self.command = command
        self.version = version or get_version()

    def scalar(self, name, cast=str):
        try:
            return cast(self.scalars[name])
        except KeyError:
            raise ParseError("%s certificate without '%s'" % (self.kind, name))
        except ValueError:
            raise ParseError("bad value for '%s': %r" % (name, self.scalars[name]))

    def section(self, name):
        try:
            return self.sections[name]
        except KeyError:
            raise ParseError("%s certificate without section '%s'" % (self.kind, name))

    def render(self):
        out = ["# fourcycles %s" % self.version]
        if self.command:
            out.append("# command: %s" % self.command)
        out.append("kind: %s" % self.kind)
        for k, v in self.scalars.items():
            out.append("%s: %s" % (k, v))
        for name, lines in self.sections.items():
            out.append("%s:" % name)
            out.extend(text for _, text in _lines(lines))
        return "\n".join(out) + "\n"

    @classmethod
    def parse(cls, text):
        version = command = kind = None
        scalars = {}
        sections = {}
        current = None
        for lineno, line in enumerate(text.splitlines(), start=1):
            stripped = line.strip()
            if stripped.startswith("#"):
                if stripped.startswith("# fourcycles "):
                    version = stripped.split(None, 2)[2]
                elif stripped.startswith("# command:"):
                    command = stripped.split(":", 1)[1].strip()
                continue
            if not stripped:
                continue
            m = _KEY.match(stripped)
            if m:
                key, value = m.groups()
                if key == "kind":
                    kind = value
                    current = None
                elif value:
                    scalars[key] = value
                    current = None
                else:
                    if key in sections:
                        raise ParseError("duplicate section '%s'" % key, lineno, 1)
                    current = sections[key] = []
                continue
            if current is None:
                raise ParseError("line outside of any section: %r" % stripped, lineno, 1)
            current.append((lineno, stripped))
        if kind is None:
            raise ParseError("no 'kind:' line")
        cert = cls(kind, scalars, command=command, version=version)
        # sections keep their line numbers for error reporting
        cert.sections = sections
        return cert

    def __repr__(self):
        return "<Certificate %s %s>" % (self.kind, " ".join("%s=%s" % kv for kv in self.scalars.items()))


def _lines(section):
    """Section items as (lineno, text), whether parsed or freshly built"""
    return [item if isinstance(item, tuple) else (None, item) for item in section]


def format_step(removed, added):
    return "- %s | + %s" % ("  ".join(str(c) for c in sorted(removed)),
                            "  ".join(str(c) for c in sorted(added)))


def parse_step(text, lineno=None):
    """'- c1 c2 | + d1 d2' -> (removed cycles, added cycles)"""
    if not text.startswith("-") or "| +" not in text:
        raise ParseError("expecting '- cycles | + cycles', got %r" % text, lineno, 1)
    left, right = text[1:].split("| +", 1)
    return _cycles(left, lineno), _cycles(right, lineno)


def _cycles(text, lineno):
    tokens = text.split()
    if not tokens or len(tokens) % 4:
        raise ParseError("expecting groups of 4 vertices, got %r" % text.strip(), lineno, 1)
    out = []
    for i in range(0, len(tokens), 4):
        out.extend(parse_cycle_line(" ".join(tokens[i:i + 4]), lineno))
    return out


def _system(order, section, validate=False):
    cycles = []
    for lineno, text in _lines(section):
        cycles.extend(parse_cycle_line(text, lineno))
    return CycleSystem(order, cycles, validate=validate)


def _system_lines(system):
    return [str(c) for c in system.cycles]


########################
# builders             #
########################

def system_certificate(system, command=None):
    return Certificate("system", {"order": system.order, "cycles": len(system)},
                       {"system": _system_lines(system)}, command=command)


def trade_list_certificate(system, trades, command=None):
    lines = []
    for t in trades:
        lines.append(format_step(t.t1, t.t2) + ("  # %s" % t.config if t.config is not None else ""))
    return Certificate("trade-list", {"order": system.order, "count": len(trades)},
                       {"system": _system_lines(system), "trades": lines}, command=command)


def path_certificate(path, command=None):
    return Certificate("path", {"order": path.start.order, "length": len(path)},
                       {"start": _system_lines(path.start), "end": _system_lines(path.end),
                        "steps": [format_step(r, a) for r, a in path.steps]}, command=command)


def census_certificate(runner, command=None):
    """One witness bitrade per trade class found by a CensusRunner"""
    counts = []
    witnesses = []
    for f, classes in runner.results:
        found = [c for c in classes if c.admits_mate]
        counts.append("%d %d" % (f, len(found)))
        for c in found:
            t1, t2 = next((a, b) for a, b in combinations(c.decompositions, 2) if not (a & b))
            witnesses.append("%d %s %s" % (f, c.label, format_step(t1, t2)))
    return Certificate("census", {"volume": runner.volume},
                       {"foundations": counts, "witnesses": witnesses}, command=command)


def rank_certificate(matrix, rank, prime, command=None):
    return Certificate("rank", {"order": matrix.order, "rows": matrix.nrows, "columns": matrix.ncols,
                                "rank": rank, "nullity": matrix.ncols - rank, "prime": prime},
                       command=command)


def kernel_span_certificate(span, prime, command=None):
    return Certificate("kernel-span", {"order": span.order, "dd-vectors": span.dd_vectors,
                                       "generated-rank": span.generated_rank, "nullity": span.nullity,
                                       "spans": "true" if span.spans else "false", "prime": prime},
                       command=command)


########################
# verification         #
########################

def _verify_system(cert):
    order = cert.scalar("order", int)
    system = _system(order, cert.section("system"))
    try:
        system.validate()
    except NotADecomposition as e:
        return Verdict(False, message=str(e))
    return Verdict(True, message="4-CS(%d) with %d cycles" % (order, len(system)))


def _verify_trade_list(cert):
    order = cert.scalar("order", int)
    system = _system(order, cert.section("system"))
    try:
        system.validate()
    except NotADecomposition as e:
        return Verdict(False, message="system: %s" % e)
    items = _lines(cert.section("trades")) if "trades" in cert.sections else []
    if cert.scalar("count", int) != len(items):
        return Verdict(False, message="count %s, %d trades listed" % (cert.scalars["count"], len(items)))
    for num, (lineno, text) in enumerate(items):
        removed, added = parse_step(text.split("#", 1)[0].strip(), lineno)
        try:
            Bitrade(removed, added).apply_to(system)
        except (InvalidTrade, NotADecomposition) as e:
            return Verdict(False, num, str(e))
    return Verdict(True, message="%d trade(s)" % len(items))


def _verify_path(cert):
    order = cert.scalar("order", int)
    start = _system(order, cert.section("start"))
    end = _system(order, cert.section("end"))
    items = _lines(cert.sections.get("steps", []))
    steps = [parse_step(text, lineno) for lineno, text in items]
    if "length" in cert.scalars and cert.scalar("length", int) != len(steps):
        return Verdict(False, message="length %s, %d steps listed" % (cert.scalars["length"], len(steps)))
    try:
        path = TradePath(start, steps)
    except InvalidPath as e:
        return Verdict(False, e.step, str(e))
    if path.end != end:
        return Verdict(False, len(steps), "replay ends at %r, not at the stated end" % path.end)
    return Verdict(True, message="%d step(s)" % len(steps))


def _verify_census(cert):
    from fourcycles.trades import classify_config, TradeGraph
    volume = cert.scalar("volume", int)
    counts = {}
    for lineno, text in _lines(cert.section("foundations")):
        try:
            f, c = (int(x) for x in text.split())
        except ValueError:
            raise ParseError("expecting 'foundation count', got %r" % text, lineno, 1)
        counts[f] = c
    seen = {}
    items = _lines(cert.sections.get("witnesses", []))
    for num, (lineno, text) in enumerate(items):
        parts = text.split(None, 2)
        if len(parts) != 3 or not parts[0].isdigit():
            raise ParseError("expecting 'foundation label - ... | + ...', got %r" % text, lineno, 1)
        f = int(parts[0])
        t1, t2 = parse_step(parts[2], lineno)
        try:
            trade = Bitrade(t1, t2)
        except InvalidTrade as e:
            return Verdict(False, num, str(e))
        if trade.volume != volume or trade.foundation != f:
            return Verdict(False, num, "witness has volume %d, foundation %d" % (trade.volume, trade.foundation))
        label = str(classify_config(trade))
        if label != parts[1]:
            return Verdict(False, num, "witness classifies as %s, not %s" % (label, parts[1]))
        graph = TradeGraph(trade.t1)
        if any(graph.is_isomorphic(g) for g in seen.get(f, [])):
            return Verdict(False, num, "witness repeats a class of foundation %d" % f)
        seen.setdefault(f, []).append(graph)
    for f, c in counts.items():
        if len(seen.get(f, [])) != c:
            return Verdict(False, message="foundation %d: %d classes stated, %d witnessed" %
                           (f, c, len(seen.get(f, []))))
    return Verdict(True, message="; ".join("%d->%d" % fc for fc in sorted(counts.items())))


def _verify_rank(cert):
    from fourcycles.algebra import InclusionMatrix, modular_rank
    order = cert.scalar("order", int)
    rank = cert.scalar("rank", int)
    prime = cert.scalar("prime", int)
    matrix = InclusionMatrix(order)
    if cert.scalar("nullity", int) != matrix.ncols - rank:
        return Verdict(False, message="nullity %s != %d - %d" % (cert.scalars["nullity"], matrix.ncols, rank))
    if rank > matrix.nrows:
        return Verdict(False, message="rank %d exceeds the %d rows" % (rank, matrix.nrows))
    mod = modular_rank(matrix.to_dense(), prime)
    # rank mod p <= rational rank
    if mod != rank:
        return Verdict(False, message="rank mod %d is %d, stated %d" % (prime, mod, rank))
    return Verdict(True, message="rank %d mod %d" % (rank, prime))


def _verify_kernel_span(cert):
    from fourcycles.algebra import double_diamond_vectors, configuration_count, dense_vectors, modular_rank
    order = cert.scalar("order", int)
    stated = cert.scalar("generated-rank", int)
    null = cert.scalar("nullity", int)
    prime = cert.scalar("prime", int)
    if null != cycle_count(order) - pair_count(order):
        return Verdict(False, message="nullity %d, expected %d" % (null, cycle_count(order) - pair_count(order)))
    if cert.scalar("dd-vectors", int) != configuration_count(order):
        return Verdict(False, message="%s double-diamond vectors, expected %d" %
                       (cert.scalars["dd-vectors"], configuration_count(order)))
    if (cert.scalar("spans") == "true") != (stated == null):
        return Verdict(False, message="spans=%s contradicts rank %d, nullity %d" % (cert.scalars["spans"],
                                                                                  stated, null))
    vectors = double_diamond_vectors(order)
    mod = modular_rank(dense_vectors(vectors, cycle_count(order)), prime)
    if mod != stated:
        return Verdict(False, message="rank mod %d is %d, stated %d" % (prime, mod, stated))
    return Verdict(True, message="rank %d of nullity %d mod %d" % (stated, null, prime))


VERIFIERS = {
    "system": _verify_system,
    "trade-list": _verify_trade_list,
    "path": _verify_path,
    "census": _verify_census,
    "rank": _verify_rank,
    "kernel-span": _verify_kernel_span,
}


def verify_certificate(cert):
    """Verdict of a Certificate (or of its text); malformed input raises ParseError"""
    if isinstance(cert, str):
        cert = Certificate.parse(cert)
    return VERIFIERS[cert.kind](cert)


def read_certificate(path):
    from fourcycles.utils.common import open_anyfile
    with open_anyfile(path) as fh:
        return Certificate.parse(fh.read())
