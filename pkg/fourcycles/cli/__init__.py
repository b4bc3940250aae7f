"""
fourcycles command line. Result bodies go to stdout (or --out), logs to
stderr. Exit codes: 0 success or verified, 1 verified false, 2 usage,
parse or validation error.
"""
import sys
import logging
import argparse

import fourcycles
from fourcycles import ConfigurationError, get_version
from fourcycles.cli.io import ParseError, RunConfig, parse_system_file, read_systems, format_systems, \
    write_systems
from fourcycles.cli.certificate import verify_certificate, read_certificate, \
    system_certificate, trade_list_certificate, path_certificate, census_certificate, rank_certificate, \
    kernel_span_certificate
from fourcycles.utils.loggers import setup_default_log

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2


def _emit(text, path=None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _range(text):
    """'6..10' or '6,7,8' -> [6, ..., 10]"""
    try:
        if ".." in text:
            low, high = text.split("..", 1)
            return list(range(int(low), int(high) + 1))
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ConfigurationError("bad range '%s', expecting 'a..b' or 'a,b,c'" % text)


def _command_echo(argv):
    return " ".join(argv)


########################
# subcommands          #
########################

def cmd_enumerate(args, run):
    from fourcycles.decompose import enumerate_systems
    if args.count_only:
        _emit("%d\n" % enumerate_systems(args.order, "count", num_workers=run.num_workers), run.output)
    elif args.first:
        s = enumerate_systems(args.order, "first", num_workers=run.num_workers)
        if s is None:
            logging.getLogger(__name__).warning("no 4-CS(%d) exists" % args.order)
            return EXIT_FALSE
        _emit(format_systems([s]), run.output)
    else:
        systems = enumerate_systems(args.order, "all", num_workers=run.num_workers)
        _emit(format_systems(systems), run.output)
    return EXIT_OK


def cmd_classify(args, run):
    from fourcycles.decompose import canonical_label, classify_systems, label_class
    systems = read_systems(args.input)
    if args.orbits:
        classes = classify_systems(systems, num_workers=run.num_workers)
        lines = ["%s aut=%d systems=%d %r" % (c.representative_label or "-", c.automorphism_count, c.size,
                                              c.canonical_system) for c in map(label_class, classes)]
    else:
        groups = {}
        for s in systems:
            iso = canonical_label(s)
            groups.setdefault(iso.canonical_system, [iso, 0])[1] += 1
        lines = []
        for canonical in sorted(groups):
            iso, count = groups[canonical]
            iso = label_class(iso)
            lines.append("%s aut=%d systems=%d %r" % (iso.representative_label or "-", iso.automorphism_count,
                                                      count, canonical))
    lines.append("classes: %d" % len(lines))
    _emit("\n".join(lines) + "\n", run.output)
    return EXIT_OK


def cmd_cyclic(args, run):
    from fourcycles.decompose import CyclicStarter, develop_cyclic, is_shift_invariant
    from fourcycles.model import NotADecomposition
    starter = CyclicStarter.parse(args.order, args.bases)
    try:
        system = develop_cyclic(starter)
    except NotADecomposition as e:
        sys.stderr.write("not a 4-CS(%d): %s\n" % (args.order, e))
        return EXIT_FALSE
    if not is_shift_invariant(system):
        sys.stderr.write("developed system is not shift invariant\n")
        return EXIT_FALSE
    _emit(format_systems([system]), run.output)
    return EXIT_OK


def cmd_scan_trades(args, run):
    from fourcycles.trades import find_trades, labeled
    system = parse_system_file(args.input)
    volume = args.volume if args.volume == "both" else int(args.volume)
    trades = find_trades(system, volume, num_workers=run.num_workers)
    if args.classify:
        trades = [labeled(t) for t in trades]
    _emit("".join("%s\n" % t for t in trades), run.output)
    if args.cert:
        _emit(trade_list_certificate(system, trades, _command_echo(run.argv)).render(), args.cert)
    if args.expect_none and trades:
        sys.stderr.write("%d trade(s) found where none were expected\n" % len(trades))
        return EXIT_FALSE
    return EXIT_OK


def cmd_census(args, run):
    from fourcycles.trades import CensusRunner
    from fourcycles import config
    foundations = _range(args.foundations) if args.foundations else None
    runner = CensusRunner(args.volume, foundations)
    runner.run()
    if config.REPORT_FORMAT == "table":
        body = runner.table() + "\n"
    else:
        body = "".join("%s\n" % line for line in runner.lines())
    _emit(body, run.output)
    if args.cert:
        _emit(census_certificate(runner, _command_echo(run.argv)).render(), args.cert)
    return EXIT_OK


def cmd_connectivity(args, run):
    from fourcycles import config
    from fourcycles.connectivity import MoveGraphExplorer
    from fourcycles.decompose import enumerate_systems
    start = parse_system_file(args.start)
    universe = None
    max_states = run.max_states
    if args.full:
        universe = set(s.key for s in enumerate_systems(start.order, "all", num_workers=run.num_workers))
    elif args.classes_only:
        max_states = min(max_states, config.BFS_FALLBACK_STATES)
    explorer = MoveGraphExplorer(max_states=max_states, max_seconds=run.max_seconds,
                                 num_workers=run.num_workers or 1)
    stats = explorer.explore(start, universe=universe)
    lines = ["start: %s" % args.start,
             "reached: %d" % stats.vertex_count,
             "depth: %d" % stats.max_bfs_depth]
    if start.order == 9:
        lines.append("classes: %s (%d/8)" % (",".join(sorted(stats.class_coverage)) or "-",
                                              len(stats.class_coverage)))
        if stats.unresolved:
            lines.append("unresolved: %d (possibly %s)" % (stats.unresolved,
                                                           ",".join(sorted(stats.unresolved_labels)) or "-"))
    if stats.component_count is not None:
        lines.append("components: %d (universe %d)" % (stats.component_count, stats.universe_size))
    lines.append("complete: %s" % ("true" if stats.complete else "false (%s)" % stats.reason))
    _emit("\n".join(lines) + "\n", run.output)
    if args.full and stats.complete and stats.component_count != 1:
        return EXIT_FALSE
    if args.classes_only and start.order == 9 and len(stats.class_coverage) < 8:
        return EXIT_FALSE
    return EXIT_OK


def cmd_path(args, run):
    from fourcycles.connectivity import bfs_path, constructive_path
    a = parse_system_file(args.source)
    b = parse_system_file(args.target)
    if args.method == "bfs":
        from fourcycles import config
        budget = args.max_states or config.PATH_BFS_MAX_STATES
        path = bfs_path(a, b, max_states=budget)
        if path is None:
            sys.stderr.write("no path within %d systems\n" % budget)
            return EXIT_FALSE
    else:
        path = constructive_path(a, b)
    _emit(path_certificate(path, _command_echo(run.argv)).render(), run.output)
    return EXIT_OK


def _verdict(verdict):
    stream = sys.stdout if verdict.ok else sys.stderr
    stream.write(verdict.line() + "\n")
    return EXIT_OK if verdict.ok else EXIT_FALSE


def cmd_verify_path(args, run):
    cert = read_certificate(args.certificate)
    if cert.kind != "path":
        raise ParseError("expecting a path certificate, got '%s'" % cert.kind)
    return _verdict(verify_certificate(cert))


def cmd_verify(args, run):
    return _verdict(verify_certificate(read_certificate(args.certificate)))


def cmd_matrix(args, run):
    from fourcycles import config
    from fourcycles.algebra import InclusionMatrix, exact_rank
    m = InclusionMatrix(args.order)
    if args.export:
        _emit(m.to_text(), args.export)
    lines = ["order: %d" % m.order, "rows: %d" % m.nrows, "columns: %d" % m.ncols]
    if args.rank:
        rank = exact_rank(m)
        lines.append("rank: %d" % rank)
        lines.append("nullity: %d" % (m.ncols - rank))
        lines.append("full-row-rank: %s" % ("true" if rank == m.nrows else "false"))
        if args.cert:
            _emit(rank_certificate(m, rank, config.RANK_PRIMES[0], _command_echo(run.argv)).render(), args.cert)
    _emit("\n".join(lines) + "\n", run.output)
    if args.rank and rank != m.nrows:
        return EXIT_FALSE
    return EXIT_OK


def cmd_kernel_span(args, run):
    from fourcycles import config
    from fourcycles.algebra import double_diamond_span
    if args.order:
        orders = args.order
    else:
        low, high = config.KERNEL_SPAN_ORDERS
        orders = list(range(low, high + 1))
    if args.cert and len(orders) != 1:
        raise ConfigurationError("--cert needs exactly one --order")
    lines = []
    for n in orders:
        span = double_diamond_span(n)
        lines.append(span.line())
        if args.cert:
            _emit(kernel_span_certificate(span, config.RANK_PRIMES[0], _command_echo(run.argv)).render(), args.cert)
    _emit("\n".join(lines) + "\n", run.output)
    return EXIT_OK


def cmd_tables(args, run):
    from fourcycles.tables import check_tables
    checks = check_tables()
    _emit("".join("%s\n" % c.line() for c in checks), run.output)
    return EXIT_OK if all(c.ok for c in checks) else EXIT_FALSE


def cmd_system(args, run):
    system = parse_system_file(args.input)
    if args.cert:
        _emit(system_certificate(system, _command_echo(run.argv)).render(), args.cert)
    if run.output:
        write_systems([system], run.output)
    else:
        _emit(format_systems([system]))
    return EXIT_OK


########################
# argument parsing     #
########################

def build_parser():
    parser = argparse.ArgumentParser(prog="fourcycles",
                                     description="4-cycle systems of complete graphs: enumeration, trades, "
                                                 "connectivity and inclusion matrices")
    parser.add_argument("--version", action="version", version="fourcycles %s" % get_version())
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more logging (repeatable)")
    parser.add_argument("-q", "--quiet", action="store_true", help="warnings and errors only")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker processes, 0 means one per cpu (default: $FOURCYCLE_THREADS)")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def add(name, fun, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=fun)
        return p

    p = add("enumerate", cmd_enumerate, "every labeled 4-CS(n), by exact cover")
    p.add_argument("--order", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count-only", action="store_true", help="print the number of systems only")
    mode.add_argument("--first", action="store_true", help="print the first system found")
    p.add_argument("--out", help="output file (default: stdout)")

    p = add("classify", cmd_classify, "isomorphism classes of the systems of a file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--orbits", action="store_true",
                   help="classify by orbit sweep (input must be closed under relabeling)")
    p.add_argument("--out")

    p = add("cyclic", cmd_cyclic, "develop base cycles into a cyclic 4-CS(n)")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--bases", required=True, help='base cycles on labels 0..n-1, e.g. "0 3 1 12; 0 4 10 17"')
    p.add_argument("--out")

    p = add("system", cmd_system, "validate one system (file or S1..S8) and print it")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--cert", help="write a system certificate to this file")
    p.add_argument("--out")

    p = add("scan-trades", cmd_scan_trades, "every volume-2/3 trade of a system")
    p.add_argument("--in", dest="input", required=True, help="system file or S1..S8")
    p.add_argument("--volume", choices=("2", "3", "both"), default="both")
    p.add_argument("--classify", action="store_true", help="label every trade with its configuration")
    p.add_argument("--expect-none", action="store_true", help="exit 1 when any trade is found")
    p.add_argument("--cert", help="write a trade-list certificate to this file")
    p.add_argument("--out")

    p = add("census", cmd_census, "trade-carrying union graphs by foundation, up to isomorphism")
    p.add_argument("--volume", type=int, choices=(2, 3), default=3)
    p.add_argument("--foundations", help="'6..10' or '6,7,8'")
    p.add_argument("--cert", help="write a census certificate to this file")
    p.add_argument("--out")

    p = add("connectivity", cmd_connectivity, "breadth-first search of the trade move graph")
    p.add_argument("--start", required=True, help="system file or S1..S8")
    scope = p.add_mutually_exclusive_group()
    scope.add_argument("--full", action="store_true", help="count components over every labeled system")
    scope.add_argument("--classes-only", action="store_true",
                       help="bounded search, succeeds once every reference class is reached")
    p.add_argument("--max-states", type=int)
    p.add_argument("--max-seconds", type=int)
    p.add_argument("--out")

    p = add("path", cmd_path, "certificate of a trade path between two systems")
    p.add_argument("--from", dest="source", required=True, help="system file or S1..S8")
    p.add_argument("--to", dest="target", required=True, help="system file or S1..S8")
    p.add_argument("--method", choices=("bfs", "constructive"), default="constructive")
    p.add_argument("--max-states", type=int)
    p.add_argument("--out")

    p = add("verify-path", cmd_verify_path, "replay a path certificate")
    p.add_argument("certificate")

    p = add("verify", cmd_verify, "check a certificate of any kind")
    p.add_argument("certificate")

    p = add("matrix", cmd_matrix, "pair inclusion matrix of K_n")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--rank", action="store_true", help="compute the exact rank")
    p.add_argument("--export", help="write the matrix, one row of 0/1 per line")
    p.add_argument("--cert", help="write a rank certificate to this file (with --rank)")
    p.add_argument("--out")

    p = add("kernel-span", cmd_kernel_span, "rank of the double-diamond vectors against the nullity of M")
    p.add_argument("--order", type=int, action="append", help="repeatable (default: KERNEL_SPAN_ORDERS)")
    p.add_argument("--cert", help="write a kernel-span certificate to this file (one order only)")
    p.add_argument("--out")

    p = add("tables", cmd_tables, "re-validate every built-in table")
    p.add_argument("--out")

    return parser


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    if args.quiet:
        fourcycles.config.LOG_LEVEL = "WARNING"
    elif args.verbose:
        fourcycles.config.LOG_LEVEL = "DEBUG"
    setup_default_log("fourcycles", fourcycles.config.LOG_FOLDER, fourcycles.config.LOG_LEVEL)
    try:
        run = RunConfig(args).validate()
        if run.num_workers == 0:
            run.num_workers = None
        run.argv = argv
        return args.func(args, run)
    except (ParseError, ConfigurationError, ValueError) as e:
        sys.stderr.write("error: %s\n" % e)
        return EXIT_USAGE
