"""
Text formats: systems are written one cycle per line ("a b c d"), systems
separated by a blank line, '#' starting a comment. Table rows in compact
form ("1234 1356 ...") are accepted as input as well.
"""
import os

from fourcycles import ConfigurationError, catalog
from fourcycles.model import CycleSystem, InvalidCycle, canonicalize_cycle
from fourcycles.utils.common import open_anyfile


class ParseError(ValueError):

    def __init__(self, msg, line=None, column=None):
        if line is not None:
            msg = "line %d%s: %s" % (line, ", column %d" % column if column else "", msg)
        super(ParseError, self).__init__(msg)
        self.line = line
        self.column = column


def _is_compact(token):
    return len(token) == 4 and token.isdigit() and "0" not in token


def parse_cycle_line(text, lineno=None):
    """One line -> list of cycles: 4 integers, or compact 4-digit tokens"""
    tokens = text.split()
    if tokens and all(_is_compact(t) for t in tokens):
        raw = [tuple(int(ch) for ch in t) for t in tokens]
    elif len(tokens) == 4:
        for t in tokens:
            if not t.isdigit():
                raise ParseError("not a vertex: %r" % t, lineno, text.find(t) + 1)
        raw = [tuple(int(t) for t in tokens)]
    else:
        raise ParseError("expecting 4 vertices or compact cycles, got %r" % text.strip(), lineno, 1)
    cycles = []
    for r in raw:
        try:
            cycles.append(canonicalize_cycle(*r))
        except InvalidCycle as e:
            raise ParseError(str(e), lineno, 1)
    return cycles


def parse_systems(lines, order=None, validate=True):
    """Systems found in lines of text, in order of appearance"""
    blocks = []
    current = []
    for lineno, line in enumerate(lines, start=1):
        text = line.split("#", 1)[0].strip()
        header = line.strip().lower()
        if header.startswith("# order"):
            try:
                order = int(header.split()[2])
            except (IndexError, ValueError):
                raise ParseError("bad order header %r" % line.strip(), lineno, 1)
            continue
        if not text:
            if current:
                blocks.append(current)
                current = []
            continue
        current.extend(parse_cycle_line(text, lineno))
    if current:
        blocks.append(current)
    systems = []
    for cycles in blocks:
        n = order or max(max(c) for c in cycles)
        systems.append(CycleSystem(n, cycles, validate=validate))
    return systems


def read_systems(path, validate=True):
    if not os.path.exists(path):
        raise ParseError("no such file: %s" % path)
    with open_anyfile(path) as fh:
        return parse_systems(fh.read().splitlines(), validate=validate)


def parse_system_file(path):
    """
    Validated system from a file, or the built-in system for a label
    S1..S8. Only the first system of a file is read.
    """
    if path in catalog.REFERENCE_SYSTEMS:
        from fourcycles.decompose import reference_system
        return reference_system(path)
    systems = read_systems(path)
    if not systems:
        raise ParseError("no system in %s" % path)
    return systems[0]


def format_systems(systems):
    systems = list(systems)
    head = "# order %d\n" % systems[0].order if systems else ""
    return head + "".join(s.to_text() for s in systems)


def write_systems(systems, path):
    with open(path, "w") as fh:
        fh.write(format_systems(systems))


class RunConfig(object):
    """
    Arguments of one CLI run layered over fourcycles.config: budgets must
    be positive and input files must exist before any work starts.
    """

    INPUTS = ("input", "start", "source", "target", "certificate")

    def __init__(self, args):
        from fourcycles import config
        self.command = args.command
        self.order = getattr(args, "order", None)
        self.output = getattr(args, "out", None)
        self.max_states = getattr(args, "max_states", None) or config.BFS_MAX_STATES
        self.max_seconds = getattr(args, "max_seconds", None) or config.BFS_MAX_SECONDS
        self.verbosity = getattr(args, "verbose", 0)
        self.num_workers = getattr(args, "threads", None)
        self.inputs = {k: getattr(args, k) for k in self.INPUTS if getattr(args, k, None)}

    def validate(self):
        if self.max_states <= 0:
            raise ConfigurationError("max states: must be > 0, got %s" % self.max_states)
        if self.max_seconds <= 0:
            raise ConfigurationError("max seconds: must be > 0, got %s" % self.max_seconds)
        if self.num_workers is not None and self.num_workers < 0:
            raise ConfigurationError("threads: must be >= 0, got %s" % self.num_workers)
        orders = self.order if isinstance(self.order, list) else [self.order]
        for order in orders:
            if order is not None and order < 1:
                raise ConfigurationError("order: must be >= 1, got %s" % order)
        for name, path in self.inputs.items():
            if path not in catalog.REFERENCE_SYSTEMS and not os.path.exists(path):
                raise ConfigurationError("%s: no such file %s" % (name, path))
        return self
