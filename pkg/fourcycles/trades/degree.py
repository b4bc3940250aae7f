"""
Degree-count equations of trade graphs, and graphicality.

A trade of volume s on foundation v has a union graph with v vertices and
4s edges, all degrees even and at least 2. Writing x[d] for the number of
vertices of degree d:

    sum(x[d]) = v        sum(d * x[d]) = 8s

and no trade has more than 2s vertices of degree 2.
"""
import networkx as nx


class DegreeSolution(object):

    __slots__ = ("volume", "foundation", "x")

    def __init__(self, volume, foundation, x):
        self.volume = volume
        self.foundation = foundation
        # only even degrees with a non-zero count are kept
        self.x = {d: c for d, c in sorted(x.items()) if c}

    def count(self, degree):
        return self.x.get(degree, 0)

    def degree_sequence(self):
        """Nonincreasing degree sequence"""
        seq = []
        for d in sorted(self.x, reverse=True):
            seq.extend([d] * self.x[d])
        return seq

    def is_graphical(self):
        return is_graphical(self.degree_sequence())

    def check(self):
        return (sum(self.x.values()) == self.foundation and
                sum(d * c for d, c in self.x.items()) == 8 * self.volume and
                all(d % 2 == 0 for d in self.x))

    def as_tuple(self, degrees=None):
        degrees = degrees or range(2, self.foundation, 2)
        return tuple(self.count(d) for d in degrees)

    def __eq__(self, other):
        return isinstance(other, DegreeSolution) and (self.volume, self.foundation, self.x) == \
            (other.volume, other.foundation, other.x)

    def __hash__(self):
        return hash((self.volume, self.foundation, tuple(self.x.items())))

    def __repr__(self):
        return "<DegreeSolution s=%d v=%d %s>" % (self.volume, self.foundation,
                                                 " ".join("x%d=%d" % (d, c) for d, c in self.x.items()) or "-")


def solve_degree_equations(s, v, min_counts=None):
    """
    Every nonnegative solution over the even degrees 2..v-1 with x[2] <= 2s,
    ordered by decreasing x[2]. min_counts ({degree: lower bound}) adds
    constraints such as {6: 2}.
    """
    if s < 1 or v < 4:
        raise ValueError("need s >= 1 and v >= 4 (got s=%s, v=%s)" % (s, v))
    min_counts = min_counts or {}
    degrees = list(range(2, v, 2))
    target = 8 * s
    solutions = []

    def search(pos, left_v, left_sum, acc):
        if pos == len(degrees):
            if left_v == 0 and left_sum == 0:
                solutions.append(DegreeSolution(s, v, dict(zip(degrees, acc))))
            return
        d = degrees[pos]
        upper = min(left_v, left_sum // d)
        if d == 2:
            upper = min(upper, 2 * s)
        for c in range(min_counts.get(d, 0), upper + 1):
            acc.append(c)
            search(pos + 1, left_v - c, left_sum - d * c, acc)
            acc.pop()

    search(0, v, target, [])
    solutions.sort(key=lambda sol: [-sol.count(d) for d in degrees])
    return solutions


def max_foundation(s):
    """Largest foundation allowed by x[2] <= 2s: every other vertex has degree >= 4"""
    # 2*x2 + 4*(v - x2) <= 8s  with x2 = 2s
    return 3 * s


def is_graphical(seq):
    """Erdos-Gallai verdict on a degree sequence"""
    seq = list(seq)
    if any(d < 0 for d in seq):
        return False
    return nx.is_graphical(seq, method="eg")
