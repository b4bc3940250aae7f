import random


class InvalidPermutation(ValueError):
    pass


class Permutation(object):
    """
    A bijection on {1..n}. p(x) is the image of x.

    Composition follows the relabeling convention: p * q applies p first,
    then q, so that for any target X, (X^p)^q == X^(p*q).
    """
    __slots__ = ("_map",)

    def __init__(self, images, check=True):
        # _map[0] is a placeholder so vertices index it directly
        self._map = (0,) + tuple(images)
        if check and sorted(self._map[1:]) != list(range(1, len(self._map))):
            raise InvalidPermutation("not a bijection on 1..%d: %r" % (len(self._map) - 1, tuple(images)))

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1), check=False)

    @classmethod
    def from_cycles(cls, n, *cycles):
        """Permutation.from_cycles(9, (1,3,6), (7,9)) maps 1->3->6->1 and swaps 7, 9"""
        images = list(range(n + 1))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= n or x in seen:
                    raise InvalidPermutation("bad cycle %r on 1..%d" % (cyc, n))
                seen.add(x)
            for pos, x in enumerate(cyc):
                images[x] = cyc[(pos + 1) % len(cyc)]
        return cls(images[1:], check=False)

    @classmethod
    def transposition(cls, n, a, b):
        return cls.from_cycles(n, (a, b))

    @classmethod
    def random(cls, n, rng=None):
        images = list(range(1, n + 1))
        (rng or random).shuffle(images)
        return cls(images, check=False)

    @property
    def n(self):
        return len(self._map) - 1

    @property
    def images(self):
        return self._map[1:]

    @property
    def table(self):
        """images prefixed by a 0 placeholder, indexable by vertex"""
        return self._map

    def __call__(self, x):
        return self._map[x]

    def __len__(self):
        return self.n

    def __mul__(self, other):
        if self.n != other.n:
            raise InvalidPermutation("can't compose permutations of %d and %d points" % (self.n, other.n))
        omap = other._map
        return Permutation([omap[y] for y in self._map[1:]], check=False)

    def __pow__(self, power):
        result = Permutation.identity(self.n)
        base = self if power >= 0 else self.inverse()
        for _ in range(abs(power)):
            result = result * base
        return result

    def inverse(self):
        inv = [0] * len(self._map)
        for x, y in enumerate(self._map):
            inv[y] = x
        return Permutation(inv[1:], check=False)

    def conjugate(self, by):
        """by^-1 * self * by: for a transposition (a b) this is (by(a) by(b))"""
        return by.inverse() * self * by

    def is_identity(self):
        return all(x == y for x, y in enumerate(self._map))

    def cycles(self, singletons=False):
        out = []
        seen = set()
        for x in range(1, len(self._map)):
            if x in seen:
                continue
            cyc = [x]
            seen.add(x)
            y = self._map[x]
            while y != x:
                cyc.append(y)
                seen.add(y)
                y = self._map[y]
            if len(cyc) > 1 or singletons:
                out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._map == other._map

    def __hash__(self):
        return hash(self._map)

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(%s)" % " ".join(str(x) for x in cyc) for cyc in cycles)

    def __repr__(self):
        return "<Permutation %s on %d points>" % (self, self.n)

    @classmethod
    def parse(cls, text, n):
        """'(1 3 6)(7 9)' or '()' -> Permutation"""
        text = text.strip()
        cycles = []
        for chunk in text.replace(")", ")\n").splitlines():
            chunk = chunk.strip().strip("()").replace(",", " ")
            if chunk:
                cycles.append(tuple(int(x) for x in chunk.split()))
        return cls.from_cycles(n, *cycles)


def star_transpositions(perm, pivot):
    """
    Write perm as a product of transpositions all moving pivot, so that
    t1 * t2 * ... * tk == perm (t1 applied first). Returns the list of
    (x, pivot) pairs. A cycle (a1 a2 ... ak) avoiding pivot gives
    (a1 p)(a2 p)...(ak p)(a1 p); a cycle through pivot, written
    (p c2 ... ck), gives (p c2)(p c3)...(p ck).
    """
    factors = []
    for cyc in perm.cycles():
        if pivot in cyc:
            pos = cyc.index(pivot)
            cyc = cyc[pos:] + cyc[:pos]
            factors.extend((x, pivot) for x in cyc[1:])
        else:
            factors.extend((x, pivot) for x in cyc)
            factors.append((cyc[0], pivot))
    check = Permutation.identity(perm.n)
    for x, p in factors:
        check = check * Permutation.transposition(perm.n, x, p)
    if check != perm:
        raise InvalidPermutation("transposition product %r does not give %s" % (factors, perm))
    return factors
