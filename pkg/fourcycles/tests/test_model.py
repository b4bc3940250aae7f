import unittest
from math import comb

from fourcycles.tests.fixtures import rng, random_permutation, relabeled, part
from fourcycles.decompose import reference_system
from fourcycles.model import FourCycle, CycleSystem, Permutation, Bitrade, MuWayTrade, TradePath, \
    InvalidCycle, InvalidTrade, InvalidPath, NotADecomposition, OutOfRange, InvalidPermutation, \
    canonicalize_cycle, cycle_index, cycle_from_index, cycle_count, pair_count, edge_index, edge_from_index, \
    apply_permutation, star_transpositions, parse_compact, system_size, relabel


class CycleTest(unittest.TestCase):

    def test_canonical_form(self):
        # smallest vertex first, then its smaller neighbour
        self.assertEqual(canonicalize_cycle(1, 4, 5, 2), FourCycle(1, 2, 5, 4))
        self.assertEqual(canonicalize_cycle(5, 2, 1, 4), FourCycle(1, 2, 5, 4))
        self.assertEqual(canonicalize_cycle(3, 1, 2, 4), FourCycle(1, 2, 4, 3))
        self.assertEqual(parse_compact("1536"), FourCycle(1, 5, 3, 6))

    def test_dihedral_forms_agree(self):
        c = (7, 2, 9, 4)
        forms = [c[i:] + c[:i] for i in range(4)]
        forms += [f[::-1] for f in forms]
        self.assertEqual(len(set(canonicalize_cycle(*f) for f in forms)), 1)

    def test_invalid_cycles(self):
        self.assertRaises(InvalidCycle, canonicalize_cycle, 1, 2, 2, 3)
        self.assertRaises(InvalidCycle, canonicalize_cycle, 0, 1, 2, 3)

    def test_edge_index(self):
        n = 9
        self.assertEqual(edge_index(1, 2, n), 0)
        self.assertEqual(edge_index(2, 1, n), 0)
        self.assertEqual(edge_index(1, n, n), n - 2)
        self.assertEqual(edge_index(n - 1, n, n), comb(n, 2) - 1)
        self.assertEqual(edge_from_index(edge_index(4, 7, n), n), (4, 7))
        self.assertRaises(OutOfRange, edge_index, 3, 10, n)

    def test_cycle_index(self):
        self.assertEqual(cycle_index((1, 2, 3, 4), 9), 0)
        self.assertEqual(cycle_index((1, 2, 4, 3), 9), 1)
        self.assertEqual(cycle_index((1, 3, 2, 4), 9), 2)
        self.assertEqual(cycle_index((4, 3, 2, 1), 9), 0)
        self.assertEqual(cycle_count(9), 378)
        self.assertEqual(pair_count(9), 36)
        self.assertRaises(OutOfRange, cycle_index, (1, 2, 3, 10), 9)
        self.assertRaises(OutOfRange, cycle_from_index, cycle_count(6), 6)

    def test_cycle_indexing_is_a_bijection(self):
        n = 6
        seen = set()
        for i in range(cycle_count(n)):
            c = cycle_from_index(i, n)
            self.assertEqual(cycle_index(c, n), i)
            seen.add(c)
        self.assertEqual(len(seen), 3 * comb(n, 4))

    def test_edges(self):
        c = FourCycle(1, 2, 5, 4)
        self.assertEqual(c.edges, ((1, 2), (2, 5), (4, 5), (1, 4)))
        self.assertEqual(str(c), "1 2 5 4")
        self.assertEqual(c.compact, "1254")


class PermutationTest(unittest.TestCase):

    def test_composition_order(self):
        p = Permutation.transposition(9, 1, 2)
        q = Permutation.transposition(9, 2, 3)
        # p applied first
        self.assertEqual((p * q)(1), 3)
        self.assertEqual((q * p)(1), 2)

    def test_inverse_and_power(self):
        s = Permutation.from_cycles(9, (1, 3, 6, 8, 2, 5, 7, 9, 4))
        self.assertTrue((s * s.inverse()).is_identity())
        self.assertTrue((s ** 9).is_identity())
        self.assertFalse((s ** 3).is_identity())

    def test_conjugate_transposition(self):
        by = random_permutation(9)
        t = Permutation.transposition(9, 1, 2)
        self.assertEqual(t.conjugate(by), Permutation.transposition(9, by(1), by(2)))

    def test_parse_and_str(self):
        p = Permutation.parse("(1 3 6)(7 9)", 9)
        self.assertEqual(str(p), "(1 3 6)(7 9)")
        self.assertEqual(p(6), 1)
        self.assertEqual(str(Permutation.identity(9)), "()")
        self.assertRaises(InvalidPermutation, Permutation, (1, 1, 2))
        self.assertRaises(InvalidPermutation, Permutation.from_cycles, 9, (1, 2), (2, 3))

    def test_star_transpositions(self):
        g = rng(7)
        for _ in range(20):
            perm = random_permutation(9, g)
            product = Permutation.identity(9)
            for x, p in star_transpositions(perm, 9):
                self.assertEqual(p, 9)
                product = product * Permutation.transposition(9, x, p)
            self.assertEqual(product, perm)


class SystemTest(unittest.TestCase):

    def test_reference_rows_are_systems(self):
        for label in ("S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8"):
            s = reference_system(label)
            self.assertEqual(len(s), 9)
            self.assertTrue(s.validate())
        self.assertEqual(system_size(9), 9)
        self.assertEqual(system_size(17), 34)

    def test_double_coverage_names_an_edge(self):
        cycles = [c for c in reference_system("S1").cycles if c != parse_compact("6879")]
        cycles.append(parse_compact("6897"))
        with self.assertRaises(NotADecomposition) as cm:
            CycleSystem(9, cycles)
        e = cm.exception.edge
        self.assertIn((e.u, e.v), [(6, 7), (8, 9)])

    def test_missing_edge(self):
        cycles = list(reference_system("S1").cycles)[1:]
        with self.assertRaises(NotADecomposition) as cm:
            CycleSystem(9, cycles)
        self.assertIsNotNone(cm.exception.edge)

    def test_relabeling_composes(self):
        g = rng(11)
        s = reference_system("S4")
        for _ in range(5):
            p = random_permutation(9, g)
            q = random_permutation(9, g)
            self.assertEqual(apply_permutation(apply_permutation(s, p), q), apply_permutation(s, p * q))
            self.assertTrue(apply_permutation(s, p).validate())
        self.assertEqual(relabel(s, tuple(range(1, 10))), s)

    def test_text(self):
        s = reference_system("S1")
        lines = s.to_text().splitlines()
        self.assertEqual(lines[0], "1 2 3 4")
        self.assertEqual(lines[-1], "")
        self.assertEqual(len(lines), 10)


class TradeTest(unittest.TestCase):

    def test_double_diamond(self):
        t = Bitrade(part("1234 1536"), part("1235 1436"))
        self.assertEqual(t.volume, 2)
        self.assertEqual(t.foundation, 6)
        self.assertEqual(t.reversed().t1, t.t2)

    def test_not_a_bitrade(self):
        self.assertRaises(InvalidTrade, Bitrade, part("1234 1536"), part("1234 1536"))
        self.assertRaises(InvalidTrade, Bitrade, part("1234 1536"), part("1235 1437"))
        self.assertRaises(InvalidTrade, Bitrade, part("1234"), part("1235 1436"))

    def test_muway(self):
        m = MuWayTrade([part("1234 1536"), part("1235 1436"), part("1236 1435")])
        self.assertEqual(m.mu, 3)
        self.assertEqual(m.volume, 2)
        self.assertEqual(m.bitrade(0, 2).t2, part("1236 1435"))
        self.assertRaises(InvalidTrade, MuWayTrade, [part("1234 1536"), part("1234 1536")])

    def test_apply_to_system(self):
        s = reference_system("S1")
        t = Bitrade(part("1527 1829"), part("1529 1827"))
        after = t.apply_to(s)
        self.assertTrue(after.validate())
        self.assertEqual(t.reversed().apply_to(after), s)
        self.assertRaises(InvalidTrade, t.reversed().apply_to, s)


class TradePathTest(unittest.TestCase):

    def setUp(self):
        self.s1 = reference_system("S1")
        self.steps = [(part("2476 4589 6879"), part("2496 4587 6897")),
                      (part("1527 1829"), part("1529 1827"))]

    def test_replay(self):
        path = TradePath(self.s1, self.steps)
        self.assertEqual(len(path), 2)
        self.assertEqual(path.end, relabeled("S1", Permutation.transposition(9, 7, 9)))
        self.assertEqual(len(list(path.systems())), 3)
        self.assertEqual(path.reversed().end, self.s1)

    def test_broken_step(self):
        steps = [self.steps[1], (part("2476 4589 6879"), part("2496 4587 6897"))]
        steps[0] = (part("1527 1839"), part("1539 1827"))
        with self.assertRaises(InvalidPath) as cm:
            TradePath(self.s1, steps)
        self.assertEqual(cm.exception.step, 0)

    def test_simplified(self):
        there = TradePath(self.s1, self.steps)
        loop = there + there.reversed()
        self.assertEqual(len(loop), 4)
        self.assertEqual(len(loop.simplified()), 0)
        self.assertEqual(loop.simplified().end, self.s1)

    def test_translation(self):
        p = random_permutation(9)
        path = apply_permutation(TradePath(self.s1, self.steps), p)
        self.assertTrue(path.validate())
        self.assertEqual(path.start, apply_permutation(self.s1, p))


if __name__ == '__main__':
    unittest.main()
