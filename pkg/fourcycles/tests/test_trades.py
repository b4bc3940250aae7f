import unittest

from fourcycles.tests.fixtures import slow, part, rng, random_permutation
from fourcycles import catalog
from fourcycles.decompose import reference_system, develop_cyclic, CyclicStarter
from fourcycles.model import Bitrade, MuWayTrade, ConfigLabel, apply_permutation, canonicalize_cycle
from fourcycles.trades import DegreeSolution, solve_degree_equations, is_graphical, max_foundation, \
    TradeGraph, complete_minus_matching, complete_bipartite, TradeError, Unsupported, \
    decompositions_of_union, find_trades, mates, may_have_mate, classify_config, labeled, extend_muway, \
    max_mu, muway_isomorphic, double_diamond_chain, volume_witness, configurations, \
    exhaustive_trade_census, volume2_configurations, CensusRunner


class DegreeTest(unittest.TestCase):

    def test_foundation_6(self):
        sols = solve_degree_equations(3, 6)
        self.assertEqual([s.x for s in sols], [{4: 6}])

    def test_foundation_7(self):
        sols = solve_degree_equations(3, 7)
        self.assertEqual([s.as_tuple((2, 4, 6)) for s in sols], [(4, 1, 2), (3, 3, 1), (2, 5, 0)])
        self.assertTrue(all(s.check() for s in sols))

    def test_foundation_8_with_two_degree_6(self):
        sols = solve_degree_equations(3, 8, min_counts={6: 2})
        self.assertEqual([s.as_tuple((2, 4, 6)) for s in sols], [(6, 0, 2)])
        self.assertEqual(sols[0].degree_sequence(), [6, 6, 2, 2, 2, 2, 2, 2])
        self.assertTrue(sols[0].is_graphical())

    def test_bounds(self):
        self.assertEqual(max_foundation(3), 9)
        self.assertEqual(solve_degree_equations(3, 10), [])
        self.assertRaises(ValueError, solve_degree_equations, 0, 6)
        self.assertRaises(ValueError, solve_degree_equations, 2, 3)

    def test_graphical(self):
        self.assertTrue(is_graphical([4, 4, 4, 4, 4, 4]))
        self.assertFalse(is_graphical([6, 2]))
        self.assertFalse(DegreeSolution(2, 4, {2: 0, 8: 2}).check())


class GraphTest(unittest.TestCase):

    def test_double_diamond_graph(self):
        g = TradeGraph(part(catalog.DOUBLE_DIAMOND[0]))
        self.assertEqual(g.volume, 2)
        self.assertEqual(g.foundation, 6)
        self.assertEqual(g.degree_sequence(), [4, 4, 2, 2, 2, 2])
        self.assertTrue(g.is_isomorphic(complete_bipartite(2, 4)))
        self.assertFalse(g.has_adjacent_degree2())

    def test_reference_graphs(self):
        self.assertTrue(TradeGraph(part(catalog.F6_PARTS["T1"])).is_isomorphic(complete_minus_matching(6)))
        self.assertTrue(TradeGraph(part(catalog.F8_5WAY[0])).is_isomorphic(complete_bipartite(2, 6)))
        self.assertEqual(TradeGraph(part(catalog.TPRIME[0])).degree_sequence(), [6, 4, 4, 4, 2, 2, 2])
        self.assertTrue(TradeGraph(part(catalog.TDOUBLEPRIME[0])).degree2_share_neighbour())
        self.assertFalse(TradeGraph(part(catalog.TSTAR[0])).degree2_share_neighbour())

    def test_shared_edge(self):
        self.assertRaises(ValueError, TradeGraph, part("1234 1235"))

    def test_automorphisms(self):
        # K_{2,4}: 2! * 4!
        g = TradeGraph(part(catalog.DOUBLE_DIAMOND[0]))
        self.assertEqual(sum(1 for _ in g.automorphisms()), 48)


class DecompositionTest(unittest.TestCase):

    def test_counts(self):
        self.assertEqual(len(decompositions_of_union(part(catalog.DOUBLE_DIAMOND[0]))), 3)
        self.assertEqual(len(decompositions_of_union(part(catalog.F6_PARTS["T1"]))), 7)
        # one per perfect matching of the 6 degree-2 vertices
        self.assertEqual(len(decompositions_of_union(part(catalog.F8_5WAY[0]))), 15)

    def test_input_is_a_decomposition(self):
        p = part(catalog.TPRIME[0])
        self.assertIn(p, decompositions_of_union(p))
        self.assertIn(part(catalog.TPRIME[1]), mates(p))

    def test_no_mate(self):
        # two cycles sharing one vertex
        p = part("1234 1567")
        self.assertFalse(may_have_mate(p))
        self.assertEqual(mates(p), [])
        self.assertRaises(TradeError, decompositions_of_union, part("1234 1235"))


class ClassificationTest(unittest.TestCase):

    def check_label(self, rows, expected):
        t = Bitrade(part(rows[0]), part(rows[1]))
        self.assertEqual(classify_config(t), expected)
        self.assertEqual(labeled(t).config, expected)

    def test_labels(self):
        self.check_label(catalog.DOUBLE_DIAMOND, ConfigLabel.DD)
        self.check_label((catalog.F6_PARTS["T1"], catalog.F6_PARTS["T2"]), ConfigLabel.F6)
        self.check_label(catalog.TPRIME, ConfigLabel.F7_TPRIME)
        self.check_label(catalog.TDOUBLEPRIME, ConfigLabel.F7_TDOUBLEPRIME)
        self.check_label(catalog.TSTAR[:2], ConfigLabel.F7_TSTAR)
        self.check_label((catalog.TSTAR[0], catalog.TSTAR[2]), ConfigLabel.F7_TSTAR)
        self.check_label(catalog.F8_5WAY[:2], ConfigLabel.F8)
        self.check_label(catalog.F8_DDCHAIN, ConfigLabel.F8_DDCHAIN)

    def test_reference_systems_classify(self):
        for label in catalog.REFERENCE_LABELS:
            for t in find_trades(reference_system(label), 3):
                self.assertNotEqual(classify_config(t), ConfigLabel.OTHER)

    def test_double_diamond_chain_inside_s5(self):
        t = Bitrade(part("1527 1829 3749"), part("1528 1739 2749"))
        self.assertTrue(t.t1 <= set(reference_system("S5").cycles))
        self.assertEqual(classify_config(t), ConfigLabel.F8_DDCHAIN)
        self.assertIn(t, find_trades(reference_system("S5"), 3))

    def test_volume_4(self):
        self.assertRaises(Unsupported, classify_config, volume_witness(4).bitrade(0, 1))

    def test_f6_extensions(self):
        f6 = catalog.F6_PARTS
        t = Bitrade(part(f6["T1"]), part(f6["T2"]))
        found = extend_muway(t)
        self.assertEqual(set(frozenset(m.parts) for m in found),
                         {frozenset(part(f6[k]) for k in ("T1", "T2", "T3")),
                          frozenset(part(f6[k]) for k in ("T1", "T2", "T4"))})
        self.assertEqual(len(extend_muway(t, up_to_isomorphism=True)), 2)
        self.assertFalse(muway_isomorphic(found[0], found[1]))

    def test_muway_isomorphic_under_relabeling(self):
        rows = catalog.DOUBLE_DIAMOND_3WAY
        a = MuWayTrade([part(r) for r in rows])
        b = MuWayTrade([part(r.replace("5", "7")) for r in rows])
        self.assertNotEqual(a, b)
        self.assertTrue(muway_isomorphic(a, b))

    def test_max_mu(self):
        self.assertEqual(max_mu(Bitrade(*(part(r) for r in catalog.DOUBLE_DIAMOND))), 3)
        self.assertEqual(max_mu(Bitrade(*(part(r) for r in catalog.F8_5WAY[:2]))), 5)

    def test_double_diamond_chain(self):
        chain = double_diamond_chain(part(catalog.F6_PARTS["T1"]), part(catalog.F6_PARTS["T2"]))
        self.assertEqual(len(chain), 3)
        self.assertEqual(chain[0], part(catalog.F6_PARTS["T1"]))
        for a, b in zip(chain, chain[1:]):
            self.assertEqual(len(a - b), 2)
        self.assertRaises(TradeError, double_diamond_chain, part(catalog.DOUBLE_DIAMOND[0]),
                          part(catalog.F6_PARTS["T1"]))

    def test_volume_witnesses(self):
        for s in range(2, 9):
            m = volume_witness(s)
            self.assertEqual(m.mu, 3)
            self.assertEqual(m.volume, s)
        self.assertRaises(Unsupported, volume_witness, 1)


class ScanTest(unittest.TestCase):

    def test_reference_system(self):
        s = reference_system("S1")
        trades = find_trades(s, "both")
        self.assertIn(Bitrade(part("1527 1829"), part("1529 1827")), trades)
        self.assertIn(Bitrade(part("2476 4589 6879"), part("2496 4587 6897")), trades)
        self.assertEqual(trades, sorted(trades, key=lambda t: t.sort_key()))
        for t in trades:
            self.assertTrue(all(c in s for c in t.t1))
            self.assertIn(t.volume, (2, 3))
            self.assertTrue(t.apply_to(s).validate())
        self.assertEqual(find_trades(s, 2), [t for t in trades if t.volume == 2])
        self.assertRaises(TradeError, find_trades, s, 4)

    def test_cyclic_25_avoids_small_trades(self):
        s = develop_cyclic(CyclicStarter(25, catalog.CYCLIC_STARTERS[25]))
        self.assertEqual(find_trades(s, 2, num_workers=1), [])
        labels = set(classify_config(t) for t in find_trades(s, 3, num_workers=1))
        self.assertNotIn(ConfigLabel.F7_TPRIME, labels)
        self.assertNotIn(ConfigLabel.F7_TDOUBLEPRIME, labels)

    @slow
    def test_cyclic_49_avoids_small_trades(self):
        s = develop_cyclic(CyclicStarter(49, catalog.CYCLIC_STARTERS[49]))
        self.assertEqual(find_trades(s, 2, num_workers=1), [])
        labels = set(classify_config(t) for t in find_trades(s, 3, num_workers=1))
        self.assertNotIn(ConfigLabel.F7_TPRIME, labels)
        self.assertNotIn(ConfigLabel.F7_TDOUBLEPRIME, labels)


class TradeInvariantTest(unittest.TestCase):

    def test_find_trades_commutes_with_relabeling(self):
        g = rng(23)
        for label in ("S1", "S5", "S8"):
            s = reference_system(label)
            sigma = random_permutation(9, g)
            moved = set(apply_permutation(t, sigma) for t in find_trades(s, "both"))
            self.assertEqual(moved, set(find_trades(apply_permutation(s, sigma), "both")))

    def test_reversed_trade_restores_the_system(self):
        s = reference_system("S2")
        self.assertTrue(find_trades(s, "both"))
        for t in find_trades(s, "both"):
            other = t.apply_to(s)
            self.assertNotEqual(other, s)
            self.assertTrue(other.validate())
            self.assertEqual(t.reversed().apply_to(other), s)

    def test_no_adjacent_degree_2_vertices(self):
        for label in catalog.REFERENCE_LABELS:
            for t in find_trades(reference_system(label), "both"):
                self.assertFalse(TradeGraph(t.t1).has_adjacent_degree2(), str(t))

    def test_tstar_decompositions(self):
        t1, t2, t3 = (part(r) for r in catalog.TSTAR)
        self.assertEqual(set(decompositions_of_union(t1)), {t1, t2, t3})
        self.assertEqual(set(mates(t1)), {t2, t3})
        self.assertTrue(t2 & t3)
        # one mate pair up to automorphism: (4 6) fixes T1 and swaps T2, T3
        graph = TradeGraph(t1)
        swaps = [iso for iso in graph.automorphisms()
                 if _image(t1, iso) == t1 and _image(t2, iso) == t3]
        self.assertTrue(swaps)


def _image(cycles, iso):
    return frozenset(canonicalize_cycle(*(iso[x] for x in c)) for c in cycles)


class CensusTest(unittest.TestCase):

    def test_configurations(self):
        for cycles in configurations(2, 6):
            edges = [e for c in cycles for e in c.edges]
            self.assertEqual(len(edges), len(set(edges)))
            self.assertEqual(set(x for c in cycles for x in c), set(range(1, 7)))

    def test_volume_2(self):
        found = volume2_configurations()
        self.assertEqual(len(found), 4)
        with_mate = [(f, g) for f, g, ok in found if ok]
        self.assertEqual(len(with_mate), 1)
        self.assertEqual(with_mate[0][0], 6)
        self.assertTrue(with_mate[0][1].is_isomorphic(complete_bipartite(2, 4)))

    def test_volume_3(self):
        self.assertEqual(exhaustive_trade_census(3), [(6, 1), (7, 3), (8, 2), (9, 0), (10, 0)])

    def test_runner(self):
        runner = CensusRunner(2)
        runner.run()
        self.assertEqual(runner.lines(), ["6 1 DD", "7 0 -", "8 0 -"])
        self.assertIn("foundation", runner.table())
        self.assertRaises(Unsupported, CensusRunner, 4)

    def test_labels_by_foundation(self):
        runner = CensusRunner(3, [7])
        runner.run()
        labels = set(str(c.label) for c in runner.results[0][1] if c.admits_mate)
        self.assertEqual(labels, {"F7-Tprime", "F7-Tdoubleprime", "F7-Tstar"})

    def test_labels_of_foundation_8(self):
        runner = CensusRunner(3, [8])
        runner.run()
        labels = sorted(str(c.label) for c in runner.results[0][1] if c.admits_mate)
        self.assertEqual(labels, ["F8", "F8-DDchain"])


if __name__ == '__main__':
    unittest.main()
