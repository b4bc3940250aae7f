import time
import unittest

from fourcycles.tests.fixtures import slow, rng, random_permutation, relabeled, part
from fourcycles import catalog
from fourcycles.decompose import reference_system, develop_cyclic, CyclicStarter, enumerate_systems
from fourcycles.model import Permutation, Bitrade, ConfigLabel, apply_permutation
from fourcycles.trades import classify_config, find_trades
from fourcycles.connectivity import ConnectivityError, BudgetExceeded, MoveGraphStats, MoveGraphExplorer, \
    system_symmetric_difference, neighbors, neighbor_keys, class_signature, bfs_connectivity, bfs_path, \
    spanning_tree_witnesses, InvalidInput, ConstructiveEngine, constructive_path, seed_path, hub_automorphism


class MoveTest(unittest.TestCase):

    def test_seed_path(self):
        path = seed_path()
        self.assertEqual(len(path), 2)
        self.assertEqual(path.start, reference_system("S1"))
        self.assertEqual(path.end, relabeled("S1", Permutation.transposition(9, 7, 9)))

    def test_bfs_path_finds_the_transposition(self):
        s1 = reference_system("S1")
        target = relabeled("S1", Permutation.transposition(9, 7, 9))
        path = bfs_path(s1, target)
        self.assertIsNotNone(path)
        self.assertLessEqual(len(path), 2)
        self.assertEqual(path.end, target)
        self.assertEqual(len(bfs_path(s1, s1)), 0)

    def test_symmetric_difference(self):
        s1 = reference_system("S1")
        t = Bitrade(part("1527 1829"), part("1529 1827"))
        self.assertEqual(system_symmetric_difference(s1, t.apply_to(s1)), t)
        self.assertIsNone(system_symmetric_difference(s1, s1))
        self.assertRaises(ConnectivityError, system_symmetric_difference, s1,
                          develop_cyclic(CyclicStarter(25, catalog.CYCLIC_STARTERS[25])))

    def test_neighbors(self):
        s1 = reference_system("S1")
        found = neighbors(s1)
        self.assertTrue(found)
        self.assertNotIn(s1, found)
        for s in found:
            self.assertTrue(s.validate())
            self.assertIsNotNone(system_symmetric_difference(s1, s))
        self.assertEqual(neighbor_keys(9, s1.key), sorted(s.key for s in found))

    def test_neighbors_commute_with_relabeling(self):
        g = rng(29)
        for label in ("S1", "S5"):
            s = reference_system(label)
            sigma = random_permutation(9, g)
            moved = set(apply_permutation(x, sigma) for x in neighbors(s))
            self.assertEqual(moved, set(neighbors(apply_permutation(s, sigma))))

    def test_class_signature_is_invariant(self):
        s = reference_system("S6")
        other = apply_permutation(s, random_permutation(9, rng(13)))
        self.assertEqual(class_signature(9, s.key), class_signature(9, other.key))

    def test_budget(self):
        stats = MoveGraphExplorer(max_states=50).explore(reference_system("S1"))
        self.assertFalse(stats.complete)
        self.assertIn("state budget", stats.reason)
        self.assertGreater(stats.vertex_count, 50)

    def test_budget_reports_class_coverage(self):
        stats = MoveGraphExplorer(max_states=2000).explore(reference_system("S1"))
        self.assertFalse(stats.complete)
        self.assertIn("state budget", stats.reason)
        self.assertIn("S1", stats.class_coverage)
        self.assertLessEqual(stats.class_coverage, set(catalog.REFERENCE_LABELS))
        self.assertIsNone(stats.component_count)

    def test_memory_budget(self):
        explorer = MoveGraphExplorer(max_memory_mb=1)
        explorer.check_every = 1
        stats = explorer.explore(reference_system("S1"))
        self.assertFalse(stats.complete)
        self.assertIn("memory budget", stats.reason)
        self.assertEqual(stats.class_coverage, {"S1"})
        self.assertRaises(BudgetExceeded, MoveGraphExplorer(max_states=5)._check_budget, set(range(6)),
                          time.time(), 1)

    def test_unresolved_classes_are_counted(self):
        s1 = reference_system("S1")
        signature = class_signature(9, s1.key)
        explorer = MoveGraphExplorer()
        explorer._signatures = {signature: {"S1", "S2"}}
        explorer.RESOLVE_LIMIT = 0
        stats = MoveGraphStats()
        explorer._cover(stats, s1.key, signature)
        self.assertEqual(stats.unresolved, 1)
        self.assertEqual(stats.unresolved_labels, {"S1", "S2"})
        self.assertEqual(stats.class_coverage, set())
        explorer.RESOLVE_LIMIT = 1
        explorer._cover(stats, s1.key, signature)
        self.assertEqual(stats.class_coverage, {"S1"})

    @slow
    def test_full_exploration(self):
        universe = set(s.key for s in enumerate_systems(9, "all"))
        self.assertEqual(len(universe), enumerate_systems(9, "count"))
        stats = bfs_connectivity(reference_system("S1"), universe=universe, max_states=2 * len(universe),
                                 max_seconds=24 * 3600, max_memory_mb=64 * 1024)
        self.assertTrue(stats.complete, stats.reason)
        self.assertEqual(stats.vertex_count, len(universe))
        self.assertEqual(stats.universe_size, len(universe))
        self.assertEqual(stats.component_count, 1)
        self.assertEqual(stats.class_coverage, set(catalog.REFERENCE_LABELS))


class TreeTest(unittest.TestCase):

    def test_witnesses(self):
        witnesses = spanning_tree_witnesses()
        self.assertEqual(len(witnesses), len(catalog.SPANNING_TREE))
        for w in witnesses:
            self.assertIsNotNone(w.bitrade)
            self.assertEqual(w.bitrade.volume, 3)
            self.assertTrue(w.check())
            self.assertIsNone(w.erratum)
            self.assertTrue(w.direct)
            self.assertEqual(str(w.config), w.stated)

    def test_s5_s7_edge(self):
        t = system_symmetric_difference(reference_system("S5"), reference_system("S7"))
        self.assertEqual(t.t1, part("3678 4596 5798"))
        self.assertEqual(t.t2, part("3698 4576 5879"))
        self.assertEqual(classify_config(t), ConfigLabel.F7_TDOUBLEPRIME)

    def test_edge_without_volume_3_trade(self):
        # S2 and S7 differ by a volume-5 trade
        t = system_symmetric_difference(reference_system("S2"), reference_system("S7"))
        self.assertEqual(t.volume, 5)

    @slow
    def test_substitute_path(self):
        w, = spanning_tree_witnesses(edges=[("S2", "S7", "F7-Tdoubleprime")])
        self.assertIn("volume-5", w.erratum)
        self.assertIsNotNone(w.path)
        self.assertTrue(w.check())
        self.assertEqual(w.path.end, reference_system("S7"))
        self.assertGreaterEqual(len(w.path), 2)

    def test_tree_spans_the_reference_systems(self):
        labels = set()
        for i, j, _ in catalog.SPANNING_TREE:
            labels.update((i, j))
        self.assertEqual(labels, set(catalog.REFERENCE_LABELS))


class ConstructiveTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.engine = ConstructiveEngine().setup()

    def test_hub_automorphism(self):
        sigma = hub_automorphism()
        hub = reference_system(catalog.HUB_SYSTEM)
        self.assertEqual(apply_permutation(hub, sigma), hub)
        self.assertEqual(apply_permutation(self.engine.hub, self.engine.hub_automorphism), self.engine.hub)

    def test_transposition_paths(self):
        self.assertEqual(set(self.engine.transposition_paths), set(
            Permutation.transposition(9, x, 9) for x in range(1, 9)))
        for t, path in self.engine.transposition_paths.items():
            self.assertEqual(path.start, self.engine.hub)
            self.assertEqual(path.end, apply_permutation(self.engine.hub, t))

    def test_permutation_path(self):
        p = random_permutation(9, rng(17))
        path = self.engine.permutation_path(p)
        self.assertEqual(path.end, apply_permutation(self.engine.hub, p))

    def check_paths(self, count, seed):
        g = rng(seed)
        for _ in range(count):
            i, j = g.choice(catalog.REFERENCE_LABELS), g.choice(catalog.REFERENCE_LABELS)
            a = relabeled(i, random_permutation(9, g))
            b = relabeled(j, random_permutation(9, g))
            path = self.engine.path(a, b)
            self.assertEqual(path.start, a)
            self.assertEqual(path.end, b)
            self.assertTrue(path.validate())
            for removed, _ in path.steps:
                self.assertIn(len(removed), (2, 3))

    def test_random_paths(self):
        self.check_paths(3, 19)

    @slow
    def test_many_random_paths(self):
        self.check_paths(100, 23)

    def test_same_system(self):
        a = reference_system("S3")
        self.assertEqual(len(constructive_path(a, a)), 0)

    def test_invalid_input(self):
        cyclic = develop_cyclic(CyclicStarter(25, catalog.CYCLIC_STARTERS[25]))
        self.assertRaises(InvalidInput, self.engine.path, cyclic, reference_system("S1"))
        self.assertRaises(InvalidInput, self.engine.path, "S1", reference_system("S1"))

    def test_seed_config(self):
        steps = seed_path().steps
        self.assertEqual(Bitrade(*steps[1]).volume, 2)
        from fourcycles.trades import classify_config
        self.assertEqual(classify_config(Bitrade(*steps[0])), ConfigLabel.F7_TDOUBLEPRIME)


if __name__ == '__main__':
    unittest.main()
