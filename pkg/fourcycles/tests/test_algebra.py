import unittest
from math import comb

from fourcycles.tests.fixtures import slow, part
from fourcycles import catalog
from fourcycles.model import Bitrade, cycle_count, pair_count
from fourcycles.decompose import reference_system
from fourcycles.trades import volume_witness, find_trades
from fourcycles.algebra import InclusionMatrix, TooSmall, build_matrix, bareiss_rank, modular_rank, \
    sparse_rank, exact_rank, nullity, trade_vector, in_kernel, double_diamond_configurations, \
    double_diamond_vectors, double_diamond_span, configuration_count, dense_vectors


class MatrixTest(unittest.TestCase):

    def test_shape(self):
        m = build_matrix(6)
        self.assertEqual(m.shape, (15, 45))
        self.assertEqual(m.to_dense().shape, (15, 45))
        self.assertRaises(TooSmall, InclusionMatrix, 3)

    def test_sums(self):
        for n in range(4, 10):
            m = InclusionMatrix(n)
            self.assertEqual(set(m.column_sums()), {4})
            # 2 of the 3 cycles on each 4-subset pass through a given edge
            self.assertEqual(set(m.row_sums()), {(n - 2) * (n - 3)})
            self.assertEqual(m.expected_row_sum(), (n - 2) * (n - 3))

    def test_text(self):
        lines = InclusionMatrix(5).to_text().splitlines()
        self.assertEqual(len(lines), 10)
        self.assertTrue(all(len(line.split()) == 15 for line in lines))
        self.assertEqual(lines[0].split()[:3], ["1", "1", "0"])


class RankTest(unittest.TestCase):

    def test_small_ranks(self):
        rows = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
        self.assertEqual(bareiss_rank(rows), 2)
        self.assertEqual(modular_rank(rows, 7), 2)
        self.assertEqual(sparse_rank([{0: 1, 1: 2, 2: 3}, {0: 2, 1: 4, 2: 6}, {0: 1, 2: 1}]), 2)
        self.assertEqual(bareiss_rank([]), 0)

    def test_modular_rank_can_drop(self):
        rows = [[2, 0], [0, 3]]
        self.assertEqual(modular_rank(rows, 2), 1)
        self.assertEqual(exact_rank(rows), 2)

    def test_full_row_rank(self):
        for n in range(5, 10):
            self.assertEqual(exact_rank(InclusionMatrix(n)), comb(n, 2))

    def test_nullity(self):
        self.assertEqual(nullity(InclusionMatrix(6)), 30)
        self.assertEqual(nullity(InclusionMatrix(9)), 342)
        self.assertEqual(nullity(InclusionMatrix(9)), cycle_count(9) - pair_count(9))

    @slow
    def test_full_row_rank_10(self):
        self.assertEqual(exact_rank(InclusionMatrix(10)), 45)


class KernelTest(unittest.TestCase):

    def test_trade_vectors(self):
        m = InclusionMatrix(9)
        rows = [catalog.DOUBLE_DIAMOND, catalog.TPRIME, catalog.TDOUBLEPRIME, catalog.TSTAR[:2],
                catalog.F8_5WAY[:2], (catalog.F6_PARTS["T1"], catalog.F6_PARTS["T2"])]
        for t1, t2 in rows:
            v = trade_vector(Bitrade(part(t1), part(t2)), 9, m)
            self.assertTrue(in_kernel(m, v))
            self.assertEqual(sorted(v.entries.values()), [-1] * len(part(t1)) + [1] * len(part(t1)))

    def test_scanned_trades(self):
        m = InclusionMatrix(9)
        for label in ("S1", "S8"):
            for t in find_trades(reference_system(label), "both"):
                self.assertTrue(in_kernel(m, trade_vector(t, 9, m)))

    def test_witness_vectors(self):
        m = InclusionMatrix(12)
        v = trade_vector(volume_witness(4).bitrade(0, 2), 12, m)
        self.assertTrue(in_kernel(m, v))
        self.assertEqual(len(v.support), 8)

    def test_too_small(self):
        t = Bitrade(part(catalog.F8_5WAY[0]), part(catalog.F8_5WAY[1]))
        self.assertRaises(TooSmall, trade_vector, t, 7)
        self.assertRaises(TooSmall, double_diamond_span, 5)

    def test_not_in_kernel(self):
        m = InclusionMatrix(6)
        self.assertFalse(in_kernel(m, {0: 1}))

    def test_double_diamond_vectors(self):
        self.assertEqual(sum(1 for _ in double_diamond_configurations(6)), 15)
        vectors = double_diamond_vectors(6)
        self.assertEqual(len(vectors), configuration_count(6))
        self.assertEqual(len(vectors), 45)
        dense = dense_vectors(vectors, cycle_count(6))
        self.assertEqual(dense.shape, (45, 45))
        self.assertTrue((dense.sum(axis=1) == 0).all())

    def test_span(self):
        for n in (6, 7):
            span = double_diamond_span(n)
            self.assertEqual(span.dd_vectors, configuration_count(n))
            self.assertEqual(span.nullity, cycle_count(n) - pair_count(n))
            self.assertLessEqual(span.generated_rank, span.nullity)
            self.assertTrue(span.line().startswith("%d, %d, " % (n, span.dd_vectors)))
            rank, null, spans = span
            self.assertEqual(spans, rank == null)


if __name__ == '__main__':
    unittest.main()
