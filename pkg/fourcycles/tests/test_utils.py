import gzip
import os
import tempfile
import unittest

from fourcycles.utils.common import iter_n, open_anyfile, timesofar
from fourcycles.utils.parallel_mp import run_parallel_on_iterable, agg_by_sum


def _square(x):
    return x * x


class CommonTest(unittest.TestCase):

    def test_iter_n(self):
        self.assertEqual(list(iter_n(range(7), 3)), [(0, 1, 2), (3, 4, 5), (6,)])
        self.assertEqual(list(iter_n([], 3)), [])
        # chunks only, no running count
        for chunk in iter_n(iter("abcd"), 2):
            self.assertIsInstance(chunk, tuple)
            self.assertEqual(len(chunk), 2)

    def test_open_anyfile(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "systems.txt.gz")
            with gzip.open(path, "wt") as fh:
                fh.write("1234\n")
            with open_anyfile(path) as fh:
                self.assertEqual(fh.read(), "1234\n")

    def test_timesofar(self):
        self.assertEqual(timesofar(0, 75), "1m15s")


class ParallelTest(unittest.TestCase):

    def test_serial_run(self):
        self.assertEqual(run_parallel_on_iterable(_square, range(5), chunk_size=2, num_workers=1),
                         [1, 4, 9, 16])
        self.assertEqual(run_parallel_on_iterable(_square, range(5), agg_function=agg_by_sum,
                                                  agg_function_init=0, chunk_size=2, num_workers=1), 30)
