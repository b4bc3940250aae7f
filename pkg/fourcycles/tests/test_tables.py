import unittest

from fourcycles.tables import TableCheck, check_tables


class TablesTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.checks = {c.name: c for c in check_tables()}

    def test_every_table_holds(self):
        failed = [c.line() for c in self.checks.values() if not c.ok]
        self.assertEqual(failed, [])

    def test_reference_rows(self):
        for label in ("S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8"):
            self.assertEqual(self.checks["system %s" % label].status, "ok")
        self.assertEqual(self.checks["8 classes"].status, "ok")

    def test_tree_edges(self):
        edges = [c for name, c in self.checks.items() if name.startswith("tree edge")]
        self.assertEqual(len(edges), 7)
        self.assertTrue(all(c.status == "ok" for c in edges))
        self.assertEqual(self.checks["tree edge S5-S7"].detail, "F7-Tdoubleprime")
        self.assertNotIn("tree edge S2-S7", self.checks)

    def test_constructions(self):
        for name in ("hub automorphism", "seed path", "cyclic 4-CS(25)", "cyclic 4-CS(49)", "F8 5-way",
                     "F6 double-diamond chain", "T* (T1,T3)", "T* double-diamond chain",
                     "F8 double-diamond chain"):
            self.assertEqual(self.checks[name].status, "ok", self.checks[name].line())

    def test_status(self):
        self.assertEqual(TableCheck("x", True).status, "ok")
        self.assertFalse(TableCheck("x", False).ok)
        self.assertTrue(TableCheck("x", "erratum").ok)
        self.assertTrue(TableCheck("x", "ok", "fine").line().startswith("x "))


if __name__ == '__main__':
    unittest.main()
