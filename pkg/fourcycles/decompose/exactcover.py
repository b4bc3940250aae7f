"""
Exact cover search (Knuth's algorithm X over dict-of-sets).

Column selection is deterministic: the uncovered column with the fewest
candidate rows, ties broken by the lowest column id. Candidate rows are
tried in increasing row id.
"""


class ExactCover(object):

    def __init__(self, rows, columns):
        """
        rows: mapping row id -> columns covered by the row
        columns: columns to cover exactly once. Rows touching any other
        column are dropped.
        """
        self.columns = tuple(sorted(columns))
        colset = set(self.columns)
        self.rows = {}
        for r, cols in rows.items():
            cols = tuple(cols)
            if cols and all(c in colset for c in cols):
                self.rows[r] = cols

    def _fresh(self):
        X = {c: set() for c in self.columns}
        for r, cols in self.rows.items():
            for c in cols:
                X[c].add(r)
        return X

    def _select(self, X, r):
        removed = []
        for j in self.rows[r]:
            for i in X[j]:
                for k in self.rows[i]:
                    if k != j:
                        X[k].remove(i)
            removed.append(X.pop(j))
        return removed

    def _deselect(self, X, r, removed):
        for j in reversed(self.rows[r]):
            X[j] = removed.pop()
            for i in X[j]:
                for k in self.rows[i]:
                    if k != j:
                        X[k].add(i)

    @staticmethod
    def _choose(X):
        return min(X, key=lambda col: (len(X[col]), col))

    def branches(self):
        """(column, candidate rows) of the first branching step"""
        X = self._fresh()
        if not X:
            return (None, [])
        c = self._choose(X)
        return (c, sorted(X[c]))

    def solve(self, partial=()):
        """
        Yield every exact cover (as the tuple of chosen row ids, in choice
        order) extending the rows in partial.
        """
        X = self._fresh()
        for r in partial:
            if r not in self.rows or any(c not in X for c in self.rows[r]):
                return
            self._select(X, r)
        yield from self._search(X, list(partial))

    def _search(self, X, solution):
        if not X:
            yield tuple(solution)
            return
        c = self._choose(X)
        for r in sorted(X[c]):
            solution.append(r)
            removed = self._select(X, r)
            yield from self._search(X, solution)
            self._deselect(X, r, removed)
            solution.pop()

    def count(self, partial=()):
        return sum(1 for _ in self.solve(partial))

    def first(self, partial=()):
        return next(self.solve(partial), None)
