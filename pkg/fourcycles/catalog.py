# -*- coding: utf-8 -*-
'''Reference systems, trades and constructions, transcribed verbatim from the
literature. Cycles are written compactly ("1536" is the cycle 1-5-3-6-1).
Nothing here is trusted: fourcycles.tables.check_tables() and the test
suite re-validate every entry.'''

# *****************************************************************************
# The 8 non-isomorphic 4-CS(9)
# *****************************************************************************
REFERENCE_SYSTEMS = {
    "S1": "1234 1356 1527 1829 2476 3648 3759 4589 6879",
    "S2": "1234 1356 1527 1829 2476 3687 3849 4596 5798",
    "S3": "1234 1356 1527 1829 2486 3647 3859 4579 6789",
    "S4": "1234 1356 1527 1829 2486 3647 3879 4589 5769",
    "S5": "1234 1356 1527 1829 2486 3678 3749 4596 5798",
    "S6": "1234 1356 1527 1829 2486 3678 3759 4589 4697",
    "S7": "1234 1356 1527 1829 2486 3698 3749 4576 5879",
    "S8": "1234 1356 1527 1849 2458 2689 3678 3759 4697",
}
REFERENCE_LABELS = tuple(sorted(REFERENCE_SYSTEMS))

# *****************************************************************************
# Trades of volume 2
# *****************************************************************************
# the double-diamond (D1, D2)
DOUBLE_DIAMOND = ("1234 1536", "1235 1436")
# 3-way trade of volume 2, foundation 6
DOUBLE_DIAMOND_3WAY = ("1234 1536", "1235 1436", "1236 1435")

# *****************************************************************************
# Trades of volume 3
# *****************************************************************************
# foundation 6: union graph is K_6 minus a perfect matching. (T1,T2,T3) and
# (T1,T2,T4) are the two 3-way extensions of (T1,T2)
F6_PARTS = {
    "T1": "1324 1536 2546",
    "T2": "1326 1425 3546",
    "T3": "1354 2364 1526",
    "T4": "1364 2354 1526",
}
# the two double-diamond moves taking F6 T1 to T2
F6_DOUBLE_DIAMOND_CHAIN = (
    ("1536 2546", "1526 3546"),
    ("1526 1324", "1326 1425"),
)

# foundation 7, degree sequence <2,2,2,4,4,4,6>
TPRIME = ("7145 7256 7364", "7146 7254 7365")
# foundation 7, degree sequence <2,2,4,4,4,4,4>, degree-2 vertices share a neighbour
TDOUBLEPRIME = ("1364 2375 4567", "1374 2365 4576")
# foundation 7, degree sequence <2,2,4,4,4,4,4>, degree-2 vertices share no neighbour
TSTAR = ("1375 2436 5476", "1365 2476 4573", "5134 7365 6247")

# foundation 8: union graph K_{2,6} on {7,8} x {1..6}, a 5-way trade
F8_5WAY = (
    "1728 3748 5768",
    "1738 2758 4768",
    "1748 2768 3758",
    "1758 2748 3768",
    "1768 2738 4758",
)
# foundation 8, degree sequence <2,2,2,2,4,4,4,4>: two double-diamond moves
# through 1234 1536 2748 chained into one volume-3 bitrade
F8_DDCHAIN = ("1235 1436 2748", "1274 1536 2348")

# *****************************************************************************
# Moves between the reference systems
# *****************************************************************************
# spanning tree over S1..S8, each edge a volume-3 bitrade of the given kind
SPANNING_TREE = (
    ("S1", "S6", "F7-Tprime"),
    ("S3", "S4", "F7-Tprime"),
    ("S4", "S6", "F7-Tprime"),
    ("S5", "S6", "F7-Tprime"),
    ("S6", "S8", "F7-Tprime"),
    ("S2", "S5", "F7-Tdoubleprime"),
    ("S5", "S7", "F7-Tdoubleprime"),
)

# S1 -> S1^(7 9) in two moves: a T'' trade then a double-diamond
SEED_SYSTEM = "S1"
SEED_TRANSPOSITION = (7, 9)
SEED_PATH = (
    ("2476 4589 6879", "2496 4587 6897"),
    ("1527 1829", "1529 1827"),
)

# S8 is claimed to be fixed by this 9-cycle; conjugating the seed
# transposition by its powers yields (9 4), (4 1), (1 3), ...
HUB_SYSTEM = "S8"
HUB_AUTOMORPHISM = (1, 3, 6, 8, 2, 5, 7, 9, 4)

# *****************************************************************************
# Cyclic 4-CS(n) free of double-diamonds, T' and T'' (0-based labels)
# *****************************************************************************
CYCLIC_STARTERS = {
    25: ((0, 3, 1, 12), (0, 4, 10, 17), (0, 1, 6, 15)),
    49: ((0, 23, 20, 29), (0, 22, 17, 32), (0, 4, 12, 37),
         (0, 18, 46, 36), (0, 30, 44, 11), (0, 1, 8, 2)),
}


def split(row):
    """'1234 1536' -> ['1234', '1536']"""
    return row.split()
