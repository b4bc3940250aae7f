# -*- coding: utf-8 -*-
# Test settings: everything from the packaged defaults, with budgets sized
# for a test run. Slow acceptance tests only run when FOURCYCLE_SLOW=1.
from fourcycles.settings.default import *

LOG_LEVEL = "WARNING"
THREADS = 1

BFS_MAX_STATES = 200000
BFS_MAX_SECONDS = 600
BFS_FALLBACK_STATES = 20000
PATH_BFS_MAX_STATES = 50000
BFS_MEMORY_CHECK_EVERY = 1000

KERNEL_SPAN_ORDERS = (6, 7)
