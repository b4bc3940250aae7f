# -*- coding: utf-8 -*-
# Default settings for fourcycles. Copy this module, edit values and point
# $FOURCYCLE_SETTINGS (or fourcycles.config_for_app()) at the copy.
import os

from fourcycles import ConfigurationDefault, ConfigurationValue

# *****************************************************************************
# Logging
# *****************************************************************************
# folder where log files go; no log file is written when left to None
LOG_FOLDER = ConfigurationDefault(
        default=ConfigurationValue("os.environ.get('FOURCYCLE_LOG_FOLDER')"),
        desc="Folder for log files, none by default")
LOG_LEVEL = "INFO"

# *****************************************************************************
# Workers
# *****************************************************************************
THREADS = ConfigurationDefault(
        default=ConfigurationValue("int(os.environ.get('FOURCYCLE_THREADS', 0))"),
        desc="Max number of worker processes, 0 means one per cpu")
# number of top-level branches or leading cycles sent to a worker at once
CHUNK_SIZE = 4

# *****************************************************************************
# Enumeration and classification
# *****************************************************************************
# largest order accepted by enumerate_systems(mode="all"|"count")
ENUMERATION_MAX_ORDER = 9
# "pruned" fixes a cycle onto (1,2,3,4) before relabeling the rest,
# "exhaustive" walks all n! relabelings
CANONICAL_METHOD = "pruned"

# *****************************************************************************
# Move graph search
# *****************************************************************************
BFS_MAX_STATES = 5000000
BFS_MAX_SECONDS = 3600
BFS_MAX_MEMORY_MB = 8192
# states explored by "connectivity --classes-only"
BFS_FALLBACK_STATES = 100000
# budget for bfs_path() and for constructive fallbacks
PATH_BFS_MAX_STATES = 200000
# check memory every N expanded states
BFS_MEMORY_CHECK_EVERY = 5000

# *****************************************************************************
# Trades
# *****************************************************************************
CENSUS_FOUNDATIONS = (6, 10)

# *****************************************************************************
# Linear algebra
# *****************************************************************************
# two primes above 2**20 and below 2**31 so int64 products can't overflow
RANK_PRIMES = (1048583, 2147483647)
RANK_MAX_ORDER = 12
KERNEL_SPAN_ORDERS = (6, 9)

# *****************************************************************************
# Reports
# *****************************************************************************
# "table" renders with prettytable, "plain" prints raw lines
REPORT_FORMAT = "table"
