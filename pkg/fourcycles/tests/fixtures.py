"""
Shared helpers for the test suite.
"""
import os
import random
import unittest

from fourcycles.decompose import reference_system
from fourcycles.model import Permutation, apply_permutation
from fourcycles.trades import parse_part

SLOW = os.environ.get("FOURCYCLE_SLOW") == "1"
slow = unittest.skipUnless(SLOW, "slow acceptance test, set FOURCYCLE_SLOW=1 to run")

SEED = 20170515


def rng(seed=SEED):
    return random.Random(seed)


def random_permutation(n=9, generator=None):
    return Permutation.random(n, generator or rng())


def relabeled(label, sigma):
    return apply_permutation(reference_system(label), sigma)


def part(row):
    return parse_part(row)
