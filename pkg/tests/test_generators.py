import random

from almost_chordal.chordal import is_chordal
from almost_chordal.generators import (
    random_almost_chordal,
    random_almost_interval,
    random_almost_split,
    random_chordal,
    random_interval,
    random_split,
)
from almost_chordal.fillin import exact_fillin
from almost_chordal.oracle import brute_force, is_interval_bf, is_split_bf


def test_base_classes():
    rng = random.Random(0)
    for _ in range(20):
        assert is_chordal(random_chordal(rng.randint(1, 12), rng))
        assert is_interval_bf(random_interval(rng.randint(1, 9), rng))
        assert is_split_bf(random_split(rng.randint(1, 9), rng))


def test_near_classes_respect_budget():
    rng = random.Random(1)
    for _ in range(20):
        k = rng.randint(1, 3)
        assert exact_fillin(random_almost_chordal(rng.randint(4, 11), k, rng), k) is not None
        assert brute_force("min-split-completion", random_almost_split(rng.randint(4, 10), k, rng), limit=k).value is not None
        G = random_almost_interval(rng.randint(4, 9), k, rng)
        assert brute_force("min-interval-completion", G, limit=k).value is not None


def test_seeded():
    a = random_almost_chordal(10, 2, random.Random(5))
    b = random_almost_chordal(10, 2, random.Random(5))
    assert a == b
