"""Shared fixtures: the seeded random-graph corpus and multiset helpers."""

from __future__ import annotations

import os

import numpy as np
import pytest

from signet.families import random_signed_graph

# Fixed 64-bit seed for every randomised sweep; override with SIGNET_SEED.
TEST_SEED = int(os.environ.get("SIGNET_SEED", str(0x9E3779B97F4A7C15)))
CORPUS_SIZE = 500
CORPUS_MAX_N = 8


def make_corpus(seed: int = TEST_SEED, size: int = CORPUS_SIZE, max_n: int = CORPUS_MAX_N):
    """Deterministic list of random signed graphs with n <= max_n and edge
    probability drawn from {0.2, 0.5, 0.8}."""
    rng = np.random.default_rng(seed)
    graphs = []
    for _ in range(size):
        n = int(rng.integers(1, max_n + 1))
        p = float(rng.choice([0.2, 0.5, 0.8]))
        graphs.append(random_signed_graph(rng, n, p))
    return graphs


@pytest.fixture(scope="session")
def corpus():
    return make_corpus()


def assert_multiset_close(actual, expected, tol: float = 1e-8):
    """Sorted elementwise comparison of two real multisets."""
    a = sorted(float(x) for x in actual)
    b = sorted(float(x) for x in expected)
    assert len(a) == len(b), f"multiset sizes differ: {len(a)} != {len(b)}"
    if a:
        worst = max(abs(x - y) for x, y in zip(a, b))
        assert worst <= tol, (
            f"multisets differ, worst gap {worst:.3e} > {tol:.1e}\n"
            f"  got:      {a}\n  expected: {b}"
        )
