"""Seeded random system corpus shared by the test suite and the scripts.

Every randomized check in the repository draws from here with an explicit
seed, so runs are reproducible byte for byte.
"""

from __future__ import annotations

import random

from .eqsys import Edge, ExpSystem

DEFAULT_SEED = 271828


def random_system(
    rng: random.Random,
    max_n: int = 4,
    max_edges: int = 5,
    coeff_bound: int = 2,
) -> ExpSystem:
    n = rng.randint(1, max_n)
    m = rng.randint(1, max_edges)
    edges = tuple(
        Edge(
            rng.randint(1, n),
            rng.randint(1, n),
            tuple(rng.randint(-coeff_bound, coeff_bound) for _ in range(n)),
        )
        for _ in range(m)
    )
    return ExpSystem(n, n, edges)


def system_corpus(count: int, seed: int = DEFAULT_SEED, **kwargs) -> list[ExpSystem]:
    rng = random.Random(seed)
    return [random_system(rng, **kwargs) for _ in range(count)]


def iter_systems(seed: int = DEFAULT_SEED, **kwargs):
    """Endless seeded stream, for callers that filter down to a target count."""
    rng = random.Random(seed)
    while True:
        yield random_system(rng, **kwargs)
