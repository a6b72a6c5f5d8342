import random

import pytest

from qcube.codes import GeneratorMatrix, hypercube_code, kmax, parse_code

# Anchor codes used across the suite.
C4 = parse_code("1111")

E8 = parse_code("""
11110000
00111100
00001111
01010101
""")

# Cospectral, column-permutation-equivalent pair (columns 1 and 5 swapped).
PAIR_EQUIVALENT = (
    parse_code("10000111\n10110100\n01111000"),
    parse_code("00001111\n00111100\n11110000"),
)

# Same lengths, distinct spectra.
PAIR_DISTINCT = (
    parse_code("00001111\n00111100\n01010101"),
    parse_code("00001111\n00111100\n11110000"),
)

# Nested quotients of the 4-cube: n = 4 fixed, k = 0..4.
NESTED_FAMILY = (
    hypercube_code(4),
    parse_code("11110"),
    parse_code("111100\n001111"),
    parse_code("1111000\n0011110\n1010101"),
    parse_code("11110000\n00111100\n10101010\n00001111"),
)


def random_doubly_even_code(rng: random.Random, length: int, k: int | None = None) -> GeneratorMatrix:
    """A uniform-ish random doubly even code by greedy orthogonal extension."""
    target = rng.randint(1, kmax(length)) if k is None else k
    candidates = [w for w in range(1, 1 << length) if w.bit_count() % 4 == 0]
    while True:
        rng.shuffle(candidates)
        gens: list[int] = []
        span = {0}
        for w in candidates:
            if w in span:
                continue
            if any((w & g).bit_count() % 2 for g in gens):
                continue
            gens.append(w)
            span |= {s ^ w for s in span}
            if len(gens) == target:
                return GeneratorMatrix(n=length - target, k=target, rows=tuple(sorted(gens)))
        # target unreachable from this shuffle; try again
        target = max(1, target - 1)


@pytest.fixture
def rng():
    return random.Random(20260810)
