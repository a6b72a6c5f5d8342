"""Exact spanning-tree counts and baobab-multiplicity bounds.

Everything here is exact: Python ints for counts, Fractions for bounds.
The Matrix-Tree route (eigenvalue product / vertex count) is cross-
checked by a fraction-free Kirchhoff-minor determinant.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from qcube.codes import GeneratorMatrix, wedge_weight
from qcube.errors import InexactDivisionError, OutOfRangeError, TooLargeError
from qcube.graphs import QuotientGraph, laplacian
from qcube.spectra import SpectrumTable

DETERMINANT_LIMIT = 512
HYPERCUBE_LIMIT = 20


def tree_count_from_spectrum(s: SpectrumTable) -> int:
    """Matrix-Tree theorem: product of nonzero eigenvalues over vertex count."""
    vertices = sum(s.values())
    product = 1
    for lam, mult in s.items():
        if lam:
            product *= lam**mult
    count, remainder = divmod(product, vertices)
    if remainder:
        raise InexactDivisionError(
            f"eigenvalue product {product} not divisible by vertex count {vertices}"
        )
    return count


def tree_count_hypercube(n: int) -> int:
    """Closed-form spanning-tree count of the n-cube:
    (1/2^n) * prod_j (2j)^C(n,j)."""
    if not 1 <= n <= HYPERCUBE_LIMIT:
        raise OutOfRangeError(f"n must be in 1..{HYPERCUBE_LIMIT}")
    product = 1
    for j in range(1, n + 1):
        product *= (2 * j) ** math.comb(n, j)
    count, remainder = divmod(product, 1 << n)
    if remainder:
        raise InexactDivisionError("hypercube product not divisible by 2^n")
    return count


def _bareiss_determinant(matrix: list[list[int]]) -> int:
    """Fraction-free Bareiss elimination; exact integer determinant."""
    m = [row[:] for row in matrix]
    size = len(m)
    if size == 0:
        return 1
    previous_pivot = 1
    sign = 1
    for col in range(size - 1):
        if m[col][col] == 0:
            swap = next((i for i in range(col + 1, size) if m[i][col]), None)
            if swap is None:
                return 0
            m[col], m[swap] = m[swap], m[col]
            sign = -sign
        pivot = m[col][col]
        pivot_row = m[col]
        for i in range(col + 1, size):
            row = m[i]
            factor = row[col]
            for j in range(col + 1, size):
                row[j] = (row[j] * pivot - factor * pivot_row[j]) // previous_pivot
            row[col] = 0
        previous_pivot = pivot
    return sign * m[size - 1][size - 1]


def tree_count_determinant(g: QuotientGraph) -> int:
    """Kirchhoff's theorem: determinant of the Laplacian minus row/column 0."""
    if g.vertex_count > DETERMINANT_LIMIT:
        raise TooLargeError(f"determinant oracle limited to {DETERMINANT_LIMIT} vertices")
    L = laplacian(g)
    minor = [[int(L[i, j]) for j in range(1, g.vertex_count)] for i in range(1, g.vertex_count)]
    return _bareiss_determinant(minor)


@dataclass(frozen=True)
class BaobabBounds:
    """Multiplicity bounds for baobabs (spanning tree + k designated cycles).

    naive = trees * 2^((n-1)k) counts every (tree, cycle-class choice)
    pair; the true multiplicity lies in [lower, upper] once overcounting
    from trees sharing cycles is divided out. Wedge subsets whose
    intersection weight is zero contribute no overlap and are skipped.
    """

    trees: int
    naive: int
    lower: Fraction
    upper: Fraction
    zero_wedge_terms_skipped: tuple[tuple[int, ...], ...]

    @property
    def lower_floor(self) -> int:
        return math.floor(self.lower)


def baobab_bounds(code: GeneratorMatrix, s: SpectrumTable) -> BaobabBounds:
    """Eq-20-style sandwich around the baobab multiplicity.

    lower = naive / ceil((2^n + k - 1)/k)^k  (equal-size spanning cycles),
    upper = naive / prod over nonempty generator subsets S of
            wedge(S)^((-1)^(|S|-1))          (smallest, maximally shared cycles).
    For k = 0 both collapse to the tree count.
    """
    n, k = code.n, code.k
    trees = tree_count_from_spectrum(s)
    naive = trees * (1 << ((n - 1) * k))

    if k == 0:
        one = Fraction(naive)
        return BaobabBounds(trees=trees, naive=naive, lower=one, upper=one,
                            zero_wedge_terms_skipped=())

    max_trees_per_baobab = (((1 << n) + k - 1 + k - 1) // k) ** k
    lower = Fraction(naive, max_trees_per_baobab)

    overlap = Fraction(1)
    skipped = []
    for q in range(1, k + 1):
        for subset in itertools.combinations(range(k), q):
            w = wedge_weight(code, subset)
            if w == 0:
                skipped.append(subset)
                continue
            exponent = 1 if q % 2 else -1
            overlap *= Fraction(w) ** exponent
    upper = naive / overlap
    return BaobabBounds(
        trees=trees,
        naive=naive,
        lower=lower,
        upper=upper,
        zero_wedge_terms_skipped=tuple(skipped),
    )
