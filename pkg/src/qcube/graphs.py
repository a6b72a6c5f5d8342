"""Coset Cayley graphs of Z2^N modulo a doubly even code.

Vertices are cosets, identified by their lexicographically smallest
member (= smallest integer under the MSB-first bit convention) and then
densely indexed by sorting those representatives. Edges come in N color
classes, color c flipping column c.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from qcube import kernels
from qcube.codes import GeneratorMatrix, column_mask, gf2_row_reduce, span, validate_doubly_even
from qcube.errors import InvalidCodeError, TooLargeError

BUILD_LIMIT = 20        # max n for graph construction (2^n vertices)
ISOMORPHISM_LIMIT = 64  # max vertices for the exact isomorphism search


@dataclass(frozen=True, eq=False)
class QuotientGraph:
    """Immutable N-regular graph on 2^n coset vertices.

    neighbors[v, c] is the dense index of the color-c neighbor of vertex
    v; reps[v] is the canonical coset representative.
    """

    n: int
    k: int
    reps: tuple[int, ...]
    neighbors: np.ndarray = field(repr=False)

    @property
    def length(self) -> int:
        return self.n + self.k

    @property
    def vertex_count(self) -> int:
        return len(self.reps)

    def vertex_index(self, word: int) -> int:
        """Dense index of the coset containing an arbitrary word (the word
        must already be a canonical representative)."""
        i = int(np.searchsorted(self._rep_array, word))
        if i >= len(self.reps) or self.reps[i] != word:
            raise KeyError(f"{word:#x} is not a canonical representative")
        return i

    @property
    def _rep_array(self) -> np.ndarray:
        return np.asarray(self.reps, dtype=np.int64)

    def edges(self) -> list[tuple[int, int, int]]:
        """All edges as (u, v, color) with u < v, sorted."""
        out = []
        for u in range(self.vertex_count):
            for c in range(self.length):
                v = int(self.neighbors[u, c])
                if u < v:
                    out.append((u, v, c))
        return sorted(out)

    def bipartition(self) -> np.ndarray:
        """0/1 class per vertex: parity of the representative's weight."""
        return np.array([r.bit_count() & 1 for r in self.reps], dtype=np.int8)


def build_quotient(code: GeneratorMatrix) -> QuotientGraph:
    """Quotient the (n+k)-cube by the code.

    The code must validate (doubly even, independent rows); minimum span
    weight 4 then guarantees a simple N-regular graph.
    """
    report = validate_doubly_even(code)
    if not report.ok:
        raise InvalidCodeError(
            f"{len(report.weight_violations)} weight violations, "
            f"{len(report.dependencies)} dependencies"
        )
    n, length = code.n, code.length
    if n > BUILD_LIMIT:
        raise TooLargeError(f"2^{n} vertices exceeds the n<={BUILD_LIMIT} build limit")

    coset = span(code)
    _, pivots = gf2_row_reduce(code.rows, length)
    free_masks = [column_mask(c, length) for c in range(length) if c not in set(pivots)]

    # one representative per coset: words supported on the free columns
    base = np.zeros(1 << n, dtype=np.int64)
    for bit, mask in enumerate(free_masks):
        half = 1 << bit
        base[half : 2 * half] = base[:half] | mask
    if code.k:
        reps = sorted(kernels.coset_minima(base.tolist(), coset))
    else:
        reps = base.tolist()
        reps.sort()
    rep_array = np.asarray(reps, dtype=np.int64)

    neighbors = np.empty((1 << n, length), dtype=np.int64)
    for c in range(length):
        flipped = (rep_array ^ column_mask(c, length)).tolist()
        canon = kernels.coset_minima(flipped, coset) if code.k else flipped
        neighbors[:, c] = np.searchsorted(rep_array, np.asarray(canon, dtype=np.int64))

    return QuotientGraph(n=n, k=code.k, reps=tuple(reps), neighbors=neighbors)


def laplacian(g: QuotientGraph) -> np.ndarray:
    """Integer Laplacian L = N*I - A on the dense vertex indexing."""
    V = g.vertex_count
    L = np.zeros((V, V), dtype=np.int64)
    for u in range(V):
        L[u, u] = g.length
        for c in range(g.length):
            L[u, g.neighbors[u, c]] -= 1
    return L


# --- exact isomorphism on small graphs ---

def _adjacency_sets(g: QuotientGraph) -> list[frozenset[int]]:
    return [frozenset(int(v) for v in g.neighbors[u]) for u in range(g.vertex_count)]


def _refine_colors(adj: list[frozenset[int]], colors: list[int]) -> list[int]:
    """Iterated neighborhood color refinement (1-dim Weisfeiler-Leman)."""
    V = len(adj)
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in adj[v])))
            for v in range(V)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def is_isomorphic_small(a: QuotientGraph, b: QuotientGraph) -> bool:
    """Exact isomorphism test (colors ignored) for graphs of <= 64 vertices."""
    if a.vertex_count > ISOMORPHISM_LIMIT or b.vertex_count > ISOMORPHISM_LIMIT:
        raise TooLargeError(f"isomorphism search limited to {ISOMORPHISM_LIMIT} vertices")
    if a.vertex_count != b.vertex_count or a.length != b.length:
        return False

    # spectral screen: cospectrality is necessary
    spec_a = np.sort(np.linalg.eigvalsh(laplacian(a).astype(float)))
    spec_b = np.sort(np.linalg.eigvalsh(laplacian(b).astype(float)))
    if not np.allclose(spec_a, spec_b, atol=1e-6):
        return False

    adj_a = _adjacency_sets(a)
    adj_b = _adjacency_sets(b)
    V = len(adj_a)
    colors_a = _refine_colors(adj_a, [0] * V)
    colors_b = _refine_colors(adj_b, [0] * V)
    if sorted(colors_a) != sorted(colors_b):
        return False

    # order a's vertices so each one touches the mapped prefix when possible
    order: list[int] = []
    seen = [False] * V
    for start in range(V):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        while stack:
            v = stack.pop()
            order.append(v)
            for u in sorted(adj_a[v]):
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)

    mapping = [-1] * V
    used = [False] * V

    def extend(pos: int) -> bool:
        if pos == V:
            return True
        v = order[pos]
        mapped_nbrs = [mapping[u] for u in adj_a[v] if mapping[u] >= 0]
        if mapped_nbrs:
            candidates = set(adj_b[mapped_nbrs[0]])
            for w in mapped_nbrs[1:]:
                candidates &= adj_b[w]
        else:
            candidates = set(range(V))
        for target in sorted(candidates):
            if used[target] or colors_b[target] != colors_a[v]:
                continue
            if any(mapping[u] >= 0 and mapping[u] not in adj_b[target] for u in adj_a[v]):
                continue
            mapping[v] = target
            used[target] = True
            if extend(pos + 1):
                return True
            used[target] = False
            mapping[v] = -1
        return False

    return extend(0)
