"""Independent brute-force oracles used by the test suite.

Everything here is deliberately naive and self-contained: no imports
from qcube, so a bug in the package cannot hide inside its own oracle.
Bit convention matches the package (column j of an N-column word is bit
N-1-j).
"""

import itertools


def popcount(x):
    return bin(x).count("1")


def xor_span(rows):
    """The full XOR closure of a list of int words, as a sorted list."""
    words = {0}
    for r in rows:
        words |= {w ^ r for w in words}
    return sorted(words)


def naive_dual_span(rows, length):
    """All words of length N orthogonal (mod 2) to every generator."""
    return [
        u
        for u in range(1 << length)
        if all(popcount(u & r) % 2 == 0 for r in rows)
    ]


def enumerate_doubly_even_subspaces(length, max_k=None):
    """Every doubly even subspace of Z2^length, one generator tuple each.

    Generators form the reduced ascending basis of the subspace: each new
    generator exceeds the previous one and is the minimum of its coset,
    which makes every subspace appear exactly once.
    """
    candidates = [w for w in range(1, 1 << length) if popcount(w) % 4 == 0]

    def extend(gens, span):
        yield tuple(gens)
        if max_k is not None and len(gens) >= max_k:
            return
        last = gens[-1] if gens else 0
        for w in candidates:
            if w <= last:
                continue
            if any(popcount(w & g) % 2 for g in gens):
                continue
            if min(w ^ s for s in span) != w:
                continue
            yield from extend(gens + [w], span + [s ^ w for s in span])

    yield from extend([], [0])


def max_doubly_even_dimension(length):
    """Brute-force maximal dimension of a doubly even code of this length."""
    return max(len(gens) for gens in enumerate_doubly_even_subspaces(length))


def count_spanning_trees_brute(edges, n_vertices):
    """Count spanning trees by trying every (V-1)-subset of edges."""
    return len(list_spanning_trees(edges, n_vertices))


def list_spanning_trees(edges, n_vertices):
    """All spanning trees (as edge tuples) of a small graph."""
    trees = []
    for subset in itertools.combinations(edges, n_vertices - 1):
        parent = list(range(n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for u, v, *_ in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                acyclic = False
                break
            parent[ru] = rv
        if acyclic:
            trees.append(subset)
    return trees


def find_4_cycles(adjacency):
    """All chordless 4-vertex cycles of a graph given as neighbor sets.

    Returns frozensets of 4 vertices {a,b,c,d} with edges ab, bc, cd, da
    and no chord requirement (any 4-cycle).
    """
    n = len(adjacency)
    cycles = set()
    for a in range(n):
        for b in adjacency[a]:
            for c in adjacency[b]:
                if c == a:
                    continue
                for d in adjacency[c]:
                    if d in (a, b, c):
                        continue
                    if a in adjacency[d]:
                        cycles.add(frozenset((a, b, c, d)))
    return cycles


def exhaustive_odd_completions(all_edges, quads, fixed):
    """All complete 0/1 edge assignments extending `fixed` that leave
    every quadrilateral (a tuple of 4 edges) with odd dash count."""
    free = [e for e in all_edges if e not in fixed]
    found = []
    for bits in itertools.product((0, 1), repeat=len(free)):
        assignment = dict(fixed)
        assignment.update(zip(free, bits))
        if all(sum(assignment[e] for e in quad) % 2 == 1 for quad in quads):
            found.append(assignment)
    return found
