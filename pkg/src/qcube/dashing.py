"""Edge dashings: NDXOR propagation over 2-color quadrilaterals.

An edge is (u, v, color) with u < v in dense vertex indices. A dashing
assigns each edge a bit (1 = dashed); a valid complete dashing makes
every 2-color quadrilateral carry an odd number of dashed edges. Given
the bits on a spanning structure, the NDXOR gate w = not(x ^ y ^ z)
forces the fourth bit of any quadrilateral with three known edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from qcube.errors import IncompleteAssignmentError, SameColorError
from qcube.graphs import QuotientGraph

Edge = tuple[int, int, int]


def ndxor(x: int, y: int, z: int) -> int:
    """The gate completing a quadrilateral to odd parity: not(x ^ y ^ z)."""
    return 1 ^ (x ^ y ^ z) & 1


@dataclass(frozen=True)
class Quadrilateral:
    """A 2-color 4-cycle; vertices in cycle order starting at the smallest."""

    vertices: tuple[int, int, int, int]
    edges: tuple[Edge, Edge, Edge, Edge]

    @property
    def key(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))


def _edge(u: int, v: int, color: int) -> Edge:
    return (u, v, color) if u < v else (v, u, color)


def quadrilaterals(g: QuotientGraph, color_i: int, color_j: int) -> list[Quadrilateral]:
    """All 4-cycles alternating between two colors, each emitted once."""
    if color_i == color_j:
        raise SameColorError(f"need two distinct colors, got {color_i} twice")
    ci, cj = min(color_i, color_j), max(color_i, color_j)
    out = []
    for u in range(g.vertex_count):
        a = int(g.neighbors[u, ci])
        b = int(g.neighbors[a, cj])
        c = int(g.neighbors[u, cj])
        if u < min(a, b, c):
            out.append(
                Quadrilateral(
                    vertices=(u, a, b, c),
                    edges=(_edge(u, a, ci), _edge(a, b, cj), _edge(c, b, ci), _edge(u, c, cj)),
                )
            )
    return sorted(out, key=lambda q: q.key)


def all_quadrilaterals(g: QuotientGraph) -> list[Quadrilateral]:
    out = []
    for ci in range(g.length):
        for cj in range(ci + 1, g.length):
            out.extend(quadrilaterals(g, ci, cj))
    return sorted(out, key=lambda q: q.key)


@dataclass
class DashingAssignment:
    """Partial or complete map edge -> dashing bit."""

    bits: dict[Edge, int] = field(default_factory=dict)

    def is_complete(self, g: QuotientGraph) -> bool:
        return set(self.bits) == set(g.edges())

    def check_domain(self, g: QuotientGraph) -> None:
        """Raise if any key is not an edge of g or any value is not a bit."""
        edges = set(g.edges())
        for edge, bit in self.bits.items():
            if edge not in edges:
                raise KeyError(f"{edge} is not an edge of the graph")
            if bit not in (0, 1):
                raise ValueError(f"dashing bit for {edge} must be 0 or 1, got {bit}")

    def to_lines(self) -> list[str]:
        return [f"{u} {v} {c} {bit}" for (u, v, c), bit in sorted(self.bits.items())]


def parse_dashing(text: str) -> DashingAssignment:
    """Parse the dashing file format: lines "u v color bit"."""
    bits: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 4:
            raise ValueError(f"line {lineno}: expected 'u v color bit', got {line!r}")
        u, v, color, bit = (int(p) for p in parts)
        if bit not in (0, 1):
            raise ValueError(f"line {lineno}: bit must be 0 or 1")
        bits[_edge(u, v, color)] = bit
    return DashingAssignment(bits=bits)


@dataclass(frozen=True)
class CompletionResult:
    """Outcome of NDXOR propagation.

    status 'complete': assignment holds all edges, every quadrilateral odd.
    status 'stuck': no quadrilateral had exactly three known edges;
        unknown_edges lists what is still missing.
    status 'inconsistent': witness is a fully-known even quadrilateral.
    """

    status: str
    assignment: DashingAssignment | None = None
    unknown_edges: tuple[Edge, ...] = ()
    witness: Quadrilateral | None = None

    @property
    def ok(self) -> bool:
        return self.status == "complete"


def complete_dashing(g: QuotientGraph, partial: DashingAssignment) -> CompletionResult:
    """Propagate NDXOR to a fixpoint over all quadrilaterals.

    Quadrilaterals are processed in sorted canonical order, repeating
    passes until nothing changes; the filled-in bits are schedule
    independent, only failure witnesses depend on the order.
    """
    partial.check_domain(g)
    quads = all_quadrilaterals(g)
    bits = dict(partial.bits)
    changed = True
    while changed:
        changed = False
        for quad in quads:
            known = [e for e in quad.edges if e in bits]
            if len(known) == 3:
                (missing,) = (e for e in quad.edges if e not in bits)
                x, y, z = (bits[e] for e in known)
                bits[missing] = ndxor(x, y, z)
                changed = True
            elif len(known) == 4:
                if sum(bits[e] for e in quad.edges) % 2 == 0:
                    return CompletionResult(status="inconsistent", witness=quad)
    unknown = tuple(e for e in g.edges() if e not in bits)
    if unknown:
        return CompletionResult(status="stuck", unknown_edges=unknown)
    return CompletionResult(status="complete", assignment=DashingAssignment(bits=bits))


@dataclass(frozen=True)
class DashingReport:
    even_quadrilaterals: tuple[Quadrilateral, ...]

    @property
    def ok(self) -> bool:
        return not self.even_quadrilaterals


def validate_dashing(g: QuotientGraph, d: DashingAssignment) -> DashingReport:
    """List every quadrilateral with an even number of dashed edges."""
    if not d.is_complete(g):
        raise IncompleteAssignmentError("dashing must cover every edge")
    bad = tuple(
        quad
        for quad in all_quadrilaterals(g)
        if sum(d.bits[e] for e in quad.edges) % 2 == 0
    )
    return DashingReport(even_quadrilaterals=bad)


# --- baobab well-formedness ---

@dataclass(frozen=True)
class CandidateBaobab:
    """A spanning tree plus k designated cycles, given as edge sequences."""

    tree_edges: tuple[Edge, ...]
    cycles: tuple[tuple[Edge, ...], ...]


@dataclass(frozen=True)
class BaobabReport:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _is_closed_walk(edges: tuple[Edge, ...]) -> bool:
    """Thread an edge sequence into a closed walk, trying both starts."""
    if not edges:
        return False
    for start in edges[0][:2]:
        at = start
        ok = True
        for u, v, _ in edges:
            if at == u:
                at = v
            elif at == v:
                at = u
            else:
                ok = False
                break
        if ok and at == start:
            return True
    return False


def check_baobab(g: QuotientGraph, b: CandidateBaobab) -> BaobabReport:
    """Verify the baobab clauses against the graph.

    Checked: edges exist; the tree spans; cycle count equals k; each
    cycle is a closed walk with >= 4 odd-multiplicity colors; each cycle
    has a color private to it.
    """
    violations: list[str] = []
    graph_edges = set(g.edges())
    for e in b.tree_edges:
        if e not in graph_edges:
            violations.append(f"tree edge {e} not in graph")
    for i, cycle in enumerate(b.cycles):
        for e in cycle:
            if e not in graph_edges:
                violations.append(f"cycle {i} edge {e} not in graph")
    if violations:
        return BaobabReport(violations=tuple(violations))

    V = g.vertex_count
    if len(set(b.tree_edges)) != V - 1:
        violations.append(f"tree has {len(set(b.tree_edges))} distinct edges, needs {V - 1}")
    else:
        parent = list(range(V))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for u, v, _ in b.tree_edges:
            ru, rv = find(u), find(v)
            if ru == rv:
                acyclic = False
                break
            parent[ru] = rv
        if not acyclic:
            violations.append("tree edges contain a cycle")

    if len(b.cycles) != g.k:
        violations.append(f"{len(b.cycles)} cycles designated, code has k={g.k}")

    color_sets = [set(c for _, _, c in cycle) for cycle in b.cycles]
    for i, cycle in enumerate(b.cycles):
        if not _is_closed_walk(cycle):
            violations.append(f"cycle {i} is not a closed walk")
        color_count: dict[int, int] = {}
        for _, _, c in cycle:
            color_count[c] = color_count.get(c, 0) + 1
        odd = sum(1 for v in color_count.values() if v % 2)
        if odd < 4:
            violations.append(f"cycle {i} has {odd} odd-multiplicity colors, needs >= 4")
        others = set().union(*(s for j, s in enumerate(color_sets) if j != i)) if len(color_sets) > 1 else set()
        if not (color_sets[i] - others):
            violations.append(f"cycle {i} has no private color")
    return BaobabReport(violations=tuple(violations))
