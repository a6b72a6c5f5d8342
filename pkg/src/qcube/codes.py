"""GF(2) algebra of doubly even binary codes.

Codewords are int bitsets. Column j of an N-column code sits at bit
N-1-j, i.e. a row string like "11110000" is read as a binary numeral.
With that convention, integer order on words coincides with
lexicographic order on their bit strings, which is what the coset
canonicalization in qcube.graphs relies on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from qcube import kernels
from qcube.errors import (
    EmptyInputError,
    EmptySubsetError,
    GeneratorIndexError,
    NonBinaryCharacterError,
    NonPositiveLengthError,
    NormalizationDivergedError,
    RaggedRowsError,
    TooLargeError,
)

SPAN_LIMIT = 20          # max generators for explicit span listings
HISTOGRAM_LIMIT = 24     # max generators for span histograms (dual side: n <= 24)
PERMUTATION_LIMIT = 12   # max N for the exact column-permutation search


def column_mask(column: int, length: int) -> int:
    """Bit mask of a 0-based column in a length-N code."""
    return 1 << (length - 1 - column)


def word_to_bits(word: int, length: int) -> str:
    return format(word, f"0{length}b")


@dataclass(frozen=True)
class GeneratorMatrix:
    """k generators of length N = n + k defining a binary code.

    Purely structural: semantic requirements (independent rows, doubly
    even span) are checked by validate_doubly_even, not the constructor,
    so invalid codes can be carried around and reported on.
    """

    n: int
    k: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or self.k != len(self.rows):
            raise ValueError("k must equal the number of rows and n must be >= 0")
        if self.length < 1:
            raise NonPositiveLengthError("code length must be at least 1")
        for r in self.rows:
            if r < 0 or r >> self.length:
                raise ValueError(f"row {r:#x} does not fit in {self.length} columns")

    @property
    def length(self) -> int:
        """Ambient dimension N = n + k."""
        return self.n + self.k

    def row_strings(self) -> list[str]:
        return [word_to_bits(r, self.length) for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(self.row_strings()) if self.rows else f"<empty code N={self.length}>"


def hypercube_code(n: int) -> GeneratorMatrix:
    """The empty code of length n: its quotient graph is the plain n-cube."""
    return GeneratorMatrix(n=n, k=0, rows=())


def parse_code(text: str) -> GeneratorMatrix:
    """Parse the code file format: one '0'/'1' row per line.

    '#' starts a comment line and blank lines are skipped. An all-zero
    row contributes no generator but still fixes the code length, which
    is how a file describes the unquotiented N-cube (k=0).
    """
    rows: list[int] = []
    length = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        bad = set(line) - {"0", "1"}
        if bad:
            raise NonBinaryCharacterError(
                f"line {lineno}: invalid character {sorted(bad)[0]!r} in row {line!r}"
            )
        if length is None:
            length = len(line)
        elif len(line) != length:
            raise RaggedRowsError(
                f"line {lineno}: row of length {len(line)}, expected {length}"
            )
        word = int(line, 2)
        if word:
            rows.append(word)
    if length is None:
        raise EmptyInputError("no generator rows found")
    return GeneratorMatrix(n=length - len(rows), k=len(rows), rows=tuple(rows))


# --- span / dual / weights ---

def span(code: GeneratorMatrix) -> list[int]:
    """All distinct XOR combinations of the generators, sorted ascending."""
    if code.k > SPAN_LIMIT:
        raise TooLargeError(f"span of {code.k} generators exceeds the k<={SPAN_LIMIT} limit")
    words = {0}
    for r in code.rows:
        words |= {w ^ r for w in words}
    return sorted(words)


def gf2_row_reduce(rows: Sequence[int], length: int) -> tuple[list[int], list[int]]:
    """Row-reduce over GF(2); returns (reduced nonzero rows, pivot columns)."""
    work = list(rows)
    pivots: list[int] = []
    rank = 0
    for c in range(length):
        mask = column_mask(c, length)
        pivot_row = next((i for i in range(rank, len(work)) if work[i] & mask), None)
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        for i in range(len(work)):
            if i != rank and work[i] & mask:
                work[i] ^= work[rank]
        pivots.append(c)
        rank += 1
    return work[:rank], pivots


def gf2_rank(rows: Sequence[int], length: int) -> int:
    return len(gf2_row_reduce(rows, length)[0])


def dual(code: GeneratorMatrix) -> GeneratorMatrix:
    """A basis of the dual code {u : u.c = 0 mod 2 for all c in span(C)}.

    Always has rank N - rank(C); for valid codes that is N - k = n
    generators of length N.
    """
    length = code.length
    reduced, pivots = gf2_row_reduce(code.rows, length)
    free = [c for c in range(length) if c not in pivots]
    basis = []
    for f in free:
        fmask = column_mask(f, length)
        v = fmask
        for row, p in zip(reduced, pivots):
            if row & fmask:
                v |= column_mask(p, length)
        basis.append(v)
    return GeneratorMatrix(n=length - len(basis), k=len(basis), rows=tuple(basis))


def weight_distribution(code: GeneratorMatrix) -> list[int]:
    """Counts A_0..A_N of span elements by Hamming weight (Sum A_w = 2^k)."""
    if code.k > HISTOGRAM_LIMIT:
        raise TooLargeError(
            f"weight distribution of {code.k} generators exceeds the k<={HISTOGRAM_LIMIT} limit"
        )
    return kernels.span_weight_histogram(list(code.rows), code.length)


def wedge_weight(code: GeneratorMatrix, indices: Iterable[int]) -> int:
    """Hamming weight of the bitwise AND of the selected generators (0-based)."""
    idx = list(indices)
    if not idx:
        raise EmptySubsetError("wedge weight needs at least one generator index")
    acc = ~0
    for i in idx:
        if not 0 <= i < code.k:
            raise GeneratorIndexError(f"generator index {i} outside 0..{code.k - 1}")
        acc &= code.rows[i]
    return acc.bit_count()


def wedge_profile(code: GeneratorMatrix) -> dict[tuple[int, ...], int]:
    """Wedge weight of every nonempty generator subset, keyed by index tuple."""
    out = {}
    for q in range(1, code.k + 1):
        for subset in itertools.combinations(range(code.k), q):
            out[subset] = wedge_weight(code, subset)
    return out


# --- validation ---

@dataclass(frozen=True)
class CodeValidation:
    """Everything wrong with a candidate doubly even code.

    weight_violations: span elements with Hamming weight not 0 mod 4.
    dependencies: row-index tuples whose XOR is the zero word.
    """

    weight_violations: tuple[int, ...]
    dependencies: tuple[tuple[int, ...], ...]

    @property
    def ok(self) -> bool:
        return not self.weight_violations and not self.dependencies


def doubly_even_by_generators(code: GeneratorMatrix) -> bool:
    """Generator-pair criterion: every row weight is 0 mod 4 and every
    pairwise AND has even weight. Equivalent to the whole span being
    doubly even (wt(a^b) = wt(a) + wt(b) - 2 wt(a&b))."""
    for r in code.rows:
        if r.bit_count() % 4:
            return False
    for a, b in itertools.combinations(code.rows, 2):
        if (a & b).bit_count() % 2:
            return False
    return True


def _row_dependencies(rows: Sequence[int], length: int) -> list[tuple[int, ...]]:
    """Kernel basis of the rows: index tuples whose XOR is the zero word."""
    k = len(rows)
    work = [(rows[i], 1 << i) for i in range(k)]
    rank = 0
    for c in range(length):
        mask = column_mask(c, length)
        pivot = next((i for i in range(rank, k) if work[i][0] & mask), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for i in range(k):
            if i != rank and work[i][0] & mask:
                work[i] = (work[i][0] ^ work[rank][0], work[i][1] ^ work[rank][1])
        rank += 1
    return [
        tuple(t for t in range(k) if combo >> t & 1)
        for word, combo in work[rank:]
        if word == 0
    ]


def validate_doubly_even(code: GeneratorMatrix) -> CodeValidation:
    """Full validation report; computed by span scan and cross-checked
    against the generator-pair criterion (the two must agree)."""
    reduced, _ = gf2_row_reduce(code.rows, code.length)
    if len(reduced) > HISTOGRAM_LIMIT:
        raise TooLargeError(f"validation span scan limited to rank<={HISTOGRAM_LIMIT}")

    violations = set()
    word = 0
    for i in range(1, 1 << len(reduced)):
        word ^= reduced[(i & -i).bit_length() - 1]
        if word.bit_count() % 4:
            violations.add(word)

    pair_ok = doubly_even_by_generators(code)
    if pair_ok != (not violations):
        raise AssertionError("span scan and generator criterion disagree")
    return CodeValidation(
        weight_violations=tuple(sorted(violations)),
        dependencies=tuple(_row_dependencies(code.rows, code.length)),
    )


# --- Construction 1: private columns ---

def private_column_masks(rows: Sequence[int]) -> list[int]:
    """For each row, the mask of columns where it holds the only 1."""
    out = []
    for i, r in enumerate(rows):
        others = 0
        for j, s in enumerate(rows):
            if j != i:
                others |= s
        out.append(r & ~others)
    return out


def normalize_private_columns(code: GeneratorMatrix) -> tuple[GeneratorMatrix, dict[int, int]]:
    """Row-reduce the generators until every one owns a private column.

    Span-preserving row operations only (C_j ^= C_i). Returns the new
    matrix and {generator index: chosen private column}, the column
    being the smallest eligible index. Idempotent on normalized input.
    Raises NormalizationDivergedError past 4^k iterations.
    """
    rows = list(code.rows)
    length = code.length
    cap = 4 ** code.k
    iterations = 0
    while True:
        priv = private_column_masks(rows)
        starved = [i for i, p in enumerate(priv) if p == 0]
        if not starved:
            break
        iterations += 1
        if iterations > cap:
            raise NormalizationDivergedError(
                f"no private column for generators {starved} after {cap} iterations"
            )
        i = starved[0]
        # smallest column index set in row i = highest bit
        x = 1 << (rows[i].bit_length() - 1)
        for j in range(len(rows)):
            if j != i and rows[j] & x:
                rows[j] ^= rows[i]
    chosen = {
        i: length - p.bit_length()  # highest bit = smallest column index
        for i, p in enumerate(private_column_masks(rows))
    }
    return GeneratorMatrix(n=code.n, k=code.k, rows=tuple(rows)), chosen


# --- k_max (Gaborit branch formula) ---

def kmax(length: int) -> int:
    """Maximal dimension of a doubly even code of the given length."""
    if length < 1:
        raise NonPositiveLengthError("length must be at least 1")
    m, s = divmod(length, 8)
    if s <= 3:
        return 4 * m
    if s <= 5:
        return 4 * m + 1
    if s == 6:
        return 4 * m + 2
    return 4 * m + 3


# --- column permutation equivalence ---

def apply_column_permutation(word: int, perm: Sequence[int], length: int) -> int:
    """Move column c to column perm[c]."""
    out = 0
    for c in range(length):
        if word & column_mask(c, length):
            out |= column_mask(perm[c], length)
    return out


def column_permutation_equivalent(a: GeneratorMatrix, b: GeneratorMatrix) -> bool:
    """True iff some column permutation maps span(a) onto span(b).

    Exact search with two prunings: columns may only map to columns with
    the same weight profile over the span, and every partial assignment
    must match the projected span multisets.
    """
    if a.length != b.length:
        raise ValueError("codes must have the same length")
    length = a.length
    if length > PERMUTATION_LIMIT:
        raise TooLargeError(f"exact permutation search limited to N<={PERMUTATION_LIMIT}")

    span_a = span(a)
    span_b = span(b)
    if len(span_a) != len(span_b):
        return False
    if sorted(w.bit_count() for w in span_a) != sorted(w.bit_count() for w in span_b):
        return False

    def column_signature(words, c):
        mask = column_mask(c, length)
        return tuple(sorted(w.bit_count() for w in words if w & mask))

    sig_a = [column_signature(span_a, c) for c in range(length)]
    sig_b = [column_signature(span_b, c) for c in range(length)]
    if sorted(sig_a) != sorted(sig_b):
        return False

    span_b_set = frozenset(span_b)
    assign = [0] * length
    used = [False] * length

    def projections_match(depth: int) -> bool:
        proj_a: dict[tuple[int, ...], int] = {}
        proj_b: dict[tuple[int, ...], int] = {}
        for w in span_a:
            key = tuple(1 if w & column_mask(c, length) else 0 for c in range(depth + 1))
            proj_a[key] = proj_a.get(key, 0) + 1
        for w in span_b:
            key = tuple(1 if w & column_mask(assign[c], length) else 0 for c in range(depth + 1))
            proj_b[key] = proj_b.get(key, 0) + 1
        return proj_a == proj_b

    def extend(c: int) -> bool:
        if c == length:
            image = {apply_column_permutation(w, assign, length) for w in span_a}
            return image == span_b_set
        for target in range(length):
            if used[target] or sig_b[target] != sig_a[c]:
                continue
            assign[c] = target
            used[target] = True
            if projections_match(c) and extend(c + 1):
                return True
            used[target] = False
        return False

    return extend(0)
