"""Laplacian spectra of quotient hypercubes, three independent ways.

The closed form: eigenvalues are 2*wt(u) for u ranging over the dual
code, with multiplicity the dual weight distribution (the character
vector ((-1)^(u.v))_v is an eigenvector exactly when u is orthogonal to
the quotient code). The (m, p) table splits each dual word's weight by
how much of it sits on the private columns of the normalized code. The
numeric route diagonalizes the dense Laplacian.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from qcube import kernels
from qcube.codes import (
    GeneratorMatrix,
    column_mask,
    column_permutation_equivalent,
    dual,
    normalize_private_columns,
    weight_distribution,
)
from qcube.errors import ResidualTooLargeError, TooLargeError
from qcube.graphs import QuotientGraph, laplacian

SpectrumTable = dict[int, int]

NUMERIC_LIMIT = 4096


def spectrum_closed_form(code: GeneratorMatrix) -> SpectrumTable:
    """Exact spectrum {2w: A_w(dual)} from the dual weight distribution."""
    hist = weight_distribution(dual(code))
    return {2 * w: c for w, c in enumerate(hist) if c}


def multiplicity_table(code: GeneratorMatrix) -> dict[tuple[int, int], int]:
    """Counts M(m, p) of dual words by private-column split; eigenvalue 2(m+p).

    p counts the chosen private columns (of the normalized code) hit by
    the dual word, m the rest of its weight. Anti-diagonal sums m+p=w
    reproduce spectrum_closed_form exactly.
    """
    normalized, private = normalize_private_columns(code)
    length = normalized.length
    mask = 0
    for col in private.values():
        mask |= column_mask(col, length)
    dual_code = dual(normalized)
    hist = kernels.span_mp_histogram(list(dual_code.rows), mask, length)
    return {
        (m, p): count
        for m, row in enumerate(hist)
        for p, count in enumerate(row)
        if count
    }


def spectrum_numeric(g: QuotientGraph, tol: float = 1e-8) -> SpectrumTable:
    """Dense symmetric eigensolve of the Laplacian, rounded to even integers.

    Any eigenvalue farther than tol from an even integer raises
    ResidualTooLargeError: that signals a bug or an invalid graph, never
    a value to be tolerated.
    """
    if g.vertex_count > NUMERIC_LIMIT:
        raise TooLargeError(f"dense eigensolve limited to {NUMERIC_LIMIT} vertices")
    eigenvalues = np.linalg.eigvalsh(laplacian(g).astype(np.float64))
    table: SpectrumTable = {}
    for value in eigenvalues:
        nearest = 2 * round(float(value) / 2)
        if abs(value - nearest) > tol:
            raise ResidualTooLargeError(f"eigenvalue {value!r} is {abs(value - nearest):.3e} from even")
        table[nearest] = table.get(nearest, 0) + 1
    return dict(sorted(table.items()))


def adjacency_spectrum(s: SpectrumTable, length: int) -> dict[int, int]:
    """Adjacency eigenvalues N - lambda of an N-regular graph (A = N*I - L)."""
    return dict(sorted(((length - lam, mult) for lam, mult in s.items()), reverse=True))


def spectral_mode(s: SpectrumTable) -> int:
    """Eigenvalue of maximal multiplicity, ties broken toward the smaller."""
    if not s:
        raise ValueError("empty spectrum table")
    best = None
    for lam in sorted(s):
        if best is None or s[lam] > s[best]:
            best = lam
    return best


def cospectral(a: GeneratorMatrix, b: GeneratorMatrix) -> bool:
    return spectrum_closed_form(a) == spectrum_closed_form(b)


@dataclass(frozen=True)
class SpectralGroup:
    """Codes sharing one spectrum, split into column-permutation classes."""

    spectrum: tuple[tuple[int, int], ...]
    classes: tuple[tuple[int, ...], ...]

    @property
    def is_meta_witness(self) -> bool:
        """>=2 permutation classes with the same spectrum: the paper-style
        meta-equivalence, cospectral yet permutation inequivalent."""
        return len(self.classes) >= 2


@dataclass(frozen=True)
class MetaEquivalencePartition:
    groups: tuple[SpectralGroup, ...]

    @property
    def witnesses(self) -> tuple[SpectralGroup, ...]:
        return tuple(g for g in self.groups if g.is_meta_witness)


def meta_equivalence_scan(codes: list[GeneratorMatrix]) -> MetaEquivalencePartition:
    """Partition codes by spectrum, then by column-permutation equivalence.

    Codes must share one length. Input order is preserved inside classes;
    groups are sorted by spectrum, classes by first member.
    """
    if not codes:
        return MetaEquivalencePartition(groups=())
    lengths = {c.length for c in codes}
    if len(lengths) > 1:
        raise ValueError(f"codes of mixed lengths {sorted(lengths)}")

    by_spectrum: dict[tuple[tuple[int, int], ...], list[int]] = {}
    for i, code in enumerate(codes):
        key = tuple(sorted(spectrum_closed_form(code).items()))
        by_spectrum.setdefault(key, []).append(i)

    groups = []
    for key in sorted(by_spectrum):
        members = by_spectrum[key]
        classes: list[list[int]] = []
        for i in members:
            for cls in classes:
                if column_permutation_equivalent(codes[cls[0]], codes[i]):
                    cls.append(i)
                    break
            else:
                classes.append([i])
        groups.append(SpectralGroup(spectrum=key, classes=tuple(tuple(c) for c in classes)))
    return MetaEquivalencePartition(groups=tuple(groups))
