import itertools

import pytest

from qcube import codes
from qcube.codes import GeneratorMatrix, hypercube_code, parse_code
from qcube.errors import (
    EmptyInputError,
    EmptySubsetError,
    GeneratorIndexError,
    NonBinaryCharacterError,
    NonPositiveLengthError,
    RaggedRowsError,
    TooLargeError,
)

from conftest import C4, E8, PAIR_DISTINCT, PAIR_EQUIVALENT, random_doubly_even_code
from oracles import enumerate_doubly_even_subspaces, naive_dual_span, xor_span


# --- parsing ---

def test_parse_two_rows():
    code = parse_code("11110000\n00111100")
    assert (code.n, code.k) == (6, 2)
    assert code.rows == (0b11110000, 0b00111100)


def test_parse_single_row():
    code = parse_code("1111")
    assert (code.n, code.k) == (3, 1)


def test_parse_comments_and_blanks():
    code = parse_code("# a comment\n\n1111\n   \n# another\n")
    assert code.rows == (0b1111,)


def test_parse_zero_row_sets_length_only():
    code = parse_code("0000")
    assert (code.n, code.k) == (4, 0)
    code = parse_code("0000\n1111")
    assert (code.n, code.k) == (3, 1)


def test_parse_rejects_non_binary():
    with pytest.raises(NonBinaryCharacterError):
        parse_code("11a1")


def test_parse_rejects_ragged_rows():
    with pytest.raises(RaggedRowsError):
        parse_code("1111\n111")


def test_parse_rejects_empty():
    with pytest.raises(EmptyInputError):
        parse_code("# nothing here\n")


# --- validation ---

def test_validate_weight_4_ok():
    assert codes.validate_doubly_even(C4).ok


def test_validate_weight_2_violation():
    report = codes.validate_doubly_even(parse_code("1100"))
    assert report.weight_violations == (0b1100,)
    assert not report.ok


def test_validate_three_generator_example():
    code = parse_code("11110000\n00111100\n01010101")
    assert codes.validate_doubly_even(code).ok


def test_validate_flags_dependent_rows():
    code = GeneratorMatrix(n=1, k=3, rows=(0b1111, 0b11110000 >> 4, 0b1111))
    report = codes.validate_doubly_even(code)
    assert report.dependencies  # rows 0 and 2 coincide
    assert any(set(dep) == {0, 2} for dep in report.dependencies)


def test_validate_two_routes_agree_on_corpus(rng):
    for _ in range(30):
        length = rng.randint(4, 10)
        code = random_doubly_even_code(rng, length)
        assert codes.doubly_even_by_generators(code)
        assert codes.validate_doubly_even(code).ok
    # and on a stack of invalid codes
    for rows in [(0b1100,), (0b111000,), (0b1111, 0b0111)]:
        length = max(r.bit_length() for r in rows)
        code = GeneratorMatrix(n=length - len(rows), k=len(rows), rows=rows)
        assert not codes.doubly_even_by_generators(code)
        assert codes.validate_doubly_even(code).weight_violations


# --- span ---

def test_span_k1():
    assert codes.span(C4) == [0, 0b1111]


def test_span_empty_code():
    assert codes.span(hypercube_code(3)) == [0]


def test_span_two_disjoint_generators():
    code = parse_code("11110000\n00001111")
    words = codes.span(code)
    assert len(words) == 4
    assert 0b11111111 in words


def test_span_size_guard():
    code = GeneratorMatrix(n=11, k=21, rows=tuple(1 << i | 1 << (i + 1) for i in range(21)))
    with pytest.raises(TooLargeError):
        codes.span(code)


# --- dual ---

def test_dual_of_1111_is_even_weight_code():
    d = codes.dual(C4)
    assert d.k == 3
    assert xor_span(d.rows) == [0b0000, 0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100, 0b1111]
    assert xor_span(d.rows) == naive_dual_span(C4.rows, 4)


def test_dual_of_empty_code_is_everything():
    d = codes.dual(hypercube_code(3))
    assert d.k == 3
    assert xor_span(d.rows) == list(range(8))


def test_e8_is_self_dual():
    d = codes.dual(E8)
    assert d.k == 4
    assert xor_span(d.rows) == xor_span(E8.rows)


def test_dual_dimension_and_involution(rng):
    for _ in range(20):
        code = random_doubly_even_code(rng, rng.randint(4, 10))
        d = codes.dual(code)
        assert d.k == code.length - code.k
        assert xor_span(codes.dual(d).rows) == xor_span(code.rows)
        assert xor_span(d.rows) == naive_dual_span(code.rows, code.length)


# --- weight distribution ---

def test_weight_distribution_even_code():
    even4 = GeneratorMatrix(n=1, k=3, rows=(0b0011, 0b0101, 0b1001))
    assert codes.weight_distribution(even4) == [1, 0, 6, 0, 1]


def test_weight_distribution_e8():
    hist = codes.weight_distribution(E8)
    assert hist[0] == 1 and hist[4] == 14 and hist[8] == 1
    assert sum(hist) == 16


def test_weight_distribution_zero_code():
    assert codes.weight_distribution(hypercube_code(2)) == [1, 0, 0]


# --- wedge weights ---

def test_wedge_weight_singleton_is_row_weight():
    assert codes.wedge_weight(C4, [0]) == 4


def test_wedge_weight_pair():
    code = parse_code("11110000\n00111100")
    assert codes.wedge_weight(code, [0, 1]) == 2


def test_wedge_weight_disjoint_supports():
    code = parse_code("11110000\n00001111")
    assert codes.wedge_weight(code, [0, 1]) == 0


def test_wedge_weight_errors():
    with pytest.raises(EmptySubsetError):
        codes.wedge_weight(C4, [])
    with pytest.raises(GeneratorIndexError):
        codes.wedge_weight(C4, [1])


def test_wedge_weight_monotone_under_inclusion(rng):
    for _ in range(10):
        code = random_doubly_even_code(rng, 8)
        profile = codes.wedge_profile(code)
        for subset, weight in profile.items():
            for smaller_size in range(1, len(subset)):
                for sub in itertools.combinations(subset, smaller_size):
                    assert weight <= profile[sub]
        for i in range(code.k):
            assert profile[(i,)] == code.rows[i].bit_count()


# --- Construction 1 ---

def test_normalize_already_private():
    code = parse_code("11110000\n00111100\n01010101")
    normalized, private = codes.normalize_private_columns(code)
    assert normalized == code
    assert sorted(private) == [0, 1, 2]
    # each chosen column really is private
    for i, col in private.items():
        mask = codes.column_mask(col, code.length)
        assert normalized.rows[i] & mask
        assert all(not (normalized.rows[j] & mask) for j in range(code.k) if j != i)


def test_normalize_nested_supports():
    code = parse_code("11110000\n11111111")
    normalized, private = codes.normalize_private_columns(code)
    assert normalized.rows == (0b11110000, 0b00001111)
    assert private == {0: 0, 1: 4}


def test_normalize_k1_trivial():
    normalized, private = codes.normalize_private_columns(C4)
    assert normalized == C4
    assert private == {0: 0}


def test_normalize_preserves_span_and_is_idempotent(rng):
    for _ in range(25):
        code = random_doubly_even_code(rng, rng.randint(4, 12))
        normalized, private = codes.normalize_private_columns(code)
        assert xor_span(normalized.rows) == xor_span(code.rows)
        assert len(set(private.values())) == code.k
        again, private2 = codes.normalize_private_columns(normalized)
        assert again == normalized
        assert private2 == private


# --- k_max ---

@pytest.mark.parametrize("length,expected", [(4, 1), (8, 4), (7, 3)])
def test_kmax_paper_values(length, expected):
    assert codes.kmax(length) == expected


def test_kmax_rejects_nonpositive():
    with pytest.raises(NonPositiveLengthError):
        codes.kmax(0)


def test_kmax_matches_brute_force_small():
    for length in range(1, 9):
        brute = max(len(g) for g in enumerate_doubly_even_subspaces(length))
        assert codes.kmax(length) == brute


# --- column permutation equivalence ---

def test_equivalent_pair():
    a, b = PAIR_EQUIVALENT
    assert codes.column_permutation_equivalent(a, b)


def test_distinct_pair_not_equivalent():
    a, b = PAIR_DISTINCT
    assert not codes.column_permutation_equivalent(a, b)


def test_self_equivalence():
    assert codes.column_permutation_equivalent(E8, E8)


def test_equivalence_relation_properties(rng):
    base = random_doubly_even_code(rng, 8, k=2)
    perm1 = list(range(8))
    perm2 = list(range(8))
    rng.shuffle(perm1)
    rng.shuffle(perm2)
    shuffled1 = GeneratorMatrix(
        n=base.n, k=base.k,
        rows=tuple(codes.apply_column_permutation(r, perm1, 8) for r in base.rows),
    )
    shuffled2 = GeneratorMatrix(
        n=base.n, k=base.k,
        rows=tuple(codes.apply_column_permutation(r, perm2, 8) for r in base.rows),
    )
    # reflexive, symmetric, and transitive across the triple
    assert codes.column_permutation_equivalent(base, base)
    assert codes.column_permutation_equivalent(base, shuffled1)
    assert codes.column_permutation_equivalent(shuffled1, base)
    assert codes.column_permutation_equivalent(shuffled1, shuffled2)
    assert codes.column_permutation_equivalent(base, shuffled2)


def test_equivalence_size_guard():
    big = hypercube_code(13)
    with pytest.raises(TooLargeError):
        codes.column_permutation_equivalent(big, big)
