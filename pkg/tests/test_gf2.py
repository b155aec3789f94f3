import random

import numpy as np
import pytest

from hypermap_codes import gf2
from util import random_invertible

# Stabilizer matrices of the torus worked example, in the package's face order.
TORUS_HX = np.ones((2, 6), dtype=np.uint8)
TORUS_HZ = np.array(
    [
        [1, 0, 0, 1, 1, 1],
        [0, 1, 0, 0, 0, 1],
        [1, 1, 1, 1, 0, 0],
        [0, 0, 1, 0, 1, 0],
    ],
    dtype=np.uint8,
)


def test_rank_zero_matrix():
    assert gf2.rank(np.zeros((3, 3), dtype=np.uint8)) == 0


def test_rank_identity():
    assert gf2.rank(gf2.identity(4)) == 4


def test_rank_dependent_rows():
    assert gf2.rank(TORUS_HX) == 1


def test_rank_equals_transpose_rank():
    rng = random.Random(11)
    for _ in range(50):
        rows, cols = rng.randint(1, 8), rng.randint(1, 8)
        M = np.array([[rng.randint(0, 1) for _ in range(cols)] for _ in range(rows)], dtype=np.uint8)
        assert gf2.rank(M) == gf2.rank(M.T)


def test_kernel_identity_is_empty():
    basis = gf2.kernel_basis(gf2.identity(3))
    assert basis.shape == (0, 3)


def test_kernel_parity_check():
    basis = gf2.kernel_basis(np.array([[1, 1]], dtype=np.uint8))
    assert basis.tolist() == [[1, 1]]


def test_kernel_of_dependent_all_ones():
    # 6 columns, rank 1: the kernel has 5 basis vectors.
    basis = gf2.kernel_basis(TORUS_HX)
    assert basis.shape == (5, 6)
    assert not np.any((TORUS_HX @ basis.T) % 2)


def test_kernel_vectors_annihilated():
    rng = random.Random(7)
    for _ in range(50):
        rows, cols = rng.randint(1, 6), rng.randint(1, 9)
        M = np.array([[rng.randint(0, 1) for _ in range(cols)] for _ in range(rows)], dtype=np.uint8)
        basis = gf2.kernel_basis(M)
        assert basis.shape[0] == M.shape[1] - gf2.rank(M)
        if basis.size:
            assert not np.any((M @ basis.T) % 2)


def test_row_space_contains_zero_vector():
    assert gf2.row_space_contains(TORUS_HZ, np.zeros(6, dtype=np.uint8))


def test_row_space_contains_identity_row():
    assert gf2.row_space_contains(gf2.identity(2), np.array([1, 0], dtype=np.uint8))


def test_row_space_membership_by_elimination():
    # The all-ones vector is outside the row space of the torus Hz: its span
    # is {0, the four rows, r1+r2, r1+r3, r1+r4} and none of these is all-ones.
    assert not gf2.row_space_contains(TORUS_HZ, np.ones(6, dtype=np.uint8))
    assert gf2.row_space_contains(TORUS_HZ, (TORUS_HZ[0] ^ TORUS_HZ[2]))


def test_row_space_length_mismatch():
    with pytest.raises(ValueError):
        gf2.row_space_contains(TORUS_HZ, np.ones(5, dtype=np.uint8))


def test_invert_identity():
    assert np.array_equal(gf2.invert(gf2.identity(4)), gf2.identity(4))


def test_invert_upper_triangular_self_inverse():
    T = np.array([[1, 1], [0, 1]], dtype=np.uint8)
    assert np.array_equal(gf2.invert(T), T)


def test_invert_random_product_check():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(1, 8)
        T = random_invertible(rng, n)
        assert np.array_equal((T @ gf2.invert(T)) % 2, gf2.identity(n))


def test_invert_singular_raises():
    with pytest.raises(gf2.SingularMatrixError):
        gf2.invert(np.array([[1, 1], [1, 1]], dtype=np.uint8))


def test_invert_torus_basis_change():
    T = gf2.elementary_matrix(gf2.ElementaryFactor(1, 2, 6))
    assert np.array_equal((gf2.invert(T) @ T) % 2, gf2.identity(6))


def test_elementary_matrix_definition():
    assert gf2.elementary_matrix(gf2.ElementaryFactor(1, 2, 2)).tolist() == [[1, 1], [0, 1]]
    assert gf2.elementary_matrix(gf2.ElementaryFactor(2, 1, 2)).tolist() == [[1, 0], [1, 1]]


def test_elementary_factor_rejects_equal_indices():
    with pytest.raises(ValueError):
        gf2.ElementaryFactor(2, 2, 3)


def test_elementary_factor_squares_to_identity():
    for i in range(1, 5):
        for j in range(1, 5):
            if i == j:
                continue
            R = gf2.elementary_matrix(gf2.ElementaryFactor(i, j, 4))
            assert np.array_equal((R @ R) % 2, gf2.identity(4))


def test_decompose_identity_is_empty():
    assert gf2.decompose_elementary(gf2.identity(5)) == []


def test_decompose_single_factor():
    factors = gf2.decompose_elementary(np.array([[1, 1], [0, 1]], dtype=np.uint8))
    assert factors == [gf2.ElementaryFactor(1, 2, 2)]


def test_decompose_swap_needs_three_factors():
    swap = np.array([[0, 1], [1, 0]], dtype=np.uint8)
    factors = gf2.decompose_elementary(swap)
    assert len(factors) == 3
    assert np.array_equal(gf2.multiply_factors(factors, 2), swap)


def test_decompose_singular_raises():
    with pytest.raises(gf2.SingularMatrixError):
        gf2.decompose_elementary(np.array([[1, 1], [1, 1]], dtype=np.uint8))


def test_decompose_zero_diagonal_with_earlier_column_set():
    # Row 2 has its only ones in columns 1 and 3; the repair column must be
    # picked to the right of the diagonal or row 1 gets corrupted.
    T = np.array([[1, 0, 0], [1, 0, 1], [0, 1, 0]], dtype=np.uint8)
    factors = gf2.decompose_elementary(T)
    assert np.array_equal(gf2.multiply_factors(factors, 3), T)


def test_decompose_random_products():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(2, 8)
        T = random_invertible(rng, n)
        factors = gf2.decompose_elementary(T)
        assert len(factors) <= n * n
        assert np.array_equal(gf2.multiply_factors(factors, n), T)
        assert np.array_equal(gf2.multiply_factors(reversed(factors), n), gf2.invert(T))


def test_matrix_format_round_trip():
    text = gf2.format_matrix(TORUS_HZ)
    assert text.splitlines()[0] == "4 6"
    assert np.array_equal(gf2.parse_matrix(text), TORUS_HZ)


def test_matrix_format_empty_rows():
    M = np.zeros((0, 5), dtype=np.uint8)
    assert np.array_equal(gf2.parse_matrix(gf2.format_matrix(M)), M)


def test_parse_matrix_rejects_bad_entries():
    with pytest.raises(ValueError):
        gf2.parse_matrix("1 2\n0 2\n")
    with pytest.raises(ValueError):
        gf2.parse_matrix("2 2\n0 1\n")

