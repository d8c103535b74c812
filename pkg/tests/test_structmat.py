import numpy as np
import pytest

from src.errors import DomainError
from src.structmat import (
    IntMatrix,
    build_band_matrix,
    build_family,
    build_klove_matrix,
    build_omega_matrix,
)


def test_band_matrix_small():
    assert build_band_matrix(1, 3).tolist() == [[1, 1, 0], [1, 1, 1], [0, 1, 1]]


def test_band_matrix_radius_zero_is_identity():
    assert build_band_matrix(0, 4).tolist() == np.eye(4, dtype=int).tolist()


@pytest.mark.parametrize("d,n", [(-1, 3), (1, 0)])
def test_band_matrix_rejects_bad_arguments(d, n):
    with pytest.raises(DomainError):
        build_band_matrix(d, n)


def test_band_matrix_bandwidth():
    assert build_band_matrix(2, 7).bandwidth() == 2
    assert build_band_matrix(9, 4).bandwidth() == 3


def test_klove_matrix_small():
    assert build_klove_matrix(1, 3).tolist() == [[2, 1, 0], [1, 1, 1], [0, 1, 2]]


def test_klove_row_and_column_sums():
    for d in range(1, 6):
        for n in range(2 * d + 1, 41):
            matrix = build_klove_matrix(d, n)
            assert set(matrix.row_sums()) == {2 * d + 1}
            assert set(matrix.col_sums()) == {2 * d + 1}


def test_klove_matrix_point_symmetry():
    for d in range(1, 5):
        for n in range(2 * d + 1, 16):
            entries = build_klove_matrix(d, n).entries
            assert (entries == entries[::-1, ::-1]).all(), (d, n)


def test_klove_corner_is_omega_matrix_at_two():
    for d in range(1, 6):
        expected = build_omega_matrix(d).substitute(2).tolist()
        for n in range(2 * d + 1, 2 * d + 6):
            assert build_klove_matrix(d, n).entries[:d, :2 * d].tolist() == expected, (d, n)


@pytest.mark.parametrize("d,n", [(1, 2), (2, 4), (0, 5)])
def test_klove_matrix_rejects_small_n(d, n):
    with pytest.raises(DomainError):
        build_klove_matrix(d, n)


def test_omega_matrix_d2():
    assert build_omega_matrix(2).tolist() == [["x", "x", "1", "0"], ["x", "1", "1", "1"]]


def test_omega_matrix_row_shape():
    for d in range(1, 7):
        matrix = build_omega_matrix(d)
        assert (matrix.rows, matrix.cols) == (d, 2 * d)
        for i, row in enumerate(matrix.tolist(), start=1):
            assert row.count("x") == d + 1 - i
            assert row.count("1") == 2 * i - 1
            assert row.count("0") == d - i


def test_omega_matrix_substitute():
    assert build_omega_matrix(1).substitute(3).tolist() == [[3, 1]]


def test_omega_matrix_is_monomial():
    assert build_omega_matrix(3).is_monomial()
    assert not build_omega_matrix(2).shift(1).is_monomial()


def test_int_matrix_rejects_negative_entries():
    with pytest.raises(DomainError):
        IntMatrix.from_rows([[1, -1], [0, 1]])


def test_int_matrix_is_read_only():
    matrix = build_band_matrix(1, 3)
    with pytest.raises(ValueError):
        matrix.entries[0, 0] = 5


def test_int_matrix_equality_and_hash():
    a = IntMatrix.from_rows([[1, 1], [1, 1]])
    b = build_band_matrix(1, 2)
    assert a == b
    assert hash(a) == hash(b)
    assert a.at(2, 1) == 1


def test_build_family_unknown():
    with pytest.raises(DomainError):
        build_family("circulant", 1, 3)
