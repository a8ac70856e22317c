from fractions import Fraction

import pytest

from cubiclat import exact


def test_bareiss_det_small():
    assert exact.bareiss_det([]) == 1
    assert exact.bareiss_det([[7]]) == 7
    assert exact.bareiss_det([[1, 2], [3, 4]]) == -2
    assert exact.bareiss_det([[2, -1], [-1, 2]]) == 3
    assert exact.bareiss_det([[1, 2], [2, 4]]) == 0


def test_bareiss_det_matches_cofactor_expansion():
    a = [[3, 1, 4], [1, 5, 9], [2, 6, 5]]
    det3 = (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))
    assert exact.bareiss_det(a) == det3 == -90


def test_bareiss_needs_no_row_swap_luck():
    # zero pivot in the corner forces the swap path
    assert exact.bareiss_det([[0, 1], [1, 0]]) == -1
    assert exact.bareiss_det([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1


def test_frac_det_and_inverse():
    a = [[Fraction(1, 2), 0], [0, Fraction(1, 3)]]
    assert exact.frac_det(a) == Fraction(1, 6)
    inv = exact.frac_inverse([[2, 1], [1, 1]])
    assert exact.mat_mul(inv, [[2, 1], [1, 1]]) == exact.identity(2)
    with pytest.raises(ZeroDivisionError):
        exact.frac_inverse([[1, 2], [2, 4]])


def test_solve_exact():
    a = [[2, 1], [1, 3]]
    x = exact.solve_exact(a, [5, 10])
    assert [sum(a[i][j] * x[j] for j in range(2)) for i in range(2)] == [5, 10]
    assert all(isinstance(c, Fraction) for c in x)


def test_rational_rank():
    assert exact.rational_rank([[1, 2], [2, 4]]) == 1
    assert exact.rational_rank([[1, 0], [0, 1]]) == 2
    assert exact.rational_rank([[0, 0], [0, 0]]) == 0
    assert exact.rational_rank([[1, 2, 3], [4, 5, 6]]) == 2


def test_smith_normal_form_factorization():
    a = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
    d, u, v = exact.smith_normal_form(a)
    assert exact.mat_mul(exact.mat_mul(u, a), v) == d
    assert abs(exact.bareiss_det(u)) == 1
    assert abs(exact.bareiss_det(v)) == 1
    diag = [d[i][i] for i in range(3)]
    for i in range(2):
        if diag[i + 1] != 0:
            assert diag[i + 1] % diag[i] == 0
    # |det| is preserved by the unimodular transforms
    assert diag[0] * diag[1] * diag[2] == abs(exact.bareiss_det(a))


def test_snf_diagonal_known_values():
    assert exact.snf_diagonal([[2, 0], [0, 6]]) == [2, 6]
    assert exact.snf_diagonal([[6, 0], [0, 4]]) == [2, 12]
    assert exact.snf_diagonal([[1, 2], [2, 4]]) == [1, 0]


def test_integer_kernel():
    k = exact.integer_kernel([[1, 2, 3]])
    assert len(k) == 2
    for col in k:
        assert col[0] + 2 * col[1] + 3 * col[2] == 0
    assert exact.integer_kernel([[1, 0], [0, 1]]) == []
    # saturation: the kernel of [2 4] is generated by (2, -1), not (4, -2)
    k = exact.integer_kernel([[2, 4]])
    assert len(k) == 1
    assert exact.gcd_list(k[0]) == 1


def test_hermite_column_basis():
    basis = exact.hermite_column_basis([[2, 4, 6], [0, 2, 4]])
    assert len(basis) == 2
    for col in basis:
        lead = next(x for x in col if x != 0)
        assert lead > 0
    # span is unchanged: rebuilding from basis + originals adds nothing
    cols = exact.transpose([[2, 4, 6], [0, 2, 4]])
    again = exact.hermite_column_basis(
        exact.transpose(cols + [list(b) for b in basis]))
    assert again == basis


def test_hermite_reduces_off_pivot_entries():
    basis = exact.hermite_column_basis([[3, 5], [0, 4]])
    pivots = [next(i for i, x in enumerate(col) if x) for col in basis]
    for j, col in enumerate(basis):
        for k, other in enumerate(basis):
            if k != j:
                assert 0 <= other[pivots[j]] < col[pivots[j]]


def test_matrix_helpers():
    a = [[1, 2], [3, 4]]
    assert exact.transpose(a) == [[1, 3], [2, 4]]
    assert exact.mat_vec(a, [1, 1]) == [3, 7]
    assert exact.vec_mat([1, 1], a) == [4, 6]
    assert exact.column(a, 1) == [2, 4]
    assert exact.mat_mul(a, exact.identity(2)) == a
    assert not exact.is_zero_matrix(a)
    assert exact.is_zero_matrix([[0, 0]])


def test_gcd_lcm_lists():
    assert exact.gcd_list([12, 18, 30]) == 6
    assert exact.gcd_list([]) == 0
    assert exact.gcd_list([-4, 6]) == 2
    assert exact.lcm_list([4, 6]) == 12
    assert exact.lcm_list([]) == 1
    assert exact.lcm_list([0, 5]) == 5
