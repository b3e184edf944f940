from fractions import Fraction

from liereg import linalg
from liereg.linalg import Echelon, frac, rank, rref, solve


def test_frac_passthrough():
    assert frac("3/4") == Fraction(3, 4)
    assert frac(2) == 2


def test_mat_vec_and_vec_mat():
    m = linalg.mat([[1, 2], [3, 4]])
    assert linalg.mat_vec(m, (1, 1)) == (3, 7)
    assert linalg.vec_mat((1, 1), m) == (4, 6)


def test_kron_shape_and_values():
    a = linalg.mat([[1, 2]])
    b = linalg.mat([[3], [4]])
    assert linalg.kron(a, b) == ((3, 6), (4, 8))
    assert linalg.vec_kron((1, 2), (3, 4)) == (3, 4, 6, 8)


def test_echelon_incremental():
    e = Echelon()
    assert e.add((1, 2, 3))
    assert not e.add((2, 4, 6))
    assert e.add((0, 1, 1))
    assert e.rank == 2
    assert e.contains((1, 3, 4))
    assert not e.contains((0, 0, 1))


def test_rank_and_rref_pivots():
    rows = [(1, 2, 0), (0, 0, 1), (1, 2, 1)]
    assert rank(rows) == 2
    basis, pivots = rref(rows)
    assert pivots == [0, 2]
    assert basis[0][0] == 1 and basis[1][2] == 1


def test_solve_unique():
    a = [(2, 0), (0, 3)]
    assert solve(a, (4, 9)) == (2, 3)


def test_solve_overdetermined_consistent():
    a = [(1, 0), (0, 1), (1, 1)]
    assert solve(a, (1, 2, 3)) == (1, 2)


def test_solve_inconsistent():
    a = [(1, 0), (1, 0)]
    assert solve(a, (1, 2)) is None


def test_solve_underdetermined_free_vars_zero():
    a = [(1, 1)]
    assert solve(a, (5,)) == (5, 0)
