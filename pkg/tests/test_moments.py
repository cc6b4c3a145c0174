from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperoct.moments import (
    DyckPath,
    JacobiSeq,
    bareiss_det,
    catalan,
    cross_check,
    dyck_moments,
    dyck_paths,
    hankel_check,
    hankel_det,
    jacobi_moments,
    specializations,
)
from hyperoct.poly import ONE, QM, QP, BivarPoly


def test_small_moments():
    assert jacobi_moments(2) == ONE + QM
    assert jacobi_moments(4) == (ONE + QM) * (ONE * 2 + QM * 2 + QP * 2)
    assert jacobi_moments(3) == BivarPoly()
    assert jacobi_moments(6, 0, 0) == 5


def test_jacobi_seq():
    lam = JacobiSeq()
    assert lam(1) == ONE + QM
    assert JacobiSeq(Fraction(-1, 3), Fraction(1, 3)).first_zero() == 3
    assert JacobiSeq(Fraction(1, 2), Fraction(0)).c == 0
    with pytest.raises(ValueError):
        lam(0)


def test_dyck_examples():
    assert sum(1 for _ in dyck_paths(3)) == 5
    uudd, udud = DyckPath((1, 1, -1, -1)), DyckPath((1, -1, 1, -1))
    assert uudd.weight() == (ONE + QM + QP * 2) * (ONE + QM)
    assert udud.weight() == (ONE + QM) ** 2
    assert dyck_moments(4) == uudd.weight() + udud.weight()
    with pytest.raises(ValueError):
        DyckPath((1, -1, -1, 1))


@pytest.mark.parametrize("n", range(0, 7))
def test_catalan_counts(n):
    assert sum(1 for _ in dyck_paths(n)) == catalan(n)


@pytest.mark.parametrize("two_n", [2, 4, 6, 8, 10, 12])
def test_jacobi_equals_dyck(two_n):
    assert jacobi_moments(two_n) == dyck_moments(two_n)


def test_cross_check_all_routes():
    rep = cross_check(8)
    assert rep.ok
    assert [r.two_n for r in rep.rows] == [2, 4, 6, 8]


def test_cross_check_values():
    rep = cross_check(4)
    m4 = rep.rows[1].routes["jacobi"]
    assert m4.evaluate(Fraction(1), Fraction(1)) == 12
    assert m4.evaluate(Fraction(0), Fraction(1)) == 8


@given(st.builds(Fraction, st.integers(-5, 5), st.integers(1, 5)),
       st.builds(Fraction, st.integers(-5, 5), st.integers(1, 5)),
       st.integers(0, 5))
def test_numeric_matches_symbolic(qp, qm, n):
    assert jacobi_moments(2 * n, qp, qm) == jacobi_moments(2 * n).evaluate(qp, qm)


def test_specializations():
    rows = specializations(4)
    assert all(r.ok for r in rows)
    r3 = rows[2]
    assert r3.value_22 == 120 and r3.value_20 == 40
    assert r3.drake["cycles"] == [0, 3, 7, 5]


def test_semicircle_at_qp_zero():
    m = jacobi_moments(6)
    assert BivarPoly.coerce(m.evaluate(Fraction(0), QM)) == (ONE + QM) ** 3 * 5


def test_total_count_at_x_y_2():
    for n in range(1, 5):
        assert jacobi_moments(2 * n).evaluate(Fraction(1), Fraction(1)) == factorial(2 * n) // factorial(n)


# -- Hankel ---------------------------------------------------------------------------
def _det_oracle(A):
    """Laplace expansion over Fractions."""
    if not A:
        return Fraction(1)
    if len(A) == 1:
        return Fraction(A[0][0])
    return sum(((-1) ** j * A[0][j] * _det_oracle([r[:j] + r[j + 1:] for r in A[1:]]) for j in range(len(A))), Fraction(0))


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_laplace(A):
    assert bareiss_det(A) == _det_oracle(A)


def test_hankel_rational():
    moms = [Fraction(1), Fraction(0), Fraction(1, 2), Fraction(0), Fraction(3, 4)]
    H = [[moms[i + j] for j in range(3)] for i in range(3)]
    assert hankel_det(moms, 3) == _det_oracle(H)


@pytest.mark.parametrize("M", [1, 2, 3])
@pytest.mark.parametrize("N", [1, 2])
def test_hankel_atoms(M, N):
    r = hankel_check(M, N)
    assert r.ok and r.det_M1 > 0 and r.det_M2 == 0
