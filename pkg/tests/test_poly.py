from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from hyperoct.poly import ONE, QM, QP, BivarPoly, is_zero

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), coeffs, max_size=5
).map(BivarPoly)
points = st.fractions(min_value=-3, max_value=3, max_denominator=5)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == BivarPoly()


@given(polys, polys, points, points)
def test_evaluation_is_a_ring_map(a, b, x, y):
    assert (a * b)(x, y) == a(x, y) * b(x, y)
    assert (a + b)(x, y) == a(x, y) + b(x, y)


@given(polys)
def test_monomial_roundtrip(a):
    mons = a.to_monomials()
    assert BivarPoly.from_monomials(mons) == a
    keys = [(m["e_qp"], m["e_qm"]) for m in mons]
    assert keys == sorted(keys)
    assert all(m["den"] > 0 for m in mons)


def test_basic_values():
    p = (ONE + QM) * (QP * 2 + 2 + QM * 2)
    assert p == 2 + 4 * QM + 2 * QM ** 2 + 2 * QP + 2 * QP * QM
    assert p(Fraction(0), Fraction(0)) == 2
    assert str(QP ** 2 * QM) == "qp^2*qm"
    assert is_zero(BivarPoly()) and is_zero(Fraction(0)) and not is_zero(QP)


def test_zero_power_convention():
    assert (ONE + QP)(0, 0) == 1


def test_first_difference():
    a = 1 + 2 * QP
    b = 1 + 3 * QP
    assert a.first_difference(b) == ((1, 0), 2, 3)
    assert a.first_difference(a) is None
