from collections import defaultdict
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperoct.chars import (
    char_A,
    char_B,
    character_table_B,
    class_weighted_sum,
    classify,
    classify_A,
    coefficient_B,
    coefficient_B_at,
    column_orthogonality,
    gram_psd,
    hirai_degenerate_matches_phi,
    hirai_matches_phi,
    isotypic_quadratic_form,
    rozklad_report,
    rozklad_weight,
    scan_coefficients,
)
from hyperoct.group import class_size, cycle_type, enumerate_group, group_order
from hyperoct.partitions import bipartitions, partitions


# -- oracle: Frobenius formula chi^lam(mu) = [x^(lam+delta)] a_delta * p_mu ------
def _frobenius(lam, mu):
    n = sum(lam)
    k = n  # enough variables
    lam = list(lam) + [0] * (k - len(lam))
    target = tuple(lam[i] + k - 1 - i for i in range(k))
    # a_delta as {exponent: coeff}
    from itertools import permutations

    poly = {}
    for perm in permutations(range(k)):
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        poly[tuple(k - 1 - p for p in perm)] = (-1) ** inv
    for part in mu:
        nxt = defaultdict(int)
        for e, c in poly.items():
            for i in range(k):
                f = list(e)
                f[i] += part
                nxt[tuple(f)] += c
        poly = nxt
    return poly.get(target, 0)


@pytest.mark.parametrize("n", range(1, 6))
def test_char_A_against_frobenius(n):
    for lam in partitions(n):
        for mu in partitions(n):
            assert char_A(lam, mu) == _frobenius(lam, mu)


def test_char_A_size_mismatch():
    with pytest.raises(ValueError):
        char_A((2,), (1,))


@pytest.mark.parametrize("n", range(1, 5))
def test_char_B_row_orthogonality_by_elements(n):
    elems = list(enumerate_group(n))
    types = [cycle_type(g, "padded") for g in elems]
    irreps = bipartitions(n)
    for a in irreps:
        for b in irreps:
            s = sum(char_B(a, t) * char_B(b, t) for t in types)
            assert s == (group_order(n) if a == b else 0)


@pytest.mark.parametrize("n", range(1, 6))
def test_char_B_dimensions(n):
    for lp, lm in bipartitions(n):
        k = lp.size
        f = lambda p: char_A(p, (1,) * p.size) if p.size else 1
        assert char_B((lp, lm), ((1,) * n, ())) == comb(n, k) * f(lp) * f(lm)


def test_char_B_small_values():
    # B(1): trivial and sign-of-bar characters
    assert char_B(((1,), ()), ((), (1,))) == 1
    assert char_B(((), (1,)), ((), (1,))) == -1
    # B(2), the 2-dim irrep ((1),(1)) vanishes off the classes with a fixed point pattern
    assert char_B(((1,), (1,)), ((1, 1), ())) == 2
    assert char_B(((1,), (1,)), ((2,), ())) == 0
    assert char_B(((1,), (1,)), ((1,), (1,))) == 0
    assert char_B(((1,), (1,)), ((), (1, 1))) == -2


@pytest.mark.parametrize("n", range(1, 5))
def test_column_orthogonality(n):
    assert column_orthogonality(n)


def test_table_shape():
    irreps, classes, table = character_table_B(4)
    assert len(irreps) == len(classes) == 20
    assert sum(class_size(t, 4) for t in classes) == 384


@pytest.mark.parametrize("n", range(0, 4))
def test_rozklad_hook_normalized(n):
    rep = rozklad_report(n, normalized=True)
    assert rep.ok, rep.mismatches


def test_rozklad_literal_fails_from_n2():
    assert rozklad_report(1, normalized=False).ok
    assert not rozklad_report(2, normalized=False).ok


def test_coefficient_poly_and_evaluation_agree():
    for lam in bipartitions(3):
        poly = coefficient_B(lam)
        for qp, qm in ((Fraction(1, 3), Fraction(1, 3)), (Fraction(-1, 2), Fraction(0)), (Fraction(2), Fraction(-3, 2))):
            assert poly.evaluate(qp, qm) == coefficient_B_at(lam, qp, qm)


# -- classification -------------------------------------------------------------
def test_classify_extreme_example():
    r = classify(Fraction(1, 3), Fraction(1, 3))
    assert (r.verdict, r.M, r.N, r.eps) == ("extreme", 2, 1, 1)


def test_classify_not_pd_example():
    r = classify(Fraction(1, 3), 0)
    assert r.verdict == "not_pd"
    assert r.witness == ((), (1, 1, 1))
    assert r.witness_value == Fraction(-1, 72)


def test_classify_degenerate_and_negative():
    assert classify(0, Fraction(1, 2)).verdict == "degenerate"
    assert classify(0, Fraction(3, 2)).verdict == "not_pd"
    r = classify(Fraction(-1, 4), Fraction(1, 2))
    assert (r.verdict, r.M, r.N, r.eps) == ("extreme", 3, 1, -1)


def test_witness_2_5_plus_minus_one():
    for qm in (1, -1):
        r = classify(Fraction(2, 5), qm)
        assert r.verdict == "not_pd"
        a, b = r.witness
        assert a.size + b.size == 4


def test_isotypic_certificate_size4():
    r = classify(Fraction(2, 5), 1)
    assert isotypic_quadratic_form(r.witness, Fraction(2, 5), 1) == Fraction(-18432, 125)


def test_isotypic_certificate_sign_matches_coefficient():
    for lam in bipartitions(3):
        v = isotypic_quadratic_form(lam, Fraction(1, 3), 0)
        c = coefficient_B_at(lam, Fraction(1, 3), 0)
        assert (v < 0) == (c < 0) and (v == 0) == (c == 0)


small_rationals = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 5))


@settings(max_examples=25)
@given(small_rationals, small_rationals)
def test_classifier_agrees_with_gram(qp, qm):
    r = classify(qp, qm, bound=8)
    if r.positive_definite:
        assert gram_psd(2, qp, qm)
        assert not scan_coefficients(qp, qm, 8)
    elif r.witness is not None and r.witness[0].size + r.witness[1].size <= 2:
        assert not gram_psd(2, qp, qm)


@given(small_rationals, small_rationals)
def test_classifier_and_scan_agree(qp, qm):
    r = classify(qp, qm, bound=8)
    hits = scan_coefficients(qp, qm, 8)
    if r.positive_definite:
        assert not hits
    elif hits:
        assert r.witness == hits[0][0]


@settings(max_examples=20)
@given(st.integers(1, 3), st.integers(0, 3), st.sampled_from((1, -1)))
def test_extreme_points_psd_on_small_groups(M, N, eps):
    qp, qm = Fraction(eps, M + N), Fraction(M - N, M + N)
    assert classify(qp, qm).verdict == "extreme"
    assert gram_psd(2, qp, qm)


def test_class_weighted_sum_is_trivial_multiplicity():
    # <phi, 1> over B(n) is the weight of the trivial irrep ((n), ())
    q = Fraction(1, 3)
    for n in range(1, 4):
        v = class_weighted_sum(n, q, q) / group_order(n)
        assert v == rozklad_weight(((n,), ())).evaluate(q, q)


# -- type A ---------------------------------------------------------------------
def test_classify_A():
    r = classify_A(Fraction(2, 3))
    assert not r.positive_definite
    assert r.witness == (1, 1, 1) and r.witness_value == Fraction(-1, 9)
    assert classify_A(Fraction(1, 2)).positive_definite
    assert classify_A(Fraction(-1, 3)).positive_definite
    assert classify_A(0).positive_definite


# -- Hirai parameters -----------------------------------------------------------
@pytest.mark.parametrize("M,N", [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (3, 0)])
@pytest.mark.parametrize("eps", [1, -1])
def test_hirai_extreme(M, N, eps):
    assert hirai_matches_phi(M, N, eps, 4)


@pytest.mark.parametrize("qm", [Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1)])
def test_hirai_degenerate(qm):
    assert hirai_degenerate_matches_phi(qm, 4)
