import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperoct.group import (
    RankMismatch,
    Reflection,
    SignedPermutation,
    bfs_reflection_length,
    class_size,
    compose,
    conjugacy_classes,
    coxeter_generators,
    cycle_type,
    enumerate_group,
    factorization_identity,
    group_order,
    is_nonmixing,
    minimal_nonmixing_factorization,
    padded_cycle_types,
    phi,
    phi_of,
    product,
    reflection_lengths,
    reflections,
)
from hyperoct.poly import QM, QP


@st.composite
def elements(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    perm = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return SignedPermutation([s * p for s, p in zip(signs, perm)])


def same_rank(k=2):
    return st.integers(1, 5).flatmap(lambda n: st.tuples(*[elements(n, n)] * k))


def test_signed_model_example():
    # signed model (1,-1,1,-1,-1,1; (124)(35)(6)) has window (-2,-4,-5,1,3,6)
    s = SignedPermutation.from_signed((1, -1, 1, -1, -1, 1), (2, 4, 5, 1, 3, 6))
    assert s.word() == (-2, -4, -5, 1, 3, 6)
    assert s.to_signed() == ((1, -1, 1, -1, -1, 1), (2, 4, 5, 1, 3, 6))
    assert s == SignedPermutation.from_cycles(6, [(1, -2, 4), (3, -5, -3, 5)])
    t = cycle_type(s, "padded")
    assert t.rho_plus == (3, 1) and t.rho_minus == (2,)


def test_example_word_and_cycles():
    s = SignedPermutation((-2, -4, -5, 1, 3, 6))
    assert s(1) == -2 and s(-1) == 2
    assert s.inverse() * s == SignedPermutation.identity(6)


def test_example_cycle_type():
    s = SignedPermutation.from_cycles(5, [(1, -2, 4), (3, -5, -3, 5)])
    t = cycle_type(s, "padded")
    assert t.rho_plus == (3,) and t.rho_minus == (2,)
    assert reflection_lengths(s) == (3, 1)
    assert phi_of(s) == QP ** 3 * QM
    assert phi_of(s, Fraction(1, 2), Fraction(1, 3)) == Fraction(1, 24)


@given(same_rank(3))
def test_group_axioms(t):
    a, b, c = t
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == SignedPermutation.identity(a.n)
    assert (a * b)(1) == a(b(1))


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        compose(SignedPermutation((1,)), SignedPermutation((1, 2)))


@given(same_rank(2))
def test_phi_is_central(t):
    g, h = t
    assert cycle_type(g.conjugate_by(h)) == cycle_type(g)
    assert phi_of(g.conjugate_by(h)) == phi_of(g)


@given(elements())
def test_bar_equivariance(s):
    for i in range(1, s.n + 1):
        assert s(-i) == -s(i)


def test_counts():
    for n in range(1, 6):
        elems = list(enumerate_group(n))
        assert len(elems) == len(set(elems)) == group_order(n)
        assert len(reflections(n)) == n * n
        assert sum(class_size(t, n) for t in padded_cycle_types(n)) == group_order(n)


def test_conjugacy_classes_brute_force():
    for n in range(1, 5):
        classes = conjugacy_classes(n)
        assert len(classes) == len(padded_cycle_types(n))
        for t in padded_cycle_types(n):
            assert len(classes[t.key()]) == class_size(t, n)
    assert len(conjugacy_classes(4)) == 20


def test_factorization_every_element_small():
    for n in range(1, 5):
        for s in enumerate_group(n):
            f = minimal_nonmixing_factorization(s)
            assert product(f, n) == s
            long_, short = reflection_lengths(s)
            assert sum(r.kind == "long" for r in f) == long_
            assert sum(r.kind == "short" for r in f) == short
            assert is_nonmixing(s, f)


def test_factorization_is_minimal_bfs_oracle():
    for n in range(1, 4):
        for s in enumerate_group(n):
            assert bfs_reflection_length(s) == sum(reflection_lengths(s))


def test_factorization_b5_example():
    s = SignedPermutation.from_cycles(5, [(3, -5, -3, 5)])
    assert minimal_nonmixing_factorization(s) == [Reflection.long(3, 5), Reflection.short(3)]


@given(elements(max_n=7))
def test_factorization_random(s):
    f = minimal_nonmixing_factorization(s)
    assert product(f, s.n) == s
    assert len(f) == sum(reflection_lengths(s))


def test_factorization_identity_small():
    for n in range(1, 4):
        r = factorization_identity(n)
        assert r.equal and r.equal_reversed


def test_coxeter_relations():
    gens = coxeter_generators(4)
    e = SignedPermutation.identity(4)
    for g in gens:
        assert g * g == e
    s0, s1, s2 = gens[0], gens[1], gens[2]
    w = s0 * s1
    assert w * w * w * w == e and w * w != e
    v = s1 * s2
    assert v * v * v == e
    assert s0 * s2 == s2 * s0


def test_phi_values_on_classes():
    for n in range(1, 5):
        for t in padded_cycle_types(n):
            r = t.reduced()
            assert phi(r) == QP ** (r.rho_plus.norm + r.rho_minus.norm) * QM ** r.rho_minus.length


def test_random_element_is_deterministic():
    from hyperoct.group import random_element

    a = [random_element(5, random.Random(3)) for _ in range(2)]
    assert a[0] == a[1]
