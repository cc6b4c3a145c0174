from fractions import Fraction
from math import factorial

import pytest

from hyperoct.group import SignedPermutation
from hyperoct.partitions import Partition
from hyperoct.type_d import (
    b_consistent,
    classes_D,
    classify_D,
    coefficient_D,
    enumerate_D,
    in_pd_set,
    is_in_D,
    phi_constant_on_classes,
    scan_D,
    sign_product,
    split_types,
    splits,
    splitting_matches_rule,
)

GRID = [Fraction(0)] + [Fraction(s, k) for k in (1, 2, 3, 4, 5) for s in (1, -1)]


def test_membership():
    s = SignedPermutation((-1, -2))
    assert is_in_D(s) and sign_product(s) == 1
    assert not is_in_D(SignedPermutation((-1, 2)))


@pytest.mark.parametrize("n", range(1, 5))
def test_order_and_sign_product(n):
    elems = enumerate_D(n)
    assert len(elems) == 2 ** (n - 1) * factorial(n)
    assert all(sign_product(s) == 1 for s in elems)
    es = set(elems)
    assert all(a * b in es for a in elems[:10] for b in elems[:10])


def test_class_counts():
    assert len(classes_D(2)) == 4
    assert len(classes_D(3)) == 5
    assert len(classes_D(4)) == 13
    assert split_types(2) == [(Partition((2,)), Partition(()))]
    assert split_types(4) == [(Partition((2, 2)), Partition(())), (Partition((4,)), Partition(()))]


@pytest.mark.parametrize("n", range(1, 5))
def test_splitting_rule(n):
    assert splitting_matches_rule(n)
    assert sum(c.size for c in classes_D(n)) == len(enumerate_D(n))


def test_split_tags_deterministic():
    a = [c.label() for c in classes_D(4)]
    b = [c.label() for c in classes_D(4)]
    assert a == b
    assert "(2,2;)+" in a and "(2,2;)-" in a


def test_splits_rule():
    assert splits((2, 2), ()) and splits((4,), ())
    assert not splits((2, 1), ()) and not splits((2,), (2,)) and not splits((), ())


@pytest.mark.parametrize("q", [Fraction(1, 3), Fraction(1, 2), Fraction(-1), Fraction(0)])
def test_phi_constant_on_D_classes(q):
    for n in range(1, 5):
        assert phi_constant_on_classes(n, q)


def test_coefficient_symmetric():
    q = Fraction(1, 2)
    assert coefficient_D((2, 1), (1,), q) == coefficient_D((1,), (2, 1), q)


def test_examples():
    assert classify_D(Fraction(1, 3)).positive_definite and classify_D(Fraction(1, 3)).N == 1
    assert classify_D(0).positive_definite
    r = classify_D(Fraction(1, 2))
    assert not r.positive_definite
    assert r.witness == ((), (2, 1, 1)) and r.witness_value == Fraction(-3, 128)


def test_frozen_witnesses():
    assert classify_D(Fraction(-1, 2)).witness == ((), (4,))
    r = classify_D(Fraction(1, 4))
    assert r.witness == ((), (1, 1, 1, 1)) and r.witness_value == Fraction(-3, 2048)
    assert classify_D(Fraction(-1, 4)).witness == ((), (4,))


@pytest.mark.parametrize("q", GRID)
def test_classify_against_scan(q):
    r = classify_D(q)
    hits = scan_D(q, 8, first_only=True)
    assert r.positive_definite == (not hits)
    if hits:
        assert r.witness == hits[0][0]
    assert b_consistent(r)


def test_pd_set():
    assert in_pd_set(Fraction(1, 5)) and in_pd_set(Fraction(-1, 3)) and in_pd_set(1) and in_pd_set(-1)
    assert not in_pd_set(Fraction(1, 2)) and not in_pd_set(Fraction(2, 3))


def test_b_consistency_signs():
    r = classify_D(Fraction(1, 3))
    assert (r.b_result.M, r.b_result.N) == (2, 1)
    r = classify_D(Fraction(-1, 3))
    assert r.b_result.verdict == "extreme"
