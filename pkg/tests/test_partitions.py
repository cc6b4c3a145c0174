import itertools
from math import factorial

from hypothesis import given
from hypothesis import strategies as st

from hyperoct.partitions import Partition, bipartitions, parse_partition, partitions

# OEIS A000041
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

small_partitions = st.integers(0, 9).flatmap(lambda n: st.sampled_from(partitions(n)))


def test_partition_counts():
    assert [len(partitions(n)) for n in range(11)] == PARTITION_COUNTS


def test_order_and_parse():
    assert partitions(3) == [Partition([3]), Partition([2, 1]), Partition([1, 1, 1])]
    assert parse_partition("(3,1,1)") == Partition([1, 3, 1])
    assert parse_partition("") == Partition()
    assert len(bipartitions(4)) == 20


@given(small_partitions)
def test_conjugate_is_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size
    assert sorted(lam.contents()) == sorted(-c for c in lam.conjugate().contents())


def _standard_tableaux(lam):
    """Count standard Young tableaux by removing corners (oracle)."""
    if lam.size == 0:
        return 1
    total = 0
    for i in range(len(lam)):
        if i + 1 == len(lam) or lam[i] > lam[i + 1]:
            total += _standard_tableaux(Partition(list(lam[:i]) + [lam[i] - 1] + list(lam[i + 1:])) if lam[i] > 1
                                        else Partition(list(lam[:i]) + list(lam[i + 1:])))
    return total


@given(small_partitions)
def test_hook_length_formula(lam):
    assert factorial(lam.size) // lam.hook_product() == _standard_tableaux(lam)


def test_sum_of_squares():
    for n in range(1, 8):
        assert sum((factorial(n) // lam.hook_product()) ** 2 for lam in partitions(n)) == factorial(n)


def _ssyt_count(lam, N):
    """Semistandard tableaux with entries <= N by brute force."""
    boxes = list(lam.boxes())
    count = 0
    for fill in itertools.product(range(1, N + 1), repeat=len(boxes)):
        T = dict(zip(boxes, fill))
        if all(T[(i, j)] <= T[(i, j + 1)] for (i, j) in boxes if (i, j + 1) in T) and \
           all(T[(i, j)] < T[(i + 1, j)] for (i, j) in boxes if (i + 1, j) in T):
            count += 1
    return count


def test_hook_content_formula_against_ssyt():
    for n in range(0, 5):
        for lam in partitions(n):
            for N in range(1, 4):
                num = 1
                for c in lam.contents():
                    num *= N + c
                assert num % lam.hook_product() == 0
                assert num // lam.hook_product() == _ssyt_count(lam, N)
