"""Integer partitions and the few statistics the rest of the package needs."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, List, Tuple


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    >>> Partition([1, 3, 1])
    Partition(3, 1, 1)
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = sorted((int(p) for p in parts), reverse=True)
        if parts and parts[-1] <= 0:
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return "Partition(" + ", ".join(map(str, self)) + ")"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def norm(self) -> int:
        """``|rho| - l(rho)``."""
        return sum(self) - len(self)

    def multiplicity(self, j: int) -> int:
        return sum(1 for p in self if p == j)

    def multiplicities(self) -> dict:
        out: dict = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return out

    def boxes(self) -> Iterator[Tuple[int, int]]:
        """Boxes ``(row, column)``, both starting at 1."""
        for i, p in enumerate(self, 1):
            for j in range(1, p + 1):
                yield i, j

    def contents(self) -> List[int]:
        return [j - i for i, j in self.boxes()]

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p >= j) for j in range(1, self[0] + 1))

    def hooks(self) -> List[int]:
        conj = self.conjugate()
        return [self[i - 1] - j + conj[j - 1] - i + 1 for i, j in self.boxes()]

    def hook_product(self) -> int:
        out = 1
        for h in self.hooks():
            out *= h
        return out

    def without_ones(self) -> "Partition":
        return Partition(p for p in self if p != 1)

    def to_list(self) -> List[int]:
        return list(self)


EMPTY = Partition()


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int) -> List[Partition]:
    """All partitions of ``n`` in reverse lexicographic order ((n) first)."""
    if n < 0:
        return []
    return [Partition(p) for p in _partitions(n, n)]


def bipartitions(n: int) -> List[Tuple[Partition, Partition]]:
    """Pairs ``(lam_plus, lam_minus)`` of total size ``n``.

    Ordered by ``|lam_plus|`` descending, then by each factor's order.
    """
    out = []
    for k in range(n, -1, -1):
        for a in partitions(k):
            for b in partitions(n - k):
                out.append((a, b))
    return out


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,1"``, ``"(3,2,1)"`` or ``""`` / ``"-"`` (empty)."""
    text = text.strip().strip("()[]")
    if text in ("", "-", "0"):
        return EMPTY
    return Partition(int(t) for t in text.replace(" ", "").split(",") if t)
