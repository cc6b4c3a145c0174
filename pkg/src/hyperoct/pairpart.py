"""Symmetric pair partitions of [±n], the hat matching, cycles, semi-cycles
and the moment formulas built on them.

Points are ordered ``-n < ... < -1 < 1 < ... < n``.  Internally a point is
an index ``0..2n-1`` in that order, so the bar map is ``i -> 2n-1-i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

from . import kernels
from .poly import ONE, QM, QP, BivarPoly


def point_index(x: int, n: int) -> int:
    return x + n if x < 0 else x + n - 1


def index_point(i: int, n: int) -> int:
    return i - n if i < n else i - n + 1


class SymPairPartition:
    """Bar-invariant partition of [±n] into pairs and singletons, no pair
    equal to its own bar image."""

    __slots__ = ("n", "partner", "_stats")

    def __init__(self, n: int, blocks: Sequence[Sequence[int]]):
        m = 2 * n
        partner = [-2] * m
        for blk in blocks:
            pts = [int(x) for x in blk]
            if any(x == 0 or abs(x) > n for x in pts):
                raise ValueError(f"block {blk} is not inside [±{n}]")
            idx = [point_index(x, n) for x in pts]
            if any(partner[i] != -2 for i in idx):
                raise ValueError(f"point of {blk} appears twice")
            if len(idx) == 1:
                partner[idx[0]] = -1
            elif len(idx) == 2:
                if idx[0] == idx[1]:
                    raise ValueError(f"degenerate block {blk}")
                partner[idx[0]] = idx[1]
                partner[idx[1]] = idx[0]
            else:
                raise ValueError(f"blocks must be pairs or singletons: {blk}")
        if -2 in partner:
            raise ValueError("blocks do not cover [±n]")
        self.n = n
        self.partner = tuple(partner)
        self._stats = None
        self._validate()

    @classmethod
    def _from_partner(cls, n: int, partner: Sequence[int]) -> "SymPairPartition":
        obj = cls.__new__(cls)
        obj.n = n
        obj.partner = tuple(partner)
        obj._stats = None
        return obj

    def _validate(self):
        m = 2 * self.n
        for i, p in enumerate(self.partner):
            bi = m - 1 - i
            bp = -1 if p < 0 else m - 1 - p
            if self.partner[bi] != bp:
                raise ValueError("partition is not bar-invariant")
            if p >= 0 and p == bi:
                raise ValueError("a pair may not equal its bar image")

    # -- views ---------------------------------------------------------------
    def blocks(self) -> List[Tuple[int, ...]]:
        """Canonical sorted block list (points, not indices)."""
        out = []
        for i, p in enumerate(self.partner):
            if p < 0:
                out.append((index_point(i, self.n),))
            elif p > i:
                out.append((index_point(i, self.n), index_point(p, self.n)))
        return out

    def pairs(self) -> List[Tuple[int, int]]:
        return [b for b in self.blocks() if len(b) == 2]

    def singletons(self) -> List[int]:
        return [b[0] for b in self.blocks() if len(b) == 1]

    def is_perfect(self) -> bool:
        return all(p >= 0 for p in self.partner)

    def to_json(self) -> List[List[int]]:
        return [list(b) for b in self.blocks()]

    def __eq__(self, other):
        return isinstance(other, SymPairPartition) and self.n == other.n and self.partner == other.partner

    def __hash__(self):
        return hash((self.n, self.partner))

    def __repr__(self):
        return f"SymPairPartition({self.n}, {self.blocks()})"

    def stats(self) -> "Stats":
        if self._stats is None:
            c_minus, c, l_c, l_sc, _ = kernels.sym_cycle_stats(list(self.partner))
            self._stats = Stats(c_minus=c_minus, c=c, l_c=l_c, l_sc=l_sc)
        return self._stats

    def epsilon(self) -> Tuple[str, ...]:
        """The unique word in ``{1,*}^n`` for which this partition is admissible."""
        eps = ["?"] * self.n
        for b in self.blocks():
            if len(b) == 1:
                eps[abs(b[0]) - 1] = "*"
            else:
                i, j = sorted((abs(b[0]), abs(b[1])))
                eps[i - 1] = "*"
                eps[j - 1] = "1"
        return tuple(eps)


def is_negative_pair(a: int, b: int) -> bool:
    """``(a, b)`` with ``a < b`` is negative when ``b < -a``."""
    a, b = min(a, b), max(a, b)
    return b < -a


@dataclass(frozen=True)
class Stats:
    c_minus: int
    c: int
    l_c: int
    l_sc: int


def parse_epsilon(eps) -> Tuple[str, ...]:
    if isinstance(eps, str):
        tokens = eps.replace(",", " ").split()
        eps = tokens if len(tokens) > 1 else list(eps.strip())
    out = []
    for e in eps:
        e = str(e).strip()
        if e not in ("*", "1"):
            raise ValueError(f"epsilon letters are '1' and '*', got {e!r}")
        out.append(e)
    return tuple(out)


def _enumerate(n: int, perfect: bool) -> Iterator[Tuple[int, ...]]:
    m = 2 * n
    partner = [-2] * m

    def rec(k):
        # k runs over positive points 1..n; index of +k is n+k-1
        while k <= n and partner[n + k - 1] != -2:
            k += 1
        if k > n:
            yield tuple(partner)
            return
        i = n + k - 1
        bi = m - 1 - i
        if not perfect:
            partner[i] = partner[bi] = -1
            yield from rec(k + 1)
            partner[i] = partner[bi] = -2
        for j in range(m):
            if j == i or j == bi or partner[j] != -2:
                continue
            bj = m - 1 - j
            partner[i], partner[j] = j, i
            partner[bi], partner[bj] = bj, bi
            yield from rec(k + 1)
            partner[i] = partner[j] = partner[bi] = partner[bj] = -2

    yield from rec(1)


def enumerate_partitions(n: int, eps=None, perfect: bool = False) -> List[SymPairPartition]:
    """All members of the symmetric pair(/singleton) partitions of [±n].

    ``eps`` restricts to partitions admissible for that ``{1,*}`` word.
    """
    want = parse_epsilon(eps) if eps is not None else None
    if want is not None and len(want) != n:
        raise ValueError("epsilon word length must equal n")
    out = []
    for partner in _enumerate(n, perfect):
        p = SymPairPartition._from_partner(n, partner)
        if want is not None and p.epsilon() != want:
            continue
        out.append(p)
    out.sort(key=lambda p: p.blocks())
    return out


# -- hat matching -------------------------------------------------------------
@dataclass(frozen=True)
class HatMatching:
    n: int
    partner: Tuple[int, ...]

    def blocks(self) -> List[Tuple[int, ...]]:
        out = []
        for i, p in enumerate(self.partner):
            if p < 0:
                out.append((index_point(i, self.n),))
            elif p > i:
                out.append((index_point(i, self.n), index_point(p, self.n)))
        return out

    def is_noncrossing(self) -> bool:
        arcs = [(i, p) for i, p in enumerate(self.partner) if p > i]
        return not any(a < c < b < d for a, b in arcs for c, d in arcs)

    def covers_singleton(self) -> bool:
        arcs = [(i, p) for i, p in enumerate(self.partner) if p > i]
        singles = [i for i, p in enumerate(self.partner) if p < 0]
        return any(a < s < b for a, b in arcs for s in singles)


def hat(p: SymPairPartition) -> HatMatching:
    return HatMatching(p.n, tuple(kernels.hat_partner(list(p.partner))))


# -- cycles and semi-cycles ----------------------------------------------------
@dataclass(frozen=True)
class Cycle:
    sign: int
    length: int
    support: Tuple[int, ...]


@dataclass(frozen=True)
class SemiCycle:
    length: int
    l_minus: int
    r_minus: int
    l_plus: int
    r_plus: int
    support: Tuple[int, ...]


@dataclass(frozen=True)
class CycleDecomposition:
    cycles: Tuple[Cycle, ...]
    semi_cycles: Tuple[SemiCycle, ...]

    def stats(self) -> Stats:
        c = len(self.cycles)
        return Stats(
            c_minus=sum(1 for x in self.cycles if x.sign < 0),
            c=c,
            l_c=sum(x.length for x in self.cycles) - c,
            l_sc=sum(x.length - 1 for x in self.semi_cycles),
        )


def decompose(p: SymPairPartition) -> CycleDecomposition:
    """Walk the graph of pi-edges and hat-edges.

    Closed walks are cycles (negative when bar-closed); open walks come in
    mirror pairs and form semi-cycles.  Supports are listed in walk order.
    """
    n = p.n
    m = 2 * n
    partner = p.partner
    hp = hat(p).partner
    pt = lambda i: index_point(i, n)  # noqa: E731
    seen = [False] * m
    semis = []
    for s in range(m):
        if seen[s] or (partner[s] >= 0 and hp[s] >= 0):
            continue
        walk = [s]
        cur = s
        use_pi = partner[s] >= 0
        k = 0
        while True:
            nxt = partner[cur] if use_pi else hp[cur]
            if nxt < 0:
                break
            k += use_pi
            cur = nxt
            walk.append(cur)
            use_pi = not use_pi
        for v in walk:
            seen[v] = True
            seen[m - 1 - v] = True
        # orient the walk so it ends at the singleton end
        if partner[walk[0]] < 0 and len(walk) > 1:
            walk.reverse()
        elif len(walk) > 1 and partner[walk[-1]] >= 0:
            raise ValueError("semi-cycle without a singleton end")
        left = walk[-1]
        mirror = [m - 1 - v for v in walk]
        # the plus half is the one whose singleton end is a positive point
        if pt(left) > 0:
            plus, minus = walk, mirror
        else:
            plus, minus = mirror, walk
        semis.append(
            SemiCycle(
                length=k + 1,
                l_minus=pt(minus[-1]),
                r_minus=pt(minus[0]),
                l_plus=pt(plus[-1]),
                r_plus=pt(plus[0]),
                support=tuple(pt(v) for v in plus),
            )
        )
    cycles = []
    for s in range(m):
        if seen[s]:
            continue
        walk = []
        cur = s
        k = 0
        while True:
            walk.append(cur)
            cur = partner[cur]
            walk.append(cur)
            k += 1
            cur = hp[cur]
            if cur == s:
                break
        for v in walk:
            seen[v] = True
        if m - 1 - s in walk:
            cycles.append(Cycle(-1, k // 2, tuple(pt(v) for v in walk)))
        else:
            for v in walk:
                seen[m - 1 - v] = True
            cycles.append(Cycle(1, k, tuple(pt(v) for v in walk)))
    semis.sort(key=lambda sc: sc.r_plus)
    return CycleDecomposition(tuple(cycles), tuple(semis))


def tensor_output_order(p: SymPairPartition) -> List[int]:
    """Points ``l`` of all semi-cycle halves, ordered by their ``r`` key."""
    _, _, _, _, semis = kernels.sym_cycle_stats(list(p.partner))
    return [index_point(l, p.n) for l, _ in semis]


def weight(p: SymPairPartition, with_semis: bool = True) -> BivarPoly:
    st = p.stats()
    e = st.l_c + (st.l_sc if with_semis else 0)
    return BivarPoly.monomial(e, st.c_minus)


# -- inner products ------------------------------------------------------------
def inner(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))


def wick_moment(vectors: Sequence[Sequence], symbolic: bool = True, qp=None, qm=None):
    """``sum over perfect symmetric pair partitions of [±2n]`` of
    ``qm^c_minus qp^(n-c) prod <x_|i|, x_|j|>`` (all pairs, mirrors included)."""
    two_n = len(vectors)
    if two_n % 2:
        return BivarPoly() if symbolic else Fraction(0)
    dims = {len(v) for v in vectors}
    if len(dims) > 1:
        raise ValueError("dimension mismatch among vectors")
    n = two_n // 2
    gram = [[inner(a, b) for b in vectors] for a in vectors]
    total = BivarPoly()
    for p in enumerate_partitions(two_n, perfect=True):
        prod = Fraction(1)
        for a, b in p.pairs():
            prod *= gram[abs(a) - 1][abs(b) - 1]
            if not prod:
                break
        if not prod:
            continue
        st = p.stats()
        total = total + BivarPoly.monomial(n - st.c, st.c_minus, prod)
    if symbolic:
        return total
    return total.evaluate(Fraction(qp), Fraction(qm))


def moment_sum(two_n: int) -> BivarPoly:
    """Wick sum with all vectors equal to one unit vector."""
    return wick_moment([[1]] * two_n)


def lc_sum(two_n: int) -> BivarPoly:
    """``sum qm^c_minus qp^l_c`` over perfect symmetric pair partitions of [±2n]."""
    total = BivarPoly()
    for p in enumerate_partitions(two_n, perfect=True):
        st = p.stats()
        total = total + BivarPoly.monomial(st.l_c, st.c_minus)
    return total


# -- plain matchings -------------------------------------------------------------
Matching = Tuple[Tuple[int, int], ...]


def perfect_matchings(two_n: int) -> List[Matching]:
    """Perfect matchings of ``{1..2n}`` as sorted tuples of pairs."""
    out = []

    def rec(free, acc):
        if not free:
            out.append(tuple(acc))
            return
        a = free[0]
        for idx in range(1, len(free)):
            b = free[idx]
            rec(free[1:idx] + free[idx + 1:], acc + [(a, b)])

    if two_n % 2 == 0:
        rec(list(range(1, two_n + 1)), [])
    return out


def _matching_partner(m: Matching) -> List[int]:
    size = 2 * len(m)
    partner = [-1] * size
    for a, b in m:
        partner[a - 1] = b - 1
        partner[b - 1] = a - 1
    return partner


def matching_cycles(m: Matching) -> int:
    return kernels.matching_cycles(_matching_partner(m))


def drake_stats(m: Matching) -> Tuple[int, int]:
    return tuple(kernels.drake_counts(_matching_partner(m)))


def project(p: SymPairPartition) -> Matching:
    """Image of a perfect symmetric pair partition under ``(i, j) -> (|i|, |j|)``."""
    out = set()
    for a, b in p.pairs():
        x, y = sorted((abs(a), abs(b)))
        out.add((x, y))
    return tuple(sorted(out))


def project_and_cycles(obj) -> Tuple[Matching, int]:
    if isinstance(obj, SymPairPartition):
        m = project(obj)
    else:
        m = tuple(sorted(tuple(sorted(pr)) for pr in obj))
    return m, matching_cycles(m)


def lifts(m: Matching) -> List[SymPairPartition]:
    """The ``2^n`` perfect symmetric pair partitions projecting to ``m``."""
    two_n = 2 * len(m)
    out = []
    for bits in range(2 ** len(m)):
        blocks = []
        for k, (a, b) in enumerate(m):
            if bits >> k & 1:
                blocks += [(-b, a), (-a, b)]
            else:
                blocks += [(a, b), (-b, -a)]
        out.append(SymPairPartition(two_n, blocks))
    return out


def fiber_identity(m: Matching) -> bool:
    n = len(m)
    lhs = BivarPoly()
    for p in lifts(m):
        st = p.stats()
        lhs = lhs + BivarPoly.monomial(n - st.c, st.c_minus)
    c = matching_cycles(m)
    rhs = (ONE + QM) ** c * (QP * 2) ** (n - c)
    return lhs == rhs


def matching_route(two_n: int) -> BivarPoly:
    """``sum over perfect matchings of [2n]`` of ``(1+qm)^c (2qp)^(n-c)``."""
    if two_n % 2:
        return BivarPoly()
    n = two_n // 2
    counts = {}
    for m in perfect_matchings(two_n):
        c = matching_cycles(m)
        counts[c] = counts.get(c, 0) + 1
    total = BivarPoly()
    for c, k in sorted(counts.items()):
        total = total + (ONE + QM) ** c * (QP * 2) ** (n - c) * k
    return total


def statistic_polynomial(two_n: int, which: str) -> List[int]:
    """Coefficient list of ``sum t^stat(m)`` over perfect matchings of [2n]."""
    n = two_n // 2
    coeffs = [0] * (n + 1)
    for m in perfect_matchings(two_n):
        if which == "cycles":
            k = matching_cycles(m)
        elif which == "non_nested":
            k = drake_stats(m)[0]
        elif which == "no_right_crossing":
            k = drake_stats(m)[1]
        else:
            raise ValueError(f"unknown statistic {which!r}")
        coeffs[k] += 1
    return coeffs


def from_json(n: int, data) -> SymPairPartition:
    return SymPairPartition(n, [tuple(b) for b in data])


__all__ = [
    "SymPairPartition",
    "HatMatching",
    "Cycle",
    "SemiCycle",
    "CycleDecomposition",
    "Stats",
    "enumerate_partitions",
    "hat",
    "decompose",
    "tensor_output_order",
    "wick_moment",
    "moment_sum",
    "lc_sum",
    "perfect_matchings",
    "matching_cycles",
    "drake_stats",
    "project",
    "project_and_cycles",
    "lifts",
    "fiber_identity",
    "matching_route",
    "statistic_polynomial",
    "is_negative_pair",
]
