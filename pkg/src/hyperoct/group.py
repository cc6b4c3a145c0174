"""Signed permutations, conjugacy invariants and the signed reflection function.

An element of B(n) is stored by its images ``img[i-1] = s(i)`` for
``i = 1..n``; ``s(-i) = -s(i)`` is implied.  Composition ``a * b`` applies
``b`` first.
"""
from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from math import factorial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import kernels
from .partitions import Partition
from .poly import ONE, QM, QP, BivarPoly


class RankMismatch(ValueError):
    pass


class SignedPermutation:
    """Element of the hyperoctahedral group B(n)."""

    __slots__ = ("img", "_hash")

    def __init__(self, img: Sequence[int]):
        img = tuple(int(x) for x in img)
        n = len(img)
        if sorted(abs(x) for x in img) != list(range(1, n + 1)):
            raise ValueError(f"not a signed permutation of [±{n}]: {img}")
        self.img = img
        self._hash = None

    @classmethod
    def _trusted(cls, img: Tuple[int, ...]) -> "SignedPermutation":
        obj = cls.__new__(cls)
        obj.img = img
        obj._hash = None
        return obj

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls._trusted(tuple(range(1, n + 1)))

    @classmethod
    def from_signed(cls, g: Sequence[int], tau: Sequence[int]) -> "SignedPermutation":
        """Build from the signed model ``(g_1..g_n; tau)``.

        ``tau`` is the underlying permutation in one-line form and ``g_j`` is
        the sign carried by the value ``j``, so ``s(i) = g_{tau(i)} tau(i)``.
        """
        if len(g) != len(tau):
            raise RankMismatch("sign vector and permutation differ in length")
        if any(x not in (1, -1) for x in g):
            raise ValueError("signs must be +1 or -1")
        return cls([g[t - 1] * t for t in tau])

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> "SignedPermutation":
        """Build from cycles on [±n].  Bar images are added automatically,
        so ``(3, -5, -3, 5)`` and ``(1, 2, 4)`` are both accepted."""
        table = {}
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                for x, y in ((a, b), (-a, -b)):
                    if table.get(x, y) != y:
                        raise ValueError(f"inconsistent cycles at {x}")
                    table[x] = y
        return cls([table.get(i, i) for i in range(1, n + 1)])

    # -- views -------------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.img)

    def __call__(self, i: int) -> int:
        v = self.img[abs(i) - 1]
        return v if i > 0 else -v

    def to_signed(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        tau = tuple(abs(x) for x in self.img)
        g = [1] * self.n
        for x in self.img:
            g[abs(x) - 1] = 1 if x > 0 else -1
        return tuple(g), tau

    def word(self) -> Tuple[int, ...]:
        """Window notation ``(s(1), ..., s(n))``."""
        return self.img

    def underlying(self) -> Tuple[int, ...]:
        return tuple(abs(x) for x in self.img)

    def sign_vector(self) -> Tuple[int, ...]:
        """Sign of ``s(i)`` for each position ``i``."""
        return tuple(1 if x > 0 else -1 for x in self.img)

    def sort_key(self):
        return (self.underlying(), tuple(0 if x > 0 else 1 for x in self.img))

    def underlying_sign(self) -> int:
        """Sign of the unsigned permutation ``|s|``."""
        tau = self.underlying()
        seen = [False] * self.n
        parity = 0
        for i in range(self.n):
            if seen[i]:
                continue
            j = i
            length = 0
            while not seen[j]:
                seen[j] = True
                j = tau[j] - 1
                length += 1
            parity += length - 1
        return -1 if parity % 2 else 1

    # -- group structure ---------------------------------------------------
    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def inverse(self) -> "SignedPermutation":
        return SignedPermutation._trusted(kernels.inverse(self.img))

    def conjugate_by(self, h: "SignedPermutation") -> "SignedPermutation":
        """``h s h^{-1}``."""
        return compose(compose(h, self), h.inverse())

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.img, 1))

    def __eq__(self, other):
        return isinstance(other, SignedPermutation) and self.img == other.img

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.img)
        return self._hash

    def __repr__(self):
        return f"SignedPermutation({list(self.img)})"

    def cycles(self) -> List[Tuple[int, Tuple[int, ...]]]:
        """Cycles on [±n] as ``(sign, orbit)``; a positive cycle is listed
        once (the representative containing its smallest positive point)."""
        n = self.n
        seen = set()
        out = []
        for start in range(1, n + 1):
            if start in seen:
                continue
            orbit = [start]
            cur = self(start)
            while cur != start:
                orbit.append(cur)
                cur = self(cur)
            for x in orbit:
                seen.add(abs(x))
            negative = -start in orbit
            out.append((-1 if negative else 1, tuple(orbit)))
        return out


def compose(a: SignedPermutation, b: SignedPermutation) -> SignedPermutation:
    """``a∘b``: apply ``b`` first."""
    if a.n != b.n:
        raise RankMismatch(f"rank mismatch: {a.n} vs {b.n}")
    return SignedPermutation._trusted(kernels.compose(a.img, b.img))


# -- reflections -----------------------------------------------------------
@dataclass(frozen=True, order=True)
class Reflection:
    """Long reflection ``(a b)(-a -b)`` or short reflection ``(-i i)``."""

    kind: str
    support: Tuple[int, ...]

    def __post_init__(self):
        if self.kind == "short":
            if len(self.support) != 1 or self.support[0] <= 0:
                raise ValueError("short reflection needs one positive index")
        elif self.kind == "long":
            a, b = self.support
            if abs(a) == abs(b) or 0 in (a, b):
                raise ValueError("long reflection needs |a| != |b|")
            # canonical representative: |a| < |b| and b > 0
            if abs(a) > abs(b):
                a, b = b, a
            if b < 0:
                a, b = -a, -b
            object.__setattr__(self, "support", (a, b))
        else:
            raise ValueError(f"unknown reflection kind {self.kind!r}")

    @classmethod
    def long(cls, a: int, b: int) -> "Reflection":
        return cls("long", (a, b))

    @classmethod
    def short(cls, i: int) -> "Reflection":
        return cls("short", (abs(i),))

    def points(self) -> Tuple[int, ...]:
        return tuple(abs(x) for x in self.support)

    def to_perm(self, n: int) -> SignedPermutation:
        img = list(range(1, n + 1))
        if self.kind == "short":
            i = self.support[0]
            img[i - 1] = -i
        else:
            a, b = self.support
            # a -> b and b -> a on [±n]
            for x, y in ((a, b), (b, a)):
                if x > 0:
                    img[x - 1] = y
                else:
                    img[-x - 1] = -y
        return SignedPermutation(img)

    def __str__(self):
        if self.kind == "short":
            i = self.support[0]
            return f"({-i} {i})"
        a, b = self.support
        return f"({a} {b})({-a} {-b})"


def reflections(n: int) -> List[Reflection]:
    out = []
    for b in range(2, n + 1):
        for a in range(1, b):
            out.append(Reflection.long(a, b))
            out.append(Reflection.long(-a, b))
    out.extend(Reflection.short(i) for i in range(1, n + 1))
    return out


# -- cycle types -----------------------------------------------------------
@dataclass(frozen=True)
class CycleType:
    rho_plus: Partition
    rho_minus: Partition
    convention: str = "reduced"

    def __post_init__(self):
        object.__setattr__(self, "rho_plus", Partition(self.rho_plus))
        object.__setattr__(self, "rho_minus", Partition(self.rho_minus))
        if self.convention not in ("reduced", "padded"):
            raise ValueError(f"unknown convention {self.convention!r}")
        if self.convention == "reduced" and 1 in self.rho_plus:
            raise ValueError("reduced cycle types have no positive parts equal to 1")

    @property
    def size(self) -> int:
        return self.rho_plus.size + self.rho_minus.size

    def reduced(self) -> "CycleType":
        return CycleType(self.rho_plus.without_ones(), self.rho_minus, "reduced")

    def padded(self, n: int) -> "CycleType":
        red = self.reduced()
        extra = n - red.size
        if extra < 0:
            raise ValueError(f"cycle type of size {red.size} does not fit in B({n})")
        return CycleType(tuple(red.rho_plus) + (1,) * extra, red.rho_minus, "padded")

    def key(self):
        return (tuple(self.rho_plus), tuple(self.rho_minus))

    def __str__(self):
        return f"({list(self.rho_plus)}, {list(self.rho_minus)})"


def cycle_type(s: SignedPermutation, convention: str = "reduced") -> CycleType:
    pos, neg = kernels.cycle_lengths(s.img)
    t = CycleType(pos, neg, "padded")
    return t if convention == "padded" else t.reduced()


def reflection_lengths(s: SignedPermutation) -> Tuple[int, int]:
    t = cycle_type(s)
    return t.rho_plus.norm + t.rho_minus.norm, t.rho_minus.length


def reflection_length(s: SignedPermutation) -> int:
    return sum(reflection_lengths(s))


def phi(t: CycleType, qp=QP, qm=QM):
    """``qp^(||rho+|| + ||rho-||) * qm^l(rho-)``.

    With the default arguments the result is a :class:`BivarPoly`; pass
    rationals to evaluate (``0**0 == 1``).
    """
    a = t.rho_plus.norm + t.rho_minus.norm
    b = t.rho_minus.length
    if isinstance(qp, BivarPoly) and isinstance(qm, BivarPoly) and qp == QP and qm == QM:
        return BivarPoly.monomial(a, b)
    return (qp ** a) * (qm ** b)


def phi_of(s: SignedPermutation, qp=QP, qm=QM):
    return phi(cycle_type(s), qp, qm)


# -- minimal factorisations --------------------------------------------------
def coset_factors(s: SignedPermutation) -> List[Optional[Reflection]]:
    """Coset representatives ``[w_n, ..., w_1]`` with ``s = w_n ... w_1``.

    Entries are ``None`` where the representative is the identity.
    """
    n = s.n
    cur = s
    out: List[Optional[Reflection]] = []
    for k in range(n, 0, -1):
        j = cur(k)
        if j == k:
            rep = None
        elif j == -k:
            rep = Reflection.short(k)
        else:
            rep = Reflection.long(j, k)
        out.append(rep)
        if rep is not None:
            cur = compose(rep.to_perm(n), cur)
    if not cur.is_identity():
        raise AssertionError("coset descent did not terminate at the identity")
    return out


def minimal_nonmixing_factorization(s: SignedPermutation) -> List[Reflection]:
    """Reflections whose product (left to right) is ``s``, of minimal length,
    each supported inside one cycle of ``s`` and grouped by cycle."""
    factors = [r for r in coset_factors(s) if r is not None]
    cycle_of = {}
    for idx, (_, orbit) in enumerate(s.cycles()):
        for x in orbit:
            cycle_of[abs(x)] = idx
    # reflections in different cycles commute, so a stable sort keeps the product
    return sorted(factors, key=lambda r: cycle_of[r.points()[0]])


def product(refls: Sequence[Reflection], n: int) -> SignedPermutation:
    out = SignedPermutation.identity(n)
    for r in refls:
        out = compose(out, r.to_perm(n))
    return out


def is_nonmixing(s: SignedPermutation, refls: Sequence[Reflection]) -> bool:
    cycle_of = {}
    for idx, (_, orbit) in enumerate(s.cycles()):
        for x in orbit:
            cycle_of[abs(x)] = idx
    return all(len({cycle_of[p] for p in r.points()}) == 1 for r in refls)


def bfs_reflection_length(s: SignedPermutation) -> int:
    """Shortest reflection word for ``s`` by breadth-first search (oracle)."""
    n = s.n
    gens = [r.to_perm(n) for r in reflections(n)]
    start = SignedPermutation.identity(n)
    if s == start:
        return 0
    dist = {start: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(x, g)
            if y not in dist:
                dist[y] = dist[x] + 1
                if y == s:
                    return dist[y]
                queue.append(y)
    raise AssertionError("unreachable element")


def bfs_minimal_words(s: SignedPermutation, max_len: int) -> List[Tuple[Reflection, ...]]:
    """All reflection words of minimal length ``<= max_len`` with product ``s``."""
    n = s.n
    refl = reflections(n)
    perms = {r: r.to_perm(n) for r in refl}
    for length in range(max_len + 1):
        found = []
        for word in itertools.product(refl, repeat=length):
            p = SignedPermutation.identity(n)
            for r in word:
                p = compose(p, perms[r])
            if p == s:
                found.append(word)
        if found:
            return found
    return []


# -- group algebra -----------------------------------------------------------
class GroupAlgebraElement:
    """Finitely supported ``SignedPermutation -> BivarPoly`` map."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Optional[Dict[SignedPermutation, object]] = None):
        self.n = n
        clean = {}
        for g, c in (coeffs or {}).items():
            if g.n != n:
                raise RankMismatch("element of the wrong rank")
            c = BivarPoly.coerce(c)
            if c:
                clean[g] = clean.get(g, BivarPoly()) + c
                if not clean[g]:
                    del clean[g]
        self.coeffs = clean

    @classmethod
    def one(cls, n: int) -> "GroupAlgebraElement":
        return cls(n, {SignedPermutation.identity(n): ONE})

    def __add__(self, other):
        if self.n != other.n:
            raise RankMismatch("rank mismatch")
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            s = out.get(g, BivarPoly()) + c
            if s:
                out[g] = s
            else:
                out.pop(g, None)
        return GroupAlgebraElement._wrap(self.n, out)

    def scale(self, c) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.n, {g: v * c for g, v in self.coeffs.items()})

    def __mul__(self, other):
        if self.n != other.n:
            raise RankMismatch("rank mismatch")
        out: Dict[SignedPermutation, BivarPoly] = {}
        for g, a in self.coeffs.items():
            for h, b in other.coeffs.items():
                k = compose(g, h)
                s = out.get(k, BivarPoly()) + a * b
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return GroupAlgebraElement._wrap(self.n, out)

    @classmethod
    def _wrap(cls, n, coeffs):
        obj = cls.__new__(cls)
        obj.n = n
        obj.coeffs = coeffs
        return obj

    def __eq__(self, other):
        return isinstance(other, GroupAlgebraElement) and self.n == other.n and self.coeffs == other.coeffs

    def __len__(self):
        return len(self.coeffs)

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key())


def jucys_plus(i: int, n: int) -> GroupAlgebraElement:
    """``J+_i``: sum of long reflections ``(j i)(-j -i)`` over ``j`` in [±(i-1)]."""
    terms = {}
    for j in range(1, i):
        for a in (j, -j):
            terms[Reflection.long(a, i).to_perm(n)] = ONE
    return GroupAlgebraElement(n, terms)


def jucys_minus(i: int, n: int) -> GroupAlgebraElement:
    return GroupAlgebraElement(n, {Reflection.short(i).to_perm(n): ONE})


def phi_element(n: int) -> GroupAlgebraElement:
    """``sum over B(n) of phi(s) s`` with symbolic coefficients."""
    return GroupAlgebraElement(n, {s: phi_of(s) for s in enumerate_group(n)})


@dataclass
class FactorizationResult:
    lhs: GroupAlgebraElement
    rhs: GroupAlgebraElement
    equal: bool
    equal_reversed: bool


def factorization_identity(n: int) -> FactorizationResult:
    """Compare ``sum phi(s) s`` with ``prod_i (1 + qp J+_i + qm J-_i)``.

    Both orders of the product are checked.
    """
    if n == 0:
        one = GroupAlgebraElement.one(0)
        return FactorizationResult(one, one, True, True)
    lhs = phi_element(n)
    factors = []
    for i in range(1, n + 1):
        f = GroupAlgebraElement.one(n) + jucys_plus(i, n).scale(QP) + jucys_minus(i, n).scale(QM)
        factors.append(f)
    rhs = GroupAlgebraElement.one(n)
    for f in factors:
        rhs = rhs * f
    rev = GroupAlgebraElement.one(n)
    for f in reversed(factors):
        rev = rev * f
    return FactorizationResult(lhs, rhs, lhs == rhs, lhs == rev)


# -- enumeration and classes -------------------------------------------------
def enumerate_group(n: int) -> Iterator[SignedPermutation]:
    """All of B(n), ordered by (underlying permutation, sign vector)."""
    for tau in itertools.permutations(range(1, n + 1)):
        for bits in itertools.product((1, -1), repeat=n):
            yield SignedPermutation._trusted(tuple(b * t for b, t in zip(bits, tau)))


def group_order(n: int) -> int:
    return 2 ** n * factorial(n)


def centralizer_order(t: CycleType, n: int) -> int:
    t = t.padded(n)
    z = 1
    for rho in (t.rho_plus, t.rho_minus):
        for j, m in rho.multiplicities().items():
            z *= (2 * j) ** m * factorial(m)
    return z


def class_size(t: CycleType, n: int) -> int:
    return group_order(n) // centralizer_order(t, n)


def padded_cycle_types(n: int) -> List[CycleType]:
    """All padded cycle types of B(n) in a fixed order."""
    from .partitions import bipartitions

    return [CycleType(a, b, "padded") for a, b in bipartitions(n)]


def conjugacy_classes(n: int) -> Dict[Tuple, List[SignedPermutation]]:
    """Brute-force conjugation orbits keyed by padded cycle type."""
    elements = list(enumerate_group(n))
    seen = set()
    out: Dict[Tuple, List[SignedPermutation]] = {}
    for s in elements:
        if s in seen:
            continue
        orbit = {h * s * h.inverse() for h in elements}
        seen |= orbit
        key = cycle_type(s, "padded").key()
        if key in out:
            raise AssertionError("two orbits with the same cycle type")
        out[key] = sorted(orbit)
    return out


def random_element(n: int, rng: random.Random) -> SignedPermutation:
    tau = list(range(1, n + 1))
    rng.shuffle(tau)
    return SignedPermutation([t if rng.random() < 0.5 else -t for t in tau])


def coxeter_generators(n: int) -> List[SignedPermutation]:
    """``s_0 = (-1 1)`` and ``s_i = (i i+1)(-i -i-1)``."""
    gens = [Reflection.short(1).to_perm(n)]
    gens += [Reflection.long(i, i + 1).to_perm(n) for i in range(1, n)]
    return gens


__all__ = [
    "SignedPermutation",
    "Reflection",
    "CycleType",
    "GroupAlgebraElement",
    "compose",
    "cycle_type",
    "reflection_lengths",
    "reflection_length",
    "phi",
    "phi_of",
    "minimal_nonmixing_factorization",
    "factorization_identity",
    "enumerate_group",
    "class_size",
    "conjugacy_classes",
    "reflections",
]
