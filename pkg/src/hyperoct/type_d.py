"""The index-two subgroup D(n) of B(n) and the restricted reflection function."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .chars import ClassificationResult, classify
from .group import SignedPermutation, cycle_type, enumerate_group, phi
from .partitions import EMPTY, Partition, partitions


def is_in_D(s: SignedPermutation) -> bool:
    """Even number of negative cycles."""
    return len(cycle_type(s, "padded").rho_minus) % 2 == 0


def sign_product(s: SignedPermutation) -> int:
    """``g_1 ... g_n`` in the signed model."""
    out = 1
    for g in s.sign_vector():
        out *= g
    return out


def enumerate_D(n: int) -> List[SignedPermutation]:
    return [s for s in enumerate_group(n) if is_in_D(s)]


def splits(rho_plus: Sequence[int], rho_minus: Sequence[int]) -> bool:
    """Closed-form rule: only ``(rho, ∅)`` with every part of rho even splits."""
    return not rho_minus and len(rho_plus) > 0 and all(p % 2 == 0 for p in rho_plus)


@dataclass(frozen=True)
class DClass:
    rho_plus: Partition
    rho_minus: Partition
    tag: str  # "" for unsplit classes, "+" or "-" for the two halves
    size: int
    representative: SignedPermutation

    def label(self) -> str:
        base = f"({','.join(map(str, self.rho_plus))};{','.join(map(str, self.rho_minus))})"
        return base + self.tag


def classes_D(n: int) -> List[DClass]:
    """Conjugacy classes of D(n) by brute-force orbits.

    Within a split B-class the orbit containing the first element in
    enumeration order is tagged "+".
    """
    elems = enumerate_D(n)
    seen = set()
    orbits: List[Tuple[SignedPermutation, frozenset]] = []
    for s in elems:
        if s in seen:
            continue
        orbit = frozenset(s.conjugate_by(h) for h in elems)
        seen |= orbit
        orbits.append((s, orbit))
    by_type: Dict[Tuple, List[Tuple[SignedPermutation, frozenset]]] = {}
    for rep, orbit in orbits:
        t = cycle_type(rep, "padded")
        by_type.setdefault((t.rho_plus, t.rho_minus), []).append((rep, orbit))
    out = []
    for (rp, rm), group in by_type.items():
        if len(group) == 1:
            rep, orbit = group[0]
            out.append(DClass(Partition(rp), Partition(rm), "", len(orbit), rep))
        else:
            for tag, (rep, orbit) in zip("+-", group):
                out.append(DClass(Partition(rp), Partition(rm), tag, len(orbit), rep))
    return out


def split_types(n: int) -> List[Tuple[Partition, Partition]]:
    """B-classes that break into two D-classes, found by orbit enumeration."""
    seen = {}
    for c in classes_D(n):
        if c.tag:
            seen[(c.rho_plus, c.rho_minus)] = True
    return sorted(seen)


def splitting_matches_rule(n: int) -> bool:
    found = set(split_types(n))
    expected = {(Partition(p), EMPTY) for p in partitions(n) if splits(p, ())}
    return found == expected


def phi_constant_on_classes(n: int, q) -> bool:
    """The restriction of phi at qp = qm = q is constant on every D-class."""
    q = Fraction(q)
    elems = enumerate_D(n)
    for c in classes_D(n):
        v = phi(cycle_type(c.representative), q, q)
        for h in elems:
            if phi(cycle_type(c.representative.conjugate_by(h)), q, q) != v:
                return False
    return True


# -- positivity ------------------------------------------------------------------
def _content_product(lam: Partition, shift: Fraction, q: Fraction) -> Fraction:
    out = Fraction(1)
    for c in lam.contents():
        out *= q * c + shift
    return out


def coefficient_D(lam: Sequence[int], mu: Sequence[int], q) -> Fraction:
    """Symmetrized content product with qp = qm = q."""
    q = Fraction(q)
    lam, mu = Partition(lam), Partition(mu)
    a, b = (1 + q) / 2, (1 - q) / 2
    return (
        _content_product(lam, a, q) * _content_product(mu, b, q)
        + _content_product(mu, a, q) * _content_product(lam, b, q)
    )


def scan_D(q, max_size: int = 8, first_only: bool = False):
    """Pairs ``(lam, mu)`` with negative coefficient_D, total size ascending."""
    q = Fraction(q)
    found = []
    for s in range(max_size + 1):
        for k in range(s + 1):
            for lam in partitions(k):
                for mu in partitions(s - k):
                    v = coefficient_D(lam, mu, q)
                    if v < 0:
                        found.append(((lam, mu), v))
                        if first_only:
                            return found
    return found


def in_pd_set(q) -> bool:
    """``q = 0`` or ``q = 1/(2N+1)`` for an integer N."""
    q = Fraction(q)
    if q == 0:
        return True
    inv = 1 / q
    return inv.denominator == 1 and inv.numerator % 2 == 1


@dataclass
class ClassificationD:
    q: Fraction
    positive_definite: bool
    N: Optional[int]
    witness: Optional[Tuple[Partition, Partition]]
    witness_value: Optional[Fraction]
    b_result: ClassificationResult

    @property
    def verdict(self) -> str:
        return "pd" if self.positive_definite else "not_pd"


def classify_D(q, bound: int = 12) -> ClassificationD:
    """Closed-form verdict plus a witness search for non-PD values.

    ``b_result`` is the type-B classification at qp = qm = q, which for
    ``q = 1/(2N+1)`` should be extreme with ``M - N = 1`` (or its mirror for
    negative q).
    """
    q = Fraction(q)
    pd = in_pd_set(q)
    N = None
    if pd and q != 0:
        N = (int(1 / q) - 1) // 2
    witness = value = None
    if not pd:
        hit = scan_D(q, bound, first_only=True)
        if hit:
            witness, value = hit[0]
    return ClassificationD(q, pd, N, witness, value, classify(q, q))


def b_consistent(res: ClassificationD) -> bool:
    """At qp = qm = q the type-B verdict matches, with |M - N| = 1."""
    b = res.b_result
    if not res.positive_definite:
        return not b.positive_definite
    if res.q == 0:
        return b.positive_definite
    if b.verdict != "extreme":
        return False
    return (b.M, b.N) == ((res.N + 1, res.N) if res.q > 0 else (-res.N - 1, -res.N))
