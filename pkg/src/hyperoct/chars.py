"""Characters of S(n) and B(n), the character expansion of the signed
reflection function, positive-definiteness tests and the Hirai-Hirai
extreme characters."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from math import lcm
from typing import List, Optional, Sequence, Tuple

from . import kernels
from .group import (
    CycleType,
    class_size,
    enumerate_group,
    group_order,
    padded_cycle_types,
    phi,
    phi_of,
)
from .partitions import Partition, bipartitions, partitions
from .poly import ONE, QM, QP, BivarPoly

Bipartition = Tuple[Partition, Partition]


# -- symmetric group characters ----------------------------------------------
def _beta_set(lam: Sequence[int]) -> Tuple[int, ...]:
    k = len(lam)
    return tuple(p + k - 1 - i for i, p in enumerate(lam))


def _from_beta(beta: Sequence[int]) -> Tuple[int, ...]:
    b = sorted(beta, reverse=True)
    k = len(b)
    return tuple(p for p in (b[i] - (k - 1 - i) for i in range(k)) if p > 0)


@lru_cache(maxsize=None)
def _mn(lam: Tuple[int, ...], mu: Tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    r = mu[0]
    rest = mu[1:]
    beta = _beta_set(lam)
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        # border strip height = number of beta numbers strictly between nb and b
        height = sum(1 for x in beta if nb < x < b)
        new = [x for x in beta if x != b] + [nb]
        total += (-1) ** height * _mn(_from_beta(new), rest)
    return total


def char_A(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Irreducible character of S(n) by Murnaghan-Nakayama."""
    lam = Partition(lam)
    mu = Partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{list(lam)}| != |{list(mu)}|")
    return _mn(tuple(lam), tuple(mu))


def char_B(lam_pair: Bipartition, rho_pair) -> int:
    """Irreducible character of B(n) at the class ``rho_pair`` (padded)."""
    lp, lm = Partition(lam_pair[0]), Partition(lam_pair[1])
    if isinstance(rho_pair, CycleType):
        rp, rm = rho_pair.rho_plus, rho_pair.rho_minus
    else:
        rp, rm = Partition(rho_pair[0]), Partition(rho_pair[1])
    if lp.size + lm.size != rp.size + rm.size:
        raise ValueError("size mismatch between irrep and class")
    return _char_B(tuple(lp), tuple(lm), tuple(rp), tuple(rm))


@lru_cache(maxsize=None)
def _char_B(lp, lm, rp, rm) -> int:
    parts = [(p, 1) for p in rp] + [(p, -1) for p in rm]
    target = sum(lp)
    total = 0
    for choice in iproduct((0, 1), repeat=len(parts)):
        to_x = [p for (p, _), c in zip(parts, choice) if c == 0]
        if sum(to_x) != target:
            continue
        to_y = [p for (p, _), c in zip(parts, choice) if c == 1]
        sign = 1
        for (_, s), c in zip(parts, choice):
            if c == 1 and s < 0:
                sign = -sign
        total += sign * _mn(lp, tuple(sorted(to_x, reverse=True))) * _mn(lm, tuple(sorted(to_y, reverse=True)))
    return total


def character_table_B(n: int):
    """``(irreps, classes, table)`` with ``table[i][j] = char_B(irreps[i], classes[j])``."""
    irreps = bipartitions(n)
    classes = padded_cycle_types(n)
    table = [[char_B(lam, t) for t in classes] for lam in irreps]
    return irreps, classes, table


# -- the expansion of phi ----------------------------------------------------
def coefficient_B(lam_pair: Bipartition) -> BivarPoly:
    """Content product ``prod (qp c + (1+qm)/2) * prod (qp c + (1-qm)/2)``."""
    lp, lm = Partition(lam_pair[0]), Partition(lam_pair[1])
    half = Fraction(1, 2)
    out = ONE
    for c in lp.contents():
        out = out * (QP * c + (ONE + QM) * half)
    for c in lm.contents():
        out = out * (QP * c + (ONE - QM) * half)
    return out


def coefficient_B_at(lam_pair: Bipartition, qp, qm) -> Fraction:
    """``coefficient_B`` evaluated at rationals, without building the polynomial."""
    qp, qm = Fraction(qp), Fraction(qm)
    a = (1 + qm) / 2
    b = (1 - qm) / 2
    out = Fraction(1)
    for c in Partition(lam_pair[0]).contents():
        out *= qp * c + a
    for c in Partition(lam_pair[1]).contents():
        out *= qp * c + b
    return out


def rozklad_weight(lam_pair: Bipartition) -> BivarPoly:
    """Weight of ``chi_lambda`` in the expansion of phi: the content product
    divided by the hook products of both diagrams."""
    lp, lm = Partition(lam_pair[0]), Partition(lam_pair[1])
    return coefficient_B(lam_pair) / (lp.hook_product() * lm.hook_product())


@dataclass
class RozkladReport:
    n: int
    ok: bool
    classes: int
    irreps: int
    mismatches: List[Tuple] = field(default_factory=list)


def expansion_at_class(t: CycleType, normalized: bool = True) -> BivarPoly:
    n = t.size
    total = BivarPoly()
    for lam in bipartitions(n):
        chi = char_B(lam, t)
        if chi:
            w = rozklad_weight(lam) if normalized else coefficient_B(lam)
            total = total + w * chi
    return total


def rozklad_report(n: int, normalized: bool = True) -> RozkladReport:
    classes = padded_cycle_types(n)
    bad = []
    for t in classes:
        lhs = expansion_at_class(t, normalized)
        rhs = phi(t.reduced())
        if lhs != rhs:
            bad.append((t.key(), str(lhs), str(rhs)))
    return RozkladReport(n, not bad, len(classes), len(bipartitions(n)), bad)


def verify_rozklad(n: int) -> bool:
    """phi equals the hook-normalized character expansion on every class of B(n)."""
    return rozklad_report(n).ok


# -- classification ----------------------------------------------------------
@dataclass
class ClassificationResult:
    verdict: str  # "extreme", "degenerate" or "not_pd"
    qp: Fraction
    qm: Fraction
    M: Optional[int] = None
    N: Optional[int] = None
    eps: Optional[int] = None
    witness: Optional[Bipartition] = None
    witness_value: Optional[Fraction] = None

    @property
    def positive_definite(self) -> bool:
        return self.verdict != "not_pd"


def scan_coefficients(qp, qm, max_size: int, first_only: bool = True):
    """Pairs ``(lam+, lam-)`` with negative ``coefficient_B`` at ``(qp, qm)``.

    Order: total size, then ``|lam+|`` ascending, then partitions in reverse
    lexicographic order.
    """
    found = []
    for s in range(max_size + 1):
        for k in range(s + 1):
            for a in partitions(k):
                for b in partitions(s - k):
                    v = coefficient_B_at((a, b), qp, qm)
                    if v < 0:
                        found.append(((a, b), v))
                        if first_only:
                            return found
    return found


def _extreme_parameters(qp: Fraction, qm: Fraction):
    if qp == 0:
        return None
    eps = 1 if qp > 0 else -1
    a = abs(qp)
    inv = 1 / a
    if inv.denominator != 1:
        return None
    M = (1 + qm) / (2 * a)
    N = (1 - qm) / (2 * a)
    if M.denominator != 1 or N.denominator != 1 or M < 0 or N < 0:
        return None
    return int(M), int(N), eps


def classify(q_plus, q_minus, bound: int = 12) -> ClassificationResult:
    """Decide positive definiteness of phi on B(infinity).

    The verdict is number-theoretic; for a non-PD point a witness is searched
    among pairs of total size ``<= bound``.
    """
    qp, qm = Fraction(q_plus), Fraction(q_minus)
    if qp == 0:
        if abs(qm) <= 1:
            return ClassificationResult("degenerate", qp, qm)
    else:
        ext = _extreme_parameters(qp, qm)
        if ext is not None:
            M, N, eps = ext
            return ClassificationResult("extreme", qp, qm, M=M, N=N, eps=eps)
    res = ClassificationResult("not_pd", qp, qm)
    hit = scan_coefficients(qp, qm, bound)
    if hit:
        res.witness, res.witness_value = hit[0]
    return res


def coefficient_A(lam: Sequence[int], q) -> Fraction:
    q = Fraction(q)
    out = Fraction(1)
    for c in Partition(lam).contents():
        out *= 1 + q * c
    return out


@dataclass
class ClassificationA:
    q: Fraction
    positive_definite: bool
    witness: Optional[Partition] = None
    witness_value: Optional[Fraction] = None


def classify_A(q, bound: int = 12) -> ClassificationA:
    """Type-A reflection function ``q^(n - #cycles)``: PD iff ``q = 0`` or ``1/q`` is a nonzero integer."""
    q = Fraction(q)
    pd = q == 0 or (1 / q).denominator == 1
    res = ClassificationA(q, pd)
    if not pd:
        for s in range(1, bound + 1):
            for lam in partitions(s):
                v = coefficient_A(lam, q)
                if v < 0:
                    res.witness, res.witness_value = lam, v
                    return res
    return res


# -- exact positive semidefiniteness ------------------------------------------
def is_psd(matrix: Sequence[Sequence]) -> bool:
    """Exact PSD test for a symmetric rational matrix.

    Fraction-free symmetric elimination (Bareiss) with the pivot taken on the
    largest remaining diagonal entry.
    """
    n = len(matrix)
    if n == 0:
        return True
    den = 1
    for row in matrix:
        for x in row:
            den = lcm(den, Fraction(x).denominator)
    A = [[int(Fraction(x) * den) for x in row] for row in matrix]
    for i in range(n):
        for j in range(i):
            if A[i][j] != A[j][i]:
                raise ValueError("matrix is not symmetric")
    return kernels.int_psd(A)


def ldlt_psd(matrix: Sequence[Sequence]) -> bool:
    """Plain rational LDL^T with diagonal pivoting (slower oracle for ``is_psd``)."""
    A = [[Fraction(x) for x in row] for row in matrix]
    active = list(range(len(A)))
    while active:
        k = max(active, key=lambda i: A[i][i])
        d = A[k][k]
        if d < 0:
            return False
        active.remove(k)
        if d == 0:
            return all(A[k][j] == 0 for j in active) and all(A[i][j] == 0 for i in active for j in active)
        for i in active:
            f = A[i][k] / d
            if f:
                for j in active:
                    A[i][j] -= f * A[k][j]
    return True


def gram_matrix(n: int, q_plus, q_minus):
    """``G[g][h] = phi(h^-1 g)`` over B(n) in enumeration order."""
    qp, qm = Fraction(q_plus), Fraction(q_minus)
    elems = list(enumerate_group(n))
    cache = {}
    G = []
    for g in elems:
        row = []
        for h in elems:
            x = h.inverse() * g
            v = cache.get(x)
            if v is None:
                v = cache[x] = phi_of(x, qp, qm)
            row.append(v)
        G.append(row)
    return G


def gram_psd(n: int, q_plus, q_minus, allow_large: bool = False) -> bool:
    if n > 3 and not allow_large:
        raise ValueError("gram_psd beyond n=3 needs allow_large=True (384x384 at n=4)")
    return is_psd(gram_matrix(n, q_plus, q_minus))


def isotypic_quadratic_form(lam_pair: Bipartition, q_plus, q_minus) -> Fraction:
    """``z^T G z`` with ``z = chi_lambda`` on B(n).

    For a central phi this equals ``|B(n)|^2 * chi(1)^-1 * weight`` up to a
    positive factor, so a negative value certifies that G is not PSD.
    """
    n = Partition(lam_pair[0]).size + Partition(lam_pair[1]).size
    qp, qm = Fraction(q_plus), Fraction(q_minus)
    elems = list(enumerate_group(n))
    from .group import cycle_type

    z = {g: char_B(lam_pair, cycle_type(g, "padded")) for g in elems}
    # sum_{g,h} z(g) z(h) phi(h^-1 g) = sum_x phi(x) sum_h z(h) z(h x)
    total = Fraction(0)
    for x in elems:
        px = phi_of(x, qp, qm)
        if not px:
            continue
        acc = 0
        for h in elems:
            acc += z[h] * z[h * x]
        total += px * acc
    return total


# -- Hirai-Hirai extreme characters -------------------------------------------
@dataclass(frozen=True)
class ThomaParamsB:
    alpha: Tuple[Fraction, ...] = ()
    beta: Tuple[Fraction, ...] = ()
    gamma: Tuple[Fraction, ...] = ()
    delta: Tuple[Fraction, ...] = ()
    kappa: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            seq = tuple(Fraction(x) for x in getattr(self, name))
            if any(x < 0 for x in seq) or list(seq) != sorted(seq, reverse=True):
                raise ValueError(f"{name} must be weakly decreasing and nonnegative")
            object.__setattr__(self, name, seq)
        object.__setattr__(self, "kappa", Fraction(self.kappa))
        if sum(self.alpha + self.beta + self.gamma + self.delta) + abs(self.kappa) > 1:
            raise ValueError("parameters exceed the simplex bound")

    @classmethod
    def from_extreme(cls, M: int, N: int, eps: int) -> "ThomaParamsB":
        w = Fraction(1, M + N)
        if eps == 1:
            return cls(alpha=(w,) * M, gamma=(w,) * N)
        return cls(beta=(w,) * M, delta=(w,) * N)

    @classmethod
    def degenerate(cls, q_minus) -> "ThomaParamsB":
        return cls(kappa=Fraction(q_minus))


def hirai_character(p: ThomaParamsB, t: CycleType) -> Fraction:
    rp, rm = t.rho_plus, t.rho_minus
    lead = sum(p.alpha) + sum(p.beta) - sum(p.gamma) - sum(p.delta) + p.kappa
    out = lead ** rm.multiplicity(1)
    for eps, rho in ((1, rp), (-1, rm)):
        for j, m in rho.multiplicities().items():
            if j < 2:
                continue
            sgn = (-1) ** (j - 1)
            s = (
                sum(a ** j for a in p.alpha)
                + sgn * sum(b ** j for b in p.beta)
                + eps * sum(g ** j for g in p.gamma)
                + eps * sgn * sum(d ** j for d in p.delta)
            )
            out *= s ** m
    return Fraction(out)


def hirai_matches_phi(M: int, N: int, eps: int, n: int) -> bool:
    params = ThomaParamsB.from_extreme(M, N, eps)
    qp = Fraction(eps, M + N)
    qm = Fraction(M - N, M + N)
    return _matches(params, qp, qm, n)


def hirai_degenerate_matches_phi(q_minus, n: int) -> bool:
    return _matches(ThomaParamsB.degenerate(q_minus), Fraction(0), Fraction(q_minus), n)


def _matches(params, qp, qm, n) -> bool:
    for m in range(1, n + 1):
        for t in padded_cycle_types(m):
            if hirai_character(params, t) != phi(t.reduced(), qp, qm):
                return False
    return True


def class_weighted_sum(n: int, q_plus, q_minus) -> Fraction:
    """``sum over classes of |C| phi(C)``."""
    qp, qm = Fraction(q_plus), Fraction(q_minus)
    return sum((class_size(t, n) * phi(t.reduced(), qp, qm) for t in padded_cycle_types(n)), Fraction(0))


def column_orthogonality(n: int) -> bool:
    """``sum_lambda chi(rho) chi(rho') = delta * |B(n)| / |C_rho|``."""
    irreps, classes, table = character_table_B(n)
    order = group_order(n)
    for a, ta in enumerate(classes):
        for b, tb in enumerate(classes):
            s = sum(table[i][a] * table[i][b] for i in range(len(irreps)))
            want = order // class_size(ta, n) if a == b else 0
            if s != want:
                return False
    return True


__all__ = [
    "char_A",
    "char_B",
    "character_table_B",
    "coefficient_B",
    "coefficient_B_at",
    "rozklad_weight",
    "verify_rozklad",
    "rozklad_report",
    "ClassificationResult",
    "classify",
    "scan_coefficients",
    "classify_A",
    "coefficient_A",
    "is_psd",
    "ldlt_psd",
    "gram_matrix",
    "gram_psd",
    "isotypic_quadratic_form",
    "ThomaParamsB",
    "hirai_character",
    "hirai_matches_phi",
    "hirai_degenerate_matches_phi",
    "class_weighted_sum",
    "column_orthogonality",
]
