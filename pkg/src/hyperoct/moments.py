"""Moments of the type-B Gaussian: recurrence, Dyck paths, and cross-checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Dict, Iterator, List, Optional, Tuple

from .poly import ONE, QM, QP, BivarPoly, is_zero


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


@dataclass(frozen=True)
class JacobiSeq:
    """``lambda(k) = 1 + 2(k-1) qp + qm`` for k >= 1."""

    qp: object = QP
    qm: object = QM

    def __call__(self, k: int):
        if k < 1:
            raise ValueError("lambda is indexed from 1")
        return 1 + 2 * (k - 1) * self.qp + self.qm

    def first_zero(self, limit: int = 64) -> Optional[int]:
        """Smallest k with lambda(k) = 0, for rational parameters."""
        for k in range(1, limit + 1):
            if is_zero(self(k)):
                return k
        return None

    @property
    def c(self):
        """``(1 + qm) / (2 qp) - 1``, so that ``lambda(k) = 2 qp (k + c)``."""
        if isinstance(self.qp, BivarPoly):
            raise TypeError("c is only defined for a fixed nonzero qp")
        if self.qp == 0:
            raise ZeroDivisionError("c needs qp != 0")
        return (1 + Fraction(self.qm)) / (2 * Fraction(self.qp)) - 1


def lambda_seq(k: int, qp=QP, qm=QM):
    return JacobiSeq(qp, qm)(k)


def _params(qp, qm):
    if qp is None and qm is None:
        return QP, QM
    return Fraction(qp), Fraction(qm)


def jacobi_moments(two_n: int, qp=None, qm=None):
    """``<e_0, T^{2n} e_0>`` for the tridiagonal T with zero diagonal,
    ``T e_k = e_{k+1} + lambda(k) e_{k-1}``."""
    qp, qm = _params(qp, qm)
    zero = BivarPoly() if isinstance(qp, BivarPoly) else Fraction(0)
    if two_n % 2:
        return zero
    lam = JacobiSeq(qp, qm)
    vec: Dict[int, object] = {0: ONE if isinstance(qp, BivarPoly) else Fraction(1)}
    for step in range(two_n):
        nxt: Dict[int, object] = {}
        room = two_n - step - 1
        for k, c in vec.items():
            if k + 1 <= room:
                nxt[k + 1] = nxt.get(k + 1, zero) + c
            if k >= 1:
                nxt[k - 1] = nxt.get(k - 1, zero) + c * lam(k)
        vec = nxt
    return vec.get(0, zero)


@dataclass(frozen=True)
class DyckPath:
    steps: Tuple[int, ...]

    def __post_init__(self):
        h = 0
        for s in self.steps:
            if s not in (1, -1):
                raise ValueError("steps must be +1 or -1")
            h += s
            if h < 0:
                raise ValueError("path goes below zero")
        if h:
            raise ValueError("path must end at height 0")

    def down_heights(self) -> List[int]:
        """Height reached after each down step."""
        out, h = [], 0
        for s in self.steps:
            h += s
            if s < 0:
                out.append(h)
        return out

    def weight(self, qp=QP, qm=QM):
        w = ONE if isinstance(qp, BivarPoly) else Fraction(1)
        for h in self.down_heights():
            w = w * (1 + qm + 2 * qp * h)
        return w

    def __str__(self):
        return "".join("U" if s > 0 else "D" for s in self.steps)


def dyck_paths(n: int) -> Iterator[DyckPath]:
    def rec(acc, up, down):
        if up == n and down == n:
            yield DyckPath(tuple(acc))
            return
        if up < n:
            yield from rec(acc + [1], up + 1, down)
        if down < up:
            yield from rec(acc + [-1], up, down + 1)

    yield from rec([], 0, 0)


def dyck_moments(two_n: int, qp=None, qm=None):
    """Sum over Dyck paths of the product of down-step weights
    ``1 + qm + 2 qp h`` (h = height after the step)."""
    qp, qm = _params(qp, qm)
    if two_n % 2:
        return BivarPoly() if isinstance(qp, BivarPoly) else Fraction(0)
    total = BivarPoly() if isinstance(qp, BivarPoly) else Fraction(0)
    for path in dyck_paths(two_n // 2):
        total = total + path.weight(qp, qm)
    return total


def _first_difference(a: BivarPoly, b: BivarPoly):
    diff = a.first_difference(b)
    if diff is None:
        return None
    (e_qp, e_qm), ca, cb = diff
    return {"e_qp": e_qp, "e_qm": e_qm, "route_coeff": ca, "reference_coeff": cb}


@dataclass
class CrossCheckRow:
    two_n: int
    routes: Dict[str, BivarPoly]
    equal: bool
    first_difference: Optional[dict] = None


@dataclass
class CrossCheckReport:
    rows: List[CrossCheckRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.equal for r in self.rows)


ROUTES = ("jacobi", "dyck", "wick", "matching", "fock")


def route_value(route: str, two_n: int) -> BivarPoly:
    from . import fock, pairpart

    if route == "jacobi":
        return jacobi_moments(two_n)
    if route == "dyck":
        return dyck_moments(two_n)
    if route == "wick":
        return pairpart.moment_sum(two_n)
    if route == "matching":
        return pairpart.matching_route(two_n)
    if route == "fock":
        return fock.gaussian_moment_operator(two_n)
    raise ValueError(f"unknown route {route!r}")


def cross_check(two_n_max: int = 10, routes=ROUTES) -> CrossCheckReport:
    """Compare the moment routes as exact polynomials for every even 2n."""
    routes = tuple(routes)
    report = CrossCheckReport()
    for two_n in range(2, two_n_max + 1, 2):
        vals = {r: route_value(r, two_n) for r in routes}
        ref = vals[routes[0]]
        row = CrossCheckRow(two_n, vals, True)
        for r in routes[1:]:
            diff = _first_difference(vals[r], ref)
            if diff is not None:
                row.equal = False
                row.first_difference = {"route": r, "against": routes[0], "monomial": diff}
                break
        report.rows.append(row)
    return report


@dataclass
class SpecializationRow:
    n: int
    semicircle: bool
    value_22: Fraction
    expected_22: int
    value_20: Fraction
    expected_20: int
    total_count: int
    expected_count: int
    drake: Dict[str, List[int]]

    @property
    def ok(self) -> bool:
        drake = list(self.drake.values())
        return (
            self.semicircle
            and self.value_22 == self.expected_22
            and self.value_20 == self.expected_20
            and self.total_count == self.expected_count
            and all(d == drake[0] for d in drake)
        )


def count_symmetric_perfect(two_n: int) -> int:
    """Number of perfect symmetric pair partitions of [±2n], by enumeration."""
    from .pairpart import _enumerate

    return sum(1 for _ in _enumerate(two_n, True))


def specializations(n_max: int = 6) -> List[SpecializationRow]:
    """Here x = 1 + qm and y = 2 qp."""
    from .pairpart import statistic_polynomial

    rows = []
    for n in range(1, n_max + 1):
        m = jacobi_moments(2 * n)
        semi = BivarPoly.coerce(m.evaluate(Fraction(0), QM))
        rows.append(
            SpecializationRow(
                n=n,
                semicircle=semi == (ONE + QM) ** n * catalan(n),
                value_22=m.evaluate(Fraction(1), Fraction(1)),
                expected_22=factorial(2 * n) // factorial(n),
                value_20=m.evaluate(Fraction(0), Fraction(1)),
                expected_20=2 ** n * catalan(n),
                total_count=count_symmetric_perfect(2 * n),
                expected_count=2 ** n * double_factorial(2 * n - 1),
                drake={w: statistic_polynomial(2 * n, w) for w in ("cycles", "non_nested", "no_right_crossing")},
            )
        )
    return rows


# -- Hankel determinants -----------------------------------------------------------
def bareiss_det(A: List[List[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    A = [list(r) for r in A]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k]:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def hankel_det(moments: List[Fraction], order: int) -> Fraction:
    """``det [m_{i+j}]_{0 <= i,j < order}``."""
    H = [[Fraction(moments[i + j]) for j in range(order)] for i in range(order)]
    den = 1
    for row in H:
        for x in row:
            den = den * x.denominator // _gcd(den, x.denominator)
    ints = [[int(x * den) for x in row] for row in H]
    return Fraction(bareiss_det(ints), den ** order)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@dataclass
class HankelReport:
    M: int
    N: int
    det_M1: Fraction
    det_M2: Fraction

    @property
    def ok(self) -> bool:
        return self.det_M1 > 0 and self.det_M2 == 0


def hankel_check(M: int, N: int) -> HankelReport:
    """At qp = -1/(M+N), qm = (M-N)/(M+N) the moments come from M+1 atoms:
    the Hankel determinant of order M+1 is positive, of order M+2 zero."""
    qp = Fraction(-1, M + N)
    qm = Fraction(M - N, M + N)
    moms = [jacobi_moments(k, qp, qm) for k in range(2 * (M + 2) - 1)]
    return HankelReport(M, N, hankel_det(moms, M + 1), hankel_det(moms, M + 2))


def moment_table(two_n_max: int) -> List[Tuple[int, BivarPoly]]:
    return [(k, jacobi_moments(k)) for k in range(0, two_n_max + 1)]


def carleman_note() -> str:
    return (
        "For qp >= 0 the recurrence coefficients grow at most linearly, so the sum of "
        "1/sqrt(lambda(k)) diverges and the moment problem is determinate."
    )
