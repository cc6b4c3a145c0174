"""The cyclic Fock space of type B over H = Q^d.

A level-n basis tensor is a tuple ``t`` of length 2n holding basis indices
``0..d-1`` at the positions ``-n, ..., -1, 1, ..., n`` (in that order), so
position ``i`` sits at ``t[i + n]`` for ``i < 0`` and ``t[i + n - 1]`` for
``i > 0``.  Level 0 is the vacuum ``()``.

Scalars are either ``Fraction`` (fixed parameters) or ``BivarPoly``
(symbolic in qp, qm); every operation here is generic over both.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .group import (
    Reflection,
    SignedPermutation,
    cycle_type,
    enumerate_group,
    phi,
)
from .pairpart import enumerate_partitions, index_point, point_index
from .poly import ONE, QM, QP, BivarPoly, is_zero

Tensor = Tuple[int, ...]


class FockVector:
    """Finitely supported vector of the algebraic full Fock space."""

    __slots__ = ("d", "levels")

    def __init__(self, d: int, levels: Optional[Dict[int, Dict[Tensor, object]]] = None):
        self.d = d
        self.levels: Dict[int, Dict[Tensor, object]] = {}
        for n, comp in (levels or {}).items():
            clean = {t: c for t, c in comp.items() if not is_zero(c)}
            for t in clean:
                if len(t) != 2 * n or any(not 0 <= j < d for j in t):
                    raise ValueError(f"tensor {t} does not fit level {n}, d={d}")
            if clean:
                self.levels[n] = clean

    @classmethod
    def vacuum(cls, d: int, coeff=1) -> "FockVector":
        return cls(d, {0: {(): coeff}})

    @classmethod
    def basis(cls, d: int, t: Tensor, coeff=1) -> "FockVector":
        return cls(d, {len(t) // 2: {tuple(t): coeff}})

    @classmethod
    def from_vectors(cls, vectors: Sequence[Sequence], coeff=1) -> "FockVector":
        """Elementary tensor ``v_1 ⊗ ... ⊗ v_2n`` (positions -n..n in order)."""
        if not vectors:
            raise ValueError("use FockVector.vacuum for level 0")
        d = len(vectors[0])
        comp: Dict[Tensor, object] = {}
        for t in itertools.product(range(d), repeat=len(vectors)):
            c = Fraction(1)
            for v, j in zip(vectors, t):
                c *= Fraction(v[j])
                if not c:
                    break
            if c:
                comp[t] = coeff * c
        return cls(d, {len(vectors) // 2: comp})

    def component(self, n: int) -> Dict[Tensor, object]:
        return self.levels.get(n, {})

    def is_zero(self) -> bool:
        return not self.levels

    def __add__(self, other: "FockVector") -> "FockVector":
        out = {n: dict(c) for n, c in self.levels.items()}
        for n, comp in other.levels.items():
            tgt = out.setdefault(n, {})
            for t, c in comp.items():
                tgt[t] = tgt[t] + c if t in tgt else c
        return FockVector(self.d, out)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scale(-1)

    def scale(self, k) -> "FockVector":
        return FockVector(self.d, {n: {t: c * k for t, c in comp.items()} for n, comp in self.levels.items()})

    def __eq__(self, other):
        if not isinstance(other, FockVector) or self.d != other.d:
            return False
        return (self - other).is_zero()

    def items(self):
        """Deterministic iteration: levels ascending, tensors lexicographic."""
        for n in sorted(self.levels):
            for t in sorted(self.levels[n]):
                yield n, t, self.levels[n][t]

    def __repr__(self):
        return f"FockVector(d={self.d}, {dict(self.levels)})"


def level_basis(n: int, d: int) -> List[Tensor]:
    return list(itertools.product(range(d), repeat=2 * n))


# -- B(n) action and level operators ------------------------------------------
@lru_cache(maxsize=None)
def _position_map(img: Tuple[int, ...]) -> Tuple[int, ...]:
    """``src[k]``: index read by position ``k`` under ``(s x)_i = x_{s(i)}``."""
    n = len(img)
    out = []
    for k in range(2 * n):
        i = index_point(k, n)
        si = img[abs(i) - 1] if i > 0 else -img[abs(i) - 1]
        out.append(point_index(si, n))
    return tuple(out)


def act(s: SignedPermutation, t: Tensor) -> Tensor:
    src = _position_map(s.img)
    return tuple(t[k] for k in src)


class LevelOperator:
    """``sum c_s s`` acting on one level by the position action."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Dict[SignedPermutation, object]):
        self.n = n
        self.terms = {s: c for s, c in terms.items() if not is_zero(c)}

    def apply_component(self, comp: Dict[Tensor, object]) -> Dict[Tensor, object]:
        out: Dict[Tensor, object] = {}
        for s, c in self.terms.items():
            src = _position_map(s.img)
            for t, a in comp.items():
                u = tuple(t[k] for k in src)
                v = c * a
                out[u] = out[u] + v if u in out else v
        return {t: c for t, c in out.items() if not is_zero(c)}

    def __call__(self, v: FockVector) -> FockVector:
        levels = {n: dict(c) for n, c in v.levels.items()}
        if self.n in levels:
            levels[self.n] = self.apply_component(levels[self.n])
        return FockVector(v.d, levels)

    def then(self, other: "LevelOperator") -> "LevelOperator":
        """Operator ``other ∘ self`` written as a single sum.

        With ``(s x)_i = x_{s(i)}``, applying ``a`` then ``b`` is the
        permutation ``a∘b``.
        """
        out: Dict[SignedPermutation, object] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                k = a * b
                v = ca * cb
                out[k] = out[k] + v if k in out else v
        return LevelOperator(self.n, out)

    def __eq__(self, other):
        if not isinstance(other, LevelOperator) or self.n != other.n:
            return False
        keys = set(self.terms) | set(other.terms)
        zero = BivarPoly()
        return all(self.terms.get(k, zero) - other.terms.get(k, zero) == 0 for k in keys)


def symmetrizer(n: int, qp=QP, qm=QM) -> LevelOperator:
    """``P^(n) = sum over B(n) of phi(s) s``."""
    if n == 0:
        return LevelOperator(0, {SignedPermutation.identity(0): ONE if isinstance(qp, BivarPoly) else Fraction(1)})
    return LevelOperator(n, {s: phi(cycle_type(s), qp, qm) for s in enumerate_group(n)})


def r_operator(n: int, qp=QP, qm=QM) -> LevelOperator:
    """``R^(n) = id + qm J-_n + qp J+_n``."""
    one = ONE if isinstance(qp, BivarPoly) else Fraction(1)
    terms = {SignedPermutation.identity(n): one}
    terms[Reflection.short(n).to_perm(n)] = qm
    for j in range(1, n):
        for a in (j, -j):
            terms[Reflection.long(a, n).to_perm(n)] = qp
    return LevelOperator(n, terms)


def embed(op: LevelOperator) -> LevelOperator:
    """``id ⊗ op ⊗ id``: B(n-1) inside B(n) fixing ±n."""
    n = op.n + 1
    return LevelOperator(n, {SignedPermutation(s.img + (n,)): c for s, c in op.terms.items()})


def prop1_check(n: int, qp=QP, qm=QM) -> bool:
    """``P^(n) = (id ⊗ P^(n-1) ⊗ id) R^(n)`` as operators on level n."""
    lhs = symmetrizer(n, qp, qm)
    rhs = r_operator(n, qp, qm).then(embed(symmetrizer(n - 1, qp, qm))) if n > 1 else r_operator(n, qp, qm)
    return lhs == rhs


def prop1_check_on_basis(n: int, d: int, qp=QP, qm=QM) -> bool:
    """Same identity, checked by applying both sides to every basis tensor."""
    P = symmetrizer(n, qp, qm)
    R = r_operator(n, qp, qm)
    inner = embed(symmetrizer(n - 1, qp, qm)) if n > 1 else None
    for t in level_basis(n, d):
        v = FockVector.basis(d, t)
        w = R(v)
        if inner is not None:
            w = inner(w)
        if P(v) != w:
            return False
    return True


# -- inner products -------------------------------------------------------------
def free_inner(u: FockVector, v: FockVector):
    """``<u, v>_{0,0}`` (real scalars, so bilinear)."""
    total = 0
    for n, comp in u.levels.items():
        other = v.component(n)
        for t, c in comp.items():
            if t in other:
                total = total + c * other[t]
    return total


_P_CACHE: Dict[Tuple, LevelOperator] = {}


def _cached_symmetrizer(n, qp, qm) -> LevelOperator:
    key = (n, qp, qm)
    if key not in _P_CACHE:
        _P_CACHE[key] = symmetrizer(n, qp, qm)
    return _P_CACHE[key]


def deformed_inner(u: FockVector, v: FockVector, qp=QP, qm=QM):
    """``<u, v>_{qp,qm} = <u, P v>_{0,0}``, level by level."""
    total = 0
    for n in sorted(set(u.levels) & set(v.levels)):
        if n == 0:
            total = total + u.levels[0][()] * v.levels[0][()]
            continue
        Pv = _cached_symmetrizer(n, qp, qm).apply_component(v.levels[n])
        for t, c in u.levels[n].items():
            if t in Pv:
                total = total + c * Pv[t]
    if isinstance(total, int):
        total = Fraction(total)
    return total


def gram_on_level(n: int, d: int, qp, qm):
    basis = level_basis(n, d)
    P = symmetrizer(n, qp, qm)
    index = {t: k for k, t in enumerate(basis)}
    G = [[Fraction(0)] * len(basis) for _ in basis]
    for j, t in enumerate(basis):
        for u, c in P.apply_component({t: Fraction(1)}).items():
            G[index[u]][j] += c
    return G


# -- creation and annihilation ----------------------------------------------------
def _coords(x: Sequence) -> Tuple[Fraction, ...]:
    return tuple(Fraction(a) for a in x)


def create(x: Sequence, y: Sequence, v: FockVector) -> FockVector:
    """``b*(x⊗y)``: prepend ``x`` at position -(n+1), append ``y`` at n+1."""
    x, y = _coords(x), _coords(y)
    out: Dict[int, Dict[Tensor, object]] = {}
    for n, comp in v.levels.items():
        tgt = out.setdefault(n + 1, {})
        for t, c in comp.items():
            for a, xa in enumerate(x):
                if not xa:
                    continue
                for b, yb in enumerate(y):
                    if not yb:
                        continue
                    u = (a,) + t + (b,)
                    val = c * (xa * yb)
                    tgt[u] = tgt[u] + val if u in tgt else val
    return FockVector(v.d, out)


def free_annihilate_component(x, y, comp: Dict[Tensor, object]) -> Dict[Tensor, object]:
    out: Dict[Tensor, object] = {}
    for t, c in comp.items():
        w = x[t[0]] * y[t[-1]]
        if not w:
            continue
        u = t[1:-1]
        val = c * w
        out[u] = out[u] + val if u in out else val
    return out


def free_annihilate(x: Sequence, y: Sequence, v: FockVector) -> FockVector:
    """``b(x⊗y)``: contract the outermost positions; kills the vacuum."""
    x, y = _coords(x), _coords(y)
    out = {}
    for n, comp in v.levels.items():
        if n == 0:
            continue
        out[n - 1] = free_annihilate_component(x, y, comp)
    return FockVector(v.d, out)


def annihilate_via_r(x, y, v: FockVector, qp=QP, qm=QM) -> FockVector:
    """``b_{q}(x⊗y) = b(x⊗y) R^(n)`` on level n."""
    x, y = _coords(x), _coords(y)
    out = {}
    for n, comp in v.levels.items():
        if n == 0:
            continue
        out[n - 1] = free_annihilate_component(x, y, r_operator(n, qp, qm).apply_component(comp))
    return FockVector(v.d, out)


def contraction(i: int, x, y, t: Tensor):
    """The map J_i on a basis tensor: returns ``(weight, tensor)``.

    ``i = n`` contracts the outer slots, ``i = -n`` contracts them crosswise,
    and ``i`` in [±(n-1)] contracts slots ``-i``, ``i`` after moving the outer
    pair into their place.
    """
    n = len(t) // 2
    lo, hi = 0, 2 * n - 1
    if i == n:
        return x[t[lo]] * y[t[hi]], t[1:-1]
    if i == -n:
        return x[t[hi]] * y[t[lo]], t[1:-1]
    pi, pbi = point_index(i, n), point_index(-i, n)
    w = x[t[pbi]] * y[t[pi]]
    u = list(t)
    u[pi], u[pbi] = t[hi], t[lo]
    return w, tuple(u[1:-1])


def annihilate_via_j(x, y, v: FockVector, qp=QP, qm=QM) -> FockVector:
    """``alpha_0 + beta_qp + gamma_qm`` built from the contractions J_i."""
    x, y = _coords(x), _coords(y)
    out: Dict[int, Dict[Tensor, object]] = {}
    for n, comp in v.levels.items():
        if n == 0:
            continue
        tgt = out.setdefault(n - 1, {})
        coeffs = [(n, 1), (-n, qm)] + [(i, qp) for j in range(1, n) for i in (j, -j)]
        for t, c in comp.items():
            for i, k in coeffs:
                w, u = contraction(i, x, y, t)
                if not w:
                    continue
                val = c * k * w
                tgt[u] = tgt[u] + val if u in tgt else val
    return FockVector(v.d, out)


class RouteMismatch(AssertionError):
    pass


def annihilate(x, y, v: FockVector, qp=QP, qm=QM, check: bool = True) -> FockVector:
    """Deformed annihilation; both constructions are computed and compared."""
    a = annihilate_via_r(x, y, v, qp, qm)
    if check:
        b = annihilate_via_j(x, y, v, qp, qm)
        if a != b:
            raise RouteMismatch("b∘R and alpha+beta+gamma disagree")
    return a


def rank_one(xi: Sequence, x: Sequence) -> List[List[Fraction]]:
    """Matrix of ``|xi><x|``."""
    xi, x = _coords(xi), _coords(x)
    return [[a * b for b in x] for a in xi]


def _apply_matrix(A, j: int) -> List[Tuple[int, Fraction]]:
    return [(r, A[r][j]) for r in range(len(A)) if A[r][j]]


def second_quantization(A, B, v: FockVector, qp=QP) -> FockVector:
    """``Gamma_qp(A⊗B)``: A on slot -i with B on slot i, plus the crossed
    term with B on slot -i and A on slot i, for i = 1..n."""
    out: Dict[int, Dict[Tensor, object]] = {}
    for n, comp in v.levels.items():
        if n == 0:
            continue
        tgt = out.setdefault(n, {})
        for t, c in comp.items():
            for i in range(1, n + 1):
                pi, pbi = point_index(i, n), point_index(-i, n)
                for ra, wa in _apply_matrix(A, t[pbi]):
                    for rb, wb in _apply_matrix(B, t[pi]):
                        u = list(t)
                        u[pbi], u[pi] = ra, rb
                        u = tuple(u)
                        val = c * qp * (wa * wb)
                        tgt[u] = tgt[u] + val if u in tgt else val
                for rb, wb in _apply_matrix(B, t[pbi]):
                    for ra, wa in _apply_matrix(A, t[pi]):
                        u = list(t)
                        u[pbi], u[pi] = rb, ra
                        u = tuple(u)
                        val = c * qp * (wa * wb)
                        tgt[u] = tgt[u] + val if u in tgt else val
    return FockVector(v.d, out)


def _dot(a, b) -> Fraction:
    return sum((Fraction(p) * Fraction(q) for p, q in zip(a, b)), Fraction(0))


def commutation_sides(x, y, xi, eta, v: FockVector, qp=QP, qm=QM):
    lhs = annihilate(x, y, create(xi, eta, v), qp, qm)
    c = _dot(x, xi) * _dot(y, eta)
    e = _dot(x, eta) * _dot(y, xi)
    rhs = v.scale(c) + v.scale(qm * e) + second_quantization(rank_one(xi, x), rank_one(eta, y), v, qp)
    return lhs, rhs


def random_vector(d: int, rng: random.Random, lo: int = -5, hi: int = 5) -> Tuple[Fraction, ...]:
    return tuple(Fraction(rng.randint(lo, hi), rng.randint(1, 4)) for _ in range(d))


def commutation_check(d: int = 2, max_level: int = 3, seed: int = 0, trials: int = 2) -> bool:
    """Commutation relation on every basis tensor up to ``max_level``, for all
    choices of basis vectors and ``trials`` generic rational quadruples."""
    rng = random.Random(seed)
    unit = [tuple(Fraction(int(k == j)) for k in range(d)) for j in range(d)]
    quads = list(itertools.product(unit, repeat=4))
    quads += [tuple(random_vector(d, rng) for _ in range(4)) for _ in range(trials)]
    for n in range(max_level + 1):
        basis = [FockVector.vacuum(d)] if n == 0 else [FockVector.basis(d, t) for t in level_basis(n, d)]
        for x, y, xi, eta in quads:
            for v in basis:
                lhs, rhs = commutation_sides(x, y, xi, eta, v)
                if lhs != rhs:
                    return False
    return True


def gamma_equals_beta_bstar(d: int = 2, max_level: int = 2, seed: int = 0) -> bool:
    """``Gamma_qp(|xi><x| ⊗ |eta><y|) = beta_qp(x⊗y) b*(xi⊗eta)``."""
    rng = random.Random(seed)
    x, y, xi, eta = (random_vector(d, rng) for _ in range(4))
    for n in range(1, max_level + 1):
        for t in level_basis(n, d):
            v = FockVector.basis(d, t)
            full = annihilate_via_j(x, y, create(xi, eta, v), QP, BivarPoly())
            alpha = free_annihilate(x, y, create(xi, eta, v))
            beta = full - alpha
            if beta != second_quantization(rank_one(xi, x), rank_one(eta, y), v):
                return False
    return True


def adjoint_check(d: int = 2, max_level: int = 3, seed: int = 0, trials: int = 3, qp=QP, qm=QM) -> bool:
    """``<b*(x⊗y) u, v>_q = <u, b_q(x⊗y) v>_q`` for random u, v."""
    rng = random.Random(seed)
    for n in range(max_level):
        for _ in range(trials):
            x, y = random_vector(d, rng), random_vector(d, rng)
            u = _random_level_vector(n, d, rng)
            v = _random_level_vector(n + 1, d, rng)
            lhs = deformed_inner(create(x, y, u), v, qp, qm)
            rhs = deformed_inner(u, annihilate(x, y, v, qp, qm), qp, qm)
            if lhs != rhs:
                return False
    return True


def _random_level_vector(n: int, d: int, rng: random.Random) -> FockVector:
    if n == 0:
        return FockVector.vacuum(d, Fraction(rng.randint(1, 5)))
    comp = {t: Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for t in level_basis(n, d)}
    return FockVector(d, {n: comp})


# -- exclusion principle ------------------------------------------------------------
def level_norm(n: int, qp, qm):
    """Deformed norm² of ``x^{⊗n} ⊗ x^{⊗n}`` for a unit vector x."""
    v = FockVector.basis(1, (0,) * (2 * n)) if n else FockVector.vacuum(1)
    return deformed_inner(v, v, qp, qm)


def exclusion_check(M: int, N: int) -> dict:
    qp = Fraction(-1, M + N)
    qm = Fraction(M - N, M + N)
    norms = [level_norm(n, qp, qm) for n in range(1, M + 2)]
    lam = [1 + 2 * (k - 1) * qp + qm for k in range(1, M + 2)]
    prod = []
    acc = Fraction(1)
    for x in lam:
        acc *= x
        prod.append(acc)
    return {
        "M": M,
        "N": N,
        "q_plus": qp,
        "q_minus": qm,
        "norms": norms,
        "positive_through_M": all(x > 0 for x in norms[:M]),
        "zero_at_M_plus_1": norms[M] == 0,
        "matches_product": norms == prod,
    }


# -- words of creation/annihilation operators -----------------------------------------
def apply_word(eps, vectors: Sequence[Tuple[Sequence, Sequence]], qp=QP, qm=QM) -> FockVector:
    """``b^{eps(n)}(x_{-n}⊗x_n) ... b^{eps(1)}(x_{-1}⊗x_1) Ω⊗Ω``.

    ``vectors[i-1] = (x_{-i}, x_i)``.
    """
    from .pairpart import parse_epsilon

    eps = parse_epsilon(eps)
    if len(eps) != len(vectors):
        raise ValueError("one vector pair per letter")
    d = len(vectors[0][0])
    v = FockVector.vacuum(d, ONE if isinstance(qp, BivarPoly) else Fraction(1))
    for e, (xb, x) in zip(eps, vectors):
        v = create(xb, x, v) if e == "*" else annihilate(xb, x, v, qp, qm)
    return v


def combinatorial_word(eps, vectors: Sequence[Tuple[Sequence, Sequence]], qp=QP, qm=QM) -> FockVector:
    """Sum over admissible symmetric partitions of the weighted pairings,
    with the semi-cycle ends as tensor factors ordered by their r key."""
    from . import kernels
    from .pairpart import parse_epsilon

    eps = parse_epsilon(eps)
    n = len(eps)
    d = len(vectors[0][0])
    vec = {}
    for i, (xb, x) in enumerate(vectors, 1):
        vec[-i], vec[i] = _coords(xb), _coords(x)
    total = FockVector(d)
    symbolic = isinstance(qp, BivarPoly)
    for p in enumerate_partitions(n, eps=eps):
        w = Fraction(1)
        for a, b in p.pairs():
            w *= _dot(vec[a], vec[b])
            if not w:
                break
        if not w:
            continue
        c_minus, _, l_c, l_sc, semis = kernels.sym_cycle_stats(list(p.partner))
        if symbolic and qp == QP and qm == QM:
            k = BivarPoly.monomial(l_c + l_sc, c_minus, w)
        else:
            k = qp ** (l_c + l_sc) * qm ** c_minus * w
        if not semis:
            total = total + FockVector.vacuum(d, k)
        else:
            factors = [vec[index_point(l, n)] for l, _ in semis]
            total = total + FockVector.from_vectors(factors, k)
    return total


def formula101_check(max_len: int = 5, d: int = 2, seed: int = 0) -> Tuple[bool, int]:
    """Operator route vs combinatorial route for every word up to ``max_len``.

    Returns ``(all_equal, words_checked)``.
    """
    rng = random.Random(seed)
    checked = 0
    for length in range(1, max_len + 1):
        vectors = [(random_vector(d, rng), random_vector(d, rng)) for _ in range(length)]
        for word in itertools.product("1*", repeat=length):
            if apply_word(word, vectors) != combinatorial_word(word, vectors):
                return False, checked
            checked += 1
    return True, checked


# -- Gaussian operator -------------------------------------------------------------
def gaussian_moment_operator(two_n: int, symbolic: bool = True, qp=None, qm=None):
    """``<Ω, G(x)^{2n} Ω>`` with ``G = b_q(x⊗x) + b*(x⊗x)`` on H = Q^1.

    Uses the creation and annihilation operators themselves, so the
    three-term recursion is an output rather than an input here.
    """
    if symbolic:
        qp, qm = QP, QM
    else:
        qp, qm = Fraction(qp), Fraction(qm)
    if two_n % 2:
        return BivarPoly() if symbolic else Fraction(0)
    x = (Fraction(1),)
    one = ONE if symbolic else Fraction(1)
    v = FockVector.vacuum(1, one)
    for step in range(two_n):
        remaining = two_n - step
        v = create(x, x, v) + annihilate(x, x, v, qp, qm, check=False)
        # drop levels that cannot return to the vacuum in time
        v = FockVector(1, {n: c for n, c in v.levels.items() if n <= remaining - 1})
    vac = v.component(0).get((), 0)
    return vac if not isinstance(vac, int) else (BivarPoly.const(vac) if symbolic else Fraction(vac))

