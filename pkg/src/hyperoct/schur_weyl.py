"""A tensor representation of B(n) whose normalized character is phi.

B(n) acts on ``V^{⊗n}`` with ``V = span(e+_1..e+_M, e-_1..e-_N)``: the
factor in slot i moves to slot ``|s|(i)``; an ``e-`` factor also picks up
the sign of ``s(i)``.  For ``eps = -1`` everything is multiplied by the sign
of the underlying permutation.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .group import (
    SignedPermutation,
    coxeter_generators,
    cycle_type,
    enumerate_group,
    phi,
    random_element,
)

DEFAULT_MAX_DIM = 64


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class RepConfig:
    M: int
    N: int
    eps: int
    n: int

    def __post_init__(self):
        if self.M < 0 or self.N < 0 or self.M + self.N < 1:
            raise ValueError("need M, N >= 0 and M + N >= 1")
        if self.eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        if self.n < 0:
            raise ValueError("rank must be nonnegative")

    @property
    def dim(self) -> int:
        return (self.M + self.N) ** self.n

    @property
    def q_plus(self) -> Fraction:
        return Fraction(self.eps, self.M + self.N)

    @property
    def q_minus(self) -> Fraction:
        return Fraction(self.M - self.N, self.M + self.N)

    def check_budget(self, max_dim: int = DEFAULT_MAX_DIM):
        if self.dim > max_dim:
            raise BudgetExceeded(f"(M+N)^n = {self.dim} exceeds the budget {max_dim}")


class RepMatrix:
    """Signed permutation matrix: column j has the entry ``sign[j]`` in row ``perm[j]``."""

    __slots__ = ("perm", "sign")

    def __init__(self, perm: Tuple[int, ...], sign: Tuple[int, ...]):
        self.perm = perm
        self.sign = sign

    @property
    def size(self) -> int:
        return len(self.perm)

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        perm = tuple(self.perm[p] for p in other.perm)
        sign = tuple(self.sign[p] * s for p, s in zip(other.perm, other.sign))
        return RepMatrix(perm, sign)

    def __eq__(self, other):
        return isinstance(other, RepMatrix) and self.perm == other.perm and self.sign == other.sign

    def __hash__(self):
        return hash((self.perm, self.sign))

    def is_identity(self) -> bool:
        return all(p == j and s == 1 for j, (p, s) in enumerate(zip(self.perm, self.sign)))

    def trace(self) -> int:
        return sum(s for j, (p, s) in enumerate(zip(self.perm, self.sign)) if p == j)

    def to_dense(self) -> List[List[int]]:
        out = [[0] * self.size for _ in range(self.size)]
        for j, (p, s) in enumerate(zip(self.perm, self.sign)):
            out[p][j] = s
        return out


def _basis(cfg: RepConfig):
    return list(itertools.product(range(cfg.M + cfg.N), repeat=cfg.n))


def _index(t, base: int) -> int:
    k = 0
    for a in t:
        k = k * base + a
    return k


def global_sign(g: SignedPermutation, eps: int) -> int:
    """Multiplicative form: the sign of the underlying permutation when eps = -1."""
    return g.underlying_sign() if eps == -1 else 1


def class_sign(g: SignedPermutation, eps: int) -> int:
    """``eps^(||rho+|| + ||rho-||)`` from the cycle type."""
    t = cycle_type(g)
    return eps ** (t.rho_plus.norm + t.rho_minus.norm)


def rep_matrix(g: SignedPermutation, cfg: RepConfig, max_dim: int = DEFAULT_MAX_DIM) -> RepMatrix:
    if g.n != cfg.n:
        raise ValueError(f"element of B({g.n}) used with rank {cfg.n}")
    cfg.check_budget(max_dim)
    base = cfg.M + cfg.N
    glob = global_sign(g, cfg.eps)
    perm, sign = [], []
    for t in _basis(cfg):
        out = [0] * cfg.n
        s = glob
        for i, a in enumerate(t):
            target = g.img[i]
            out[abs(target) - 1] = a
            if a >= cfg.M and target < 0:
                s = -s
        perm.append(_index(out, base))
        sign.append(s)
    return RepMatrix(tuple(perm), tuple(sign))


def trace_formula(g: SignedPermutation, cfg: RepConfig) -> int:
    """``eps^(||rho+||+||rho-||) (M+N)^(n - ||rho+|| - |rho-|) (M-N)^l(rho-)``."""
    t = cycle_type(g, "padded")
    rp, rm = t.rho_plus, t.rho_minus
    e = rp.norm + rm.norm
    return cfg.eps ** e * (cfg.M + cfg.N) ** (cfg.n - rp.norm - rm.size) * (cfg.M - cfg.N) ** rm.length


def verify_homomorphism(cfg: RepConfig, pairs: int = 100, seed: int = 0, max_dim: int = DEFAULT_MAX_DIM) -> bool:
    if cfg.n == 0:
        return True
    rng = random.Random(seed)
    gens = coxeter_generators(cfg.n)
    tests = [(a, b) for a in gens for b in gens]
    tests += [(random_element(cfg.n, rng), random_element(cfg.n, rng)) for _ in range(pairs)]
    for a, b in tests:
        if rep_matrix(a * b, cfg, max_dim) != rep_matrix(a, cfg, max_dim) @ rep_matrix(b, cfg, max_dim):
            return False
    if cfg.n >= 2:
        w = rep_matrix(gens[0], cfg, max_dim) @ rep_matrix(gens[1], cfg, max_dim)
        acc = w @ w
        if not (acc @ acc).is_identity():
            return False
    return True


def verify_inverses(cfg: RepConfig, max_dim: int = DEFAULT_MAX_DIM) -> bool:
    return all((rep_matrix(g, cfg, max_dim) @ rep_matrix(g.inverse(), cfg, max_dim)).is_identity()
               for g in enumerate_group(cfg.n))


def verify_character(cfg: RepConfig, max_dim: int = DEFAULT_MAX_DIM) -> bool:
    """Trace formula and ``trace / dim = phi`` on every element."""
    dim = cfg.dim
    for g in enumerate_group(cfg.n):
        tr = rep_matrix(g, cfg, max_dim).trace()
        if tr != trace_formula(g, cfg):
            return False
        if Fraction(tr, dim) != phi(cycle_type(g), cfg.q_plus, cfg.q_minus):
            return False
    return True


def sign_forms_agree(n: int) -> bool:
    """The multiplicative sign matches ``eps^(||rho+||+||rho-||)`` on B(n)."""
    return all(global_sign(g, e) == class_sign(g, e) for g in enumerate_group(n) for e in (1, -1))


@dataclass
class SchurWeylReport:
    cfg: RepConfig
    homomorphism: bool
    character: bool
    sign_forms: bool
    witness: Optional[SignedPermutation] = None

    @property
    def ok(self) -> bool:
        return self.homomorphism and self.character and self.sign_forms


def verify(cfg: RepConfig, seed: int = 0, max_dim: int = DEFAULT_MAX_DIM) -> SchurWeylReport:
    return SchurWeylReport(
        cfg,
        verify_homomorphism(cfg, seed=seed, max_dim=max_dim),
        verify_character(cfg, max_dim=max_dim),
        sign_forms_agree(cfg.n),
    )


def all_configs(max_total: int = 4, max_n: int = 3):
    for total in range(1, max_total + 1):
        for M in range(total + 1):
            for eps in (1, -1):
                for n in range(1, max_n + 1):
                    yield RepConfig(M, total - M, eps, n)
