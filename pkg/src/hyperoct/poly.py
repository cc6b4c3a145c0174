"""Exact polynomials in two commuting variables ``qp`` and ``qm``.

Coefficients are :class:`fractions.Fraction`.  Instances are immutable and
hashable; arithmetic mixes freely with ``int`` and ``Fraction``.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterator, Tuple, Union

Monomial = Tuple[int, int]
Scalar = Union[int, Fraction]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class BivarPoly:
    """Sum of ``coeff * qp**e_qp * qm**e_qm`` with no zero coefficients stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Dict[Monomial, Scalar] | None = None):
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for (a, b), c in terms.items():
                if a < 0 or b < 0:
                    raise ValueError(f"negative exponent in monomial {(a, b)}")
                c = _as_fraction(c)
                if c:
                    clean[(int(a), int(b))] = c
        self._terms = clean
        self._hash = None

    # -- construction helpers -------------------------------------------
    @classmethod
    def const(cls, c: Scalar) -> "BivarPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, e_qp: int, e_qm: int, c: Scalar = 1) -> "BivarPoly":
        return cls({(e_qp, e_qm): c})

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction]) -> "BivarPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @staticmethod
    def coerce(x) -> "BivarPoly":
        if isinstance(x, BivarPoly):
            return x
        return BivarPoly.const(_as_fraction(x))

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(sorted(self._terms.items()))

    def coeff(self, e_qp: int, e_qm: int) -> Fraction:
        return self._terms.get((e_qp, e_qm), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> Tuple[int, int]:
        if not self._terms:
            return (-1, -1)
        return (max(a for a, _ in self._terms), max(b for _, b in self._terms))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        try:
            other = BivarPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return BivarPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = BivarPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return BivarPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, BivarPoly):
            out: Dict[Monomial, Fraction] = {}
            for (a1, b1), c1 in self._terms.items():
                for (a2, b2), c2 in other._terms.items():
                    m = (a1 + a2, b1 + b2)
                    s = out.get(m, 0) + c1 * c2
                    if s:
                        out[m] = s
                    else:
                        out.pop(m, None)
            return BivarPoly._raw(out)
        try:
            k = _as_fraction(other)
        except TypeError:
            return NotImplemented
        if not k:
            return BivarPoly._raw({})
        return BivarPoly._raw({m: c * k for m, c in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, other):
        k = _as_fraction(other)
        if not k:
            raise ZeroDivisionError("division of BivarPoly by zero")
        return BivarPoly._raw({m: c / k for m, c in self._terms.items()})

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, BivarPoly):
            return self._terms == other._terms
        try:
            other = BivarPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- evaluation -------------------------------------------------------
    def __call__(self, qp, qm):
        return self.evaluate(qp, qm)

    def evaluate(self, qp, qm):
        """Evaluate at ``(qp, qm)``; ``0**0`` is taken to be 1.

        The arguments may be rationals or other ``BivarPoly`` values
        (substitution).
        """
        total = 0
        for (a, b), c in self._terms.items():
            total = total + c * (qp ** a) * (qm ** b)
        if isinstance(total, int):
            total = Fraction(total)
        return total

    def first_difference(self, other: "BivarPoly"):
        """Smallest monomial (in ``(e_qp, e_qm)`` order) where the two differ."""
        diff = self - BivarPoly.coerce(other)
        if diff.is_zero():
            return None
        m = min(diff._terms)
        return m, self.coeff(*m), BivarPoly.coerce(other).coeff(*m)

    def to_monomials(self):
        """Serialisable form: list of ``{e_qp, e_qm, num, den}`` sorted by exponents."""
        return [
            {"e_qp": a, "e_qm": b, "num": c.numerator, "den": c.denominator}
            for (a, b), c in sorted(self._terms.items())
        ]

    @classmethod
    def from_monomials(cls, monos) -> "BivarPoly":
        return cls({(m["e_qp"], m["e_qm"]): Fraction(m["num"], m["den"]) for m in monos})

    def __repr__(self):
        return f"BivarPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self._terms.items()):
            mono = []
            if a:
                mono.append("qp" if a == 1 else f"qp^{a}")
            if b:
                mono.append("qm" if b == 1 else f"qm^{b}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(mono))
            elif c == -1:
                parts.append("-" + "*".join(mono))
            else:
                parts.append(f"{c}*" + "*".join(mono))
        return " + ".join(parts).replace("+ -", "- ")


ZERO = BivarPoly()
ONE = BivarPoly.const(1)
QP = BivarPoly.monomial(1, 0)
QM = BivarPoly.monomial(0, 1)


def is_zero(x) -> bool:
    """Zero test that works for both rationals and ``BivarPoly``."""
    if isinstance(x, BivarPoly):
        return x.is_zero()
    return x == 0
