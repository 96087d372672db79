"""Univariate polynomials over a :class:`~sublcp.field.Field`."""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator

from .errors import ContextMismatch, DivisionByZeroPolynomial
from .field import Field, FieldElement


class Polynomial:
    """Immutable polynomial, coefficients lowest degree first.

    >>> from sublcp.field import GF
    >>> F = GF(5)
    >>> Polynomial(F, [-1, 1]) * Polynomial(F, [1, 1])
    Polynomial(GF(5), x^2 + 4)
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        c = [field.encode(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def x(cls, field: Field) -> Polynomial:
        return cls(field, [0, 1])

    @classmethod
    def monomial(cls, field: Field, degree: int, coeff=1) -> Polynomial:
        return cls(field, [0] * degree + [coeff])

    @property
    def degree(self) -> float:
        """Degree, with ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.leading == 1

    def _check(self, other: Polynomial) -> None:
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.field != self.field:
            raise ContextMismatch("polynomials over different fields")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        F = self.field
        return Polynomial(
            F, [F.add_s(a, b) for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)]
        )

    def __neg__(self) -> Polynomial:
        return Polynomial(self.field, [self.field.neg_s(a) for a in self.coeffs])

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        F = self.field
        if isinstance(other, (int, FieldElement)):
            s = F.encode(other)
            return Polynomial(F, [F.mul_s(a, s) for a in self.coeffs])
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Polynomial(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = F.add_s(out[i + j], F.mul_s(a, b))
        return Polynomial(F, out)

    __rmul__ = __mul__

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        self._check(other)
        if other.is_zero():
            raise DivisionByZeroPolynomial("division by the zero polynomial")
        F = self.field
        rem = list(self.coeffs)
        dg = len(other.coeffs) - 1
        inv_lead = F.inv_s(other.leading)
        quo = [0] * max(len(rem) - dg, 0)
        for shift in range(len(rem) - 1 - dg, -1, -1):
            f = F.mul_s(rem[shift + dg], inv_lead)
            if f:
                quo[shift] = f
                for i, b in enumerate(other.coeffs):
                    rem[shift + i] = F.sub_s(rem[shift + i], F.mul_s(f, b))
        return Polynomial(F, quo), Polynomial(F, rem[:dg] if dg > 0 else [])

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def __call__(self, x) -> FieldElement:
        F = self.field
        v = F.encode(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add_s(F.mul_s(acc, v), c)
        return FieldElement(F, acc)

    def __pow__(self, e: int) -> Polynomial:
        out = Polynomial(self.field, [1])
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = repr(FieldElement(self.field, c))
            if i == 0:
                terms.append(cs)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{cs}{mono}")
        return " + ".join(terms)

    def __repr__(self):
        return f"Polynomial({self.field!r}, {self})"


def poly_arith(op: str, f: Polynomial, g: Polynomial | FieldElement | int):
    """One of add, sub, mul, divmod, eval (``g`` is the point for eval)."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "divmod":
        return divmod(f, g)
    if op == "eval":
        return f(g)
    raise ValueError(f"unknown polynomial operation {op!r}")


def monic_polynomials(field: Field, degree: int) -> Iterator[Polynomial]:
    """All monic polynomials of a degree, ordered by the codes of their lower coefficients."""
    for code in range(field.q**degree):
        low = [(code // field.q**i) % field.q for i in range(degree)]
        yield Polynomial(field, low + [1])


def is_irreducible(f: Polynomial) -> bool:
    deg = f.degree
    if deg < 1:
        return False
    for d in range(1, int(deg) // 2 + 1):
        for g in monic_polynomials(f.field, d):
            if (f % g).is_zero():
                return False
    return True


def find_irreducible(field: Field, degree: int) -> Polynomial:
    """First monic irreducible of the given degree in :func:`monic_polynomials` order."""
    for f in monic_polynomials(field, degree):
        if degree > 1 and f.coeffs[0] == 0:
            continue
        if is_irreducible(f):
            return f
    raise AssertionError("unreachable")
