"""Finite fields GF(p^m) in the polynomial basis.

Elements are stored as plain ints: the element
``c_0 + c_1 x + ... + c_{m-1} x^{m-1}`` has code ``sum(c_i * p**i)``.
A :class:`Field` owns exp/log tables for extension fields so that the
vectorized operations below are table lookups.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _kernels
from .errors import ContextMismatch, InversionOfZero

MAX_PRIME = 2**31
MAX_EXTENSION_ORDER = 2**20


def is_prime(n: int) -> bool:
    """Deterministic trial division (fine for the word-sized primes used here)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**m``; raises ValueError if q is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    for p in itertools.count(2):
        if p * p > q:
            p = q
            break
        if q % p == 0:
            break
    if not is_prime(p):
        raise ValueError(f"{q} is not a prime power")
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, m


# ----------------------------------------------------------------------------
# polynomials over GF(p) as coefficient lists, lowest degree first


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b):
        f = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - f * bi) % p
        _trim(a)
    return a


def _monic_polys(p: int, degree: int) -> Iterator[list[int]]:
    for low in itertools.product(range(p), repeat=degree):
        yield list(reversed(low)) + [1]


def is_irreducible_mod_p(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg//2."""
    poly = _trim([c % p for c in poly])
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(p, d):
            if not _pmod(poly, g, p):
                return False
    return True


@functools.lru_cache(maxsize=None)
def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree m, ordering by the integer code
    of its lower coefficients (so GF(8) gets x^3 + x + 1)."""
    for code in range(p**m):
        low = [(code // p**i) % p for i in range(m)]
        cand = low + [1]
        if low[0] == 0 and m > 1:
            continue
        if is_irreducible_mod_p(cand, p):
            return tuple(cand)
    raise AssertionError("unreachable: irreducibles exist in every degree")


def _mulmod_code(a: int, b: int, p: int, m: int, modulus: Sequence[int]) -> int:
    da = [(a // p**i) % p for i in range(m)]
    db = [(b // p**i) % p for i in range(m)]
    prod = [0] * (2 * m - 1)
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
    red = _pmod(prod, modulus, p)
    return sum(c * p**i for i, c in enumerate(red))


def _build_tables(p: int, m: int, modulus: Sequence[int]) -> _kernels.ExtTables:
    q = p**m
    order = q - 1
    exp = np.zeros(2 * order, dtype=np.int64)
    log = np.zeros(q, dtype=np.int64)
    for g in range(2, q):
        seq = [1]
        x = 1
        for _ in range(order - 1):
            x = _mulmod_code(x, g, p, m, modulus)
            if x == 1:
                break
            seq.append(x)
        if len(seq) == order:
            break
    else:  # pragma: no cover - q == 2 handled by prime path
        raise AssertionError("no generator found")
    exp[:order] = seq
    exp[order:] = seq
    log[np.array(seq)] = np.arange(order)
    neg = np.zeros(q, dtype=np.int64)
    w = 1
    for _ in range(m):
        neg += ((-(np.arange(q) // w)) % p) * w
        w *= p
    inv = np.zeros(q, dtype=np.int64)
    inv[1:] = exp[(order - log[1:]) % order]
    return _kernels.ExtTables(p, m, q, exp, log, neg, inv)


# ----------------------------------------------------------------------------


class Field:
    """The field GF(p^m).

    Parameters
    ----------
    p : int
        Characteristic; must be prime and below 2**31.
    m : int
        Extension degree.
    modulus : sequence of int, optional
        Monic irreducible of degree ``m`` over GF(p), lowest coefficient
        first.  Checked for irreducibility.  Defaults to
        :func:`default_modulus`.
    """

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if p >= MAX_PRIME:
            raise ValueError(f"characteristic must be below 2**31, got {p}")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        self.p = p
        self.m = m
        self.q = p**m
        if m == 1:
            if modulus is not None and len(_trim([c % p for c in modulus])) != 2:
                raise ValueError("prime fields take no modulus (or a monic linear one)")
            self.modulus = None
            self.tables = None
        else:
            if self.q > MAX_EXTENSION_ORDER:
                raise ValueError(f"extension fields are limited to q <= {MAX_EXTENSION_ORDER}")
            if modulus is None:
                modulus = default_modulus(p, m)
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {m}")
            if not is_irreducible_mod_p(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over GF({p})")
            self.modulus = modulus
            self.tables = _tables_for(p, m, modulus)

    @classmethod
    def of_order(cls, q: int, modulus: Sequence[int] | None = None) -> Field:
        p, m = prime_power(q)
        return cls(p, m, modulus)

    # identity -------------------------------------------------------------

    def _key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"

    # elements -------------------------------------------------------------

    def __call__(self, value) -> FieldElement:
        return FieldElement(self, self.encode(value))

    def encode(self, value) -> int:
        """Integer code of ``value`` (int, FieldElement or coefficient tuple)."""
        if isinstance(value, FieldElement):
            self.check(value)
            return value.value
        if isinstance(value, (tuple, list)):
            if len(value) > self.m:
                raise ValueError(f"too many coefficients for {self!r}")
            return sum((int(c) % self.p) * self.p**i for i, c in enumerate(value))
        v = int(value)
        if self.m == 1:
            return v % self.p
        if not 0 <= v < self.q:
            raise ValueError(f"code {v} out of range for {self!r}")
        return v

    def coefficients(self, code: int) -> tuple[int, ...]:
        return tuple((int(code) // self.p**i) % self.p for i in range(self.m))

    def check(self, elem: FieldElement) -> None:
        if elem.field != self:
            raise ContextMismatch(f"element of {elem.field!r} used in {self!r}")

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def elements(self) -> Iterator[FieldElement]:
        for v in range(self.q):
            yield FieldElement(self, v)

    @property
    def is_odd(self) -> bool:
        return self.p != 2

    # vectorized arithmetic on integer codes -------------------------------

    def add(self, a, b):
        return _kernels.np_add(a, b, self.p, self.tables)

    def sub(self, a, b):
        return _kernels.np_sub(a, b, self.p, self.tables)

    def neg(self, a):
        return _kernels.np_neg(a, self.p, self.tables)

    def mul(self, a, b):
        return _kernels.np_mul(a, b, self.p, self.tables)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise InversionOfZero("zero has no inverse")
        if self.tables is None:
            return np.vectorize(lambda x: pow(int(x), -1, self.p), otypes=[np.int64])(a)
        return self.tables.inv[a]

    def matmul(self, A, B) -> np.ndarray:
        return _kernels.matmul(A, B, self.p, self.tables)

    def rref(self, M):
        return _kernels.rref(M, self.p, self.tables)

    # scalar arithmetic ----------------------------------------------------

    def add_s(self, a: int, b: int) -> int:
        if self.tables is None:
            return (a + b) % self.p
        return int(self.add(a, b))

    def sub_s(self, a: int, b: int) -> int:
        if self.tables is None:
            return (a - b) % self.p
        return int(self.sub(a, b))

    def neg_s(self, a: int) -> int:
        if self.tables is None:
            return (-a) % self.p
        return int(self.tables.neg[a])

    def mul_s(self, a: int, b: int) -> int:
        if self.tables is None:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        t = self.tables
        return int(t.exp[t.log[a] + t.log[b]])

    def inv_s(self, a: int) -> int:
        if a == 0:
            raise InversionOfZero("zero has no inverse")
        if self.tables is None:
            return pow(a, -1, self.p)
        return int(self.tables.inv[a])

    def pow_s(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv_s(a), -e
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul_s(result, base)
            base = self.mul_s(base, base)
            e >>= 1
        return result


@functools.lru_cache(maxsize=64)
def _tables_for(p: int, m: int, modulus: tuple[int, ...]) -> _kernels.ExtTables:
    return _build_tables(p, m, modulus)


def GF(q: int, modulus: Sequence[int] | None = None) -> Field:
    """Cached field of order q (a prime power), optionally with an explicit
    modulus given as low-to-high coefficients."""
    return _cached_field(q, None if modulus is None else tuple(int(c) for c in modulus))


@functools.lru_cache(maxsize=None)
def _cached_field(q: int, modulus: tuple[int, ...] | None) -> Field:
    return Field.of_order(q, modulus)


@dataclass(frozen=True)
class FieldElement:
    field: Field
    value: int

    def _other(self, b) -> int:
        if isinstance(b, FieldElement):
            self.field.check(b)
            return b.value
        return self.field.encode(b)

    def __add__(self, b):
        return FieldElement(self.field, self.field.add_s(self.value, self._other(b)))

    __radd__ = __add__

    def __sub__(self, b):
        return FieldElement(self.field, self.field.sub_s(self.value, self._other(b)))

    def __rsub__(self, b):
        return FieldElement(self.field, self.field.sub_s(self._other(b), self.value))

    def __mul__(self, b):
        return FieldElement(self.field, self.field.mul_s(self.value, self._other(b)))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_s(self.value))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv_s(self.value))

    def __truediv__(self, b):
        return self * FieldElement(self.field, self._other(b)).inverse()

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow_s(self.value, int(e)))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.encode(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self.field.coefficients(self.value)

    def __repr__(self):
        if self.field.m == 1:
            return str(self.value)
        return "[" + "".join(str(c) for c in self.coefficients) + "]"


def field_arith(ctx: Field, op: str, a: FieldElement, b: FieldElement | int | None = None) -> FieldElement:
    """Dispatch one of add, sub, mul, inv, pow, neg.  ``pow`` takes an int exponent."""
    ctx.check(a)
    if isinstance(b, FieldElement):
        ctx.check(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    if op == "pow":
        return a ** int(b)
    raise ValueError(f"unknown field operation {op!r}")


def as_codes(field: Field, values: Iterable) -> list[int]:
    return [field.encode(v) for v in values]
