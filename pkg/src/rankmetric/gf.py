"""Finite fields F_q, q = p^e <= 2^16.

Elements are plain integers in ``[0, q)`` whose base-p digits are the
polynomial-basis coefficients, least significant digit = constant term.  So in
F_8 built on x^3 + x + 1 the root alpha is 2 and alpha + 1 is 3.

Multiplication goes through discrete-log / antilog tables built once per field.
:class:`FieldElement` wraps an integer together with its field for operator
syntax; the hot paths in :mod:`rankmetric.matfq` work on raw integer arrays.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    InvalidModulus,
    NotPrime,
    ReducibleModulus,
    SpecMismatch,
    UnsupportedSize,
)

MAX_ORDER = 1 << 16


def is_prime(n: int) -> bool:
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


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` into ``(p, e)`` with ``q == p**e``; raise NotPrime otherwise."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    e = 0
    r = q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise NotPrime(f"{q} is not a prime power")
    return p, e


# -- polynomial helpers over F_p; polys are digit lists, index = degree --------

def to_digits(x: int, p: int, e: int) -> list[int]:
    ds = []
    for _ in range(e):
        ds.append(x % p)
        x //= p
    return ds


def from_digits(ds: Sequence[int], p: int) -> int:
    x = 0
    for c in reversed(ds):
        x = x * p + int(c)
    return x


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``m``."""
    a = _trim(list(a))
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        shift = len(a) - 1 - dm
        for k in range(dm + 1):
            a[shift + k] = (a[shift + k] - c * m[k]) % p
        _trim(a)
    return a


def _poly_mulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b))
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _poly_mod(prod, m, p)


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= e/2."""
    e = len(modulus) - 1
    if e == 1:
        return True
    for d in range(1, e // 2 + 1):
        for low in range(p ** d):
            g = to_digits(low, p, d) + [1]
            if not _poly_mod(modulus, g, p):
                return False
    return True


def default_modulus(p: int, e: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree ``e``, ordered by its integer encoding."""
    for code in range(p ** e, 2 * p ** e):
        digits = to_digits(code, p, e + 1)
        if is_irreducible(digits, p):
            return tuple(digits)
    raise AssertionError("no irreducible polynomial found")  # unreachable over a field


@dataclass(frozen=True)
class FieldSpec:
    """The field F_q with q = p**e, given by a monic irreducible ``modulus``.

    ``modulus`` holds the e+1 coefficients, constant term first.
    """

    p: int
    e: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.e

    @property
    def modulus_int(self) -> int:
        return from_digits(self.modulus, self.p)

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    def __repr__(self):
        return f"GF({self.p}^{self.e}, modulus={self.modulus_int})"

    def header(self) -> str:
        return f"GF {self.p} {self.e} {self.modulus_int}"

    # tables ---------------------------------------------------------------

    @cached_property
    def _tables(self):
        p, e, q = self.p, self.e, self.q
        m = list(self.modulus)
        one = [1]

        def mulmod(a, b):
            return _poly_mulmod(a, b, m, p)

        def polypow(a, k):
            r, base = one, a
            while k:
                if k & 1:
                    r = mulmod(r, base)
                base = mulmod(base, base)
                k >>= 1
            return r

        # smallest generator of the multiplicative group
        order = q - 1
        factors = prime_factors(order) if order > 1 else []
        gen = 1
        if q > 2:
            for g in range(2, q):
                gd = _trim(to_digits(g, p, e))
                if all(polypow(gd, order // r) != one for r in factors):
                    gen = g
                    break
        exp = np.zeros(2 * q, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        gd = _trim(to_digits(gen, p, e))
        cur = [1]
        for k in range(order):
            v = from_digits(cur, p)
            exp[k] = v
            log[v] = k
            cur = mulmod(cur, gd)
        # doubled so exp[log a + log b] needs no reduction
        exp[order:2 * order] = exp[:order]
        inv = np.zeros(q, dtype=np.int64)
        for v in range(1, q):
            inv[v] = exp[(order - log[v]) % order]
        return gen, exp, log, inv

    @property
    def generator(self) -> int:
        return self._tables[0]

    @property
    def exp_table(self) -> np.ndarray:
        return self._tables[1]

    @property
    def log_table(self) -> np.ndarray:
        return self._tables[2]

    @property
    def inv_table(self) -> np.ndarray:
        return self._tables[3]

    def kernel_args(self):
        """``(p, e, exp, log, inv)`` in the layout the compiled kernels expect."""
        return self.p, self.e, self.exp_table, self.log_table, self.inv_table

    # scalar arithmetic on encoded ints -------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        r, w = 0, 1
        while a or b:
            r += ((a % p + b % p) % p) * w
            a //= p
            b //= p
            w *= p
        return r

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        r, w = 0, 1
        while a:
            r += ((-(a % p)) % p) * w
            a //= p
            w *= p
        return r

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        lg = self.log_table
        return int(self.exp_table[lg[a] + lg[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no inverse")
        return int(self.inv_table[a])

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise DivisionByZero("zero has no inverse")
            return 1 if k == 0 else 0
        order = self.q - 1
        return int(self.exp_table[(int(self.log_table[a]) * k) % order])

    def digits(self, a: int) -> list[int]:
        return to_digits(a, self.p, self.e)

    def elements(self) -> range:
        return range(self.q)

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    @property
    def alpha(self) -> FieldElement:
        """The class of x, i.e. a root of the modulus (0 in a prime field built on x)."""
        return FieldElement(self, self.p % self.q if self.e > 1 else (-self.modulus[0]) % self.p)


@lru_cache(maxsize=None)
def _field_cached(p: int, e: int, modulus: tuple[int, ...]) -> FieldSpec:
    return FieldSpec(p, e, modulus)


def field_new(p: int, e: int = 1, modulus=None) -> FieldSpec:
    """Build F_{p^e}.

    ``modulus`` may be a digit sequence (constant term first) or its integer
    encoding; omitted, the smallest monic irreducible is used.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1 or p ** e > MAX_ORDER:
        raise UnsupportedSize(f"q = {p}^{e} outside the supported range 2..{MAX_ORDER}")
    if modulus is None:
        digits = default_modulus(p, e)
    else:
        if isinstance(modulus, (int, np.integer)):
            digits = tuple(to_digits(int(modulus), p, e + 1))
            if from_digits(digits, p) != modulus:
                raise InvalidModulus(f"modulus {modulus} has degree above {e}")
        else:
            digits = tuple(int(c) for c in modulus)
        if len(digits) != e + 1 or any(not 0 <= c < p for c in digits):
            raise InvalidModulus(f"modulus must have {e + 1} digits in [0, {p})")
        if digits[-1] != 1:
            raise InvalidModulus("modulus must be monic")
        if not is_irreducible(digits, p):
            raise ReducibleModulus(f"modulus {from_digits(digits, p)} is reducible over F_{p}")
    return _field_cached(p, e, digits)


def GF(q: int, modulus=None) -> FieldSpec:
    """Convenience constructor from the field order."""
    p, e = prime_power(q)
    if p ** e > MAX_ORDER:
        raise UnsupportedSize(f"q = {q} above {MAX_ORDER}")
    return field_new(p, e, modulus)


class FieldElement:
    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        value = int(value)
        if not 0 <= value < field.q:
            raise ValueError(f"{value} is not an element of {field}")
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise SpecMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return FieldElement(self.field, other).value
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(b)))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __int__(self):
        return self.value

    __index__ = __int__

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} in {self.field!r}"

    def __str__(self):
        return str(self.value)


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()
