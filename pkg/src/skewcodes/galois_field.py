"""
Arithmetic in GF(p^r) and its Frobenius-power automorphisms.

Elements are handled as integer encodings: the element
``c_0 + c_1 t + ... + c_{r-1} t^{r-1}`` (``t`` a root of the modulus) is the
integer ``c_0 + c_1 p + ... + c_{r-1} p^{r-1}``.  Encoding 0 is the additive
identity and encoding 1 the multiplicative identity.  All ``FiniteField``
methods take and return these integers; ``FieldElement`` is a thin wrapper
with operator overloading for interactive use.

Multiplication goes through discrete log / antilog tables built from the
primitive element ``xi``, so every nonzero element is ``xi**k`` for a unique
``0 <= k < q - 1``.

>>> F = make_field(2, 2)
>>> F.xi, F.mul(2, 2), F.inv(2)
(2, 3, 3)
>>> theta = F.frobenius(1)
>>> theta.m, theta.apply(2)
(2, 3)
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DegreeMismatch,
    ExponentOutOfRange,
    FieldMismatch,
    InvalidElement,
    NonPrimeCharacteristic,
    ReducibleModulus,
    ZeroArgument,
    ZeroInverse,
)

# above this size p != 2 fields add digit-wise instead of through a q x q table
_ADD_TABLE_LIMIT = 1024


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


# -- polynomials over GF(p), coefficient lists lowest degree first ----------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod_p(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` divided by ``b`` over GF(p); ``b`` must be nonzero."""
    a = _trim(list(a))
    b = _trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return a


def _is_irreducible_mod_p(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1 .. deg/2."""
    r = len(poly) - 1
    if r <= 1:
        return r == 1
    for deg in range(1, r // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if not _poly_mod_p(poly, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``r`` over GF(p).

    Coefficient tuples are compared lowest degree first, and the returned
    tuple includes the leading 1.
    """
    for low in itertools.product(range(p), repeat=r):
        poly = tuple(low) + (1,)
        if _is_irreducible_mod_p(poly, p):
            return poly
    raise AssertionError(f"no irreducible of degree {r} over GF({p})")


def pack(coeffs: Sequence[int], p: int) -> int:
    return sum(c * p**i for i, c in enumerate(coeffs))


def unpack(value: int, p: int, length: int | None = None) -> tuple[int, ...]:
    out = []
    while value:
        value, c = divmod(value, p)
        out.append(c)
    if length is not None:
        out.extend([0] * (length - len(out)))
    return tuple(out)


def parse_designator(text: str) -> tuple[int, int]:
    """``"2^3"`` -> ``(2, 3)``; a bare prime ``"7"`` means ``7^1``."""
    text = text.strip()
    base, sep, exp = text.partition("^")
    try:
        p = int(base)
        r = int(exp) if sep else 1
    except ValueError:
        raise ValueError(f"field designator must look like 'p^r', got {text!r}") from None
    return p, r


# -- integer brackets -------------------------------------------------------

def bracket(p: int, s: int, i: int) -> int:
    """The exact integer ``(p^(s i) - 1) / (p^s - 1) = 1 + p^s + ... + p^(s(i-1))``.

    For ``s == 0`` this is ``i`` (the identity automorphism's norm exponent).
    """
    if i < 0:
        raise ValueError("bracket index must be >= 0")
    if s == 0:
        return i
    ps = p**s
    return (ps**i - 1) // (ps - 1)


def bracket_mod(p: int, s: int, i: int, modulus: int) -> int:
    """``bracket(p, s, i) % modulus`` in O(log i) without big integers.

    Uses ``[2a] = [a](1 + P^a)`` and ``[a+1] = P[a] + 1`` with ``P = p^s``.
    """
    if i < 0:
        raise ValueError("bracket index must be >= 0")
    if modulus == 1:
        return 0
    if s == 0:
        return i % modulus
    P = pow(p, s, modulus)
    value, power = 0, 1  # [a] and P^a for the prefix a read so far
    for bit in bin(i)[2:]:
        value = value * (1 + power) % modulus
        power = power * power % modulus
        if bit == "1":
            value = (value * P + 1) % modulus
            power = power * P % modulus
    return value


class FiniteField:
    """GF(p^r) with a fixed irreducible modulus and primitive element.

    Parameters
    ----------
    p : int
        Prime characteristic.
    r : int
        Extension degree, ``r >= 1``.
    modulus : sequence of int, int, or None
        Monic degree-``r`` polynomial over GF(p), either as a coefficient
        sequence (lowest degree first) or as its base-``p`` packed integer.
        Defaults to the lexicographically smallest monic irreducible.
    """

    def __init__(self, p: int, r: int, modulus: Sequence[int] | int | None = None):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
        if r < 1:
            raise DegreeMismatch(f"extension degree must be >= 1, got {r}")
        if modulus is None:
            modulus = smallest_irreducible(p, r)
        else:
            if isinstance(modulus, int):
                modulus = unpack(modulus, p)
            modulus = tuple(int(c) for c in modulus)
            if any(not 0 <= c < p for c in modulus):
                raise InvalidElement(f"modulus coefficients must lie in [0, {p})")
            modulus = tuple(_trim(list(modulus)))
            if len(modulus) - 1 != r or modulus[-1] != 1:
                raise DegreeMismatch(f"modulus must be monic of degree {r}")
            if not _is_irreducible_mod_p(modulus, p):
                raise ReducibleModulus(f"modulus {modulus} is reducible over GF({p})")

        self.p = p
        self.r = r
        self.q = p**r
        self.modulus = modulus
        self._digits = [unpack(a, p, r) for a in range(self.q)]
        self._build_tables()

    # -- construction ------------------------------------------------------

    def _slow_mul(self, a: int, b: int) -> int:
        p, r = self.p, self.r
        da, db = self._digits[a], self._digits[b]
        prod = [0] * (2 * r - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return pack(_poly_mod_p(prod, self.modulus, p), p)

    def _build_tables(self) -> None:
        q = self.q
        for cand in range(1, q):
            powers = [1]
            x = cand
            while x != 1:
                powers.append(x)
                x = self._slow_mul(x, cand)
            if len(powers) == q - 1:
                break
        self.xi = cand
        self._exp = powers
        self._log = [-1] * q
        for k, a in enumerate(powers):
            self._log[a] = k
        self._neg = [pack([(-c) % self.p for c in d], self.p) for d in self._digits]

        # numpy mirrors for vectorized kernels
        self.np_exp = np.array(powers + powers, dtype=np.int64)
        self.np_log = np.array([max(v, 0) for v in self._log], dtype=np.int64)
        self.np_neg = np.array(self._neg, dtype=np.int64)
        self._np_add = None
        if self.p != 2 and q <= _ADD_TABLE_LIMIT:
            d = np.array(self._digits, dtype=np.int64)
            w = self.p ** np.arange(self.r, dtype=np.int64)
            self._np_add = ((d[:, None, :] + d[None, :, :]) % self.p) @ w
        self._np_digits = np.array(self._digits, dtype=np.int64)
        self._np_weights = self.p ** np.arange(self.r, dtype=np.int64)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and (self.p, self.r, self.modulus) == (other.p, other.r, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.r, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.r})"

    @property
    def designator(self) -> str:
        return f"{self.p}^{self.r}"

    @property
    def modulus_encoding(self) -> int:
        return pack(self.modulus, self.p)

    @property
    def log_table(self) -> dict[int, int]:
        return {a: k for a, k in enumerate(self._log) if a}

    # -- elements ----------------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def validate(self, a) -> int:
        """Coerce an int or ``FieldElement`` of this field to its encoding."""
        if isinstance(a, FieldElement):
            if a.field != self:
                raise FieldMismatch(f"{a!r} does not belong to {self!r}")
            return a.value
        a = int(a)
        if not 0 <= a < self.q:
            raise InvalidElement(f"{a} is not an element encoding of {self!r}")
        return a

    def __call__(self, a) -> FieldElement:
        return FieldElement(self, self.validate(a))

    def coeffs(self, a: int) -> tuple[int, ...]:
        return self._digits[a]

    def encode(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.r or any(not 0 <= c < self.p for c in coeffs):
            raise InvalidElement(f"bad coefficient vector {tuple(coeffs)}")
        return pack(coeffs, self.p)

    # -- scalar arithmetic on encodings ------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.r == 1:
            return (a + b) % self.p
        return pack([(x + y) % self.p for x, y in zip(self._digits[a], self._digits[b])], self.p)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("zero has no multiplicative inverse")
        return self._exp[-self._log[a] % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroInverse("zero has no multiplicative inverse")
            return 1 if e == 0 else 0
        return self._exp[self._log[a] * e % (self.q - 1)]

    def xi_pow(self, k: int) -> int:
        """``xi**k`` for any integer ``k``."""
        return self._exp[k % (self.q - 1)]

    def discrete_log(self, a: int) -> int:
        """The unique ``0 <= k < q - 1`` with ``xi**k == a``."""
        if a == 0:
            raise ZeroArgument("discrete log of zero is undefined")
        return self._log[a]

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        return (self.q - 1) // math.gcd(self.discrete_log(a), self.q - 1)

    def sum(self, items: Iterable[int]) -> int:
        total = 0
        for x in items:
            total = self.add(total, x)
        return total

    # -- vectorized arithmetic on integer arrays ---------------------------

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self._np_add is not None:
            return self._np_add[a, b]
        s = (self._np_digits[a] + self._np_digits[b]) % self.p
        return s @ self._np_weights

    def vneg(self, a: np.ndarray) -> np.ndarray:
        return self.np_neg[a]

    def vsub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.vadd(a, self.np_neg[b])

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        out = self.np_exp[self.np_log[a] + self.np_log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    # -- automorphisms -----------------------------------------------------

    def frobenius(self, s: int = 1) -> Automorphism:
        return Automorphism(self, s)

    def automorphisms(self) -> list[Automorphism]:
        return [Automorphism(self, s) for s in range(self.r)]

    def render(self, a: int) -> str:
        """Power-of-xi rendering: ``0``, ``1``, ``xi``, ``xi^k``."""
        if a == 0:
            return "0"
        k = self._log[a]
        return "1" if k == 0 else ("xi" if k == 1 else f"xi^{k}")


class FieldElement:
    """An element bound to its field, with arithmetic operators."""

    __slots__ = ("field", "value")

    def __init__(self, field: FiniteField, value: int):
        self.field = field
        self.value = value

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine elements of {self.field!r} and {other.field!r}")
            return other.value
        return self.field.validate(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def log(self) -> int:
        return self.field.discrete_log(self.value)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def __int__(self):
        return self.value

    __index__ = __int__

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"{self.field!r}({self.value})"


class Automorphism:
    """The Frobenius power ``a -> a^(p^s)`` of a finite field.

    ``m`` is its order, ``r / gcd(r, s)`` (1 for the identity).
    """

    def __init__(self, field: FiniteField, s: int):
        if not 0 <= s < field.r:
            raise ExponentOutOfRange(f"Frobenius exponent must satisfy 0 <= s < {field.r}, got {s}")
        self.field = field
        self.s = s
        self.m = field.r // math.gcd(field.r, s) if s else 1
        # tables[i] maps a -> sigma^i(a) for 0 <= i < m
        q = field.q
        self._tables = []
        for i in range(self.m):
            e = field.p ** (s * i % field.r)
            self._tables.append([field.pow(a, e) for a in range(q)])
        self._np_tables = [np.array(t, dtype=np.int64) for t in self._tables]

    def __eq__(self, other):
        return isinstance(other, Automorphism) and (self.field, self.s) == (other.field, other.s)

    def __hash__(self):
        return hash((self.field, self.s))

    def __repr__(self):
        return f"Frobenius({self.field!r}, s={self.s})"

    @property
    def is_identity(self) -> bool:
        return self.m == 1

    def apply(self, a, times: int = 1):
        """``sigma^times(a)``; accepts an encoding or a ``FieldElement``."""
        if isinstance(a, FieldElement):
            v = self.field.validate(a)
            return FieldElement(self.field, self._tables[times % self.m][v])
        return self._tables[times % self.m][a]

    def table(self, times: int = 1) -> list[int]:
        return self._tables[times % self.m]

    def np_table(self, times: int = 1) -> np.ndarray:
        return self._np_tables[times % self.m]

    def fixed_subfield(self) -> frozenset[int]:
        t = self._tables[1 % self.m]
        return frozenset(a for a in range(self.field.q) if t[a] == a)

    def is_fixed(self, a: int) -> bool:
        return self._tables[1 % self.m][a] == a

    def bracket(self, i: int) -> int:
        return bracket(self.field.p, self.s, i)

    def bracket_mod(self, i: int, modulus: int | None = None) -> int:
        if modulus is None:
            modulus = self.field.q - 1
        return bracket_mod(self.field.p, self.s, i, modulus)

    def norm(self, i: int, alpha: int) -> int:
        """``N_i(alpha) = alpha^[i]_s`` with ``N_0 = 1`` and ``N_i(0) = 0`` for i >= 1."""
        if i == 0:
            return 1
        if alpha == 0:
            return 0
        F = self.field
        return F.pow(alpha, self.bracket_mod(i, F.q - 1))

    def norm_product(self, i: int, alpha: int) -> int:
        """``sigma^(i-1)(alpha) ... sigma(alpha) alpha`` by direct multiplication."""
        F = self.field
        out = 1
        for j in range(i):
            out = F.mul(out, self._tables[j % self.m][alpha])
        return out


def make_field(p: int, r: int, modulus: Sequence[int] | int | None = None) -> FiniteField:
    return FiniteField(p, r, modulus)


def frobenius(field: FiniteField, s: int = 1) -> Automorphism:
    return Automorphism(field, s)
