"""
Skew polynomials over GF(q) twisted by a Frobenius power: ``x a = sigma(a) x``.

Only right division is provided.  Right evaluation ``f(alpha)`` is the
remainder of ``f`` on right division by ``x - alpha`` and equals
``sum_i f_i N_i(alpha)``; both routes are available so they can be checked
against each other.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import AutomorphismMismatch, DivisionByZero
from .galois_field import Automorphism, FieldElement

# degree of the zero polynomial; compares below every int
ZERO_DEGREE = -math.inf


class SkewPolynomial:
    """Immutable element of ``F_q[x, sigma]``.

    ``coeffs[i]`` is the encoding of the coefficient of ``x^i``; trailing
    zeros are stripped so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("aut", "coeffs")

    def __init__(self, aut: Automorphism, coeffs: Iterable[int | FieldElement] = ()):
        F = aut.field
        cs = [F.validate(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.aut = aut
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, aut: Automorphism, coeffs: Sequence[int]) -> SkewPolynomial:
        # trusted constructor for internal results
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        obj = cls.__new__(cls)
        obj.aut = aut
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def zero(cls, aut):
        return cls._raw(aut, ())

    @classmethod
    def one(cls, aut):
        return cls._raw(aut, (1,))

    @classmethod
    def constant(cls, aut, c):
        return cls(aut, (c,))

    @classmethod
    def monomial(cls, aut, degree: int, coeff: int = 1):
        return cls(aut, [0] * degree + [coeff])

    @classmethod
    def x_n_minus(cls, aut: Automorphism, n: int, lam: int) -> SkewPolynomial:
        """The binomial ``x^n - lam``."""
        F = aut.field
        lam = F.validate(lam)
        cs = [0] * (n + 1)
        cs[0] = F.neg(lam)
        cs[n] = F.add(cs[n], 1)
        return cls._raw(aut, cs)

    @classmethod
    def parse(cls, aut: Automorphism, text: str) -> SkewPolynomial:
        """Comma-separated encodings, lowest degree first: ``"1,0,1"`` is ``1 + x^2``."""
        text = text.strip()
        if not text:
            return cls.zero(aut)
        return cls(aut, [int(t) for t in text.split(",")])

    # -- basic properties --------------------------------------------------

    @property
    def field(self):
        return self.aut.field

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.lead == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, length: int) -> tuple[int, ...]:
        return self.coeffs + (0,) * (length - len(self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, SkewPolynomial):
            return NotImplemented
        return self.aut == other.aut and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.aut, self.coeffs))

    def __repr__(self):
        return f"SkewPolynomial({list(self.coeffs)}, s={self.aut.s})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        F = self.field
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coef = F.render(c)
            if not mono:
                terms.append(coef)
            elif coef == "1":
                terms.append(mono)
            else:
                terms.append(f"{coef}*{mono}")
        return " + ".join(terms)

    def _check(self, other: SkewPolynomial) -> None:
        if self.aut != other.aut:
            raise AutomorphismMismatch(f"{self.aut!r} vs {other.aut!r}")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: SkewPolynomial) -> SkewPolynomial:
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a, b = self.padded(n), other.padded(n)
        return SkewPolynomial._raw(self.aut, [F.add(x, y) for x, y in zip(a, b)])

    def __neg__(self) -> SkewPolynomial:
        F = self.field
        return SkewPolynomial._raw(self.aut, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other: SkewPolynomial) -> SkewPolynomial:
        return self + (-other)

    def __mul__(self, other: SkewPolynomial) -> SkewPolynomial:
        """Skew product: the ``x^k`` coefficient is ``sum_{i+j=k} f_i sigma^i(g_j)``."""
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return SkewPolynomial.zero(self.aut)
        F, aut = self.field, self.aut
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, fi in enumerate(self.coeffs):
            if not fi:
                continue
            t = aut.table(i)
            for j, gj in enumerate(other.coeffs):
                if gj:
                    out[i + j] = F.add(out[i + j], F.mul(fi, t[gj]))
        return SkewPolynomial._raw(aut, out)

    def scale(self, c: int) -> SkewPolynomial:
        """Left multiplication by the constant ``c``."""
        F = self.field
        return SkewPolynomial._raw(self.aut, [F.mul(c, a) for a in self.coeffs])

    def monic(self) -> SkewPolynomial:
        """Left-scale by the inverse of the leading coefficient."""
        if not self.coeffs:
            raise DivisionByZero("the zero polynomial has no monic associate")
        return self.scale(self.field.inv(self.lead))

    # -- right division and evaluation -------------------------------------

    def right_divmod(self, g: SkewPolynomial) -> tuple[SkewPolynomial, SkewPolynomial]:
        """``(quo, rem)`` with ``self = quo * g + rem`` and ``deg rem < deg g``."""
        self._check(g)
        if not g.coeffs:
            raise DivisionByZero("right division by the zero polynomial")
        F, aut = self.field, self.aut
        rem = list(self.coeffs)
        dg = len(g.coeffs) - 1
        quo = [0] * max(len(rem) - dg, 0)
        gc = g.coeffs
        while len(rem) - 1 >= dg:
            e = len(rem) - 1 - dg
            t = aut.table(e)
            c = F.div(rem[-1], t[g.lead])
            quo[e] = c
            # subtract c x^e g = sum_j c sigma^e(g_j) x^(e+j)
            for j, gj in enumerate(gc):
                if gj:
                    rem[e + j] = F.sub(rem[e + j], F.mul(c, t[gj]))
            while rem and rem[-1] == 0:
                rem.pop()
        return SkewPolynomial._raw(aut, quo), SkewPolynomial._raw(aut, rem)

    def right_rem(self, g: SkewPolynomial) -> SkewPolynomial:
        return self.right_divmod(g)[1]

    def right_divides(self, f: SkewPolynomial) -> bool:
        """True iff ``self`` is a right divisor of ``f``."""
        return f.right_divmod(self)[1].is_zero()

    def right_eval(self, alpha: int) -> int:
        """``sum_i f_i N_i(alpha)``."""
        F, aut = self.field, self.aut
        total = 0
        for i, c in enumerate(self.coeffs):
            if c:
                total = F.add(total, F.mul(c, aut.norm(i, alpha)))
        return total

    def right_eval_by_division(self, alpha: int) -> int:
        """Remainder of right division by ``x - alpha``."""
        F = self.field
        linear = SkewPolynomial._raw(self.aut, (F.neg(alpha), 1))
        return self.right_divmod(linear)[1].coeff(0)

    def substitute_scale(self, alpha: int) -> SkewPolynomial:
        """``f(alpha x)``: the coefficient of ``x^j`` is multiplied by ``N_j(alpha)``."""
        F, aut = self.field, self.aut
        return SkewPolynomial._raw(
            aut, [F.mul(c, aut.norm(j, alpha)) for j, c in enumerate(self.coeffs)]
        )

    def is_central(self) -> bool:
        """Commutes with ``x`` and with the primitive element."""
        aut = self.aut
        x = SkewPolynomial._raw(aut, (0, 1))
        gen = SkewPolynomial._raw(aut, (self.field.xi,))
        return self * x == x * self and self * gen == gen * self


# functional spellings


def skew_mul(f: SkewPolynomial, g: SkewPolynomial) -> SkewPolynomial:
    return f * g


def right_divmod(f: SkewPolynomial, g: SkewPolynomial):
    return f.right_divmod(g)


def right_eval(f: SkewPolynomial, alpha: int) -> int:
    return f.right_eval(alpha)


def is_right_divisor(g: SkewPolynomial, f: SkewPolynomial) -> bool:
    return g.right_divides(f)


def substitute_scale(f: SkewPolynomial, alpha: int) -> SkewPolynomial:
    return f.substitute_scale(alpha)


def is_central(f: SkewPolynomial) -> bool:
    return f.is_central()
