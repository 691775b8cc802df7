"""
The (n, sigma)-equivalence relation on the nonzero elements of GF(q).

``lam ~ mu`` iff ``lam * N_n(alpha) == mu`` for some nonzero ``alpha``.  The
classes are the cosets of the subgroup generated by ``xi^[n]_s``, so there
are ``gcd([n]_s, q - 1)`` of them, each represented here by the least power
of ``xi`` it contains.

Membership is decided four independent ways (brute-force witness, discrete
log against ``N_n(xi)``, explicit subgroup generation, and the order test
``(lam^-1 mu)^d == 1``) and a fifth vote checks that the substitution map
``f(x) -> f(alpha x)`` carries ``x^n - mu`` onto a unit multiple of
``x^n - lam``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterator

from .errors import ZeroConstant
from .galois_field import Automorphism, FiniteField
from .skew_polynomial import SkewPolynomial


@dataclass(frozen=True)
class EquivalenceContext:
    aut: Automorphism
    n: int
    class_count: int
    d: int

    @property
    def field(self) -> FiniteField:
        return self.aut.field

    @property
    def s(self) -> int:
        return self.aut.s

    @cached_property
    def bracket_mod(self) -> int:
        """``[n]_s mod (q - 1)``."""
        return self.aut.bracket_mod(self.n)

    @cached_property
    def norm_subgroup(self) -> frozenset[int]:
        """``<xi^[n]_s>``, generated by repeated multiplication."""
        F = self.field
        gen = F.pow(F.xi, self.bracket_mod)
        out = {1}
        x = gen
        while x != 1:
            out.add(x)
            x = F.mul(x, gen)
        return frozenset(out)

    def _nonzero(self, *values: int) -> None:
        for v in values:
            if v == 0:
                raise ZeroConstant("constants must be nonzero")


@dataclass(frozen=True)
class EquivalenceReport:
    lam: int
    mu: int
    equivalent: bool
    witness: int | None
    # outcomes of: brute-force witness, <N_n(xi)> membership, <xi^[n]_s>
    # membership, order test, substitution-map check
    criterion_votes: tuple[bool, bool, bool, bool, bool] = dc_field(default=())

    def as_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "mu": self.mu,
            "equivalent": self.equivalent,
            "witness": self.witness,
        }


def make_context(aut: Automorphism, n: int) -> EquivalenceContext:
    if n < 1:
        raise ValueError(f"code length must be >= 1, got {n}")
    order = aut.field.q - 1
    count = math.gcd(aut.bracket_mod(n, order), order)
    return EquivalenceContext(aut=aut, n=n, class_count=count, d=order // count)


def class_count_exact(aut: Automorphism, n: int) -> int:
    """``gcd([n]_s, q - 1)`` through the full-size integer bracket."""
    return math.gcd(aut.bracket(n), aut.field.q - 1)


def norm_image(ctx: EquivalenceContext) -> frozenset[int]:
    """``{N_n(alpha) : alpha != 0}`` by evaluating the product form."""
    aut = ctx.aut
    return frozenset(aut.norm_product(ctx.n, a) for a in ctx.field.nonzero())


# -- the membership criteria -------------------------------------------------

def _ratio(ctx, lam, mu) -> int:
    ctx._nonzero(lam, mu)
    F = ctx.field
    return F.mul(F.inv(lam), mu)


def witnesses_by_search(ctx: EquivalenceContext, lam: int, mu: int) -> list[int]:
    """Every ``alpha`` with ``lam N_n(alpha) == mu``, found by exhaustion."""
    ctx._nonzero(lam, mu)
    F, aut = ctx.field, ctx.aut
    return [a for a in F.nonzero() if F.mul(lam, aut.norm_product(ctx.n, a)) == mu]


def criterion_search(ctx, lam, mu) -> bool:
    return bool(witnesses_by_search(ctx, lam, mu))


def criterion_norm_log(ctx, lam, mu) -> bool:
    """``lam^-1 mu`` in ``<N_n(xi)>`` via discrete logs."""
    F = ctx.field
    ratio = _ratio(ctx, lam, mu)
    gen_log = F.discrete_log(ctx.aut.norm_product(ctx.n, F.xi))
    return F.discrete_log(ratio) % math.gcd(gen_log, F.q - 1) == 0


def criterion_subgroup(ctx, lam, mu) -> bool:
    """``lam^-1 mu`` in the explicitly generated ``<xi^[n]_s>``."""
    return _ratio(ctx, lam, mu) in ctx.norm_subgroup


def criterion_order(ctx, lam, mu) -> bool:
    """``(lam^-1 mu)^d == 1``."""
    return ctx.field.pow(_ratio(ctx, lam, mu), ctx.d) == 1


def criterion_substitution(ctx, lam, mu) -> bool:
    """Some ``alpha`` sends ``x^n - mu`` to ``N_n(alpha) (x^n - lam)`` under
    ``f(x) -> f(alpha x)`` while scaling every coordinate ``x^j, j < n`` by a
    nonzero factor (so Hamming weight is kept)."""
    ctx._nonzero(lam, mu)
    aut, n = ctx.aut, ctx.n
    src = SkewPolynomial.x_n_minus(aut, n, mu)
    dst = SkewPolynomial.x_n_minus(aut, n, lam)
    for a in ctx.field.nonzero():
        if src.substitute_scale(a) == dst.scale(aut.norm(n, a)):
            if all(aut.norm(j, a) for j in range(n)):
                return True
    return False


def criterion_votes(ctx, lam, mu) -> tuple[bool, bool, bool, bool, bool]:
    return (
        criterion_search(ctx, lam, mu),
        criterion_substitution(ctx, lam, mu),
        criterion_norm_log(ctx, lam, mu),
        criterion_subgroup(ctx, lam, mu),
        criterion_order(ctx, lam, mu),
    )


def are_equivalent(ctx: EquivalenceContext, lam: int, mu: int) -> bool:
    return criterion_order(ctx, lam, mu)


def find_witness(ctx: EquivalenceContext, lam: int, mu: int) -> int | None:
    """Smallest-encoding ``alpha`` with ``lam N_n(alpha) == mu``, or None.

    Solves ``[n]_s * i == log(lam^-1 mu)  (mod q - 1)`` for the exponent
    ``i`` of ``alpha = xi^i``.
    """
    F = ctx.field
    order = F.q - 1
    target = F.discrete_log(_ratio(ctx, lam, mu))
    b = ctx.bracket_mod
    g = math.gcd(b, order)
    if target % g:
        return None
    step = order // g
    # b/g is invertible modulo step
    i0 = (target // g) * pow(b // g, -1, step) % step if step > 1 else 0
    return min(F.xi_pow(i0 + t * step) for t in range(g))


def report(ctx: EquivalenceContext, lam: int, mu: int) -> EquivalenceReport:
    votes = criterion_votes(ctx, lam, mu)
    if len(set(votes)) != 1:
        raise AssertionError(f"criteria disagree for ({lam}, {mu}): {votes}")
    return EquivalenceReport(lam, mu, votes[0], find_witness(ctx, lam, mu), votes)


# -- classes -----------------------------------------------------------------

def class_representatives(ctx: EquivalenceContext) -> list[int]:
    F = ctx.field
    return [F.xi_pow(j) for j in range(ctx.class_count)]


def classify(ctx: EquivalenceContext, lam: int) -> int:
    """Index ``j`` of the representative ``xi^j`` equivalent to ``lam``."""
    ctx._nonzero(lam)
    F = ctx.field
    j = F.discrete_log(lam) % ctx.class_count
    if not are_equivalent(ctx, F.xi_pow(j), lam):
        raise AssertionError(f"classification of {lam} failed verification")
    return j


def classes(ctx: EquivalenceContext) -> list[list[int]]:
    """The partition of the nonzero elements, one list per representative."""
    out = [[] for _ in range(ctx.class_count)]
    for a in ctx.field.nonzero():
        out[classify(ctx, a)].append(a)
    return out


def scalar_equivalent_to_cyclic(ctx: EquivalenceContext, lam: int) -> bool:
    """``lam^d == 1``: skew lam-constacyclic codes are equivalent to skew cyclic ones."""
    ctx._nonzero(lam)
    return ctx.field.pow(lam, ctx.d) == 1


def binary_class_count(n: int, r: int) -> int:
    """Class count over GF(2^r) for the Frobenius ``a -> a^2``: ``2^gcd(n, r) - 1``."""
    return 2 ** math.gcd(n, r) - 1


def sweep_class_counts(aut: Automorphism, n_max: int, n_min: int = 1) -> Iterator[tuple[int, int]]:
    """Yield ``(n, class_count)`` for ``n_min <= n <= n_max``.

    ``[n]_s mod (q - 1)`` is advanced incrementally, so each step costs O(1).
    """
    F = aut.field
    order = F.q - 1
    P = pow(F.p, aut.s, order) if order > 1 else 0
    b = aut.bracket_mod(n_min - 1, order) if n_min > 1 else 0
    for n in range(n_min, n_max + 1):
        b = (n % order) if aut.s == 0 else (b * P + 1) % order
        yield n, math.gcd(b, order)
