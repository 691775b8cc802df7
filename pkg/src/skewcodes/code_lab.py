"""
Skew (sigma, lambda)-constacyclic codes as concrete linear codes.

A code of length ``n`` is generated by a monic right divisor ``g`` of
``x^n - lambda``; its generator matrix is the staircase whose row ``i`` holds
``sigma^i`` of the coefficients of ``g`` starting at column ``i``.  Codes are
compared through the reduced row echelon form of that matrix.

Everything that enumerates (codewords, divisors) runs under an explicit
budget and raises ``EnumerationBudgetExceeded`` instead of truncating.
"""

from __future__ import annotations

import math
import warnings
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterator, Sequence

import numpy as np

from . import linalg
from .errors import (
    EnumerationBudgetExceeded,
    HypothesisWarning,
    LengthMismatch,
    NotARightDivisor,
    WitnessConditionViolated,
    ZeroConstant,
    ZeroDimensional,
    ZeroGenerator,
)
from .galois_field import Automorphism, FiniteField
from .skew_polynomial import SkewPolynomial

CODEWORD_BUDGET = 2**24
DIVISOR_BUDGET = 2**20
_CHUNK = 1 << 15

Codeword = tuple[int, ...]


@dataclass(frozen=True)
class CodeContext:
    """The ambient module ``F_q[x, sigma] / <x^n - lam>``."""

    aut: Automorphism
    n: int
    lam: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"code length must be >= 1, got {self.n}")
        self.aut.field.validate(self.lam)
        if self.lam == 0:
            raise ZeroConstant("the shift constant must be nonzero")

    @property
    def field(self) -> FiniteField:
        return self.aut.field

    @cached_property
    def modulus(self) -> SkewPolynomial:
        return SkewPolynomial.x_n_minus(self.aut, self.n, self.lam)

    def lam_is_fixed(self) -> bool:
        return self.aut.is_fixed(self.lam)


@dataclass(frozen=True, eq=False)
class SkewConstacyclicCode:
    ctx: CodeContext
    g: SkewPolynomial

    @property
    def k(self) -> int:
        return self.ctx.n - int(self.g.degree)

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def field(self) -> FiniteField:
        return self.ctx.field

    @cached_property
    def rows(self) -> tuple[Codeword, ...]:
        """Generator matrix rows; empty for the zero code."""
        n, aut = self.n, self.ctx.aut
        out = []
        for i in range(self.k):
            t = aut.table(i)
            row = [0] * n
            for j, c in enumerate(self.g.coeffs):
                row[i + j] = t[c]
            out.append(tuple(row))
        return tuple(out)

    @cached_property
    def canonical_form(self) -> tuple[Codeword, ...]:
        return linalg.rref(self.field, self.rows)

    def __eq__(self, other):
        if not isinstance(other, SkewConstacyclicCode):
            return NotImplemented
        return self.ctx == other.ctx and self.canonical_form == other.canonical_form

    def __hash__(self):
        return hash((self.ctx, self.canonical_form))

    def __repr__(self):
        return f"SkewConstacyclicCode(n={self.n}, k={self.k}, lam={self.ctx.lam}, g={list(self.g.coeffs)})"

    def __contains__(self, v) -> bool:
        return len(v) == self.n and linalg.in_span(self.field, self.canonical_form, v)


def make_code(ctx: CodeContext, g: SkewPolynomial) -> SkewConstacyclicCode:
    """The code generated by ``g`` after monic normalization."""
    if g.is_zero():
        raise ZeroGenerator("the zero polynomial generates no code")
    g = g.monic()
    if g.degree > ctx.n or not g.right_divides(ctx.modulus):
        raise NotARightDivisor(f"{g} does not right-divide x^{ctx.n} - {ctx.lam}")
    return SkewConstacyclicCode(ctx, g)


def generator_matrix(code: SkewConstacyclicCode) -> list[list[int]]:
    if code.k == 0:
        raise ZeroDimensional("the zero code has no generator matrix")
    return [list(r) for r in code.rows]


# -- shifts ------------------------------------------------------------------

def _check_length(ctx: CodeContext, v: Sequence[int]) -> None:
    if len(v) != ctx.n:
        raise LengthMismatch(f"expected a vector of length {ctx.n}, got {len(v)}")


def skew_shift(ctx: CodeContext, v: Sequence[int]) -> Codeword:
    """``(lam sigma(v_{n-1}), sigma(v_0), ..., sigma(v_{n-2}))``."""
    _check_length(ctx, v)
    t = ctx.aut.table(1)
    return (ctx.field.mul(ctx.lam, t[v[-1]]),) + tuple(t[a] for a in v[:-1])


def classical_shift(ctx: CodeContext, v: Sequence[int], times: int = 1) -> Codeword:
    """``(lam v_{n-1}, v_0, ..., v_{n-2})`` applied ``times`` times."""
    _check_length(ctx, v)
    out = tuple(v)
    for _ in range(times):
        out = (ctx.field.mul(ctx.lam, out[-1]),) + out[:-1]
    return out


def is_closed_under(
    code: SkewConstacyclicCode,
    op: Callable[[Sequence[int]], Codeword],
    exhaustive: bool = False,
    budget: int = CODEWORD_BUDGET,
) -> bool:
    """Whether ``op`` maps the code into itself.

    ``op`` must be additive and semilinear (``op(a u) = tau(a) op(u)`` for a
    field automorphism ``tau``), which every shift here is; then checking the
    generator rows suffices.  ``exhaustive=True`` checks every codeword
    instead.
    """
    F = code.field
    if not exhaustive:
        return all(linalg.in_span(F, code.canonical_form, op(r)) for r in code.rows)
    words = set(enumerate_codewords(code, budget))
    return all(op(w) in words for w in words)


def _warn_outside(msg: str) -> None:
    warnings.warn(msg, HypothesisWarning, stacklevel=3)


def verify_reduction_to_constacyclic(code: SkewConstacyclicCode) -> bool:
    """Closure under the classical lambda-shift.

    Guaranteed when ``gcd(m, n) == 1`` and lambda is fixed by sigma; outside
    those hypotheses the raw verdict is still returned, with a
    ``HypothesisWarning``.
    """
    ctx = code.ctx
    if math.gcd(ctx.aut.m, ctx.n) != 1 or not ctx.lam_is_fixed():
        _warn_outside("gcd(m, n) != 1 or lambda not fixed by sigma")
    return is_closed_under(code, lambda v: classical_shift(ctx, v))


def quasi_twisted_index(ctx: CodeContext) -> int:
    return math.gcd(ctx.aut.m, ctx.n)


def verify_quasi_twisted(code: SkewConstacyclicCode) -> bool:
    """Closure under the ``gcd(m, n)``-fold classical lambda-shift."""
    ctx = code.ctx
    if not ctx.lam_is_fixed():
        _warn_outside("lambda not fixed by sigma")
    d = quasi_twisted_index(ctx)
    return is_closed_under(code, lambda v: classical_shift(ctx, v, d))


# -- codeword enumeration ----------------------------------------------------

def _base_q_digits(idx: np.ndarray, q: int, k: int) -> np.ndarray:
    # column 0 is the most significant digit, so idx order is lexicographic
    powers = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % q


def codeword_chunks(code: SkewConstacyclicCode, budget: int = CODEWORD_BUDGET) -> Iterator[np.ndarray]:
    """All codewords as ``(m, n)`` integer arrays, ``q^k`` rows in total."""
    F, k, n = code.field, code.k, code.n
    total = F.q**k
    if total > budget:
        raise EnumerationBudgetExceeded(f"{F.q}^{k} codewords exceed the budget {budget}")
    if k == 0:
        yield np.zeros((1, n), dtype=np.int64)
        return
    G = np.array(code.rows, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        coeffs = _base_q_digits(idx, F.q, k)
        words = np.zeros((len(idx), n), dtype=np.int64)
        for i in range(k):
            words = F.vadd(words, F.vmul(coeffs[:, i : i + 1], G[i][None, :]))
        yield words


def enumerate_codewords(code: SkewConstacyclicCode, budget: int = CODEWORD_BUDGET) -> Iterator[Codeword]:
    for chunk in codeword_chunks(code, budget):
        for w in chunk.tolist():
            yield tuple(w)


def weight_distribution(code: SkewConstacyclicCode, budget: int = CODEWORD_BUDGET) -> list[int]:
    counts = np.zeros(code.n + 1, dtype=np.int64)
    for chunk in codeword_chunks(code, budget):
        counts += np.bincount((chunk != 0).sum(axis=1), minlength=code.n + 1)
    return counts.tolist()


def min_distance(code: SkewConstacyclicCode, budget: int = CODEWORD_BUDGET) -> int:
    if code.k == 0:
        raise ZeroDimensional("the zero code has no minimum distance")
    dist = weight_distribution(code, budget)
    return next(w for w in range(1, code.n + 1) if dist[w])


# -- the substitution isometry -----------------------------------------------

def scale_codeword(aut: Automorphism, v: Sequence[int], alpha: int) -> Codeword:
    """Coordinate-wise ``c_j -> N_j(alpha) c_j``."""
    F = aut.field
    return tuple(F.mul(aut.norm(j, alpha), c) for j, c in enumerate(v))


def apply_isometry(code: SkewConstacyclicCode, lam: int, alpha: int) -> SkewConstacyclicCode:
    """Image of a ``mu``-code under ``f(x) -> f(alpha x)`` in the ``lam`` module.

    Requires ``lam * N_n(alpha) == mu`` where ``mu`` is the source constant.
    """
    src = code.ctx
    F, aut = src.field, src.aut
    if alpha == 0 or F.mul(lam, aut.norm(src.n, alpha)) != src.lam:
        raise WitnessConditionViolated(
            f"lam * N_{src.n}(alpha) != mu for lam={lam}, alpha={alpha}, mu={src.lam}"
        )
    target = CodeContext(aut, src.n, lam)
    return make_code(target, code.g.substitute_scale(alpha))


# -- divisor and code enumeration --------------------------------------------

def _divisor_candidates(ctx: CodeContext, k: int, budget: int) -> list[tuple[int, ...]]:
    """Low coefficients of monic degree-``k`` right divisors of ``x^n - lam``.

    Vectorized over all ``q^k`` candidates ``g``: iterate
    ``R_{j+1} = x R_j mod g`` from ``R_k = x^k - g`` up to ``R_n`` and keep
    the candidates whose ``R_n`` equals the constant ``lam``.
    """
    F, aut, n = ctx.field, ctx.aut, ctx.n
    total = F.q**k
    if total > budget:
        raise EnumerationBudgetExceeded(f"{F.q}^{k} candidate divisors exceed the budget {budget}")
    sig = aut.np_table(1)
    target = np.zeros(k, dtype=np.int64)
    target[0] = ctx.lam
    hits = []
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        G = _base_q_digits(idx, F.q, k)
        R = F.vneg(G)
        for _ in range(n - k):
            top = sig[R[:, -1]]
            shifted = np.zeros_like(R)
            shifted[:, 1:] = sig[R[:, :-1]]
            R = F.vsub(shifted, F.vmul(top[:, None], G))
        mask = np.all(R == target[None, :], axis=1)
        hits.extend(tuple(row) for row in G[mask].tolist())
    return hits


def enumerate_right_divisors(
    ctx: CodeContext, degree: int | None = None, budget: int = DIVISOR_BUDGET
) -> list[SkewPolynomial]:
    """Monic right divisors of ``x^n - lam``, by degree then coefficients."""
    n, aut = ctx.n, ctx.aut
    degrees = range(n + 1) if degree is None else [degree]
    out = []
    for k in degrees:
        if not 0 <= k <= n:
            raise ValueError(f"divisor degree must lie in [0, {n}]")
        if k == 0:
            out.append(SkewPolynomial.one(aut))
        elif k == n:
            out.append(ctx.modulus)
        else:
            for low in _divisor_candidates(ctx, k, budget):
                g = SkewPolynomial._raw(aut, low + (1,))
                if not g.right_divides(ctx.modulus):
                    raise AssertionError(f"vectorized divisor scan disagrees on {g!r}")
                out.append(g)
    return out


def enumerate_codes(ctx: CodeContext, budget: int = DIVISOR_BUDGET) -> list[SkewConstacyclicCode]:
    return [SkewConstacyclicCode(ctx, g) for g in enumerate_right_divisors(ctx, budget=budget)]


def dimension_counts(codes: Sequence[SkewConstacyclicCode]) -> dict[int, int]:
    return dict(sorted(Counter(c.k for c in codes).items()))


def describe(code: SkewConstacyclicCode, budget: int = CODEWORD_BUDGET) -> dict:
    """JSON-ready descriptor of a code."""
    ctx = code.ctx
    dist = weight_distribution(code, budget)
    d_min = next((w for w in range(1, code.n + 1) if dist[w]), None)
    return {
        "field": ctx.field.designator,
        "s": ctx.aut.s,
        "n": ctx.n,
        "lambda": ctx.lam,
        "g": list(code.g.coeffs),
        "k": code.k,
        "d_min": d_min,
        "weight_distribution": dist,
    }
