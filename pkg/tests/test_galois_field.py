import itertools
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import NaiveField, naive_norm, naive_sigma
from skewcodes.errors import (
    DegreeMismatch,
    ExponentOutOfRange,
    FieldMismatch,
    InvalidElement,
    NonPrimeCharacteristic,
    ReducibleModulus,
    ZeroArgument,
    ZeroInverse,
)
from skewcodes.galois_field import (
    bracket,
    bracket_mod,
    frobenius,
    make_field,
    parse_designator,
    smallest_irreducible,
)

SMALL = [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3)]


def fields(limit=16):
    return [make_field(p, r) for p, r in SMALL if p**r <= limit]


# -- construction ------------------------------------------------------------

def test_prime_field_of_two_elements():
    F = make_field(2, 1)
    assert F.q == 2
    assert F.xi == 1
    assert F.mul(1, 1) == 1 and F.add(1, 1) == 0


def test_gf4_from_packed_modulus():
    F = make_field(2, 2, 7)
    assert F.modulus == (1, 1, 1)
    assert F.xi == 2
    # oracle: t, t^2, t^3 by direct reduction modulo t^2 + t + 1
    naive = NaiveField(2, 2, (1, 1, 1))
    assert [naive.pow(2, k) for k in (1, 2, 3)] == [2, 3, 1]


def test_reducible_modulus_rejected():
    with pytest.raises(ReducibleModulus):
        make_field(2, 2, [1, 0, 1])
    with pytest.raises(ReducibleModulus):
        make_field(2, 2, 5)


def test_construction_errors():
    with pytest.raises(NonPrimeCharacteristic):
        make_field(4, 1)
    with pytest.raises(DegreeMismatch):
        make_field(2, 2, [1, 1])
    with pytest.raises(DegreeMismatch):
        make_field(2, 0)
    with pytest.raises(DegreeMismatch):
        make_field(3, 2, [1, 0, 2])  # not monic


def test_default_modulus_is_lexicographically_smallest_irreducible():
    assert smallest_irreducible(2, 2) == (1, 1, 1)
    assert smallest_irreducible(2, 3) == (1, 0, 1, 1)
    assert smallest_irreducible(3, 2) == (1, 0, 1)
    for p, r in [(2, 3), (2, 4), (3, 2), (5, 2)]:
        chosen = make_field(p, r).modulus
        naive_irreducible = []
        for low in itertools.product(range(p), repeat=r):
            poly = tuple(low) + (1,)
            # irreducible iff the quotient ring has no zero divisors
            N = NaiveField(p, r, poly)
            if all(N.mul(a, b) for a in range(1, p**r) for b in range(1, p**r)):
                naive_irreducible.append(poly)
        assert chosen == min(naive_irreducible)


@pytest.mark.parametrize("F", fields(27), ids=repr)
def test_xi_is_smallest_primitive_element(F):
    naive = NaiveField(F.p, F.r, F.modulus)
    orders = {a: naive.order(a) for a in F.nonzero()}
    assert orders[F.xi] == F.q - 1
    assert F.xi == min(a for a, o in orders.items() if o == F.q - 1)
    assert sorted(F.log_table.values()) == list(range(F.q - 1))


@pytest.mark.parametrize("F", fields(27), ids=repr)
def test_table_arithmetic_matches_polynomial_arithmetic(F):
    naive = NaiveField(F.p, F.r, F.modulus)
    for a in F.elements():
        for b in F.elements():
            assert F.mul(a, b) == naive.mul(a, b)
            assert F.add(a, b) == naive.add(a, b)
        assert F.add(a, F.neg(a)) == 0


def test_gf4_examples():
    F = make_field(2, 2)
    assert F.mul(2, 2) == 3
    assert F.inv(2) == 3
    for a in F.elements():
        assert F.add(a, 0) == a


def test_inverse_and_pow():
    F = make_field(3, 2)
    for a in F.nonzero():
        assert F.mul(a, F.inv(a)) == 1
        assert F.pow(a, F.q - 1) == 1
        assert F.pow(a, -1) == F.inv(a)
        assert F.pow(a, -3) == F.inv(F.pow(a, 3))
    assert F.pow(0, 0) == 1 and F.pow(0, 5) == 0
    with pytest.raises(ZeroInverse):
        F.inv(0)
    with pytest.raises(ZeroInverse):
        F.pow(0, -1)


@pytest.mark.parametrize("p,r", [(2, 3), (3, 2), (5, 2), (3, 3)])
def test_vectorized_ops_match_scalar(p, r):
    F = make_field(p, r)
    a, b = np.meshgrid(np.arange(F.q), np.arange(F.q))
    mul = F.vmul(a, b)
    add = F.vadd(a, b)
    sub = F.vsub(a, b)
    for x, y in zip(a.ravel(), b.ravel()):
        assert mul[y, x] == F.mul(int(x), int(y))
        assert add[y, x] == F.add(int(x), int(y))
        assert sub[y, x] == F.sub(int(x), int(y))


def test_field_element_wrapper():
    F = make_field(2, 2)
    xi = F(2)
    assert xi * xi == 3
    assert (xi * xi * xi) == 1
    assert xi / xi == 1
    assert xi**-1 == 3
    assert (xi + 1).coeffs == (1, 1)
    assert xi.log() == 1
    with pytest.raises(FieldMismatch):
        xi + make_field(2, 3)(2)
    with pytest.raises(InvalidElement):
        F(4)


def test_parse_designator():
    assert parse_designator("2^3") == (2, 3)
    assert parse_designator("7") == (7, 1)
    with pytest.raises(ValueError):
        parse_designator("two")


# -- automorphisms -----------------------------------------------------------

def test_frobenius_orders():
    assert make_field(2, 2).frobenius(1).m == 2
    assert make_field(2, 3).frobenius(2).m == 3
    assert make_field(2, 4).frobenius(2).m == 2
    for F in fields():
        assert frobenius(F, 0).m == 1
    with pytest.raises(ExponentOutOfRange):
        make_field(2, 2).frobenius(2)
    with pytest.raises(ExponentOutOfRange):
        make_field(2, 2).frobenius(-1)


def test_apply_examples():
    F = make_field(2, 2)
    theta = F.frobenius(1)
    assert theta.apply(2) == 3
    assert theta.apply(0) == 0 and theta.apply(1) == 1
    assert theta.apply(F(2)) == F(3)
    with pytest.raises(FieldMismatch):
        theta.apply(make_field(2, 3)(2))
    F8 = make_field(2, 3)
    t8 = F8.frobenius(1)
    for a in F8.elements():
        assert t8.apply(t8.apply(t8.apply(a))) == a


@pytest.mark.parametrize("F", fields(27), ids=repr)
def test_order_is_exact_and_matches_naive_powering(F):
    for aut in F.automorphisms():
        for a in F.elements():
            assert aut.apply(a) == naive_sigma(F, aut, a)
            assert aut.apply(a, aut.m) == a
        for k in range(1, aut.m):
            assert any(aut.apply(a, k) != a for a in F.elements())
        # prime field fixed
        assert all(aut.apply(c) == c for c in range(F.p))


def test_fixed_subfield_examples():
    F4 = make_field(2, 2)
    assert F4.frobenius(1).fixed_subfield() == {0, 1}
    assert F4.frobenius(0).fixed_subfield() == set(F4.elements())
    F16 = make_field(2, 4)
    fixed = F16.frobenius(2).fixed_subfield()
    assert fixed == {a for a in F16.elements() if F16.pow(a, 4) == a}
    assert len(fixed) == 4


@pytest.mark.parametrize("F", fields(27), ids=repr)
def test_fixed_subfield_size(F):
    for aut in F.automorphisms():
        assert len(aut.fixed_subfield()) == F.p ** math.gcd(F.r, aut.s)


# -- brackets and norms ------------------------------------------------------

def test_bracket_examples():
    for p in (2, 3, 5):
        for s in (0, 1, 2, 3):
            assert bracket(p, s, 1) == 1
            assert bracket(p, s, 0) == 0
    for n in range(1, 20):
        assert bracket(2, 1, n) == 2**n - 1
    assert bracket(2, 2, 3) == 21
    assert bracket(3, 0, 7) == 7


@given(
    p=st.sampled_from([2, 3, 5, 7]),
    s=st.integers(0, 4),
    i=st.integers(0, 400),
    m=st.integers(1, 10_000),
)
def test_bracket_mod_agrees_with_big_integer(p, s, i, m):
    assert bracket_mod(p, s, i, m) == bracket(p, s, i) % m


def test_norm_examples():
    F = make_field(2, 2)
    theta = F.frobenius(1)
    for a in F.elements():
        assert theta.norm(0, a) == 1
        assert theta.norm(1, a) == a
    assert theta.norm(2, 2) == 1
    assert theta.norm_product(2, 2) == 1
    assert theta.norm(3, 0) == 0


@pytest.mark.parametrize("F", fields(16), ids=repr)
def test_norm_closed_form_matches_product_form(F):
    for aut in F.automorphisms():
        for a in F.nonzero():
            for i in range(1, 13):
                closed = aut.norm(i, a)
                assert closed == aut.norm_product(i, a)
                assert closed == naive_norm(F, aut, i, a)
                assert closed == F.pow(a, aut.bracket(i))


@pytest.mark.parametrize("F", fields(16), ids=repr)
def test_norm_cocycle_and_multiplicativity(F):
    for aut in F.automorphisms():
        for a in F.nonzero():
            for i in range(13):
                for j in range(13 - i):
                    lhs = aut.norm_product(i + j, a)
                    rhs = F.mul(aut.norm_product(i, a), aut.apply(aut.norm_product(j, a), i))
                    assert lhs == rhs
        for n in range(9):
            for a in F.nonzero():
                for b in F.nonzero():
                    assert aut.norm(n, F.mul(a, b)) == F.mul(aut.norm(n, a), aut.norm(n, b))


def test_discrete_log_examples():
    F = make_field(2, 2)
    assert F.discrete_log(1) == 0
    assert F.discrete_log(2) == 1
    assert F.discrete_log(3) == 2
    with pytest.raises(ZeroArgument):
        F.discrete_log(0)


@pytest.mark.parametrize("F", fields(27), ids=repr)
def test_discrete_log_inverts_powers(F):
    for k in range(F.q - 1):
        assert F.discrete_log(F.pow(F.xi, k)) == k
