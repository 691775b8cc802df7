import itertools
import math

import pytest

from oracles import naive_norm
from skewcodes import equivalence as eq
from skewcodes.errors import ZeroConstant
from skewcodes.galois_field import make_field

F4, F8, F9, F16 = (make_field(2, 2), make_field(2, 3), make_field(3, 2), make_field(2, 4))
XI = 2  # primitive element of GF(4) and GF(8) here


def ctx_of(F, s, n):
    return eq.make_context(F.frobenius(s), n)


def configs(qmax=16, nmax=10, with_identity=True):
    for p, r in [(2, 2), (2, 3), (3, 2), (2, 4), (5, 1), (3, 1)]:
        if p**r > qmax:
            continue
        F = make_field(p, r)
        for s in range(0 if with_identity else 1, r):
            for n in range(1, nmax + 1):
                yield ctx_of(F, s, n)


# -- contexts ----------------------------------------------------------------

def test_context_examples():
    assert ctx_of(F4, 1, 2).class_count == 3
    assert ctx_of(F8, 1, 3).class_count == 7
    ctx = ctx_of(F9, 1, 2)
    assert ctx.class_count == 4
    # oracle: index of the norm image in F_9^*
    image = {naive_norm(F9, ctx.aut, 2, a) for a in F9.nonzero()}
    assert (F9.q - 1) // len(image) == 4


@pytest.mark.parametrize("ctx", list(configs()), ids=lambda c: f"{c.field!r}-s{c.s}-n{c.n}")
def test_context_invariants(ctx):
    q = ctx.field.q
    assert ctx.d * ctx.class_count == q - 1
    assert ctx.class_count == eq.class_count_exact(ctx.aut, ctx.n)
    assert len(eq.norm_image(ctx)) * ctx.class_count == q - 1
    assert eq.norm_image(ctx) == ctx.norm_subgroup


# -- membership --------------------------------------------------------------

def test_are_equivalent_examples():
    for ctx in configs(nmax=4):
        for a in ctx.field.nonzero():
            assert eq.are_equivalent(ctx, a, a)
    for n in (1, 3, 5, 7):
        ctx = ctx_of(F4, 1, n)
        assert all(eq.are_equivalent(ctx, a, b) for a in F4.nonzero() for b in F4.nonzero())
    ctx = ctx_of(F4, 1, 2)
    assert not eq.are_equivalent(ctx, 1, XI)
    assert eq.witnesses_by_search(ctx, 1, XI) == []


@pytest.mark.parametrize("ctx", list(configs()), ids=lambda c: f"{c.field!r}-s{c.s}-n{c.n}")
def test_all_criteria_agree(ctx):
    F = ctx.field
    for lam, mu in itertools.product(F.nonzero(), F.nonzero()):
        votes = eq.criterion_votes(ctx, lam, mu)
        assert len(set(votes)) == 1, votes


def test_zero_constants_rejected():
    ctx = ctx_of(F4, 1, 2)
    with pytest.raises(ZeroConstant):
        eq.are_equivalent(ctx, 0, 1)
    with pytest.raises(ZeroConstant):
        eq.find_witness(ctx, 1, 0)
    with pytest.raises(ZeroConstant):
        eq.classify(ctx, 0)
    with pytest.raises(ZeroConstant):
        eq.scalar_equivalent_to_cyclic(ctx, 0)


def test_witness_examples():
    ctx = ctx_of(F4, 1, 3)
    assert eq.find_witness(ctx, 1, 1) == 1
    assert eq.find_witness(ctx, 1, XI) == XI
    assert eq.witnesses_by_search(ctx, 1, XI) == [XI]
    assert eq.find_witness(ctx_of(F4, 1, 2), 1, XI) is None


@pytest.mark.parametrize("ctx", list(configs()), ids=lambda c: f"{c.field!r}-s{c.s}-n{c.n}")
def test_witness_is_smallest_solution(ctx):
    F = ctx.field
    for lam, mu in itertools.product(F.nonzero(), F.nonzero()):
        found = eq.find_witness(ctx, lam, mu)
        search = eq.witnesses_by_search(ctx, lam, mu)
        assert found == (min(search) if search else None)
        if found is not None:
            assert F.mul(lam, ctx.aut.norm(ctx.n, found)) == mu


def test_report():
    ctx = ctx_of(F4, 1, 2)
    rep = eq.report(ctx, 1, 1)
    assert rep.equivalent and rep.witness == 1 and rep.criterion_votes == (True,) * 5
    rep = eq.report(ctx, 1, XI)
    assert not rep.equivalent and rep.witness is None
    assert rep.as_dict() == {"lambda": 1, "mu": XI, "equivalent": False, "witness": None}


@pytest.mark.parametrize("ctx", list(configs(nmax=10)), ids=lambda c: f"{c.field!r}-s{c.s}-n{c.n}")
def test_relation_axioms_with_explicit_witnesses(ctx):
    F, aut, n = ctx.field, ctx.aut, ctx.n
    nz = list(F.nonzero())
    for lam, mu in itertools.product(nz, nz):
        for a in eq.witnesses_by_search(ctx, lam, mu):
            # symmetry through alpha^-1
            assert F.mul(mu, aut.norm(n, F.inv(a))) == lam
            for nu in nz:
                for b in eq.witnesses_by_search(ctx, mu, nu)[:1]:
                    # transitivity through alpha * beta
                    assert F.mul(lam, aut.norm(n, F.mul(a, b))) == nu


# -- classes -----------------------------------------------------------------

def test_representative_examples():
    assert eq.class_representatives(ctx_of(F4, 1, 3)) == [1]
    assert eq.class_representatives(ctx_of(F4, 1, 2)) == [1, XI, F4.mul(XI, XI)]
    assert sorted(eq.class_representatives(ctx_of(F8, 1, 3))) == list(F8.nonzero())


@pytest.mark.parametrize("ctx", list(configs()), ids=lambda c: f"{c.field!r}-s{c.s}-n{c.n}")
def test_partition(ctx):
    reps = eq.class_representatives(ctx)
    for a, b in itertools.combinations(reps, 2):
        assert not eq.are_equivalent(ctx, a, b)
    for lam in ctx.field.nonzero():
        hits = [j for j, r in enumerate(reps) if eq.are_equivalent(ctx, r, lam)]
        assert hits == [eq.classify(ctx, lam)]
    parts = eq.classes(ctx)
    assert sorted(a for part in parts for a in part) == list(ctx.field.nonzero())


def test_classify_examples():
    assert eq.classify(ctx_of(F4, 1, 2), 1) == 0
    assert eq.classify(ctx_of(F4, 1, 2), 3) == 2
    ctx = ctx_of(F8, 1, 2)
    assert all(eq.classify(ctx, a) == 0 for a in F8.nonzero())


def test_single_class_means_everything_is_cyclic():
    for ctx in configs():
        if ctx.class_count == 1:
            assert all(eq.classify(ctx, a) == 0 for a in ctx.field.nonzero())
            assert all(eq.scalar_equivalent_to_cyclic(ctx, a) for a in ctx.field.nonzero())


def test_binary_class_count_examples():
    assert all(eq.binary_class_count(n, 2) == 1 for n in (1, 3, 5, 9))
    assert eq.binary_class_count(6, 3) == 7
    assert eq.binary_class_count(6, 4) == 3 == math.gcd(2**6 - 1, 2**4 - 1)


def test_binary_class_count_identity():
    for r in range(1, 9):
        F = make_field(2, r)
        aut = F.frobenius(1 if r > 1 else 0)
        for n in range(1, 25):
            expected = math.gcd(2**n - 1, 2**r - 1)
            assert eq.binary_class_count(n, r) == expected
            assert eq.make_context(aut, n).class_count == expected


def test_scalar_equivalent_to_cyclic_examples():
    assert eq.scalar_equivalent_to_cyclic(ctx_of(F4, 1, 2), 1)
    assert not eq.scalar_equivalent_to_cyclic(ctx_of(F4, 1, 2), XI)
    ctx = ctx_of(F9, 1, 2)
    lam = F9.xi_pow(2)
    assert ctx.d == 2
    assert F9.pow(lam, 2) == F9.neg(1)
    # brute force: no alpha has N_2(alpha) = xi^2 / 1
    assert eq.witnesses_by_search(ctx, lam, 1) == []
    assert not eq.scalar_equivalent_to_cyclic(ctx, lam)


def test_scalar_cyclic_agrees_with_equivalence_to_one():
    for ctx in configs():
        for lam in ctx.field.nonzero():
            assert eq.scalar_equivalent_to_cyclic(ctx, lam) == eq.are_equivalent(ctx, lam, 1)


# -- sweeps ------------------------------------------------------------------

def test_sweep_examples():
    counts = [c for _, c in eq.sweep_class_counts(F8.frobenius(2), 12)]
    assert counts == [1, 1, 7] * 4
    assert [c for _, c in eq.sweep_class_counts(F4.frobenius(1), 6)] == [1, 3] * 3
    # [n]_1 over GF(9) is 1, 4, 13, 40; gcd with 8 gives 1, 4, 1, 8
    expected = [math.gcd((3**n - 1) // 2, 8) for n in range(1, 5)]
    assert expected == [1, 4, 1, 8]
    assert [c for _, c in eq.sweep_class_counts(F9.frobenius(1), 4)] == expected


@pytest.mark.parametrize("F", [F4, F8, F9, F16, make_field(5, 2), make_field(7, 1)], ids=repr)
def test_sweep_matches_context(F):
    for aut in F.automorphisms():
        swept = dict(eq.sweep_class_counts(aut, 200))
        assert swept == {n: eq.make_context(aut, n).class_count for n in range(1, 201)}
        tail = dict(eq.sweep_class_counts(aut, 260, n_min=190))
        assert all(tail[n] == eq.class_count_exact(aut, n) for n in tail)
