"""Coded presentations: entailment, quotients, substitution, quantification,
recoding. The forcing fixtures have an independent entailment oracle: the
pointwise order of the underlying lattice."""

import dataclasses
from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triposlab import fixtures
from triposlab.errors import CodeOpMismatch, CtxMismatch, NotPreorder, NotSurjective
from triposlab.order import FinMap, chain, diamond, lattice_structure
from triposlab.tripos import (CodedTripos, PredCode, entails, enumerate_codes,
                              exists_along, forall_along, mutually_entail, px,
                              recode, subst)

CH2 = fixtures.ch2()
CH3 = fixtures.ch3()
B4 = fixtures.b4()

FORCING = [(CH2, lattice_structure(chain(2))),
           (CH3, lattice_structure(chain(3))),
           (B4, lattice_structure(diamond()))]


def pointwise_leq(h, s, u):
    """Entailment oracle for forcing presentations."""
    return all(h.poset.rel[a][b] for a, b in zip(s, u))


def test_ch2_fixture_is_bit_exact():
    assert CH2.sigma_size == 2
    assert CH2.imp_code == ((1, 1), (0, 1))
    assert CH2.and_code == ((0, 0), (0, 1))
    assert CH2.or_code == ((0, 1), (1, 1))
    assert (CH2.top_code, CH2.bot_code) == (1, 0)
    assert CH2.meet_code == (1, 0, 1, 0)
    assert CH2.join_code == (0, 0, 1, 1)
    assert CH2.filter == frozenset({1})


def test_entails_ch2_examples():
    assert entails(CH2, PredCode((0, 1)), PredCode((1, 1)))
    assert not entails(CH2, PredCode((1, 0)), PredCode((0, 0)))
    assert entails(CH2, PredCode(()), PredCode(()))


def test_entails_empty_context_needs_empty_meet_in_filter():
    broken = dataclasses.replace(CH2, meet_code=(0, 0, 1, 0))
    assert not entails(broken, PredCode(()), PredCode(()))


def test_entails_rejects_context_mismatch():
    with pytest.raises(CtxMismatch):
        entails(CH2, PredCode((0,)), PredCode((0, 1)))


@pytest.mark.parametrize("t,h", FORCING)
def test_entails_matches_pointwise_order(t, h):
    for k in range(3):
        for s in enumerate_codes(t, k):
            for u in enumerate_codes(t, k):
                assert entails(t, PredCode(s), PredCode(u)) == \
                    pointwise_leq(h, s, u)


def test_entails_depends_only_on_implication_image():
    for t in (CH2, CH3, B4):
        for s in enumerate_codes(t, 2):
            for u in enumerate_codes(t, 2):
                base = entails(t, PredCode(s), PredCode(u))
                for perm in permutations(range(2)):
                    ps = tuple(s[i] for i in perm)
                    pu = tuple(u[i] for i in perm)
                    assert entails(t, PredCode(ps), PredCode(pu)) == base
                dup_s = PredCode(s + (s[0],))
                dup_u = PredCode(u + (u[0],))
                assert entails(t, dup_s, dup_u) == base


# ----------------------------------------------------------------------- px

def test_px_ch2_ctx1_is_two_chain():
    r = px(CH2, 1)
    assert r.algebra.size == 2
    assert r.algebra.poset.rel == chain(2).rel
    assert r.class_of(PredCode((0,))) == r.algebra.bot
    assert r.class_of(PredCode((1,))) == r.algebra.top


def test_px_ch2_ctx0_is_trivial():
    r = px(CH2, 0)
    assert r.algebra.size == 1
    assert r.algebra.top == r.algebra.bot


def test_px_broken_filter_not_preorder():
    broken = dataclasses.replace(CH2, filter=frozenset({0}))
    with pytest.raises(NotPreorder):
        px(broken, 1)


def test_px_representatives_and_classify_agree():
    for t in (CH2, CH3, B4):
        for k in range(3):
            r = px(t, k)
            for c, rep in enumerate(r.representatives):
                assert r.class_of(rep) == c
            for s in enumerate_codes(t, k):
                for u in enumerate_codes(t, k):
                    same = r.classify[s] == r.classify[u]
                    assert same == mutually_entail(t, PredCode(s), PredCode(u))


def test_px_quotient_is_underlying_lattice():
    for t, h in FORCING:
        r = px(t, 1)
        assert r.algebra.size == h.size


def test_px_detects_code_op_mismatch():
    # swap the or-code rows so the code no longer tracks the quotient join
    broken = dataclasses.replace(CH2, or_code=((1, 0), (0, 1)))
    with pytest.raises(CodeOpMismatch):
        px(broken, 1)


# --------------------------------------------------------------------- subst

def test_subst_examples():
    assert subst(FinMap.identity(2), PredCode((0, 1))).codes == (0, 1)
    assert subst(FinMap((0, 0), 1), PredCode((1,))).codes == (1, 1)
    assert subst(FinMap((1,), 2), PredCode((0, 1))).codes == (1,)
    with pytest.raises(CtxMismatch):
        subst(FinMap((0,), 1), PredCode((0, 1)))


@given(st.data())
@settings(max_examples=200)
def test_subst_functorial(data):
    n = data.draw(st.integers(1, 4))
    kx = data.draw(st.integers(0, 3))
    ky = data.draw(st.integers(0, 3))
    kz = data.draw(st.integers(0, 3))
    if ky == 0 and kx > 0:
        ky = kx
    if kz == 0 and ky > 0:
        kz = ky
    f = FinMap(tuple(data.draw(st.integers(0, ky - 1)) for _ in range(kx)), ky)
    g = FinMap(tuple(data.draw(st.integers(0, kz - 1)) for _ in range(ky)), kz)
    tau = PredCode(tuple(data.draw(st.integers(0, n - 1)) for _ in range(kz)))
    assert subst(g.compose(f), tau) == subst(f, subst(g, tau))


def test_pointwise_connectives_commute_with_subst():
    t = B4
    for f in (FinMap((0, 0), 1), FinMap((1, 0), 2), FinMap.identity(2)):
        for s in enumerate_codes(t, f.cod_size):
            for u in enumerate_codes(t, f.cod_size):
                for table in (t.and_code, t.or_code, t.imp_code):
                    applied = PredCode(tuple(table[a][b] for a, b in zip(s, u)))
                    lhs = subst(f, applied)
                    rhs = PredCode(tuple(
                        table[a][b] for a, b in
                        zip(subst(f, PredCode(s)).codes,
                            subst(f, PredCode(u)).codes)))
                    assert lhs == rhs


# ----------------------------------------------------------------- quantify

def test_exists_forall_ch2_examples():
    const = FinMap((0, 0), 1)
    assert exists_along(CH2, const, PredCode((0, 1))).codes == (1,)
    assert forall_along(CH2, const, PredCode((0, 1))).codes == (0,)
    ident = FinMap.identity(2)
    assert exists_along(CH2, ident, PredCode((0, 1))).codes == (0, 1)
    assert forall_along(CH2, ident, PredCode((0, 1))).codes == (0, 1)
    empty_to_point = FinMap((), 1)
    assert exists_along(CH2, empty_to_point, PredCode(())).codes == (0,)
    assert forall_along(CH2, empty_to_point, PredCode(())).codes == (1,)


@pytest.mark.parametrize("t,h", FORCING)
def test_quantifiers_match_fiber_bounds(t, h):
    for kx in range(3):
        for ky in range(3):
            for table in product(range(ky), repeat=kx):
                f = FinMap(table, ky)
                for s in enumerate_codes(t, kx):
                    ex = exists_along(t, f, PredCode(s))
                    fa = forall_along(t, f, PredCode(s))
                    for y in range(ky):
                        fiber = [s[x] for x in range(kx) if table[x] == y]
                        join = h.bot
                        meet = h.top
                        for v in fiber:
                            join = h.join[join][v]
                            meet = h.meet[meet][v]
                        assert ex.codes[y] == join
                        assert fa.codes[y] == meet


# -------------------------------------------------------------------- recode

def test_recode_identity():
    t2 = recode(CH2, FinMap.identity(2))
    assert t2 == CH2


def test_recode_duplicated_code():
    h = FinMap((0, 1, 1), 2)
    t2 = recode(CH2, h)
    assert t2.sigma_size == 3
    assert t2.filter == frozenset({1, 2})
    t2.validate()
    for k in range(3):
        for s in product(range(3), repeat=k):
            for u in product(range(3), repeat=k):
                assert entails(t2, PredCode(s), PredCode(u)) == entails(
                    CH2, PredCode(tuple(h(x) for x in s)),
                    PredCode(tuple(h(x) for x in u)))


def test_recode_requires_surjection():
    with pytest.raises(NotSurjective):
        recode(CH2, FinMap((0,), 2))
