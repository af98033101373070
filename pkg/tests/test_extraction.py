"""Atoms, the explicit-set oracle, the image-quotient algebra, and the
isomorphism certificate."""

from itertools import combinations

import pytest

from triposlab import fixtures
from triposlab.errors import NotUpwardClosed, SigmaTooLarge
from triposlab.extraction import (Arrow, Atom, Base, ExtractedAlgebra,
                                  atom_depth, atom_enumerate, atom_leq,
                                  check_extracted_codes, entails_b,
                                  explicit_upset_imp, extract, imp_mask,
                                  iso_check, phi0, phi0_image, rho,
                                  roundtrip_report, supersets)
from triposlab.laws import run_all
from triposlab.report import CheckBudget
from triposlab.tripos import PredCode, entails, mutually_entail

CH2 = fixtures.ch2()
CH3 = fixtures.ch3()
B4 = fixtures.b4()
BUDGET = CheckBudget(max_ctx=2, samples=0, seed=0)


def upsets_of(universe):
    """All upward-closed subsets of an enumerated atom universe."""
    n = len(universe)
    closed = []
    for mask in range(1 << n):
        members = frozenset(universe[i] for i in range(n) if (mask >> i) & 1)
        if all(b in members
               for a in members for b in universe if atom_leq(a, b)):
            closed.append(members)
    return closed


# -------------------------------------------------------------------- atoms

def test_atom_counts():
    assert len(atom_enumerate(2, 0)) == 2
    assert len(atom_enumerate(2, 1)) == 2 + 4 * 2
    # counts follow c(d+1) = c(0) + 2**sigma * c(d)
    assert len(atom_enumerate(1, 2)) == 1 + 2 * (1 + 2 * 1)
    assert len(atom_enumerate(2, 2)) == 2 + 4 * 10


def test_atom_enumeration_is_deterministic_and_bounded():
    atoms = atom_enumerate(2, 2)
    assert atoms == atom_enumerate(2, 2)
    assert atoms[:2] == [Base(0), Base(1)]
    assert all(atom_depth(a) <= 2 for a in atoms)
    assert len(set(atoms)) == len(atoms)


def test_atom_leq_examples():
    assert atom_leq(Base(0), Base(0))
    assert not atom_leq(Base(0), Base(1))
    assert atom_leq(Arrow(0b10, Base(0)), Arrow(0b11, Base(0)))
    assert not atom_leq(Arrow(0b11, Base(0)), Arrow(0b10, Base(0)))
    assert not atom_leq(Base(0), Arrow(0b01, Base(0)))


def test_atom_leq_is_a_preorder():
    atoms = atom_enumerate(2, 2)
    for a in atoms:
        assert atom_leq(a, a)
    smaller = atom_enumerate(2, 1)
    for a in smaller:
        for b in smaller:
            if not atom_leq(a, b):
                continue
            for c in smaller:
                if atom_leq(b, c):
                    assert atom_leq(a, c)


def test_phi0_examples():
    assert phi0(CH2, Base(1)) == 1
    assert phi0(CH2, Arrow(0b01, Base(1))) == 1
    assert phi0(CH2, Arrow(0b11, Arrow(0b10, Base(0)))) == 1
    assert phi0(CH2, Arrow(0b10, Base(0))) == 0


def test_phi0_not_monotone_on_images():
    a, b = Arrow(0b10, Base(0)), Arrow(0b11, Base(0))
    assert atom_leq(a, b)
    assert phi0(CH2, a) != phi0(CH2, b)


# ------------------------------------------------------------------- oracle

def test_explicit_imp_examples():
    # empty antecedent: every subset qualifies
    res = explicit_upset_imp(CH2, frozenset(), {Base(1)}, depth=1)
    assert res == frozenset(Arrow(s, Base(1)) for s in range(4))

    res = explicit_upset_imp(CH2, {Base(1)}, {Base(0)}, depth=1)
    assert res == frozenset({Arrow(0b10, Base(0)), Arrow(0b11, Base(0))})
    assert phi0_image(CH2, res) == 0b11
    assert imp_mask(CH2, 0b10, 0b01) == 0b11

    assert explicit_upset_imp(CH2, {Base(1)}, frozenset(), depth=1) == frozenset()


def test_explicit_imp_rejects_non_upsets():
    # an arrow without its supersets above it
    with pytest.raises(NotUpwardClosed):
        explicit_upset_imp(CH2, {Arrow(0b00, Base(0))}, frozenset(), depth=1)


def test_quotient_homomorphism_against_oracle():
    universe = atom_enumerate(2, 1)
    ups = upsets_of(universe)
    assert len(ups) == 144
    for a in ups:
        for b in ups:
            res = explicit_upset_imp(CH2, a, b, depth=1)
            assert phi0_image(CH2, res) == imp_mask(
                CH2, phi0_image(CH2, a), phi0_image(CH2, b))
            assert phi0_image(CH2, a | b) == \
                phi0_image(CH2, a) | phi0_image(CH2, b)


def test_explicit_imp_preserves_upward_closure():
    universe1 = atom_enumerate(2, 1)
    universe2 = atom_enumerate(2, 2)
    ups = upsets_of(universe1)
    for a in ups[:32]:
        for b in ups[:32]:
            res = explicit_upset_imp(CH2, a, b, depth=1)
            for x in res:
                for y in universe2:
                    if atom_leq(x, y):
                        assert y in res


def test_phi0_surjective_onto_subsets():
    # the image of {singleton embeddings of s} is s itself
    for mask in range(4):
        atoms = {Base(i) for i in range(2) if (mask >> i) & 1}
        assert phi0_image(CH2, atoms) == mask


# ------------------------------------------------------------------ extract

def test_extract_ch2_worked_values():
    ex = extract(CH2, law_report=run_all(CH2, BUDGET))
    assert ex.report.overall_pass
    assert ex.phi == (1, 0, 1, 0)
    assert ex.algebra.separator == frozenset({0b00, 0b10})
    F = ex.algebra.structure.imp
    assert F[0b10][0b01] == 0b11
    assert F[0b00][0b10] == 0b10
    assert ex.phi[F[0b10][0b01]] == 0


def test_extract_structure_constants():
    ex = extract(CH3, check_laws=False)
    s = ex.algebra.structure
    assert s.top == 0                   # empty subset
    assert s.bottom == (1 << 3) - 1     # full subset
    # meet is union under the reverse-inclusion order
    for a in range(8):
        for b in range(8):
            assert s.meet2[a][b] == a | b


def test_extract_imp_variance_and_distribution():
    for t in (CH2, CH3):
        ex = extract(t, check_laws=False)
        size = ex.carrier_size
        F = ex.algebra.structure.imp
        for s in range(size):
            for u in range(size):
                for s2 in range(size):
                    if s | s2 == s2:            # s subset of s2: s2 below s
                        assert F[s2][u] | F[s][u] == F[s][u]
                assert F[s][0] == 0             # top on the right gives top
        for s in range(size):
            for u1 in range(size):
                for u2 in range(size):
                    assert F[s][u1 | u2] == F[s][u1] | F[s][u2]


def test_extract_records_bypassed_certification():
    ex = extract(CH2, check_laws=False)
    assert ex.report.entry("extract.laws_certified").status == "skipped"
    ex2 = extract(CH2, law_report=run_all(CH2, BUDGET))
    assert ex2.report.entry("extract.laws_certified").status == "pass"


def test_extract_surfaces_failed_certification():
    import dataclasses
    broken = dataclasses.replace(CH2, filter=frozenset({0}))
    ex = extract(broken, budget=BUDGET)
    assert ex.report.entry("extract.laws_certified").status == "fail"


def test_extract_caps_sigma():
    from triposlab.order import chain, lattice_structure
    big = fixtures.forcing_tripos(lattice_structure(chain(5)))
    with pytest.raises(SigmaTooLarge):
        extract(big, check_laws=False)


def test_classicality_boundary():
    ex4 = extract(B4, check_laws=False)
    assert ex4.algebra.is_classical
    ex3 = extract(CH3, check_laws=False)
    assert not ex3.algebra.is_classical
    cc = ex3.algebra.combinator_values[2]
    assert ex3.phi[cc] == 1             # decodes to the middle element


# ---------------------------------------------------------------- iso check

@pytest.mark.parametrize("t", [CH2, CH3, B4])
def test_iso_check_passes(t):
    report = iso_check(t, BUDGET)
    assert report.overall_pass
    assert {e.law_id for e in report.entries} == {
        "iso.embedding", "iso.surjectivity", "iso.naturality"}


def test_iso_embedding_hand_example():
    ex = extract(CH2, check_laws=False)
    assert entails_b(CH2, ex, (0b01,), (0b10,))
    assert entails(CH2, rho(ex, (0b01,)), rho(ex, (0b10,)))
    assert not entails_b(CH2, ex, (0b10,), (0b01,))


def test_rho_after_psi_is_identity_up_to_entailment():
    for t in (CH2, CH3):
        ex = extract(t, check_laws=False)
        for k in range(3):
            from itertools import product
            for c in product(range(t.sigma_size), repeat=k):
                back = rho(ex, tuple(ex.psi(x) for x in c))
                assert mutually_entail(t, back, PredCode(c))


def test_iso_detects_broken_decoding():
    ex = extract(CH2, check_laws=False)
    tampered = ExtractedAlgebra(ex.algebra, (1, 0, 0, 0), ex.report)
    a, c = (0b10,), (0b01,)
    assert entails_b(CH2, tampered, a, c) != entails(
        CH2, rho(tampered, a), rho(tampered, c))


# ------------------------------------------------------------- code checks

@pytest.mark.parametrize("t", [CH2, CH3])
def test_check_extracted_codes_passes(t):
    report = check_extracted_codes(t)
    assert report.overall_pass
    assert [e.law_id for e in report.entries] == [
        "xcode.imp_quotient_lemma", "xcode.meet_code_is_forall",
        "xcode.forall_transfer", "xcode.imp_transfer",
        "xcode.imp_heyting_quotient"]


def test_check_extracted_codes_caps_sigma():
    with pytest.raises(SigmaTooLarge):
        check_extracted_codes(B4)


def test_technical_lemma_hand_cell():
    # (s, t) = ({1}, {0}): both sides decode to 0
    lhs = CH2.meet_code[imp_mask(CH2, 0b10, 0b01)]
    img = 1 << CH2.imp_code[CH2.meet_code[0b10]][0]
    rhs = CH2.meet_code[img]
    assert lhs == rhs == 0


def test_membership_relation_size():
    ex = extract(CH2, check_laws=False)
    size = ex.carrier_size
    pairs = sum(bin(a_set).count("1") for a_set in range(1 << size))
    assert pairs == size * (1 << size) // 2 == 32


# ---------------------------------------------------------------- roundtrip

@pytest.mark.parametrize("n", [2, 3])
def test_roundtrip_chain_algebras(n):
    report = roundtrip_report(fixtures.chain_algebra(n), BUDGET)
    assert report.overall_pass
    assert report.entry("roundtrip.reinduced_entailment").status == "pass"


def test_supersets_enumeration():
    assert sorted(supersets(0b10, 2)) == [0b10, 0b11]
    assert sorted(supersets(0b00, 2)) == [0, 1, 2, 3]
    assert list(supersets(0b11, 2)) == [0b11]
