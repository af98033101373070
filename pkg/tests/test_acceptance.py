"""Acceptance criteria, one test per criterion, each printing a pass line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion
summary; every check is exhaustive at its stated scale and every tolerance
is exact.
"""

import dataclasses
import time

import pytest

from triposlab import fixtures
from triposlab.extraction import (atom_enumerate, check_extracted_codes,
                                  explicit_upset_imp, extract, imp_mask,
                                  iso_check, phi0_image, roundtrip_report)
from triposlab.implicative import validate_separator, validate_structure
from triposlab.laws import replay_witness, run_all
from triposlab.report import CheckBudget
from triposlab.tripos import entails

BUDGET = CheckBudget(max_ctx=2, samples=0, seed=0)

CH2 = fixtures.ch2()
CH3 = fixtures.ch3()
B4 = fixtures.b4()
NAMED = [("ch2", CH2), ("ch3", CH3), ("b4", B4)]

_LAW_REPORTS = {name: run_all(t, BUDGET) for name, t in NAMED}


def _report(criterion, detail, elapsed, bound):
    print(f"criterion {criterion}: PASS ({detail}; {elapsed:.2f}s < {bound}s)")


def test_criterion_1_law_certification():
    worst = 0.0
    for name, t in NAMED:
        start = time.perf_counter()
        report = run_all(t, BUDGET)
        elapsed = time.perf_counter() - start
        worst = max(worst, elapsed)
        assert report.overall_pass, f"{name}: {report.failures()}"
        for entry in report.entries:
            assert entry.coverage.kind == "exhaustive"
        assert {"beck_chevalley.exists", "beck_chevalley.forall"} <= {
            e.law_id for e in report.entries}
        assert elapsed < 10.0
    _report(1, "run_all exhaustive on ch2/ch3/b4 at max_ctx=2", worst, 10)


def test_criterion_2_extraction_validity():
    worst = 0.0
    for name, t in NAMED:
        start = time.perf_counter()
        ex = extract(t, law_report=_LAW_REPORTS[name])
        structure = validate_structure(ex.algebra.structure)
        separator = validate_separator(ex.algebra)
        elapsed = time.perf_counter() - start
        worst = max(worst, elapsed)
        assert ex.report.overall_pass
        assert structure.overall_pass, f"{name}: {structure.failures()}"
        assert separator.overall_pass, f"{name}: {separator.failures()}"
        assert structure.entry("structure.meet_distribution").status == "pass"
        assert elapsed < 5.0
    _report(2, "extract + structure/separator validation on all fixtures",
            worst, 5)


def test_criterion_3_isomorphism_certificate():
    worst = 0.0
    for name, t in NAMED:
        start = time.perf_counter()
        report = iso_check(t, BUDGET)
        elapsed = time.perf_counter() - start
        worst = max(worst, elapsed)
        assert report.overall_pass, f"{name}: {report.failures()}"
        for law in ("iso.embedding", "iso.surjectivity", "iso.naturality"):
            entry = report.entry(law)
            assert entry.status == "pass"
            assert entry.coverage.kind == "exhaustive"
        assert elapsed < 10.0
    pairs = (1 << CH3.sigma_size) ** 2 * (1 << CH3.sigma_size) ** 2
    assert pairs == 4096
    _report(3, "embedding/surjectivity/naturality, 4096 ch3 pairs at ctx 2",
            worst, 10)


def test_criterion_4_code_transfer_identities():
    worst = 0.0
    for name, t in (("ch2", CH2), ("ch3", CH3)):
        start = time.perf_counter()
        report = check_extracted_codes(t)
        elapsed = time.perf_counter() - start
        worst = max(worst, elapsed)
        assert report.overall_pass, f"{name}: {report.failures()}"
        for law in ("xcode.imp_quotient_lemma", "xcode.meet_code_is_forall",
                    "xcode.forall_transfer", "xcode.imp_transfer",
                    "xcode.imp_heyting_quotient"):
            assert report.entry(law).status == "pass"
        assert elapsed < 10.0
    _report(4, "technical lemma, membership-relation forall, imp transfer",
            worst, 10)


def test_criterion_5_classicality_boundary():
    start = time.perf_counter()
    ex_b4 = extract(B4, law_report=_LAW_REPORTS["b4"])
    ex_ch3 = extract(CH3, law_report=_LAW_REPORTS["ch3"])
    assert ex_b4.algebra.is_classical
    assert not ex_ch3.algebra.is_classical
    cc = ex_ch3.algebra.combinator_values[2]
    assert ex_ch3.phi[cc] == 1          # the middle element of the 3-chain
    sep = validate_separator(ex_ch3.algebra)
    witness = sep.entry("separator.classicality").witness
    assert witness == {"classical": False, "cc": cc}
    elapsed = time.perf_counter() - start
    _report(5, "b4 classical, ch3 not, cc decodes to the middle element",
            elapsed, 30)


def test_criterion_6_oracle_equivalence():
    start = time.perf_counter()
    universe = atom_enumerate(2, 1)
    n = len(universe)
    upsets = []
    for mask in range(1 << n):
        members = frozenset(universe[i] for i in range(n) if (mask >> i) & 1)
        if all(b in members for a in members for b in universe
               if __import__("triposlab.extraction",
                             fromlist=["atom_leq"]).atom_leq(a, b)):
            upsets.append(members)
    checked = 0
    for a in upsets:
        fa = phi0_image(CH2, a)
        for b in upsets:
            res = explicit_upset_imp(CH2, a, b, depth=2)
            assert phi0_image(CH2, res) == imp_mask(CH2, fa,
                                                    phi0_image(CH2, b))
            checked += 1
    elapsed = time.perf_counter() - start
    assert checked == len(upsets) ** 2 == 144 * 144
    assert elapsed < 30.0
    _report(6, f"{checked} upset pairs vs the explicit-atom oracle",
            elapsed, 30)


def test_criterion_7_roundtrip():
    start = time.perf_counter()
    for n in (2, 3):
        report = roundtrip_report(fixtures.chain_algebra(n), BUDGET)
        assert report.overall_pass, f"chain{n}: {report.failures()}"
        assert report.entry("roundtrip.reinduced_entailment").status == "pass"
        assert report.entry("iso.embedding").status == "pass"
    elapsed = time.perf_counter() - start
    _report(7, "2-chain and 3-chain algebras round-trip at ctx <= 2",
            elapsed, 30)


def _witness_ctx_sizes(witness):
    sizes = []
    if not isinstance(witness, dict):
        return sizes
    for key in ("sigma", "tau", "rho", "sigma2", "a", "c"):
        if isinstance(witness.get(key), list):
            sizes.append(len(witness[key]))
    for key in ("f", "g", "g1", "g2"):
        sub = witness.get(key)
        if isinstance(sub, dict):
            sizes.extend((sub["dom"], sub["cod"]))
    if "ctx" in witness:
        sizes.append(witness["ctx"])
    return sizes


def test_criterion_8_negative_detection():
    start = time.perf_counter()
    mutations = [
        ("filter={0}", dataclasses.replace(CH2, filter=frozenset({0}))),
        ("join[0b11]=0", dataclasses.replace(
            CH2, join_code=CH2.join_code[:3] + (0,))),
        ("meet[empty]=0", dataclasses.replace(
            CH2, meet_code=(0,) + CH2.meet_code[1:])),
    ]
    for name, broken in mutations:
        report = run_all(broken, BUDGET)
        assert not report.overall_pass, name
        failures = report.failures()
        assert failures, name
        for entry in failures:
            assert entry.law_id
            assert replay_witness(broken, entry), (name, entry.law_id)
            assert all(s <= 2 for s in _witness_ctx_sizes(entry.witness))
    elapsed = time.perf_counter() - start
    _report(8, "three documented mutations fail with replayable witnesses",
            elapsed, 30)
