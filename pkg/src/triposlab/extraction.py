"""Extraction of an implicative algebra from a tripos presentation, with the
isomorphism certificate.

Atoms are finite arrow-lists of proposition subsets terminated by a single
proposition; upward-closed atom sets form an implicative structure whose
implication sends (a, b) to all arrows from supersets of a's decoded image
into b. That structure is infinite even over a finite proposition set, so
the working representation quotients by the element-wise decoding: a set of
atoms is carried by its image, a subset of the proposition set. The quotient
is sound because implication and unions of atom sets act through images
alone; `explicit_upset_imp` materializes atom sets inside a depth-bounded
universe and serves as the brute-force oracle for that claim.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from itertools import product

from . import _kernel
from .errors import CodeOpMismatch, NotALattice, NotHeyting, NotPreorder, \
    NotUpwardClosed, SigmaTooLarge
from .implicative import ImpAlgebra, ImpStructure, induced_tripos, \
    validate_separator, validate_structure
from .laws import run_all
from .order import FinMap
from .report import CheckBudget, LawEntry, LawReport, run_check
from .tripos import CodedTripos, PredCode, entails, enumerate_codes, \
    forall_along, mutually_entail, px, subst

# Carrier is 2**sigma subsets and validation sweeps all 2**carrier subsets.
EXTRACT_SIGMA_CAP = 4
XCODE_SIGMA_CAP = 3


@dataclass(frozen=True)
class Base:
    code: int


@dataclass(frozen=True)
class Arrow:
    args: int          # subset bitmask over the proposition set
    body: "Atom"


Atom = Base | Arrow


def atom_depth(a: Atom) -> int:
    d = 0
    while isinstance(a, Arrow):
        d += 1
        a = a.body
    return d


def atom_enumerate(sigma_size: int, depth: int) -> list[Atom]:
    """All atoms of depth <= depth: bases first, then arrows ordered by
    subset bitmask and then by body position."""
    bases: list[Atom] = [Base(x) for x in range(sigma_size)]
    atoms = list(bases)
    for _ in range(depth):
        atoms = bases + [Arrow(s, b)
                         for s in range(1 << sigma_size) for b in atoms]
    return atoms


def atom_leq(a: Atom, b: Atom) -> bool:
    while True:
        if isinstance(a, Base) or isinstance(b, Base):
            return a == b
        if a.args & ~b.args:
            return False
        a, b = a.body, b.body


def phi0(t: CodedTripos, a: Atom) -> int:
    """Decode an atom to a proposition: arrows decode through the meet of the
    argument subset implying the decoded body."""
    stack = []
    while isinstance(a, Arrow):
        stack.append(a.args)
        a = a.body
    code = a.code
    for args in reversed(stack):
        code = t.imp_code[t.meet_code[args]][code]
    return code


def phi0_image(t: CodedTripos, atoms) -> int:
    m = 0
    for a in atoms:
        m |= 1 << phi0(t, a)
    return m


def supersets(mask: int, n: int):
    """All supersets of mask within n bits."""
    free = ((1 << n) - 1) & ~mask
    sub = free
    while True:
        yield mask | sub
        if sub == 0:
            return
        sub = (sub - 1) & free


def imp_mask(t: CodedTripos, s: int, u: int) -> int:
    """Image-level implication: all decoded arrows from supersets of s into
    the propositions of u."""
    out = 0
    for sup in supersets(s, t.sigma_size):
        head = t.meet_code[sup]
        rest = u
        while rest:
            low = rest & -rest
            rest ^= low
            out |= 1 << t.imp_code[head][low.bit_length() - 1]
    return out


def _check_upward_closed(name, atoms, universe):
    aset = frozenset(atoms)
    uset = set(universe)
    for a in aset:
        if a not in uset:
            raise NotUpwardClosed((name, "outside universe", a))
    for a in aset:
        for b in universe:
            if atom_leq(a, b) and b not in aset:
                raise NotUpwardClosed((a, b))
    return aset


def explicit_upset_imp(t: CodedTripos, a, b, depth: int = 2) -> frozenset:
    """Atom-level implication of two upward-closed atom sets, materialized:
    every arrow from a superset of a's decoded image into a member of b.
    Serves as the oracle for the image-quotient implication."""
    universe = atom_enumerate(t.sigma_size, depth)
    aset = _check_upward_closed("lhs", a, universe)
    bset = _check_upward_closed("rhs", b, universe)
    sa = phi0_image(t, aset)
    return frozenset(Arrow(s, beta)
                     for s in supersets(sa, t.sigma_size) for beta in bset)


@dataclass(frozen=True)
class ExtractedAlgebra:
    """Implicative algebra carried by subsets of the proposition set, with
    the decoding table and the validation report of its construction."""

    algebra: ImpAlgebra
    phi: tuple[int, ...]      # decode: carrier subset-mask -> proposition
    report: LawReport

    @property
    def carrier_size(self) -> int:
        return self.algebra.structure.size

    def psi(self, code: int) -> int:
        """Embed a proposition as the singleton carrier element."""
        return 1 << code


def extract(t: CodedTripos, budget: CheckBudget | None = None,
            law_report: LawReport | None = None,
            check_laws: bool = True) -> ExtractedAlgebra:
    """Build the extracted algebra: carrier all proposition subsets ordered
    by reverse inclusion (meet = union), implication by `imp_mask`, separator
    the subsets whose meet code is in the filter.

    The construction is only meaningful for presentations passing the law
    suite; unless a passing report is supplied (or checking is explicitly
    bypassed, which is recorded), the default-budget suite runs first.
    Structure and separator validation always run and their entries are part
    of the result's report."""
    t.validate()
    n = t.sigma_size
    if n > EXTRACT_SIGMA_CAP:
        raise SigmaTooLarge(f"extraction needs sigma_size <= {EXTRACT_SIGMA_CAP}")
    if law_report is not None:
        cert = LawEntry("extract.laws_certified",
                        "pass" if law_report.overall_pass else "fail",
                        None if law_report.overall_pass else
                        {"failing": [e.law_id for e in law_report.failures()]})
    elif check_laws:
        rep = run_all(t, budget or CheckBudget())
        cert = LawEntry("extract.laws_certified",
                        "pass" if rep.overall_pass else "fail",
                        None if rep.overall_pass else
                        {"failing": [e.law_id for e in rep.failures()]})
    else:
        cert = LawEntry("extract.laws_certified", "skipped",
                        {"reason": "law certification bypassed by caller"})
    size = 1 << n
    rel = tuple(tuple((a | b) == a for b in range(size)) for a in range(size))
    imp = tuple(tuple(imp_mask(t, s, u) for u in range(size))
                for s in range(size))
    structure = ImpStructure(rel, imp)
    separator = frozenset(s for s in range(size) if t.meet_code[s] in t.filter)
    algebra = ImpAlgebra(structure, separator)
    report = (LawReport((cert,)) + validate_structure(structure)
              + validate_separator(algebra))
    return ExtractedAlgebra(algebra, tuple(t.meet_code), report)


def _b_kernel_tables(t: CodedTripos, ex: ExtractedAlgebra):
    size = ex.carrier_size
    ftab = array("i", (v for row in ex.algebra.structure.imp for v in row))
    return size, ftab, array("i", t.meet_code), t.filter_mask


def entails_b(t: CodedTripos, ex: ExtractedAlgebra, a, c) -> bool:
    """Entailment between carrier-valued codes: the union of the pointwise
    implications must decode into the filter."""
    size, ftab, meet, filt = _b_kernel_tables(t, ex)
    return _kernel.entails_masks(size, ftab, meet, filt,
                                 array("i", a), array("i", c))


def rho(ex: ExtractedAlgebra, a) -> PredCode:
    """Decode a carrier-valued code pointwise into a proposition code."""
    return PredCode(tuple(ex.phi[x] for x in a))


def iso_check(t: CodedTripos, budget: CheckBudget = CheckBudget()) -> LawReport:
    """Certificate that the extracted algebra presents the same tripos:
    decoding embeds carrier-valued entailment into code entailment, is
    surjective up to mutual entailment via the singleton embedding, and is
    natural in the context."""
    ex = extract(t, check_laws=False)
    size, ftab, meet, filt = _b_kernel_tables(t, ex)
    n, imp_flat = t._kt[0], t._kt[1]

    def find_embedding():
        for k in range(budget.max_ctx + 1):
            bcodes = list(product(range(size), repeat=k))
            nb = len(bcodes)
            flat_b = array("i", (x for bc in bcodes for x in bc))
            mat_b = _kernel.entail_matrix_masks(size, ftab, meet, filt,
                                                flat_b, nb, k)
            flat_r = array("i", (ex.phi[x] for bc in bcodes for x in bc))
            mat_r = _kernel.entail_matrix(n, imp_flat, meet, filt,
                                          flat_r, nb, k)
            if mat_b != mat_r:
                idx = next(i for i in range(nb * nb) if mat_b[i] != mat_r[i])
                i, j = divmod(idx, nb)
                return {"ctx": k, "a": list(bcodes[i]), "c": list(bcodes[j]),
                        "carrier_side": bool(mat_b[idx]),
                        "code_side": bool(mat_r[idx])}
        return None

    def sample_embedding(rng):
        k = budget.max_ctx + 1
        a = tuple(rng.randrange(size) for _ in range(k))
        c = tuple(rng.randrange(size) for _ in range(k))
        lhs = entails_b(t, ex, a, c)
        rhs = entails(t, rho(ex, a), rho(ex, c))
        if lhs != rhs:
            return {"ctx": k, "a": list(a), "c": list(c),
                    "carrier_side": lhs, "code_side": rhs}
        return None

    def find_surjectivity():
        for k in range(budget.max_ctx + 1):
            for c in enumerate_codes(t, k):
                sigma = PredCode(c)
                back = rho(ex, tuple(ex.psi(x) for x in c))
                if not mutually_entail(t, back, sigma):
                    return {"ctx": k, "sigma": list(c)}
        return None

    def sample_surjectivity(rng):
        k = budget.max_ctx + 1
        c = tuple(rng.randrange(n) for _ in range(k))
        back = rho(ex, tuple(ex.psi(x) for x in c))
        if not mutually_entail(t, back, PredCode(c)):
            return {"ctx": k, "sigma": list(c)}
        return None

    def find_naturality():
        for kx in range(budget.max_ctx + 1):
            for ky in range(budget.max_ctx + 1):
                for table in product(range(ky), repeat=kx):
                    f = FinMap(table, ky)
                    for a in product(range(size), repeat=ky):
                        composed = rho(ex, tuple(a[f(x)] for x in range(kx)))
                        if composed != subst(f, rho(ex, a)):
                            return {"f": {"dom": kx, "cod": ky,
                                          "table": list(table)},
                                    "a": list(a)}
        return None

    return LawReport((
        run_check("iso.embedding", budget, find_embedding, sample_embedding),
        run_check("iso.surjectivity", budget, find_surjectivity,
                  sample_surjectivity),
        run_check("iso.naturality", budget, find_naturality),
    ))


def _union_vector(size: int) -> list[int]:
    # members of a carrier subset are themselves masks; fold their union
    un = [0] * (1 << size)
    for mask in range(1, 1 << size):
        low = mask & -mask
        un[mask] = un[mask & (mask - 1)] | (low.bit_length() - 1)
    return un


def check_extracted_codes(t: CodedTripos) -> LawReport:
    """Code-transfer identities of the extracted algebra: the image-quotient
    implication agrees with the superset-free form, the carrier meet is a
    universal-quantification code over the membership relation, meets and
    implication transfer along maps, and the implication code descends to
    Heyting implication in the induced presentation's quotients."""
    n = t.sigma_size
    if n > XCODE_SIGMA_CAP:
        raise SigmaTooLarge(
            f"extracted-code checks need sigma_size <= {XCODE_SIGMA_CAP}")
    ex = extract(t, check_laws=False)
    size = ex.carrier_size
    imp_b = ex.algebra.structure.imp
    entries = []

    lhs, rhs = [], []
    for s in range(size):
        head = t.meet_code[s]
        for u in range(size):
            lhs.append(t.meet_code[imp_mask(t, s, u)])
            img = 0
            rest = u
            while rest:
                low = rest & -rest
                rest ^= low
                img |= 1 << t.imp_code[head][low.bit_length() - 1]
            rhs.append(t.meet_code[img])
    lhs_code, rhs_code = PredCode(tuple(lhs)), PredCode(tuple(rhs))
    if mutually_entail(t, lhs_code, rhs_code):
        entries.append(LawEntry("xcode.imp_quotient_lemma", "pass"))
    else:
        idx = next((i for i, (x, y) in enumerate(zip(lhs, rhs)) if x != y), None)
        entries.append(LawEntry("xcode.imp_quotient_lemma", "fail",
                                {"position": idx,
                                 "forward": entails(t, lhs_code, rhs_code),
                                 "backward": entails(t, rhs_code, lhs_code)}))

    # membership relation of the carrier, with its two projections
    un = _union_vector(size)
    pairs = [(a, big) for big in range(1 << size) for a in range(size)
             if (big >> a) & 1]
    e2 = FinMap(tuple(big for _, big in pairs), 1 << size)
    member_code = PredCode(tuple(ex.phi[a] for a, _ in pairs))
    meet_of = PredCode(tuple(ex.phi[un[big]] for big in range(1 << size)))
    quantified = forall_along(t, e2, member_code)
    if mutually_entail(t, meet_of, quantified):
        entries.append(LawEntry("xcode.meet_code_is_forall", "pass"))
    else:
        entries.append(LawEntry("xcode.meet_code_is_forall", "fail",
                                {"pairs": len(pairs),
                                 "forward": entails(t, meet_of, quantified),
                                 "backward": entails(t, quantified, meet_of)}))

    forall_witness = None
    for kx in range(3):
        for ky in range(3):
            for table in product(range(ky), repeat=kx):
                f = FinMap(table, ky)
                for a in product(range(size), repeat=kx):
                    fibers = [0] * ky
                    for x, v in enumerate(a):
                        fibers[f(x)] |= v
                    lhs_c = PredCode(tuple(ex.phi[m] for m in fibers))
                    rhs_c = forall_along(t, f, rho(ex, a))
                    if not mutually_entail(t, lhs_c, rhs_c):
                        forall_witness = {"f": {"dom": kx, "cod": ky,
                                                "table": list(table)},
                                          "a": list(a)}
                        break
                if forall_witness:
                    break
            if forall_witness:
                break
        if forall_witness:
            break
    entries.append(LawEntry("xcode.forall_transfer",
                            "fail" if forall_witness else "pass",
                            forall_witness))

    imp_witness = None
    for k in range(3):
        for a in product(range(size), repeat=k):
            for c in product(range(size), repeat=k):
                lhs_c = PredCode(tuple(ex.phi[imp_b[x][y]]
                                       for x, y in zip(a, c)))
                rhs_c = PredCode(tuple(t.imp_code[ex.phi[x]][ex.phi[y]]
                                       for x, y in zip(a, c)))
                if not mutually_entail(t, lhs_c, rhs_c):
                    imp_witness = {"ctx": k, "a": list(a), "c": list(c)}
                    break
            if imp_witness:
                break
        if imp_witness:
            break
    entries.append(LawEntry("xcode.imp_transfer",
                            "fail" if imp_witness else "pass", imp_witness))

    t2 = induced_tripos(ex.algebra)
    quotient_witness = None
    for k in range(3):
        try:
            px(t2, k)
        except (NotPreorder, NotALattice, NotHeyting, CodeOpMismatch) as e:
            quotient_witness = {"ctx": k, "error": type(e).__name__}
            break
    entries.append(LawEntry("xcode.imp_heyting_quotient",
                            "fail" if quotient_witness else "pass",
                            quotient_witness))
    return LawReport(tuple(entries))


def roundtrip_report(algebra: ImpAlgebra, budget: CheckBudget = CheckBudget()
                     ) -> LawReport:
    """Induce a presentation from the algebra, extract an algebra back, and
    certify that the re-induced presentation is the one the certificate
    embeds: extraction validity, the isomorphism laws, and literal agreement
    of the two entailment relations."""
    t1 = induced_tripos(algebra)
    laws_rep = run_all(t1, budget)
    ex = extract(t1, law_report=laws_rep)
    report = LawReport((
        LawEntry("roundtrip.induced_laws",
                 "pass" if laws_rep.overall_pass else "fail",
                 None if laws_rep.overall_pass else
                 {"failing": [e.law_id for e in laws_rep.failures()]}),
    ))
    report = report + ex.report + iso_check(t1, budget)

    t2 = induced_tripos(ex.algebra)
    size, ftab, meet, filt = _b_kernel_tables(t1, ex)
    n2, imp2, meet2, filt2 = t2._kt
    witness = None
    for k in range(budget.max_ctx + 1):
        codes = enumerate_codes(t2, k)
        flat = array("i", (x for bc in codes for x in bc))
        mat_t2 = _kernel.entail_matrix(n2, imp2, meet2, filt2,
                                       flat, len(codes), k)
        mat_b = _kernel.entail_matrix_masks(size, ftab, meet, filt,
                                            flat, len(codes), k)
        if mat_t2 != mat_b:
            idx = next(i for i in range(len(mat_b)) if mat_t2[i] != mat_b[i])
            i, j = divmod(idx, len(codes))
            witness = {"ctx": k, "a": list(codes[i]), "c": list(codes[j])}
            break
    report = report + LawReport((
        LawEntry("roundtrip.reinduced_entailment",
                 "fail" if witness else "pass", witness),))
    return report
