"""Executable laws for coded tripos presentations.

Every identity between predicates is checked as mutual entailment of codes,
never as equality of code vectors: raw codes satisfy no algebraic law, only
their classes in the quotient do. Checks are exhaustive up to the budget's
max_ctx and sampled (seeded) one context size beyond; failures carry
witnesses that `replay_witness` re-evaluates through the public operations.
"""

from __future__ import annotations

import random
from itertools import product

from .errors import CodeOpMismatch, NotALattice, NotHeyting, NotPreorder, SigmaTooLarge
from .order import FinMap
from .report import EXHAUSTIVE, CheckBudget, LawEntry, LawReport, run_check
from .tripos import (CodedTripos, PredCode, const_code, entail_matrix, entails,
                     enumerate_codes, exists_along, forall_along,
                     mutually_entail, px, subst)

QUANT_SIGMA_CAP = 4

QUANT_LAW_IDS = ("quant.merge_meet", "quant.merge_join",
                 "quant.imp_meet_distrib", "quant.join_monotone",
                 "quant.meet_antitone")


def _maps(dom: int, cod: int):
    for table in product(range(cod), repeat=dom):
        yield FinMap(table, cod)


def _map_json(f: FinMap) -> dict:
    return {"dom": f.dom_size, "cod": f.cod_size, "table": list(f.table)}


def _map_from_json(d: dict) -> FinMap:
    return FinMap(tuple(d["table"]), d["cod"])


def _rand_code(rng: random.Random, n: int, k: int) -> PredCode:
    return PredCode(tuple(rng.randrange(n) for _ in range(k)))


def _rand_map(rng: random.Random, dom: int, cod: int) -> FinMap:
    return FinMap(tuple(rng.randrange(cod) for _ in range(dom)), cod)


# ---------------------------------------------------------------- core laws

def _find_reflexive(t, max_ctx):
    def find():
        for k in range(max_ctx + 1):
            for c in enumerate_codes(t, k):
                s = PredCode(c)
                if not entails(t, s, s):
                    return {"ctx": k, "sigma": list(c)}
        return None
    return find


def _sample_reflexive(t, max_ctx):
    k = max_ctx + 1

    def trial(rng):
        s = _rand_code(rng, t.sigma_size, k)
        if not entails(t, s, s):
            return {"ctx": k, "sigma": list(s.codes)}
        return None
    return trial


def _find_transitive(t, max_ctx):
    def find():
        for k in range(max_ctx + 1):
            codes = enumerate_codes(t, k)
            rows = entail_matrix(t, codes)
            for i, ri in enumerate(rows):
                m = ri
                while m:
                    j = (m & -m).bit_length() - 1
                    m &= m - 1
                    extra = rows[j] & ~ri
                    if extra:
                        l = (extra & -extra).bit_length() - 1
                        return {"ctx": k, "sigma": list(codes[i]),
                                "tau": list(codes[j]), "rho": list(codes[l])}
        return None
    return find


_PX_ERRORS = (NotPreorder, NotALattice, NotHeyting, CodeOpMismatch)


def _jsonable(value):
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def _find_quotient(t, max_ctx):
    def find():
        for k in range(max_ctx + 1):
            try:
                px(t, k)
            except _PX_ERRORS as e:
                return {"ctx": k, "error": type(e).__name__,
                        "detail": _jsonable(getattr(e, "witness", None))}
        return None
    return find


def _adjunction_mismatch(t, f, sigma, tau, side):
    if side == "exists":
        lhs = entails(t, exists_along(t, f, sigma), tau)
        rhs = entails(t, sigma, subst(f, tau))
    else:
        lhs = entails(t, tau, forall_along(t, f, sigma))
        rhs = entails(t, subst(f, tau), sigma)
    return lhs != rhs


def _find_adjunction(t, max_ctx, side):
    def find():
        for kx in range(max_ctx + 1):
            for ky in range(max_ctx + 1):
                cod_codes = [PredCode(c) for c in enumerate_codes(t, ky)]
                for f in _maps(kx, ky):
                    for sc in enumerate_codes(t, kx):
                        sigma = PredCode(sc)
                        for tau in cod_codes:
                            if _adjunction_mismatch(t, f, sigma, tau, side):
                                return {"f": _map_json(f), "sigma": list(sc),
                                        "tau": list(tau.codes)}
        return None
    return find


def _sample_adjunction(t, max_ctx, side):
    k = max_ctx + 1

    def trial(rng):
        f = _rand_map(rng, k, k)
        sigma = _rand_code(rng, t.sigma_size, k)
        tau = _rand_code(rng, t.sigma_size, k)
        if _adjunction_mismatch(t, f, sigma, tau, side):
            return {"f": _map_json(f), "sigma": list(sigma.codes),
                    "tau": list(tau.codes)}
        return None
    return trial


def _quantify(t, f, sigma, side):
    return exists_along(t, f, sigma) if side == "exists" else forall_along(t, f, sigma)


def _functorial_mismatch(t, f, g, sigma, side):
    lhs = _quantify(t, g.compose(f), sigma, side)
    rhs = _quantify(t, g, _quantify(t, f, sigma, side), side)
    return not mutually_entail(t, lhs, rhs)


def _find_functorial(t, max_ctx, side):
    def find():
        for k in range(max_ctx + 1):
            ident = FinMap.identity(k)
            for c in enumerate_codes(t, k):
                sigma = PredCode(c)
                if not mutually_entail(t, _quantify(t, ident, sigma, side), sigma):
                    return {"kind": "identity", "ctx": k, "sigma": list(c)}
        for kx, ky, kz in product(range(max_ctx + 1), repeat=3):
            for f in _maps(kx, ky):
                for g in _maps(ky, kz):
                    for c in enumerate_codes(t, kx):
                        if _functorial_mismatch(t, f, g, PredCode(c), side):
                            return {"kind": "compose", "f": _map_json(f),
                                    "g": _map_json(g), "sigma": list(c)}
        return None
    return find


def _sample_functorial(t, max_ctx, side):
    k = max_ctx + 1

    def trial(rng):
        f = _rand_map(rng, k, k)
        g = _rand_map(rng, k, k)
        sigma = _rand_code(rng, t.sigma_size, k)
        if _functorial_mismatch(t, f, g, sigma, side):
            return {"kind": "compose", "f": _map_json(f), "g": _map_json(g),
                    "sigma": list(sigma.codes)}
        return None
    return trial


def _pointwise(table, a: PredCode, b: PredCode) -> PredCode:
    return PredCode(tuple(table[x][y] for x, y in zip(a.codes, b.codes)))


def _distrib_mismatch(t, f, s1, s2, side):
    if side == "exists":
        lhs = exists_along(t, f, _pointwise(t.or_code, s1, s2))
        rhs = _pointwise(t.or_code, exists_along(t, f, s1), exists_along(t, f, s2))
    else:
        lhs = forall_along(t, f, _pointwise(t.and_code, s1, s2))
        rhs = _pointwise(t.and_code, forall_along(t, f, s1), forall_along(t, f, s2))
    return not mutually_entail(t, lhs, rhs)


def _find_distrib(t, max_ctx, side):
    def find():
        for kx in range(max_ctx + 1):
            codes = [PredCode(c) for c in enumerate_codes(t, kx)]
            for ky in range(max_ctx + 1):
                for f in _maps(kx, ky):
                    for s1 in codes:
                        for s2 in codes:
                            if _distrib_mismatch(t, f, s1, s2, side):
                                return {"f": _map_json(f),
                                        "sigma": list(s1.codes),
                                        "sigma2": list(s2.codes)}
        return None
    return find


def _sample_distrib(t, max_ctx, side):
    k = max_ctx + 1

    def trial(rng):
        f = _rand_map(rng, k, k)
        s1 = _rand_code(rng, t.sigma_size, k)
        s2 = _rand_code(rng, t.sigma_size, k)
        if _distrib_mismatch(t, f, s1, s2, side):
            return {"f": _map_json(f), "sigma": list(s1.codes),
                    "sigma2": list(s2.codes)}
        return None
    return trial


def _unit_mismatch(t, f, side):
    if side == "exists":
        lhs = exists_along(t, f, const_code(t.bot_code, f.dom_size))
        return not mutually_entail(t, lhs, const_code(t.bot_code, f.cod_size))
    lhs = forall_along(t, f, const_code(t.top_code, f.dom_size))
    return not mutually_entail(t, lhs, const_code(t.top_code, f.cod_size))


def _find_unit(t, max_ctx, side):
    def find():
        for kx in range(max_ctx + 1):
            for ky in range(max_ctx + 1):
                for f in _maps(kx, ky):
                    if _unit_mismatch(t, f, side):
                        return {"f": _map_json(f)}
        return None
    return find


def _sample_unit(t, max_ctx, side):
    k = max_ctx + 1

    def trial(rng):
        f = _rand_map(rng, k, k)
        return {"f": _map_json(f)} if _unit_mismatch(t, f, side) else None
    return trial


def _bijection_mismatch(t, f, sigma):
    inv = [0] * f.cod_size
    for x in range(f.dom_size):
        inv[f(x)] = x
    f_inv = FinMap(tuple(inv), f.dom_size)
    ex = exists_along(t, f, sigma)
    fa = forall_along(t, f, sigma)
    by_inv = subst(f_inv, sigma)
    return not (mutually_entail(t, ex, fa) and mutually_entail(t, ex, by_inv))


def _find_bijection(t, max_ctx):
    def find():
        for k in range(max_ctx + 1):
            perms = [f for f in _maps(k, k) if len(set(f.table)) == k]
            for f in perms:
                for c in enumerate_codes(t, k):
                    if _bijection_mismatch(t, f, PredCode(c)):
                        return {"f": _map_json(f), "sigma": list(c)}
        return None
    return find


def _sample_bijection(t, max_ctx):
    k = max_ctx + 1

    def trial(rng):
        table = list(range(k))
        rng.shuffle(table)
        f = FinMap(tuple(table), k)
        sigma = _rand_code(rng, t.sigma_size, k)
        if _bijection_mismatch(t, f, sigma):
            return {"f": _map_json(f), "sigma": list(sigma.codes)}
        return None
    return trial


def _surjection_mismatch(t, f, tau):
    back = subst(f, tau)
    return not (mutually_entail(t, exists_along(t, f, back), tau)
                and mutually_entail(t, forall_along(t, f, back), tau))


def _find_surjection(t, max_ctx):
    def find():
        for kx in range(max_ctx + 1):
            for ky in range(max_ctx + 1):
                for f in _maps(kx, ky):
                    if len(set(f.table)) != ky:
                        continue
                    for c in enumerate_codes(t, ky):
                        if _surjection_mismatch(t, f, PredCode(c)):
                            return {"f": _map_json(f), "tau": list(c)}
        return None
    return find


def _sample_surjection(t, max_ctx):
    k = max_ctx + 1

    def trial(rng):
        table = list(range(k))         # onto, then shuffled
        rng.shuffle(table)
        f = FinMap(tuple(table), k)
        tau = _rand_code(rng, t.sigma_size, k)
        if _surjection_mismatch(t, f, tau):
            return {"f": _map_json(f), "tau": list(tau.codes)}
        return None
    return trial


def _injection_mismatch(t, f, sigma):
    return not (mutually_entail(t, subst(f, exists_along(t, f, sigma)), sigma)
                and mutually_entail(t, subst(f, forall_along(t, f, sigma)), sigma))


def _find_injection(t, max_ctx):
    def find():
        for kx in range(max_ctx + 1):
            for ky in range(max_ctx + 1):
                if kx == 0 and ky > 0:
                    continue           # no left inverse: recorded as skipped
                for f in _maps(kx, ky):
                    if len(set(f.table)) != kx:
                        continue
                    for c in enumerate_codes(t, kx):
                        if _injection_mismatch(t, f, PredCode(c)):
                            return {"f": _map_json(f), "sigma": list(c)}
        return None
    return find


def _sample_injection(t, max_ctx):
    k = max_ctx + 1

    def trial(rng):
        table = rng.sample(range(k + 1), k)
        f = FinMap(tuple(table), k + 1)
        sigma = _rand_code(rng, t.sigma_size, k)
        if _injection_mismatch(t, f, sigma):
            return {"f": _map_json(f), "sigma": list(sigma.codes)}
        return None
    return trial


def check_core_laws(t: CodedTripos, budget: CheckBudget = CheckBudget()) -> LawReport:
    """Entailment preorder, quotient Heyting structure, quantifier adjunctions
    and their consequences."""
    m = budget.max_ctx
    entries = [
        run_check("core.entails_reflexive", budget, _find_reflexive(t, m),
               _sample_reflexive(t, m)),
        run_check("core.entails_transitive", budget, _find_transitive(t, m),
               _sample_transitive(t, m)),
        run_check("core.heyting_quotient", budget, _find_quotient(t, m)),
        run_check("core.adjunction_exists", budget, _find_adjunction(t, m, "exists"),
               _sample_adjunction(t, m, "exists")),
        run_check("core.adjunction_forall", budget, _find_adjunction(t, m, "forall"),
               _sample_adjunction(t, m, "forall")),
        run_check("core.exists_functorial", budget, _find_functorial(t, m, "exists"),
               _sample_functorial(t, m, "exists")),
        run_check("core.forall_functorial", budget, _find_functorial(t, m, "forall"),
               _sample_functorial(t, m, "forall")),
        run_check("core.exists_or_distrib", budget, _find_distrib(t, m, "exists"),
               _sample_distrib(t, m, "exists")),
        run_check("core.forall_and_distrib", budget, _find_distrib(t, m, "forall"),
               _sample_distrib(t, m, "forall")),
        run_check("core.exists_bottom", budget, _find_unit(t, m, "exists"),
               _sample_unit(t, m, "exists")),
        run_check("core.forall_top", budget, _find_unit(t, m, "forall"),
               _sample_unit(t, m, "forall")),
        run_check("core.bijection_collapse", budget, _find_bijection(t, m),
               _sample_bijection(t, m)),
        run_check("core.surjection_left_inverse", budget, _find_surjection(t, m),
               _sample_surjection(t, m)),
        run_check("core.injection_retraction", budget, _find_injection(t, m),
               _sample_injection(t, m)),
    ]
    if m >= 1:
        # injective maps from the empty context into a nonempty one have no
        # left inverse, so the retraction case does not apply there
        entries.append(LawEntry("core.injection_retraction.empty_domain",
                                "skipped",
                                {"reason": "empty domain, nonempty codomain"}))
    return LawReport(tuple(entries))


def _sample_transitive(t, max_ctx):
    k = max_ctx + 1

    def trial(rng):
        s, u, r = (_rand_code(rng, t.sigma_size, k) for _ in range(3))
        if entails(t, s, u) and entails(t, u, r) and not entails(t, s, r):
            return {"ctx": k, "sigma": list(s.codes), "tau": list(u.codes),
                    "rho": list(r.codes)}
        return None
    return trial


# ----------------------------------------------------------- Beck-Chevalley

def canonical_pullback(g1: FinMap, g2: FinMap) -> tuple[FinMap, FinMap]:
    """Projections of {(x1, x2) : g1 x1 = g2 x2}, pairs in lexicographic order."""
    pairs = [(x1, x2) for x1 in range(g1.dom_size) for x2 in range(g2.dom_size)
             if g1(x1) == g2(x2)]
    f1 = FinMap(tuple(p[0] for p in pairs), g1.dom_size)
    f2 = FinMap(tuple(p[1] for p in pairs), g2.dom_size)
    return f1, f2


def _bc_mismatch(t, g1, g2, sigma, side):
    f1, f2 = canonical_pullback(g1, g2)
    lhs = _quantify(t, f1, subst(f2, sigma), side)
    rhs = subst(g1, _quantify(t, g2, sigma, side))
    return not mutually_entail(t, lhs, rhs)


def _find_bc(t, max_ctx, side):
    def find():
        for ky in range(max_ctx + 1):
            for k1 in range(max_ctx + 1):
                for k2 in range(max_ctx + 1):
                    for g1 in _maps(k1, ky):
                        for g2 in _maps(k2, ky):
                            for c in enumerate_codes(t, k2):
                                if _bc_mismatch(t, g1, g2, PredCode(c), side):
                                    return {"g1": _map_json(g1),
                                            "g2": _map_json(g2),
                                            "sigma": list(c)}
        return None
    return find


def _sample_bc(t, max_ctx, side):
    k = max_ctx + 1

    def trial(rng):
        g1 = _rand_map(rng, k, k)
        g2 = _rand_map(rng, k, k)
        sigma = _rand_code(rng, t.sigma_size, k)
        if _bc_mismatch(t, g1, g2, sigma, side):
            return {"g1": _map_json(g1), "g2": _map_json(g2),
                    "sigma": list(sigma.codes)}
        return None
    return trial


def check_beck_chevalley(t: CodedTripos, budget: CheckBudget = CheckBudget()
                         ) -> LawReport:
    """Quantifiers commute with substitution across canonical pullbacks of all
    cospans within the budget."""
    return LawReport((
        run_check("beck_chevalley.exists", budget,
               _find_bc(t, budget.max_ctx, "exists"),
               _sample_bc(t, budget.max_ctx, "exists")),
        run_check("beck_chevalley.forall", budget,
               _find_bc(t, budget.max_ctx, "forall"),
               _sample_bc(t, budget.max_ctx, "forall")),
    ))


# ----------------------------------------------------- quantifier identities

def _subset_union_vector(m: int) -> list[int]:
    # un[S] = union of the subsets named by the bits of S
    un = [0] * (1 << m)
    for s_set in range(1, 1 << m):
        low = s_set & -s_set
        un[s_set] = un[s_set & (s_set - 1)] | (low.bit_length() - 1)
    return un


def _image_vector(table, m: int) -> list[int]:
    # img[S] = bitmask {table[s] : s in S}
    img = [0] * (1 << m)
    for s_set in range(1, 1 << m):
        low = s_set & -s_set
        img[s_set] = img[s_set & (s_set - 1)] | (1 << table[low.bit_length() - 1])
    return img


def _first_diff(a: PredCode, b: PredCode):
    for i, (x, y) in enumerate(zip(a.codes, b.codes)):
        if x != y:
            return {"position": i, "lhs": x, "rhs": y}
    return {"position": None}


def _merge_law(t, table):
    m = 1 << t.sigma_size
    un = _subset_union_vector(m)
    img = _image_vector(table, m)
    lhs = PredCode(tuple(table[img[s_set]] for s_set in range(1 << m)))
    rhs = PredCode(tuple(table[un[s_set]] for s_set in range(1 << m)))
    return lhs, rhs


def _mutual_entry(law_id, t, lhs, rhs):
    if mutually_entail(t, lhs, rhs):
        return LawEntry(law_id, "pass", None, EXHAUSTIVE)
    w = _first_diff(lhs, rhs)
    w["forward"] = entails(t, lhs, rhs)
    w["backward"] = entails(t, rhs, lhs)
    return LawEntry(law_id, "fail", w, EXHAUSTIVE)


def _inclusion_pairs(n: int) -> list[tuple[int, int]]:
    return [(sub, sup) for sup in range(1 << n) for sub in range(1 << n)
            if sub & ~sup == 0]


def check_quantifier_identities(t: CodedTripos) -> LawReport:
    """Identities of the subset-indexed quantifier codes: merging nested
    quantifications, distribution of the meet code over implication, and
    monotonicity/antitonicity in the quantification domain."""
    n = t.sigma_size
    if n > QUANT_SIGMA_CAP:
        raise SigmaTooLarge(
            f"quantifier identities enumerate 2**(2**sigma) contexts; "
            f"sigma_size {n} exceeds {QUANT_SIGMA_CAP}")
    entries = []
    entries.append(_mutual_entry("quant.merge_meet", t, *_merge_law(t, t.meet_code)))
    entries.append(_mutual_entry("quant.merge_join", t, *_merge_law(t, t.join_code)))

    lhs, rhs = [], []
    for theta in range(n):
        for s in range(1 << n):
            img = 0
            rest = s
            while rest:
                low = rest & -rest
                rest ^= low
                img |= 1 << t.imp_code[theta][low.bit_length() - 1]
            lhs.append(t.meet_code[img])
            rhs.append(t.imp_code[theta][t.meet_code[s]])
    entries.append(_mutual_entry("quant.imp_meet_distrib", t,
                                 PredCode(tuple(lhs)), PredCode(tuple(rhs))))

    pairs = _inclusion_pairs(n)
    join_sub = PredCode(tuple(t.join_code[a] for a, _ in pairs))
    join_sup = PredCode(tuple(t.join_code[b] for _, b in pairs))
    if entails(t, join_sub, join_sup):
        entries.append(LawEntry("quant.join_monotone", "pass", None, EXHAUSTIVE))
    else:
        entries.append(LawEntry("quant.join_monotone", "fail",
                                {"pairs": len(pairs)}, EXHAUSTIVE))
    meet_sub = PredCode(tuple(t.meet_code[a] for a, _ in pairs))
    meet_sup = PredCode(tuple(t.meet_code[b] for _, b in pairs))
    if entails(t, meet_sup, meet_sub):
        entries.append(LawEntry("quant.meet_antitone", "pass", None, EXHAUSTIVE))
    else:
        entries.append(LawEntry("quant.meet_antitone", "fail",
                                {"pairs": len(pairs)}, EXHAUSTIVE))
    return LawReport(tuple(entries))


def run_all(t: CodedTripos, budget: CheckBudget = CheckBudget()) -> LawReport:
    """Concatenation of the core, Beck-Chevalley, and quantifier-identity
    suites; quantifier identities are recorded as skipped when the
    proposition set is too large to enumerate their contexts."""
    report = check_core_laws(t, budget) + check_beck_chevalley(t, budget)
    if t.sigma_size <= QUANT_SIGMA_CAP:
        report = report + check_quantifier_identities(t)
    else:
        report = report + LawReport(tuple(
            LawEntry(law_id, "skipped",
                     {"reason": f"sigma_size {t.sigma_size} > {QUANT_SIGMA_CAP}"})
            for law_id in QUANT_LAW_IDS))
    return report


# ----------------------------------------------------------- witness replay

def _replay_reflexive(t, w):
    s = PredCode(tuple(w["sigma"]))
    return not entails(t, s, s)


def _replay_transitive(t, w):
    s, u, r = (PredCode(tuple(w[k])) for k in ("sigma", "tau", "rho"))
    return entails(t, s, u) and entails(t, u, r) and not entails(t, s, r)


def _replay_quotient(t, w):
    try:
        px(t, w["ctx"])
    except _PX_ERRORS as e:
        return type(e).__name__ == w["error"]
    return False


def _replay_adjunction(side):
    def replay(t, w):
        return _adjunction_mismatch(t, _map_from_json(w["f"]),
                                    PredCode(tuple(w["sigma"])),
                                    PredCode(tuple(w["tau"])), side)
    return replay


def _replay_functorial(side):
    def replay(t, w):
        sigma = PredCode(tuple(w["sigma"]))
        if w["kind"] == "identity":
            ident = FinMap.identity(w["ctx"])
            return not mutually_entail(t, _quantify(t, ident, sigma, side), sigma)
        return _functorial_mismatch(t, _map_from_json(w["f"]),
                                    _map_from_json(w["g"]), sigma, side)
    return replay


def _replay_distrib(side):
    def replay(t, w):
        return _distrib_mismatch(t, _map_from_json(w["f"]),
                                 PredCode(tuple(w["sigma"])),
                                 PredCode(tuple(w["sigma2"])), side)
    return replay


def _replay_unit(side):
    def replay(t, w):
        return _unit_mismatch(t, _map_from_json(w["f"]), side)
    return replay


def _replay_bc(side):
    def replay(t, w):
        return _bc_mismatch(t, _map_from_json(w["g1"]), _map_from_json(w["g2"]),
                            PredCode(tuple(w["sigma"])), side)
    return replay


def _replay_merge(table_name):
    def replay(t, w):
        lhs, rhs = _merge_law(t, getattr(t, table_name))
        return not mutually_entail(t, lhs, rhs)
    return replay


def _replay_imp_meet(t, w):
    report = check_quantifier_identities(t)
    return report.entry("quant.imp_meet_distrib").status == "fail"


def _replay_monotone(law_id):
    def replay(t, w):
        report = check_quantifier_identities(t)
        return report.entry(law_id).status == "fail"
    return replay


_REPLAYERS = {
    "core.entails_reflexive": _replay_reflexive,
    "core.entails_transitive": _replay_transitive,
    "core.heyting_quotient": _replay_quotient,
    "core.adjunction_exists": _replay_adjunction("exists"),
    "core.adjunction_forall": _replay_adjunction("forall"),
    "core.exists_functorial": _replay_functorial("exists"),
    "core.forall_functorial": _replay_functorial("forall"),
    "core.exists_or_distrib": _replay_distrib("exists"),
    "core.forall_and_distrib": _replay_distrib("forall"),
    "core.exists_bottom": _replay_unit("exists"),
    "core.forall_top": _replay_unit("forall"),
    "core.bijection_collapse":
        lambda t, w: _bijection_mismatch(t, _map_from_json(w["f"]),
                                         PredCode(tuple(w["sigma"]))),
    "core.surjection_left_inverse":
        lambda t, w: _surjection_mismatch(t, _map_from_json(w["f"]),
                                          PredCode(tuple(w["tau"]))),
    "core.injection_retraction":
        lambda t, w: _injection_mismatch(t, _map_from_json(w["f"]),
                                         PredCode(tuple(w["sigma"]))),
    "beck_chevalley.exists": _replay_bc("exists"),
    "beck_chevalley.forall": _replay_bc("forall"),
    "quant.merge_meet": _replay_merge("meet_code"),
    "quant.merge_join": _replay_merge("join_code"),
    "quant.imp_meet_distrib": _replay_imp_meet,
    "quant.join_monotone": _replay_monotone("quant.join_monotone"),
    "quant.meet_antitone": _replay_monotone("quant.meet_antitone"),
}


def replay_witness(t: CodedTripos, entry: LawEntry) -> bool:
    """Re-evaluate a fail entry's witness through the public operations;
    True means the violation is reproduced."""
    if entry.status != "fail":
        raise ValueError("only fail entries carry replayable witnesses")
    return _REPLAYERS[entry.law_id](t, entry.witness)
