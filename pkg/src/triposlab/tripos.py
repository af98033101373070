"""Coded tripos presentations.

A presentation is a finite proposition set of codes 0..sigma_size-1 together
with connective tables (binary and over all subsets), unit codes, and a
filter. No algebraic law is assumed of the tables; whether a presentation
actually is a tripos is decided by the law suite. Predicates over a finite
context X are code vectors, entailment is filter membership of the meet of
the pointwise implication image, and each P(X) arises as the poset reflection
of the code space under mutual entailment.

Subsets of the proposition set are bitmasks throughout: bit i set <-> code i
in the subset.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from . import _kernel
from .errors import (CodeOpMismatch, CtxMismatch, MalformedFixture,
                     NotPreorder, NotSurjective, SigmaTooLarge)
from .order import FinHeyting, FinMap, FinPoset, FinPreorder, lattice_structure, reflect

# Subset-indexed tables have 2**sigma_size entries; 16 keeps every mask and
# table word-sized.
SIGMA_CAP = 16


@dataclass(frozen=True)
class PredCode:
    """A propositional function over a finite context: one code per position."""

    codes: tuple[int, ...]

    @property
    def ctx_size(self) -> int:
        return len(self.codes)


def const_code(code: int, ctx_size: int) -> PredCode:
    return PredCode((code,) * ctx_size)


@dataclass(frozen=True)
class CodedTripos:
    sigma_size: int
    and_code: tuple[tuple[int, ...], ...]
    or_code: tuple[tuple[int, ...], ...]
    imp_code: tuple[tuple[int, ...], ...]
    top_code: int
    bot_code: int
    meet_code: tuple[int, ...]   # indexed by subset bitmask
    join_code: tuple[int, ...]   # indexed by subset bitmask
    filter: frozenset[int]

    def validate(self) -> None:
        """Structural range checks only; algebraic laws are the law suite's job."""
        n = self.sigma_size
        if n < 1:
            raise MalformedFixture("proposition set must be nonempty")
        if n > SIGMA_CAP:
            raise SigmaTooLarge(f"proposition set larger than {SIGMA_CAP}")
        for name, table in (("and", self.and_code), ("or", self.or_code),
                            ("imp", self.imp_code)):
            if len(table) != n or any(len(row) != n for row in table):
                raise MalformedFixture(f"{name} table is not {n}x{n}")
            if any(not 0 <= v < n for row in table for v in row):
                raise MalformedFixture(f"{name} table entry out of range")
        for name, table in (("meet", self.meet_code), ("join", self.join_code)):
            if len(table) != 1 << n:
                raise MalformedFixture(f"{name} table must have {1 << n} entries")
            if any(not 0 <= v < n for v in table):
                raise MalformedFixture(f"{name} table entry out of range")
        for name, v in (("top", self.top_code), ("bot", self.bot_code)):
            if not 0 <= v < n:
                raise MalformedFixture(f"{name} code out of range")
        if any(not 0 <= v < n for v in self.filter):
            raise MalformedFixture("filter element out of range")

    @cached_property
    def filter_mask(self) -> int:
        m = 0
        for v in self.filter:
            m |= 1 << v
        return m

    @cached_property
    def _kt(self) -> tuple[int, array, array, int]:
        imp_flat = array("i", (v for row in self.imp_code for v in row))
        return self.sigma_size, imp_flat, array("i", self.meet_code), self.filter_mask


def _check_ctx(a: PredCode, b: PredCode) -> None:
    if a.ctx_size != b.ctx_size:
        raise CtxMismatch(f"context sizes differ: {a.ctx_size} vs {b.ctx_size}")


def entails(t: CodedTripos, sigma: PredCode, tau: PredCode) -> bool:
    """sigma entails tau: the meet of the pointwise implication image set is
    in the filter. Duplicate implication codes collapse before the lookup."""
    _check_ctx(sigma, tau)
    n, imp, meet, filt = t._kt
    return _kernel.entails(n, imp, meet, filt,
                           array("i", sigma.codes), array("i", tau.codes))


def mutually_entail(t: CodedTripos, sigma: PredCode, tau: PredCode) -> bool:
    return entails(t, sigma, tau) and entails(t, tau, sigma)


def enumerate_codes(t: CodedTripos, ctx_size: int) -> list[tuple[int, ...]]:
    """All code vectors over the context, in lexicographic order."""
    return list(product(range(t.sigma_size), repeat=ctx_size))


def entail_matrix(t: CodedTripos, codes: list[tuple[int, ...]]) -> list[int]:
    """All-pairs entailment; row i is a bitmask with bit j set iff
    codes[i] entails codes[j]."""
    n, imp, meet, filt = t._kt
    ncodes = len(codes)
    k = len(codes[0]) if codes else 0
    flat = array("i", (c for code in codes for c in code))
    mat = _kernel.entail_matrix(n, imp, meet, filt, flat, ncodes, k)
    rows = []
    for i in range(ncodes):
        off = i * ncodes
        r = 0
        for j in range(ncodes):
            if mat[off + j]:
                r |= 1 << j
        rows.append(r)
    return rows


@dataclass(frozen=True)
class PXResult:
    """The Heyting algebra P(X) together with the code quotient that built it."""

    algebra: FinHeyting
    classify: dict
    representatives: tuple[PredCode, ...]

    def class_of(self, sigma: PredCode) -> int:
        return self.classify[sigma.codes]


def px(t: CodedTripos, ctx_size: int) -> PXResult:
    """Build P(X) for a context of the given size: reflect the entailment
    preorder on all code vectors, compute the Heyting structure of the
    quotient, and verify that every connective and unit code descends to the
    corresponding quotient operation."""
    codes = enumerate_codes(t, ctx_size)
    nc = len(codes)
    rows = entail_matrix(t, codes)
    for i in range(nc):
        if not (rows[i] >> i) & 1:
            raise NotPreorder("entailment not reflexive",
                              {"ctx": ctx_size, "sigma": list(codes[i])})
    for i in range(nc):
        ri = rows[i]
        m = ri
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            extra = rows[j] & ~ri
            if extra:
                k = (extra & -extra).bit_length() - 1
                raise NotPreorder("entailment not transitive",
                                  {"ctx": ctx_size, "sigma": list(codes[i]),
                                   "tau": list(codes[j]), "rho": list(codes[k])})
    pre = FinPreorder(tuple(tuple((rows[i] >> j) & 1 == 1 for j in range(nc))
                            for i in range(nc)))
    poset, proj = reflect(pre)
    algebra = lattice_structure(poset)
    classify = {codes[i]: proj(i) for i in range(nc)}
    reps: list[PredCode | None] = [None] * poset.size
    for i, code in enumerate(codes):
        c = proj(i)
        if reps[c] is None:
            reps[c] = PredCode(code)

    def _descends(op_name, table, quotient):
        for s in codes:
            for u in codes:
                applied = tuple(table[a][b] for a, b in zip(s, u))
                if classify[applied] != quotient[classify[s]][classify[u]]:
                    raise CodeOpMismatch(
                        f"{op_name} code does not descend",
                        {"ctx": ctx_size, "op": op_name,
                         "sigma": list(s), "tau": list(u)})

    _descends("and", t.and_code, algebra.meet)
    _descends("or", t.or_code, algebra.join)
    _descends("imp", t.imp_code, algebra.imp)
    if classify[(t.top_code,) * ctx_size] != algebra.top:
        raise CodeOpMismatch("top code does not descend",
                             {"ctx": ctx_size, "op": "top"})
    if classify[(t.bot_code,) * ctx_size] != algebra.bot:
        raise CodeOpMismatch("bot code does not descend",
                             {"ctx": ctx_size, "op": "bot"})
    return PXResult(algebra, classify, tuple(reps))


def subst(f: FinMap, tau: PredCode) -> PredCode:
    """Substitution along f: precompose the code vector."""
    if tau.ctx_size != f.cod_size:
        raise CtxMismatch(f"code over {tau.ctx_size} cannot precompose a map "
                          f"into {f.cod_size}")
    return PredCode(tuple(tau.codes[f(x)] for x in range(f.dom_size)))


def _fiber_masks(f: FinMap, sigma: PredCode) -> list[int]:
    masks = [0] * f.cod_size
    for x, c in enumerate(sigma.codes):
        masks[f(x)] |= 1 << c
    return masks


def exists_along(t: CodedTripos, f: FinMap, sigma: PredCode) -> PredCode:
    """Existential image: the join code of each fiber's image set; empty
    fibers take the join table's value at the empty subset."""
    if sigma.ctx_size != f.dom_size:
        raise CtxMismatch("code does not match the map's domain")
    return PredCode(tuple(t.join_code[m] for m in _fiber_masks(f, sigma)))


def forall_along(t: CodedTripos, f: FinMap, sigma: PredCode) -> PredCode:
    """Universal image: the meet code of each fiber's image set."""
    if sigma.ctx_size != f.dom_size:
        raise CtxMismatch("code does not match the map's domain")
    return PredCode(tuple(t.meet_code[m] for m in _fiber_masks(f, sigma)))


def recode(t: CodedTripos, h: FinMap) -> CodedTripos:
    """Present the same tripos over a new proposition set mapped onto the old
    one by a surjection h; the least-index right inverse of h transports the
    tables, and the filter pulls back."""
    if h.cod_size != t.sigma_size:
        raise CtxMismatch("recoding map must land in the proposition set")
    n2 = h.dom_size
    if n2 > SIGMA_CAP:
        raise SigmaTooLarge(f"proposition set larger than {SIGMA_CAP}")
    hinv = [-1] * t.sigma_size
    for xp in range(n2 - 1, -1, -1):
        hinv[h(xp)] = xp
    if any(v < 0 for v in hinv):
        raise NotSurjective("recoding map is not onto the proposition set")

    def image(mask2: int) -> int:
        m = 0
        while mask2:
            b = mask2 & -mask2
            mask2 ^= b
            m |= 1 << h(b.bit_length() - 1)
        return m

    def binop(table):
        return tuple(tuple(hinv[table[h(i)][h(j)]] for j in range(n2))
                     for i in range(n2))

    return CodedTripos(
        sigma_size=n2,
        and_code=binop(t.and_code),
        or_code=binop(t.or_code),
        imp_code=binop(t.imp_code),
        top_code=hinv[t.top_code],
        bot_code=hinv[t.bot_code],
        meet_code=tuple(hinv[t.meet_code[image(s)]] for s in range(1 << n2)),
        join_code=tuple(hinv[t.join_code[image(s)]] for s in range(1 << n2)),
        filter=frozenset(xp for xp in range(n2) if h(xp) in t.filter),
    )
