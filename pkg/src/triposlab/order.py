"""Finite preorders, posets, Heyting algebras, and adjoints of monotone maps.

Elements are dense indices 0..n-1 and all structure is explicit tables, so
every law can be checked by exhaustive scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import NotALattice, NotHeyting, NotMonotone, PreorderInvalid


@dataclass(frozen=True)
class FinPreorder:
    """Reflexive transitive relation; rel[i][j] means i <= j."""

    rel: tuple[tuple[bool, ...], ...]

    @property
    def size(self) -> int:
        return len(self.rel)

    def leq(self, i: int, j: int) -> bool:
        return self.rel[i][j]

    def validate(self) -> None:
        n = self.size
        if any(len(row) != n for row in self.rel):
            raise PreorderInvalid("relation table not square", (n,))
        for i in range(n):
            if not self.rel[i][i]:
                raise PreorderInvalid("not reflexive", (i,))
        for i, j, k in product(range(n), repeat=3):
            if self.rel[i][j] and self.rel[j][k] and not self.rel[i][k]:
                raise PreorderInvalid("not transitive", (i, j, k))

    @staticmethod
    def from_pairs(size: int, pairs) -> "FinPreorder":
        """Build from a set of (i, j) pairs meaning i <= j (closure not taken)."""
        ps = set(map(tuple, pairs))
        return FinPreorder(tuple(tuple((i, j) in ps for j in range(size))
                                 for i in range(size)))


@dataclass(frozen=True)
class FinPoset(FinPreorder):
    """Antisymmetric FinPreorder."""

    def validate(self) -> None:
        super().validate()
        for i in range(self.size):
            for j in range(self.size):
                if i != j and self.rel[i][j] and self.rel[j][i]:
                    raise PreorderInvalid("not antisymmetric", (i, j))


@dataclass(frozen=True)
class FinMap:
    """Function between finite index sets; table[x] is the image of x."""

    table: tuple[int, ...]
    cod_size: int

    @property
    def dom_size(self) -> int:
        return len(self.table)

    def __call__(self, x: int) -> int:
        return self.table[x]

    def validate(self) -> None:
        for x, y in enumerate(self.table):
            if not 0 <= y < self.cod_size:
                raise ValueError(f"map entry out of range: {x} -> {y}")

    def compose(self, first: "FinMap") -> "FinMap":
        """self after first (self . first)."""
        if first.cod_size != self.dom_size:
            raise ValueError("composition size mismatch")
        return FinMap(tuple(self.table[y] for y in first.table), self.cod_size)

    @staticmethod
    def identity(n: int) -> "FinMap":
        return FinMap(tuple(range(n)), n)


@dataclass(frozen=True)
class FinHeyting:
    """Finite Heyting algebra: a poset with explicit meet/join/implication tables."""

    poset: FinPoset
    meet: tuple[tuple[int, ...], ...]
    join: tuple[tuple[int, ...], ...]
    imp: tuple[tuple[int, ...], ...]
    top: int
    bot: int

    @property
    def size(self) -> int:
        return self.poset.size

    def leq(self, i: int, j: int) -> bool:
        return self.poset.rel[i][j]


def reflect(p: FinPreorder) -> tuple[FinPoset, FinMap]:
    """Poset reflection: quotient by mutual comparability.

    Classes are numbered by least member index, so the projection is
    deterministic. The returned order is the induced order on classes.
    """
    p.validate()
    n = p.size
    class_of = [-1] * n
    reps: list[int] = []
    for i in range(n):
        if class_of[i] >= 0:
            continue
        c = len(reps)
        reps.append(i)
        for j in range(i, n):
            if p.rel[i][j] and p.rel[j][i]:
                class_of[j] = c
    rel = tuple(tuple(p.rel[a][b] for b in reps) for a in reps)
    return FinPoset(rel), FinMap(tuple(class_of), len(reps))


def _greatest(p: FinPoset, candidates: list[int]) -> int | None:
    for m in candidates:
        if all(p.rel[x][m] for x in candidates):
            return m
    return None


def _least(p: FinPoset, candidates: list[int]) -> int | None:
    for m in candidates:
        if all(p.rel[m][x] for x in candidates):
            return m
    return None


def lattice_structure(p: FinPoset) -> FinHeyting:
    """Compute meet/join/implication tables for a finite Heyting algebra.

    imp(a, b) is the greatest x with meet(x, a) <= b; residuation is verified
    over all triples afterwards.
    """
    p.validate()
    n = p.size
    if n == 0:
        raise NotALattice("empty poset has no top or bottom")
    top = _greatest(p, list(range(n)))
    bot = _least(p, list(range(n)))
    if top is None or bot is None:
        raise NotALattice("no top or bottom element")
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            m = _greatest(p, [x for x in range(n) if p.rel[x][a] and p.rel[x][b]])
            if m is None:
                raise NotALattice("pair lacks a meet", (a, b))
            j = _least(p, [x for x in range(n) if p.rel[a][x] and p.rel[b][x]])
            if j is None:
                raise NotALattice("pair lacks a join", (a, b))
            meet[a][b] = m
            join[a][b] = j
    imp = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            r = _greatest(p, [x for x in range(n) if p.rel[meet[x][a]][b]])
            if r is None:
                raise NotHeyting("no greatest residual", (a, b))
            imp[a][b] = r
    for x, a, b in product(range(n), repeat=3):
        if p.rel[meet[x][a]][b] != p.rel[x][imp[a][b]]:
            raise NotHeyting("residuation fails", (x, a, b))
    return FinHeyting(p, tuple(map(tuple, meet)), tuple(map(tuple, join)),
                      tuple(map(tuple, imp)), top, bot)


def check_monotone(f: FinMap, p: FinPoset, q: FinPoset) -> None:
    for i in range(p.size):
        for j in range(p.size):
            if p.rel[i][j] and not q.rel[f(i)][f(j)]:
                raise NotMonotone((i, j))


def monotone_adjoints(f: FinMap, p: FinPoset, q: FinPoset
                      ) -> tuple[FinMap | None, FinMap | None]:
    """Left and right adjoints of a monotone f: p -> q, when they exist.

    The left adjoint L: q -> p satisfies L(x) <= y iff x <= f(y); the right
    adjoint R: q -> p satisfies y <= R(x) iff f(y) <= x. Each value is found
    pointwise as the least/greatest element of the relevant section; if some
    point has none, or the result is not monotone, None is returned.
    """
    f.validate()
    if f.dom_size != p.size or f.cod_size != q.size:
        raise ValueError("map does not match the given posets")
    check_monotone(f, p, q)

    def pointwise(pick, section):
        table = []
        for x in range(q.size):
            v = pick(p, [y for y in range(p.size) if section(x, y)])
            if v is None:
                return None
            table.append(v)
        g = FinMap(tuple(table), p.size)
        try:
            check_monotone(g, q, p)
        except NotMonotone:
            return None
        # full adjunction condition; pointwise optimum can still fail it
        for x in range(q.size):
            for y in range(p.size):
                if pick is _least:
                    if (p.rel[g(x)][y]) != (q.rel[x][f(y)]):
                        return None
                else:
                    if (p.rel[y][g(x)]) != (q.rel[f(y)][x]):
                        return None
        return g

    left = pointwise(_least, lambda x, y: q.rel[x][f(y)])
    right = pointwise(_greatest, lambda x, y: q.rel[f(y)][x])
    return left, right


def chain(n: int) -> FinPoset:
    """The n-element chain 0 < 1 < ... < n-1."""
    return FinPoset(tuple(tuple(i <= j for j in range(n)) for i in range(n)))


def diamond() -> FinPoset:
    """Four-element Boolean lattice: 0 < 1, 2 < 3 with 1, 2 incomparable."""
    pairs = {(0, 0), (1, 1), (2, 2), (3, 3),
             (0, 1), (0, 2), (0, 3), (1, 3), (2, 3)}
    return FinPoset(tuple(tuple((i, j) in pairs for j in range(4)) for i in range(4)))
