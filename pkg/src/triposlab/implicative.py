"""Implicative structures, separators, implicative algebras, and the tripos
presentation an algebra induces.

An implicative structure is a finite complete lattice with an implication
that is antitone on the left, monotone on the right, and distributes over
meets on the right. A separator is an upward-closed subset containing the K
and S combinator meets and closed under modus ponens; it is classical when
it also contains the cc combinator meet.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .errors import CarrierTooLarge, MalformedFixture, NotALattice, NotValidAlgebra
from .report import EXHAUSTIVE, LawEntry, LawReport
from .tripos import SIGMA_CAP, CodedTripos

CARRIER_CAP = 16   # the distribution axiom sweeps all 2**size subsets


@dataclass(frozen=True)
class ImpStructure:
    rel: tuple[tuple[bool, ...], ...]   # rel[i][j] means i is below j
    imp: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.rel)

    def leq(self, i: int, j: int) -> bool:
        return self.rel[i][j]

    def validate_shape(self) -> None:
        n = self.size
        if n < 1:
            raise MalformedFixture("carrier must be nonempty")
        if any(len(row) != n for row in self.rel):
            raise MalformedFixture("order table is not square")
        if len(self.imp) != n or any(len(row) != n for row in self.imp):
            raise MalformedFixture(f"implication table is not {n}x{n}")
        if any(not 0 <= v < n for row in self.imp for v in row):
            raise MalformedFixture("implication entry out of range")

    @cached_property
    def top(self) -> int:
        for c in range(self.size):
            if all(self.rel[x][c] for x in range(self.size)):
                return c
        raise NotALattice("no top element")

    @cached_property
    def meet2(self) -> tuple[tuple[int, ...], ...]:
        """Binary meet table, by greatest-lower-bound scan."""
        n = self.size
        table = []
        for a in range(n):
            row = []
            for b in range(n):
                lower = [x for x in range(n) if self.rel[x][a] and self.rel[x][b]]
                for m in lower:
                    if all(self.rel[x][m] for x in lower):
                        row.append(m)
                        break
                else:
                    raise NotALattice("pair lacks a meet", (a, b))
            table.append(tuple(row))
        return tuple(table)

    @cached_property
    def subset_meets(self) -> tuple[int, ...]:
        """Meet of every subset, indexed by bitmask; the empty subset gives top."""
        if self.size > CARRIER_CAP:
            raise CarrierTooLarge(f"carrier {self.size} exceeds {CARRIER_CAP}")
        meet2 = self.meet2
        out = [self.top] * (1 << self.size)
        for mask in range(1, 1 << self.size):
            low = mask & -mask
            out[mask] = meet2[out[mask & (mask - 1)]][low.bit_length() - 1]
        return tuple(out)

    def meet_all(self, elems) -> int:
        m = self.top
        for x in elems:
            m = self.meet2[m][x]
        return m

    @property
    def bottom(self) -> int:
        return self.meet_all(range(self.size))


def validate_structure(s: ImpStructure) -> LawReport:
    """Exhaustive check that s is an implicative structure: partial order,
    complete lattice, variance of implication, and distribution of
    implication over every subset meet."""
    s.validate_shape()
    n = s.size
    if n > CARRIER_CAP:
        raise CarrierTooLarge(f"carrier {n} exceeds {CARRIER_CAP}")
    entries = []

    order_witness = None
    for i in range(n):
        if not s.rel[i][i]:
            order_witness = {"kind": "reflexivity", "element": i}
            break
    if order_witness is None:
        for i, j in product(range(n), repeat=2):
            if i != j and s.rel[i][j] and s.rel[j][i]:
                order_witness = {"kind": "antisymmetry", "pair": [i, j]}
                break
    if order_witness is None:
        for i, j, k in product(range(n), repeat=3):
            if s.rel[i][j] and s.rel[j][k] and not s.rel[i][k]:
                order_witness = {"kind": "transitivity", "triple": [i, j, k]}
                break
    if order_witness is not None:
        entries.append(LawEntry("structure.partial_order", "fail", order_witness))
        entries.extend(LawEntry(law_id, "skipped", {"reason": "order invalid"})
                       for law_id in ("structure.complete_lattice",
                                      "structure.variance",
                                      "structure.meet_distribution"))
        return LawReport(tuple(entries))
    entries.append(LawEntry("structure.partial_order", "pass"))

    try:
        meets = s.subset_meets
    except NotALattice as e:
        entries.append(LawEntry("structure.complete_lattice", "fail",
                                {"witness": list(e.witness) if e.witness else None}))
        entries.extend(LawEntry(law_id, "skipped", {"reason": "meets missing"})
                       for law_id in ("structure.variance",
                                      "structure.meet_distribution"))
        return LawReport(tuple(entries))
    entries.append(LawEntry("structure.complete_lattice", "pass"))

    variance_witness = None
    for a, a2, b, b2 in product(range(n), repeat=4):
        if s.rel[a2][a] and s.rel[b][b2] and not s.rel[s.imp[a][b]][s.imp[a2][b2]]:
            variance_witness = {"a": a, "a2": a2, "b": b, "b2": b2}
            break
    entries.append(LawEntry("structure.variance",
                            "fail" if variance_witness else "pass",
                            variance_witness))

    distribution_witness = None
    for a in range(n):
        imp_a = s.imp[a]
        # rhs[mask] = meet of {a -> b : b in mask}
        rhs = [s.top] * (1 << n)
        for mask in range(1, 1 << n):
            low = mask & -mask
            rhs[mask] = s.meet2[rhs[mask & (mask - 1)]][imp_a[low.bit_length() - 1]]
        for mask in range(1 << n):
            if imp_a[meets[mask]] != rhs[mask]:
                distribution_witness = {"a": a, "subset_mask": mask,
                                        "lhs": imp_a[meets[mask]],
                                        "rhs": rhs[mask]}
                break
        if distribution_witness:
            break
    entries.append(LawEntry("structure.meet_distribution",
                            "fail" if distribution_witness else "pass",
                            distribution_witness))
    return LawReport(tuple(entries))


def combinators(s: ImpStructure) -> tuple[int, int, int]:
    """Meets of the K, S, and cc combinator families over the full carrier."""
    n = s.size
    imp = s.imp
    k_val = s.meet_all(imp[a][imp[b][a]] for a in range(n) for b in range(n))
    s_val = s.meet_all(
        imp[imp[a][imp[b][c]]][imp[imp[a][b]][imp[a][c]]]
        for a in range(n) for b in range(n) for c in range(n))
    cc_val = s.meet_all(imp[imp[imp[a][b]][a]][a]
                        for a in range(n) for b in range(n))
    return k_val, s_val, cc_val


@dataclass(frozen=True)
class ImpAlgebra:
    structure: ImpStructure
    separator: frozenset[int]

    def validate_shape(self) -> None:
        self.structure.validate_shape()
        if any(not 0 <= v < self.structure.size for v in self.separator):
            raise MalformedFixture("separator element out of range")

    @cached_property
    def combinator_values(self) -> tuple[int, int, int]:
        return combinators(self.structure)

    @property
    def is_classical(self) -> bool:
        return self.combinator_values[2] in self.separator


def validate_separator(a: ImpAlgebra) -> LawReport:
    """Check the separator conditions exhaustively and report classicality."""
    a.validate_shape()
    s = a.structure
    n = s.size
    sep = a.separator
    entries = []

    up_witness = None
    for x in sep:
        for y in range(n):
            if s.rel[x][y] and y not in sep:
                up_witness = {"member": x, "above": y}
                break
        if up_witness:
            break
    entries.append(LawEntry("separator.upward_closed",
                            "fail" if up_witness else "pass", up_witness))

    k_val, s_val, cc_val = a.combinator_values
    entries.append(LawEntry("separator.k_member",
                            "pass" if k_val in sep else "fail",
                            None if k_val in sep else {"k": k_val}))
    entries.append(LawEntry("separator.s_member",
                            "pass" if s_val in sep else "fail",
                            None if s_val in sep else {"s": s_val}))

    mp_witness = None
    for x in sep:
        for y in range(n):
            if s.imp[x][y] in sep and y not in sep:
                mp_witness = {"premise": x, "conclusion": y,
                              "implication": s.imp[x][y]}
                break
        if mp_witness:
            break
    entries.append(LawEntry("separator.modus_ponens",
                            "fail" if mp_witness else "pass", mp_witness))

    entries.append(LawEntry("separator.classicality", "pass",
                            {"classical": cc_val in sep, "cc": cc_val}))
    return LawReport(tuple(entries))


def induced_tripos(a: ImpAlgebra) -> CodedTripos:
    """The tripos presentation induced by an implicative algebra: propositions
    are carrier elements, implication and subset meets come from the
    structure, the filter is the separator, and the remaining connectives are
    their standard second-order encodings."""
    struct_report = validate_structure(a.structure)
    if not struct_report.overall_pass:
        raise NotValidAlgebra("implicative structure axioms fail: "
                              + struct_report.failures()[0].law_id)
    sep_report = validate_separator(a)
    if not sep_report.overall_pass:
        raise NotValidAlgebra("separator conditions fail: "
                              + sep_report.failures()[0].law_id)
    s = a.structure
    n = s.size
    if n > SIGMA_CAP:
        raise CarrierTooLarge(f"carrier {n} exceeds {SIGMA_CAP}")
    imp = s.imp
    meet2 = s.meet2
    top = s.top

    def meet_over(values) -> int:
        m = top
        for v in values:
            m = meet2[m][v]
        return m

    and_code = tuple(tuple(meet_over(imp[imp[x][imp[y][c]]][c] for c in range(n))
                           for y in range(n)) for x in range(n))
    or_code = tuple(tuple(meet_over(imp[imp[x][c]][imp[imp[y][c]][c]]
                                    for c in range(n))
                          for y in range(n)) for x in range(n))
    meet_code = s.subset_meets

    # join of a subset: meet over c of ((meet of {x -> c : x in subset}) -> c)
    per_c = []
    for c in range(n):
        inner = [top] * (1 << n)
        for mask in range(1, 1 << n):
            low = mask & -mask
            inner[mask] = meet2[inner[mask & (mask - 1)]][imp[low.bit_length() - 1][c]]
        per_c.append(inner)
    join_code = tuple(meet_over(imp[per_c[c][mask]][c] for c in range(n))
                      for mask in range(1 << n))

    t = CodedTripos(
        sigma_size=n,
        and_code=and_code,
        or_code=or_code,
        imp_code=imp,
        top_code=top,
        bot_code=meet_code[(1 << n) - 1],
        meet_code=meet_code,
        join_code=join_code,
        filter=frozenset(a.separator),
    )
    t.validate()
    return t


def heyting_implicative_structure(heyting) -> ImpStructure:
    """View a finite Heyting algebra as an implicative structure."""
    return ImpStructure(heyting.poset.rel, heyting.imp)


def heyting_algebra(heyting, separator=None) -> ImpAlgebra:
    """Implicative algebra on a finite Heyting algebra; the separator
    defaults to the singleton of the top element."""
    if separator is None:
        separator = frozenset({heyting.top})
    return ImpAlgebra(heyting_implicative_structure(heyting), frozenset(separator))
