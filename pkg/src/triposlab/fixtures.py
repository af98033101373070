"""Canonical fixtures and the fixture file format.

A fixture file is a single JSON document with a "kind" discriminator
("tripos" or "algebra"). Subsets and filters are integer bitmasks (bit i set
<-> element i in the subset); tables are nested arrays in row-major element
order, so files are bit-exact and diff-friendly.
"""

from __future__ import annotations

import json

from .errors import MalformedFixture
from .implicative import ImpAlgebra, ImpStructure, heyting_algebra
from .order import FinHeyting, chain, diamond, lattice_structure
from .tripos import CodedTripos


def mask_to_set(mask: int) -> frozenset[int]:
    out = set()
    while mask:
        low = mask & -mask
        mask ^= low
        out.add(low.bit_length() - 1)
    return frozenset(out)


def set_to_mask(elems) -> int:
    m = 0
    for x in elems:
        m |= 1 << x
    return m


def forcing_tripos(h: FinHeyting) -> CodedTripos:
    """The presentation of a complete Heyting algebra: propositions are the
    lattice elements, connective codes are the lattice operations, subset
    codes fold meets/joins over the subset, and the filter is {top}."""
    n = h.size
    meet_code = []
    join_code = []
    for mask in range(1 << n):
        m, j = h.top, h.bot
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            x = low.bit_length() - 1
            m = h.meet[m][x]
            j = h.join[j][x]
        meet_code.append(m)
        join_code.append(j)
    return CodedTripos(
        sigma_size=n,
        and_code=h.meet,
        or_code=h.join,
        imp_code=h.imp,
        top_code=h.top,
        bot_code=h.bot,
        meet_code=tuple(meet_code),
        join_code=tuple(join_code),
        filter=frozenset({h.top}),
    )


def ch2() -> CodedTripos:
    """Forcing presentation of the 2-chain."""
    return forcing_tripos(lattice_structure(chain(2)))


def ch3() -> CodedTripos:
    """Forcing presentation of the 3-chain 0 < 1 < 2."""
    return forcing_tripos(lattice_structure(chain(3)))


def b4() -> CodedTripos:
    """Forcing presentation of the four-element Boolean diamond."""
    return forcing_tripos(lattice_structure(diamond()))


def one_point() -> CodedTripos:
    """Degenerate presentation: one proposition, all tables constant."""
    return CodedTripos(1, ((0,),), ((0,),), ((0,),), 0, 0, (0, 0), (0, 0),
                       frozenset({0}))


def chain_algebra(n: int) -> ImpAlgebra:
    """The n-chain Heyting algebra as an implicative algebra with top-only
    separator."""
    return heyting_algebra(lattice_structure(chain(n)))


# ------------------------------------------------------------------ file io

def tripos_to_json(t: CodedTripos, name: str) -> dict:
    return {
        "kind": "tripos",
        "name": name,
        "sigma_size": t.sigma_size,
        "and_code": [list(r) for r in t.and_code],
        "or_code": [list(r) for r in t.or_code],
        "imp_code": [list(r) for r in t.imp_code],
        "top_code": t.top_code,
        "bot_code": t.bot_code,
        "meet_code": list(t.meet_code),
        "join_code": list(t.join_code),
        "filter": set_to_mask(t.filter),
    }


def algebra_to_json(a: ImpAlgebra, name: str) -> dict:
    n = a.structure.size
    return {
        "kind": "algebra",
        "name": name,
        "size": n,
        "order": [[i, j] for i in range(n) for j in range(n)
                  if a.structure.rel[i][j]],
        "imp": [list(r) for r in a.structure.imp],
        "separator": set_to_mask(a.separator),
    }


def fixture_to_json(obj, name: str) -> dict:
    if isinstance(obj, CodedTripos):
        return tripos_to_json(obj, name)
    if isinstance(obj, ImpAlgebra):
        return algebra_to_json(obj, name)
    raise TypeError(f"not a fixture payload: {type(obj).__name__}")


def _require(doc: dict, key: str):
    if key not in doc:
        raise MalformedFixture(f"missing field: {key}")
    return doc[key]


def _int_matrix(doc, key) -> tuple[tuple[int, ...], ...]:
    raw = _require(doc, key)
    if not isinstance(raw, list) or any(not isinstance(r, list) for r in raw):
        raise MalformedFixture(f"{key} must be a nested array")
    if any(not isinstance(v, int) or isinstance(v, bool) for r in raw for v in r):
        raise MalformedFixture(f"{key} entries must be integers")
    return tuple(tuple(r) for r in raw)


def _int_field(doc, key) -> int:
    v = _require(doc, key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise MalformedFixture(f"{key} must be an integer")
    return v


def _int_vector(doc, key) -> tuple[int, ...]:
    raw = _require(doc, key)
    if not isinstance(raw, list) or any(
            not isinstance(v, int) or isinstance(v, bool) for v in raw):
        raise MalformedFixture(f"{key} must be an array of integers")
    return tuple(raw)


def tripos_from_json(doc: dict) -> CodedTripos:
    t = CodedTripos(
        sigma_size=_int_field(doc, "sigma_size"),
        and_code=_int_matrix(doc, "and_code"),
        or_code=_int_matrix(doc, "or_code"),
        imp_code=_int_matrix(doc, "imp_code"),
        top_code=_int_field(doc, "top_code"),
        bot_code=_int_field(doc, "bot_code"),
        meet_code=_int_vector(doc, "meet_code"),
        join_code=_int_vector(doc, "join_code"),
        filter=mask_to_set(_int_field(doc, "filter")),
    )
    t.validate()
    return t


def algebra_from_json(doc: dict) -> ImpAlgebra:
    n = _int_field(doc, "size")
    if n < 1:
        raise MalformedFixture("size must be positive")
    pairs = _require(doc, "order")
    if not isinstance(pairs, list):
        raise MalformedFixture("order must be an array of pairs")
    rel = [[False] * n for _ in range(n)]
    for p in pairs:
        if (not isinstance(p, list) or len(p) != 2
                or any(not isinstance(v, int) or isinstance(v, bool) for v in p)):
            raise MalformedFixture("order entries must be [i, j] pairs")
        i, j = p
        if not (0 <= i < n and 0 <= j < n):
            raise MalformedFixture(f"order pair out of range: {p}")
        rel[i][j] = True
    a = ImpAlgebra(
        structure=ImpStructure(tuple(tuple(r) for r in rel),
                               _int_matrix(doc, "imp")),
        separator=mask_to_set(_int_field(doc, "separator")),
    )
    a.validate_shape()
    return a


def fixture_from_json(doc) -> tuple[str, str, object]:
    """Parse a fixture document; returns (kind, name, payload)."""
    if not isinstance(doc, dict):
        raise MalformedFixture("fixture must be a JSON object")
    kind = _require(doc, "kind")
    name = doc.get("name", "")
    if kind == "tripos":
        return kind, name, tripos_from_json(doc)
    if kind == "algebra":
        return kind, name, algebra_from_json(doc)
    raise MalformedFixture(f"unknown fixture kind: {kind!r}")


def load_fixture(path) -> tuple[str, str, object]:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise MalformedFixture(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise MalformedFixture(f"invalid JSON in {path}: {e}") from e
    return fixture_from_json(doc)


def dump_fixture(obj, name: str, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(fixture_to_json(obj, name), fh, indent=2)
        fh.write("\n")
