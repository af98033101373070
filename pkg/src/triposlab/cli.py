"""Batch front door: validate fixtures, run law suites, extract algebras,
certify isomorphisms, induce presentations, and emit the canonical fixtures.

Reports go to stdout as JSON; diagnostics go to stderr. Exit codes: 0 all
checks pass, 1 some law or certificate failed (report still emitted), 2
malformed input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import extraction, fixtures, laws
from .errors import MalformedFixture, NotValidAlgebra, TriposLabError
from .implicative import ImpAlgebra, induced_tripos, validate_separator, \
    validate_structure
from .report import CheckBudget, LawEntry, LawReport


def _emit(report: LawReport) -> int:
    print(report.dumps())
    return 0 if report.overall_pass else 1


def _load(path, want_kind: str):
    kind, name, obj = fixtures.load_fixture(path)
    if kind != want_kind:
        raise MalformedFixture(
            f"{path}: expected a {want_kind} fixture, found {kind}")
    return name, obj


def _budget(args) -> CheckBudget:
    return CheckBudget(max_ctx=args.max_ctx, samples=args.samples,
                       seed=args.seed)


def _cmd_validate(args) -> int:
    kind, name, _ = fixtures.load_fixture(args.file)
    print(json.dumps({"kind": kind, "name": name, "status": "ok"}, indent=2))
    return 0


def _cmd_laws(args) -> int:
    _, t = _load(args.file, "tripos")
    return _emit(laws.run_all(t, _budget(args)))


def _cmd_extract(args) -> int:
    name, t = _load(args.file, "tripos")
    ex = extraction.extract(t)
    fixtures.dump_fixture(ex.algebra, f"{name}-extracted" if name else "extracted",
                          args.output)
    return _emit(ex.report)


def _cmd_iso(args) -> int:
    _, t = _load(args.file, "tripos")
    report = extraction.iso_check(t)
    if t.sigma_size <= extraction.XCODE_SIGMA_CAP:
        report = report + extraction.check_extracted_codes(t)
    else:
        report = report + LawReport(tuple(
            LawEntry(law_id, "skipped",
                     {"reason": f"sigma_size {t.sigma_size} > "
                                f"{extraction.XCODE_SIGMA_CAP}"})
            for law_id in ("xcode.imp_quotient_lemma",
                           "xcode.meet_code_is_forall",
                           "xcode.forall_transfer",
                           "xcode.imp_transfer",
                           "xcode.imp_heyting_quotient")))
    return _emit(report)


def _algebra_validation(a: ImpAlgebra) -> LawReport:
    return validate_structure(a.structure) + validate_separator(a)


def _cmd_induce(args) -> int:
    name, a = _load(args.file, "algebra")
    try:
        t = induced_tripos(a)
    except NotValidAlgebra:
        return _emit(_algebra_validation(a))
    fixtures.dump_fixture(t, f"{name}-induced" if name else "induced",
                          args.output)
    return _emit(_algebra_validation(a))


def _cmd_roundtrip(args) -> int:
    _, a = _load(args.file, "algebra")
    try:
        return _emit(extraction.roundtrip_report(a))
    except NotValidAlgebra:
        return _emit(_algebra_validation(a))


def _cmd_fixtures(args) -> int:
    out = Path(args.directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, build in (("ch2", fixtures.ch2), ("ch3", fixtures.ch3),
                        ("b4", fixtures.b4)):
        path = out / f"{name}.json"
        fixtures.dump_fixture(build(), name, path)
        written.append(str(path))
    print(json.dumps({"written": written}, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triposlab",
        description="finite tripos presentations: law checking, implicative "
                    "algebra extraction, isomorphism certificates")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="structural invariants of a fixture")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("laws", help="run the full law suite on a tripos fixture")
    p.add_argument("file")
    p.add_argument("--max-ctx", type=int, default=2)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_laws)

    p = sub.add_parser("extract",
                       help="extract the implicative algebra of a tripos fixture")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("iso", help="certify the extraction isomorphism")
    p.add_argument("file")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("induce",
                       help="emit the tripos presentation induced by an algebra")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_induce)

    p = sub.add_parser("roundtrip",
                       help="induce, extract, and certify against the induced "
                            "presentation")
    p.add_argument("file")
    p.set_defaults(func=_cmd_roundtrip)

    p = sub.add_parser("fixtures", help="write the canonical fixtures")
    p.add_argument("directory")
    p.set_defaults(func=_cmd_fixtures)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except TriposLabError as e:
        print(f"triposlab: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
