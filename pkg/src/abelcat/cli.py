"""Command line entry point ``abelcat``.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .diagram import Bounds, check_diagram, lemma_suites
from .document import InputDocument, parse_input
from .embedding import check_embedding
from .errors import AbelcatError, CapExceeded, InvalidInput, ParseError, VerificationFailure
from .fpmod import DEFAULT_CAP, Matrix, snf
from .injectivity import (envelope_minimal, inclusion_universe, injective_envelope,
                          injectivity_verdict)
from .report import Report

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _load(path: str) -> InputDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InvalidInput(f"cannot read {path}: {e.strerror}") from e
    return parse_input(text)


def _snf_report(label: str, M: Matrix) -> Report:
    res = snf(M)
    checks = {
        "D = U M V": res.U @ M @ res.V == res.D,
        "det U = +-1": abs(res.U.det()) == 1,
        "det V = +-1": abs(res.V.det()) == 1,
    }
    return Report(label, all(checks.values()), {
        **checks, "diagonal": list(res.diagonal), "rank": res.rank,
        "U": res.U.tolist(), "V": res.V.tolist(), "D": res.D.tolist()})


def cmd_check(args) -> Report:
    doc = _load(args.document)
    return check_diagram(doc.cat, doc.diagram())


def cmd_snf(args) -> Report:
    children = []
    if args.matrix is not None:
        try:
            rows = json.loads(args.matrix)
            M = Matrix(rows, len(rows[0]) if rows else 0)
        except (json.JSONDecodeError, TypeError, IndexError, ValueError) as e:
            raise InvalidInput(f"--matrix must be a JSON list of integer rows: {e}") from e
        children.append(_snf_report("matrix", M))
    if args.document is not None:
        doc = _load(args.document)
        for name, A in sorted(doc.objects.items()):
            r = _snf_report(name, A.full_relations)
            free, tors = A.invariant_factors
            r.details.update({"free_rank": free, "invariant_factors": list(tors),
                              "module": str(A)})
            children.append(r)
    if not children:
        raise InvalidInput("snf needs a document or --matrix")
    return Report.group("smith normal form", children)


def _subcategory(args, doc: InputDocument) -> list[str]:
    names = args.subcategory or doc.subcategory or sorted(doc.objects)
    for n in names:
        if n not in doc.objects:
            raise InvalidInput(f"unknown object {n!r} in subcategory")
    return names


def cmd_embed(args) -> Report:
    doc = _load(args.document)
    if doc.ring.modulus is None:
        raise InvalidInput("embed needs a document over Z/n")
    names = _subcategory(args, doc)
    count = 20 if args.count is None else args.count
    rep = check_embedding(doc.cat, {n: doc.objects[n] for n in names}, seed=args.seed,
                          ses_count=count, nonexact_count=count, sample_count=count,
                          cap=args.max_card)
    rep.checks.details.update({k: v for k, v in rep.to_dict().items()
                               if k not in ("checks", "passed")})
    return rep.checks


def cmd_injective(args) -> Report:
    doc = _load(args.document)
    n = doc.ring.modulus
    if n is None:
        raise InvalidInput("injective needs a document over Z/n")
    names = args.object or sorted(doc.objects)
    for name in names:
        if name not in doc.objects:
            raise InvalidInput(f"unknown object {name!r}")
    universe = inclusion_universe(n) if args.brute else None
    children = []
    for name in names:
        A = doc.objects[name]
        v = injectivity_verdict(A, universe, args.max_card)
        details: dict[str, Any] = v.to_dict()
        details["object"] = name
        details["module"] = str(A)
        ok = v.agree
        if args.envelope:
            try:
                E, m = injective_envelope(A, args.max_card)
                minimal = envelope_minimal(m, args.max_card)
                details["envelope"] = {"module": str(E), "gens": E.gens,
                                       "relations": [list(c) for c in E.relations.columns()],
                                       "map": m.payload.tolist(), "minimal": minimal}
                ok = ok and minimal
            except VerificationFailure as e:
                details["envelope"] = {"error": str(e)}
                ok = False
        children.append(Report(name, ok, details))
    return Report.group("injectivity", children)


def cmd_lemmas(args) -> Report:
    count = 100 if args.count is None else args.count
    return lemma_suites(args.seed, count, Bounds())


COMMANDS = {"check": cmd_check, "snf": cmd_snf, "embed": cmd_embed,
            "injective": cmd_injective, "lemmas": cmd_lemmas}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--count", type=int, default=None)
    common.add_argument("--max-card", type=int, default=DEFAULT_CAP,
                        help="largest set enumerated before giving up")
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="abelcat",
                                description="Check abelian-category claims about modules.")
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("check", parents=[common], help="commutativity and exactness claims")
    c.add_argument("document")
    c = sub.add_parser("snf", parents=[common], help="Smith normal forms")
    c.add_argument("document", nargs="?")
    c.add_argument("--matrix", help="JSON list of integer rows")
    c = sub.add_parser("embed", parents=[common], help="verify Hom(P, -) on a subcategory")
    c.add_argument("document")
    c.add_argument("--subcategory", nargs="+")
    c = sub.add_parser("injective", parents=[common], help="injectivity verdicts")
    c.add_argument("document")
    c.add_argument("--object", nargs="+")
    c.add_argument("--envelope", action="store_true")
    c.add_argument("--brute", action="store_true",
                   help="also run the extension oracle over small submodule inclusions")
    sub.add_parser("lemmas", parents=[common], help="randomized lemma suites")
    return p


def emit(report: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), sort_keys=True, indent=2, default=str)
    return report.render()


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = COMMANDS[args.command](args)
    except (ParseError, InvalidInput, CapExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except AbelcatError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT if not isinstance(e, VerificationFailure) else EXIT_FAIL
    print(emit(report, args.format))
    return EXIT_PASS if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
