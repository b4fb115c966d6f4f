"""``leavitt`` command line tool.

    leavitt classify FILE
    leavitt nf FILE -e EXPR
    leavitt mul FILE -e EXPR -e EXPR
    leavitt basis FILE
    leavitt decompose FILE
    leavitt verify FILE [--samples N] [--seed S] [--field q|gf:p]
    leavitt witness-pi FILE --depth N

Every command prints one JSON object.  Exit codes: 0 success, 1 parse or
semantic error, 2 precondition violation, 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
import warnings
from pathlib import Path as FilePath

from . import oracle, structure, verify
from .algebra import LeavittPathAlgebra
from .dsl import ZeroProductWarning, parse_document, parse_element
from .errors import (
    BoundedFamily,
    CyclicGraph,
    DSLError,
    InfiniteDimensional,
    NotAcyclic,
    NotSemisimpleShape,
)
from .family import Finite
from .fields import field_from_spec

SCHEMA = 1

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_VERIFY = 0, 1, 2, 3


class Precondition(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors, which would collide with EXIT_PRECONDITION
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _load(path: str):
    try:
        text = FilePath(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DSLError(f"cannot read {path}: {exc}") from None
    return parse_document(text)


def _finite_algebra(doc, field_spec: str) -> LeavittPathAlgebra:
    if not isinstance(doc.family, Finite):
        raise Precondition(f"{doc.name} is a {doc.kind} family; elements need a finite graph")
    return LeavittPathAlgebra(doc.family.graph, field_from_spec(field_spec))


def _parse_elements(exprs, algebra):
    out, notes = [], []
    for expr in exprs:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", ZeroProductWarning)
            out.append(parse_element(expr, algebra))
        notes.extend(str(w.message) for w in caught if issubclass(w.category, ZeroProductWarning))
    return out, notes


def _element_json(x) -> dict:
    return {
        "text": str(x),
        "terms": [[str(m), x.algebra.field.format(c)] for m, c in x.terms.items()],
    }


def cmd_classify(args) -> tuple[int, dict]:
    doc = _load(args.file)
    report = structure.classify(doc.family)
    payload = {"name": doc.name, "kind": doc.kind}
    payload.update(report.to_json())
    payload["audit"] = structure.implication_audit(report)
    return EXIT_OK, payload


def cmd_nf(args) -> tuple[int, dict]:
    doc = _load(args.file)
    algebra = _finite_algebra(doc, args.field)
    (x,), notes = _parse_elements(args.expr, algebra)
    return EXIT_OK, {"name": doc.name, "field": algebra.field.name, "normal_form": _element_json(x), "warnings": notes}


def cmd_mul(args) -> tuple[int, dict]:
    doc = _load(args.file)
    algebra = _finite_algebra(doc, args.field)
    (x, y), notes = _parse_elements(args.expr, algebra)
    return EXIT_OK, {
        "name": doc.name,
        "field": algebra.field.name,
        "left": _element_json(x),
        "right": _element_json(y),
        "product": _element_json(x * y),
        "warnings": notes,
    }


def cmd_basis(args) -> tuple[int, dict]:
    doc = _load(args.file)
    algebra = _finite_algebra(doc, args.field)
    basis = algebra.basis()
    return EXIT_OK, {"name": doc.name, "dimension": len(basis), "basis": [str(m) for m in basis]}


def cmd_decompose(args) -> tuple[int, dict]:
    doc = _load(args.file)
    desc = structure.matrix_decomposition(doc.family)
    return EXIT_OK, {
        "name": doc.name,
        "decomposition": desc.to_json(preview=args.preview),
        "boundedness": structure.profile_to_json(desc.boundedness),
    }


def cmd_verify(args) -> tuple[int, dict]:
    doc = _load(args.file)
    field = field_from_spec(args.field)
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("LEAVITT_SEED", "0"))
    results = verify.run_all(doc.family, random.Random(seed), args.samples, field)
    ok = all(r.passed for r in results)
    payload = {
        "name": doc.name,
        "field": field.name,
        "seed": seed,
        "samples": args.samples,
        "passed": ok,
        "suites": [r.to_json() for r in results],
    }
    return (EXIT_OK if ok else EXIT_VERIFY), payload


def cmd_witness_pi(args) -> tuple[int, dict]:
    doc = _load(args.file)
    seq = oracle.strong_pi_witness(doc.family, args.depth)
    return EXIT_OK, {
        "name": doc.name,
        "depth": args.depth,
        "block_sizes": list(seq.sizes),
        "k_profile": list(seq.k_profile),
        "strictly_increasing": seq.strictly_increasing,
    }


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="leavitt", description="Leavitt path algebra toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="graph or family document")
        p.set_defaults(func=func)
        return p

    add("classify", cmd_classify, "ring-theoretic verdicts for the graph")
    p = add("nf", cmd_nf, "normal form of an element")
    p.add_argument("-e", dest="expr", action="append", required=True)
    p.add_argument("--field", default="q")
    p = add("mul", cmd_mul, "product of two elements")
    p.add_argument("-e", dest="expr", action="append", required=True)
    p.add_argument("--field", default="q")
    p = add("basis", cmd_basis, "normal-form basis of a finite acyclic graph")
    p.add_argument("--field", default="q")
    p = add("decompose", cmd_decompose, "matrix block decomposition")
    p.add_argument("--preview", type=int, default=8, help="blocks shown for infinite families")
    p = add("verify", cmd_verify, "run the property suites")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--field", default="q")
    p = add("witness-pi", cmd_witness_pi, "strong pi-regularity failure witness")
    p.add_argument("--depth", type=int, required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("nf",) and len(args.expr) != 1:
        parser.error("nf takes exactly one -e")
    if args.command == "mul" and len(args.expr) != 2:
        parser.error("mul takes exactly two -e")
    try:
        code, payload = args.func(args)
    except (DSLError, ValueError) as exc:
        code, payload = EXIT_PARSE, {"error": type(exc).__name__, "message": str(exc)}
    except (Precondition, CyclicGraph, NotAcyclic, InfiniteDimensional, NotSemisimpleShape, BoundedFamily) as exc:
        name = "Precondition" if isinstance(exc, Precondition) else type(exc).__name__
        code, payload = EXIT_PRECONDITION, {"error": name, "message": str(exc)}
    out = {"schema": SCHEMA, "command": args.command}
    out.update(payload)
    sys.stdout.write(json.dumps(out, indent=2) + "\n")
    if "error" in payload:
        print(f"leavitt: {payload['error']}: {payload['message']}", file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
