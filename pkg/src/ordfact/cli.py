"""Command-line front end; a thin client over the service handlers."""

from __future__ import annotations

import argparse
import json
import sys

from pydantic import ValidationError

from .contexts import ContextError
from .galois import AdjunctionError
from .order import OrderError, PosetWitness, poset_to_dot, preorder_from_json
from .schemas import (
    CheckRequest,
    ConceptsRequest,
    DiamondRequest,
    FactorizeRequest,
    LawsRequest,
    QuotientRequest,
)
from .service import (
    handle_check,
    handle_concepts,
    handle_diamond,
    handle_factorize,
    handle_laws,
    handle_quotient,
)

USAGE_ERROR = 2
VERIFY_ERROR = 1


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        print(f"cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _read_json(path: str) -> dict:
    text = _read_file(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        print(f"malformed JSON in {path}: {exc}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _emit(model) -> None:
    print(json.dumps(model.model_dump(), indent=2, sort_keys=True))


def _write_dot(path: str | None, dot: str) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dot)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordfact",
        description="Verify and factor Galois connections on finite preorders.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify an adjunction and print its class")
    p.add_argument("input")

    p = sub.add_parser("factorize", help="polar factorization of an adjunction")
    p.add_argument("input")
    p.add_argument("--flavor", choices=["full", "closed", "open"], default="full")
    p.add_argument("--dot", metavar="OUT")

    p = sub.add_parser("diamond", help="diamond diagram of an adjunction")
    p.add_argument("input")
    p.add_argument("--dot", metavar="OUT")

    p = sub.add_parser("quotient", help="quotient a preorder to its poset")
    p.add_argument("input")
    p.add_argument("--dot", metavar="OUT")

    p = sub.add_parser("concepts", help="concept lattice of a .cxt context")
    p.add_argument("input")
    p.add_argument("--dot", metavar="OUT")

    p = sub.add_parser("laws", help="run the factorization-system and fibration laws")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size-cap", type=int, default=4)
    p.add_argument("--samples", type=int, default=25)

    return parser


def run(argv: list[str]) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            req = CheckRequest(adjunction=_read_json(args.input))
            _emit(handle_check(req))
            return 0
        if args.command == "factorize":
            req = FactorizeRequest(
                adjunction=_read_json(args.input), flavor=args.flavor
            )
            res = handle_factorize(req)
            _emit(res)
            _write_dot(
                args.dot,
                poset_to_dot(
                    PosetWitness(preorder_from_json(res.axis.model_dump()))
                ),
            )
            return 0
        if args.command == "diamond":
            req = DiamondRequest(adjunction=_read_json(args.input))
            res = handle_diamond(req)
            _emit(res)
            _write_dot(
                args.dot,
                poset_to_dot(
                    PosetWitness(
                        preorder_from_json(res.objects["axis"].model_dump())
                    )
                ),
            )
            return 0
        if args.command == "quotient":
            req = QuotientRequest(preorder=_read_json(args.input))
            res = handle_quotient(req)
            _emit(res)
            _write_dot(
                args.dot,
                poset_to_dot(
                    PosetWitness(preorder_from_json(res.poset.model_dump()))
                ),
            )
            return 0
        if args.command == "concepts":
            req = ConceptsRequest(cxt=_read_file(args.input))
            res = handle_concepts(req)
            _emit(res)
            _write_dot(args.dot, res.dot)
            return 0
        if args.command == "laws":
            req = LawsRequest(
                seed=args.seed, size_cap=args.size_cap, samples=args.samples
            )
            res = handle_laws(req)
            _emit(res)
            if not res.passed:
                for section in (res.factorization_system, res.fibration_axioms):
                    for name, rec in section.items():
                        for failure in rec.failures:
                            print(f"{name}: {failure}", file=sys.stderr)
                return VERIFY_ERROR
            return 0
    except ValidationError as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ContextError as exc:
        print(f"malformed context: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except AdjunctionError as exc:
        if exc.witness is not None:
            print(f"verification failure at {exc.witness!r}: {exc}", file=sys.stderr)
        else:
            print(f"verification failure: {exc}", file=sys.stderr)
        return VERIFY_ERROR
    except OrderError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return VERIFY_ERROR
    raise AssertionError("unreachable command")


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
