"""Command line surface.

Exit codes: 0 on success, 1 when a verification fails (an invalid object, a
failing map check, or a failing reference fact), 2 on input errors.  All
commands accept --seed (shuffles search tie-breaking; verdicts are invariant)
and --workers (reserved capacity bound; the engine is single-process and
verdicts never depend on it).
"""

from __future__ import annotations

import argparse
import sys
from typing import Any

from . import arrows, constructions, documents, reference, structures, tournaments
from .orders import Chain, ChainMap, InputError
from .structures import Morphism, Signature

OK, VERIFICATION_FAILED, INPUT_ERROR = 0, 1, 2


def _jsonable(value: Any) -> Any:
    if isinstance(value, frozenset):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


def _emit(doc: Any) -> None:
    sys.stdout.write(documents.dumps(_jsonable(doc)))


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _load_object(path: str):
    return documents.loads_object(_read_text(path))


def _load_map(path: str) -> tuple[int, ...]:
    import json

    try:
        doc = json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise documents.DocumentError("$", f"invalid JSON: {exc}") from None
    return documents.parse_morphism_map(doc)


def _parse_signature_arg(text: str) -> Signature:
    symbols = []
    for part in text.split(","):
        if ":" not in part:
            raise InputError(f"signature entries look like name:arity, got {part!r}")
        name, _, arity = part.partition(":")
        try:
            symbols.append((name.strip(), int(arity)))
        except ValueError:
            raise InputError(f"bad arity in signature entry {part!r}") from None
    return Signature(tuple(symbols))


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_validate(args) -> int:
    import json

    doc = json.loads(_read_text(args.file))
    if args.kind is not None:
        doc = dict(doc)
        doc["kind"] = args.kind
    violation = documents.validate_document(doc)
    if violation is None:
        _emit({"valid": True, "kind": documents.document_kind(doc)})
        return OK
    _emit(
        {
            "valid": False,
            "kind": documents.document_kind(doc),
            "rule": violation.rule,
            "witness": violation.witness,
        }
    )
    return VERIFICATION_FAILED


def _cmd_enum_homs(args) -> int:
    a, b = _load_object(args.dom), _load_object(args.cod)
    homs = structures.enum_morphisms(a, b, args.kind)
    _emit({"count": len(homs), "kind": args.kind, "morphisms": [list(f.map) for f in homs]})
    return OK


def _cmd_check_map(args) -> int:
    a, b = _load_object(args.dom), _load_object(args.cod)
    f = Morphism(a, b, _load_map(args.map))
    failure = structures.check_morphism(f, args.kind)
    if failure is None:
        _emit({"pass": True, "kind": args.kind})
        return OK
    _emit({"pass": False, "kind": args.kind, "clause": failure.clause, "witness": failure.witness})
    return VERIFICATION_FAILED


_BUILD_KINDS = {
    "cycle3": "graph",
    "cycle4": "graph",
    "tournament-c3": "tournament",
    "tournament-c3plus": "tournament",
    "thm7-A": "tournament",
    "thm7-B": "tournament",
}


def _cmd_build(args) -> int:
    name, params = args.name, list(args.params)

    def want(n: int) -> list[str]:
        if len(params) != n:
            raise InputError(f"build {name} expects {n} parameter(s), got {len(params)}")
        return params

    if name in constructions.NAMED_OBJECTS:
        want(0)
        obj = constructions.build_named(name)
        _emit(documents.format_object(obj, _BUILD_KINDS[name]))
        return OK
    try:
        if name == "empty-binary":
            (n,) = want(1)
            obj = constructions.empty_reflexive_binary(int(n))
            _emit(documents.format_object(obj, "reflexive"))
            return OK
        if name == "empty":
            (n,) = want(1)
            if args.signature is None:
                raise InputError("build empty requires --signature name:arity,...")
            obj = constructions.empty_structure(_parse_signature_arg(args.signature), int(n))
            _emit(documents.format_object(obj, "structure"))
            return OK
        if name == "uniform-metric":
            n, delta = want(2)
            _emit(documents.format_object(constructions.uniform_metric(int(n), float(delta))))
            return OK
        if name == "tensor":
            r, n = want(2)
            obj = constructions.tensor_erst(int(r), int(n))
            _emit(documents.format_object(obj, "erst"))
            return OK
        if name == "boxtensor":
            r, n = want(2)
            _emit(documents.format_object(constructions.boxtensor_hypergraph(int(r), int(n))))
            return OK
    except InputError:
        raise
    except ValueError as exc:
        raise InputError(f"bad numeric parameter for build {name}: {exc}") from None
    raise InputError(
        f"unknown build name {name!r}; known: "
        f"{sorted(constructions.NAMED_OBJECTS) + ['empty-binary', 'empty', 'uniform-metric', 'tensor', 'boxtensor']}"
    )


def _cmd_preadjoint(args) -> int:
    a = _load_object(args.target)
    u = _load_map(args.map)
    rel = constructions.sal_relation_order(a)
    phi = constructions.preadjoint(ChainMap(Chain(len(u)), Chain(len(rel)), u), a)
    doc = documents.format_morphism(phi)
    doc["dom"] = documents.format_object(phi.dom, "erst")
    doc["cod"] = documents.format_object(phi.cod, "erst")
    _emit(doc)
    return OK


def _cmd_functor(args) -> int:
    obj = _load_object(args.object)
    if args.pair == "hgr-erst":
        if args.direction == "fwd":
            out = constructions.hypergraph_to_erst(obj)
            _emit(documents.format_object(out, "erst"))
        else:
            out = constructions.erst_to_hypergraph(obj)
            _emit(documents.format_object(out))
    else:
        if args.direction == "fwd":
            out = constructions.dagger(obj)
            _emit(documents.format_object(out, "erst"))
        else:
            out = constructions.star(obj)
            _emit(documents.format_object(out, "reflexive"))
    return OK


def _verdict_doc(verdict: arrows.ArrowVerdict) -> dict:
    doc: dict = {"holds": verdict.holds, "degenerate": verdict.degenerate}
    if verdict.detail:
        doc["detail"] = verdict.detail
    if verdict.coloring is not None:
        doc["coloring"] = {str(i): c for i, c in enumerate(verdict.coloring)}
    return doc


def _cmd_check_arrow(args) -> int:
    big = _load_object(args.big)
    middle = _load_object(args.middle)
    small = _load_object(args.small)
    problem = arrows.ArrowProblem(big, middle, small, args.colors, args.kind)
    verdict = arrows.check_arrow(problem, seed=args.seed)
    _emit(_verdict_doc(verdict))
    return OK


def _cmd_search_ramsey(args) -> int:
    middle = _load_object(args.middle)
    small = _load_object(args.small)
    generator = arrows.object_generator(
        args.generator, start=args.start, delta=args.delta, r=args.arity
    )
    result = arrows.search_ramsey_object(
        middle, small, args.colors, args.kind, generator, args.bound, seed=args.seed
    )
    doc: dict = {"index": result.index}
    doc["found"] = None if result.found is None else documents.format_object(result.found)
    if result.verdict is not None:
        doc["verdict"] = _verdict_doc(result.verdict)
    _emit(doc)
    return OK


def _cmd_tournament(args) -> int:
    if args.subcommand == "critical-pairs":
        s1, s2 = _load_object(args.first), _load_object(args.second)
        pairs = tournaments.critical_pairs(s1, s2)
        _emit({"count": len(pairs), "pairs": [[list(p.ij), list(p.uv)] for p in pairs]})
        return OK
    if args.subcommand == "matrix-scan":
        if args.pairs is not None:
            import json

            raw = json.loads(_read_text(args.pairs))
            pairs = [tuple(p) for p in raw]
        else:
            s1, s2 = _load_object(args.first), _load_object(args.second)
            pairs = tournaments.critical_pairs(s1, s2)
        matrices = tournaments.matrix_scan(pairs, args.rows, args.cols)
        _emit({"count": len(matrices), "matrices": [[list(r) for r in m] for m in matrices]})
        return OK
    if args.subcommand == "siblings":
        s1, s2 = _load_object(args.first), _load_object(args.second)
        witness = tournaments.siblings_witness_search(s1, s2, args.max_n)
        _emit(
            {
                "found": None
                if witness is None
                else documents.format_object(witness, "tournament")
            }
        )
        return OK
    if args.subcommand == "counterexample":
        t = (
            constructions.build_named("thm7-B")
            if args.object is None
            else _load_object(args.object)
        )
        report = tournaments.verify_tournament_counterexample(t)
        _emit(
            {
                "passed": report.passed,
                "completion": report.completion,
                "colorings": report.num_colorings,
                "factorizations": report.num_factorizations,
                "rows": [
                    {"map": list(m), "phi_color": cp, "psi_color": cq}
                    for m, cp, cq in report.rows
                ],
                "arrow_holds": report.arrow_verdict.holds,
            }
        )
        return OK if report.passed else VERIFICATION_FAILED
    raise InputError(f"unknown tournament subcommand {args.subcommand!r}")


def _cmd_verify_paper(args) -> int:
    report = reference.verify_paper()
    _emit(
        {
            "all_pass": report.all_passed,
            "checks": [
                {"name": c.name, "pass": c.passed, "detail": c.detail}
                for c in report.checks
            ],
        }
    )
    return OK if report.all_passed else VERIFICATION_FAILED


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="shuffle search tie-breaking")
    common.add_argument("--workers", type=int, default=1, help="reserved worker bound")

    parser = argparse.ArgumentParser(
        prog="dualramsey",
        description="order calculus, morphism checking, and arrow search over "
        "finite linearly ordered relational structures",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="validate an object document")
    p.add_argument("file")
    p.add_argument("--kind", default=None, help="override the document's kind tag")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("enum-homs", parents=[common], help="list all morphisms of a kind")
    p.add_argument("dom")
    p.add_argument("cod")
    p.add_argument("--kind", required=True)
    p.set_defaults(handler=_cmd_enum_homs)

    p = sub.add_parser("check-map", parents=[common], help="check one map against a kind")
    p.add_argument("dom")
    p.add_argument("cod")
    p.add_argument("map")
    p.add_argument("--kind", required=True)
    p.set_defaults(handler=_cmd_check_map)

    p = sub.add_parser("build", parents=[common], help="emit a named or parametric object")
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    p.add_argument("--signature", default=None, help="for build empty: name:arity,...")
    p.set_defaults(handler=_cmd_build)

    p = sub.add_parser(
        "preadjoint", parents=[common], help="expand a rigid surjection into a quotient map"
    )
    p.add_argument("target", help="single-relation structure document")
    p.add_argument("map", help="morphism document onto the sal-ordered relation")
    p.set_defaults(handler=_cmd_preadjoint)

    p = sub.add_parser("functor", parents=[common], help="apply one of the functor pairs")
    p.add_argument("object")
    p.add_argument("--pair", choices=("hgr-erst", "dagger-star"), required=True)
    p.add_argument("--dir", dest="direction", choices=("fwd", "back"), required=True)
    p.set_defaults(handler=_cmd_functor)

    p = sub.add_parser("check-arrow", parents=[common], help="decide one arrow instance")
    p.add_argument("big")
    p.add_argument("middle")
    p.add_argument("small")
    p.add_argument("--colors", "--k", dest="colors", type=int, required=True)
    p.add_argument("--kind", required=True)
    p.set_defaults(handler=_cmd_check_arrow)

    p = sub.add_parser(
        "search-ramsey", parents=[common], help="scan a family for the first HOLDS object"
    )
    p.add_argument("middle")
    p.add_argument("small")
    p.add_argument("--colors", "--k", dest="colors", type=int, required=True)
    p.add_argument("--kind", required=True)
    p.add_argument("--generator", choices=arrows.GENERATOR_NAMES, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--start", type=int, default=1)
    p.add_argument("--delta", type=float, default=1.0)
    p.add_argument("--arity", type=int, default=2)
    p.set_defaults(handler=_cmd_search_ramsey)

    p = sub.add_parser("tournament", parents=[common], help="tournament toolbox")
    tsub = p.add_subparsers(dest="subcommand", required=True)
    q = tsub.add_parser("critical-pairs", parents=[common])
    q.add_argument("first")
    q.add_argument("second")
    q.set_defaults(handler=_cmd_tournament, subcommand="critical-pairs")
    q = tsub.add_parser("matrix-scan", parents=[common])
    q.add_argument("--rows", type=int, default=3)
    q.add_argument("--cols", type=int, default=4)
    q.add_argument("--pairs", default=None, help="JSON file of [[i,j],[u,v]] pairs")
    q.add_argument("--first", default=None)
    q.add_argument("--second", default=None)
    q.set_defaults(handler=_cmd_tournament, subcommand="matrix-scan")
    q = tsub.add_parser("siblings", parents=[common])
    q.add_argument("first")
    q.add_argument("second")
    q.add_argument("--max-n", type=int, required=True)
    q.set_defaults(handler=_cmd_tournament, subcommand="siblings")
    q = tsub.add_parser("counterexample", parents=[common])
    q.add_argument("object", nargs="?", default=None)
    q.set_defaults(handler=_cmd_tournament, subcommand="counterexample")

    p = sub.add_parser(
        "verify-paper", parents=[common], help="recompute the pinned reference facts"
    )
    p.set_defaults(handler=_cmd_verify_paper)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers < 1:
        parser.error("--workers must be at least 1")
    try:
        return args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except Exception as exc:  # malformed JSON and friends
        import json

        if isinstance(exc, json.JSONDecodeError):
            print(f"error: invalid JSON: {exc}", file=sys.stderr)
            return INPUT_ERROR
        raise


if __name__ == "__main__":
    sys.exit(main())
