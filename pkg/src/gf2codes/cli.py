"""Command-line interface.

Exit codes: 0 for success (including an infeasible verdict, which is a
successful analysis), 1 when a ``verify`` replay does not establish its
claim, 2 for usage or input errors.  With ``--json`` every command emits a
report document {command, inputs, payload, version}; output is built
deterministically, so identical inputs give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .codes import (
    DEFAULT_ENUMERATION_CAP,
    LinearCode,
    WeightEnumerator,
    macwilliams_transform,
    parse_generator_text,
)
from .gf2core import Gf2Vector
from .moments import feasibility_check, moment_identities_check
from .prover import verify_lemma_2_6, verify_lemma_24_32_56, verify_theorem_a
from .search import DEFAULT_NODE_CAP, max_dimension_exhaustive
from .transforms import project, shorten

__all__ = ["run", "main"]


def _load_code(path: str) -> LinearCode:
    with open(path, "r", encoding="ascii") as handle:
        return LinearCode.from_rows(parse_generator_text(handle.read()))


def _emit(args: argparse.Namespace, command: str, inputs: dict, payload: dict,
          human: list[str]) -> None:
    if args.json:
        document = {
            "command": command,
            "inputs": inputs,
            "payload": payload,
            "version": __version__,
        }
        print(json.dumps(document, indent=2))
    else:
        for line in human:
            print(line)


def _distribution_payload(we: WeightEnumerator) -> dict:
    pairs = we.nonzero()
    return {"weights": [w for w, _ in pairs], "counts": [a for _, a in pairs]}


def _distribution_line(label: str, we: WeightEnumerator) -> str:
    pairs = we.nonzero()
    counts = ",".join(str(a) for _, a in pairs)
    weights = ",".join(str(w) for w, _ in pairs)
    return f"{label} {counts} at weights {weights}"


def _generator_payload(code: LinearCode) -> list[str]:
    return [str(row) for row in code.generator.rows]


def _cmd_analyze(args: argparse.Namespace) -> int:
    code = _load_code(args.path)
    we = code.weight_distribution(cap=args.cap)
    dual_we = macwilliams_transform(we, code.dimension)
    profile = code.predicate_profile()
    profile_payload = {
        "is_even": profile.is_even,
        "is_doubly_even": profile.is_doubly_even,
        "is_isotropic": profile.is_isotropic,
        "is_self_dual": profile.is_self_dual,
        "is_spanning": profile.is_spanning,
    }
    payload = {
        "n": code.n,
        "dimension": code.dimension,
        "weight_distribution": _distribution_payload(we),
        "dual_weight_distribution": _distribution_payload(dual_we),
        "profile": profile_payload,
    }
    human = [
        f"n={code.n} k={code.dimension}",
        _distribution_line("distribution", we),
        _distribution_line("dual distribution", dual_we),
        "profile: " + " ".join(f"{k[3:]}={'yes' if v else 'no'}"
                               for k, v in profile_payload.items()),
    ]
    _emit(args, "analyze", {"path": args.path}, payload, human)
    return 0


def _cmd_dual(args: argparse.Namespace) -> int:
    code = _load_code(args.path)
    dual = code.dual()
    payload = {"n": dual.n, "dimension": dual.dimension, "generator": _generator_payload(dual)}
    human = [f"n={dual.n} k={dual.dimension}"] + _generator_payload(dual)
    _emit(args, "dual", {"path": args.path}, payload, human)
    return 0


def _resolve_word(code: LinearCode, word: str) -> Gf2Vector:
    """A --word argument: explicit bits when it looks like a full row,
    otherwise a generator row index."""
    if word and set(word) <= {"0", "1"} and len(word) == code.n:
        return Gf2Vector.from_string(word)
    try:
        index = int(word)
    except ValueError:
        raise ValueError(
            f"--word must be a row index or a {code.n}-character bit string, got {word!r}"
        ) from None
    if not 0 <= index < code.dimension:
        raise ValueError(f"row index {index} outside [0, {code.dimension})")
    return code.generator.rows[index]


def _cmd_project(args: argparse.Namespace) -> int:
    code = _load_code(args.path)
    word = _resolve_word(code, args.word)
    result = project(code, word)
    payload = {
        "n": result.n,
        "dimension": result.dimension,
        "generator": _generator_payload(result),
        "note": f"dimension {code.dimension} -> {result.dimension}",
    }
    human = [
        f"n={result.n} k={result.dimension} (dimension {code.dimension} -> {result.dimension})",
    ] + _generator_payload(result)
    _emit(args, "project", {"path": args.path, "word": args.word}, payload, human)
    return 0


def _cmd_shorten(args: argparse.Namespace) -> int:
    code = _load_code(args.path)
    coords = _parse_ints(args.coords, "--coords")
    result = shorten(code, coords)
    payload = {
        "n": result.n,
        "dimension": result.dimension,
        "generator": _generator_payload(result),
        "note": f"dimension {code.dimension} -> {result.dimension}",
    }
    human = [
        f"n={result.n} k={result.dimension} (dimension {code.dimension} -> {result.dimension})",
    ] + _generator_payload(result)
    _emit(args, "shorten", {"path": args.path, "coords": coords}, payload, human)
    return 0


def _cmd_moments(args: argparse.Namespace) -> int:
    code = _load_code(args.path)
    report = moment_identities_check(code, cap=args.cap)
    payload = {
        "n": report.n,
        "dimension": report.d,
        "moments": list(report.moments),
        "a2_star": report.a2_star,
        "a3_star": report.a3_star,
        "identities": list(report.identity_status),
        "all_hold": report.all_hold,
    }
    human = [
        f"n={report.n} k={report.d}",
        f"moments (orders 0..3): {', '.join(str(m) for m in report.moments)}",
        f"a2_star={report.a2_star} a3_star={report.a3_star}",
        "identities: " + " ".join(
            f"eq{idx + 1}={'ok' if ok else 'FAIL'}" for idx, ok in enumerate(report.identity_status)
        ),
    ]
    _emit(args, "moments", {"path": args.path}, payload, human)
    return 0


def _cmd_feasibility(args: argparse.Namespace) -> int:
    weights = _parse_ints(args.weights, "--weights")
    verdict = feasibility_check(args.n, args.d, weights)
    payload = {
        "n": args.n,
        "d": args.d,
        "weights": list(weights),
        "status": verdict.status,
        "reason": verdict.reason,
        "witness": dict(verdict.witness) if verdict.witness is not None else None,
        "certificate": verdict.certificate,
    }
    human = [f"status: {verdict.status}", f"reason: {verdict.reason}"]
    if verdict.witness is not None:
        human.append(f"witness: {json.dumps(dict(verdict.witness))}")
    if verdict.certificate is not None:
        human.append(f"certificate: {verdict.certificate}")
    _emit(args, "feasibility", {"n": args.n, "d": args.d, "weights": list(weights)},
          payload, human)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.claim == "lemma-2-6":
        report = verify_lemma_2_6(args.d, _parse_range(args.n_range))
        inputs = {"claim": args.claim, "d": args.d, "n_range": args.n_range}
    elif args.claim == "lemma-24-32-56":
        report = verify_lemma_24_32_56()
        inputs = {"claim": args.claim}
    else:
        report = verify_theorem_a()
        inputs = {"claim": args.claim}
    payload = report.to_json_dict()
    human = [f"claim: {report.theorem}"]
    for step in report.steps:
        human.append(f"  [{'ok' if step.status else 'FAIL'}] {step.id}: {step.statement}")
    human.append(f"overall: {'PASS' if report.overall else 'FAIL'}")
    _emit(args, "verify", inputs, payload, human)
    return 0 if report.overall else 1


def _cmd_search(args: argparse.Namespace) -> int:
    weights = _parse_ints(args.weights, "--weights")
    result = max_dimension_exhaustive(args.n, weights, node_cap=args.node_cap)
    witness_rows = (
        [str(row) for row in result.witness.rows] if result.witness is not None else None
    )
    payload = {
        "n": result.n,
        "weights": list(result.weights),
        "max_dimension": result.max_dimension,
        "witness": witness_rows,
        "nodes_explored": result.nodes_explored,
        "complete": result.complete,
    }
    human = [
        f"max dimension {result.max_dimension} for weights "
        f"{{{','.join(str(w) for w in result.weights)}}} in F^{result.n}"
        + ("" if result.complete else " (INCOMPLETE: node cap reached)"),
    ]
    if witness_rows:
        human.extend(witness_rows)
    _emit(args, "search", {"n": args.n, "weights": list(weights),
                           "node_cap": args.node_cap}, payload, human)
    return 0


def _parse_ints(text: str, flag: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"{flag} expects comma-separated integers, got {text!r}") from None


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"--n-range expects A..B, got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise ValueError(f"--n-range expects A..B with integers, got {text!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit a JSON report document")
    common.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP, metavar="K",
                        help="refuse to enumerate codes of dimension above K "
                             f"(default {DEFAULT_ENUMERATION_CAP})")
    parser = argparse.ArgumentParser(
        prog="gf2codes",
        description="Exact analysis of binary linear codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common],
                       help="weight distribution, dual distribution, predicates")
    p.add_argument("path", help="generator matrix file ('0'/'1' rows)")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("dual", parents=[common], help="canonical generator of the dual code")
    p.add_argument("path")
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("project", parents=[common],
                       help="delete the support of a codeword")
    p.add_argument("path")
    p.add_argument("--word", required=True,
                   help="generator row index, or an explicit bit string (membership-checked)")
    p.set_defaults(func=_cmd_project)

    p = sub.add_parser("shorten", parents=[common],
                       help="subcode vanishing on given coordinates, coordinates deleted")
    p.add_argument("path")
    p.add_argument("--coords", required=True, help="comma-separated coordinate indices")
    p.set_defaults(func=_cmd_shorten)

    p = sub.add_parser("moments", parents=[common],
                       help="power moments and the four moment identities")
    p.add_argument("path")
    p.set_defaults(func=_cmd_moments)

    p = sub.add_parser("feasibility", parents=[common],
                       help="necessary-condition check for a weight set at (n, d)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--weights", required=True, help="comma-separated weights (1 to 4 of them)")
    p.set_defaults(func=_cmd_feasibility)

    p = sub.add_parser("verify", parents=[common], help="replay a dimension-bound argument")
    p.add_argument("claim", choices=["lemma-2-6", "lemma-24-32-56", "theorem-a"])
    p.add_argument("--d", type=int, default=10,
                   help="dimension to replay (lemma-2-6 only, default 10)")
    p.add_argument("--n-range", default="1..128",
                   help="length range A..B to scan (lemma-2-6 only, default 1..128)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", parents=[common],
                       help="exhaustive maximum dimension for a weight set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weights", required=True)
    p.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP)
    p.set_defaults(func=_cmd_search)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run())
