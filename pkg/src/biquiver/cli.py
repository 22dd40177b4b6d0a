"""Command-line front end with deterministic JSON output.

Every subcommand prints a single JSON document on stdout. Output is
byte-identical for identical inputs and flags: all randomness derives from
--seed, keys are sorted, and rationals are printed as exact "p/q" strings.
Exit codes: 0 success, 1 usage error, 2 parse/validation error,
3 precondition violation.
"""
from __future__ import annotations

import argparse
import json
import sys

from .classify import representation_type
from .conjugation import (DashEliminationPlan, apply_conjugations,
                          conjugate_biquiver, conjugate_representation,
                          dash_elimination_plan)
from .errors import FormatError, PreconditionError
from .gadgets import gadget_cycle, gadget_g1, gadget_g2, gadget_g3, gadget_g4
from .model import (Biquiver, biquiver_to_obj, connected_components,
                    induced_subbiquiver, parse_biquiver)
from .morphisms import (DEFAULT_COEFF_BOUND, DEFAULT_TRIALS, Verdict,
                        are_isomorphic, decompose, hom_basis)
from .representation import (MatrixRepresentation, direct_sum, matrix_to_obj,
                             parse_matrix_obj, parse_representation,
                             random_representation, representation_to_obj)
from .roots import roots_with_value
from .scalars import format_rational
from .tits import definiteness, evaluate, gram_matrix, radical_vector

USAGE_ERROR, FORMAT_ERROR, PRECONDITION_ERROR = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e.strerror}") from None


def _load_biquiver(path: str) -> Biquiver:
    return parse_biquiver(_read(path))


def _load_representation(path: str, biquiver_path: str | None) -> MatrixRepresentation:
    g = _load_biquiver(biquiver_path) if biquiver_path else None
    return parse_representation(_read(path), g)


def _load_matrix(path: str):
    try:
        obj = json.loads(_read(path))
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    return parse_matrix_obj(obj)


def _emit(obj, pretty: bool) -> None:
    if pretty:
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise FormatError(f"{what} must be a comma-separated integer list, got {text!r}") from None


def _classify_obj(g: Biquiver) -> dict:
    rt = representation_type(g)
    return {
        "kind": rt.kind.value,
        "diagram": rt.diagram,
        "definiteness": definiteness(gram_matrix(g)).value,
    }


def _iso_result_obj(res) -> dict:
    obj: dict = {"verdict": res.verdict.value}
    if res.verdict is Verdict.YES:
        obj["certificate"] = {"S": [matrix_to_obj(m) for m in res.certificate]}
    if res.reason is not None:
        obj["reason"] = res.reason
    if res.trials:
        obj["trials"] = res.trials
        obj["seed"] = res.seed
    return obj


def _cmd_classify(args) -> None:
    g = _load_biquiver(args.biquiver)
    if args.components:
        comps = []
        for vertices in connected_components(g):
            sub = induced_subbiquiver(g, vertices)
            entry = _classify_obj(sub)
            entry["vertices"] = vertices
            comps.append(entry)
        _emit({"components": comps}, args.pretty)
    else:
        _emit(_classify_obj(g), args.pretty)


def _cmd_tits(args) -> None:
    g = _load_biquiver(args.biquiver)
    gram = gram_matrix(g)
    radical = radical_vector(gram)
    obj = {
        "t": gram.t,
        "gram": [[format_rational(x) for x in row] for row in gram.q],
        "definiteness": definiteness(gram).value,
        "radical": list(radical) if radical else None,
    }
    if args.evaluate is not None:
        z = _parse_int_list(args.evaluate, "--evaluate")
        obj["vector"] = z
        obj["value"] = evaluate(g, tuple(z))
    _emit(obj, args.pretty)


def _cmd_roots(args) -> None:
    g = _load_biquiver(args.biquiver)
    roots = roots_with_value(g, args.value, args.bound)
    _emit([list(z) for z in roots], args.pretty)


def _cmd_conjugate(args) -> None:
    g = _load_biquiver(args.biquiver)
    vertices = _parse_int_list(args.vertex, "--vertex")
    if args.representation:
        rep = _load_representation(args.representation, args.biquiver)
        for u in vertices:
            rep = conjugate_representation(rep, u)
        _emit(representation_to_obj(rep), args.pretty)
    else:
        for u in vertices:
            g = conjugate_biquiver(g, u)
        _emit(biquiver_to_obj(g), args.pretty)


def _cmd_eliminate(args) -> None:
    g = _load_biquiver(args.biquiver)
    plan = dash_elimination_plan(g)
    if isinstance(plan, DashEliminationPlan):
        vertices = sorted(plan.vertices)
        obj = {
            "status": "plan",
            "vertices": vertices,
            "biquiver": biquiver_to_obj(apply_conjugations(g, vertices)),
        }
    else:
        obj = {"status": "impossible", "reason": plan.reason}
    _emit(obj, args.pretty)


def _cmd_rep_validate(args) -> None:
    rep = _load_representation(args.representation, args.biquiver)
    _emit({"valid": True, "dims": list(rep.dims)}, args.pretty)


def _cmd_rep_sum(args) -> None:
    a = _load_representation(args.a, args.biquiver)
    b = _load_representation(args.b, args.biquiver)
    _emit(representation_to_obj(direct_sum(a, b)), args.pretty)


def _cmd_rep_random(args) -> None:
    g = _load_biquiver(args.biquiver)
    dims = _parse_int_list(args.dims, "--dims")
    rep = random_representation(g, tuple(dims), args.entry_bound, args.seed)
    _emit(representation_to_obj(rep), args.pretty)


def _cmd_rep_hom(args) -> None:
    a = _load_representation(args.a, args.biquiver)
    b = _load_representation(args.b, args.biquiver)
    basis = hom_basis(a, b)
    _emit({
        "dimension": basis.dimension,
        "basis": [[matrix_to_obj(m) for m in tup] for tup in basis.tuples],
    }, args.pretty)


def _cmd_rep_iso(args) -> None:
    a = _load_representation(args.a, args.biquiver)
    b = _load_representation(args.b, args.biquiver)
    res = are_isomorphic(a, b, trials=args.trials, seed=args.seed,
                         coeff_bound=args.bound)
    _emit(_iso_result_obj(res), args.pretty)


def _cmd_rep_decompose(args) -> None:
    a = _load_representation(args.representation, args.biquiver)
    dec = decompose(a, trials=args.trials, seed=args.seed, coeff_bound=args.bound)
    _emit({
        "summands": [representation_to_obj(s, embed_biquiver=False) for s in dec.summands],
        "certificate": {"S": [matrix_to_obj(m) for m in dec.base_change]},
        "statuses": [st.value for st in dec.statuses],
        "trials": dec.trials,
        "seed": dec.seed,
    }, args.pretty)


def _cmd_gadget_cycle(args) -> None:
    g = _load_biquiver(args.biquiver)
    m = _load_matrix(args.matrix)
    arrows = [part for part in args.arrows.split(",") if part]
    rep = gadget_cycle(g, arrows, m)
    _emit(representation_to_obj(rep), args.pretty)


def _cmd_gadget_pair(name: str, args) -> None:
    p = _load_matrix(args.p)
    q = _load_matrix(args.q)
    builder = {"g1": gadget_g1, "g2": gadget_g2, "g3": gadget_g3, "g4": gadget_g4}[name]
    _emit(representation_to_obj(builder(p, q)), args.pretty)


def _add_pretty(p) -> None:
    p.add_argument("--pretty", action="store_true", help="indented, human-readable JSON")


def _add_sampling(p) -> None:
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=DEFAULT_COEFF_BOUND,
                   help="bound on random rational coefficients")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="biquiver",
                     description="Exact computations on biquiver representations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="representation type of a biquiver")
    p.add_argument("biquiver")
    p.add_argument("--components", action="store_true",
                   help="classify each connected component separately")
    _add_pretty(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("tits", help="Tits form: Gram matrix, definiteness, radical")
    p.add_argument("biquiver")
    p.add_argument("--evaluate", metavar="Z", help="comma-separated dimension vector")
    _add_pretty(p)
    p.set_defaults(func=_cmd_tits)

    p = sub.add_parser("roots", help="dimension vectors with q(z) = 0 or 1")
    p.add_argument("biquiver")
    p.add_argument("--value", type=int, choices=(0, 1), required=True)
    p.add_argument("--bound", type=int, default=None,
                   help="coordinate cap (required unless the form is positive definite)")
    _add_pretty(p)
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("conjugate", help="conjugate a biquiver (and representation) at vertices")
    p.add_argument("biquiver")
    p.add_argument("--vertex", required=True, help="vertex or comma-separated vertices")
    p.add_argument("--representation", help="representation file to conjugate instead")
    _add_pretty(p)
    p.set_defaults(func=_cmd_conjugate)

    p = sub.add_parser("eliminate", help="plan conjugations removing all dashed arrows")
    p.add_argument("biquiver")
    _add_pretty(p)
    p.set_defaults(func=_cmd_eliminate)

    rep = sub.add_parser("rep", help="operations on matrix representations")
    rep_sub = rep.add_subparsers(dest="rep_command", required=True)

    p = rep_sub.add_parser("validate", help="check a representation document")
    p.add_argument("representation")
    p.add_argument("--biquiver", help="biquiver file (else must be embedded)")
    _add_pretty(p)
    p.set_defaults(func=_cmd_rep_validate)

    p = rep_sub.add_parser("sum", help="direct sum of two representations")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--biquiver")
    _add_pretty(p)
    p.set_defaults(func=_cmd_rep_sum)

    p = rep_sub.add_parser("random", help="seeded random representation")
    p.add_argument("biquiver")
    p.add_argument("--dims", required=True, help="comma-separated dimension vector")
    p.add_argument("--entry-bound", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    _add_pretty(p)
    p.set_defaults(func=_cmd_rep_random)

    p = rep_sub.add_parser("hom", help="basis of the real morphism space Hom(A, B)")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--biquiver")
    _add_pretty(p)
    p.set_defaults(func=_cmd_rep_hom)

    p = rep_sub.add_parser("iso", help="isomorphism test with exact certificates")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--biquiver")
    _add_sampling(p)
    _add_pretty(p)
    p.set_defaults(func=_cmd_rep_iso)

    p = rep_sub.add_parser("decompose", help="Krull-Schmidt decomposition")
    p.add_argument("representation")
    p.add_argument("--biquiver")
    _add_sampling(p)
    _add_pretty(p)
    p.set_defaults(func=_cmd_rep_decompose)

    gadget = sub.add_parser("gadget", help="wildness gadget representations")
    gadget_sub = gadget.add_subparsers(dest="gadget_command", required=True)

    p = gadget_sub.add_parser("cycle", help="identity-chain cycle gadget")
    p.add_argument("biquiver")
    p.add_argument("--arrows", required=True, help="comma-separated arrow ids along the cycle")
    p.add_argument("--matrix", required=True, help="matrix JSON file for the closing arrow")
    _add_pretty(p)
    p.set_defaults(func=_cmd_gadget_cycle)

    for name in ("g1", "g2", "g3", "g4"):
        p = gadget_sub.add_parser(name, help=f"pair gadget on the {name} biquiver")
        p.add_argument("p", help="matrix JSON file")
        p.add_argument("q", help="matrix JSON file")
        _add_pretty(p)
        p.set_defaults(func=lambda args, _name=name: _cmd_gadget_pair(_name, args))

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else USAGE_ERROR
    try:
        args.func(args)
    except FormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return FORMAT_ERROR
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return PRECONDITION_ERROR
    return 0


if __name__ == "__main__":
    sys.exit(main())
