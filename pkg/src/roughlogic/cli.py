"""Batch command-line front end.

Exit status: 0 for valid/accepted, 1 for countermodel/rejected, 2 for errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra3 import Countermodel, SearchGuardExceeded, prop_consequence
from .kripke import KripkeCountermodel, KripkeModel, Node, forces, kripke_consequence_bounded, kripke_value
from .modelio import (
    dump_json,
    kripke_to_json,
    load_json,
    load_model,
    model_kind,
    rough_to_json,
    signature_from_json,
)
from .proofcheck import Accepted, System, check_proof, load_proof
from .rough_semantics import RoughCountermodel, RoughInterpretation, SemanticError, realize, rough_consequence_bounded, valuate
from .roughsets import RoughSetError
from .syntax import Language, LogicSyntaxError, normalize_modality, parse, to_text, translate_s, translate_t
from .transfer import to_kripke, to_rough

EXIT_OK, EXIT_REFUTED, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    pass


def _sig(path):
    return signature_from_json(load_json(path)) if path else None


def _lang(text):
    return None if text is None else Language(text)


def cmd_parse(args) -> int:
    print(to_text(parse(args.formula, _sig(args.sig), _lang(args.lang))))
    return EXIT_OK


def cmd_eval(args) -> int:
    model = load_model(args.model)
    phi = parse(args.formula)
    value = valuate(model, phi) if isinstance(model, RoughInterpretation) else kripke_value(model, phi)
    print(value)
    return EXIT_OK


def cmd_force(args) -> int:
    model = load_model(args.model)
    if not isinstance(model, KripkeModel):
        raise CliError("force needs a Kripke model file (use transfer --dir to-kripke first)")
    print("true" if forces(model, Node.parse(args.node), parse(args.formula)) else "false")
    return EXIT_OK


def cmd_consequence(args) -> int:
    sig = _sig(args.sig)
    premises = [parse(p, sig) for p in args.premise]
    conclusion = parse(args.conclusion, sig)
    if args.mode == "prop":
        verdict = prop_consequence(premises, conclusion)
        if isinstance(verdict, Countermodel):
            print(f"countermodel {verdict}")
            if args.witness:
                witness = rough_to_json(realize({parse(k): v for k, v in verdict.valuation.items()}))
                witness["valuation"] = {k: str(v) for k, v in verdict.valuation.items()}
                dump_json(witness, args.witness)
                print(f"witness written to {args.witness}")
            return EXIT_REFUTED
        print("valid")
        return EXIT_OK
    if args.semantics == "kripke":
        verdict = kripke_consequence_bounded(premises, conclusion, sig, args.max_universe)
    else:
        verdict = rough_consequence_bounded(premises, conclusion, sig, args.max_universe)
    if isinstance(verdict, KripkeCountermodel):
        witness = kripke_to_json(verdict.model)
        witness["node"] = str(verdict.node)
        print(f"countermodel at node {verdict.node}, |U| = {len(verdict.model.universe)}")
    elif isinstance(verdict, RoughCountermodel):
        witness = rough_to_json(verdict.interpretation)
        witness["premise_value"] = str(verdict.premise_value)
        witness["conclusion_value"] = str(verdict.conclusion_value)
        print(
            f"countermodel premises {verdict.premise_value} > conclusion {verdict.conclusion_value}, "
            f"|U| = {len(verdict.interpretation.space.universe)}"
        )
    else:
        print(verdict)
        return EXIT_OK
    if args.witness:
        dump_json(witness, args.witness)
        print(f"witness written to {args.witness}")
    else:
        sys.stdout.write(dump_json(witness))
    return EXIT_REFUTED


def cmd_translate(args) -> int:
    phi = parse(args.formula)
    print(to_text(translate_t(phi) if args.dir == "t" else translate_s(phi)))
    return EXIT_OK


def cmd_normalize(args) -> int:
    print(normalize_modality(args.modality).value)
    return EXIT_OK


def cmd_transfer(args) -> int:
    data = load_json(args.input)
    model = load_model(args.input)
    if args.dir == "to-kripke":
        if model_kind(data) != "rough":
            raise CliError("to-kripke expects a rough model file")
        out = kripke_to_json(to_kripke(model))
    else:
        if model_kind(data) != "kripke":
            raise CliError("to-rough expects a Kripke model file")
        out = rough_to_json(to_rough(model))
    dump_json(out, args.output)
    return EXIT_OK


def cmd_check_proof(args) -> int:
    verdict = check_proof(load_proof(args.proof, args.system), System(args.system))
    print(verdict)
    return EXIT_OK if isinstance(verdict, Accepted) else EXIT_REFUTED


def cmd_suite(args) -> int:
    from .acceptance import CRITERIA, run_criterion

    wanted = args.only or [num for num, *_ in CRITERIA]
    results = []
    for num in wanted:
        result = run_criterion(num)
        results.append(result)
        print(result.line(), flush=True)
    passed = sum(r.ok for r in results)
    print(f"{passed}/{len(results)} criteria passed")
    return EXIT_OK if passed == len(results) else EXIT_REFUTED


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="roughlogic", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="echo the canonical printing of a formula")
    p.add_argument("formula")
    p.add_argument("--sig")
    p.add_argument("--lang", choices=["d", "box"])
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("eval", help="value of a formula in a model file")
    p.add_argument("formula")
    p.add_argument("--model", required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("force", help="forcing at a node of a Kripke model file")
    p.add_argument("formula")
    p.add_argument("--model", required=True)
    p.add_argument("--node", required=True, choices=["1", "half", "1/2"])
    p.set_defaults(func=cmd_force)

    p = sub.add_parser("consequence", help="decide or search a sequent")
    p.add_argument("conclusion")
    p.add_argument("--premise", action="append", default=[])
    p.add_argument("--mode", choices=["prop", "bounded"], default="prop")
    p.add_argument("--semantics", choices=["rough", "kripke"], default="rough")
    p.add_argument("--max-universe", type=int, default=2)
    p.add_argument("--sig")
    p.add_argument("--witness", help="write the countermodel to this JSON file")
    p.set_defaults(func=cmd_consequence)

    p = sub.add_parser("translate", help="D to ~[] (t) or [] to ~D (s)")
    p.add_argument("formula")
    p.add_argument("--dir", required=True, choices=["t", "s"])
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("normalize", help="canonical form of a modality string over ~ and D")
    p.add_argument("modality")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("transfer", help="convert a model file")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--dir", required=True, choices=["to-kripke", "to-rough"])
    p.set_defaults(func=cmd_transfer)

    p = sub.add_parser("check-proof", help="check a JSON proof tree")
    p.add_argument("proof")
    p.add_argument("--system", choices=["d", "box"], default="d")
    p.set_defaults(func=cmd_check_proof)

    p = sub.add_parser("suite", help="run the acceptance battery")
    p.add_argument("--only", type=int, action="append", choices=range(1, 11), metavar="N")
    p.set_defaults(func=cmd_suite)
    return ap


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (
        CliError,
        LogicSyntaxError,
        SemanticError,
        RoughSetError,
        SearchGuardExceeded,
        OSError,
        json.JSONDecodeError,
        KeyError,
        ValueError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
