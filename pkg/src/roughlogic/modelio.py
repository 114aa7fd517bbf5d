"""JSON model, signature and witness files.

Rough model::

    {"universe": ["a", "b"], "blocks": [["a", "b"]],
     "relations": {"P": {"arity": 1, "tuples": [["a"]]},
                   "Q": {"arity": 0, "extension": ["a"]}},
     "assignment": {"x": "a"}}

Kripke model::

    {"universe": ["u"],
     "relations": {"P": {"arity": 1, "at_1": [], "at_half": [["u"]]}},
     "assignment": {"x": "u"}}

Elements are JSON strings or numbers; tagged elements produced by
``to_rough`` are written as two-element lists and read back as tuples.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .kripke import KripkeModel
from .rough_semantics import RoughInterpretation, SemanticError
from .roughsets import make_space
from .syntax import Signature


def _elem(x: Any):
    if isinstance(x, list):
        return tuple(_elem(y) for y in x)
    return x


def _out(x: Any):
    if isinstance(x, tuple):
        return [_out(y) for y in x]
    return x


def load_json(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def dump_json(data: dict, path=None) -> str:
    text = json.dumps(data, indent=2, ensure_ascii=False) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def signature_from_json(data: dict) -> Signature:
    return Signature({k: int(v) for k, v in data.get("relations", {}).items()})


def signature_to_json(sig: Signature) -> dict:
    return {"relations": dict(sig.relations)}


def model_kind(data: dict) -> str:
    return "rough" if "blocks" in data else "kripke"


# ---------------------------------------------------------------------------
# Rough models


def rough_from_json(data: dict) -> RoughInterpretation:
    try:
        universe = [_elem(u) for u in data["universe"]]
        blocks = [[_elem(u) for u in b] for b in data["blocks"]]
    except KeyError as e:
        raise SemanticError(f"rough model file lacks {e.args[0]!r}") from None
    space = make_space(universe, blocks)
    rels, sigma = {}, {}
    for name, spec in data.get("relations", {}).items():
        arity = int(spec["arity"])
        rels[name] = arity
        if arity == 0:
            if "extension" in spec:
                sigma[name] = frozenset(_elem(u) for u in spec["extension"])
            else:
                # two-valued shorthand: [[]] holds everywhere, [] nowhere
                sigma[name] = frozenset(universe) if spec.get("tuples") else frozenset()
        else:
            sigma[name] = frozenset(tuple(_elem(u) for u in t) for t in spec.get("tuples", []))
    assignment = {x: _elem(u) for x, u in data.get("assignment", {}).items()}
    return RoughInterpretation(space, Signature(rels), sigma, assignment)


def rough_to_json(I: RoughInterpretation) -> dict:
    relations = {}
    for name, arity in I.sig.relations.items():
        table = I.sigma[name]
        if arity == 0:
            ext = [u for u in I.space.universe if u in table]
            relations[name] = {"arity": 0, "extension": [_out(u) for u in ext]}
        else:
            order = {u: i for i, u in enumerate(I.space.universe)}
            tuples = sorted(table, key=lambda t: [order[u] for u in t])
            relations[name] = {"arity": arity, "tuples": [[_out(u) for u in t] for t in tuples]}
    return {
        "universe": [_out(u) for u in I.space.universe],
        "blocks": [[_out(u) for u in b] for b in I.space.blocks],
        "relations": relations,
        "assignment": {x: _out(u) for x, u in sorted(I.assignment.items())},
    }


# ---------------------------------------------------------------------------
# Kripke models


def kripke_from_json(data: dict) -> KripkeModel:
    try:
        universe = tuple(_elem(u) for u in data["universe"])
    except KeyError:
        raise SemanticError("Kripke model file lacks 'universe'") from None
    rels, rho = {}, {}
    for name, spec in data.get("relations", {}).items():
        rels[name] = int(spec["arity"])
        at_1 = frozenset(tuple(_elem(u) for u in t) for t in spec.get("at_1", []))
        at_half = frozenset(tuple(_elem(u) for u in t) for t in spec.get("at_half", []))
        rho[name] = (at_1, at_half)
    assignment = {x: _elem(u) for x, u in data.get("assignment", {}).items()}
    return KripkeModel(universe, Signature(rels), rho, assignment)


def kripke_to_json(K: KripkeModel) -> dict:
    order = {u: i for i, u in enumerate(K.universe)}

    def rows(ts):
        return [[_out(u) for u in t] for t in sorted(ts, key=lambda t: [order[u] for u in t])]

    relations = {
        name: {"arity": arity, "at_1": rows(K.rho[name][0]), "at_half": rows(K.rho[name][1])}
        for name, arity in K.sig.relations.items()
    }
    return {
        "universe": [_out(u) for u in K.universe],
        "relations": relations,
        "assignment": {x: _out(u) for x, u in sorted(K.assignment.items())},
    }


def load_model(path):
    data = load_json(path)
    return rough_from_json(data) if model_kind(data) == "rough" else kripke_from_json(data)


def model_to_json(model) -> dict:
    if isinstance(model, RoughInterpretation):
        return rough_to_json(model)
    return kripke_to_json(model)
