"""Natural-deduction proof checking for the propositional D- and box-systems.

A derivation is a tree of :class:`ProofTree` nodes.  Leaves use rule ``hyp``;
a labelled ``hyp`` must be discharged by an ``negI`` or ``orE`` ancestor
carrying the same label, an unlabelled one stays open.  Discharging rules
always carry a label; it may cancel nothing (vacuous discharge).  Minor premises of
``dE``, ``dEprime``, ``dEclosed`` and ``negBoxE`` must be closed
subderivations (no open assumptions at all).
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, replace
from typing import Callable, Iterator, Sequence

from .syntax import (
    BOTTOM,
    And,
    Atom,
    Bottom,
    Box,
    Dual,
    Formula,
    Language,
    LogicSyntaxError,
    Not,
    Or,
    children,
    language_of,
    parse,
    rebuild,
    to_text,
)


class System(enum.Enum):
    D = "d"
    BOX = "box"

    @property
    def language(self) -> Language:
        return Language.D if self is System.D else Language.BOX


@dataclass(frozen=True)
class ProofTree:
    formula: Formula
    rule: str
    premises: tuple["ProofTree", ...] = ()
    label: int | None = None

    def nodes(self) -> Iterator[tuple[tuple[int, ...], "ProofTree"]]:
        """(path, node) pairs in pre-order; a path lists premise indices from the root."""
        stack: list[tuple[tuple[int, ...], ProofTree]] = [((), self)]
        while stack:
            path, node = stack.pop()
            yield path, node
            for i in reversed(range(len(node.premises))):
                stack.append((path + (i,), node.premises[i]))

    def at(self, path: Sequence[int]) -> "ProofTree":
        node = self
        for i in path:
            node = node.premises[i]
        return node

    def replace_at(self, path: Sequence[int], new: "ProofTree") -> "ProofTree":
        if not path:
            return new
        i, rest = path[0], path[1:]
        prem = list(self.premises)
        prem[i] = prem[i].replace_at(rest, new)
        return replace(self, premises=tuple(prem))


def hyp(formula: Formula, label: int | None = None) -> ProofTree:
    return ProofTree(formula, "hyp", (), label)


def node(rule: str, formula: Formula, *premises: ProofTree, label: int | None = None) -> ProofTree:
    return ProofTree(formula, rule, tuple(premises), label)


@dataclass(frozen=True)
class Accepted:
    assumptions: frozenset
    conclusion: Formula

    @property
    def sequent(self) -> tuple[frozenset, Formula]:
        return self.assumptions, self.conclusion

    def __str__(self):
        lhs = ", ".join(sorted(to_text(f) for f in self.assumptions))
        return f"accepted: {lhs} |- {to_text(self.conclusion)}"


@dataclass(frozen=True)
class Rejected:
    path: tuple[int, ...]
    reason: str

    def __str__(self):
        where = "root" if not self.path else "root." + ".".join(map(str, self.path))
        return f"rejected at {where}: {self.reason}"


class _Reject(Exception):
    def __init__(self, path, reason):
        self.path = tuple(path)
        self.reason = reason


# ---------------------------------------------------------------------------
# Rule schemas
#
# Each schema receives the node's conclusion and premise conclusions and
# returns an error message, or None when the instance fits.  Discharges and
# closedness are declared on the Rule entries.


def _unary(phi, cls):
    return phi.sub if isinstance(phi, cls) else None


def _and_i(c, p):
    if not (isinstance(c, And) and (c.left, c.right) == (p[0], p[1])):
        return "andI concludes the conjunction of its two premises"


def _and_el(c, p):
    if not (isinstance(p[0], And) and p[0].left == c):
        return "andEl concludes the left conjunct of its premise"


def _and_er(c, p):
    if not (isinstance(p[0], And) and p[0].right == c):
        return "andEr concludes the right conjunct of its premise"


def _or_il(c, p):
    if not (isinstance(c, Or) and c.left == p[0]):
        return "orIl concludes a disjunction whose left disjunct is the premise"


def _or_ir(c, p):
    if not (isinstance(c, Or) and c.right == p[0]):
        return "orIr concludes a disjunction whose right disjunct is the premise"


def _or_e(c, p):
    if not isinstance(p[0], Or):
        return "orE's major premise must be a disjunction"
    if not (p[1] == c and p[2] == c):
        return "orE's minor premises must both derive the conclusion"


def _neg_i(c, p):
    if not (isinstance(c, Not) and p[0] == BOTTOM):
        return "negI derives ~a from false"


def _neg_e(c, p):
    if not (c == BOTTOM and p[1] == Not(p[0])):
        return "negE derives false from a and ~a"


def _easq(c, p):
    if p[0] != BOTTOM:
        return "easq needs false as premise"


def _d_i(c, p):
    if not (isinstance(c, Or) and c.right == Dual(c.left)):
        return "dI concludes a | D a"


def _d_e(c, p):
    a = _unary(p[0], Dual)
    if a is None or p[1] != Or(a, c):
        return "dE needs D a and a closed derivation of a | b, concluding b"


def _d_e_prime(c, p):
    if not (c == BOTTOM and p[0] == Dual(p[1])):
        return "dEprime needs D a and a closed derivation of a, concluding false"


def _d_e_closed(c, p):
    if c != Not(Dual(p[0])):
        return "dEclosed derives ~D a from a closed derivation of a"


def _s(c, p):
    if not (isinstance(c, Or) and isinstance(c.left, Not) and c.right == Not(c.left)):
        return "S concludes ~a | ~~a"


def _c_s(c, p):
    if not (c == BOTTOM and isinstance(p[0], Dual) and p[1] == Dual(p[0])):
        return "cS derives false from D a and D D a"


def _s_prime(c, p):
    a = _unary(_unary(p[0], Dual), Not)
    if a is None or c != Not(Not(a)):
        return "Sprime derives ~~a from D ~a"


def _c_s_prime(c, p):
    a = _unary(_unary(p[0], Dual), Dual)
    if a is None or c != Not(Dual(a)):
        return "cSprime derives ~D a from D D a"


def _reg(c, p, guard=Dual):
    if p[1] != _guard(p[0], guard):
        return "Reg-style rules need premises a and its dual negation"
    if not (isinstance(c, Or) and c.right == Not(c.left)):
        return "Reg-style rules conclude b | ~b"


def _guard(a, guard):
    return Dual(a) if guard is Dual else Not(Box(a))


def _neg_box_i(c, p):
    if not (isinstance(c, Or) and c.right == Not(Box(c.left))):
        return "negBoxI concludes a | ~[]a"


def _neg_box_e(c, p):
    a = _unary(_unary(p[0], Not), Box)
    if a is None or p[1] != Or(a, c):
        return "negBoxE needs ~[]a and a closed derivation of a | b, concluding b"


def _box_s(c, p):
    if not (isinstance(p[0], Not) and c == Box(p[0])):
        return "boxS derives []~a from ~a"


def _box_cs(c, p):
    a = _unary(c, Box)
    if a is None or p[0] != Not(Box(Not(Box(a)))):
        return "boxCS derives []a from ~[]~[]a"


def _box_reg(c, p):
    return _reg(c, p, guard=Box)


@dataclass(frozen=True)
class Rule:
    name: str
    arity: int
    schema: Callable
    # premises in which the node's label cancels assumptions
    discharges: tuple[int, ...] = ()
    closed: tuple[int, ...] = ()


CORE_RULES = [
    Rule("andI", 2, _and_i),
    Rule("andEl", 1, _and_el),
    Rule("andEr", 1, _and_er),
    Rule("orIl", 1, _or_il),
    Rule("orIr", 1, _or_ir),
    Rule("orE", 3, _or_e, discharges=(1, 2)),
    Rule("negI", 1, _neg_i, discharges=(0,)),
    Rule("negE", 2, _neg_e),
    Rule("easq", 1, _easq),
]

D_RULES = [
    Rule("dI", 0, _d_i),
    Rule("dE", 2, _d_e, closed=(1,)),
    Rule("dEprime", 2, _d_e_prime, closed=(1,)),
    Rule("dEclosed", 1, _d_e_closed, closed=(0,)),
    Rule("S", 0, _s),
    Rule("cS", 2, _c_s),
    Rule("Sprime", 1, _s_prime),
    Rule("cSprime", 1, _c_s_prime),
    Rule("Reg", 2, _reg),
]

BOX_RULES = [
    Rule("negBoxI", 0, _neg_box_i),
    Rule("negBoxE", 2, _neg_box_e, closed=(1,)),
    Rule("boxS", 1, _box_s),
    Rule("boxCS", 1, _box_cs),
    Rule("boxReg", 2, _box_reg),
]

RULES = {
    System.D: {r.name: r for r in CORE_RULES + D_RULES},
    System.BOX: {r.name: r for r in CORE_RULES + BOX_RULES},
}
ALL_RULE_NAMES = sorted({"hyp", *RULES[System.D], *RULES[System.BOX]})


def discharged_formula(t: ProofTree, premise_index: int) -> Formula:
    """The assumption a discharging node cancels in the given premise."""
    if t.rule == "negI":
        return t.formula.sub
    major = t.premises[0].formula
    return major.left if premise_index == 1 else major.right


# ---------------------------------------------------------------------------
# Checking


def check_proof(t: ProofTree, system: System | str = System.D) -> Accepted | Rejected:
    system = System(system) if not isinstance(system, System) else system
    try:
        _check_labels(t)
        open_leaves = _check(t, (), system, {})
    except _Reject as r:
        return Rejected(r.path, r.reason)
    return Accepted(frozenset(f for _, f in open_leaves), t.formula)


def _check_labels(t: ProofTree) -> None:
    seen: dict[int, tuple[int, ...]] = {}
    for path, n in t.nodes():
        if n.rule in ("negI", "orE") and n.label is not None:
            if n.label in seen:
                raise _Reject(path, f"label {n.label} is discharged by two rule applications")
            seen[n.label] = path
        elif n.rule != "hyp" and n.label is not None:
            raise _Reject(path, f"rule {n.rule} does not discharge assumptions")


def _check(t: ProofTree, path, system: System, scope: dict) -> set:
    """Check ``t``; return its open leaves as (label, formula) pairs.

    ``scope`` maps labels discharged by ancestors to the formula they cancel.
    """
    lang = language_of(t.formula)
    if lang is not None and lang is not system.language:
        raise _Reject(path, f"formula {to_text(t.formula)} is outside the {system.value} language")
    if t.rule == "hyp":
        if t.premises:
            raise _Reject(path, "an assumption has no premises")
        if t.label is None:
            return {(None, t.formula)}
        if t.label not in scope:
            raise _Reject(path, f"dangling discharge label {t.label}")
        if scope[t.label] != t.formula:
            raise _Reject(
                path,
                f"assumption {to_text(t.formula)} does not match the formula "
                f"{to_text(scope[t.label])} discharged by label {t.label}",
            )
        return {(t.label, t.formula)}
    rule = RULES[system].get(t.rule)
    if rule is None:
        known = t.rule in ALL_RULE_NAMES
        raise _Reject(path, f"rule {t.rule} is {'not part of the ' + system.value + ' system' if known else 'unknown'}")
    if len(t.premises) != rule.arity:
        raise _Reject(path, f"{t.rule} takes {rule.arity} premise(s), got {len(t.premises)}")
    if rule.discharges and t.label is None:
        raise _Reject(path, f"{t.rule} must name the label it discharges")
    err = rule.schema(t.formula, [p.formula for p in t.premises])
    if err:
        raise _Reject(path, err)
    open_leaves: set = set()
    for i, prem in enumerate(t.premises):
        inner = scope
        if i in rule.discharges and t.label is not None:
            inner = {**scope, t.label: discharged_formula(t, i)}
        leaves = _check(prem, path + (i,), system, inner)
        if i in rule.discharges and t.label is not None:
            leaves = {(lab, f) for lab, f in leaves if lab != t.label}
        if i in rule.closed and leaves:
            shown = ", ".join(sorted(to_text(f) for _, f in leaves))
            raise _Reject(path + (i,), f"{t.rule} needs a closed minor premise; open: {shown}")
        open_leaves |= leaves
    return open_leaves


def open_assumptions(t: ProofTree) -> frozenset:
    """Open assumptions of a tree, label bookkeeping only (no schema checks)."""

    def go(n: ProofTree, bound: frozenset) -> set:
        if n.rule == "hyp":
            return set() if n.label is not None and n.label in bound else {n.formula}
        rule = RULES[System.D].get(n.rule) or RULES[System.BOX].get(n.rule)
        out: set = set()
        for i, p in enumerate(n.premises):
            inner = bound | {n.label} if rule and i in rule.discharges and n.label is not None else bound
            out |= go(p, inner)
        return out

    return frozenset(go(t, frozenset()))


# ---------------------------------------------------------------------------
# JSON proof files


def tree_from_json(data: dict, system: System | str = System.D) -> ProofTree:
    # the language is checked by check_proof, which reports the offending node
    system = System(system) if not isinstance(system, System) else system
    try:
        phi = parse(data["formula"])
    except KeyError:
        raise LogicSyntaxError("proof node without a 'formula'") from None
    prem = tuple(tree_from_json(p, system) for p in data.get("premises", []))
    label = data.get("label")
    if label is not None and not isinstance(label, int):
        raise LogicSyntaxError(f"label must be an integer, got {label!r}")
    return ProofTree(phi, data["rule"], prem, label)


def tree_to_json(t: ProofTree) -> dict:
    out: dict = {"rule": t.rule, "formula": to_text(t.formula)}
    if t.premises:
        out["premises"] = [tree_to_json(p) for p in t.premises]
    if t.label is not None:
        out["label"] = t.label
    return out


def load_proof(path, system: System | str = System.D) -> ProofTree:
    with open(path, encoding="utf-8") as fh:
        return tree_from_json(json.load(fh), system)


# ---------------------------------------------------------------------------
# Mutations


def formula_mutations(phi: Formula, system: System) -> list[Formula]:
    """Small, language-preserving perturbations of a formula."""
    out = [Not(phi), And(phi, phi), Or(phi, phi), BOTTOM if phi != BOTTOM else Atom("q")]
    out.append(Dual(phi) if system is System.D else Box(phi))
    out.extend(children(phi))
    out.append(_rename_atoms(phi))
    return [m for m in dict.fromkeys(out) if m != phi]


def _rename_atoms(phi: Formula) -> Formula:
    if isinstance(phi, Atom):
        return Atom(phi.rel + "'", phi.args)
    if isinstance(phi, Bottom):
        return Atom("q")
    return rebuild(phi, [_rename_atoms(k) for k in children(phi)])


def mutations(t: ProofTree, system: System) -> Iterator[tuple[str, ProofTree]]:
    """Single-node mutants: every other rule name, and perturbed formulas."""
    names = ["hyp", *RULES[system]]
    for path, n in t.nodes():
        where = ".".join(map(str, path)) or "root"
        for name in names:
            if name != n.rule:
                yield f"{where}: rule {n.rule} -> {name}", t.replace_at(path, replace(n, rule=name))
        for phi in formula_mutations(n.formula, system):
            yield f"{where}: formula -> {to_text(phi)}", t.replace_at(path, replace(n, formula=phi))
