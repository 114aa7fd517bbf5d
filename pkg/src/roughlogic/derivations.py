"""Worked derivations used as proof-checker fixtures.

Schematic letters are instantiated with propositional letters ``p`` and
``q``.  Steps that the source derivations take by an already established
derived rule ((T), (S) in the box system, box double negation, disjunction
commutativity) are expanded into primitive rules by the helpers below.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .proofcheck import ProofTree, System, hyp, node
from .syntax import BOTTOM, Box, Formula, Not, Or, parse


def F(text: str) -> Formula:
    return parse(text)


class Labels:
    """Fresh discharge labels, unique across one tree."""

    def __init__(self, start: int = 1):
        self._it = itertools.count(start)

    def __call__(self) -> int:
        return next(self._it)


# ---------------------------------------------------------------------------
# Box-system building blocks


def box_t(box_tree: ProofTree, labels: Labels) -> ProofTree:
    """From a derivation of []b, derive b (via negBoxI and orE)."""
    b = box_tree.formula.sub
    lab = labels()
    absurd = node("negE", BOTTOM, box_tree, hyp(Not(Box(b)), lab))
    return node(
        "orE", b,
        node("negBoxI", Or(b, Not(Box(b)))),
        hyp(b, lab),
        node("easq", b, absurd),
        label=lab,
    )


def box_dn(dn_tree: ProofTree, labels: Labels) -> ProofTree:
    """From a derivation of ~~[]a, derive []a."""
    a = dn_tree.formula.sub.sub.sub
    lab = labels()
    assumed = hyp(Box(Not(Box(a))), lab)
    absurd = node("negE", BOTTOM, box_t(assumed, labels), dn_tree)
    return node("boxCS", Box(a), node("negI", Not(Box(Not(Box(a)))), absurd, label=lab))


def box_s(g: Formula, labels: Labels) -> ProofTree:
    """Closed derivation of ~g | ~~g in the box system."""
    target = Or(Not(g), Not(Not(g)))
    outer, inner = labels(), labels()
    right = node(
        "orIr", target,
        node(
            "negI", Not(Not(g)),
            node("negE", BOTTOM, node("boxS", Box(Not(g)), hyp(Not(g), inner)), hyp(Not(Box(Not(g))), outer)),
            label=inner,
        ),
    )
    return node(
        "orE", target,
        node("negBoxI", Or(Not(g), Not(Box(Not(g))))),
        node("orIl", target, hyp(Not(g), outer)),
        right,
        label=outer,
    )


def or_comm(tree: ProofTree, labels: Labels) -> ProofTree:
    a, b = tree.formula.left, tree.formula.right
    lab = labels()
    return node(
        "orE", Or(b, a), tree,
        node("orIr", Or(b, a), hyp(a, lab)),
        node("orIl", Or(b, a), hyp(b, lab)),
        label=lab,
    )


def box_tnd(a: Formula, labels: Labels) -> ProofTree:
    """Closed derivation of []a | ~[]a: (S), commutativity, box double negation."""
    flipped = or_comm(box_s(Box(a), labels), labels)
    target = Or(Box(a), Not(Box(a)))
    lab = labels()
    return node(
        "orE", target, flipped,
        node("orIl", target, box_dn(hyp(Not(Not(Box(a))), lab), labels)),
        node("orIr", target, hyp(Not(Box(a)), lab)),
        label=lab,
    )


# ---------------------------------------------------------------------------
# Fixtures


@dataclass(frozen=True)
class Fixture:
    name: str
    system: System
    tree: ProofTree
    assumptions: frozenset
    conclusion: Formula


def dnd() -> Fixture:
    """~~D p |- D p."""
    inner = node(
        "negI", F("~D D p"),
        node("negE", BOTTOM, node("cSprime", F("~D p"), hyp(F("D D p"), 2)), hyp(F("~~D p"))),
        label=2,
    )
    right = node("easq", F("D p"), node("negE", BOTTOM, hyp(F("D D p"), 1), inner))
    tree = node("orE", F("D p"), node("dI", F("D p | D D p")), hyp(F("D p"), 1), right, label=1)
    return Fixture("DND", System.D, tree, frozenset({F("~~D p")}), F("D p"))


def box_double_negation() -> Fixture:
    """~~[]p |- []p."""
    tree = box_dn(hyp(F("~~[]p")), Labels())
    return Fixture("BLB-boxDN", System.BOX, tree, frozenset({F("~~[]p")}), F("[]p"))


def box_tertium() -> Fixture:
    """|- []p | ~[]p."""
    tree = box_tnd(F("p"), Labels())
    return Fixture("BLB-boxTND", System.BOX, tree, frozenset(), F("[]p | ~[]p"))


def necessitation() -> Fixture:
    """From the closed derivation of p | ~[]p, derive [](p | ~[]p)."""
    labels = Labels()
    a = F("p | ~[]p")
    lab = labels()
    theorem = node("orIl", Or(a, BOTTOM), node("negBoxI", a))
    dn = node(
        "negI", Not(Not(Box(a))),
        node("negBoxE", BOTTOM, hyp(Not(Box(a)), lab), theorem),
        label=lab,
    )
    return Fixture("BLB-N", System.BOX, box_dn(dn, labels), frozenset(), Box(a))


def box_four() -> Fixture:
    """[]p |- [][]p."""
    labels = Labels()
    lab = labels()
    not_box = node("negBoxE", F("~[]p"), hyp(F("~[][]p"), lab), box_tnd(F("p"), labels))
    dn = node("negI", F("~~[][]p"), node("negE", BOTTOM, hyp(F("[]p")), not_box), label=lab)
    return Fixture("BLB-4", System.BOX, box_dn(dn, labels), frozenset({F("[]p")}), F("[][]p"))


def sb_antitone() -> Fixture:
    """With p & q |- p as the hypothesis step: ~[]p |- ~[](p & q)."""
    target = F("p | ~[](p & q)")
    minor = node(
        "orE", target,
        node("negBoxI", F("(p & q) | ~[](p & q)")),
        node("orIl", target, node("andEl", F("p"), hyp(F("p & q"), 1))),
        node("orIr", target, hyp(F("~[](p & q)"), 1)),
        label=1,
    )
    tree = node("negBoxE", F("~[](p & q)"), hyp(F("~[]p")), minor)
    return Fixture("SB-i", System.BOX, tree, frozenset({F("~[]p")}), F("~[](p & q)"))


def htrans_s() -> Fixture:
    """Translation of the step D~p / ~~p: ~[]~p |- ~~p."""
    tree = node(
        "negI", F("~~p"),
        node("negE", BOTTOM, node("boxS", F("[]~p"), hyp(F("~p"), 1)), hyp(F("~[]~p"))),
        label=1,
    )
    return Fixture("HTRANS-S", System.BOX, tree, frozenset({F("~[]~p")}), F("~~p"))


def htrans_cs() -> Fixture:
    """Translation of the step D D p / ~D p: ~[]~[]p |- ~~[]p."""
    tree = node(
        "negI", F("~~[]p"),
        node("negE", BOTTOM, node("boxCS", F("[]p"), hyp(F("~[]~[]p"))), hyp(F("~[]p"), 1)),
        label=1,
    )
    return Fixture("HTRANS-cS", System.BOX, tree, frozenset({F("~[]~[]p")}), F("~~[]p"))


def all_fixtures() -> list[Fixture]:
    return [
        dnd(),
        box_double_negation(),
        box_tertium(),
        necessitation(),
        box_four(),
        sb_antitone(),
        htrans_s(),
        htrans_cs(),
    ]
