"""Moving between rough interpretations and two-node Kripke models.

``to_kripke`` collapses each indiscernibility class to one world-element and
reads node 1 off the lower approximations, node 1/2 off the upper ones.
``to_rough`` doubles each element into an indiscernible pair tagged 0/1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .algebra3 import HALF, ONE, Three
from .kripke import (
    NODES,
    KripkeCountermodel,
    KripkeModel,
    Node,
    forces,
    is_kripke_countermodel,
    kripke_consequence_bounded,
)
from .rough_semantics import (
    RoughCountermodel,
    RoughInterpretation,
    ValidUpToBound,
    is_rough_countermodel,
    rough_consequence_bounded,
    valuate,
)
from .roughsets import make_space
from .syntax import Formula, Signature, to_text


def class_name(I: RoughInterpretation, u):
    """Canonical element standing for the class of ``u``: its first member."""
    return I.space.representative(u)


def to_kripke(I: RoughInterpretation) -> KripkeModel:
    universe = tuple(block[0] for block in I.space.blocks)
    full = len(I.space.universe)
    rho = {}
    for name, arity in I.sig.relations.items():
        low, up = I.approximations[name]
        if arity == 0:
            rho[name] = (
                frozenset({()}) if len(low) == full else frozenset(),
                frozenset({()}) if len(up) == full else frozenset(),
            )
            continue
        image = lambda ts: frozenset(tuple(class_name(I, u) for u in t) for t in ts)  # noqa: E731
        at_1, at_half = image(low), image(up)
        # lower/upper are unions of classes, so membership is class-invariant
        assert all(
            (t in low) == (tuple(class_name(I, u) for u in t) in at_1) for t in up
        ), "lower approximation is not saturated"
        rho[name] = (at_1, at_half)
    e = {x: class_name(I, u) for x, u in I.assignment.items()}
    return KripkeModel(universe, I.sig, rho, e)


def to_rough(K: KripkeModel) -> RoughInterpretation:
    universe = [(u, eps) for u in K.universe for eps in (0, 1)]
    space = make_space(universe, [[(u, 0), (u, 1)] for u in K.universe])
    sigma = {}
    for name, arity in K.sig.relations.items():
        at_1, at_half = K.rho[name]
        if arity == 0:
            if at_1:
                ext = universe
            elif at_half:
                ext = [(u, 0) for u in K.universe]
            else:
                ext = []
            sigma[name] = frozenset(ext)
            continue
        table = {tuple((u, 0) for u in t) for t in at_half}
        for t in at_1:
            for eps in itertools.product((0, 1), repeat=arity):
                table.add(tuple(zip(t, eps)))
        sigma[name] = frozenset(table)
    f = {x: (u, 0) for x, u in K.assignment.items()}
    return RoughInterpretation(space, K.sig, sigma, f)


# ---------------------------------------------------------------------------
# Executable transfer checks


@dataclass
class TransferReport:
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "TransferReport") -> "TransferReport":
        return TransferReport(self.checked + other.checked, self.failures + other.failures)


def _agree(value: Three, at_1: bool, at_half: bool) -> bool:
    return (value == ONE) == at_1 and (value >= HALF) == at_half


def check_transfer_forward(I: RoughInterpretation, formulas: Iterable[Formula]) -> TransferReport:
    """v_I(f) = 1 iff 1 forces f, and v_I(f) >= 1/2 iff 1/2 forces f, in to_kripke(I)."""
    K = to_kripke(I)
    report = TransferReport()
    for phi in formulas:
        report.checked += 1
        value = valuate(I, phi)
        at_1, at_half = forces(K, Node.ONE, phi), forces(K, Node.HALF, phi)
        if not _agree(value, at_1, at_half):
            report.failures.append(
                f"{to_text(phi)}: rough value {value}, node 1 {at_1}, node 1/2 {at_half}"
            )
    return report


def check_transfer_backward(K: KripkeModel, formulas: Iterable[Formula]) -> TransferReport:
    """1 forces f iff v(f) = 1, and 1/2 forces f iff v(f) >= 1/2, in to_rough(K)."""
    I = to_rough(K)
    report = TransferReport()
    for phi in formulas:
        report.checked += 1
        value = valuate(I, phi)
        at_1, at_half = forces(K, Node.ONE, phi), forces(K, Node.HALF, phi)
        if not _agree(value, at_1, at_half):
            report.failures.append(
                f"{to_text(phi)}: node 1 {at_1}, node 1/2 {at_half}, rough value {value}"
            )
    return report


class VerdictMismatch(AssertionError):
    pass


@dataclass
class EquivalenceReport:
    premises: list[str]
    conclusion: str
    bound: int
    kripke: ValidUpToBound | KripkeCountermodel
    rough: ValidUpToBound | RoughCountermodel
    failures: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return isinstance(self.kripke, ValidUpToBound)

    @property
    def ok(self) -> bool:
        return not self.failures


def equivalence_harness(
    premises: Sequence[Formula],
    conclusion: Formula,
    sig: Signature | None = None,
    bound: int = 2,
    raise_on_mismatch: bool = False,
    rough_bound: int | None = None,
) -> EquivalenceReport:
    """Run native Kripke and native rough bounded searches side by side.

    The verdicts must agree; each countermodel, converted to the other
    semantics, must still refute the sequent.  ``rough_bound`` widens the
    rough search alone; ``to_rough`` doubles the universe, so a Kripke
    countermodel on n elements may need more than n rough elements.
    """
    kv = kripke_consequence_bounded(premises, conclusion, sig, bound)
    rv = rough_consequence_bounded(premises, conclusion, sig, rough_bound or bound)
    report = EquivalenceReport([to_text(g) for g in premises], to_text(conclusion), bound, kv, rv)
    if isinstance(kv, ValidUpToBound) != isinstance(rv, ValidUpToBound):
        report.failures.append(
            f"verdicts differ: kripke {type(kv).__name__}, rough {type(rv).__name__}"
        )
    if isinstance(kv, KripkeCountermodel):
        I = to_rough(kv.model)
        if not is_rough_countermodel(I, premises, conclusion):
            report.failures.append("Kripke countermodel does not survive to_rough")
    if isinstance(rv, RoughCountermodel):
        K = to_kripke(rv.interpretation)
        if not any(is_kripke_countermodel(K, k, premises, conclusion) for k in NODES):
            report.failures.append("rough countermodel does not survive to_kripke")
    if raise_on_mismatch and report.failures:
        raise VerdictMismatch("; ".join(report.failures))
    return report
