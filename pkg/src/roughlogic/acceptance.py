"""The acceptance battery: each criterion is a function returning a Result.

Run from the command line with ``roughlogic suite`` or through pytest
(tests/test_acceptance.py).
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable

from . import algebra3 as A
from .algebra3 import VALUES, Countermodel, Valid, compose, prop_consequence
from .derivations import all_fixtures
from .gen import random_fo_formula, random_formula, random_kripke, random_prop_formula, random_rough
from .kripke import Node, forces
from .proofcheck import Accepted, check_proof, mutations
from .syntax import Language, Modality, normalize_modality, parse, to_text, translate_s, translate_t
from .transfer import check_transfer_backward, check_transfer_forward, equivalence_harness

SEED = 20241016


@dataclass
class Result:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    budget: float

    @property
    def within_budget(self) -> bool:
        return self.seconds <= self.budget

    @property
    def ok(self) -> bool:
        return self.passed and self.within_budget

    def line(self) -> str:
        flag = "PASS" if self.ok else "FAIL"
        return f"[{flag}] {self.number:2d}. {self.name}: {self.detail} ({self.seconds:.3f}s / budget {self.budget:g}s)"


# ---------------------------------------------------------------------------
# 1. algebra tables


def _largest(pred):
    return max(y for y in VALUES if pred(y))


def _smallest(pred):
    return min(y for y in VALUES if pred(y))


def algebra_laws() -> tuple[bool, str]:
    ok = True
    for x in VALUES:
        ok &= A.neg3(x) == _largest(lambda y: min(x, y) == A.ZERO)
        ok &= A.d3(x) == _smallest(lambda y: max(x, y) == A.ONE)
        ok &= A.box3(x) == _largest(lambda y: min(_smallest(lambda z: max(x, z) == A.ONE), y) == A.ZERO)
    neg, d = A.neg3, A.d3
    identities = {
        "meet complement": lambda x, y: (min(x, y) == A.ZERO) == (y <= neg(x)),
        "join complement": lambda x, y: (max(x, y) == A.ONE) == (d(x) <= y),
        "distributivity": lambda x, y: all(
            min(x, max(y, z)) == max(min(x, y), min(x, z)) for z in VALUES
        ),
        "regular": lambda x, y: min(x, d(x)) <= max(x, neg(x)),
        "bi-Stone ~": lambda x, y: max(neg(x), neg(neg(x))) == A.ONE,
        "bi-Stone D": lambda x, y: min(d(x), d(d(x))) == A.ZERO,
        "~D = ~D~D": lambda x, y: neg(d(x)) == neg(d(neg(d(x)))),
        "D~ = D~D~": lambda x, y: d(neg(x)) == d(neg(d(neg(x)))),
    }
    failed = [n for n, law in identities.items() if not all(law(x, y) for x in VALUES for y in VALUES)]
    ok &= not failed
    return ok, f"tables match oracles; {len(identities) - len(failed)}/{len(identities)} identities hold"


def criterion_algebra() -> tuple[bool, str]:
    return algebra_laws()


# ---------------------------------------------------------------------------
# 2. rule soundness
#
# Discharging rules are stated with the defined conditional; a closed minor
# premise c is stated as the premise ~D c (value 1 exactly when c is 1).

RULE_SEQUENTS: list[tuple[str, list[str], str]] = [
    ("andI", ["a", "b"], "a & b"),
    ("andEl", ["a & b"], "a"),
    ("andEr", ["a & b"], "b"),
    ("orIl", ["a"], "a | b"),
    ("orIr", ["b"], "a | b"),
    ("orE", ["a | b", "a -> c", "b -> c"], "c"),
    ("negI", ["a -> false"], "~a"),
    ("negE", ["a", "~a"], "false"),
    ("easq", ["false"], "a"),
    ("dI", [], "a | D a"),
    ("dE", ["D a", "~D (a | b)"], "b"),
    ("dEprime", ["D a", "~D a"], "false"),
    ("dEclosed", ["~D a"], "~D a"),
    ("S", [], "~a | ~~a"),
    ("cS", ["D a", "D D a"], "false"),
    ("Reg", ["a", "D a"], "b | ~b"),
    ("Sprime", ["D ~a"], "~~a"),
    ("cSprime", ["D D a"], "~D a"),
    ("negBoxI", [], "a | ~[]a"),
    ("negBoxE", ["~[]a", "[](a | b)"], "b"),
    ("boxS", ["~a"], "[]~a"),
    ("boxCS", ["~[]~[]a"], "[]a"),
    ("boxReg", ["a", "~[]a"], "b | ~b"),
]


def criterion_rules() -> tuple[bool, str]:
    bad = []
    for name, prem, concl in RULE_SEQUENTS:
        verdict = prop_consequence([parse(p) for p in prem], parse(concl))
        if not isinstance(verdict, Valid):
            bad.append(f"{name} ({verdict})")
    n = len(RULE_SEQUENTS)
    return not bad, f"{n - len(bad)}/{n} rule sequents valid" + (f"; failing: {bad}" if bad else "")


# ---------------------------------------------------------------------------
# 3. negative results

NEGATIVE = [
    (["a -> b"], "D b -> D a"),
    (["a <-> b"], "D a <-> D b"),
]


def criterion_negative() -> tuple[bool, str]:
    notes = []
    ok = True
    for prem, concl in NEGATIVE:
        ps, c = [parse(p) for p in prem], parse(concl)
        verdict = prop_consequence(ps, c)
        if not isinstance(verdict, Countermodel):
            ok = False
            notes.append(f"{prem} |= {concl} unexpectedly valid")
            continue
        ok &= A.violates(ps, c, verdict.valuation)
        notes.append(f"{', '.join(prem)} |= {concl}: {verdict}")
    return ok, "; ".join(notes)


# ---------------------------------------------------------------------------
# 4. modality collapse

CANONICAL = {
    Modality.IDENTITY: "",
    Modality.NEG: "~",
    Modality.DUAL: "D",
    Modality.NEGNEG: "~~",
    Modality.NEGDUAL: "~D",
}


def criterion_modalities() -> tuple[bool, str]:
    strings = ["".join(s) for k in range(1, 7) for s in itertools.product("~D", repeat=k)]
    ok = len(strings) == 126
    for m in ["", *strings]:
        ok &= compose(m) == compose(CANONICAL[normalize_modality(m)])
    functions = {compose(m) for m in ["", *strings]}
    ok &= len(functions) == 5
    # first figure: D~ = ~~ and ~D = DD; second figure, with [] read as ~D:
    # ~[]~ = ~~, and ~[] = D
    box = lambda x: A.box3(x)  # noqa: E731
    ok &= compose("D~") == compose("~~") and compose("~D") == compose("DD")
    ok &= all(A.neg3(box(A.neg3(x))) == A.neg3(A.neg3(x)) for x in VALUES)
    ok &= all(A.neg3(box(x)) == A.d3(x) for x in VALUES)
    ok &= len({tuple(f(x) for x in VALUES) for f in (
        lambda x: x, A.neg3, box, lambda x: A.neg3(box(x)), lambda x: A.neg3(box(A.neg3(x))),
    )}) == 5
    return ok, f"{len(strings)} strings collapse onto {len(functions)} distinct functions"


# ---------------------------------------------------------------------------
# 5. translations


def _all_valuations(names):
    for values in itertools.product(VALUES, repeat=len(names)):
        yield dict(zip(names, values))


def criterion_translations(n_formulas: int = 10_000, n_sequents: int = 1_000) -> tuple[bool, str]:
    rng = random.Random(SEED + 5)
    bad = 0
    for i in range(n_formulas):
        lang = Language.D if i % 2 == 0 else Language.BOX
        phi = random_prop_formula(rng, 6, lang=lang)
        back = translate_s(translate_t(phi)) if lang is Language.D else translate_t(translate_s(phi))
        names = A.sequent_atoms([], phi)
        if any(A.eval_prop(phi, v) != A.eval_prop(back, v) for v in _all_valuations(names)):
            bad += 1
    mismatched = 0
    for _ in range(n_sequents):
        prem = [random_prop_formula(rng, 4, atoms=A_ATOMS) for _ in range(rng.randint(0, 2))]
        concl = random_prop_formula(rng, 4, atoms=A_ATOMS)
        left = prop_consequence(prem, concl)
        right = prop_consequence([translate_t(g) for g in prem], translate_t(concl))
        if left != right:
            mismatched += 1
    return bad == 0 and mismatched == 0, (
        f"{n_formulas - bad}/{n_formulas} round trips preserve values; "
        f"{n_sequents - mismatched}/{n_sequents} sequents keep their verdict under t"
    )


A_ATOMS = tuple(parse(n) for n in ("p", "q", "r"))


# ---------------------------------------------------------------------------
# 6. model transfer


def criterion_transfer(n: int = 1_000) -> tuple[bool, str]:
    rng = random.Random(SEED + 6)
    fwd = bwd = 0
    for _ in range(n):
        I = random_rough(rng, 4)
        fwd += check_transfer_forward(I, [random_fo_formula(rng, 5)]).ok
        K = random_kripke(rng, 4)
        bwd += check_transfer_backward(K, [random_fo_formula(rng, 5)]).ok
    return fwd == n and bwd == n, f"forward {fwd}/{n}, backward {bwd}/{n}"


# ---------------------------------------------------------------------------
# 7. equivalence of the two consequence relations

# (premises, conclusion, bound)
EQUIV_SEQUENTS: list[tuple[list[str], str, int]] = [
    # rule instances over unary atoms
    (["P(x)", "Q(x)"], "P(x) & Q(x)", 2),
    (["P(x) & Q(x)"], "P(x)", 2),
    (["P(x) & Q(x)"], "Q(x)", 2),
    (["P(x)"], "P(x) | Q(x)", 2),
    (["Q(x)"], "P(x) | Q(x)", 2),
    (["P(x) | Q(x)", "P(x) -> S(x)", "Q(x) -> S(x)"], "S(x)", 2),
    (["P(x) -> false"], "~P(x)", 2),
    (["P(x)", "~P(x)"], "false", 2),
    (["false"], "P(x)", 2),
    ([], "P(x) | D P(x)", 2),
    (["D P(x)", "~D (P(x) | Q(x))"], "Q(x)", 2),
    ([], "~P(x) | ~~P(x)", 2),
    (["D P(x)", "D D P(x)"], "false", 2),
    (["P(x)", "D P(x)"], "Q(x) | ~Q(x)", 2),
    (["D ~P(x)"], "~~P(x)", 2),
    (["D D P(x)"], "~D P(x)", 2),
    (["~~D P(x)"], "D P(x)", 2),
    (["D P(x)"], "~~D P(x)", 2),
    (["P(x)"], "P(x)", 2),
    # even / odd modality collapse
    (["D ~D ~P(x)"], "D ~P(x)", 2),
    (["~D P(x)"], "~D ~D P(x)", 2),
    (["~D ~D P(x)"], "~D P(x)", 2),
    # failures of classical and intuitionistic principles
    ([], "P(x) | ~P(x)", 2),
    ([], "~~P(x) -> P(x)", 2),
    (["~~P(x)"], "P(x)", 2),
    (["D D P(x)"], "P(x)", 2),
    (["P(x) -> Q(x)"], "D Q(x) -> D P(x)", 2),
    (["P(x) <-> Q(x)"], "D P(x) <-> D Q(x)", 2),
    (["D P(x)"], "~P(x)", 2),
    (["P(x) | Q(x)"], "P(x)", 2),
    ([], "P(x) & D P(x)", 2),
    (["P(x) & D P(x)"], "false", 2),
    (["P(x) -> Q(x)", "Q(x) -> S(x)"], "P(x) -> S(x)", 2),
    (["P(x)", "P(x) -> Q(x)"], "Q(x)", 2),
    (["~(P(x) & Q(x))"], "~P(x) | ~Q(x)", 2),
    (["~P(x) | ~Q(x)"], "~(P(x) & Q(x))", 2),
    # quantifiers
    (["forall x. P(x)"], "P(y)", 2),
    (["P(y)"], "exists x. P(x)", 2),
    (["exists x. P(x)"], "forall x. P(x)", 2),
    (["exists x. P(x)"], "P(y)", 2),
    (["~exists x. P(x)"], "forall x. ~P(x)", 2),
    (["forall x. ~P(x)"], "~exists x. P(x)", 2),
    (["exists x. ~P(x)"], "~forall x. P(x)", 2),
    (["forall x. D P(x)"], "D exists x. P(x)", 2),
    (["D forall x. P(x)"], "exists x. D P(x)", 2),
    (["exists x. D P(x)"], "D forall x. P(x)", 2),
    ([], "forall x. (P(x) | ~P(x))", 2),
    ([], "forall x. (~P(x) | ~~P(x))", 2),
    ([], "exists x. P(x) | forall x. ~P(x)", 2),
    (["forall x. forall y. R(x, y)"], "forall y. forall x. R(x, y)", 2),
    (["exists x. forall y. R(x, y)"], "forall y. exists x. R(x, y)", 2),
    (["forall y. exists x. R(x, y)"], "exists x. forall y. R(x, y)", 2),
    (["R(x, y)"], "R(y, x)", 2),
    # constant domain
    (["forall x. (P(x) | Q)"], "(forall x. P(x)) | Q", 3),
    ([], "(forall x. (P(x) | Q)) -> (forall x. P(x)) | Q", 3),
    (["forall x. (P(x) | exists y. S(y))"], "(forall x. P(x)) | exists y. S(y)", 3),
    # propositional letters
    ([], "Q | ~Q", 2),
    (["D Q"], "~Q", 2),
    ([], "~Q | ~~Q", 2),
]


# Sequents whose smallest Kripke countermodel has two elements with a
# boundary pair between distinct classes: rough needs a 2-element class plus
# one more element, so the rough side is searched one size further.
# (premises, conclusion, Kripke bound, rough bound)
BOUND_ARTEFACTS: list[tuple[list[str], str, int, int]] = [
    (["forall x. R(x, x)"], "R(x, y) | ~R(x, y)", 2, 3),
]


def criterion_equivalence() -> tuple[bool, str]:
    failures = []
    valid = refuted = 0
    cases = [(p, c, b, b) for p, c, b in EQUIV_SEQUENTS] + BOUND_ARTEFACTS
    for prem, concl, bound, rough_bound in cases:
        rep = equivalence_harness([parse(p) for p in prem], parse(concl), None, bound, rough_bound=rough_bound)
        if not rep.ok:
            failures.append(f"{', '.join(prem)} |- {concl}: {'; '.join(rep.failures)}")
        elif rep.valid:
            valid += 1
        else:
            refuted += 1
    n = len(cases)
    detail = (
        f"{n - len(failures)}/{n} sequents agree ({valid} valid up to bound, {refuted} refuted; "
        f"{len(BOUND_ARTEFACTS)} with widened rough bound)"
    )
    if failures:
        detail += "; " + " | ".join(failures)
    return not failures and len(EQUIV_SEQUENTS) >= 50, detail


# ---------------------------------------------------------------------------
# 8. proof fixtures


def criterion_proofs() -> tuple[bool, str]:
    ok = True
    notes = []
    for fx in all_fixtures():
        verdict = check_proof(fx.tree, fx.system)
        exact = (
            isinstance(verdict, Accepted)
            and verdict.assumptions == fx.assumptions
            and verdict.conclusion == fx.conclusion
        )
        sound = isinstance(verdict, Accepted) and isinstance(
            prop_consequence(list(verdict.assumptions), verdict.conclusion), Valid
        )
        total = caught = 0
        for _, mutant in mutations(fx.tree, fx.system):
            total += 1
            mv = check_proof(mutant, fx.system)
            if not isinstance(mv, Accepted):
                caught += 1
                continue
            if isinstance(verdict, Accepted) and mv.sequent != verdict.sequent:
                caught += 1
            sound &= isinstance(prop_consequence(list(mv.assumptions), mv.conclusion), Valid)
        ok &= exact and sound and total >= 100 and caught == total
        notes.append(f"{fx.name} {'ok' if exact else 'WRONG'} {caught}/{total}")
    return ok, "; ".join(notes)


# ---------------------------------------------------------------------------
# 9. persistence


def criterion_persistence(n: int = 10_000) -> tuple[bool, str]:
    rng = random.Random(SEED + 9)
    good = 0
    for _ in range(n):
        K = random_kripke(rng, 3)
        phi = random_fo_formula(rng, 5)
        good += (not forces(K, Node.ONE, phi)) or forces(K, Node.HALF, phi)
    return good == n, f"{good}/{n} pairs persistent"


# ---------------------------------------------------------------------------
# 10. parser


def criterion_parser(n: int = 10_000) -> tuple[bool, str]:
    rng = random.Random(SEED + 10)
    good = 0
    for i in range(n):
        phi = random_formula(rng, 8, Language.D if i % 2 == 0 else Language.BOX)
        text = to_text(phi)
        good += parse(text) == phi and to_text(parse(text)) == text
    return good == n, f"{good}/{n} formulas round-trip"


# ---------------------------------------------------------------------------

CRITERIA: list[tuple[int, str, Callable[[], tuple[bool, str]], float]] = [
    (1, "algebra tables and identities", criterion_algebra, 0.001),
    (2, "rule soundness", criterion_rules, 1.0),
    (3, "negative results", criterion_negative, 1.0),
    (4, "modality collapse", criterion_modalities, 1.0),
    (5, "translations", criterion_translations, 60.0),
    (6, "model transfer", criterion_transfer, 30.0),
    (7, "rough/Kripke equivalence", criterion_equivalence, 120.0),
    (8, "proof fixtures", criterion_proofs, 10.0),
    (9, "persistence", criterion_persistence, 60.0),
    (10, "parser round trip", criterion_parser, 60.0),
]


def run_criterion(number: int) -> Result:
    for num, name, fn, budget in CRITERIA:
        if num == number:
            # cheap criteria are timed as the best of a few runs
            repeats = 5 if budget <= 1.0 else 1
            best = float("inf")
            for _ in range(repeats):
                start = time.perf_counter()
                passed, detail = fn()
                best = min(best, time.perf_counter() - start)
            return Result(num, name, passed, detail, best, budget)
    raise KeyError(number)


def run_all() -> list[Result]:
    return [run_criterion(num) for num, *_ in CRITERIA]
