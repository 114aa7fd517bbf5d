"""Seeded random formulas and models for property suites."""

from __future__ import annotations

import itertools
import random
from typing import Sequence

from .kripke import KripkeModel, kripke_universe
from .rough_semantics import ROUGH_NAMES, RoughInterpretation
from .roughsets import restricted_growth_strings, space_from_block_ids
from .syntax import (
    BOTTOM,
    And,
    Atom,
    Box,
    Dual,
    Exists,
    Forall,
    Formula,
    Iff,
    Imp,
    Language,
    Not,
    Or,
    Signature,
)

PROP_ATOMS = tuple(Atom(n) for n in ("p", "q", "r", "s"))
FO_SIG = Signature({"P": 1, "R": 2, "Q": 0})
FO_VARS = ("x", "y")


def random_prop_formula(
    rng: random.Random,
    depth: int,
    atoms: Sequence[Atom] = PROP_ATOMS,
    lang: Language = Language.D,
    derived: bool = False,
) -> Formula:
    """A quantifier-free formula of depth at most ``depth``."""
    if depth <= 0 or rng.random() < 0.2:
        return BOTTOM if rng.random() < 0.08 else rng.choice(atoms)
    modal = Dual if lang is Language.D else Box
    ops = [Not, modal, And, Or] + ([Imp, Iff] if derived else [])
    op = rng.choice(ops)
    if op in (Not, Dual, Box):
        return op(random_prop_formula(rng, depth - 1, atoms, lang, derived))
    return op(
        random_prop_formula(rng, depth - 1, atoms, lang, derived),
        random_prop_formula(rng, depth - 1, atoms, lang, derived),
    )


def random_fo_formula(
    rng: random.Random,
    depth: int,
    sig: Signature = FO_SIG,
    variables: Sequence[str] = FO_VARS,
    lang: Language = Language.D,
    derived: bool = False,
) -> Formula:
    """A first-order formula whose variables are drawn from ``variables``."""
    if depth <= 0 or rng.random() < 0.15:
        if rng.random() < 0.05:
            return BOTTOM
        name = rng.choice(sorted(sig.relations))
        return Atom(name, tuple(rng.choice(variables) for _ in range(sig.relations[name])))
    modal = Dual if lang is Language.D else Box
    ops = [Not, modal, And, Or, Forall, Exists] + ([Imp, Iff] if derived else [])
    op = rng.choice(ops)
    sub = lambda: random_fo_formula(rng, depth - 1, sig, variables, lang, derived)  # noqa: E731
    if op in (Forall, Exists):
        return op(rng.choice(variables), sub())
    if op in (Not, Dual, Box):
        return op(sub())
    return op(sub(), sub())


def random_formula(rng: random.Random, depth: int, lang: Language = Language.D) -> Formula:
    """Mixed generator used by the parser round trip: quantifiers and sugar included."""
    if rng.random() < 0.5:
        return random_prop_formula(rng, depth, lang=lang, derived=True)
    return random_fo_formula(rng, depth, lang=lang, derived=True)


def _tuples(universe, arity):
    return list(itertools.product(universe, repeat=arity))


def random_rough(
    rng: random.Random,
    max_n: int,
    sig: Signature = FO_SIG,
    variables: Sequence[str] = FO_VARS,
) -> RoughInterpretation:
    n = rng.randint(1, max_n)
    universe = tuple(ROUGH_NAMES[:n])
    rgs = rng.choice(list(restricted_growth_strings(n)))
    space = space_from_block_ids(universe, rgs)
    sigma = {}
    for name, arity in sig.relations.items():
        pool = list(universe) if arity == 0 else _tuples(universe, arity)
        sigma[name] = frozenset(t for t in pool if rng.random() < 0.5)
    env = {x: rng.choice(universe) for x in variables}
    return RoughInterpretation(space, sig, sigma, env)


def random_kripke(
    rng: random.Random,
    max_n: int,
    sig: Signature = FO_SIG,
    variables: Sequence[str] = FO_VARS,
) -> KripkeModel:
    n = rng.randint(1, max_n)
    universe = kripke_universe(n)
    rho = {}
    for name, arity in sig.relations.items():
        at_1, at_half = set(), set()
        for t in _tuples(universe, arity):
            state = rng.randrange(3)
            if state >= 1:
                at_half.add(t)
            if state == 2:
                at_1.add(t)
        rho[name] = (frozenset(at_1), frozenset(at_half))
    env = {x: rng.choice(universe) for x in variables}
    return KripkeModel(universe, sig, rho, env)
