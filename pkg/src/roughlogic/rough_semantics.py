"""Rough interpretations, their three-valued valuation, and bounded rough consequence.

A relation letter of arity n >= 1 is a subset of U^n, read as a rough subset
of the n-th power space.  A 0-ary letter has no power space to live in; it is
interpreted by an *extension* X ⊆ U and takes the value of ``forall y. X(y)``,
i.e. 1 when X = U, 1/2 when X meets every block but misses some element, and
0 otherwise.  This keeps all three values reachable for propositional letters.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Mapping, Sequence

from .algebra3 import HALF, ONE, ZERO, SearchGuardExceeded, Three, box3, d3, neg3
from .roughsets import (
    ApproximationSpace,
    RoughSetError,
    power_space,
    restricted_growth_strings,
    space_from_block_ids,
)
from .syntax import (
    And,
    Atom,
    Bottom,
    Box,
    Dual,
    Exists,
    Forall,
    Formula,
    LogicSyntaxError,
    Not,
    Or,
    Signature,
    common_language,
    expand_derived,
    free_vars,
    has_derived,
)

DEFAULT_SEARCH_GUARD = 2_000_000
ROUGH_NAMES = "abcdefgh"


def search_guard() -> int:
    return int(os.environ.get("ROUGHLOGIC_SEARCH_GUARD", DEFAULT_SEARCH_GUARD))


class SemanticError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class RoughInterpretation:
    space: ApproximationSpace
    sig: Signature
    sigma: Mapping[str, frozenset]
    assignment: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self):
        members = set(self.space.universe)
        tables = {}
        for name, arity in self.sig.relations.items():
            raw = self.sigma.get(name, ())
            if arity == 0:
                table = frozenset(raw)
                bad = [u for u in table if u not in members]
            else:
                table = frozenset(tuple(t) for t in raw)
                bad = [t for t in table if len(t) != arity or any(u not in members for u in t)]
            if bad:
                raise SemanticError(f"relation {name}: entries outside U^{arity}: {bad[:3]!r}")
            tables[name] = table
        extra = set(self.sigma) - set(self.sig.relations)
        if extra:
            raise SemanticError(f"tables for undeclared relations {sorted(extra)}")
        for x, u in self.assignment.items():
            if u not in members:
                raise SemanticError(f"assignment sends {x} outside the universe")
        object.__setattr__(self, "sigma", tables)
        object.__setattr__(self, "assignment", dict(self.assignment))

    def __eq__(self, other):
        if not isinstance(other, RoughInterpretation):
            return NotImplemented
        return (
            self.space == other.space
            and self.sig == other.sig
            and self.sigma == other.sigma
            and self.assignment == other.assignment
        )

    __hash__ = object.__hash__

    @cached_property
    def approximations(self) -> dict[str, tuple[frozenset, frozenset]]:
        """(lower, upper) per relation; for 0-ary letters, of the extension in U."""
        out = {}
        for name, arity in self.sig.relations.items():
            p = power_space(self.space, max(arity, 1))
            table = self.sigma[name]
            if arity == 0:
                table = frozenset((u,) for u in table)
            out[name] = (p.lower(table), p.upper(table))
        return out

    def variant(self, x: str, a) -> "RoughInterpretation":
        return RoughInterpretation(self.space, self.sig, self.sigma, {**self.assignment, x: a})

    def atom_value(self, rel: str, args: Sequence) -> Three:
        """Value of relation ``rel`` at the tuple of elements ``args``."""
        low, up = self.approximations[rel]
        if self.sig.relations[rel] == 0:
            n = len(self.space.universe)
            if len(low) == n:
                return ONE
            return HALF if len(up) == n else ZERO
        t = tuple(args)
        if t in low:
            return ONE
        return HALF if t in up else ZERO


def valuate(I: RoughInterpretation, phi: Formula, assignment: Mapping | None = None) -> Three:
    """The three-valued valuation induced by ``I`` (box read as ~D)."""
    if has_derived(phi):
        phi = expand_derived(phi)
    env = dict(I.assignment if assignment is None else assignment)
    return _val(I, phi, env)


def _val(I: RoughInterpretation, phi: Formula, env: dict) -> Three:
    if isinstance(phi, Atom):
        if phi.rel not in I.sig.relations:
            raise SemanticError(f"unknown relation {phi.rel}")
        if I.sig.relations[phi.rel] != len(phi.args):
            raise SemanticError(f"arity mismatch for {phi.rel}")
        try:
            args = [env[x] for x in phi.args]
        except KeyError as e:
            raise SemanticError(f"unbound free variable {e.args[0]}") from None
        return I.atom_value(phi.rel, args)
    if isinstance(phi, Bottom):
        return ZERO
    if isinstance(phi, Not):
        return neg3(_val(I, phi.sub, env))
    if isinstance(phi, Dual):
        return d3(_val(I, phi.sub, env))
    if isinstance(phi, Box):
        return box3(_val(I, phi.sub, env))
    if isinstance(phi, And):
        left = _val(I, phi.left, env)
        return left if left == ZERO else min(left, _val(I, phi.right, env))
    if isinstance(phi, Or):
        left = _val(I, phi.left, env)
        return left if left == ONE else max(left, _val(I, phi.right, env))
    if isinstance(phi, (Forall, Exists)):
        saved = env.get(phi.var, _MISSING)
        best = ONE if isinstance(phi, Forall) else ZERO
        pick = min if isinstance(phi, Forall) else max
        try:
            for a in I.space.universe:
                env[phi.var] = a
                best = pick(best, _val(I, phi.body, env))
                if best == (ZERO if isinstance(phi, Forall) else ONE):
                    break
        finally:
            if saved is _MISSING:
                env.pop(phi.var, None)
            else:
                env[phi.var] = saved
        return best
    raise TypeError(f"unexpected node {phi!r}")


_MISSING = object()


# ---------------------------------------------------------------------------
# Bounded consequence


@dataclass(frozen=True)
class ValidUpToBound:
    bound: int

    def __str__(self):
        return f"valid-up-to-bound({self.bound})"


@dataclass(frozen=True)
class RoughCountermodel:
    interpretation: RoughInterpretation
    premise_value: Three
    conclusion_value: Three


def prepare_sequent(
    premises: Sequence[Formula], conclusion: Formula, sig: Signature | None
) -> tuple[list[Formula], Formula, Signature, list[str]]:
    """Expand derived connectives, settle the signature and the free variables."""
    lang = common_language([*premises, conclusion])
    premises = [expand_derived(g, lang) for g in premises]
    conclusion = expand_derived(conclusion, lang)
    used = Signature.from_formulas([*premises, conclusion])
    if sig is not None:
        for name, arity in used.relations.items():
            if sig.relations.get(name, arity) != arity or name not in sig.relations:
                raise LogicSyntaxError(f"relation {name}/{arity} not in the signature")
    variables = sorted(set().union(*(free_vars(f) for f in (*premises, conclusion))))
    return premises, conclusion, used, variables


def _table_count(n: int, sig: Signature) -> int:
    total = 1
    for arity in sig.relations.values():
        total *= 2 ** (n ** max(arity, 1))
    return total


def count_rough_models(sig: Signature, max_universe: int, nvars: int) -> int:
    total = 0
    for n in range(1, max_universe + 1):
        partitions = sum(1 for _ in restricted_growth_strings(n))
        total += partitions * _table_count(n, sig) * n**nvars
    return total


def enumerate_structures(sig: Signature, n: int) -> Iterator[RoughInterpretation]:
    """Every rough structure with |U| = n (empty assignment), in search order.

    Partitions in restricted-growth-string order, then tables as binary
    counters over tuple order, relations sorted by name.
    """
    universe = tuple(ROUGH_NAMES[i] if i < len(ROUGH_NAMES) else f"a{i}" for i in range(n))
    rels = list(sig.relations.items())
    slots = []
    for _, arity in rels:
        if arity == 0:
            slots.append(list(universe))
        else:
            slots.append(list(itertools.product(universe, repeat=arity)))
    for rgs in restricted_growth_strings(n):
        space = space_from_block_ids(universe, rgs)
        for masks in itertools.product(*(range(2 ** len(s)) for s in slots)):
            sigma = {
                name: frozenset(t for i, t in enumerate(slot) if mask >> i & 1)
                for (name, _), slot, mask in zip(rels, slots, masks)
            }
            yield RoughInterpretation(space, sig, sigma)


def assignments(universe: Sequence, variables: Sequence[str]) -> Iterator[dict]:
    for values in itertools.product(universe, repeat=len(variables)):
        yield dict(zip(variables, values))


def enumerate_interpretations(
    sig: Signature, n: int, variables: Sequence[str] = ()
) -> Iterator[RoughInterpretation]:
    """Every rough interpretation with |U| = n; assignments vary fastest, lexicographically."""
    for base in enumerate_structures(sig, n):
        for env in assignments(base.space.universe, variables):
            yield RoughInterpretation(base.space, sig, base.sigma, env)


def rough_consequence_bounded(
    premises: Sequence[Formula],
    conclusion: Formula,
    sig: Signature | None = None,
    max_universe: int = 2,
    guard: int | None = None,
) -> ValidUpToBound | RoughCountermodel:
    """Search rough interpretations with |U| <= max_universe for a violation of
    ``min{v(g)} <= v(conclusion)``; the first one in search order is returned."""
    if max_universe < 1:
        raise ValueError("max_universe must be at least 1")
    premises, conclusion, used, variables = prepare_sequent(premises, conclusion, sig)
    guard = search_guard() if guard is None else guard
    total = count_rough_models(used, max_universe, len(variables))
    if total > guard:
        raise SearchGuardExceeded(f"{total} rough interpretations exceed the guard of {guard}")
    for n in range(1, max_universe + 1):
        for I, env in _search_stream(used, n, variables):
            lhs = ONE
            for g in premises:
                lhs = min(lhs, _val(I, g, env))
                if lhs == ZERO:
                    break
            if lhs == ZERO:
                continue
            rhs = _val(I, conclusion, env)
            if lhs > rhs:
                I = RoughInterpretation(I.space, I.sig, I.sigma, env)
                return RoughCountermodel(_widen(I, sig), lhs, rhs)
    return ValidUpToBound(max_universe)


def _search_stream(sig: Signature, n: int, variables: Sequence[str]):
    for base in enumerate_structures(sig, n):
        for env in assignments(base.space.universe, variables):
            yield base, env


def _widen(I: RoughInterpretation, sig: Signature | None) -> RoughInterpretation:
    """Re-home a countermodel on the caller's full signature (unused tables empty)."""
    if sig is None or sig == I.sig:
        return I
    return RoughInterpretation(I.space, I.sig.merge(sig), I.sigma, I.assignment)


def is_rough_countermodel(
    I: RoughInterpretation, premises: Sequence[Formula], conclusion: Formula
) -> bool:
    lhs = min((valuate(I, g) for g in premises), default=ONE)
    return lhs > valuate(I, conclusion)


def realize(values: Mapping[Atom, Three]) -> RoughInterpretation:
    """A rough interpretation giving each listed atom the requested value.

    Every variable x gets its own two-element block {(x, 0), (x, 1)} and is
    assigned (x, 0); distinct atoms then live in distinct classes of their
    power space, so their tables can be chosen independently.
    """
    variables = sorted({x for a in values for x in a.args}) or ["_"]
    universe = [(x, eps) for x in variables for eps in (0, 1)]
    space = space_from_block_ids(universe, [i // 2 for i in range(len(universe))])
    env = {x: (x, 0) for x in variables if x != "_"}
    sig = Signature.from_formulas(values)
    sigma: dict[str, set] = {name: set() for name in sig.relations}
    for a, v in values.items():
        if not a.args:
            ext = {ONE: universe, HALF: [u for u in universe if u[1] == 0], ZERO: []}[v]
            sigma[a.rel] |= set(ext)
            continue
        point = tuple(env[x] for x in a.args)
        if v == ONE:
            sigma[a.rel] |= set(itertools.product(*([(x, 0), (x, 1)] for x in a.args)))
        elif v == HALF:
            sigma[a.rel].add(point)
    return RoughInterpretation(space, sig, {k: frozenset(t) for k, t in sigma.items()}, env)


__all__ = [
    "RoughInterpretation",
    "RoughCountermodel",
    "ValidUpToBound",
    "SemanticError",
    "RoughSetError",
    "valuate",
    "rough_consequence_bounded",
    "enumerate_interpretations",
    "is_rough_countermodel",
    "realize",
]
