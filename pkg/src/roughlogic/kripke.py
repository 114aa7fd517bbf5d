"""Constant-domain Kripke models over the two-node frame 1 < 1/2."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from .algebra3 import HALF, ONE, ZERO, SearchGuardExceeded, Three
from .rough_semantics import (
    SemanticError,
    ValidUpToBound,
    assignments,
    prepare_sequent,
    search_guard,
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
    Language,
    Not,
    Or,
    Signature,
    common_language,
    expand_derived,
    has_derived,
    language_of,
    translate_s,
)

KRIPKE_NAMES = ("u", "w", "z")


class Node(enum.Enum):
    """The frame {1 < 1/2}: node 1 sits below node 1/2."""

    ONE = "1"
    HALF = "1/2"

    def __str__(self):
        return self.value

    @property
    def up(self) -> tuple["Node", ...]:
        return (Node.ONE, Node.HALF) if self is Node.ONE else (Node.HALF,)

    @property
    def down(self) -> tuple["Node", ...]:
        return (Node.ONE,) if self is Node.ONE else (Node.ONE, Node.HALF)

    @classmethod
    def parse(cls, text: str) -> "Node":
        key = str(text).strip().lower()
        if key in ("1", "one"):
            return cls.ONE
        if key in ("1/2", "half", "0.5"):
            return cls.HALF
        raise ValueError(f"not a node: {text!r}")


NODES = (Node.ONE, Node.HALF)


class MonotonicityError(SemanticError):
    pass


@dataclass(frozen=True, eq=False)
class KripkeModel:
    universe: tuple
    sig: Signature
    rho: Mapping[str, tuple[frozenset, frozenset]]
    assignment: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self):
        if not self.universe:
            raise SemanticError("empty universe")
        members = set(self.universe)
        norm = {}
        for name, arity in self.sig.relations.items():
            at_1, at_half = self.rho.get(name, ((), ()))
            at_1 = frozenset(tuple(t) for t in at_1)
            at_half = frozenset(tuple(t) for t in at_half)
            for t in at_1 | at_half:
                if len(t) != arity or any(u not in members for u in t):
                    raise SemanticError(f"relation {name}: tuple {t!r} is not in U^{arity}")
            if not at_1 <= at_half:
                missing = sorted(at_1 - at_half, key=repr)
                raise MonotonicityError(
                    f"relation {name}: {missing[0]!r} holds at node 1 but not at node 1/2"
                )
            norm[name] = (at_1, at_half)
        extra = set(self.rho) - set(self.sig.relations)
        if extra:
            raise SemanticError(f"tables for undeclared relations {sorted(extra)}")
        for x, u in self.assignment.items():
            if u not in members:
                raise SemanticError(f"assignment sends {x} outside the universe")
        object.__setattr__(self, "universe", tuple(self.universe))
        object.__setattr__(self, "rho", norm)
        object.__setattr__(self, "assignment", dict(self.assignment))

    def __eq__(self, other):
        if not isinstance(other, KripkeModel):
            return NotImplemented
        return (
            self.universe == other.universe
            and self.sig == other.sig
            and self.rho == other.rho
            and self.assignment == other.assignment
        )

    __hash__ = object.__hash__

    def holds(self, node: Node, rel: str, t: tuple) -> bool:
        at_1, at_half = self.rho[rel]
        return t in (at_1 if node is Node.ONE else at_half)

    def with_assignment(self, env: Mapping) -> "KripkeModel":
        return KripkeModel(self.universe, self.sig, self.rho, env)


def make_kripke(universe: Sequence, rho: Mapping, assignment: Mapping | None = None,
                sig: Signature | None = None) -> KripkeModel:
    """Validated model; ``rho`` maps relation names to ``(at_1, at_half)``.

    Without ``sig`` the arities are read off the tuples (empty tables count as 0-ary
    only if no tuple says otherwise, so pass ``sig`` for empty relations).
    """
    if sig is None:
        rels = {}
        for name, (a1, ah) in rho.items():
            lengths = {len(tuple(t)) for t in (*a1, *ah)}
            if len(lengths) > 1:
                raise SemanticError(f"relation {name}: tuples of different lengths")
            rels[name] = lengths.pop() if lengths else 0
        sig = Signature(rels)
    return KripkeModel(tuple(universe), sig, dict(rho), dict(assignment or {}))


# ---------------------------------------------------------------------------
# Forcing


def forces(K: KripkeModel, node: Node | str, phi: Formula, assignment: Mapping | None = None) -> bool:
    """``node ⊩ phi`` in K.  Box-language formulas are first translated with s."""
    if not isinstance(node, Node):
        node = Node.parse(node)
    if has_derived(phi):
        phi = expand_derived(phi)
    if language_of(phi) is Language.BOX:
        phi = translate_s(phi)
    env = dict(K.assignment if assignment is None else assignment)
    return _force(K, node, phi, env)


def forces_direct(K: KripkeModel, node: Node, phi: Formula, assignment: Mapping | None = None) -> bool:
    """Forcing that reads [] in place as ~D, without translating first."""
    if has_derived(phi):
        phi = expand_derived(phi)
    env = dict(K.assignment if assignment is None else assignment)
    return _force(K, node, phi, env)


def _force(K: KripkeModel, k: Node, phi: Formula, env: dict) -> bool:
    if isinstance(phi, Atom):
        try:
            t = tuple(env[x] for x in phi.args)
        except KeyError as e:
            raise SemanticError(f"unbound free variable {e.args[0]}") from None
        if phi.rel not in K.rho:
            raise SemanticError(f"unknown relation {phi.rel}")
        return K.holds(k, phi.rel, t)
    if isinstance(phi, Bottom):
        return False
    if isinstance(phi, And):
        return _force(K, k, phi.left, env) and _force(K, k, phi.right, env)
    if isinstance(phi, Or):
        return _force(K, k, phi.left, env) or _force(K, k, phi.right, env)
    if isinstance(phi, Not):
        return all(not _force(K, k2, phi.sub, env) for k2 in k.up)
    if isinstance(phi, Dual):
        return any(not _force(K, k2, phi.sub, env) for k2 in k.down)
    if isinstance(phi, Box):
        return _force(K, k, Not(Dual(phi.sub)), env)
    if isinstance(phi, Forall):
        return all(
            _force(K, k2, phi.body, {**env, phi.var: u}) for k2 in k.up for u in K.universe
        )
    if isinstance(phi, Exists):
        # evaluated at the query node itself
        return any(_force(K, k, phi.body, {**env, phi.var: u}) for u in K.universe)
    raise TypeError(f"unexpected node {phi!r}")


def kripke_value(K: KripkeModel, phi: Formula, assignment: Mapping | None = None) -> Three:
    """1 if forced at both nodes, 1/2 if only at node 1/2, 0 if at neither."""
    at_1 = forces(K, Node.ONE, phi, assignment)
    at_half = forces(K, Node.HALF, phi, assignment)
    if at_1 and not at_half:
        raise AssertionError("persistence violated")
    return ONE if at_1 else HALF if at_half else ZERO


# ---------------------------------------------------------------------------
# Enumeration and bounded consequence

# per tuple: absent, at node 1/2 only, at both nodes
STATES = (0, 1, 2)


def kripke_universe(n: int) -> tuple[str, ...]:
    return tuple(KRIPKE_NAMES[i] if i < len(KRIPKE_NAMES) else f"u{i}" for i in range(n))


def count_structures(sig: Signature, n: int) -> int:
    return 3 ** sum(n**arity for arity in sig.relations.values())


def enumerate_models(sig: Signature, n: int, guard: int | None = None) -> Iterator[KripkeModel]:
    """Every structure with |U| = n exactly once (empty assignment).

    A three-state counter runs over the tuples of each relation, relations
    sorted by name, tuples in product order, the last tuple varying fastest.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    guard = search_guard() if guard is None else guard
    if count_structures(sig, n) > guard:
        raise SearchGuardExceeded(f"{count_structures(sig, n)} structures exceed the guard of {guard}")
    universe = kripke_universe(n)
    rels = list(sig.relations.items())
    slots = [(name, list(itertools.product(universe, repeat=arity))) for name, arity in rels]
    flat = [(name, t) for name, tuples in slots for t in tuples]
    for states in itertools.product(STATES, repeat=len(flat)):
        rho = {name: (set(), set()) for name, _ in rels}
        for (name, t), st in zip(flat, states):
            if st >= 1:
                rho[name][1].add(t)
            if st == 2:
                rho[name][0].add(t)
        yield KripkeModel(universe, sig, {k: (frozenset(a), frozenset(b)) for k, (a, b) in rho.items()})


@dataclass(frozen=True)
class KripkeCountermodel:
    model: KripkeModel
    node: Node


def kripke_consequence_bounded(
    premises: Sequence[Formula],
    conclusion: Formula,
    sig: Signature | None = None,
    max_universe: int = 2,
    guard: int | None = None,
) -> ValidUpToBound | KripkeCountermodel:
    """Search models with |U| <= max_universe for a node forcing every premise but
    not the conclusion.  Order: universe size, structure, assignment, node 1 before 1/2."""
    if max_universe < 1:
        raise ValueError("max_universe must be at least 1")
    premises, conclusion, used, variables = prepare_sequent(premises, conclusion, sig)
    if common_language([*premises, conclusion]) is Language.BOX:
        premises = [translate_s(g) for g in premises]
        conclusion = translate_s(conclusion)
    guard = search_guard() if guard is None else guard
    total = sum(count_structures(used, n) * n ** len(variables) for n in range(1, max_universe + 1))
    if total > guard:
        raise SearchGuardExceeded(f"{total} Kripke models exceed the guard of {guard}")
    for n in range(1, max_universe + 1):
        for K in enumerate_models(used, n, guard):
            for env in assignments(K.universe, variables):
                for k in NODES:
                    if all(_force(K, k, g, dict(env)) for g in premises) and not _force(
                        K, k, conclusion, dict(env)
                    ):
                        model = KripkeModel(K.universe, _full(used, sig), K.rho, env)
                        return KripkeCountermodel(model, k)
    return ValidUpToBound(max_universe)


def _full(used: Signature, sig: Signature | None) -> Signature:
    return used if sig is None else used.merge(sig)


def is_kripke_countermodel(K: KripkeModel, node: Node, premises, conclusion) -> bool:
    return all(forces(K, node, g) for g in premises) and not forces(K, node, conclusion)
