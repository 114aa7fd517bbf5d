"""The three-element regular bi-Stone double p-algebra and propositional consequence."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .syntax import (
    And,
    Atom,
    Bottom,
    Box,
    Dual,
    Formula,
    LogicSyntaxError,
    Not,
    Or,
    QUANT,
    atoms,
    common_language,
    expand_derived,
    has_derived,
    is_quantifier_free,
    to_text,
)

DEFAULT_ATOM_GUARD = 12


class Three(enum.IntEnum):
    """0 < 1/2 < 1, stored as 0, 1, 2 so that ``min``/``max`` are meet/join."""

    ZERO = 0
    HALF = 1
    ONE = 2

    def __str__(self):
        return ("0", "1/2", "1")[self]

    @classmethod
    def parse(cls, text: str | int | float) -> "Three":
        key = str(text).strip()
        table = {"0": cls.ZERO, "1/2": cls.HALF, "0.5": cls.HALF, "½": cls.HALF, "1": cls.ONE}
        try:
            return table[key]
        except KeyError:
            raise ValueError(f"not a truth value: {text!r}") from None


VALUES = (Three.ZERO, Three.HALF, Three.ONE)
ZERO, HALF, ONE = VALUES


def meet3(x: Three, y: Three) -> Three:
    return min(x, y)


def join3(x: Three, y: Three) -> Three:
    return max(x, y)


def neg3(x: Three) -> Three:
    return ONE if x == ZERO else ZERO


def d3(x: Three) -> Three:
    return ZERO if x == ONE else ONE


def box3(x: Three) -> Three:
    return neg3(d3(x))


UNARY_OPS: dict[str, Callable[[Three], Three]] = {"~": neg3, "D": d3}


def compose(m: str) -> tuple[Three, ...]:
    """Table of the modality string ``m`` (outermost first) on 0, 1/2, 1."""
    out = []
    for x in VALUES:
        for ch in reversed(m):
            x = UNARY_OPS[ch](x)
        out.append(x)
    return tuple(out)


# ---------------------------------------------------------------------------
# Propositional evaluation

PropValuation = Mapping[str, Three]


def atom_key(a: Atom) -> str:
    return to_text(a)


def eval_prop(phi: Formula, v: PropValuation) -> Three:
    """Homomorphic extension of ``v`` (keyed by printed atoms) to ``phi``.

    Derived connectives are expanded on the fly using the language of the
    surrounding formula.
    """
    if has_derived(phi):
        phi = expand_derived(phi)
    return _eval(phi, v)


def _eval(phi: Formula, v: PropValuation) -> Three:
    if isinstance(phi, Atom):
        try:
            return v[atom_key(phi)]
        except KeyError:
            raise KeyError(f"atom {atom_key(phi)} has no value") from None
    if isinstance(phi, Bottom):
        return ZERO
    if isinstance(phi, Not):
        return neg3(_eval(phi.sub, v))
    if isinstance(phi, Dual):
        return d3(_eval(phi.sub, v))
    if isinstance(phi, Box):
        return box3(_eval(phi.sub, v))
    if isinstance(phi, And):
        return min(_eval(phi.left, v), _eval(phi.right, v))
    if isinstance(phi, Or):
        return max(_eval(phi.left, v), _eval(phi.right, v))
    if isinstance(phi, QUANT):
        raise LogicSyntaxError("eval_prop needs a quantifier-free formula")
    raise TypeError(f"unexpected node {phi!r}")


# ---------------------------------------------------------------------------
# Consequence


@dataclass(frozen=True)
class Valid:
    pass


@dataclass(frozen=True)
class Countermodel:
    valuation: dict[str, Three]

    def __str__(self):
        return ", ".join(f"v({k})={v}" for k, v in self.valuation.items())


class SearchGuardExceeded(RuntimeError):
    pass


def sequent_atoms(premises: Sequence[Formula], conclusion: Formula) -> list[str]:
    keys = {atom_key(a) for f in (*premises, conclusion) for a in atoms(f)}
    return sorted(keys)


def violates(premises: Sequence[Formula], conclusion: Formula, v: PropValuation) -> bool:
    lhs = min((eval_prop(g, v) for g in premises), default=ONE)
    return lhs > eval_prop(conclusion, v)


def prop_consequence(
    premises: Sequence[Formula],
    conclusion: Formula,
    atom_guard: int = DEFAULT_ATOM_GUARD,
) -> Valid | Countermodel:
    """Decide ``min{v(g) : g in premises} <= v(conclusion)`` for all valuations.

    Returns the lexicographically first violating valuation (atoms sorted by
    printed name, values ordered 0 < 1/2 < 1) when the consequence fails.
    """
    for f in (*premises, conclusion):
        if not is_quantifier_free(f):
            raise LogicSyntaxError("prop_consequence needs quantifier-free formulas")
    lang = common_language([*premises, conclusion])
    premises = [expand_derived(g, lang) for g in premises]
    conclusion = expand_derived(conclusion, lang)
    names = sequent_atoms(premises, conclusion)
    if len(names) > atom_guard:
        raise SearchGuardExceeded(f"{len(names)} atoms exceed the guard of {atom_guard}")
    for values in itertools.product(VALUES, repeat=len(names)):
        v = dict(zip(names, values))
        if violates(premises, conclusion, v):
            return Countermodel(v)
    return Valid()


def equivalent(a: Formula, b: Formula) -> bool:
    """Same value under every valuation of the atoms of both formulas."""
    a, b = expand_derived(a), expand_derived(b)
    names = sequent_atoms([a], b)
    for values in itertools.product(VALUES, repeat=len(names)):
        v = dict(zip(names, values))
        if _eval(a, v) != _eval(b, v):
            return False
    return True
