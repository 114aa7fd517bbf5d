"""Formulas of the D-language and the box-language.

One AST serves both languages; ``language_of`` tells them apart.  The
concrete grammar (ASCII, with Unicode aliases on input)::

    false          bottom
    ~ f            intuitionistic negation
    D f            dual intuitionistic negation
    [] f           necessity
    f & g, f | g   conjunction, disjunction (left-assoc)
    f -> g         conditional (right-assoc, derived)
    f <-> g        biconditional (right-assoc, derived)
    forall x. f    universal quantifier, maximal scope
    exists x. f    existential quantifier, maximal scope

Precedence: unary > ``&`` > ``|`` > ``->`` > ``<->``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence, Union

RESERVED = frozenset({"D", "false", "forall", "exists"})


class LogicSyntaxError(ValueError):
    """Raised for any lexical, grammatical or well-formedness problem."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class Language(enum.Enum):
    D = "d"
    BOX = "box"


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class Atom:
    rel: str
    args: tuple[str, ...] = ()


@dataclass(frozen=True)
class Not:
    sub: "Formula"


@dataclass(frozen=True)
class Dual:
    sub: "Formula"


@dataclass(frozen=True)
class Box:
    sub: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Imp:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


Formula = Union[Bottom, Atom, Not, Dual, Box, And, Or, Imp, Iff, Forall, Exists]

UNARY = (Not, Dual, Box)
BINARY = (And, Or, Imp, Iff)
QUANT = (Forall, Exists)

BOTTOM = Bottom()


def children(phi: Formula) -> tuple[Formula, ...]:
    if isinstance(phi, UNARY):
        return (phi.sub,)
    if isinstance(phi, BINARY):
        return (phi.left, phi.right)
    if isinstance(phi, QUANT):
        return (phi.body,)
    return ()


def rebuild(phi: Formula, kids: Sequence[Formula]) -> Formula:
    """Return ``phi`` with its immediate subformulas replaced by ``kids``."""
    if isinstance(phi, UNARY):
        return type(phi)(kids[0])
    if isinstance(phi, BINARY):
        return type(phi)(kids[0], kids[1])
    if isinstance(phi, QUANT):
        return type(phi)(phi.var, kids[0])
    return phi


def subformulas(phi: Formula) -> Iterator[Formula]:
    """Pre-order (left-to-right, depth-first) traversal."""
    stack = [phi]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(children(node)))


def depth(phi: Formula) -> int:
    kids = children(phi)
    return 1 + max((depth(k) for k in kids), default=0) if kids else 0


def atoms(phi: Formula) -> list[Atom]:
    """Distinct atoms of ``phi`` in first-occurrence order."""
    seen: dict[Atom, None] = {}
    for node in subformulas(phi):
        if isinstance(node, Atom):
            seen.setdefault(node, None)
    return list(seen)


def relations(phi: Formula) -> dict[str, int]:
    return {a.rel: len(a.args) for a in atoms(phi)}


def free_vars(phi: Formula) -> frozenset[str]:
    if isinstance(phi, Atom):
        return frozenset(phi.args)
    if isinstance(phi, QUANT):
        return free_vars(phi.body) - {phi.var}
    out: frozenset[str] = frozenset()
    for k in children(phi):
        out |= free_vars(k)
    return out


def is_quantifier_free(phi: Formula) -> bool:
    return not any(isinstance(n, QUANT) for n in subformulas(phi))


def has_derived(phi: Formula) -> bool:
    return any(isinstance(n, (Imp, Iff)) for n in subformulas(phi))


def language_of(phi: Formula) -> Language | None:
    """``Language.D``, ``Language.BOX`` or None when neither D nor [] occurs.

    Raises LogicSyntaxError on a mixed formula.
    """
    has_d = has_box = False
    for node in subformulas(phi):
        has_d |= isinstance(node, Dual)
        has_box |= isinstance(node, Box)
    if has_d and has_box:
        raise LogicSyntaxError("mixed-language formula: both D and [] occur")
    if has_d:
        return Language.D
    if has_box:
        return Language.BOX
    return None


def common_language(formulas: Iterable[Formula]) -> Language | None:
    langs = {language_of(f) for f in formulas} - {None}
    if len(langs) > 1:
        raise LogicSyntaxError("mixed-language formula set: both D and [] occur")
    return langs.pop() if langs else None


# ---------------------------------------------------------------------------
# Signature


@dataclass(frozen=True)
class Signature:
    relations: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        rels = dict(self.relations)
        for name, arity in rels.items():
            if not name or not _IDENT.fullmatch(name):
                raise ValueError(f"bad relation name {name!r}")
            if name in RESERVED:
                raise ValueError(f"relation name {name!r} is a reserved word")
            if not isinstance(arity, int) or arity < 0:
                raise ValueError(f"bad arity {arity!r} for {name}")
        object.__setattr__(self, "relations", dict(sorted(rels.items())))

    def __hash__(self):
        return hash(tuple(self.relations.items()))

    def arity(self, name: str) -> int:
        return self.relations[name]

    @classmethod
    def from_formulas(cls, formulas: Iterable[Formula]) -> "Signature":
        rels: dict[str, int] = {}
        for phi in formulas:
            for a in atoms(phi):
                if rels.setdefault(a.rel, len(a.args)) != len(a.args):
                    raise LogicSyntaxError(f"relation {a.rel} used with two arities")
        return cls(rels)

    def merge(self, other: "Signature") -> "Signature":
        rels = dict(self.relations)
        for k, v in other.relations.items():
            if rels.setdefault(k, v) != v:
                raise LogicSyntaxError(f"relation {k} used with two arities")
        return Signature(rels)


# ---------------------------------------------------------------------------
# Lexer

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<iff><->|↔)
  | (?P<imp>->|→)
  | (?P<box>\[\]|□)
  | (?P<neg>~|¬)
  | (?P<and>&|∧)
  | (?P<or>\||∨)
  | (?P<bot>⊥)
  | (?P<forall>∀)
  | (?P<exists>∃)
  | (?P<lpar>\()
  | (?P<rpar>\))
  | (?P<comma>,)
  | (?P<dot>\.)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
    """,
    re.VERBOSE,
)

_KEYWORDS = {"false": "bot", "forall": "forall", "exists": "exists", "D": "dual"}


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise LogicSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            if kind == "ident":
                kind = _KEYWORDS.get(m.group(), "ident")
            toks.append(_Tok(kind, m.group(), pos))
        pos = m.end()
    toks.append(_Tok("eof", "", len(text)))
    return toks


# ---------------------------------------------------------------------------
# Parser

# (token kind, node class, precedence, right-assoc)
_BINOPS = {
    "iff": (Iff, 1, True),
    "imp": (Imp, 2, True),
    "or": (Or, 3, False),
    "and": (And, 4, False),
}


class _Parser:
    def __init__(self, text: str, sig: Signature | None):
        self.toks = tokenize(text)
        self.i = 0
        self.sig = sig

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self, kind: str) -> _Tok:
        tok = self.peek()
        if tok.kind != kind:
            what = repr(tok.text) if tok.text else "end of input"
            raise LogicSyntaxError(f"expected {kind}, found {what}", tok.pos)
        self.i += 1
        return tok

    def parse(self) -> Formula:
        phi = self.expr(0)
        self.take("eof")
        return phi

    def expr(self, min_prec: int) -> Formula:
        left = self.unary()
        while True:
            tok = self.peek()
            op = _BINOPS.get(tok.kind)
            if op is None or op[1] < min_prec:
                return left
            cls, prec, right_assoc = op
            self.i += 1
            right = self.expr(prec if right_assoc else prec + 1)
            left = cls(left, right)

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "neg":
            self.i += 1
            return Not(self.unary())
        if tok.kind == "dual":
            self.i += 1
            return Dual(self.unary())
        if tok.kind == "box":
            self.i += 1
            return Box(self.unary())
        if tok.kind in ("forall", "exists"):
            self.i += 1
            var = self.variable()
            self.take("dot")
            body = self.expr(0)
            return (Forall if tok.kind == "forall" else Exists)(var, body)
        if tok.kind == "bot":
            self.i += 1
            return BOTTOM
        if tok.kind == "lpar":
            self.i += 1
            phi = self.expr(0)
            self.take("rpar")
            return phi
        if tok.kind == "ident":
            return self.atom()
        what = repr(tok.text) if tok.text else "end of input"
        raise LogicSyntaxError(f"unexpected {what}", tok.pos)

    def variable(self) -> str:
        tok = self.peek()
        if tok.kind != "ident":
            raise LogicSyntaxError("expected a variable", tok.pos)
        self.i += 1
        return tok.text

    def atom(self) -> Atom:
        tok = self.take("ident")
        args: list[str] = []
        if self.peek().kind == "lpar":
            self.i += 1
            if self.peek().kind != "rpar":
                args.append(self.variable())
                while self.peek().kind == "comma":
                    self.i += 1
                    args.append(self.variable())
            self.take("rpar")
        if self.sig is not None:
            if tok.text not in self.sig.relations:
                raise LogicSyntaxError(f"unknown relation {tok.text}", tok.pos)
            want = self.sig.relations[tok.text]
            if want != len(args):
                raise LogicSyntaxError(
                    f"arity mismatch: {tok.text} has arity {want}, got {len(args)}",
                    tok.pos,
                )
        return Atom(tok.text, tuple(args))


def parse(text: str, sig: Signature | None = None, lang: Language | None = None) -> Formula:
    """Parse ``text`` into a Formula.

    Without ``sig``, relation arities are inferred and only need to be used
    consistently.  When ``lang`` is given the formula must belong to it.
    """
    phi = _Parser(text, sig).parse()
    if sig is None:
        Signature.from_formulas([phi])
    found = language_of(phi)
    if lang is not None and found is not None and found is not lang:
        raise LogicSyntaxError(f"formula is in language {found.value}, expected {lang.value}")
    return phi


# ---------------------------------------------------------------------------
# Printer

_PREC = {Iff: 1, Imp: 2, Or: 3, And: 4}
_SYM = {Iff: "<->", Imp: "->", Or: "|", And: "&"}
_RIGHT_ASSOC = {Iff, Imp}


def to_text(phi: Formula) -> str:
    """Minimal-parenthesis ASCII rendering; ``parse(to_text(f)) == f``."""
    return _show(phi, 0, True)


def _show(phi: Formula, ctx: int, tail: bool) -> str:
    # ctx: minimum precedence the context accepts without parentheses;
    # tail: nothing follows this text in its context (quantifier scope is maximal).
    if isinstance(phi, Bottom):
        return "false"
    if isinstance(phi, Atom):
        return phi.rel + (f"({', '.join(phi.args)})" if phi.args else "")
    if isinstance(phi, Not):
        return "~" + _show(phi.sub, 5, tail)
    if isinstance(phi, Box):
        return "[]" + _show(phi.sub, 5, tail)
    if isinstance(phi, Dual):
        return "D " + _show(phi.sub, 5, tail)
    if isinstance(phi, QUANT):
        kw = "forall" if isinstance(phi, Forall) else "exists"
        text = f"{kw} {phi.var}. {_show(phi.body, 0, True)}"
        return text if tail else f"({text})"
    prec = _PREC[type(phi)]
    if prec < ctx:
        return f"({_show(phi, 0, True)})"
    right_assoc = type(phi) in _RIGHT_ASSOC
    lctx = prec + 1 if right_assoc else prec
    rctx = prec if right_assoc else prec + 1
    left = _show(phi.left, lctx, False)
    right = _show(phi.right, rctx, tail)
    return f"{left} {_SYM[type(phi)]} {right}"


# ---------------------------------------------------------------------------
# Derived connectives and translations


def imp_expansion(a: Formula, b: Formula, lang: Language) -> Formula:
    guard = Dual(a) if lang is Language.D else Not(Box(a))
    return And(Not(And(a, Not(b))), Or(guard, b))


def expand_derived(phi: Formula, lang: Language | None = None) -> Formula:
    """Eliminate -> and <-> bottom-up using the language's own definition."""
    if lang is None:
        lang = language_of(phi) or Language.D
    return _expand(phi, lang)


def _expand(phi: Formula, lang: Language) -> Formula:
    kids = [_expand(k, lang) for k in children(phi)]
    if isinstance(phi, Imp):
        return imp_expansion(kids[0], kids[1], lang)
    if isinstance(phi, Iff):
        a, b = kids
        return And(imp_expansion(a, b, lang), imp_expansion(b, a, lang))
    return rebuild(phi, kids) if kids else phi


def translate_t(phi: Formula) -> Formula:
    """Replace every ``D`` by ``~[]``."""
    if language_of(phi) is Language.BOX:
        raise LogicSyntaxError("translate_t expects a D-language formula")
    return _t(phi)


def _t(phi: Formula) -> Formula:
    if isinstance(phi, Dual):
        return Not(Box(_t(phi.sub)))
    kids = children(phi)
    return rebuild(phi, [_t(k) for k in kids]) if kids else phi


def translate_s(phi: Formula) -> Formula:
    """Replace every ``[]`` by ``~D``."""
    if language_of(phi) is Language.D:
        raise LogicSyntaxError("translate_s expects a box-language formula")
    return _s(phi)


def _s(phi: Formula) -> Formula:
    if isinstance(phi, Box):
        return Not(Dual(_s(phi.sub)))
    kids = children(phi)
    return rebuild(phi, [_s(k) for k in kids]) if kids else phi


# ---------------------------------------------------------------------------
# Modalities


class Modality(enum.Enum):
    IDENTITY = "id"
    NEG = "~"
    DUAL = "D"
    NEGNEG = "~~"
    NEGDUAL = "~D"

    def symbols(self) -> str:
        return "" if self is Modality.IDENTITY else self.value


def parse_modality(text: str) -> str:
    """Normalise a modality string to the alphabet {'~', 'D'}, outermost first."""
    out = []
    for pos, ch in enumerate(text):
        if ch in "~¬":
            out.append("~")
        elif ch == "D":
            out.append("D")
        elif not ch.isspace():
            raise LogicSyntaxError(f"modality strings use only ~ and D, got {ch!r}", pos)
    return "".join(out)


def normalize_modality(m: str) -> Modality:
    """Collapse a string over {~, D} (outermost first) to its canonical form."""
    m = parse_modality(m)
    if not m:
        return Modality.IDENTITY
    inner = m[-1]
    if len(m) % 2:
        return Modality.NEG if inner == "~" else Modality.DUAL
    return Modality.NEGNEG if inner == "~" else Modality.NEGDUAL


def apply_modality(m: str, phi: Formula) -> Formula:
    for ch in reversed(parse_modality(m)):
        phi = Not(phi) if ch == "~" else Dual(phi)
    return phi


# ---------------------------------------------------------------------------
# Subformula replacement


def occurrences(delta: Formula, alpha: Formula) -> int:
    return sum(1 for n in subformulas(delta) if n == alpha)


def replace_subformula(
    delta: Formula, alpha: Formula, beta: Formula, indices: Iterable[int] | None = None
) -> Formula:
    """Replace the chosen occurrences of ``alpha`` in ``delta`` by ``beta``.

    Occurrences are numbered from 1 in pre-order.  An occurrence nested inside
    another one is numbered too, but disappears when its ancestor is replaced.
    ``indices=None`` replaces every occurrence.
    """
    total = occurrences(delta, alpha)
    chosen = set(range(1, total + 1)) if indices is None else set(indices)
    for i in chosen:
        if not 1 <= i <= total:
            raise IndexError(f"occurrence {i} out of range (formula has {total})")
    counter = [0]

    def go(node: Formula) -> Formula:
        if node == alpha:
            counter[0] += 1
            if counter[0] in chosen:
                counter[0] += occurrences(node, alpha) - 1
                return beta
        kids = children(node)
        return rebuild(node, [go(k) for k in kids]) if kids else node

    return go(delta)
