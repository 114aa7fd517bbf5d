"""Finite approximation spaces, their powers, and lower/upper approximations."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Sequence

Element = Hashable
Tuple = tuple


class RoughSetError(ValueError):
    pass


@dataclass(frozen=True)
class ApproximationSpace:
    """A finite universe with an indiscernibility partition.

    ``block_of`` maps each element to the index of its block; blocks are
    numbered by first appearance in ``universe`` order.
    """

    universe: tuple
    block_of: dict

    @cached_property
    def blocks(self) -> tuple[tuple, ...]:
        out: dict[int, list] = {}
        for u in self.universe:
            out.setdefault(self.block_of[u], []).append(u)
        return tuple(tuple(out[k]) for k in sorted(out))

    def equivalent(self, u: Element, w: Element) -> bool:
        return self.block_of[u] == self.block_of[w]

    def cls(self, u: Element) -> tuple:
        return self.blocks[self.block_of[u]]

    def representative(self, u: Element) -> Element:
        return self.cls(u)[0]

    def power(self, n: int) -> "PowerSpace":
        return power_space(self, n)

    def __hash__(self):
        return hash((self.universe, tuple(sorted(self.block_of.items(), key=repr))))


def make_space(universe: Sequence[Element], blocks: Iterable[Iterable[Element]]) -> ApproximationSpace:
    universe = tuple(universe)
    if not universe:
        raise RoughSetError("empty universe")
    if len(set(universe)) != len(universe):
        raise RoughSetError("universe lists an element twice")
    members = set(universe)
    owner: dict = {}
    for b, block in enumerate(blocks):
        block = list(block)
        if not block:
            raise RoughSetError("empty block")
        for u in block:
            if u not in members:
                raise RoughSetError(f"block element {u!r} is not in the universe")
            if u in owner:
                raise RoughSetError(f"blocks overlap on {u!r}")
            owner[u] = b
    missing = [u for u in universe if u not in owner]
    if missing:
        raise RoughSetError(f"elements not covered by any block: {missing!r}")
    # renumber blocks by first appearance in universe order
    renum: dict[int, int] = {}
    for u in universe:
        renum.setdefault(owner[u], len(renum))
    return ApproximationSpace(universe, {u: renum[owner[u]] for u in universe})


def space_from_block_ids(universe: Sequence[Element], ids: Sequence[int]) -> ApproximationSpace:
    """Build a space from one block id per element (e.g. a restricted growth string)."""
    groups: dict[int, list] = {}
    for u, b in zip(universe, ids, strict=True):
        groups.setdefault(b, []).append(u)
    return make_space(universe, groups.values())


def identity_space(universe: Sequence[Element]) -> ApproximationSpace:
    return make_space(universe, [[u] for u in universe])


@dataclass(frozen=True)
class PowerSpace:
    """The n-th power of a space: tuples are equivalent iff componentwise so."""

    base: ApproximationSpace
    n: int

    def key(self, t: Tuple) -> tuple[int, ...]:
        return tuple(self.base.block_of[u] for u in t)

    def equivalent(self, s: Tuple, t: Tuple) -> bool:
        return self.key(s) == self.key(t)

    def elements(self) -> Iterable[Tuple]:
        return itertools.product(self.base.universe, repeat=self.n)

    def class_of_key(self, key: tuple[int, ...]) -> Iterable[Tuple]:
        return itertools.product(*(self.base.blocks[b] for b in key))

    def class_size(self, key: tuple[int, ...]) -> int:
        size = 1
        for b in key:
            size *= len(self.base.blocks[b])
        return size

    def block_count(self) -> int:
        return len(self.base.blocks) ** self.n

    def blocks(self) -> list[frozenset]:
        keys = itertools.product(range(len(self.base.blocks)), repeat=self.n)
        return [frozenset(self.class_of_key(k)) for k in keys]

    def check(self, X: Iterable[Tuple]) -> frozenset:
        X = frozenset(tuple(t) for t in X)
        members = self.base.block_of
        for t in X:
            if len(t) != self.n or any(u not in members for u in t):
                raise RoughSetError(f"tuple {t!r} is not an element of U^{self.n}")
        return X

    def lower(self, X: Iterable[Tuple]) -> frozenset:
        """Tuples whose whole class lies inside X."""
        X = self.check(X)
        hits = Counter(self.key(t) for t in X)
        return frozenset(t for t in X if hits[self.key(t)] == self.class_size(self.key(t)))

    def upper(self, X: Iterable[Tuple]) -> frozenset:
        """Tuples whose class meets X."""
        X = self.check(X)
        keys = {self.key(t) for t in X}
        return frozenset(t for k in keys for t in self.class_of_key(k))

    def in_lower(self, X: frozenset, t: Tuple) -> bool:
        return all(s in X for s in self.class_of_key(self.key(t)))

    def in_upper(self, X: frozenset, t: Tuple) -> bool:
        return any(s in X for s in self.class_of_key(self.key(t)))


def power_space(s: ApproximationSpace, n: int) -> PowerSpace:
    if n < 1:
        raise RoughSetError("power spaces need n >= 1")
    return PowerSpace(s, n)


def lower(p: PowerSpace, X: Iterable[Tuple]) -> frozenset:
    return p.lower(X)


def upper(p: PowerSpace, X: Iterable[Tuple]) -> frozenset:
    return p.upper(X)


def restricted_growth_strings(n: int) -> Iterable[tuple[int, ...]]:
    """All set partitions of n labelled points, in lexicographic RGS order."""
    if n == 0:
        yield ()
        return

    def go(prefix: list[int], top: int):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for b in range(top + 2):
            prefix.append(b)
            yield from go(prefix, max(top, b))
            prefix.pop()

    yield from go([0], 0)
