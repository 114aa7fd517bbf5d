import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from roughlogic.roughsets import (
    RoughSetError,
    identity_space,
    lower,
    make_space,
    power_space,
    restricted_growth_strings,
    space_from_block_ids,
    upper,
)

RUNNING = make_space("abc", [["a", "b"], ["c"]])


def oracle_lower(space, n, X):
    # naive reading: t is in the lower approximation iff every tuple equivalent to t lies in X
    elems = list(itertools.product(space.universe, repeat=n))
    same = lambda s, t: all(space.equivalent(u, w) for u, w in zip(s, t))  # noqa: E731
    return {t for t in elems if all(s in X for s in elems if same(s, t))}


def oracle_upper(space, n, X):
    elems = list(itertools.product(space.universe, repeat=n))
    same = lambda s, t: all(space.equivalent(u, w) for u, w in zip(s, t))  # noqa: E731
    return {t for t in elems if any(s in X for s in elems if same(s, t))}


@st.composite
def spaces(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    ids = draw(st.sampled_from(list(restricted_growth_strings(n))))
    return space_from_block_ids(tuple("abcd"[:n]), ids)


class TestMakeSpace:
    def test_valid(self):
        assert RUNNING.blocks == (("a", "b"), ("c",))

    def test_singleton(self):
        assert make_space(["a"], [["a"]]).blocks == (("a",),)

    @pytest.mark.parametrize(
        "universe, blocks",
        [
            ("ab", [["a"], ["a", "b"]]),
            ("ab", [["a"]]),
            ("", []),
            ("ab", [["a", "b"], []]),
            ("aab", [["a", "b"]]),
        ],
    )
    def test_errors(self, universe, blocks):
        with pytest.raises(RoughSetError):
            make_space(list(universe), blocks)

    def test_equivalence(self):
        assert RUNNING.equivalent("a", "b") and not RUNNING.equivalent("a", "c")
        assert RUNNING.representative("b") == "a"


class TestPowerSpace:
    def test_product_blocks(self):
        p = power_space(RUNNING, 2)
        assert p.block_count() == 4
        sizes = sorted(len(b) for b in p.blocks())
        assert sizes == [1, 2, 2, 4]

    def test_n1_is_base(self):
        assert {frozenset(u for (u,) in b) for b in power_space(RUNNING, 1).blocks()} == {
            frozenset("ab"),
            frozenset("c"),
        }

    def test_identity_stays_identity(self):
        p = power_space(identity_space("ab"), 2)
        assert all(len(b) == 1 for b in p.blocks())

    def test_n0_rejected(self):
        with pytest.raises(ValueError):
            power_space(RUNNING, 0)

    def test_foreign_tuple(self):
        with pytest.raises(RoughSetError):
            lower(power_space(RUNNING, 1), {("z",)})

    @given(spaces())
    def test_block_count(self, s):
        assert power_space(s, 2).block_count() == len(s.blocks) ** 2


class TestApproximations:
    def test_lower_running(self):
        assert lower(power_space(RUNNING, 1), {("a",), ("c",)}) == {("c",)}

    def test_upper_running(self):
        assert upper(power_space(RUNNING, 1), {("a",), ("c",)}) == {("a",), ("b",), ("c",)}

    def test_empty_and_full(self):
        p = power_space(RUNNING, 1)
        full = set(p.elements())
        assert lower(p, set()) == set() == upper(p, set())
        assert lower(p, full) == full == upper(p, full)

    def test_identity_exact(self):
        p = power_space(identity_space("abc"), 1)
        assert lower(p, {("b",)}) == {("b",)} == upper(p, {("b",)})

    @given(spaces(), st.integers(1, 2), st.data())
    def test_against_oracle(self, s, n, data):
        elems = list(itertools.product(s.universe, repeat=n))
        X = set(data.draw(st.lists(st.sampled_from(elems), max_size=len(elems))))
        p = power_space(s, n)
        assert lower(p, X) == oracle_lower(s, n, X)
        assert upper(p, X) == oracle_upper(s, n, X)

    @given(spaces(), st.data())
    def test_sandwich_and_idempotence(self, s, data):
        p = power_space(s, 1)
        X = set(data.draw(st.lists(st.sampled_from([(u,) for u in s.universe]))))
        lo, up = lower(p, X), upper(p, X)
        assert lo <= X <= up
        assert lower(p, lo) == lo and upper(p, up) == up


def test_restricted_growth_counts():
    # Bell numbers
    assert [len(list(restricted_growth_strings(n))) for n in range(1, 6)] == [1, 2, 5, 15, 52]
