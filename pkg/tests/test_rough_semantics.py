import pytest
from hypothesis import given

from conftest import fo_formulas, rough_models
from roughlogic.algebra3 import HALF, ONE, ZERO, SearchGuardExceeded, eval_prop, sequent_atoms
from roughlogic.rough_semantics import (
    RoughCountermodel,
    RoughInterpretation,
    SemanticError,
    ValidUpToBound,
    count_rough_models,
    enumerate_interpretations,
    is_rough_countermodel,
    realize,
    rough_consequence_bounded,
    valuate,
)
from roughlogic.roughsets import make_space
from roughlogic.syntax import Signature, parse

SPACE = make_space("abc", [["a", "b"], ["c"]])
SIG = Signature({"P": 1})


def running(x="a"):
    return RoughInterpretation(SPACE, SIG, {"P": {("a",), ("c",)}}, {"x": x})


class TestValuate:
    def test_boundary(self):
        assert valuate(running("a"), parse("P(x)")) == HALF

    def test_lower(self):
        assert valuate(running("c"), parse("P(x)")) == ONE

    def test_forall(self):
        assert valuate(running(), parse("forall x. P(x)")) == HALF

    def test_exists(self):
        assert valuate(running(), parse("exists x. P(x)")) == ONE

    def test_dual(self):
        assert valuate(running("c"), parse("D P(x)")) == ZERO

    def test_box(self):
        assert valuate(running("a"), parse("[]P(x)")) == ZERO
        assert valuate(running("c"), parse("[]P(x)")) == ONE

    def test_bottom(self):
        assert valuate(running(), parse("false")) == ZERO

    def test_unbound_variable(self):
        with pytest.raises(SemanticError):
            valuate(running(), parse("P(y)"))

    def test_unknown_relation(self):
        with pytest.raises(SemanticError):
            valuate(running(), parse("R(x)"))

    def test_propositional_letter(self):
        sig = Signature({"Q": 0})
        I = RoughInterpretation(SPACE, sig, {"Q": {"a", "c"}})
        # not all of U, but its upper approximation is
        assert valuate(I, parse("Q")) == HALF
        assert valuate(RoughInterpretation(SPACE, sig, {"Q": set("abc")}), parse("Q")) == ONE
        assert valuate(RoughInterpretation(SPACE, sig, {"Q": {"a"}}), parse("Q")) == ZERO

    def test_table_outside_universe(self):
        with pytest.raises(SemanticError):
            RoughInterpretation(SPACE, SIG, {"P": {("z",)}})

    @given(rough_models(), fo_formulas())
    def test_equivalence_invariance(self, I, phi):
        # swapping the assignment within a class leaves values unchanged
        x = I.assignment["x"]
        for other in I.space.cls(x):
            assert valuate(I.variant("x", other), phi) == valuate(I, phi)


class TestRealize:
    @pytest.mark.parametrize("value", [ZERO, HALF, ONE])
    def test_single_atom(self, value):
        atom = parse("P(x)")
        assert valuate(realize({atom: value}), atom) == value

    def test_prop_valuation_embeds(self):
        phi = parse("(p -> q) & D r | ~p")
        v = {"p": ONE, "q": HALF, "r": ZERO}
        I = realize({parse(k): val for k, val in v.items()})
        assert valuate(I, phi) == eval_prop(phi, v)
        assert sequent_atoms([], phi) == ["p", "q", "r"]


class TestBoundedConsequence:
    def test_reflexive(self):
        assert rough_consequence_bounded([parse("P(x)")], parse("P(x)")) == ValidUpToBound(2)

    def test_excluded_middle(self):
        verdict = rough_consequence_bounded([], parse("P(x) | ~P(x)"))
        assert isinstance(verdict, RoughCountermodel)
        I = verdict.interpretation
        assert I.space.blocks == (("a", "b"),)
        assert valuate(I, parse("P(x) | ~P(x)")) == HALF
        assert is_rough_countermodel(I, [], parse("P(x) | ~P(x)"))

    def test_constant_domain_law(self):
        phi = parse("(forall x. P(x) | Q) -> (forall x. P(x)) | Q")
        assert rough_consequence_bounded([], phi, max_universe=3) == ValidUpToBound(3)

    def test_s_axiom(self):
        assert rough_consequence_bounded([], parse("~P(x) | ~~P(x)")) == ValidUpToBound(2)

    def test_deterministic(self):
        a = rough_consequence_bounded([parse("D D P(x)")], parse("P(x)"))
        b = rough_consequence_bounded([parse("D D P(x)")], parse("P(x)"))
        assert a == b

    def test_guard(self):
        with pytest.raises(SearchGuardExceeded):
            rough_consequence_bounded([], parse("R(x, y) | ~R(x, y)"), max_universe=3, guard=100)

    def test_guard_from_environment(self, monkeypatch):
        monkeypatch.setenv("ROUGHLOGIC_SEARCH_GUARD", "10")
        with pytest.raises(SearchGuardExceeded):
            rough_consequence_bounded([], parse("P(x) | ~P(x)"), max_universe=3)

    def test_box_sequent(self):
        verdict = rough_consequence_bounded([parse("P(x)")], parse("[]P(x)"))
        assert isinstance(verdict, RoughCountermodel)

    def test_count_matches_enumeration(self):
        sig = Signature({"P": 1, "Q": 0})
        total = sum(1 for n in (1, 2) for _ in enumerate_interpretations(sig, n, ["x"]))
        assert total == count_rough_models(sig, 2, 1)
