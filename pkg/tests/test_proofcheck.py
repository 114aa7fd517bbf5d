import json

import pytest

from roughlogic.algebra3 import Valid, prop_consequence
from roughlogic.derivations import F, all_fixtures, dnd
from roughlogic.proofcheck import (
    Accepted,
    Rejected,
    System,
    check_proof,
    hyp,
    mutations,
    node,
    open_assumptions,
    tree_from_json,
    tree_to_json,
)
from roughlogic.syntax import BOTTOM

FIXTURES = {fx.name: fx for fx in all_fixtures()}


class TestFixtures:
    @pytest.mark.parametrize("name", sorted(FIXTURES))
    def test_accepted_with_exact_sequent(self, name):
        fx = FIXTURES[name]
        verdict = check_proof(fx.tree, fx.system)
        assert verdict == Accepted(fx.assumptions, fx.conclusion)

    @pytest.mark.parametrize("name", sorted(FIXTURES))
    def test_sound(self, name):
        fx = FIXTURES[name]
        assert prop_consequence(list(fx.assumptions), fx.conclusion) == Valid()

    @pytest.mark.parametrize("name", sorted(FIXTURES))
    def test_mutants_are_caught(self, name):
        fx = FIXTURES[name]
        total = 0
        for _, mutant in mutations(fx.tree, fx.system):
            total += 1
            verdict = check_proof(mutant, fx.system)
            assert not isinstance(verdict, Accepted) or verdict.sequent != (fx.assumptions, fx.conclusion)
        assert total >= 100

    def test_dnd_open_assumptions(self):
        assert open_assumptions(dnd().tree) == {F("~~D p")}


class TestRules:
    def test_single_assumption(self):
        assert check_proof(hyp(F("p"))) == Accepted(frozenset({F("p")}), F("p"))

    def test_neg_intro_discharges(self):
        t = node("negI", F("~p"), node("negE", BOTTOM, hyp(F("p"), 1), hyp(F("~p"))), label=1)
        assert check_proof(t) == Accepted(frozenset({F("~p")}), F("~p"))

    def test_cs_schema_mismatch(self):
        t = node("cS", BOTTOM, hyp(F("D p")), hyp(F("D D q")))
        assert isinstance(check_proof(t), Rejected)

    def test_cs_accepts(self):
        t = node("cS", BOTTOM, hyp(F("D p")), hyp(F("D D p")))
        assert isinstance(check_proof(t), Accepted)

    def test_closed_minor_premise(self):
        # dE with an open assumption in the minor premise
        t = node("dE", F("q"), hyp(F("D p")), node("orIl", F("p | q"), hyp(F("p"))))
        verdict = check_proof(t)
        assert isinstance(verdict, Rejected) and verdict.path == (1,)

    def test_closed_minor_premise_ok(self):
        t = node("dE", F("p"), hyp(F("D p")), node("dI", F("p | D p")))
        # p | D p is not p | p: schema fails
        assert isinstance(check_proof(t), Rejected)
        t = node("dEclosed", F("~D (p | D p)"), node("dI", F("p | D p")))
        assert check_proof(t) == Accepted(frozenset(), F("~D (p | D p)"))

    def test_dangling_label(self):
        assert "dangling" in check_proof(hyp(F("p"), 7)).reason

    def test_duplicate_labels(self):
        inner = node("negI", F("~p"), node("negE", BOTTOM, hyp(F("p"), 1), hyp(F("~p"))), label=1)
        t = node("negI", F("~p"), node("negE", BOTTOM, hyp(F("p"), 1), inner), label=1)
        assert isinstance(check_proof(t), Rejected)

    def test_label_required_on_discharge(self):
        t = node("negI", F("~p"), node("negE", BOTTOM, hyp(F("p")), hyp(F("~p"))))
        assert "label" in check_proof(t).reason

    def test_label_formula_mismatch(self):
        t = node("negI", F("~p"), node("negE", BOTTOM, hyp(F("q"), 1), hyp(F("~q"))), label=1)
        assert isinstance(check_proof(t), Rejected)

    def test_cross_system_rule(self):
        t = node("negBoxI", F("p | ~[]p"))
        assert isinstance(check_proof(t, System.D), Rejected)
        assert isinstance(check_proof(t, System.BOX), Accepted)

    def test_wrong_language(self):
        assert isinstance(check_proof(hyp(F("D p")), System.BOX), Rejected)

    def test_unknown_rule(self):
        assert "unknown" in check_proof(node("magic", F("p"))).reason

    def test_arity(self):
        assert isinstance(check_proof(node("andI", F("p & p"), hyp(F("p")))), Rejected)


class TestJson:
    @pytest.mark.parametrize("name", sorted(FIXTURES))
    def test_round_trip(self, name):
        fx = FIXTURES[name]
        data = json.loads(json.dumps(tree_to_json(fx.tree)))
        assert tree_from_json(data, fx.system) == fx.tree

    def test_bad_label(self):
        with pytest.raises(ValueError):
            tree_from_json({"rule": "hyp", "formula": "p", "label": "one"})
