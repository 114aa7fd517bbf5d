import pytest
from hypothesis import given

from conftest import fo_formulas, kripke_models
from roughlogic.algebra3 import HALF
from roughlogic.kripke import (
    KripkeCountermodel,
    MonotonicityError,
    Node,
    count_structures,
    enumerate_models,
    forces,
    forces_direct,
    kripke_consequence_bounded,
    kripke_value,
    make_kripke,
)
from roughlogic.rough_semantics import ValidUpToBound
from roughlogic.syntax import Dual, Language, Signature, parse, translate_t

BOUNDARY = make_kripke(["u"], {"P": ((), [("u",)])}, {"x": "u"}, Signature({"P": 1}))


class TestModel:
    def test_valid(self):
        assert BOUNDARY.universe == ("u",)

    def test_monotonicity(self):
        with pytest.raises(MonotonicityError):
            make_kripke(["u"], {"P": ([("u",)], ())}, sig=Signature({"P": 1}))

    def test_binary(self):
        K = make_kripke(["u", "w"], {"R": ([("u", "w")], [("u", "w"), ("w", "w")])})
        assert K.sig.relations == {"R": 2}

    def test_node_parse(self):
        assert Node.parse("half") is Node.HALF and Node.parse("1") is Node.ONE
        with pytest.raises(ValueError):
            Node.parse("0")


class TestForcing:
    def test_dual_at_one(self):
        assert forces(BOUNDARY, Node.ONE, parse("D P(x)"))

    def test_neg_at_one(self):
        assert not forces(BOUNDARY, Node.ONE, parse("~P(x)"))

    def test_dual_at_half(self):
        assert forces(BOUNDARY, Node.HALF, parse("D P(x)"))

    @pytest.mark.parametrize("node", [Node.ONE, Node.HALF])
    def test_bottom(self, node):
        assert not forces(BOUNDARY, node, parse("false"))

    def test_value(self):
        assert kripke_value(BOUNDARY, parse("P(x)")) == HALF

    @given(kripke_models(), fo_formulas())
    def test_persistence(self, K, phi):
        assert not forces(K, Node.ONE, phi) or forces(K, Node.HALF, phi)

    @given(kripke_models(), fo_formulas())
    def test_box_reading_agrees(self, K, phi):
        psi = translate_t(phi)
        for k in (Node.ONE, Node.HALF):
            assert forces(K, k, psi) == forces_direct(K, k, psi) == forces(K, k, phi)

    @given(kripke_models(), fo_formulas(lang=Language.D))
    def test_dual_is_dual_negation(self, K, phi):
        # D f holds at k iff some node below k fails f
        for k in (Node.ONE, Node.HALF):
            expected = any(not forces(K, j, phi) for j in k.down)
            assert forces(K, k, Dual(phi)) == expected


class TestEnumeration:
    @pytest.mark.parametrize(
        "sig, n, expected",
        [({"P": 1}, 1, 3), ({"P": 1}, 2, 9), ({"R": 2}, 1, 3), ({"Q": 0}, 2, 3)],
    )
    def test_counts(self, sig, n, expected):
        sig = Signature(sig)
        assert count_structures(sig, n) == expected == sum(1 for _ in enumerate_models(sig, n))


class TestBoundedConsequence:
    def test_identity(self):
        assert kripke_consequence_bounded([parse("~P(x)")], parse("~P(x)")) == ValidUpToBound(2)

    def test_s_axiom(self):
        assert kripke_consequence_bounded([], parse("~P(x) | ~~P(x)")) == ValidUpToBound(2)

    def test_excluded_middle(self):
        verdict = kripke_consequence_bounded([], parse("P(x) | ~P(x)"), max_universe=1)
        assert isinstance(verdict, KripkeCountermodel)
        assert verdict.node is Node.ONE
        assert verdict.model.universe == ("u",)
        assert verdict.model.rho["P"] == (frozenset(), frozenset({("u",)}))

    def test_constant_domain(self):
        phi = parse("(forall x. P(x) | Q) -> (forall x. P(x)) | Q")
        assert kripke_consequence_bounded([], phi, max_universe=3) == ValidUpToBound(3)

    def test_box_language(self):
        verdict = kripke_consequence_bounded([parse("~~[]P(x)")], parse("[]P(x)"))
        assert verdict == ValidUpToBound(2)
