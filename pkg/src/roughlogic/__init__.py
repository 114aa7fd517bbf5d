"""Rough-set and two-node Kripke semantics for a logic with two negations."""

from .algebra3 import Countermodel, Three, Valid, prop_consequence
from .kripke import KripkeModel, Node, forces, kripke_consequence_bounded
from .proofcheck import Accepted, ProofTree, Rejected, System, check_proof
from .rough_semantics import RoughInterpretation, ValidUpToBound, rough_consequence_bounded, valuate
from .roughsets import ApproximationSpace, make_space, power_space
from .syntax import Formula, LogicSyntaxError, Signature, normalize_modality, parse, to_text, translate_s, translate_t
from .transfer import equivalence_harness, to_kripke, to_rough

__version__ = "0.1.0"

__all__ = [
    "Accepted", "ApproximationSpace", "Countermodel", "Formula", "KripkeModel", "LogicSyntaxError",
    "Node", "ProofTree", "Rejected", "RoughInterpretation", "Signature", "System", "Three", "Valid",
    "ValidUpToBound", "check_proof", "equivalence_harness", "forces", "kripke_consequence_bounded",
    "make_space", "normalize_modality", "parse", "power_space", "prop_consequence",
    "rough_consequence_bounded", "to_kripke", "to_rough", "to_text", "translate_s", "translate_t",
    "valuate",
]
