import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

from roughlogic.gen import random_fo_formula, random_kripke, random_prop_formula, random_rough
from roughlogic.syntax import Language

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

rngs = st.randoms(use_true_random=False)
langs = st.sampled_from([Language.D, Language.BOX])


@st.composite
def prop_formulas(draw, lang=None, depth=5, derived=False):
    lang = lang or draw(langs)
    return random_prop_formula(draw(rngs), depth, lang=lang, derived=derived)


@st.composite
def fo_formulas(draw, lang=Language.D, depth=4):
    return random_fo_formula(draw(rngs), depth, lang=lang)


@st.composite
def rough_models(draw, max_n=4):
    return random_rough(draw(rngs), max_n)


@st.composite
def kripke_models(draw, max_n=3):
    return random_kripke(draw(rngs), max_n)
