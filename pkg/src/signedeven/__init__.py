"""Signed even permutations: statistics, canonical forms and equidistribution checks."""

from .group_core import (
    GROUPS, BudgetExceededError, DegreeMismatchError, GeneratorToken, GeneratorWord,
    MembershipError, SignedPermutation, WindowParseError, WordParseError, abs_map, compose,
    embed, enumerate_group, eval_word, group_order, identity, inverse, membership,
    parse_window, parse_word, restrict,
)
from .statistics import StatisticsRecord, statistics_record
from .canonical_forms import CanonicalPresentation, canonical, family
from .structure_maps import MainLemmaFactors, main_lemma_factor, phi
from .qpolynomial import QPolynomial, QTPolynomial, product_formula_L, product_formula_RR
from .enumeration_verify import GFQuery, VerificationReport, generating_function

__version__ = "0.1.0"
