"""Collective argumentation: attack relations between sets of arguments."""

from .core import (
    Argument,
    AttackPair,
    PStablePair,
    Theory,
    attacks,
    attacks_negatively,
    attacks_positively,
    is_affirmative,
    is_conflict_free,
    is_l_positive,
    is_local,
    is_negative,
    is_normal,
    is_positive,
    is_semi_local,
    negative_closure,
    new_theory,
    positive_closure,
    same_relation,
)
from .enumeration import (
    admissible_sets,
    is_admissible,
    is_p_stable,
    is_stable,
    maximal_allowable,
    p_stable_pairs,
    stable_sets,
)
from .caf import format_theory, parse_theory
from .dlp import LazyTheory, Program, Rule, compile_program, derive_clauses, derives, parse_program, reduct
from .dung import DungView, bracket, check_normal_correspondence, extensions
from .oracle import check_theorem1, entails, gl_reduct, stable_models

__version__ = "0.1.0"
