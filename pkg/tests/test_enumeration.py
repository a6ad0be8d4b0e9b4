import warnings

import pytest
from hypothesis import given, settings

import bruteforce as bf
from collarg import bits
from collarg.core import PStablePair, Theory, attacks_negatively, negative_closure, new_theory, positive_closure
from collarg.dlp import compile_program, parse_program
from collarg.enumeration import (
    KINDS,
    admissible_masks,
    admissible_sets,
    is_admissible,
    is_p_stable,
    is_stable,
    maximal_allowable,
    maximal_allowable_masks,
    p_stable_masks,
    p_stable_pairs,
    stable_fixpoint_holds,
    stable_masks,
    stable_sets,
)
from collarg.errors import CapExceeded, TheoryError
from collarg.generators import random_theory
from strategies import theories

AB = ["alpha", "beta"]
SELF_DEFEAT = [({"alpha"}, {"alpha"}), ({"alpha"}, {"beta"})]


def fs(*names):
    return frozenset(names)


# -- maximal allowable --------------------------------------------------------


def test_maximal_allowable_examples():
    assert maximal_allowable(new_theory(AB, []), set()) == [fs("alpha", "beta")]
    assert maximal_allowable(new_theory(AB, [({"alpha"}, {"beta"})]), {"alpha"}) == [fs("alpha")]
    assert maximal_allowable(new_theory(AB, [({"alpha"}, set())]), {"alpha"}) == []


@settings(max_examples=80)
@given(theories(max_args=6))
def test_maximal_allowable_matches_brute_force(t):
    for g in range(0, 1 << t.size, 3):
        assert maximal_allowable_masks(t, g) == bf.maximal_allowable(t, g)


# -- stable sets --------------------------------------------------------------


def test_self_defeat_has_no_stable_sets():
    assert stable_sets(new_theory(AB, SELF_DEFEAT)) == []


def test_empty_base_stable_set_is_universe():
    assert stable_sets(new_theory(AB, [])) == [fs("alpha", "beta")]


def test_disjunctive_fact_stable_sets():
    t = compile_program(parse_program("p | q."))
    assert stable_sets(t) == [fs("~p"), fs("~q")]


def test_stable_fixpoint_agreement_exhaustive():
    for seed in range(250):
        t = random_theory(seed, max_args=6, max_pairs=6)
        by_definition = bf.stable_sets(t)
        assert stable_masks(t) == by_definition, seed
        assert [g for g in range(1 << t.size) if is_stable(t, t.names(g))] == sorted(by_definition)


def test_bare_fixpoint_admits_empty_set_when_empty_set_attacks_itself():
    t = Theory(["a"], [(0, 0)])
    assert stable_fixpoint_holds(t, 0)
    assert not is_stable(t, set())
    assert bf.stable_sets(t) == []


@settings(max_examples=60)
@given(theories(max_args=5))
def test_stable_iff_negatively_attacks_everything_outside(t):
    for g in range(1 << t.size):
        outside = [i for i in range(t.size) if not g >> i & 1]
        refutes_outside = all(attacks_negatively(t, t.names(g), {t.universe[i]}) for i in outside)
        inside_ok = not any(attacks_negatively(t, t.names(g), {t.universe[i]}) for i in bits.indices(g))
        assert (refutes_outside and inside_ok and not t.attacks_mask(g, g)) == (g in stable_masks(t))


# -- p-stable pairs -----------------------------------------------------------


def test_p_stable_examples():
    assert p_stable_pairs(new_theory(["alpha"], [])) == [PStablePair(fs("alpha"), fs("alpha"))]
    t = compile_program(parse_program("p :- not p."))
    assert p_stable_pairs(t) == [PStablePair(fs(), fs("~p"))]


def test_stable_set_gives_p_stable_pair():
    for seed in range(100):
        t = random_theory(seed, max_args=5)
        for g in stable_sets(t):
            assert is_p_stable(t, (g, g))


def test_p_stable_requires_inclusion():
    with pytest.raises(TheoryError):
        is_p_stable(new_theory(AB, []), (fs("alpha"), fs("beta")))


def test_p_stable_fixpoint_agreement_exhaustive():
    for seed in range(200):
        t = random_theory(seed, max_args=5, max_pairs=6)
        by_definition = bf.p_stable_by_definition(t)
        assert sorted(p_stable_masks(t)) == by_definition, seed
        assert bf.p_stable_by_fixpoint(t) == by_definition, seed


# -- admissibility ------------------------------------------------------------


@pytest.mark.parametrize("kind", KINDS)
def test_empty_set_admissible_without_attacks(kind):
    assert is_admissible(new_theory(AB, []), set(), kind)


def test_positive_admissibility_of_self_defeat_closure():
    t = new_theory(AB, SELF_DEFEAT)
    assert is_admissible(positive_closure(t), {"beta"}, "positive")
    assert is_admissible(t, {"beta"}, "positive")
    assert admissible_sets(t, "positive", maximal_only=True) == [fs("beta")]


def test_mutual_attack_admissible():
    t = new_theory(AB, [({"alpha"}, {"beta"}), ({"beta"}, {"alpha"})])
    assert is_admissible(t, {"alpha"}, "plain")
    assert admissible_sets(t) == [fs(), fs("alpha"), fs("beta")]


@pytest.mark.parametrize("kind", KINDS)
def test_minimal_attacker_reduction_matches_full_quantification(kind):
    for seed in range(120):
        t = random_theory(seed, max_args=6, max_pairs=6)
        assert admissible_masks(t, kind) == bf.admissible_sets(t, kind), seed
        assert [g for g in range(1 << t.size) if is_admissible(t, g, kind)] == sorted(bf.admissible_sets(t, kind))


def test_negative_admissibility_on_random_theories():
    for seed in range(200):
        t = random_theory(seed, max_args=6)
        neg = admissible_masks(t, "negative")
        for g in neg:
            for d in range(1 << t.size):
                if g & ~d == 0 and not t.attacks_mask(d, d):
                    assert d in neg
        assert admissible_masks(t, "negative", maximal_only=True) == stable_masks(t)


def test_negative_closure_keeps_stable_sets():
    for seed in range(200):
        t = random_theory(seed, max_args=6)
        assert stable_masks(negative_closure(t)) == stable_masks(t)


# -- caps and ordering --------------------------------------------------------


def test_enumeration_cap():
    t = Theory([f"a{i}" for i in range(21)])
    with pytest.raises(CapExceeded):
        stable_sets(t)
    with pytest.raises(CapExceeded):
        admissible_sets(Theory([f"a{i}" for i in range(5)]), max_args=4)


def test_large_universe_warns():
    t = Theory([f"a{i}" for i in range(15)], [(1, 2)])
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        assert len(stable_masks(t)) == 1
    assert any("may not terminate promptly" in str(w.message) for w in caught)


def test_outputs_are_sorted_deterministically():
    t = new_theory(["a", "b", "c"], [])
    assert admissible_sets(t) == [fs(), fs("a"), fs("b"), fs("c"), fs("a", "b"), fs("a", "c"), fs("b", "c"), fs("a", "b", "c")]
