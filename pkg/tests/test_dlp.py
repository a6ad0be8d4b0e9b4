from pathlib import Path

import pytest

from collarg import bits
from collarg.core import attacks, is_affirmative, is_local, is_normal
from collarg.dlp import (
    LazyTheory,
    Program,
    compile_program,
    derive_clauses,
    derives,
    format_program,
    parse_program,
    reduct,
    rule,
)
from collarg.enumeration import stable_sets
from collarg.errors import CapExceeded, FormatError, NonGroundError
from collarg.generators import random_program
from collarg.oracle import entails

PROGRAMS = Path(__file__).parent.parent / "data" / "programs"


def fs(*names):
    return frozenset(names)


# -- parsing ------------------------------------------------------------------


def test_parse_disjunctive_fact():
    p = parse_program("p | q.")
    assert p.atoms == ("p", "q")
    assert p.rules == (rule(["p", "q"]),)


def test_parse_negation():
    p = parse_program("p :- not q.\nq :- not p.")
    assert p.rules == (rule(["p"], neg=["q"]), rule(["q"], neg=["p"]))


def test_parse_constraint_comments_and_layout():
    p = parse_program("% head\n  :- a ,\n not b. % tail\nc|d:-a.")
    assert p.atoms == ("a", "b", "c", "d")
    assert p.rules == (rule([], ["a"], ["b"]), rule(["c", "d"], ["a"]))


def test_non_ground_rejected():
    with pytest.raises(NonGroundError) as info:
        parse_program("p(X) :- q(X).")
    assert (info.value.line, info.value.column) == (1, 3)


@pytest.mark.parametrize(
    "text, line, column",
    [("p :- q\nr.", 2, 1), ("p :- .", 1, 6), ("p | .", 1, 5), ("p :- q; r.", 1, 7), ("not.", 1, 1), ("p", 1, 2)],
)
def test_syntax_errors_have_positions(text, line, column):
    with pytest.raises(FormatError) as info:
        parse_program(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_format_program_round_trips():
    for seed in range(50):
        p = random_program(seed)
        assert parse_program(format_program(p)).rules == p.rules


# -- reduct and derivation ----------------------------------------------------


def test_reduct_examples():
    p = parse_program("p :- not q.")
    assert reduct(p, {"q"}) == [rule(["p"])]
    assert reduct(p, set()) == []
    p = parse_program("p | q.")
    assert reduct(p, set()) == reduct(p, {"p", "q"}) == [rule(["p", "q"])]


def test_derive_clauses_examples():
    assert set(derive_clauses(parse_program("p | q."), set())) == {fs("p", "q")}
    p = parse_program("p | q.\nr :- p.\nr :- q.")
    assert set(derive_clauses(p, set())) == {fs("p", "q"), fs("r")}
    assert set(derive_clauses(parse_program(":- not p."), {"p"})) == {fs()}


def test_derives_examples():
    p = parse_program("p | q.")
    assert derives(p, set(), {"p", "q"})
    assert not derives(p, set(), {"p"}) and not derives(p, set(), {"q"})
    assert not derives(Program([]), set(), set())
    assert derives(parse_program(":- not p."), {"p"}, set())


def test_derive_clauses_are_subsumption_minimal():
    for seed in range(200):
        p = random_program(seed)
        for f in range(1 << len(p.atoms)):
            cs = list(derive_clauses(p, p.names(f)))
            assert all(a == b or not a <= b for a in cs for b in cs)


def test_derives_is_monotone_in_assumptions():
    for seed in range(100):
        p = random_program(seed)
        n = len(p.atoms)
        for f in range(1 << n):
            for d in range(1 << n):
                if derives(p, p.names(f), p.names(d)):
                    for f2 in range(1 << n):
                        if f & ~f2 == 0:
                            assert derives(p, p.names(f2), p.names(d))


def test_derives_matches_truth_table_entailment():
    for seed in range(300):
        p = random_program(seed, max_atoms=6)
        n = len(p.atoms)
        for f in range(1 << n):
            red = reduct(p, p.names(f))
            for d in range(1 << n):
                assert derives(p, p.names(f), p.names(d)) == entails(red, p.names(d)), (seed, f, d)


# -- compilation --------------------------------------------------------------


def test_compile_disjunctive_fact():
    t = compile_program(parse_program("p | q."))
    assert t.universe == ("~p", "~q")
    assert [(set(x.source), set(x.target)) for x in t.pairs()] == [(set(), {"~p", "~q"})]
    assert stable_sets(t) == [fs("~p"), fs("~q")]


def test_compile_mutual_negation():
    t = compile_program(parse_program("p :- not q.\nq :- not p."))
    assert attacks(t, {"~q"}, {"~p"}) and attacks(t, {"~p"}, {"~q"})
    assert stable_sets(t) == [fs("~p"), fs("~q")]


def test_compile_empty_program():
    t = compile_program(Program([], ["p"]))
    assert t.base == () and is_affirmative(t) and is_local(t)


def test_compile_cap():
    p = Program([], [f"x{i}" for i in range(13)])
    with pytest.raises(CapExceeded):
        compile_program(p)
    with pytest.raises(CapExceeded):
        LazyTheory(p)
    assert compile_program(p, max_atoms=13).size == 13


def test_compiled_attacks_agree_with_derives():
    for seed in range(60):
        p = random_program(seed)
        t = compile_program(p)
        n = len(p.atoms)
        for c in range(1 << n):
            for d in range(1 << n):
                assert t.attacks_mask(c, d) == derives(p, p.names(c), p.names(d))


def test_lazy_and_materialized_agree():
    for seed in range(100):
        p = random_program(seed, max_atoms=6)
        t = compile_program(p)
        lazy = LazyTheory(p)
        n = len(p.atoms)
        for c in range(1 << n):
            for d in range(1 << n):
                assert lazy.attacks_mask(c, d) == t.attacks_mask(c, d)
        assert lazy.materialize() == t


def test_lazy_through_public_attacks():
    lazy = LazyTheory(parse_program("p | q."))
    assert attacks(lazy, set(), {"~p", "~q"})
    assert not attacks(lazy, set(), {"~p"})


def test_constraint_free_programs_compile_to_affirmative_theories():
    for seed in range(300):
        p = random_program(seed)
        if all(r.head for r in p.rules):
            assert is_affirmative(compile_program(p))


def test_normal_programs_compile_to_normal_theories():
    for seed in range(200):
        p = random_program(seed, normal=True)
        t = compile_program(p)
        assert is_normal(t)
        assert all(bits.popcount(b) == 1 for _, b in t.base)


@pytest.mark.parametrize("path", sorted(PROGRAMS.glob("*.dlp")), ids=lambda p: p.name)
def test_corpus_programs_parse(path):
    p = parse_program(path.read_text())
    assert compile_program(p).size == len(p.atoms)
