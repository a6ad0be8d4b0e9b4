from pathlib import Path

import pytest

from collarg.dlp import Program, parse_program, reduct, rule
from collarg.errors import CapExceeded
from collarg.generators import random_program
from collarg.oracle import Interpretation, check_theorem1, entails, gl_reduct, stable_models

PROGRAMS = Path(__file__).parent.parent / "data" / "programs"


def models(text):
    return [set(m.true_atoms) for m in stable_models(parse_program(text))]


def test_entails_examples():
    disj = [rule(["p", "q"])]
    assert entails(disj, {"p", "q"})
    assert not entails(disj, {"p"})
    assert not entails([], {"p"})
    assert entails([rule(["p"])], {"p"})


def test_entails_rejects_negative_rules():
    with pytest.raises(ValueError):
        entails([rule(["p"], neg=["q"])], {"p"})


def test_falsum_entailed_only_by_inconsistent_rules():
    assert not entails([rule(["p"])], set())
    assert entails([rule(["p"]), rule([], ["p"])], set())


def test_gl_reduct_examples():
    p = parse_program("p :- not q.")
    assert gl_reduct(p, {"p"}) == [rule(["p"])]
    assert gl_reduct(p, Interpretation(frozenset({"q"}))) == []
    assert gl_reduct(parse_program("p | q."), {"p"}) == [rule(["p", "q"])]


def test_gl_reduct_is_reduct_of_complement():
    for seed in range(100):
        p = random_program(seed)
        for m in range(1 << len(p.atoms)):
            c = p.names(m)
            assert gl_reduct(p, c) == reduct(p, set(p.atoms) - c)


def test_stable_model_examples():
    assert models("p | q.") == [{"p"}, {"q"}]
    assert models("p :- not q.\nq :- not p.") == [{"p"}, {"q"}]
    assert models("p :- not p.") == []


def test_stable_models_cap():
    with pytest.raises(CapExceeded):
        stable_models(Program([], [f"x{i}" for i in range(13)]))


@pytest.mark.parametrize("text", ["p | q.", "", "p :- not p."])
def test_complement_bijection_examples(text):
    assert check_theorem1(parse_program(text)).passed


def test_bijection_report_content():
    report = check_theorem1(parse_program("p | q."))
    assert report.stable_models == [["p"], ["q"]]
    assert report.stable_sets == [["~p"], ["~q"]]
    assert report.to_dict()["counterexamples"] == []


@pytest.mark.parametrize("path", sorted(PROGRAMS.glob("*.dlp")), ids=lambda p: p.name)
def test_bijection_corpus(path):
    assert check_theorem1(parse_program(path.read_text())).passed
