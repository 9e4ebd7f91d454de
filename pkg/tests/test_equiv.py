import itertools

import pytest

from corpus import automaton_corpus
from ratkit.automaton import Automaton, eval_word, truncated_behaviour
from ratkit.delta import standard_automaton
from ratkit.equiv import equivalent_automata, equivalent_exprs
from ratkit.errors import TagMismatch
from ratkit.syntax import parse


def test_boolean_witness():
    v = equivalent_exprs(parse("a*"), parse("(aa)*"))
    assert not v and v.method == "boolean-dfa"
    assert v.witness[0] == "a"
    assert v.witness[1].is_one() and v.witness[2].is_zero()
    assert equivalent_exprs(parse("(a*b*)*"), parse("(a+b)*"))


def test_field_cancellation():
    s4 = standard_automaton(parse("(\\e+<-1>a)a*", "Z"))
    unit = Automaton("Z", "a", 1, [1], [1])
    v = equivalent_automata(s4, unit)
    assert v and v.method == "field-span"
    v = equivalent_exprs(parse("<2>a", "Q"), parse("a+a", "Q"))
    assert v
    v = equivalent_exprs(parse("a", "N"), parse("a+a", "N"))
    assert not v and v.witness[0] == "a"


def test_minplus_is_sampled():
    v = equivalent_exprs(parse("a*", "MinPlus"), parse("(\\e+a)*", "MinPlus"))
    assert v and v.method == "sampled"
    v = equivalent_exprs(parse("<1>a", "MinPlus"), parse("<2>a", "MinPlus"))
    assert not v and v.witness[0] == "a"


def test_mixed_tags():
    with pytest.raises(TagMismatch):
        equivalent_exprs(parse("a"), parse("a", "Z"))


def _words(n):
    for k in range(n + 1):
        yield from map("".join, itertools.product("ab", repeat=k))


@pytest.mark.parametrize("tag", ["B", "N", "Z", "Q"])
def test_verdicts_are_sound(tag):
    # exact verdicts are checked against brute-force evaluation
    pairs = automaton_corpus(83, 120, tag, max_states=3)
    for a, b in zip(pairs[::2], pairs[1::2]):
        v = equivalent_automata(a, b)
        if v:
            assert truncated_behaviour(a, 6) == truncated_behaviour(b, 6)
        else:
            word, x, y = v.witness
            assert x != y and eval_word(a, word) == x and eval_word(b, word) == y
        assert equivalent_automata(a, a)


def test_distinct_alphabets_are_merged():
    a = Automaton("B", "a", 1, [1], [1])
    b = Automaton("B", "ab", 1, [1], [1])
    assert equivalent_automata(a, b)


def test_natural_numbers_through_rationals():
    assert equivalent_exprs(parse("a+a", "N"), parse("<2>a", "N"))
    assert not equivalent_exprs(parse("a*", "N"), parse("(a+a)*", "N"))
