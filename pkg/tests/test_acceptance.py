"""Acceptance suite: one test per criterion, summarised by conftest."""

import itertools
import random
from fractions import Fraction

from corpus import TAGS, automaton_corpus, expr_corpus, has_only_nonempty_stars, random_order, trim_corpus
from ratkit import expr as ex
from ratkit.automaton import (
    accessible,
    backward_closure,
    check_morphism,
    isomorphic,
    loop_complexity,
    loop_index,
    minimal_quotient,
    truncated_behaviour,
)
from ratkit.delta import (
    continuation_state_map,
    derived_term_automaton,
    derived_terms,
    eggan_automaton,
    is_star_normal,
    standard_automaton,
    star_normal_form,
    thompson,
)
from ratkit.equiv import equivalent_automata, equivalent_exprs
from ratkit.gamma import (
    mcnaughton_yamada,
    mcnaughton_yamada_steps,
    recursive_behaviour,
    recursive_method,
    state_elimination,
    system_solution,
)
from ratkit.natural import simplify_natural
from ratkit.semiring import SemiringTag
from ratkit.series import truncated_series
from ratkit.syntax import parse
from test_automaton import d3
from test_gamma import r1

E1 = "(a*b+bb*a)*"
E3 = "(<1/6>a*+<1/3>b*)*"
E4 = "(\\e+<-1>a)a*"


def test_criterion_01_d3_elimination_heights():
    a = d3()
    p, q, r = 0, 1, 2
    exprs = [state_elimination(a, o) for o in ([r, p, q], [r, q, p], [p, q, r])]
    assert [ex.star_height(e) for e in exprs] == [2, 3, 3]
    v1 = equivalent_exprs(exprs[0], parse("a* + a*b(ba*b+ab*a)*ba*"))
    v2 = equivalent_exprs(exprs[1], parse("(a+b(ab*a)*b)*"))
    assert v1 and v2 and v1.method == v2.method == "boolean-dfa"
    for e in exprs:
        assert equivalent_automata(derived_term_automaton(e)[0], a)


def test_criterion_02_r1_goldens():
    steps = mcnaughton_yamada_steps(r1(), [0, 1])
    text = [[[str(x) for x in row] for row in m] for m in steps]
    assert text[0] == [["a", "b"], ["a", "b"]]
    assert text[1] == [["a+aa*a", "b+aa*b"]] * 2
    assert text[2] == [["a+aa*a+(b+aa*b)(b+aa*b)*(a+aa*a)",
                        "b+aa*b+(b+aa*b)(b+aa*b)*(b+aa*b)"]] * 2
    simple = [[str(simplify_natural(x)) for x in row] for row in steps[2]]
    assert simple == [["(a*b)*a*a", "(a*b)*a*b"]] * 2
    got = recursive_method(r1())
    want = [["(a+bb*a)*", "a*b(b+aa*b)*"], ["b*a(a+bb*a)*", "(b+aa*b)*"]]
    for p, q in itertools.product(range(2), repeat=2):
        assert equivalent_exprs(got[p][q], parse(want[p][q]))


def test_criterion_03_system_solution_is_elimination():
    rng = random.Random(3)
    for a in automaton_corpus(11, 200, "B", max_states=5):
        order = random_order(rng, a.n)
        assert system_solution(a, order) is state_elimination(a, order)


def _order_pairs_agree(tag, proper, seed):
    rng = random.Random(seed)
    for a in automaton_corpus(11, 200, tag, max_states=5, proper=proper):
        orders = [random_order(rng, a.n) for _ in range(3)]
        auts = [derived_term_automaton(state_elimination(a, o), "ab")[0] for o in orders]
        for x, y in itertools.combinations(auts, 2):
            v = equivalent_automata(x, y)
            assert v, (a, v.witness)
            assert v.method == ("boolean-dfa" if tag == "B" else "field-span")


def test_criterion_04_orders_agree_boolean():
    _order_pairs_agree("B", False, 4)


def test_criterion_04_orders_agree_rational():
    _order_pairs_agree("Q", True, 5)


def test_criterion_05_standard_automaton():
    f = Fraction
    s3 = standard_automaton(parse(E3, "Q"))
    assert [w.value for w in s3.initial] == [1, 0, 0]
    assert [w.value for w in s3.final] == [2, 2, 2]
    assert {(s, lab, w.value, d) for s, lab, w, d in s3.edges} == {
        (0, "a", f(1, 3), 1), (0, "b", f(2, 3), 2),
        (1, "a", f(4, 3), 1), (1, "b", f(2, 3), 2),
        (2, "a", f(1, 3), 1), (2, "b", f(5, 3), 2),
    }
    s4 = standard_automaton(parse(E4, "Z"))
    assert s4.n == 3 and [w.value for w in s4.final] == [1, 1, 1]
    assert {(s, lab, w.value, d) for s, lab, w, d in s4.edges} == {
        (0, "a", -1, 1), (0, "a", 1, 2), (1, "a", 1, 2), (2, "a", 1, 2)}
    rng = random.Random(5)
    for _ in range(500):
        tag = rng.choice(TAGS)
        e = expr_corpus(rng.random(), 1, tag, max_size=14)[0]
        assert standard_automaton(e).n == ex.literal_length(e) + 1


def test_criterion_06_star_normal_form():
    assert star_normal_form(parse("(a*b*)*")) is parse("(a+b)*")
    for e in expr_corpus(6, 200, "B", max_size=14):
        f = star_normal_form(e)
        assert is_star_normal(f)
        assert standard_automaton(f) == standard_automaton(e)


def test_criterion_07_thompson():
    for e in expr_corpus(7, 200, "B", max_size=14):
        assert isomorphic(accessible(backward_closure(thompson(e))), standard_automaton(e))


def test_criterion_08_derived_terms():
    e1 = parse(E1)
    assert derived_terms(e1) == [e1, parse("a*b" + E1), parse("b*a" + E1)]
    a1, terms = derived_term_automaton(e1)
    x, y = terms[1], terms[2]
    got = {(terms[s], lab, terms[d]) for s, lab, w, d in a1.edges if w.is_one()}
    assert len(got) == len(a1.edges) == 7
    assert got == {(e1, "a", x), (e1, "b", e1), (e1, "b", y),
                   (x, "a", x), (x, "b", e1), (y, "b", y), (y, "a", e1)}
    assert a1.initial_states() == [0] and a1.final_states() == [0]
    e4 = parse(E4, "Z")
    a4, terms4 = derived_term_automaton(e4)
    assert terms4 == [e4, parse("a*", "Z")]
    assert not [d for s, _, _, d in a4.edges if s == 0]
    assert truncated_behaviour(a4, 6).as_plain() == {"": 1}
    for tag in ("B", "Q"):
        for e in expr_corpus(8, 500, tag, max_size=14):
            assert len(derived_terms(e)) <= ex.literal_length(e) + 1


def test_criterion_09_quotients():
    for tag, count in (("B", 200), ("Q", 100)):
        for e in expr_corpus(9, count, tag, max_size=14):
            phi = continuation_state_map(e)
            assert check_morphism(standard_automaton(e), derived_term_automaton(e)[0], phi, True)
    q, _ = minimal_quotient(standard_automaton(parse(E4, "Z")))
    assert isomorphic(q, derived_term_automaton(parse(E4, "Z"))[0])


def test_criterion_10_loop_complexity():
    assert loop_complexity(d3()) == 2
    for a in trim_corpus(10, 150, max_states=4):
        heights = {}
        for order in itertools.permutations(range(a.n)):
            h = ex.star_height(state_elimination(a, order))
            assert loop_index(a, order) == h
            heights[order] = h
        assert loop_complexity(a) == min(heights.values())
    rng = random.Random(10)
    found = 0
    while found < 100:
        e = expr_corpus(rng.random(), 1, "B")[0]
        if not has_only_nonempty_stars(e) or ex.star_height(e) == 0:
            continue
        found += 1
        assert loop_complexity(eggan_automaton(e), bound=1000) == ex.star_height(e)


def _gamma_maps(a):
    yield state_elimination(a)
    yield system_solution(a)
    yield mcnaughton_yamada(a)[1]
    yield recursive_behaviour(a)


def _delta_maps(e):
    yield standard_automaton(e)
    yield derived_term_automaton(e)[0]
    if e.tag is SemiringTag.B:
        yield backward_closure(thompson(e))
        yield eggan_automaton(e)


def test_criterion_11_oracle_coherence():
    for tag in TAGS:
        for e in expr_corpus(11, 40, tag):
            s = truncated_series(e, 5)
            for a in _delta_maps(e):
                assert truncated_behaviour(a, 5) == s
        for a in automaton_corpus(11, 40, tag, max_states=4, proper=True):
            s = truncated_behaviour(a, 5)
            for e in _gamma_maps(a):
                assert truncated_series(e, 5) == s


def test_criterion_12_bracketing():
    assert len(derived_terms(parse("a(b(c(ab))*)"))) == 4
    assert len(derived_terms(parse("(ab)(c(ab))*"))) == 3
    rng = random.Random(12)
    for _ in range(500):
        tag = rng.choice(TAGS)
        e, f, g = expr_corpus(rng.random(), 3, tag, max_size=6, letters="abc")
        left = ex.times(ex.times(e, f), g)
        right = ex.times(e, ex.times(f, g))
        assert len(derived_terms(left)) <= len(derived_terms(right))
