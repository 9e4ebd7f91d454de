import random
from fractions import Fraction

import pytest

from corpus import TAGS, expr_corpus, random_weight
from ratkit import expr as ex
from ratkit.errors import InvalidExpression, ParseError, UnknownLetter
from ratkit.natural import simplify_natural
from ratkit.semiring import SemiringTag, Weight
from ratkit.series import truncated_series
from ratkit.syntax import parse, to_string

B, Z, Q = SemiringTag.B, SemiringTag.Z, SemiringTag.Q


def a_(x, tag=B):
    return ex.atom(x, tag)


def test_parse_e1_shape():
    e = parse("(a*b+bb*a)*")
    a, b = a_("a"), a_("b")
    want = ex.star(ex.plus(ex.times(ex.star(a), b), ex.times(ex.times(b, ex.star(b)), a)))
    assert e is want
    assert isinstance(e, ex.Star) and isinstance(e.sub, ex.Sum)


def test_parse_weighted_e3_shape():
    e = parse("(<1/6>a*+<1/3>b*)*", "Q")
    s = e.sub
    assert isinstance(s.left, ex.LWeight) and s.left.weight == Weight(Q, Fraction(1, 6))
    assert s.left.sub is ex.star(a_("a", Q))
    assert s.right.weight == Weight(Q, Fraction(1, 3))


def test_zero_star_is_one():
    assert parse("\\z*") is ex.one(B)


def test_left_associative():
    e = parse("abc")
    assert e.left is parse("ab") and e.right is a_("c")
    assert parse("a+b+c").left is parse("a+b")
    assert parse("a.b") is parse("ab")


def test_bracketing_is_kept():
    assert parse("a(bc)") is not parse("(ab)c")
    assert truncated_series(parse("a(bc)"), 4) == truncated_series(parse("(ab)c"), 4)


def test_weight_binding():
    # a left weight covers the stars of its factor, a right weight sticks to its base
    assert parse("<2>a*", "Z") is ex.lweight(Weight(Z, 2), ex.star(a_("a", Z)))
    assert parse("a<2>b", "Z") is ex.times(ex.rweight(a_("a", Z), Weight(Z, 2)), a_("b", Z))
    assert parse("a<2>*", "Z") is ex.star(ex.rweight(a_("a", Z), Weight(Z, 2)))


def test_syntax_errors():
    for bad in ("a+", "(a", "a)", "<2a", "\\q", "*a", ""):
        with pytest.raises(ParseError):
            parse(bad)
    with pytest.raises(ParseError):
        parse("<1/2>a", "Z")
    with pytest.raises(UnknownLetter):
        parse("ac", alphabet="ab")


def test_trivial_identities():
    tag = Z
    e = a_("a", tag)
    k = Weight(tag, 3)
    h = Weight(tag, -2)
    zero, one = ex.zero(tag), ex.one(tag)
    assert ex.plus(e, zero) is e and ex.plus(zero, e) is e
    assert ex.times(e, zero) is zero and ex.times(zero, e) is zero
    assert ex.times(e, one) is e and ex.times(one, e) is e
    assert ex.star(zero) is one
    assert ex.lweight(Weight(tag, 0), e) is zero and ex.rweight(e, Weight(tag, 0)) is zero
    assert ex.lweight(k, zero) is zero and ex.rweight(zero, k) is zero
    assert ex.lweight(Weight(tag, 1), e) is e and ex.rweight(e, Weight(tag, 1)) is e
    assert ex.lweight(k, ex.lweight(h, e)) is ex.lweight(Weight(tag, -6), e)
    assert ex.rweight(ex.rweight(e, k), h) is ex.rweight(e, Weight(tag, -6))
    assert ex.rweight(ex.lweight(k, e), h) is ex.lweight(k, ex.rweight(e, h))
    assert ex.rweight(one, k) is ex.lweight(k, one)
    assert ex.times(e, ex.lweight(k, one)) is ex.rweight(e, k)
    assert ex.times(ex.lweight(k, one), e) is ex.lweight(k, e)


def test_natural_identities_not_applied():
    assert parse("a+a") is not parse("a")
    assert parse("a**") is not parse("a*")
    assert parse("(a+b)c") is not parse("ac+bc")


# -- independent rewriting oracle for the trivial identities ---------------------


def _rules(t):
    """All one-step rewrites at the root of raw tree ``t``."""
    out = []
    op = t[0]
    zero, one = ("zero",), ("one",)
    if op == "sum":
        if t[1] == zero:
            out.append(t[2])
        if t[2] == zero:
            out.append(t[1])
    elif op == "prod":
        x, y = t[1], t[2]
        if zero in (x, y):
            out.append(zero)
        if x == one:
            out.append(y)
        if y == one:
            out.append(x)
        if x[0] == "lweight" and x[2] == one:
            out.append(("lweight", x[1], y))
        if y[0] == "lweight" and y[2] == one:
            out.append(("rweight", x, y[1]))
    elif op == "star":
        if t[1] == zero:
            out.append(one)
    elif op == "lweight":
        k, x = t[1], t[2]
        if k.is_zero() or x == zero:
            out.append(zero)
        if k.is_one():
            out.append(x)
        if x[0] == "lweight":
            out.append(("lweight", k * x[1], x[2]))
    elif op == "rweight":
        x, k = t[1], t[2]
        if k.is_zero() or x == zero:
            out.append(zero)
        if k.is_one():
            out.append(x)
        if x[0] == "rweight":
            out.append(("rweight", x[1], x[2] * k))
        if x[0] == "lweight":
            out.append(("lweight", x[1], ("rweight", x[2], k)))
        if x == one:
            out.append(("lweight", k, one))
    return out


def _positions(t, path=()):
    yield path, t
    if t[0] in ("sum", "prod"):
        yield from _positions(t[1], path + (1,))
        yield from _positions(t[2], path + (2,))
    elif t[0] == "star":
        yield from _positions(t[1], path + (1,))
    elif t[0] == "lweight":
        yield from _positions(t[2], path + (2,))
    elif t[0] == "rweight":
        yield from _positions(t[1], path + (1,))


def _replace(t, path, new):
    if not path:
        return new
    i = path[0]
    return t[:i] + (_replace(t[i], path[1:], new),) + t[i + 1 :]


def rewrite_randomly(t, rng):
    while True:
        redexes = [(p, r) for p, s in _positions(t) for r in _rules(s)]
        if not redexes:
            return t
        path, new = rng.choice(redexes)
        t = _replace(t, path, new)


def to_raw(e):
    if isinstance(e, ex.Zero):
        return ("zero",)
    if isinstance(e, ex.One):
        return ("one",)
    if isinstance(e, ex.Atom):
        return ("atom", e.letter)
    if isinstance(e, ex.Sum):
        return ("sum", to_raw(e.left), to_raw(e.right))
    if isinstance(e, ex.Prod):
        return ("prod", to_raw(e.left), to_raw(e.right))
    if isinstance(e, ex.Star):
        return ("star", to_raw(e.sub))
    if isinstance(e, ex.LWeight):
        return ("lweight", e.weight, to_raw(e.sub))
    return ("rweight", to_raw(e.sub), e.weight)


def random_raw(rng, tag, size):
    if size <= 1:
        return rng.choice([("zero",), ("one",), ("atom", "a"), ("atom", "b"), ("atom", "a")])
    op = rng.choice(["sum", "prod", "star", "lweight", "rweight"])
    k = rng.choice([Weight(tag, 0), Weight(tag, 1), random_weight(rng, tag)])
    if op == "star":
        return ("star", random_raw(rng, tag, size - 1))
    if op == "lweight":
        return ("lweight", k, random_raw(rng, tag, size - 1))
    if op == "rweight":
        return ("rweight", random_raw(rng, tag, size - 1), k)
    m = rng.randint(1, size - 1)
    return (op, random_raw(rng, tag, m), random_raw(rng, tag, size - m))


@pytest.mark.parametrize("tag", [SemiringTag.Z, SemiringTag.Q, SemiringTag.MinPlus], ids=str)
def test_reduction_matches_random_rewriting(tag):
    rng = random.Random(5)
    for _ in range(300):
        raw = random_raw(rng, tag, rng.randint(1, 12))
        first = rewrite_randomly(raw, random.Random(rng.random()))
        second = rewrite_randomly(raw, random.Random(rng.random()))
        assert first == second
        reduced = ex.reduce_trivial(raw, tag)
        assert to_raw(reduced) == first
        assert ex.reduce_trivial(to_raw(reduced), tag) is reduced


# -- constant term, metrics ---------------------------------------------------------


def test_constant_term_examples():
    assert ex.constant_term(parse("(a*b+bb*a)*")).is_one()
    assert ex.constant_term(parse("<1/6>a* + <1/3>b*", "Q")) == Weight(Q, Fraction(1, 2))
    assert ex.constant_term(parse("ab")).is_zero()
    with pytest.raises(InvalidExpression):
        ex.constant_term(parse("(\\e+a)*", "Z"))
    with pytest.raises(InvalidExpression):
        ex.constant_term(parse("(<1>\\e+a)*", "Q"))


def test_metrics():
    assert ex.star_height(parse("(a+b)*")) == 1
    assert ex.star_height(parse("a*(ba*)*")) == 2
    assert ex.literal_length(parse("(a*b+bb*a)*")) == 5
    assert ex.metrics(ex.one(B)) == (0, 0, 0)
    assert ex.metrics(parse("<2>a*", "Z")) == (1, 2, 1)
    assert ex.depth(parse("(ab)c")) == 2


@pytest.mark.parametrize("tag", TAGS, ids=str)
def test_constant_term_matches_series(tag):
    for e in expr_corpus(17, 150, tag):
        assert truncated_series(e, 0)[""] == ex.constant_term(e)


# -- series oracle -------------------------------------------------------------------


def test_series_examples():
    assert truncated_series(parse("(\\e+<-1>a)a*", "Z"), 3).as_plain() == {"": 1}
    s = truncated_series(parse("(a+b)*"), 2)
    assert s.as_plain() == {w: 1 for w in ["", "a", "b", "aa", "ab", "ba", "bb"]}
    e3 = parse("(<1/6>a*+<1/3>b*)*", "Q")
    assert truncated_series(e3, 1).as_plain() == {"": 2, "a": Fraction(2, 3), "b": Fraction(4, 3)}


def test_series_minplus():
    e = parse("<2>a*+<1>(aa)", "MinPlus")
    assert truncated_series(e, 2).as_plain() == {"": 2, "a": 2, "aa": 1}


def test_series_rejects_invalid():
    with pytest.raises(InvalidExpression):
        truncated_series(parse("(\\e+a)*", "N"), 2)


# -- printing ----------------------------------------------------------------------


@pytest.mark.parametrize("tag", TAGS, ids=str)
def test_print_parse_round_trip(tag):
    for e in expr_corpus(23, 200, tag, max_size=14):
        assert parse(to_string(e), tag) is e


def test_printing():
    assert str(parse("a(bc)")) == "a(bc)"
    assert str(parse("(ab)c")) == "abc"
    assert str(parse("a.<2>b", "Z")) == "a.<2>b"
    assert str(parse("<1/2>(a+b)", "Q")) == "<1/2>(a+b)"


def test_natural_simplification():
    m = parse("a+a(a)*a+(b+a(a)*b)(b+a(a)*b)*(a+a(a)*a)")
    assert simplify_natural(m) is parse("(a*b)*a*a")
    assert simplify_natural(parse("a+a")) is parse("a")
    assert simplify_natural(parse("(a*)*")) is parse("a*")
    assert simplify_natural(parse("\\e+aa*")) is parse("a*")


@pytest.mark.parametrize("tag", [SemiringTag.B, SemiringTag.Q], ids=str)
def test_natural_simplification_keeps_series(tag):
    for e in expr_corpus(29, 150, tag):
        assert truncated_series(simplify_natural(e), 4) == truncated_series(e, 4)
