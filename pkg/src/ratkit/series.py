"""Truncated series and the structural oracle for expressions.

The oracle computes the coefficients of the series denoted by an expression
directly from its syntax tree.  It never builds an automaton, so it can be
used to check every construction in the package.
"""

from . import expr as ex
from . import semiring as sr
from .errors import InvalidExpression, NotStarable


class TruncatedSeries:
    """Coefficients of a series on all words of length at most ``degree``.

    Only nonzero coefficients are stored.  Words are Python strings.
    """

    __slots__ = ("tag", "degree", "coeffs")

    def __init__(self, tag, degree, coeffs=None):
        self.tag = sr.SemiringTag.of(tag)
        self.degree = degree
        self.coeffs = {}
        for w, k in (coeffs or {}).items():
            k = sr.coerce(k, self.tag)
            if len(w) <= degree and not k.is_zero():
                self.coeffs[w] = k

    def __getitem__(self, word):
        if len(word) > self.degree:
            raise KeyError(f"{word!r} is longer than the truncation degree {self.degree}")
        return self.coeffs.get(word, sr.zero(self.tag))

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.tag is other.tag
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        body = ", ".join(f"{w or 'ε'}: {k}" for w, k in sorted(self.coeffs.items(), key=_word_key))
        return f"TruncatedSeries({self.tag}, {self.degree}, {{{body}}})"

    def items(self):
        """Nonzero coefficients in length-lexicographic order."""
        return sorted(self.coeffs.items(), key=_word_key)

    def truncate(self, degree):
        return TruncatedSeries(self.tag, degree, {w: k for w, k in self.coeffs.items() if len(w) <= degree})

    def as_plain(self):
        """Plain ``{word: value}`` dict, handy in tests."""
        return {w: k.value for w, k in self.coeffs.items()}


def _word_key(item):
    return (len(item[0]), item[0])


# series are dicts word -> Weight during the computation


def _add(s, t):
    out = dict(s)
    for w, k in t.items():
        if w in out:
            v = out[w] + k
            if v.is_zero():
                del out[w]
            else:
                out[w] = v
        else:
            out[w] = k
    return out


def _mul(s, t, n):
    out = {}
    for u, k in s.items():
        room = n - len(u)
        if room < 0:
            continue
        for v, h in t.items():
            if len(v) > room:
                continue
            w = u + v
            x = k * h
            if w in out:
                x = out[w] + x
            out[w] = x
    return {w: k for w, k in out.items() if not k.is_zero()}


def _scale(k, s, left=True):
    out = {}
    for w, h in s.items():
        x = k * h if left else h * k
        if not x.is_zero():
            out[w] = x
    return out


def _star(s, tag, n, where):
    c = s.get("", sr.zero(tag))
    try:
        cs = c.star()
    except NotStarable:
        raise InvalidExpression(f"constant term {c} is not starable", path=where) from None
    proper = {w: k for w, k in s.items() if w}
    # (c + p)* = (c* p)* c*, and (c* p)* is a finite sum below degree n
    x = _scale(cs, proper)
    unit = {"": sr.one(tag)}
    acc = dict(unit)
    power = unit
    for _ in range(n):
        power = _mul(power, x, n)
        if not power:
            break
        acc = _add(acc, power)
    return _scale(cs, acc, left=False)


def _series(e, n, memo):
    got = memo.get(e)
    if got is not None:
        return got
    tag = e.tag
    if isinstance(e, ex.Zero):
        s = {}
    elif isinstance(e, ex.One):
        s = {"": sr.one(tag)}
    elif isinstance(e, ex.Atom):
        s = {e.letter: sr.one(tag)} if n >= 1 else {}
    elif isinstance(e, ex.Sum):
        s = _add(_series(e.left, n, memo), _series(e.right, n, memo))
    elif isinstance(e, ex.Prod):
        s = _mul(_series(e.left, n, memo), _series(e.right, n, memo), n)
    elif isinstance(e, ex.Star):
        s = _star(_series(e.sub, n, memo), tag, n, str(e))
    elif isinstance(e, ex.LWeight):
        s = _scale(e.weight, _series(e.sub, n, memo))
    elif isinstance(e, ex.RWeight):
        s = _scale(e.weight, _series(e.sub, n, memo), left=False)
    else:
        raise TypeError(e)
    memo[e] = s
    return s


def truncated_series(e, n):
    """Coefficients of the series of ``e`` on words of length <= ``n``."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return TruncatedSeries(e.tag, n, _series(e, n, {}))


def series_of_lincomb(comb, n):
    """Truncated series of a linear combination of expressions."""
    tag = comb.tag
    acc = {}
    for k, e in comb.monomials():
        acc = _add(acc, _scale(k, _series(e, n, {})))
    return TruncatedSeries(tag, n, acc)


def left_quotient(s, u):
    """``u^-1 s``: the coefficient of ``w`` becomes that of ``u w``."""
    coeffs = {w[len(u):]: k for w, k in s.coeffs.items() if w.startswith(u)}
    return TruncatedSeries(s.tag, s.degree - len(u), coeffs)
