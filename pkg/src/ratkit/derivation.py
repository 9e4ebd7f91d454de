"""Derivation of expressions and the derived-term automaton.

Derivatives are computed modulo the trivial identities only, so the set of
derived terms depends on how the expression is bracketed.
"""

from . import expr as ex
from . import semiring as sr
from .automaton import Automaton
from .errors import EmptyWord, InvalidExpression, NotStarable
from .lincomb import LinComb


def _star_of_constant(f):
    c = ex.constant_term(f)
    try:
        return c.star()
    except NotStarable:
        raise InvalidExpression(f"constant term {c} of {f} is not starable", path=str(f)) from None


def derive(e, letter, memo=None):
    """The derivative of ``e`` with respect to ``letter``, as a linear combination.

    ``memo`` may be shared between calls with the same letter; the returned
    combinations must then be treated as read-only.
    """
    if memo is None:
        memo = {}

    def d(x):
        got = memo.get(x)
        if got is not None:
            return got
        if isinstance(x, (ex.Zero, ex.One)):
            out = LinComb(x.tag)
        elif isinstance(x, ex.Atom):
            out = LinComb(x.tag, {ex.one(x.tag): sr.one(x.tag)} if x.letter == letter else None)
        elif isinstance(x, ex.Sum):
            out = d(x.left) + d(x.right)
        elif isinstance(x, ex.Prod):
            out = d(x.left).times_expr(x.right)
            c = ex.constant_term(x.left)
            if not c.is_zero():
                out = out + d(x.right).scale(c)
        elif isinstance(x, ex.Star):
            out = d(x.sub).times_expr(x).scale(_star_of_constant(x.sub))
        elif isinstance(x, ex.LWeight):
            out = d(x.sub).scale(x.weight)
        elif isinstance(x, ex.RWeight):
            out = d(x.sub).rweight(x.weight)
        else:
            raise TypeError(x)
        memo[x] = out
        return out

    return d(e)


def derive_word(e, word):
    """Derivative with respect to a nonempty word, letter after letter."""
    if not word:
        raise EmptyWord("derivation needs a nonempty word")
    comb = derive(e, word[0])
    for ch in word[1:]:
        nxt = LinComb(e.tag)
        for k, f in comb.monomials():
            nxt = nxt + derive(f, ch).scale(k)
        comb = nxt
    return comb


def _union(*lists):
    out = []
    seen = set()
    for lst in lists:
        for x in lst:
            if x not in seen:
                seen.add(x)
                out.append(x)
    return out


def true_derived_terms(e):
    """Derived terms computed by structural induction, without derivation."""
    memo = {}

    def td(x):
        got = memo.get(x)
        if got is not None:
            return got
        if isinstance(x, (ex.Zero, ex.One)):
            out = []
        elif isinstance(x, ex.Atom):
            out = [ex.one(x.tag)]
        elif isinstance(x, ex.Sum):
            out = _union(td(x.left), td(x.right))
        elif isinstance(x, ex.Prod):
            out = _union([ex.times(k, x.right) for k in td(x.left)], td(x.right))
        elif isinstance(x, ex.Star):
            out = _union([ex.times(k, x) for k in td(x.sub)])
        elif isinstance(x, ex.LWeight):
            out = td(x.sub)
        elif isinstance(x, ex.RWeight):
            out = _union([ex.rweight(k, x.weight) for k in td(x.sub)])
        else:
            raise TypeError(x)
        memo[x] = out
        return out

    return td(e)


def derived_terms(e):
    """``e`` followed by its true derived terms, without repetition."""
    return _union([e], true_derived_terms(e))


def derived_term_automaton(e, alphabet=None):
    """Automaton on the derived terms of ``e``.

    The weight of ``K -a-> K'`` is the coefficient of ``K'`` in the
    derivative of ``K`` by ``a``; ``e`` is initial with weight one and the
    final weight of ``K`` is its constant term.  Returns
    ``(automaton, terms)`` where ``terms[i]`` labels state ``i``.
    """
    tag = e.tag
    terms = derived_terms(e)
    index = {k: i for i, k in enumerate(terms)}
    if alphabet is None:
        alphabet = sorted(ex.letters(e))
    edges = []
    memos = {a: {} for a in alphabet}
    for i, k in enumerate(terms):
        for a in alphabet:
            for target, w in derive(k, a, memos[a]).terms.items():
                if target not in index:
                    raise RuntimeError(f"derivative {target} of {k} is not a derived term")
                edges.append((i, a, w, index[target]))
    final = [(i, ex.constant_term(k)) for i, k in enumerate(terms)]
    aut = Automaton(tag, alphabet, len(terms), [(0, sr.one(tag))], final, edges)
    return aut, terms


def continuation_map(e):
    """Map each state of the standard automaton of ``e`` to a derived term.

    State 0 goes to ``e``; position ``x`` goes to its continuation, built
    bottom-up: ``1`` for the atom, ``K.G`` for a position of ``F`` in
    ``F.G``, ``K.F*`` inside a star, ``K k`` under a right weight.
    """

    def cont(x):
        if isinstance(x, ex.Atom):
            return [ex.one(x.tag)]
        if isinstance(x, (ex.Zero, ex.One)):
            return []
        if isinstance(x, ex.Sum):
            return cont(x.left) + cont(x.right)
        if isinstance(x, ex.Prod):
            return [ex.times(k, x.right) for k in cont(x.left)] + cont(x.right)
        if isinstance(x, ex.Star):
            return [ex.times(k, x) for k in cont(x.sub)]
        if isinstance(x, ex.LWeight):
            return cont(x.sub)
        if isinstance(x, ex.RWeight):
            return [ex.rweight(k, x.weight) for k in cont(x.sub)]
        raise TypeError(x)

    return [e] + cont(e)


def continuation_state_map(e, terms=None):
    """The continuation map as state indices into ``derived_terms(e)``."""
    if terms is None:
        terms = derived_terms(e)
    index = {k: i for i, k in enumerate(terms)}
    return [index[k] for k in continuation_map(e)]
