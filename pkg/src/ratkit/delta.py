"""From expressions to automata.

Standard (position) automata are assembled from four blocks: the edges
``J`` leaving the initial state, the edges ``F`` between positions, the
final weights ``U`` of positions and the constant term ``c``.  The same
block operations serve the standard automaton of an expression and the
construction that reaches the star height as loop complexity.
"""

from . import expr as ex
from . import semiring as sr
from .automaton import EPSILON, Automaton
from .derivation import (  # noqa: F401  (re-exported)
    continuation_map,
    continuation_state_map,
    derive,
    derive_word,
    derived_term_automaton,
    derived_terms,
    true_derived_terms,
)
from .errors import InvalidExpression, NonBoolean, NotStarable
from .semiring import SemiringTag


def _merge(table, key, w):
    if key in table:
        w = table[key] + w
    if w.is_zero():
        table.pop(key, None)
    else:
        table[key] = w


class _Blocks:
    """A standard automaton with states ``0`` (initial) and ``1..n``."""

    def __init__(self, tag, n=0, J=None, F=None, c=None, U=None):
        self.tag = tag
        self.n = n
        self.J = J or {}   # (letter, q) -> weight
        self.F = F or {}   # (p, letter, q) -> weight
        self.c = sr.zero(tag) if c is None else c
        self.U = U or {}   # p -> weight

    def shifted(self, k):
        return _Blocks(
            self.tag, self.n,
            {(a, q + k): w for (a, q), w in self.J.items()},
            {(p + k, a, q + k): w for (p, a, q), w in self.F.items()},
            self.c,
            {p + k: w for p, w in self.U.items()},
        )

    def to_automaton(self, alphabet):
        tag = self.tag
        edges = [(0, a, w, q) for (a, q), w in self.J.items()]
        edges += [(p, a, w, q) for (p, a, q), w in self.F.items()]
        final = [(0, self.c)] + list(self.U.items())
        return Automaton(tag, alphabet, self.n + 1, [(0, sr.one(tag))], final, edges)


def std_letter(letter, tag):
    one = sr.one(tag)
    return _Blocks(tag, 1, {(letter, 1): one}, {}, sr.zero(tag), {1: one})


def std_sum(x, y):
    y = y.shifted(x.n)
    J = dict(x.J)
    for key, w in y.J.items():
        _merge(J, key, w)
    F = dict(x.F)
    F.update(y.F)
    U = dict(x.U)
    U.update(y.U)
    return _Blocks(x.tag, x.n + y.n, J, F, x.c + y.c, U)


def std_product(x, y):
    y = y.shifted(x.n)
    J = dict(x.J)
    for key, w in y.J.items():
        _merge(J, key, x.c * w)
    F = dict(x.F)
    F.update(y.F)
    for p, u in x.U.items():
        for (a, q), w in y.J.items():
            _merge(F, (p, a, q), u * w)
    U = {}
    for p, u in x.U.items():
        _merge(U, p, u * y.c)
    U.update(y.U)
    return _Blocks(x.tag, x.n + y.n, J, F, x.c * y.c, U)


def std_star(x, where=None):
    try:
        cs = x.c.star()
    except NotStarable:
        raise InvalidExpression(f"constant term {x.c} is not starable", path=where) from None
    J = {}
    for key, w in x.J.items():
        _merge(J, key, cs * w)
    F = dict(x.F)
    for p, u in x.U.items():
        for (a, q), w in x.J.items():
            _merge(F, (p, a, q), u * cs * w)
    U = {}
    for p, u in x.U.items():
        _merge(U, p, u * cs)
    return _Blocks(x.tag, x.n, J, F, cs, U)


def std_lweight(k, x):
    J = {}
    for key, w in x.J.items():
        _merge(J, key, k * w)
    return _Blocks(x.tag, x.n, J, dict(x.F), k * x.c, dict(x.U))


def std_rweight(x, k):
    U = {}
    for p, u in x.U.items():
        _merge(U, p, u * k)
    return _Blocks(x.tag, x.n, dict(x.J), dict(x.F), x.c * k, U)


def _blocks(e):
    tag = e.tag
    if isinstance(e, ex.Zero):
        return _Blocks(tag)
    if isinstance(e, ex.One):
        return _Blocks(tag, c=sr.one(tag))
    if isinstance(e, ex.Atom):
        return std_letter(e.letter, tag)
    if isinstance(e, ex.Sum):
        return std_sum(_blocks(e.left), _blocks(e.right))
    if isinstance(e, ex.Prod):
        return std_product(_blocks(e.left), _blocks(e.right))
    if isinstance(e, ex.Star):
        return std_star(_blocks(e.sub), where=str(e))
    if isinstance(e, ex.LWeight):
        return std_lweight(e.weight, _blocks(e.sub))
    if isinstance(e, ex.RWeight):
        return std_rweight(_blocks(e.sub), e.weight)
    raise TypeError(e)


def _alphabet(e, alphabet):
    return sorted(ex.letters(e)) if alphabet is None else list(alphabet)


def standard_automaton(e, alphabet=None):
    """Standard automaton of ``e``: one state per atom plus the initial state 0.

    Positions are numbered from 1 in left-to-right order of the atoms.
    """
    return _blocks(e).to_automaton(_alphabet(e, alphabet))


# -- star normal form ----------------------------------------------------------


def _require_boolean(e, what):
    if e.tag is not SemiringTag.B:
        raise NonBoolean(f"{what} is only defined for Boolean expressions")


def star_normal_form(e):
    """Boolean expression with the same standard automaton and no starred
    subexpression containing the empty word."""
    _require_boolean(e, "star normal form")
    tag = e.tag

    def bullet(x):
        # drops the empty word from stars' bodies
        if isinstance(x, (ex.Zero, ex.One)):
            return ex.zero(tag)
        if isinstance(x, ex.Atom):
            return x
        if isinstance(x, ex.Sum):
            return ex.plus(bullet(x.left), bullet(x.right))
        if isinstance(x, ex.Prod):
            if ex.constant_term(x.left).is_one() and ex.constant_term(x.right).is_one():
                return ex.plus(bullet(x.left), bullet(x.right))
            return ex.times(square(x.left), square(x.right))
        if isinstance(x, ex.Star):
            return bullet(x.sub)
        raise TypeError(x)

    def square(x):
        if isinstance(x, (ex.Zero, ex.One, ex.Atom)):
            return x
        if isinstance(x, ex.Sum):
            return ex.plus(square(x.left), square(x.right))
        if isinstance(x, ex.Prod):
            return ex.times(square(x.left), square(x.right))
        if isinstance(x, ex.Star):
            return ex.star(bullet(x.sub))
        raise TypeError(x)

    return square(e)


def is_star_normal(e):
    """True when no starred subexpression of ``e`` has constant term one."""
    if isinstance(e, ex.Star) and not ex.constant_term(e.sub).is_zero():
        return False
    return all(is_star_normal(c) for c in e.children())


# -- Thompson --------------------------------------------------------------------


def thompson(e, alphabet=None):
    """Thompson automaton of a Boolean expression, with epsilon edges.

    States are numbered in post-order: the states of the operands come
    before the ones added by an operator.
    """
    _require_boolean(e, "the Thompson construction")
    one = sr.one(e.tag)
    edges = []
    count = [0]

    def new():
        count[0] += 1
        return count[0] - 1

    def build(x):
        if isinstance(x, ex.Prod):
            i1, t1 = build(x.left)
            i2, t2 = build(x.right)
            edges.append((t1, EPSILON, one, i2))
            return i1, t2
        if isinstance(x, ex.Sum):
            i1, t1 = build(x.left)
            i2, t2 = build(x.right)
            i, t = new(), new()
            edges.extend([(i, EPSILON, one, i1), (i, EPSILON, one, i2),
                          (t1, EPSILON, one, t), (t2, EPSILON, one, t)])
            return i, t
        if isinstance(x, ex.Star):
            i1, t1 = build(x.sub)
            i, t = new(), new()
            edges.extend([(i, EPSILON, one, i1), (t1, EPSILON, one, t),
                          (t1, EPSILON, one, i1), (i, EPSILON, one, t)])
            return i, t
        i, t = new(), new()
        if isinstance(x, ex.Atom):
            edges.append((i, x.letter, one, t))
        elif isinstance(x, ex.One):
            edges.append((i, EPSILON, one, t))
        return i, t

    i, t = build(e)
    return Automaton(e.tag, _alphabet(e, alphabet), count[0], [(i, one)], [(t, one)], edges,
                     eps_allowed=True)


# -- loop complexity equal to star height ------------------------------------------


def _normalized(x):
    """Add a final state ``t`` receiving a copy of every edge entering a final
    state; ``t`` becomes the only final state.  Returns ``(blocks, t)``."""
    t = x.n + 1
    J = dict(x.J)
    F = dict(x.F)
    for (a, q), w in x.J.items():
        if q in x.U:
            _merge(J, (a, t), w * x.U[q])
    for (p, a, q), w in x.F.items():
        if q in x.U:
            _merge(F, (p, a, t), w * x.U[q])
    return _Blocks(x.tag, x.n + 1, J, F, x.c, {t: sr.one(x.tag)}), t


def _without_empty_word(x):
    return _Blocks(x.tag, x.n, dict(x.J), dict(x.F), sr.zero(x.tag), dict(x.U))


def _eggan(e):
    tag = e.tag
    if isinstance(e, ex.Zero):
        return _Blocks(tag)
    if isinstance(e, ex.One):
        return _Blocks(tag, c=sr.one(tag))
    if isinstance(e, ex.Atom):
        return std_letter(e.letter, tag)
    if isinstance(e, ex.Sum):
        return std_sum(_eggan(e.left), _eggan(e.right))
    if isinstance(e, ex.Prod):
        return std_product(_eggan(e.left), _eggan(e.right))
    if isinstance(e, ex.Star):
        a = _eggan(e.sub)
        if not a.J:
            # the body denotes at most the empty word
            return std_star(a)
        norm, t = _normalized(_without_empty_word(a))
        b = std_star(std_product(norm, _without_empty_word(a)))
        b.U[t] = sr.one(tag)
        return b
    raise NonBoolean("weights are not allowed here")


def eggan_automaton(e, alphabet=None):
    """Boolean automaton for ``e`` whose loop complexity is the star height of ``e``.

    Sums and products use the standard operations.  A star ``F*`` is built
    from ``A`` for ``F`` as ``(N(A)' . A')*`` where ``'`` removes the empty
    word and ``N`` adds a single final state, which is then made final in
    the result too.  Stars over expressions denoting at most the empty word
    fall back to the plain standard star.
    """
    _require_boolean(e, "this construction")
    return _eggan(e).to_automaton(_alphabet(e, alphabet))
