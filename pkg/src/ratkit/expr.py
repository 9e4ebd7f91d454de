"""Rational expressions over a semiring.

Expressions are immutable, hash-consed trees.  They are only ever built
through the smart constructors (:func:`zero`, :func:`one`, :func:`atom`,
:func:`plus`, :func:`times`, :func:`star`, :func:`lweight`, :func:`rweight`),
which keep every tree in normal form for the trivial identities: units and
zeros are absorbed, weights are merged and pushed to the left.  Nothing else
is ever rewritten, so ``a(bc)`` and ``(ab)c`` stay distinct.

Equality of expressions is identity of the interned objects.
"""

import threading
import weakref

from . import semiring as sr
from .errors import InvalidExpression, NotStarable, TagMismatch
from .semiring import SemiringTag, Weight

_store = weakref.WeakValueDictionary()
_lock = threading.Lock()


class Expr:
    """Base class of expression nodes.  Use the constructors, not the classes."""

    __slots__ = ("tag", "_key", "_hash", "__weakref__")
    kind = None

    def children(self):
        return ()

    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return self._hash

    def __repr__(self):
        from .syntax import to_string

        return f"<{type(self).__name__} {to_string(self)}>"

    def __str__(self):
        from .syntax import to_string

        return to_string(self)

    # operator sugar for tests and interactive use
    def __add__(self, other):
        return plus(self, other)

    def __mul__(self, other):
        return times(self, other)


class Zero(Expr):
    __slots__ = ()
    kind = "zero"


class One(Expr):
    __slots__ = ()
    kind = "one"


class Atom(Expr):
    __slots__ = ("letter",)
    kind = "atom"


class Sum(Expr):
    __slots__ = ("left", "right")
    kind = "sum"

    def children(self):
        return (self.left, self.right)


class Prod(Expr):
    __slots__ = ("left", "right")
    kind = "prod"

    def children(self):
        return (self.left, self.right)


class Star(Expr):
    __slots__ = ("sub",)
    kind = "star"

    def children(self):
        return (self.sub,)


class LWeight(Expr):
    __slots__ = ("weight", "sub")
    kind = "lweight"

    def children(self):
        return (self.sub,)


class RWeight(Expr):
    __slots__ = ("sub", "weight")
    kind = "rweight"

    def children(self):
        return (self.sub,)


def _make(cls, tag, **fields):
    key = (cls, tag) + tuple(fields.values())
    with _lock:
        node = _store.get(key)
        if node is None:
            node = object.__new__(cls)
            object.__setattr__(node, "tag", tag)
            for name, value in fields.items():
                object.__setattr__(node, name, value)
            object.__setattr__(node, "_key", key)
            object.__setattr__(node, "_hash", hash(key))
            _store[key] = node
    return node


def _same_tag(*items):
    tag = items[0].tag
    for x in items[1:]:
        if x.tag is not tag:
            raise TagMismatch(f"cannot combine {tag} and {x.tag}")
    return tag


# -- smart constructors ------------------------------------------------------


def zero(tag="B"):
    return _make(Zero, SemiringTag.of(tag))


def one(tag="B"):
    return _make(One, SemiringTag.of(tag))


def atom(letter, tag="B"):
    if not isinstance(letter, str) or len(letter) != 1:
        raise ValueError(f"letters are single characters, got {letter!r}")
    return _make(Atom, SemiringTag.of(tag), letter=letter)


def plus(e, f):
    tag = _same_tag(e, f)
    if isinstance(e, Zero):
        return f
    if isinstance(f, Zero):
        return e
    return _make(Sum, tag, left=e, right=f)


def times(e, f):
    tag = _same_tag(e, f)
    if isinstance(e, Zero) or isinstance(f, Zero):
        return zero(tag)
    if isinstance(e, One):
        return f
    if isinstance(f, One):
        return e
    if isinstance(e, LWeight) and isinstance(e.sub, One):
        return lweight(e.weight, f)
    if isinstance(f, LWeight) and isinstance(f.sub, One):
        return rweight(e, f.weight)
    return _make(Prod, tag, left=e, right=f)


def star(e):
    if isinstance(e, Zero):
        return one(e.tag)
    return _make(Star, e.tag, sub=e)


def lweight(k, e):
    k = sr.coerce(k, e.tag)
    if k.is_zero() or isinstance(e, Zero):
        return zero(e.tag)
    if k.is_one():
        return e
    if isinstance(e, LWeight):
        return lweight(k * e.weight, e.sub)
    return _make(LWeight, e.tag, weight=k, sub=e)


def rweight(e, k):
    k = sr.coerce(k, e.tag)
    if k.is_zero() or isinstance(e, Zero):
        return zero(e.tag)
    if k.is_one():
        return e
    if isinstance(e, One):
        return lweight(k, e)
    if isinstance(e, RWeight):
        return rweight(e.sub, e.weight * k)
    if isinstance(e, LWeight):
        return lweight(e.weight, rweight(e.sub, k))
    return _make(RWeight, e.tag, sub=e, weight=k)


def sum_of(terms, tag):
    """Left-associated sum of ``terms`` (zero when empty)."""
    acc = zero(tag)
    for t in terms:
        acc = plus(acc, t)
    return acc


def rebuild(e, children):
    """Rebuild node ``e`` over new children with the smart constructors."""
    if isinstance(e, Sum):
        return plus(*children)
    if isinstance(e, Prod):
        return times(*children)
    if isinstance(e, Star):
        return star(children[0])
    if isinstance(e, LWeight):
        return lweight(e.weight, children[0])
    if isinstance(e, RWeight):
        return rweight(children[0], e.weight)
    return e


# -- raw trees ---------------------------------------------------------------


def reduce_trivial(raw, tag="B"):
    """Normalize a raw tree given as nested tuples.

    Raw nodes are ``("zero",)``, ``("one",)``, ``("atom", letter)``,
    ``("sum", x, y)``, ``("prod", x, y)``, ``("star", x)``,
    ``("lweight", k, x)`` and ``("rweight", x, k)``.  An :class:`Expr` is
    accepted anywhere and is already reduced.
    """
    tag = SemiringTag.of(tag)
    if isinstance(raw, Expr):
        return raw
    op = raw[0]
    if op == "zero":
        return zero(tag)
    if op == "one":
        return one(tag)
    if op == "atom":
        return atom(raw[1], tag)
    if op == "sum":
        return plus(reduce_trivial(raw[1], tag), reduce_trivial(raw[2], tag))
    if op == "prod":
        return times(reduce_trivial(raw[1], tag), reduce_trivial(raw[2], tag))
    if op == "star":
        return star(reduce_trivial(raw[1], tag))
    if op == "lweight":
        return lweight(sr.coerce(raw[1], tag), reduce_trivial(raw[2], tag))
    if op == "rweight":
        return rweight(reduce_trivial(raw[1], tag), sr.coerce(raw[2], tag))
    raise ValueError(f"unknown raw node {op!r}")


# -- constant term and metrics ----------------------------------------------

_const_cache = weakref.WeakKeyDictionary()


def constant_term(e):
    """Coefficient of the empty word, computed on the syntax tree."""
    c = _const_cache.get(e)
    if c is not None:
        return c
    tag = e.tag
    if isinstance(e, (Zero, Atom)):
        c = sr.zero(tag)
    elif isinstance(e, One):
        c = sr.one(tag)
    elif isinstance(e, Sum):
        c = constant_term(e.left) + constant_term(e.right)
    elif isinstance(e, Prod):
        c = constant_term(e.left) * constant_term(e.right)
    elif isinstance(e, Star):
        inner = constant_term(e.sub)
        try:
            c = inner.star()
        except NotStarable:
            raise InvalidExpression(
                f"constant term {inner} of {e.sub} is not starable", path=str(e)
            ) from None
    elif isinstance(e, LWeight):
        c = e.weight * constant_term(e.sub)
    elif isinstance(e, RWeight):
        c = constant_term(e.sub) * e.weight
    else:
        raise TypeError(e)
    _const_cache[e] = c
    return c


def is_valid(e):
    try:
        constant_term(e)
    except InvalidExpression:
        return False
    return True


def literal_length(e):
    if isinstance(e, Atom):
        return 1
    return sum(literal_length(c) for c in e.children())


def depth(e):
    kids = e.children()
    if not kids:
        return 0
    return 1 + max(depth(c) for c in kids)


def star_height(e):
    if isinstance(e, Star):
        return 1 + star_height(e.sub)
    kids = e.children()
    return max((star_height(c) for c in kids), default=0)


def metrics(e):
    """Return ``(literal_length, depth, star_height)``."""
    return literal_length(e), depth(e), star_height(e)


def letters(e):
    """Letters occurring in ``e``, in order of first occurrence."""
    out = []
    stack = [e]
    while stack:
        x = stack.pop()
        if isinstance(x, Atom):
            if x.letter not in out:
                out.append(x.letter)
        stack.extend(reversed(x.children()))
    return out


def atoms(e):
    """Atom letters in left-to-right order (one entry per position)."""
    if isinstance(e, Atom):
        return [e.letter]
    out = []
    for c in e.children():
        out.extend(atoms(c))
    return out


def is_boolean(e):
    return e.tag is SemiringTag.B


def weights_in(e):
    """All weights appearing in weight nodes of ``e``."""
    out = []
    if isinstance(e, (LWeight, RWeight)):
        out.append(e.weight)
    for c in e.children():
        out.extend(weights_in(c))
    return out


__all__ = [
    "Expr", "Zero", "One", "Atom", "Sum", "Prod", "Star", "LWeight", "RWeight",
    "zero", "one", "atom", "plus", "times", "star", "lweight", "rweight",
    "sum_of", "rebuild", "reduce_trivial", "constant_term", "is_valid",
    "literal_length", "depth", "star_height", "metrics", "letters", "atoms",
    "Weight",
]
