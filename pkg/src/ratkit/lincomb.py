"""Finite linear combinations of expressions."""

from . import expr as ex
from . import semiring as sr
from .semiring import SemiringTag


class LinComb:
    """A map from expressions to nonzero weights.

    In the Boolean case all weights are one and the combination is just a
    set of expressions.  Insertion order is kept, which makes printing and
    iteration deterministic.
    """

    __slots__ = ("tag", "terms")

    def __init__(self, tag, terms=None):
        self.tag = SemiringTag.of(tag)
        self.terms = {}
        for e, k in (terms or {}).items():
            self.add_term(e, k)

    def add_term(self, e, k=None):
        if k is None:
            k = sr.one(self.tag)
        elif not (isinstance(k, sr.Weight) and k.tag is self.tag):
            k = sr.coerce(k, self.tag)
        if isinstance(e, ex.Zero) or k.is_zero():
            return
        if e in self.terms:
            k = self.terms[e] + k
            if k.is_zero():
                del self.terms[e]
                return
        self.terms[e] = k

    def monomials(self):
        """Pairs ``(weight, expression)``."""
        return [(k, e) for e, k in self.terms.items()]

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __contains__(self, e):
        return e in self.terms

    def __getitem__(self, e):
        return self.terms.get(e, sr.zero(self.tag))

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.tag is other.tag and self.terms == other.terms

    def __repr__(self):
        return f"LinComb({self})"

    def __str__(self):
        if not self.terms:
            return "\\z"
        parts = []
        for e, k in self.terms.items():
            body = str(e)
            if k.is_one():
                parts.append(body)
            else:
                if isinstance(e, (ex.Sum, ex.Prod)):
                    body = f"({body})"
                parts.append(f"<{k}>{body}")
        return " (+) ".join(parts)

    def __add__(self, other):
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = LinComb(self.tag, self.terms)
        for e, k in other.terms.items():
            out.add_term(e, k)
        return out

    def scale(self, k):
        """``k`` times every monomial."""
        if k.is_one():
            return self
        out = LinComb(self.tag)
        if k.is_zero():
            return out
        for e, h in self.terms.items():
            out.add_term(e, k * h)
        return out

    def times_expr(self, f):
        """``[k E] . F = k (E.F)`` applied to every monomial."""
        out = LinComb(self.tag)
        for e, k in self.terms.items():
            out.add_term(ex.times(e, f), k)
        return out

    def rweight(self, k):
        """``[h E] k = h (E k)`` applied to every monomial."""
        out = LinComb(self.tag)
        for e, h in self.terms.items():
            out.add_term(ex.rweight(e, k), h)
        return out

    def as_dict(self):
        return dict(self.terms)
