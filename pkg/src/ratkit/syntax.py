"""Reading and writing expressions.

Grammar (whitespace is ignored)::

    expr    := term ('+' term)*
    term    := factor ('.'? factor)*
    factor  := '<' weight '>' factor | postfix
    postfix := base ('*' | '<' weight '>')*
    base    := letter | '\\e' | '\\z' | '(' expr ')'

A left weight scopes over the next factor, stars and right weights included,
so ``<1/6>a*`` is ``<1/6>(a*)``.  A right weight attaches to the preceding
base like a star does: ``a<2>b`` is ``(a<2>)b``.  Sums and products
associate to the left.  Letters are single ASCII letters, digits or ``_``.
"""

from . import expr as ex
from . import semiring as sr
from .errors import ParseError, UnknownLetter
from .semiring import SemiringTag


def is_letter(ch):
    return ch.isascii() and (ch.isalnum() or ch == "_")


class _Parser:
    def __init__(self, text, tag, alphabet):
        self.text = text
        self.pos = 0
        self.tag = tag
        self.alphabet = None if alphabet is None else set(alphabet)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        if self.pos < len(self.text):
            return self.text[self.pos]
        return ""

    def expect(self, ch):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def parse(self):
        e = self.expr()
        if self.peek():
            raise ParseError(f"unexpected {self.peek()!r}", self.pos)
        return e

    def expr(self):
        e = self.term()
        while self.peek() == "+":
            self.pos += 1
            e = ex.plus(e, self.term())
        return e

    def starts_factor(self, ch):
        return ch in ("<", "(", "\\") or (ch != "" and is_letter(ch))

    def term(self):
        e = self.factor()
        while True:
            ch = self.peek()
            if ch == ".":
                self.pos += 1
                e = ex.times(e, self.factor())
            elif self.starts_factor(ch):
                e = ex.times(e, self.factor())
            else:
                return e

    def weight(self):
        self.expect("<")
        start = self.pos
        end = self.text.find(">", start)
        if end < 0:
            raise ParseError("unterminated weight", start)
        self.pos = end + 1
        try:
            return sr.parse_weight(self.text[start:end], self.tag)
        except ParseError as err:
            raise ParseError(str(err), start) from None

    def factor(self):
        if self.peek() == "<":
            k = self.weight()
            return ex.lweight(k, self.factor())
        return self.postfix()

    def postfix(self):
        e = self.base()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                e = ex.star(e)
            elif ch == "<":
                e = ex.rweight(e, self.weight())
            else:
                return e

    def base(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            e = self.expr()
            self.expect(")")
            return e
        if ch == "\\":
            code = self.text[self.pos + 1 : self.pos + 2]
            if code == "e":
                self.pos += 2
                return ex.one(self.tag)
            if code == "z":
                self.pos += 2
                return ex.zero(self.tag)
            raise ParseError(f"unknown escape \\{code}", self.pos)
        if ch and is_letter(ch):
            if self.alphabet is not None and ch not in self.alphabet:
                raise UnknownLetter(f"letter {ch!r} is not in the alphabet")
            self.pos += 1
            return ex.atom(ch, self.tag)
        raise ParseError(f"unexpected {ch or 'end of input'!r}", self.pos)


def parse(text, tag="B", alphabet=None):
    """Parse ``text`` into a reduced expression over semiring ``tag``.

    >>> str(parse("(a*b+bb*a)*"))
    '(a*b+bb*a)*'
    """
    return _Parser(text, SemiringTag.of(tag), alphabet).parse()


# -- printing ----------------------------------------------------------------

_SUM, _PROD, _FACTOR, _POSTFIX = range(4)


def _level(e):
    if isinstance(e, ex.Sum):
        return _SUM
    if isinstance(e, ex.Prod):
        return _PROD
    if isinstance(e, ex.LWeight):
        return _FACTOR
    return _POSTFIX


def _show(e, need, out):
    paren = _level(e) < need
    if paren:
        out.append("(")
    if isinstance(e, ex.Zero):
        out.append("\\z")
    elif isinstance(e, ex.One):
        out.append("\\e")
    elif isinstance(e, ex.Atom):
        out.append(e.letter)
    elif isinstance(e, ex.Sum):
        _show(e.left, _SUM, out)
        out.append("+")
        _show(e.right, _PROD, out)
    elif isinstance(e, ex.Prod):
        _show(e.left, _PROD, out)
        right = []
        _show(e.right, _FACTOR, right)
        if right[0].startswith("<"):
            out.append(".")
        out.extend(right)
    elif isinstance(e, ex.Star):
        _show(e.sub, _POSTFIX, out)
        out.append("*")
    elif isinstance(e, ex.LWeight):
        out.append(f"<{e.weight}>")
        _show(e.sub, _FACTOR, out)
    elif isinstance(e, ex.RWeight):
        _show(e.sub, _POSTFIX, out)
        out.append(f"<{e.weight}>")
    if paren:
        out.append(")")


def to_string(e):
    """Print ``e`` so that :func:`parse` reads back the same tree."""
    out = []
    _show(e, _SUM, out)
    return "".join(out)
