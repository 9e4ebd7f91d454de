"""Weight domains: Boolean, natural, integer, rational and min-plus semirings.

Every :class:`Weight` carries the tag of its semiring.  Arithmetic is exact:
integers are Python ints, rationals are :class:`fractions.Fraction`, and the
min-plus zero is ``math.inf`` (the only non-integer value ever stored).
"""

import enum
import math
import re
from fractions import Fraction

from .errors import NotStarable, ParseError, TagMismatch


class SemiringTag(enum.Enum):
    B = "B"
    N = "N"
    Z = "Z"
    Q = "Q"
    MinPlus = "MinPlus"

    @classmethod
    def of(cls, name):
        """Look a tag up by name, case-insensitively; tags pass through."""
        if isinstance(name, cls):
            return name
        for tag in cls:
            if tag.value.lower() == str(name).lower():
                return tag
        raise ParseError(f"unknown semiring {name!r}")

    def __str__(self):
        return self.value


INF = math.inf


def _normalize(tag, value):
    if tag is SemiringTag.B:
        if value not in (0, 1, True, False):
            raise ValueError(f"not a Boolean weight: {value!r}")
        return int(bool(value))
    if tag is SemiringTag.N:
        value = int(value)
        if value < 0:
            raise ValueError(f"not a natural weight: {value!r}")
        return value
    if tag is SemiringTag.Z:
        return int(value)
    if tag is SemiringTag.Q:
        return Fraction(value)
    if value == INF:
        return INF
    if isinstance(value, float) or (isinstance(value, Fraction) and value.denominator != 1):
        raise ValueError(f"not a min-plus weight: {value!r}")
    return int(value)


class Weight:
    """An element of one of the five semirings."""

    __slots__ = ("tag", "value", "_hash")

    def __init__(self, tag, value):
        tag = SemiringTag.of(tag)
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "value", _normalize(tag, value))
        object.__setattr__(self, "_hash", hash((tag, self.value)))

    @classmethod
    def _trusted(cls, tag, value):
        # value already has the normal type for tag (results of + and *)
        w = object.__new__(cls)
        object.__setattr__(w, "tag", tag)
        object.__setattr__(w, "value", value)
        object.__setattr__(w, "_hash", hash((tag, value)))
        return w

    def __setattr__(self, name, value):
        raise AttributeError("Weight is immutable")

    def __reduce__(self):
        return (Weight, (self.tag, self.value))

    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return self.tag is other.tag and self.value == other.value

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Weight({self.tag.value}, {format_weight(self)})"

    def __str__(self):
        return format_weight(self)

    def __add__(self, other):
        return add(self, other)

    def __mul__(self, other):
        return mul(self, other)

    def star(self):
        return star(self)

    def is_zero(self):
        return self.value == _ZERO_VALUE[self.tag]

    def is_one(self):
        return self.value == _ONE_VALUE[self.tag]


_ZERO_VALUE = {
    SemiringTag.B: 0,
    SemiringTag.N: 0,
    SemiringTag.Z: 0,
    SemiringTag.Q: Fraction(0),
    SemiringTag.MinPlus: INF,
}
_ONE_VALUE = {
    SemiringTag.B: 1,
    SemiringTag.N: 1,
    SemiringTag.Z: 1,
    SemiringTag.Q: Fraction(1),
    SemiringTag.MinPlus: 0,
}

_ZEROS = {}
_ONES = {}


def zero(tag):
    tag = SemiringTag.of(tag)
    if tag not in _ZEROS:
        _ZEROS[tag] = Weight(tag, _ZERO_VALUE[tag])
    return _ZEROS[tag]


def one(tag):
    tag = SemiringTag.of(tag)
    if tag not in _ONES:
        _ONES[tag] = Weight(tag, _ONE_VALUE[tag])
    return _ONES[tag]


def _check(x, y):
    if x.tag is not y.tag:
        raise TagMismatch(f"cannot combine {x.tag} and {y.tag} weights")
    return x.tag


def add(x, y):
    tag = _check(x, y)
    if tag is SemiringTag.B:
        return x if x.value >= y.value else y
    if tag is SemiringTag.MinPlus:
        return x if x.value <= y.value else y
    if x.is_zero():
        return y
    if y.is_zero():
        return x
    return Weight._trusted(tag, x.value + y.value)


def mul(x, y):
    tag = _check(x, y)
    if tag is SemiringTag.B:
        return x if x.value <= y.value else y
    if x.is_one():
        return y
    if y.is_one():
        return x
    if tag is SemiringTag.MinPlus:
        if x.value == INF or y.value == INF:
            return zero(tag)
    return Weight._trusted(tag, x.value + y.value if tag is SemiringTag.MinPlus else x.value * y.value)


def star(x):
    """Partial star.  Raises :class:`NotStarable` outside the domain."""
    tag = x.tag
    if tag is SemiringTag.B:
        return one(tag)
    if tag in (SemiringTag.N, SemiringTag.Z):
        if x.value == 0:
            return one(tag)
        raise NotStarable(x)
    if tag is SemiringTag.Q:
        if abs(x.value) < 1:
            return Weight(tag, 1 / (1 - x.value))
        raise NotStarable(x)
    # min-plus: min(0, x, 2x, ...) is 0 as long as x is not negative
    if x.value >= 0:
        return one(tag)
    raise NotStarable(x)


def is_starable(x):
    try:
        star(x)
    except NotStarable:
        return False
    return True


def total(weights, tag):
    """Sum of an iterable of weights (zero when empty)."""
    acc = zero(tag)
    for w in weights:
        acc = add(acc, w)
    return acc


_INT_RE = re.compile(r"[+-]?\d+\Z")
_FRAC_RE = re.compile(r"([+-]?\d+)/(\d+)\Z")


def parse_weight(text, tag):
    """Read a weight in the text syntax of ``tag``."""
    tag = SemiringTag.of(tag)
    s = text.strip()
    try:
        if tag is SemiringTag.B:
            if s not in ("0", "1"):
                raise ValueError
            return Weight(tag, int(s))
        if tag in (SemiringTag.N, SemiringTag.Z):
            if not _INT_RE.match(s):
                raise ValueError
            return Weight(tag, int(s))
        if tag is SemiringTag.Q:
            m = _FRAC_RE.match(s)
            if m:
                den = int(m.group(2))
                if den == 0:
                    raise ValueError
                return Weight(tag, Fraction(int(m.group(1)), den))
            if not _INT_RE.match(s):
                raise ValueError
            return Weight(tag, int(s))
        if s == "oo":
            return zero(tag)
        if not _INT_RE.match(s):
            raise ValueError
        return Weight(tag, int(s))
    except ValueError:
        raise ParseError(f"bad {tag} weight {text!r}") from None


def format_weight(w):
    v = w.value
    if w.tag is SemiringTag.MinPlus and v == INF:
        return "oo"
    if w.tag is SemiringTag.Q and v.denominator != 1:
        return f"{v.numerator}/{v.denominator}"
    if w.tag is SemiringTag.Q:
        return str(v.numerator)
    return str(v)


def coerce(value, tag):
    """Turn a Weight, a number or a weight string into a Weight of ``tag``."""
    tag = SemiringTag.of(tag)
    if isinstance(value, Weight):
        if value.tag is not tag:
            raise TagMismatch(f"expected a {tag} weight, got {value.tag}")
        return value
    if isinstance(value, str):
        return parse_weight(value, tag)
    return Weight(tag, value)
