"""Line-oriented text format and DOT export for automata.

Example::

    # comments start with '#'
    semiring Q
    alphabet a b
    states 3            # or: states p q r
    initial 0:1         # state[:weight], weight defaults to one
    final 0:2 1:2 2:2
    edge 0 a 1/3 1      # src letter weight dst; '_' is one
    epsilon true        # allows '@' as the epsilon letter

Unknown header words are rejected.
"""

from . import semiring as sr
from .automaton import EPSILON, Automaton
from .errors import ParseError


def automaton_from_text(text):
    tag = sr.SemiringTag.B
    alphabet = []
    names = None
    n = None
    eps = False
    initial, final, edges = [], [], []
    pending = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        head, args = line[0], line[1:]
        if head == "semiring":
            _arity(args, 1, lineno)
            tag = sr.SemiringTag.of(args[0])
        elif head == "alphabet":
            alphabet = list(args)
            if any(len(x) != 1 for x in alphabet):
                raise ParseError(f"line {lineno}: letters are single characters")
        elif head == "states":
            if len(args) == 1 and args[0].isdigit():
                n = int(args[0])
            else:
                names = list(args)
                n = len(names)
        elif head == "epsilon":
            _arity(args, 1, lineno)
            eps = args[0] == "true"
        elif head in ("initial", "final", "edge"):
            pending.append((lineno, head, args))
        else:
            raise ParseError(f"line {lineno}: unknown directive {head!r}")
    if n is None:
        raise ParseError("missing 'states' line")

    def state(tok, lineno):
        if names is not None and tok in names:
            return names.index(tok)
        if tok.isdigit() and int(tok) < n:
            return int(tok)
        raise ParseError(f"line {lineno}: unknown state {tok!r}")

    def weight(tok, lineno):
        if tok == "_":
            return sr.one(tag)
        try:
            return sr.parse_weight(tok, tag)
        except ParseError as err:
            raise ParseError(f"line {lineno}: {err}") from None

    for lineno, head, args in pending:
        if head == "edge":
            _arity(args, 4, lineno)
            src, letter, w, dst = args
            if letter == "@":
                if not eps:
                    raise ParseError(f"line {lineno}: epsilon edge without 'epsilon true'")
                letter = EPSILON
            edges.append((state(src, lineno), letter, weight(w, lineno), state(dst, lineno)))
            continue
        target = initial if head == "initial" else final
        for tok in args:
            name, _, w = tok.partition(":")
            target.append((state(name, lineno), weight(w, lineno) if w else sr.one(tag)))
    return Automaton(tag, alphabet, n, initial, final, edges, eps_allowed=eps, names=names)


def _arity(args, k, lineno):
    if len(args) != k:
        raise ParseError(f"line {lineno}: expected {k} field(s), got {len(args)}")


def automaton_to_text(a):
    lines = [f"semiring {a.tag}", "alphabet " + " ".join(a.alphabet)]
    lines.append("states " + (" ".join(a.names) if a.names else str(a.n)))
    if a.eps_allowed:
        lines.append("epsilon true")
    init = [f"{a.state_name(p)}:{a.initial[p]}" for p in range(a.n) if not a.initial[p].is_zero()]
    if init:
        lines.append("initial " + " ".join(init))
    fin = [f"{a.state_name(p)}:{a.final[p]}" for p in range(a.n) if not a.final[p].is_zero()]
    if fin:
        lines.append("final " + " ".join(fin))
    for s, lab, w, d in a.edges:
        lines.append(f"edge {a.state_name(s)} {lab or '@'} {w} {a.state_name(d)}")
    return "\n".join(lines) + "\n"


def automaton_to_dot(a, labels=None):
    """DOT rendering; ``labels`` optionally overrides the state captions."""
    out = ["digraph automaton {", "  rankdir=LR;", "  node [shape=circle];"]
    for p in range(a.n):
        caption = labels[p] if labels else a.state_name(p)
        caption = str(caption).replace('"', '\\"')
        out.append(f'  {p} [label="{caption}"];')
        if not a.initial[p].is_zero():
            out.append(f"  i{p} [shape=point];")
            out.append(f'  i{p} -> {p} [label="{_wlabel(a.initial[p])}"];')
        if not a.final[p].is_zero():
            out.append(f"  t{p} [shape=point];")
            out.append(f'  {p} -> t{p} [label="{_wlabel(a.final[p])}"];')
    for s, lab, w, d in a.edges:
        out.append(f'  {s} -> {d} [label="{_wlabel(w)}{lab or "ε"}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def _wlabel(w):
    return "" if w.is_one() else f"⟨{w}⟩"
