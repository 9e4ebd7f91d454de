"""Deciding whether two automata or two expressions have the same behaviour.

* Boolean: breadth-first search in the product of the two subset
  constructions, built on the fly.
* N, Z and Q: all computed over Q.  Row vectors ``I mu(w)`` of the two
  automata are stacked side by side; a basis of their span is grown word by
  word, and the automata are equivalent iff the difference of the two final
  functionals vanishes on that basis.
* min-plus: behaviours are compared on all words up to a fixed length; the
  verdict says so with ``method="sampled"``.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .automaton import _require_eps_free, eval_word, truncated_behaviour
from .derivation import derived_term_automaton
from . import expr as ex
from .errors import TagMismatch
from .semiring import SemiringTag

SAMPLE_LENGTH = 8


@dataclass(frozen=True)
class Verdict:
    equivalent: bool
    witness: tuple = None      # (word, weight in first, weight in second)
    method: str = "boolean-dfa"

    def __bool__(self):
        return self.equivalent


def _merged_alphabet(a, b):
    return list(a.alphabet) + [x for x in b.alphabet if x not in a.alphabet]


def _witness(a, b, word):
    return (word, eval_word(a, word), eval_word(b, word))


def equivalent_automata(a, b, sample_length=SAMPLE_LENGTH):
    if a.tag is not b.tag:
        raise TagMismatch(f"{a.tag} automaton against {b.tag} automaton")
    _require_eps_free(a)
    _require_eps_free(b)
    alphabet = _merged_alphabet(a, b)
    a, b = a.with_alphabet(alphabet), b.with_alphabet(alphabet)
    if a.tag is SemiringTag.B:
        return _boolean(a, b, alphabet)
    if a.tag is SemiringTag.MinPlus:
        return _sampled(a, b, sample_length)
    return _field(a, b, alphabet)


def _boolean(a, b, alphabet):
    ta, tb = a.transitions(), b.transitions()
    fa, fb = set(a.final_states()), set(b.final_states())

    def step(states, trans, letter):
        return frozenset(q for p in states for q, _ in trans[p].get(letter, ()))

    start = (frozenset(a.initial_states()), frozenset(b.initial_states()))
    seen = {start}
    queue = deque([(start, "")])
    while queue:
        (sa, sb), word = queue.popleft()
        if bool(sa & fa) != bool(sb & fb):
            return Verdict(False, _witness(a, b, word), "boolean-dfa")
        for x in alphabet:
            nxt = (step(sa, ta, x), step(sb, tb, x))
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, word + x))
    return Verdict(True, None, "boolean-dfa")


def _as_fraction(w):
    return Fraction(w.value)


def _field(a, b, alphabet):
    # vectors are sparse dicts {state: coefficient}; states of b are shifted by a.n
    mats = {x: {} for x in alphabet}
    for aut, off in ((a, 0), (b, a.n)):
        for s, lab, w, d in aut.edges:
            mats[lab].setdefault(s + off, []).append((d + off, _as_fraction(w)))
    final = {}
    for aut, off, sign in ((a, 0, 1), (b, a.n, -1)):
        for p, w in enumerate(aut.final):
            if not w.is_zero():
                final[p + off] = sign * _as_fraction(w)
    start = {}
    for aut, off in ((a, 0), (b, a.n)):
        for p, w in enumerate(aut.initial):
            if not w.is_zero():
                start[p + off] = _as_fraction(w)

    basis = {}  # pivot -> vector with 1 at its pivot and 0 at every other pivot

    def axpy(v, f, u):
        for i, y in u.items():
            z = v.get(i, 0) - f * y
            if z:
                v[i] = z
            else:
                v.pop(i, None)

    def insert(v):
        r = dict(v)
        for piv, u in basis.items():
            f = r.get(piv)
            if f:
                axpy(r, f, u)
        if not r:
            return False
        piv = min(r)
        f = r[piv]
        r = {i: x / f for i, x in r.items()}
        for u in basis.values():
            g = u.get(piv)
            if g:
                axpy(u, g, r)
        basis[piv] = r
        return True

    queue = deque()
    if insert(start):
        queue.append(("", start))
    while queue:
        word, v = queue.popleft()
        if sum(x * final[p] for p, x in v.items() if p in final):
            return Verdict(False, _witness(a, b, word), "field-span")
        for x in alphabet:
            nxt = {}
            for p, coef in v.items():
                for q, w in mats[x].get(p, ()):
                    nxt[q] = nxt.get(q, 0) + coef * w
            nxt = {q: c for q, c in nxt.items() if c}
            if insert(nxt):
                queue.append((word + x, nxt))
    return Verdict(True, None, "field-span")


def _sampled(a, b, length):
    sa, sb = truncated_behaviour(a, length), truncated_behaviour(b, length)
    words = sorted(set(sa.coeffs) | set(sb.coeffs), key=lambda w: (len(w), w))
    for w in words:
        if sa[w] != sb[w]:
            return Verdict(False, (w, sa[w], sb[w]), "sampled")
    return Verdict(True, None, "sampled")


def equivalent_exprs(e, f, sample_length=SAMPLE_LENGTH):
    """Compare two expressions through their derived-term automata."""
    if e.tag is not f.tag:
        raise TagMismatch(f"{e.tag} expression against {f.tag} expression")
    alphabet = sorted(set(ex.letters(e)) | set(ex.letters(f)))
    a, _ = derived_term_automaton(e, alphabet)
    b, _ = derived_term_automaton(f, alphabet)
    return equivalent_automata(a, b, sample_length)
