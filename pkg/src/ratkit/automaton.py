"""Weighted finite automata.

States are the integers ``0 .. n-1``.  Edges are kept in a dict keyed by
``(src, label, dst)`` so parallel edges are merged by addition, and zero
weights never get stored.  The empty string ``""`` labels epsilon edges,
which are only allowed when ``eps_allowed`` is set.
"""

from collections import deque

from . import semiring as sr
from .errors import (
    EpsilonPresent,
    NonBooleanEpsilon,
    TagMismatch,
    TooLarge,
    UnknownLetter,
)
from .semiring import SemiringTag
from .series import TruncatedSeries

EPSILON = ""


class Automaton:
    """A weighted automaton ``<Q, A, E, I, T>``."""

    def __init__(self, tag, alphabet, n, initial=None, final=None, edges=(),
                 eps_allowed=False, names=None):
        self.tag = SemiringTag.of(tag)
        self.alphabet = tuple(alphabet)
        self.n = n
        self.eps_allowed = eps_allowed
        zero = sr.zero(self.tag)
        self.initial = [zero] * n
        self.final = [zero] * n
        for p, k in _weights(initial, self.tag):
            self.initial[p] = self.initial[p] + k
        for p, k in _weights(final, self.tag):
            self.final[p] = self.final[p] + k
        self._edges = {}
        for src, label, w, dst in edges:
            self.add_edge(src, label, w, dst)
        self.names = list(names) if names is not None else None

    # construction helpers
    def add_edge(self, src, label, w, dst):
        if not (0 <= src < self.n and 0 <= dst < self.n):
            raise ValueError(f"edge {src}->{dst} outside 0..{self.n - 1}")
        if label == EPSILON:
            if not self.eps_allowed:
                raise EpsilonPresent("epsilon edge in an automaton without epsilon support")
        elif label not in self.alphabet:
            raise UnknownLetter(f"letter {label!r} is not in the alphabet")
        w = sr.coerce(w, self.tag)
        key = (src, label, dst)
        if key in self._edges:
            w = self._edges[key] + w
        if w.is_zero():
            self._edges.pop(key, None)
        else:
            self._edges[key] = w

    @property
    def edges(self):
        """Edges ``(src, label, weight, dst)`` sorted by src, label, dst."""
        return [(s, a, self._edges[(s, a, d)], d) for (s, a, d) in sorted(self._edges)]

    def edge_weight(self, src, label, dst):
        return self._edges.get((src, label, dst), sr.zero(self.tag))

    def has_epsilon(self):
        return any(a == EPSILON for (_, a, _) in self._edges)

    def state_name(self, p):
        return self.names[p] if self.names else str(p)

    def state_index(self, name):
        """Index of a state given its name or its decimal index."""
        if self.names and name in self.names:
            return self.names.index(name)
        try:
            p = int(name)
        except (TypeError, ValueError):
            raise ValueError(f"unknown state {name!r}") from None
        if not 0 <= p < self.n:
            raise ValueError(f"unknown state {name!r}")
        return p

    def successors(self):
        """Adjacency sets ignoring labels."""
        out = [set() for _ in range(self.n)]
        for (s, _, d) in self._edges:
            out[s].add(d)
        return out

    def transitions(self):
        """``{src: {letter: [(dst, weight), ...]}}`` for quick evaluation."""
        out = [dict() for _ in range(self.n)]
        for (s, a, d), w in sorted(self._edges.items()):
            out[s].setdefault(a, []).append((d, w))
        return out

    def initial_states(self):
        return [p for p in range(self.n) if not self.initial[p].is_zero()]

    def final_states(self):
        return [p for p in range(self.n) if not self.final[p].is_zero()]

    def copy(self, **changes):
        args = dict(tag=self.tag, alphabet=self.alphabet, n=self.n,
                    initial=list(enumerate(self.initial)),
                    final=list(enumerate(self.final)),
                    edges=self.edges, eps_allowed=self.eps_allowed, names=self.names)
        args.update(changes)
        return Automaton(**args)

    def with_alphabet(self, alphabet):
        """Same automaton over a larger alphabet."""
        merged = list(self.alphabet) + [a for a in alphabet if a not in self.alphabet]
        return self.copy(alphabet=merged)

    def __eq__(self, other):
        if not isinstance(other, Automaton):
            return NotImplemented
        return (self.tag is other.tag and self.n == other.n
                and self.initial == other.initial and self.final == other.final
                and self._edges == other._edges)

    def __repr__(self):
        return f"<Automaton {self.tag} n={self.n} edges={len(self._edges)}>"

    def __str__(self):
        from .textformat import automaton_to_text

        return automaton_to_text(self)


def _weights(given, tag):
    """Accept a full vector, a ``{state: weight}`` dict or ``(state, weight)`` pairs."""
    if given is None:
        return []
    if isinstance(given, dict):
        items = given.items()
    else:
        given = list(given)
        if given and not isinstance(given[0], tuple):
            items = enumerate(given)
        else:
            items = given
    return [(p, sr.coerce(k, tag)) for p, k in items]


def _require_eps_free(a):
    if a.has_epsilon():
        raise EpsilonPresent("the automaton has epsilon edges; apply backward_closure first")


# -- evaluation ------------------------------------------------------------


def _step(vec, trans, letter, tag):
    out = {}
    for p, x in vec.items():
        for q, w in trans[p].get(letter, ()):
            y = x * w
            out[q] = out[q] + y if q in out else y
    return {q: y for q, y in out.items() if not y.is_zero()}


def _initial_vector(a):
    return {p: k for p, k in enumerate(a.initial) if not k.is_zero()}


def _read_out(vec, a):
    acc = sr.zero(a.tag)
    for p, x in vec.items():
        acc = acc + x * a.final[p]
    return acc


def eval_word(a, word):
    """Weight of ``word``: ``I . mu(w1) ... mu(wm) . T``."""
    _require_eps_free(a)
    for ch in word:
        if ch not in a.alphabet:
            raise UnknownLetter(f"letter {ch!r} is not in the alphabet")
    trans = a.transitions()
    vec = _initial_vector(a)
    for ch in word:
        vec = _step(vec, trans, ch, a.tag)
    return _read_out(vec, a)


def truncated_behaviour(a, n):
    """Coefficients of the behaviour of ``a`` on all words of length <= n."""
    _require_eps_free(a)
    trans = a.transitions()
    coeffs = {}
    layer = {"": _initial_vector(a)}
    for length in range(n + 1):
        nxt = {}
        for w, vec in layer.items():
            k = _read_out(vec, a)
            if not k.is_zero():
                coeffs[w] = k
            if length < n:
                for ch in a.alphabet:
                    v = _step(vec, trans, ch, a.tag)
                    if v:
                        nxt[w + ch] = v
        layer = nxt
    return TruncatedSeries(a.tag, n, coeffs)


# -- closure, accessibility, trimming ---------------------------------------


def backward_closure(a):
    """Remove epsilon edges of a Boolean automaton.

    A state gets an ``x``-edge to ``r`` whenever an epsilon path leads it to
    a state with such an edge, and becomes final when an epsilon path leads
    it to a final state.
    """
    if a.tag is not SemiringTag.B:
        raise NonBooleanEpsilon("epsilon removal is only defined for Boolean automata")
    eps = [[] for _ in range(a.n)]
    for (s, lab, d) in a._edges:
        if lab == EPSILON:
            eps[s].append(d)
    edges = []
    final = []
    one = sr.one(a.tag)
    for p in range(a.n):
        reach = {p}
        todo = [p]
        while todo:
            q = todo.pop()
            for r in eps[q]:
                if r not in reach:
                    reach.add(r)
                    todo.append(r)
        if any(not a.final[q].is_zero() for q in reach):
            final.append((p, one))
        for (s, lab, d) in a._edges:
            if lab != EPSILON and s in reach:
                edges.append((p, lab, one, d))
    return Automaton(a.tag, a.alphabet, a.n, list(enumerate(a.initial)), final, edges,
                     eps_allowed=False, names=a.names)


def _reach(starts, succ):
    seen = set(starts)
    todo = list(starts)
    while todo:
        p = todo.pop()
        for q in succ[p]:
            if q not in seen:
                seen.add(q)
                todo.append(q)
    return seen


def accessible_states(a):
    return _reach(a.initial_states(), a.successors())


def coaccessible_states(a):
    pred = [set() for _ in range(a.n)]
    for (s, _, d) in a._edges:
        pred[d].add(s)
    return _reach(a.final_states(), pred)


def restrict(a, keep):
    """Sub-automaton on the states in ``keep``, renumbered in increasing order."""
    keep = sorted(keep)
    index = {p: i for i, p in enumerate(keep)}
    edges = [(index[s], lab, w, index[d]) for (s, lab, w, d) in a.edges
             if s in index and d in index]
    names = [a.state_name(p) for p in keep] if a.names else None
    return Automaton(a.tag, a.alphabet, len(keep),
                     [(index[p], a.initial[p]) for p in keep],
                     [(index[p], a.final[p]) for p in keep],
                     edges, eps_allowed=a.eps_allowed, names=names)


def accessible(a):
    return restrict(a, accessible_states(a))


def trim(a):
    """Keep the states that are both accessible and co-accessible."""
    return restrict(a, accessible_states(a) & coaccessible_states(a))


# -- morphisms and quotients ------------------------------------------------


def _as_map(phi, n):
    if isinstance(phi, dict):
        return [phi[p] for p in range(n)]
    return list(phi)


def check_morphism(a, b, phi, as_quotient=False):
    """Check that ``phi`` maps ``a`` onto ``b`` as a morphism or a quotient.

    Boolean automata use the classical conditions: initial, final states and
    edges are mapped into those of ``b``; a quotient is moreover surjective,
    maps ``I`` onto ``I'``, has ``phi^-1(T') = T`` and lifts every edge of
    ``b`` from every preimage of its source.

    Weighted automata use out-morphisms: final weights agree, outgoing
    weights summed over each class agree with the image edge, and each
    initial weight of ``b`` is the sum of those of its preimages.  For a
    quotient the map must also be surjective.
    """
    if a.tag is not b.tag:
        raise TagMismatch(f"{a.tag} automaton against {b.tag} automaton")
    if a.has_epsilon() or b.has_epsilon():
        raise EpsilonPresent("morphisms are checked on epsilon-free automata")
    phi = _as_map(phi, a.n)
    if len(phi) != a.n or any(not 0 <= x < b.n for x in phi):
        return False
    if as_quotient and set(phi) != set(range(b.n)):
        return False
    if a.tag is SemiringTag.B:
        return _boolean_morphism(a, b, phi, as_quotient)
    return _out_morphism(a, b, phi)


def _boolean_morphism(a, b, phi, as_quotient):
    init_a, init_b = set(a.initial_states()), set(b.initial_states())
    fin_a, fin_b = set(a.final_states()), set(b.final_states())
    image_init = {phi[p] for p in init_a}
    if not image_init <= init_b:
        return False
    if not {phi[p] for p in fin_a} <= fin_b:
        return False
    for (s, lab, d) in a._edges:
        if (phi[s], lab, phi[d]) not in b._edges:
            return False
    if not as_quotient:
        return True
    if image_init != init_b:
        return False
    if {p for p in range(a.n) if phi[p] in fin_b} != fin_a:
        return False
    out_a = {}
    for (s, lab, d) in a._edges:
        out_a.setdefault((s, lab), set()).add(phi[d])
    for (r, lab, s) in b._edges:
        for p in range(a.n):
            if phi[p] == r and s not in out_a.get((p, lab), ()):
                return False
    return True


def _class_out(a, phi, p, trans):
    """Outgoing weights of ``p`` summed per (letter, target class)."""
    out = {}
    for lab, arrows in trans[p].items():
        for q, w in arrows:
            key = (lab, phi[q])
            out[key] = out[key] + w if key in out else w
    return {k: w for k, w in out.items() if not w.is_zero()}


def _out_morphism(a, b, phi):
    trans_a, trans_b = a.transitions(), b.transitions()
    for p in range(a.n):
        if a.final[p] != b.final[phi[p]]:
            return False
        mine = _class_out(a, phi, p, trans_a)
        theirs = {(lab, d): w for lab, arrows in trans_b[phi[p]].items() for d, w in arrows}
        if mine != theirs:
            return False
    for c in range(b.n):
        got = sr.total((a.initial[p] for p in range(a.n) if phi[p] == c), a.tag)
        if got != b.initial[c]:
            return False
    return True


def minimal_quotient(a):
    """Coarsest quotient by backward partition refinement.

    Returns ``(quotient, phi)`` where ``phi[p]`` is the class of ``p``.
    Classes are numbered by their smallest state.
    """
    _require_eps_free(a)
    trans = a.transitions()
    block = _number([a.final[p] for p in range(a.n)])
    while True:
        sigs = []
        for p in range(a.n):
            out = _class_out(a, block, p, trans)
            sigs.append((block[p], tuple(sorted(out.items(), key=lambda kv: (kv[0][0], kv[0][1])))))
        refined = _number(sigs)
        if len(set(refined)) == len(set(block)):
            block = refined
            break
        block = refined
    m = len(set(block)) if a.n else 0
    reps = {}
    for p in range(a.n):
        reps.setdefault(block[p], p)
    initial = [(c, sr.total((a.initial[p] for p in range(a.n) if block[p] == c), a.tag))
               for c in range(m)]
    final = [(c, a.final[reps[c]]) for c in range(m)]
    edges = [(c, lab, w, d) for c in range(m)
             for (lab, d), w in _class_out(a, block, reps[c], trans).items()]
    return Automaton(a.tag, a.alphabet, m, initial, final, edges), block


def _number(keys):
    """Number distinct keys by first occurrence."""
    ids = {}
    out = []
    for k in keys:
        if k not in ids:
            ids[k] = len(ids)
        out.append(ids[k])
    return out


# -- balls, loop complexity, loop index -------------------------------------


def strongly_connected_components(states, succ):
    """Tarjan's algorithm on the subgraph induced by ``states``."""
    states = sorted(states)
    inside = set(states)
    index = {}
    low = {}
    stack = []
    on_stack = set()
    comps = []
    counter = [0]

    def visit(v):
        index[v] = low[v] = counter[0]
        counter[0] += 1
        stack.append(v)
        on_stack.add(v)
        for w in sorted(succ[v]):
            if w not in inside:
                continue
            if w not in index:
                visit(w)
                low[v] = min(low[v], low[w])
            elif w in on_stack:
                low[v] = min(low[v], index[w])
        if low[v] == index[v]:
            comp = []
            while True:
                w = stack.pop()
                on_stack.discard(w)
                comp.append(w)
                if w == v:
                    break
            comps.append(frozenset(comp))

    for v in states:
        if v not in index:
            visit(v)
    return comps


def balls(states, succ):
    """Non-trivial strongly connected components: two or more states, or a loop."""
    return [c for c in strongly_connected_components(states, succ)
            if len(c) > 1 or next(iter(c)) in succ[next(iter(c))]]


def loop_complexity(a, bound=14):
    """Loop complexity of the underlying graph of ``a``.

    Found as the least k with ``lc <= k``.  That test only explores removal
    sequences of length k, which keeps large graphs of small complexity
    cheap.
    """
    if a.n > bound:
        raise TooLarge(f"{a.n} states exceed the bound {bound}")
    succ = a.successors()
    # lc only grows with the state set: a known-hard subset or a known-easy
    # superset settles a query
    hard = {}  # k -> sets with lc > k
    easy = {}  # k -> sets with lc <= k

    def at_most(states, k):
        if any(h <= states for h in hard.get(k, ())):
            return False
        if any(states <= e for e in easy.get(k, ())):
            return True
        bs = balls(states, succ)
        if not bs:
            return True
        if k == 0:
            ok = False
        elif len(bs) == 1 and len(bs[0]) == len(states):
            cands = sorted(states, key=lambda s: (-len(succ[s] & states), s))
            ok = any(at_most(states - {s}, k - 1) for s in cands)
        else:
            ok = all(at_most(frozenset(b), k) for b in bs)
        (easy if ok else hard).setdefault(k, []).append(states)
        return ok

    everything = frozenset(range(a.n))
    k = 0
    while not at_most(everything, k):
        k += 1
    return k


def labelled_loop_index(states, edges, order):
    """Loop index of a graph whose edges carry an index.

    ``edges`` is a list of ``(src, dst, index)``; ``order`` lists states from
    smallest to greatest.  A ball contributes one plus the larger of the
    indices of the edges touching its greatest state and the loop index of
    what is left once that state is removed.  Outside balls, edge indices
    and ball indices are combined by max.
    """
    rank = {s: i for i, s in enumerate(order)}
    succ = {}
    for s, d, _ in edges:
        succ.setdefault(s, set()).add(d)
    for s in states:
        succ.setdefault(s, set())

    def index(sub):
        if not sub:
            return 0
        comps = strongly_connected_components(sub, succ)
        bs = [c for c in comps if len(c) > 1 or next(iter(c)) in succ[next(iter(c))]]
        if len(comps) == 1 and bs:
            top = max(sub, key=lambda s: rank[s])
            near = [i for s, d, i in edges if s in sub and d in sub and top in (s, d)]
            return 1 + max(max(near, default=0), index(sub - {top}))
        where = {}
        for c in bs:
            for s in c:
                where[s] = c
        best = 0
        for s, d, i in edges:
            if s in sub and d in sub and not (s in where and where.get(d) is where[s]):
                best = max(best, i)
        for c in bs:
            best = max(best, index(c))
        return best

    return index(frozenset(states))


def loop_index(a, order):
    """Loop index of ``a`` relative to ``order`` (smallest state first)."""
    order = list(order)
    if sorted(order) != list(range(a.n)):
        raise ValueError("order must be a permutation of the states")
    edges = [(s, d, 0) for (s, _, d) in a._edges]
    return labelled_loop_index(range(a.n), edges, order)


# -- isomorphism ---------------------------------------------------------------


def isomorphism(a, b):
    """Return a state bijection from ``a`` to ``b`` preserving everything, or None."""
    import networkx as nx
    from networkx.algorithms.isomorphism import DiGraphMatcher

    if a.tag is not b.tag or a.n != b.n or len(a._edges) != len(b._edges):
        return None

    def graph(x):
        g = nx.DiGraph()
        for p in range(x.n):
            g.add_node(p, weights=(x.initial[p], x.final[p]))
        labels = {}
        for (s, lab, d), w in x._edges.items():
            labels.setdefault((s, d), set()).add((lab, w))
        for (s, d), lab in labels.items():
            g.add_edge(s, d, labels=frozenset(lab))
        return g

    matcher = DiGraphMatcher(
        graph(a), graph(b),
        node_match=lambda u, v: u["weights"] == v["weights"],
        edge_match=lambda u, v: u["labels"] == v["labels"],
    )
    if matcher.is_isomorphic():
        return [matcher.mapping[p] for p in range(a.n)]
    return None


def isomorphic(a, b):
    return isomorphism(a, b) is not None
