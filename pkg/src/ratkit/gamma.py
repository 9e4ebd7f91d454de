"""From automata to expressions.

Four algorithms are provided: state elimination, solving the associated
linear system, the McNaughton-Yamada recurrence and the recursive block
method.  They work over any of the five semirings.  Initial and final
weights enter the computation as ``<k>1`` labels.

Orders are lists of states, smallest first; the smallest state is
eliminated first.
"""

from . import expr as ex
from .automaton import _require_eps_free


def _check_order(a, order):
    if order is None:
        return list(range(a.n))
    order = list(order)
    if sorted(order) != list(range(a.n)):
        raise ValueError(f"order {order} is not a permutation of 0..{a.n - 1}")
    return order


def _letter_labels(a):
    """Edge labels as expressions: the sum of ``<w>x`` over parallel edges."""
    labels = {}
    for s, lab, w, d in a.edges:
        term = ex.lweight(w, ex.atom(lab, a.tag))
        labels[(s, d)] = ex.plus(labels.get((s, d), ex.zero(a.tag)), term)
    return labels


def state_elimination(a, order=None):
    """Eliminate the states of ``a`` one by one following ``order``.

    Removing ``q`` replaces the label ``G`` of every path ``p -> q -> r`` by
    ``G + (K L*) H`` where ``K``, ``L`` and ``H`` label ``p -> q``, the loop
    on ``q`` and ``q -> r``.  Sources and targets are visited in increasing
    index, the fresh initial and terminal states coming last.
    """
    _require_eps_free(a)
    order = _check_order(a, order)
    tag = a.tag
    i, t = a.n, a.n + 1
    labels = _letter_labels(a)
    for p in range(a.n):
        if not a.initial[p].is_zero():
            labels[(i, p)] = ex.lweight(a.initial[p], ex.one(tag))
        if not a.final[p].is_zero():
            labels[(p, t)] = ex.lweight(a.final[p], ex.one(tag))
    for q in order:
        loop = ex.star(labels.pop((q, q), ex.zero(tag)))
        sources = sorted(p for (p, r) in labels if r == q)
        targets = sorted(r for (p, r) in labels if p == q)
        for p in sources:
            k = ex.times(labels[(p, q)], loop)
            for r in targets:
                g = labels.get((p, r), ex.zero(tag))
                labels[(p, r)] = ex.plus(g, ex.times(k, labels[(q, r)]))
        for key in [key for key in labels if q in key]:
            del labels[key]
    return labels.get((i, t), ex.zero(tag))


def system_solution(a, order=None):
    """Solve ``L_p = sum_q E_pq L_q + T_p`` by successive substitution.

    The behaviour is ``sum_p I_p L_p``.  When ``L_q`` is eliminated, Arden's
    rule gives ``L_q = E_qq* (sum_{r != q} E_qr L_r + T_q)``, which is then
    substituted in every remaining equation and in the behaviour.
    """
    _require_eps_free(a)
    order = _check_order(a, order)
    tag = a.tag
    zero = ex.zero(tag)
    coef = {p: {} for p in range(a.n)}
    for (s, d), lab in _letter_labels(a).items():
        coef[s][d] = lab
    const = {p: ex.lweight(a.final[p], ex.one(tag)) for p in range(a.n)}
    head = {p: ex.lweight(a.initial[p], ex.one(tag)) for p in range(a.n)
            if not a.initial[p].is_zero()}
    behaviour = zero
    for q in order:
        row = coef.pop(q)
        loop = ex.star(row.pop(q, zero))
        kq = const.pop(q)
        for p in sorted(coef):
            if q not in coef[p]:
                continue
            prefix = ex.times(coef[p].pop(q), loop)
            for r in sorted(row):
                coef[p][r] = ex.plus(coef[p].get(r, zero), ex.times(prefix, row[r]))
            const[p] = ex.plus(const[p], ex.times(prefix, kq))
        if q in head:
            prefix = ex.times(head.pop(q), loop)
            for r in sorted(row):
                head[r] = ex.plus(head.get(r, zero), ex.times(prefix, row[r]))
            behaviour = ex.plus(behaviour, ex.times(prefix, kq))
    return behaviour


def _letter_matrix(a):
    zero = ex.zero(a.tag)
    m = [[zero] * a.n for _ in range(a.n)]
    for (s, d), lab in _letter_labels(a).items():
        m[s][d] = lab
    return m


def mcnaughton_yamada_steps(a, order=None):
    """The matrices ``M(0), ..., M(n)`` of the recurrence, without the final unit.

    ``M(k)[p][q]`` describes the paths from ``p`` to ``q`` whose intermediate
    states are among the first ``k`` states of ``order``.
    """
    _require_eps_free(a)
    order = _check_order(a, order)
    m = _letter_matrix(a)
    steps = [m]
    for k in order:
        loop = ex.star(m[k][k])
        nxt = []
        for p in range(a.n):
            left = ex.times(m[p][k], loop)
            nxt.append([ex.plus(m[p][q], ex.times(left, m[k][q])) for q in range(a.n)])
        m = nxt
        steps.append(m)
    return steps


def mcnaughton_yamada(a, order=None):
    """Return ``(M, behaviour)`` where ``M[p][q]`` denotes all paths from p to q.

    ``M`` is the last matrix of the recurrence with ``1`` added on the
    diagonal; ``behaviour`` is ``sum_{p,q} <I_p> M[p][q] <T_q>``.
    """
    last = mcnaughton_yamada_steps(a, order)[-1]
    tag = a.tag
    m = [[ex.plus(x, ex.one(tag)) if p == q else x for q, x in enumerate(row)]
         for p, row in enumerate(last)]
    return m, aggregate(a, m)


def aggregate(a, m):
    """``sum_{p,q} <I_p> m[p][q] <T_q>`` with terms in (p, q) order."""
    tag = a.tag
    terms = []
    for p in a.initial_states():
        for q in a.final_states():
            terms.append(ex.lweight(a.initial[p], ex.rweight(m[p][q], a.final[q])))
    return ex.sum_of(terms, tag)


# -- recursive block method ---------------------------------------------------


def leaves(tree):
    if isinstance(tree, int):
        return [tree]
    out = []
    for sub in tree:
        out.extend(leaves(sub))
    return out


def balanced_division(states):
    """Split ``states`` at the midpoint, recursively."""
    states = list(states)
    if len(states) == 1:
        return states[0]
    mid = len(states) // 2
    return (balanced_division(states[:mid]), balanced_division(states[mid:]))


def _check_division(a, tree):
    if tree is None:
        if a.n == 0:
            return None
        return balanced_division(range(a.n))

    def ok(node):
        return isinstance(node, int) or (isinstance(node, (tuple, list)) and len(node) == 2
                                         and all(ok(x) for x in node))

    if not ok(tree) or sorted(leaves(tree)) != list(range(a.n)):
        raise ValueError("the division must be a binary tree whose leaves are the states")
    return tree


def _mul(x, y, rows, mid, cols, tag):
    out = {}
    for p in rows:
        for q in cols:
            out[(p, q)] = ex.sum_of((ex.times(x[(p, r)], y[(r, q)]) for r in mid), tag)
    return out


def _add(x, y):
    return {key: ex.plus(x[key], y[key]) for key in x}


def _sub(m, rows, cols):
    return {(p, q): m[(p, q)] for p in rows for q in cols}


def _block_star(m, tree, tag):
    if isinstance(tree, int):
        return {(tree, tree): ex.star(m[(tree, tree)])}
    left, right = tree
    xs, ys = leaves(left), leaves(right)
    f, g = _sub(m, xs, xs), _sub(m, xs, ys)
    h, k = _sub(m, ys, xs), _sub(m, ys, ys)
    fs = _block_star(f, left, tag)
    ks = _block_star(k, right, tag)
    # U = (F + G K* H)*, Z = (K + H F* G)*
    u = _block_star(_add(f, _mul(_mul(g, ks, xs, ys, ys, tag), h, xs, ys, xs, tag)), left, tag)
    z = _block_star(_add(k, _mul(_mul(h, fs, ys, xs, xs, tag), g, ys, xs, ys, tag)), right, tag)
    v = _mul(_mul(fs, g, xs, xs, ys, tag), z, xs, ys, ys, tag)
    w = _mul(_mul(ks, h, ys, ys, xs, tag), u, ys, xs, xs, tag)
    out = {}
    out.update(u)
    out.update(v)
    out.update(w)
    out.update(z)
    return out


def recursive_method(a, division=None):
    """Star of the transition matrix by recursive block decomposition.

    ``division`` is a binary tree (nested pairs) with the states as leaves;
    by default the states are split at the midpoint.  Returns the matrix as
    a list of rows.
    """
    _require_eps_free(a)
    tree = _check_division(a, division)
    if tree is None:
        return []
    m = _letter_matrix(a)
    flat = {(p, q): m[p][q] for p in range(a.n) for q in range(a.n)}
    star = _block_star(flat, tree, a.tag)
    return [[star[(p, q)] for q in range(a.n)] for p in range(a.n)]


def recursive_behaviour(a, division=None):
    """The behaviour ``I . E* . T`` computed with :func:`recursive_method`."""
    return aggregate(a, recursive_method(a, division))
