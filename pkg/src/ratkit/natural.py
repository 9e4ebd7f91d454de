"""Display-level simplification with a few natural identities.

This pass is only used to make results readable.  Derivation, derived terms
and every construction work on trivially reduced trees and never call it.

Rewrites applied bottom-up:

* sums and products are flattened and re-associated to the left;
* Boolean only: duplicate summands are dropped and ``(E*)*`` becomes ``E*``;
* ``F + K F`` and ``F + F K`` with ``K = H H*`` or ``K = H* H`` become
  ``H* F`` and ``F H*``; a lone ``1 + K`` becomes ``H*``.
"""

from . import expr as ex


def factors(e):
    if isinstance(e, ex.Prod):
        return factors(e.left) + factors(e.right)
    return [e]


def summands(e):
    if isinstance(e, ex.Sum):
        return summands(e.left) + summands(e.right)
    return [e]


def product(items, tag):
    acc = ex.one(tag)
    for x in items:
        acc = ex.times(acc, x)
    return acc


def _loop_base(k):
    """Return H if the factor list ``k`` reads ``H H*`` or ``H* H``, else None."""
    if len(k) < 2:
        return None
    last, first = k[-1], k[0]
    if isinstance(last, ex.Star) and factors(last.sub) == k[:-1]:
        return last.sub
    if isinstance(first, ex.Star) and factors(first.sub) == k[1:]:
        return first.sub
    return None


def _factor_pair(f, t):
    """Try to merge summands ``f`` and ``t``; return the merged term or None."""
    tag = f.tag
    ff, ft = factors(f), factors(t)
    if isinstance(f, ex.One):
        h = _loop_base(ft)
        return None if h is None else ex.star(h)
    n = len(ff)
    if len(ft) <= n:
        return None
    if ft[-n:] == ff:
        h = _loop_base(ft[:-n])
        if h is not None:
            return product([ex.star(h)] + ff, tag)
    if ft[:n] == ff:
        h = _loop_base(ft[n:])
        if h is not None:
            return product(ff + [ex.star(h)], tag)
    return None


def _simplify_sum(terms, boolean):
    if boolean:
        seen = []
        for t in terms:
            if t not in seen:
                seen.append(t)
        terms = seen
    changed = True
    while changed:
        changed = False
        for i, f in enumerate(terms):
            for j, t in enumerate(terms):
                if i == j:
                    continue
                merged = _factor_pair(f, t)
                if merged is None:
                    continue
                lo, hi = min(i, j), max(i, j)
                terms = terms[:lo] + [merged] + terms[lo + 1 : hi] + terms[hi + 1 :]
                changed = True
                break
            if changed:
                break
    return terms


def simplify_natural(e):
    """Return a simplified expression denoting the same series as ``e``."""
    memo = {}
    return _simp(e, memo)


def _simp(e, memo):
    got = memo.get(e)
    if got is not None:
        return got
    tag = e.tag
    boolean = e.tag.value == "B"
    if isinstance(e, ex.Sum):
        terms = [_simp(t, memo) for t in summands(e)]
        flat = []
        for t in terms:
            flat.extend(summands(t))
        out = ex.sum_of(_simplify_sum(flat, boolean), tag)
    elif isinstance(e, ex.Prod):
        parts = []
        for x in factors(e):
            parts.extend(factors(_simp(x, memo)))
        out = product(parts, tag)
    elif isinstance(e, ex.Star):
        sub = _simp(e.sub, memo)
        if boolean and isinstance(sub, ex.Star):
            out = sub
        else:
            out = ex.star(sub)
    elif isinstance(e, ex.LWeight):
        out = ex.lweight(e.weight, _simp(e.sub, memo))
    elif isinstance(e, ex.RWeight):
        out = ex.rweight(_simp(e.sub, memo), e.weight)
    else:
        out = e
    memo[e] = out
    return out
