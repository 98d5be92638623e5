"""Slide moves: the local expansion and contraction of permutation triples.

Directions are numbered 1..3.  For a move in direction j, write k and l
for the other two directions in cyclic order (k = j mod 3 + 1,
l = k mod 3 + 1).  An expansion at point x splits x's j-cycle
(a, x, w, b, ...) into (a, u, b, ...) plus the 2-cycle (x, w), where u is
a fresh point and w = x*tauj; u is inserted after x in x's k-cycle and
before w in w's l-cycle.  A contraction at u is the exact inverse.
"""

from typing import NamedTuple

from .errors import InvalidSite
from .model import TauTriple


class SlideSite(NamedTuple):
    """A move location: direction in 1..3 plus the point it acts at."""

    direction: int
    point: int


def _axes(j):
    """0-based indices (j, k, l) for a 1-based direction j."""
    ji = j - 1
    return ji, (ji + 1) % 3, (ji + 2) % 3


def _expansion_ok(t, j, x):
    ji, ki, li = _axes(j)
    if t.cycle_len[ji][x] < 3:
        return False
    # the k-cycle through x and the l-cycle through w must be disjoint,
    # otherwise the new point would give them a second common point
    w = t.tau[ji][x]
    cid_l = t.cycle_id[li]
    target = cid_l[w]
    for p in t.cycles[ki][t.cycle_id[ki][x]]:
        if cid_l[p] == target:
            return False
    return True


def expansion_sites(t):
    """All (direction, point) pairs where a slide expansion applies."""
    out = []
    for j in (1, 2, 3):
        for x in range(t.n):
            if _expansion_ok(t, j, x):
                out.append(SlideSite(j, x))
    return out


def slide_expand(t, site):
    """Grow the triple by one point at the given site.

    The new point is labelled t.n; existing labels are unchanged.
    """
    j, x = site
    if j not in (1, 2, 3) or not 0 <= x < t.n:
        raise InvalidSite("no such site: direction %r, point %r" % (j, x))
    if not _expansion_ok(t, j, x):
        raise InvalidSite(
            "expansion undefined at point %d in direction %d" % (x, j)
        )
    ji, ki, li = _axes(j)
    tj, tk, tl = t.tau[ji], t.tau[ki], t.tau[li]
    u = t.n
    w = tj[x]
    a = t.prev[ji][x]
    b = tj[w]
    nj = list(tj)
    nj.append(b)  # u -> b
    nj[a] = u
    nj[w] = x  # close the 2-cycle (x, w); x -> w already holds
    nk = list(tk)
    nk.append(tk[x])  # u -> z, splicing u after x
    nk[x] = u
    nl = list(tl)
    nl.append(w)  # u -> w, splicing u before w
    nl[t.prev[li][w]] = u
    new = [None, None, None]
    new[ji], new[ki], new[li] = nj, nk, nl
    return TauTriple(*new, check=False)


def _contract_arrays(t, j, u):
    """Successor arrays after contracting at (j, u), or None.

    Returns compacted arrays over 0..n-2 (points above u shift down).
    Only the structural requirements are checked here: the u-cycles in
    the other two directions keep length >= 3, and the k-predecessor and
    l-successor of u form a 2-cycle of tauj to splice back in.
    """
    ji, ki, li = _axes(j)
    if t.cycle_len[ki][u] < 3 or t.cycle_len[li][u] < 3:
        return None
    tj, tk, tl = t.tau[ji], t.tau[ki], t.tau[li]
    x = t.prev[ki][u]
    w = tl[u]
    if tj[x] != w or tj[w] != x:
        return None
    nj = list(tj)
    nj[t.prev[ji][u]] = x  # a -> x
    nj[w] = tj[u]  # w -> b; x -> w already holds
    nk = list(tk)
    nk[x] = tk[u]
    nl = list(tl)
    nl[t.prev[li][u]] = w
    out = []
    arrs = [None, None, None]
    arrs[ji], arrs[ki], arrs[li] = nj, nk, nl
    for arr in arrs:
        del arr[u]
        out.append([v if v < u else v - 1 for v in arr])
    return out


def _cycle_ids(n, perm):
    cid = [-1] * n
    k = 0
    for s in range(n):
        if cid[s] >= 0:
            continue
        cid[s] = k
        w = perm[s]
        while w != s:
            cid[w] = k
            w = perm[w]
        k += 1
    return cid, k


def _arrays_ok(arrs):
    """Full bitrade check on raw successor arrays."""
    p1, p2, p3 = arrs
    n = len(p1)
    for v in range(n):
        if p1[v] == v or p2[v] == v or p3[v] == v:
            return False
        if p3[p2[p1[v]]] != v:
            return False
    ids = [_cycle_ids(n, p)[0] for p in arrs]
    for a, b in ((0, 1), (0, 2), (1, 2)):
        ca = ids[a]
        cb = ids[b]
        seen = set()
        for v in range(n):
            key = ca[v] * n + cb[v]
            if key in seen:
                return False
            seen.add(key)
    return True


def contraction_points(t, j, first_only=False):
    """Points u where contraction in direction j yields a valid triple.

    Validity is decided operationally: build the contracted arrays and
    check the bitrade conditions on the result.
    """
    out = []
    for u in range(t.n):
        arrs = _contract_arrays(t, j, u)
        if arrs is not None and _arrays_ok(arrs):
            out.append(u)
            if first_only:
                break
    return out


def contraction_sites(t):
    """All (direction, point) pairs where a slide contraction applies."""
    out = []
    for j in (1, 2, 3):
        for u in contraction_points(t, j):
            out.append(SlideSite(j, u))
    return out


def has_contraction_site(t):
    """True when any slide contraction applies to t."""
    return any(contraction_points(t, j, first_only=True) for j in (1, 2, 3))


def slide_contract(t, site):
    """Shrink the triple by removing the point at the given site.

    Points above the removed one shift down by one to stay contiguous.
    """
    j, u = site
    if j not in (1, 2, 3) or not 0 <= u < t.n:
        raise InvalidSite("no such site: direction %r, point %r" % (j, u))
    arrs = _contract_arrays(t, j, u)
    if arrs is None or not _arrays_ok(arrs):
        raise InvalidSite(
            "contraction undefined at point %d in direction %d" % (u, j)
        )
    return TauTriple(*arrs, check=False)
