"""Canonical labelling of permutation triples and canonical parents.

Strategy: a breadth-first traversal from a start point x visits cycles in
a deterministic order and relabels points as they are first seen,
producing an integer code; the canonical form is the least code over all
starts.  Two transitive triples are isomorphic (direction-preservingly)
exactly when their canonical forms agree, and the starts achieving the
minimum yield the full automorphism group.

The traversal: seed a FIFO queue with (1,x), (2,x), (3,x).  Pop (i,v);
if the tau_i-cycle of v is unvisited, walk it from v following tau_i,
give each unseen point the next free label, append the relabelled points
and then a -1 marker to the code, and for every point w walked push
(j,w) and (k,w) for the other two directions, smaller first, whenever
that cycle is still unvisited.  Emitted labels are 1-based; the
relabelling maps points to 0-based labels.
"""

from dataclasses import dataclass

from .errors import InvalidSite, NoParent
from .model import TauTriple
from .moves import SlideSite, contraction_points, contraction_sites, slide_contract

_OTHERS = ((1, 2), (0, 2), (0, 1))


def _bfs_code(t, start, best):
    """Code and relabelling from one start, aborting once code > best.

    Returns (code, labels, equal) where equal means the code matched best
    exactly; (None, None, False) signals an aborted, strictly larger code.
    """
    tau = t.tau
    cid = t.cycle_id
    label = [-1] * t.n
    visited = tuple(bytearray(len(c)) for c in t.cycles)
    code = []
    append = code.append
    # queue entries are packed as point * 3 + direction
    q = [start * 3, start * 3 + 1, start * 3 + 2]
    push = q.append
    head = 0
    nxt = 0
    live = best is not None
    blen = len(best) if live else 0
    pos = 0
    while head < len(q):
        item = q[head]
        head += 1
        i = item % 3
        v = item // 3
        c = cid[i][v]
        vis = visited[i]
        if vis[c]:
            continue
        vis[c] = 1
        ti = tau[i]
        j, k = _OTHERS[i]
        cj = cid[j]
        ck = cid[k]
        vj = visited[j]
        vk = visited[k]
        w = v
        while True:
            lw = label[w]
            if lw < 0:
                lw = nxt
                label[w] = nxt
                nxt += 1
            e = lw + 1
            if live:
                if pos >= blen:
                    return None, None, False
                b = best[pos]
                if e != b:
                    if e > b:
                        return None, None, False
                    live = False
            append(e)
            pos += 1
            w3 = w * 3
            if not vj[cj[w]]:
                push(w3 + j)
            if not vk[ck[w]]:
                push(w3 + k)
            w = ti[w]
            if w == v:
                break
        if live:
            if pos >= blen:
                return None, None, False
            if best[pos] != -1:
                live = False
        append(-1)
        pos += 1
    return code, label, live


def _candidate_starts(t):
    # The code from x opens with three runs of fresh labels whose lengths
    # are the cycle lengths at x, so only starts minimising that length
    # triple can reach the least code.
    l1, l2, l3 = t.cycle_len
    best = None
    out = []
    for x in range(t.n):
        key = (l1[x], l2[x], l3[x])
        if best is None or key < best:
            best = key
            out = [x]
        elif key == best:
            out.append(x)
    return out


def _canonical_data(t):
    """(least code, relabellings of every start achieving it), cached."""
    cached = t._canon
    if cached is not None:
        return cached
    best = None
    wits = []
    for x in _candidate_starts(t):
        code, labels, equal = _bfs_code(t, x, best)
        if code is None:
            continue
        if best is None or not equal:
            best = code
            wits = [labels]
        else:
            wits.append(labels)
    if -1 in wits[0]:
        raise ValueError("triple is not transitive; canonical form undefined")
    data = (tuple(best), wits)
    t._canon = data
    return data


@dataclass(frozen=True)
class Relabelling:
    """A bijection point -> canonical label, with its inverse."""

    forward: tuple

    @property
    def inverse(self):
        inv = [0] * len(self.forward)
        for p, l in enumerate(self.forward):
            inv[l] = p
        return tuple(inv)


@dataclass(frozen=True)
class AutGroup:
    """Direction-preserving automorphisms as explicit point permutations."""

    elements: tuple

    @property
    def order(self):
        return len(self.elements)


def canonical_code_from(t, x):
    """The traversal code started at point x."""
    code, _, _ = _bfs_code(t, x, None)
    return tuple(code)


def canonical_form(t):
    """Least traversal code over all starts, with one witnessing relabelling."""
    code, wits = _canonical_data(t)
    return code, Relabelling(tuple(wits[0]))


def automorphisms(t):
    """Automorphism group, one element per start achieving the least code.

    Composing the reference relabelling with the inverse of another
    minimising relabelling fixes all three permutations, and every
    automorphism arises this way exactly once.
    """
    _, wits = _canonical_data(t)
    ref = wits[0]
    n = t.n
    els = []
    for lab in wits:
        inv = [0] * n
        for p, l in enumerate(lab):
            inv[l] = p
        els.append(tuple(inv[ref[p]] for p in range(n)))
    return AutGroup(tuple(els))


def triple_from_code(code):
    """Rebuild the triple a canonical code describes (0-based points).

    Replays the traversal: the queue and skip rules mirror the encoder,
    so the cycles in the code land back on the directions and points that
    emitted them.
    """
    segs = []
    cur = []
    for val in code:
        if val == -1:
            if not cur:
                raise ValueError("malformed code: empty cycle")
            segs.append(cur)
            cur = []
        elif val >= 1:
            cur.append(val - 1)
        else:
            raise ValueError("malformed code: bad label %r" % (val,))
    if cur:
        raise ValueError("malformed code: missing final marker")
    if not segs:
        raise ValueError("malformed code: no cycles")
    n = max(max(s) for s in segs) + 1
    succ = [[-1] * n for _ in range(3)]
    have = [bytearray(n) for _ in range(3)]
    q = [0, 1, 2]
    head = 0
    si = 0
    while head < len(q):
        item = q[head]
        head += 1
        i = item % 3
        v = item // 3
        hi = have[i]
        if hi[v]:
            continue
        if si >= len(segs):
            raise ValueError("malformed code: traversal ran out of cycles")
        seg = segs[si]
        si += 1
        if seg[0] != v:
            raise ValueError("malformed code: cycle starts at the wrong point")
        sc = succ[i]
        for p in seg:
            if hi[p]:
                raise ValueError("malformed code: point repeated in a direction")
            hi[p] = 1
        for a, b in zip(seg, seg[1:]):
            sc[a] = b
        sc[seg[-1]] = seg[0]
        j, k = _OTHERS[i]
        hj = have[j]
        hk = have[k]
        for p in seg:
            p3 = p * 3
            if not hj[p]:
                q.append(p3 + j)
            if not hk[p]:
                q.append(p3 + k)
    if si != len(segs):
        raise ValueError("malformed code: unreachable cycles")
    for sc in succ:
        if -1 in sc:
            raise ValueError("malformed code: does not cover all points")
    return TauTriple(*succ)


def canonical_parent(t):
    """Contract at the canonical site and return (parent, site).

    The site is the contraction maximising (direction, canonical label of
    the point); it depends only on the isomorphism class of t, which is
    what makes the generation tree isomorph-free.  The returned site is
    in t's own labels.
    """
    sites = contraction_sites(t)
    if not sites:
        raise NoParent("no valid contraction: the triple is a root")
    _, wits = _canonical_data(t)
    ref = wits[0]
    site = max(sites, key=lambda s: (s.direction, ref[s.point]))
    return slide_contract(t, site), site


def is_canonical_augmentation(child, site):
    """Whether the undo site of an expansion is the canonical one.

    True iff some automorphism of child carries site to the site
    canonical_parent would pick, i.e. the expansion that produced child
    is equivalent to undoing its canonical contraction.
    """
    j, u = site
    if j not in (1, 2, 3) or not 0 <= u < child.n:
        raise InvalidSite("no such site: direction %r, point %r" % (j, u))
    return _accepts(child, j, u, strict=True)


def _accepts(child, j, u, strict=False):
    # the canonical site maximises (direction, label), direction first:
    # any valid site in a higher direction rules this one out cheaply
    for jj in (3, 2):
        if jj <= j:
            break
        if contraction_points(child, jj, first_only=True):
            return False
    us = contraction_points(child, j)
    if not us or u not in us:
        if strict:
            if contraction_sites(child):
                raise InvalidSite(
                    "not a contraction site: direction %d, point %d" % (j, u)
                )
            raise NoParent("no valid contraction: the triple is a root")
        raise AssertionError("undo site missing from contraction sites")
    if len(us) == 1:
        return True
    _, wits = _canonical_data(child)
    ref = wits[0]
    c = ref[u]
    l_star = max(ref[v] for v in us)
    if c == l_star:
        return True
    if len(wits) == 1:
        return False
    u_m = ref.index(l_star)
    return any(lab[u_m] == c for lab in wits[1:])
