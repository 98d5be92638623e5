"""Slow reference enumeration used to cross-check the generation walk.

Classes are found by brute-force closure: starting from the two-cycle
roots, apply every slide expansion and take inverses, deduplicating by
canonical code.  No canonicity pruning is involved, so agreement with
the augmentation walk is meaningful evidence of correctness.  The cost
grows fast; sizes above the bound are refused.
"""

import logging

from .canon import _canonical_data, automorphisms, canonical_form, triple_from_code
from .errors import BoundExceeded, InvalidSize
from .model import from_pair, genus, inverse, to_pair, validate
from .moves import contraction_sites, expansion_sites, slide_expand
from .enumerator import _is_bicyclic, bicyclic_roots

log = logging.getLogger(__name__)

DEFAULT_BOUND = 13


class ClassStore:
    """Canonical codes of the classes found, grouped by size."""

    __slots__ = ("by_size",)

    def __init__(self):
        self.by_size = {}

    def add(self, size, code):
        bucket = self.by_size.setdefault(size, set())
        if code in bucket:
            return False
        bucket.add(code)
        return True

    def counts(self):
        return {s: len(c) for s, c in self.by_size.items()}

    def codes(self, size):
        return sorted(self.by_size.get(size, ()))


def naive_enumerate(max_size, bound=DEFAULT_BOUND):
    """All classes of size at most max_size, by exhaustive closure."""
    if max_size < 4:
        raise InvalidSize("max size must be at least 4")
    if max_size > bound:
        raise BoundExceeded(
            "naive closure is limited to size %d (asked for %d)"
            % (bound, max_size)
        )
    store = ClassStore()
    frontier = []
    for size in range(4, max_size + 1, 2):
        for root in bicyclic_roots(size):
            if store.add(root.n, _canonical_data(root)[0]):
                frontier.append(root)
    while frontier:
        nxt = []
        for t in frontier:
            inv = inverse(t)
            rep = validate(inv)
            if not (rep.ok and rep.transitive):
                raise AssertionError("inverse of a valid class failed checks")
            if store.add(inv.n, _canonical_data(inv)[0]):
                nxt.append(inv)
            if t.n >= max_size:
                continue
            for site in expansion_sites(t):
                child = slide_expand(t, site)
                rep = validate(child)
                if not (rep.ok and rep.transitive):
                    raise AssertionError(
                        "expansion at %r produced an invalid triple" % (site,)
                    )
                if genus(child) != 0:
                    raise AssertionError(
                        "expansion at %r changed the genus" % (site,)
                    )
                if store.add(child.n, _canonical_data(child)[0]):
                    nxt.append(child)
        frontier = nxt
        if frontier:
            log.info("closure frontier: %d triples", len(frontier))
    return store


def verify_class_invariants(store):
    """Check every stored class; returns a list of violation messages."""
    bad = []

    def flag(size, code, msg):
        bad.append("size %d, code %s: %s" % (size, code, msg))

    for size in sorted(store.by_size):
        for code in store.codes(size):
            t = triple_from_code(code)
            rep = validate(t)
            if not rep.ok:
                flag(size, code, "fails the permutation conditions")
                continue
            if not rep.transitive:
                flag(size, code, "not indecomposable")
                continue
            if genus(t) != 0:
                flag(size, code, "genus is %d, not 0" % genus(t))
            got, relab = canonical_form(t)
            if got != code:
                flag(size, code, "canonical code does not round-trip")
            if canonical_form(t.relabelled(relab.forward))[0] != code:
                flag(size, code, "canonical relabelling is not canonical")
            inv_code = canonical_form(inverse(t))[0]
            if inv_code not in store.by_size.get(size, ()):
                flag(size, code, "inverse class is missing from the store")
            if automorphisms(t).order > size:
                flag(size, code, "more automorphisms than points")
            back = from_pair(to_pair(t))
            if canonical_form(back)[0] != code:
                flag(size, code, "trade round-trip changed the class")
            if _is_bicyclic(t):
                if contraction_sites(t):
                    flag(size, code, "two-cycle-direction triple has a parent")
                if inv_code != code:
                    flag(size, code, "two-cycle-direction triple not self-inverse")
    return bad
