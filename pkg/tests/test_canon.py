"""Canonical form, automorphisms, decoding, parent selection, acceptance.

The isomorphism oracle here is independent of the library: a conjugating
relabelling is determined by the image of one point (the action is
transitive), so candidates are propagated point by point and checked in
full.  The propagation oracle is itself cross-checked against plain
enumeration of all permutations at tiny sizes.
"""

import itertools
import random

import pytest

from bitrades import (
    InvalidSite,
    NoParent,
    SlideSite,
    automorphisms,
    canonical_form,
    canonical_parent,
    contraction_sites,
    expansion_sites,
    is_canonical_augmentation,
    slide_expand,
    triple_from_code,
    validate,
)

from conftest import INTERCALATE_CODE, classes_upto


def _conjugators(t, s):
    """All theta with theta[t_i[p]] == s_i[theta[p]], by propagation."""
    if t.n != s.n:
        return []
    n = t.n
    out = []
    for c in range(n):
        theta = [-1] * n
        theta[0] = c
        used = {c}
        stack = [0]
        ok = True
        while stack and ok:
            p = stack.pop()
            for i in range(3):
                q = t.tau[i][p]
                img = s.tau[i][theta[p]]
                if theta[q] == -1:
                    if img in used:
                        ok = False
                        break
                    theta[q] = img
                    used.add(img)
                    stack.append(q)
                elif theta[q] != img:
                    ok = False
                    break
        if not ok or -1 in theta:
            continue
        if all(theta[t.tau[i][p]] == s.tau[i][theta[p]]
               for i in range(3) for p in range(n)):
            out.append(tuple(theta))
    return out


def _conjugators_by_force(t, s):
    """Same set, by trying every permutation.  Only for tiny sizes."""
    if t.n != s.n:
        return []
    n = t.n
    out = []
    for theta in itertools.permutations(range(n)):
        if all(theta[t.tau[i][p]] == s.tau[i][theta[p]]
               for i in range(3) for p in range(n)):
            out.append(theta)
    return out


def test_oracle_agrees_with_exhaustive_search():
    small = classes_upto(6)
    reps = [t for reps in small.values() for t in reps]
    for t in reps:
        for s in reps:
            assert sorted(_conjugators(t, s)) == sorted(
                _conjugators_by_force(t, s)
            )


def test_intercalate_code_is_frozen(intercalate):
    code, relab = canonical_form(intercalate)
    assert code == INTERCALATE_CODE
    assert len(code) == 3 * 4 + 6  # three passes over 4 points, 6 ends


def test_code_invariant_under_relabelling():
    rng = random.Random(97)
    for _, reps in classes_upto(8).items():
        for t in reps:
            code = canonical_form(t)[0]
            for _ in range(5):
                theta = list(range(t.n))
                rng.shuffle(theta)
                assert canonical_form(t.relabelled(theta))[0] == code


def test_codes_separate_classes():
    # equal code iff a conjugator exists, across every pair of classes
    for size, reps in classes_upto(8).items():
        codes = [canonical_form(t)[0] for t in reps]
        for i, t in enumerate(reps):
            for j, s in enumerate(reps):
                related = bool(_conjugators(t, s))
                assert related == (codes[i] == codes[j]), (size, i, j)
                assert related == (i == j)


def test_canonical_relabelling_realizes_the_code():
    for _, reps in classes_upto(8).items():
        for t in reps:
            code, relab = canonical_form(t)
            s = t.relabelled(relab.forward)
            assert canonical_form(s)[0] == code
            back = relab.inverse
            assert all(back[relab.forward[p]] == p for p in range(t.n))


def test_automorphism_group_matches_oracle(intercalate):
    got = sorted(automorphisms(intercalate).elements)
    want = sorted(_conjugators(intercalate, intercalate))
    assert got == want
    assert len(got) == 4  # the pairings commute: Klein four-group


def test_automorphisms_of_all_small_classes():
    for size, reps in classes_upto(9).items():
        for t in reps:
            group = automorphisms(t)
            assert group.order <= size
            for theta in group.elements:
                assert t.relabelled(theta) == t


def test_code_decodes_to_the_same_class():
    for _, reps in classes_upto(9).items():
        for t in reps:
            code = canonical_form(t)[0]
            back = triple_from_code(code)
            assert validate(back).ok
            assert canonical_form(back)[0] == code


def test_decoder_rejects_garbage():
    with pytest.raises(ValueError):
        triple_from_code((1, 2, -1))
    with pytest.raises(ValueError):
        triple_from_code(INTERCALATE_CODE[:-1])
    bad = list(INTERCALATE_CODE)
    bad[1] = 9
    with pytest.raises(ValueError):
        triple_from_code(tuple(bad))


def test_roots_have_no_parent(intercalate, bicyclic6):
    for t in (intercalate, bicyclic6):
        assert not contraction_sites(t)
        with pytest.raises(NoParent):
            canonical_parent(t)


def test_parent_is_one_smaller_and_valid():
    for size, reps in classes_upto(9).items():
        for t in reps:
            if not contraction_sites(t):
                continue
            parent, site = canonical_parent(t)
            assert parent.n == t.n - 1
            assert validate(parent).ok
            assert site in contraction_sites(t)


def test_accepted_children_regenerate_their_parent():
    for _, reps in classes_upto(8).items():
        for t in reps:
            t_code = canonical_form(t)[0]
            for site in expansion_sites(t):
                child = slide_expand(t, site)
                undo = SlideSite(site.direction, t.n)
                if is_canonical_augmentation(child, undo):
                    parent, _ = canonical_parent(child)
                    assert canonical_form(parent)[0] == t_code


def test_every_class_is_some_accepted_child():
    classes = classes_upto(9)
    for size, reps in classes.items():
        for t in reps:
            if not contraction_sites(t):
                continue
            code = canonical_form(t)[0]
            parent, _ = canonical_parent(t)
            hits = 0
            for site in expansion_sites(parent):
                child = slide_expand(parent, site)
                undo = SlideSite(site.direction, parent.n)
                if canonical_form(child)[0] == code:
                    if is_canonical_augmentation(child, undo):
                        hits += 1
            assert hits >= 1, (size, code)


def test_acceptance_rejects_foreign_sites(bicyclic6):
    child = slide_expand(bicyclic6, expansion_sites(bicyclic6)[0])
    with pytest.raises(InvalidSite):
        is_canonical_augmentation(child, SlideSite(1, 99))
    with pytest.raises(InvalidSite):
        is_canonical_augmentation(child, SlideSite(4, 0))
