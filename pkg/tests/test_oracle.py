"""Reference closure enumeration and the per-class invariant sweep."""

import pytest

from bitrades import (
    BoundExceeded,
    ClassStore,
    InvalidSize,
    enumerate_all,
    naive_enumerate,
    verify_class_invariants,
)

from conftest import CENSUS


def test_closure_counts_match_known_table():
    store = naive_enumerate(10)
    counts = store.counts()
    for size in range(4, 11):
        assert counts.get(size, 0) == CENSUS[size]


def test_closure_and_walk_agree_on_codes():
    store = naive_enumerate(11)
    census = enumerate_all(11, emit="forms")
    for size in range(4, 12):
        walk = sorted(map(tuple, census.codes.get(size, [])))
        assert store.codes(size) == walk


def test_bound_is_enforced():
    with pytest.raises(BoundExceeded):
        naive_enumerate(14)
    with pytest.raises(BoundExceeded):
        naive_enumerate(12, bound=11)
    with pytest.raises(InvalidSize):
        naive_enumerate(3)


def test_store_deduplicates():
    store = ClassStore()
    assert store.add(4, (1, 2))
    assert not store.add(4, (1, 2))
    assert store.add(4, (1, 3))
    assert store.counts() == {4: 2}
    assert store.codes(4) == [(1, 2), (1, 3)]
    assert store.codes(6) == []


def test_invariant_sweep_is_clean():
    store = naive_enumerate(9)
    assert verify_class_invariants(store) == []


def test_invariant_sweep_catches_a_planted_fault():
    from bitrades import canonical_form, inverse, triple_from_code

    census = enumerate_all(9, emit="forms")
    planted = None
    for size in (8, 9):
        for code in census.codes[size]:
            code = tuple(code)
            inv = canonical_form(inverse(triple_from_code(code)))[0]
            if inv != code:
                planted = (size, code)
                break
        if planted:
            break
    assert planted is not None, "no class up to size 9 distinct from its inverse"
    size, code = planted
    store = naive_enumerate(6)
    store.by_size.setdefault(size, set()).add(code)
    messages = verify_class_invariants(store)
    assert len(messages) == 1
    assert "inverse" in messages[0]
