import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tcimbalance import (
    brute_force_all, brute_force_clean, build_layout_from_placement, expand_succinct,
    imbalance_of_layout, reduce_partition, validate_twin_cover,
)
from tcimbalance.errors import TooLarge
from tcimbalance.generators import random_instance
from tcimbalance.oracle import imbalance_batch, multiset_permutations
from tcimbalance.graph import compress_to_succinct
from tcimbalance.succinct import iota

from instances import TRI_PENDANT, complete, naive_min_imbalance, planted_corpus, star


@pytest.mark.parametrize("g,expected", [
    (complete(2), 2), (star(3), 4), (TRI_PENDANT, 4), (star(4), 4), (complete(4), 8),
])
def test_brute_force_all_frozen(g, expected):
    assert naive_min_imbalance(g) == expected
    value, witness = brute_force_all(g)
    assert value == expected
    assert imbalance_of_layout(g, witness) == expected


def test_brute_force_all_witness_is_lex_first():
    g = star(3)
    value, witness = brute_force_all(g)
    first = next(o for o in itertools.permutations(g.vertices) if imbalance_of_layout(g, o) == value)
    assert witness == first


def test_brute_force_clean_examples():
    assert brute_force_clean(validate_twin_cover(star(4), [1]))[0] == 4
    assert brute_force_clean(validate_twin_cover(complete(3), []))[0] == 4
    g, cover = expand_succinct(reduce_partition([1, 2, 3])[0])
    assert brute_force_clean(validate_twin_cover(g, cover))[0] == 8


def test_limits():
    with pytest.raises(TooLarge):
        brute_force_all(complete(10))
    g, cover = random_instance(12, 3, 1, 0)
    with pytest.raises(TooLarge):
        brute_force_clean(validate_twin_cover(g, cover))


def test_multiset_permutations():
    got = list(multiset_permutations([2, 1, 1]))
    assert got == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert len(list(multiset_permutations(range(5)))) == 120


@given(st.integers(1, 8), st.integers(0, 10**6), st.data())
@settings(max_examples=100)
def test_batch_matches_scalar(n, seed, data):
    g, _ = random_instance(n, min(2, n), 3, seed)
    orders = [data.draw(st.permutations(list(range(n)))) for _ in range(5)]
    pos = np.argsort(np.array(orders), axis=1)
    got = imbalance_batch(g, pos)
    assert list(got) == [imbalance_of_layout(g, [v + 1 for v in o]) for o in orders]


def test_oracles_agree_and_respect_lower_bound():
    for d in planted_corpus(60, 7, 3, 4, seed=11):
        full, lay = brute_force_all(d.graph)
        clean, cp = brute_force_clean(d)
        assert full == clean
        assert imbalance_of_layout(d.graph, lay) == full
        assert imbalance_of_layout(d.graph, build_layout_from_placement(d, cp)) == clean
        assert clean >= iota(compress_to_succinct(d))
