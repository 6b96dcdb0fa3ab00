import itertools
import random

import pytest

from diamondfree import Graph, is_graphical_eg, is_graphical_hh, realize_any


def test_known_verdicts():
    assert is_graphical_hh([])
    assert is_graphical_hh([0, 0, 0])
    assert is_graphical_hh([2, 2, 2])
    assert is_graphical_hh([3, 3, 3, 3])
    assert is_graphical_hh((3,) * 8)
    assert is_graphical_hh([3, 1, 1, 1, 1, 1])  # star plus a disjoint edge
    assert not is_graphical_hh([1])  # odd sum
    assert not is_graphical_hh([4, 4, 4])  # degree exceeds n-1
    assert not is_graphical_hh([3, 3, 1, 1])
    assert not is_graphical_hh([5, 5, 4, 3, 2, 1])


def test_eg_matches_hh_small_exhaustive():
    for length in range(6):
        for combo in itertools.combinations_with_replacement(range(5), length):
            seq = sorted(combo, reverse=True)
            assert is_graphical_eg(seq) == is_graphical_hh(seq), seq


def test_inputs_are_validated():
    for bad in ([True], [3, -1], [2.0, 2, 2]):
        with pytest.raises(ValueError):
            is_graphical_hh(bad)
        with pytest.raises(ValueError):
            is_graphical_eg(bad)
        with pytest.raises(ValueError):
            realize_any(bad)


def test_order_does_not_matter():
    assert is_graphical_hh([1, 3, 2, 2]) == is_graphical_hh([3, 2, 2, 1])
    assert is_graphical_eg([1, 3, 2, 2]) == is_graphical_eg([3, 2, 2, 1])


def test_realize_any_agrees_with_oracle():
    for length in range(1, 6):
        for combo in itertools.combinations_with_replacement(range(5), length):
            seq = list(combo)
            g = realize_any(seq)
            assert (g is not None) == is_graphical_hh(seq), seq
            if g is not None:
                assert sorted(g.degree_list()) == sorted(seq)


def test_realize_any_on_random_graph_degrees():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randrange(2, 12)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.4]
        wanted = sorted(Graph.from_edges(n, edges).degree_list(), reverse=True)
        g = realize_any(wanted)
        assert g is not None
        assert sorted(g.degree_list(), reverse=True) == wanted


def test_realize_any_deterministic():
    a = realize_any([3, 2, 2, 2, 1])
    b = realize_any([3, 2, 2, 2, 1])
    assert a == b
