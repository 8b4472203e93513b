from fractions import Fraction

import numpy as np
import pytest

from padictower.ramification import (deep_trace_bounds_check,
                                     different_exponent,
                                     empirical_different_exponent,
                                     empirical_tower_different,
                                     herbrand_function, herbrand_psi,
                                     lower_numbering_empirical,
                                     predicted_filtration,
                                     tower_different_exponent,
                                     trace_ideal_image, trace_one_check)
from padictower.tower import TowerRing


def test_herbrand_pinned_values():
    # slopes (p-1)p^j: for p=5 the ascent is 4, 20, 100, ...
    assert herbrand_psi(5, 2, Fraction(3, 2)) == 14
    h = herbrand_function(5, 2)
    assert [h.psi(j) for j in range(4)] == [0, 4, 24, 124]
    assert h.phi(14) == Fraction(3, 2)


def test_herbrand_inverse_round_trip():
    h = herbrand_function(3, 3)
    for u in (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(9, 4),
              Fraction(3), Fraction(4)):
        assert h.phi(h.psi(u)) == u


def test_herbrand_domain_errors():
    h = herbrand_function(3, 1)
    with pytest.raises(ValueError):
        h.psi(Fraction(5, 2))          # beyond n+1
    with pytest.raises(ValueError):
        h.psi(Fraction(-1))


def test_different_exponent_closed_form():
    # step exponent (p-1)p^i at level i >= 1
    assert different_exponent(3, 2, 1) == 6
    assert different_exponent(3, 2, 2) == 18
    assert different_exponent(5, 3, 2) == 100
    assert tower_different_exponent(3, 2) == 45
    assert tower_different_exponent(5, 1) == 35


@pytest.mark.parametrize("p,f,n", [(3, 1, 1), (3, 1, 2), (5, 1, 1),
                                   (3, 2, 2), (7, 1, 1)])
def test_empirical_different_matches(p, f, n):
    ring = TowerRing.get(p, f, n)
    for i in range(1, n + 1):
        want = different_exponent(p, n, i)
        assert empirical_different_exponent(ring, i) == want
        assert empirical_different_exponent(ring, i, alternate=True) == want
    assert empirical_tower_different(ring) == tower_different_exponent(p, n)


@pytest.mark.parametrize("p,f,n", [(3, 1, 2), (5, 1, 1), (5, 2, 1)])
def test_lower_numbering_matches_prediction(p, f, n):
    ring = TowerRing.get(p, f, n)
    filt = lower_numbering_empirical(ring)
    pred = predicted_filtration(ring)
    assert filt.lower_numbers == pred.lower_numbers
    assert filt.upper_jumps == pred.upper_jumps
    # group sizes: G^0/G^1 has order p-1; each deeper quotient has order p
    groups = pred.groups
    assert len(groups[0]) // len(groups[1]) == p - 1
    for j in range(1, n):
        assert len(groups[j]) // len(groups[j + 1]) == p


def test_band_structure_of_lower_numbering():
    p, n = 3, 2
    ring = TowerRing.get(p, 1, n)
    pred = predicted_filtration(ring)
    # the function u -> G_u is constant on p^(j-1) <= u <= p^j - 1
    for a, i in pred.lower_numbers.items():
        v = 0
        x = a - 1
        while x % p == 0 and x:
            x //= p
            v += 1
        assert i == p ** min(v, n)


@pytest.mark.parametrize("p,n", [(3, 2), (5, 2)])
def test_trace_ideal_image_is_exactly_p(p, n):
    ring = TowerRing.get(p, 1, n)
    for i in range(1, n + 1):
        for k in range(p):
            assert trace_ideal_image(ring, i, k).equals(1)


def test_trace_ideal_rejects_bad_window():
    ring = TowerRing.get(3, 1, 1)
    with pytest.raises(ValueError):
        trace_ideal_image(ring, 0, 0)
    with pytest.raises(ValueError):
        trace_ideal_image(ring, 1, 3)


def test_trace_one_random_trials():
    ring = TowerRing.get(5, 1, 2)
    rng = np.random.default_rng(11)
    deep = [a for a in ring.units if a != 1 and (a - 1) % ring.pn == 0]
    for _ in range(6):
        a = int(deep[rng.integers(0, len(deep))])
        assert trace_one_check(ring, a, ring.random_element(rng),
                               ring.random_element(rng))
    with pytest.raises(ValueError):
        trace_one_check(ring, 2, ring.one(), ring.one())  # 2 not deep


@pytest.mark.parametrize("p,f,n", [(3, 1, 1), (3, 1, 2), (5, 1, 2)])
def test_deep_trace_bounds(p, f, n):
    ring = TowerRing.get(p, f, n)
    result = deep_trace_bounds_check(ring)
    assert result == {"trace_m_pn_minus_1_exact": True,
                      "trace_M1_contained": True}
