from fractions import Fraction

import numpy as np
import pytest

from padictower.resolvent import (GaloisCharacter, admissible_pair,
                                  all_tame_characters, conjugation_mirror,
                                  equality_report, find_dual_beta,
                                  interpolation_identity_check, omega_twist,
                                  random_character, resolvent,
                                  tame_dual_pair)
from padictower.tower import TowerRing


@pytest.fixture(scope="module")
def ring52():
    return TowerRing.get(5, 1, 2)


def test_character_order_and_conductor(ring52):
    chi = GaloisCharacter(ring52, 0, 0)
    assert chi.is_trivial and chi.order == 1 and chi.conductor_exponent == 0
    tame = GaloisCharacter(ring52, 2, 0)
    assert tame.order == 2 and tame.conductor_exponent == 1
    wild = GaloisCharacter(ring52, 0, 5)
    assert wild.order == 5 and wild.conductor_exponent == 2
    full = GaloisCharacter(ring52, 1, 3)
    assert full.order == 100 and full.conductor_exponent == 3


def test_character_parity(ring52):
    # sign character: odd; squares: even
    assert GaloisCharacter(ring52, 2, 0).parity == 1
    assert GaloisCharacter(ring52, 1, 0).parity == -1
    assert GaloisCharacter(ring52, 0, 1).parity == 1
    # cross-check against the value at the inversion element
    minus_one = ring52.pn1 - 1
    for t, w in ((1, 3), (2, 0), (3, 7), (0, 4)):
        chi = GaloisCharacter(ring52, t, w)
        val = chi.value_at(minus_one)
        expected = ring52.one(val.prec) * chi.parity
        assert val == expected


def test_character_value_homomorphism(ring52):
    chi = GaloisCharacter(ring52, 1, 7)
    units = [3, 7, 11, 99]
    for a in units:
        for b in units:
            ab = (a * b) % ring52.pn1
            assert chi.value_at(ab) == chi.value_at(a) * chi.value_at(b)


def test_character_inverse_and_mirror(ring52):
    chi = GaloisCharacter(ring52, 3, 4)
    inv = chi.inverse()
    for a in (7, 11, 13):
        assert (chi.value_at(a) * inv.value_at(a)
                == ring52.one(chi.value_at(a).prec))
    mir = chi.mirror()
    assert mir.tame == chi.tame and (mir.wild + chi.wild) % ring52.pn == 0


def test_random_character_hits_requested_conductor(ring52):
    rng = np.random.default_rng(0)
    for target in (0, 1, 2, 3):
        chi = random_character(ring52, rng, conductor_exponent=target)
        assert chi.conductor_exponent == target


def test_all_tame_characters(ring52):
    tames = all_tame_characters(ring52)
    assert len(tames) == ring52.p - 1
    assert sorted(ch.tame for ch in tames) == list(range(ring52.p - 1))


def test_gamma_vs_full_factorization(ring52):
    # for a wild character, the full-group sum is the tame-twisted sum of
    # gamma-group sums over the Teichmuller section
    rng = np.random.default_rng(1)
    alpha = ring52.random_element(rng)
    chi = GaloisCharacter(ring52, 0, 3)
    full = resolvent(alpha, chi, group="full")
    parts = ring52.zero()
    for s, d in enumerate(ring52.delta_list):
        parts = parts + resolvent(alpha.galois(d), chi, group="gamma")
    assert full == parts


def test_uniformizer_resolvent_equality_small():
    for (p, n) in ((3, 1), (5, 1), (3, 2)):
        ring = TowerRing.get(p, 1, n)
        alpha = ring.psi_uniformizer(n)
        half = Fraction(n + 1, 2)
        for c in range(1, ring.pn):
            if c % p:
                v = resolvent(alpha, GaloisCharacter(ring, 0, c)).valuation()
                assert v.equals(half), (p, n, c, str(v))


def test_bound_on_random_elements(ring52):
    rng = np.random.default_rng(2)
    half = Fraction(ring52.n + 1, 2)
    for _ in range(25):
        alpha = ring52.random_element(rng)
        chi = random_character(ring52, rng,
                               conductor_exponent=ring52.n + 1)
        v = resolvent(alpha, chi).valuation()
        assert v.is_infinite or v.at_least(half)


def test_conjugation_symmetry_both_groups(ring52):
    rng = np.random.default_rng(3)
    for _ in range(6):
        alpha = ring52.random_element(rng)
        chi = random_character(ring52, rng, conductor_exponent=3)
        ialpha = conjugation_mirror(alpha)
        vg = resolvent(alpha, chi, group="gamma").valuation()
        wg = resolvent(ialpha, chi.inverse(), group="gamma").valuation()
        assert str(vg) == str(wg)
        vf = resolvent(alpha, chi, group="full").valuation()
        wf = resolvent(ialpha, chi.mirror(), group="full").valuation()
        assert str(vf) == str(wf)


def test_interpolation_identity(ring52):
    rng = np.random.default_rng(4)
    alpha = ring52.random_element(rng)
    beta = ring52.random_element(rng)
    chi = random_character(ring52, rng, conductor_exponent=3)
    assert interpolation_identity_check(alpha, beta, chi)


def test_omega_twist_valuation(ring52):
    # the isotypic slice of pi^j survives with the same valuation exactly
    # when j is the power matched to the tame index
    for t in range(1, ring52.p - 1):
        j0 = (-t) % (ring52.p - 1) or ring52.p - 1
        y = omega_twist(ring52.pi_pow(j0), t)
        assert y.valuation().equals(Fraction(j0, ring52.e))


def test_dual_beta_postcondition():
    ring = TowerRing.get(3, 1, 1)
    chi = GaloisCharacter(ring, 0, 1)
    pair = admissible_pair(ring, chi)
    dual = find_dual_beta(pair.y)
    assert dual.trace_sum_valuation.equals(ring.n)
    assert dual.nilpotency_index == ring.p ** (ring.n - 1)


@pytest.mark.parametrize("p,f,n", [(3, 1, 1), (5, 1, 1), (5, 1, 2),
                                   (3, 2, 2)])
def test_equality_report_all_tame_components(p, f, n):
    ring = TowerRing.get(p, f, n)
    rng = np.random.default_rng(5)
    wilds = [c for c in range(1, ring.pn) if c % p]
    for t in range(p - 1):
        c = int(wilds[rng.integers(0, len(wilds))])
        rep = equality_report(ring, GaloisCharacter(ring, t, c))
        assert rep.bound_holds and rep.equality_holds


def test_equality_report_rejects_shallow_conductor(ring52):
    with pytest.raises(ValueError):
        equality_report(ring52, GaloisCharacter(ring52, 0, 5))


@pytest.mark.parametrize("p,f", [(3, 1), (5, 1), (7, 1), (5, 2)])
def test_tame_dual_pair(p, f):
    ring = TowerRing.get(p, f, 0)
    rng = np.random.default_rng(6)
    pair = tame_dual_pair(ring, rng)
    seen = []
    for t in range(1, p - 1):
        omega = GaloisCharacter(ring, t, 0)
        va = resolvent(pair.alpha, omega).valuation()
        vb = resolvent(pair.beta, omega.inverse()).valuation()
        assert va.is_finite and vb.is_finite
        assert va.value + vb.value == 1
        seen.append(va.value)
    if p > 3:
        assert min(seen) == Fraction(1, p - 1)
