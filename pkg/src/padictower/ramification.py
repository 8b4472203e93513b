"""Ramification data for the cyclotomic tower: Herbrand functions,
upper/lower numbering, different exponents, and trace-ideal images,
each backed by a brute-force cross-check inside the tower ring.

Conventions: L = K(zeta_{p^(n+1)}) over the unramified K, G = Gal(L/K).
Upper jumps sit at 0, 1, ..., n with G^v = {a = 1 mod p^j} for
v in (j-1, j]; psi_{L/K} is piecewise linear with psi(j) = p^j - 1 at
integers and slope (p-1) p^j on (j, j+1]. In lower numbering
i_G(sigma_a) = v_L(sigma_a pi - pi) = p^(v_p(a-1)) (tame elements give 1),
so the tower different is sum_(sigma != 1) i_G(sigma)
= p^n (p-2) + n p^n (p-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .padic import Valuation
from .resolvent import TheoremViolation
from .tower import RingElement, TowerRing


@dataclass(frozen=True)
class HerbrandFunction:
    """psi_{L/K} as exact breakpoint data on its contract domain [0, n+1]."""

    p: int
    n: int
    breakpoints: tuple[tuple[Fraction, Fraction], ...]  # (u, psi(u))
    slopes: tuple[int, ...]                             # on (j, j+1]

    def psi(self, u) -> Fraction:
        u = Fraction(u)
        if u < 0 or u > self.n + 1:
            raise ValueError(f"psi domain is [0, {self.n + 1}]; got {u}")
        j = min(int(u), self.n)
        base = self.breakpoints[j][1]
        return base + (u - j) * self.slopes[j]

    def phi(self, v) -> Fraction:
        """Inverse of psi on [0, p^(n+1) - 1]."""
        v = Fraction(v)
        top = self.p ** (self.n + 1) - 1
        if v < 0 or v > top:
            raise ValueError(f"phi domain is [0, {top}]; got {v}")
        j = 0
        while j < self.n and v > self.breakpoints[j + 1][1]:
            j += 1
        base = self.breakpoints[j][1]
        return j + (v - base) / self.slopes[j]


def herbrand_function(p: int, n: int) -> HerbrandFunction:
    pts = tuple((Fraction(j), Fraction(p ** j - 1)) for j in range(n + 2))
    slopes = tuple((p - 1) * p ** j for j in range(n + 1))
    return HerbrandFunction(p, n, pts, slopes)


def herbrand_psi(p: int, n: int, u) -> Fraction:
    return herbrand_function(p, n).psi(u)


# ---------------------------------------------------------------------------
# different exponents


def different_exponent(p: int, n: int, i: int) -> int:
    """Exponent of the different of the step K_(i+1)/K_i, 1 <= i <= n."""
    if not 1 <= i <= n:
        raise ValueError(f"step index {i} out of range 1..{n}")
    return (p - 1) * p ** i


def tower_different_exponent(p: int, n: int) -> int:
    """v_L of the different of L/K: the step exponents (p-2 for the tame
    step, (p-1)p^i above it) weighted by e(L/K_(i+1)) = p^(n-i)."""
    return p ** n * (p - 2) + n * p ** n * (p - 1)


def _step_uniformizer(ring: TowerRing, i: int, alternate: bool) -> RingElement:
    """A uniformizer of K_(i+1) inside the top ring (0 <= i <= n)."""
    w = ring.zeta(ring.p ** (ring.n - i)) - ring.one()
    if alternate:
        w = w * (ring.one() + w)
    return w


def empirical_different_exponent(ring: TowerRing, i: int,
                                 alternate: bool = False) -> int:
    """v_(K_(i+1)) of prod_(sigma != e) (sigma w - w) over Gal(K_(i+1)/K_i),
    computed by brute force; equals different_exponent for 1 <= i <= n and
    p - 2 for the tame step i = 0."""
    if not 0 <= i <= ring.n:
        raise ValueError(f"step index {i} out of range 0..{ring.n}")
    w = _step_uniformizer(ring, i, alternate)
    if i == 0:
        reps = [a for a in ring.delta_list if a != 1]
    else:
        reps = [(1 + t * ring.p ** i) % ring.pn1 for t in range(1, ring.p)]
    prod = None
    for a in reps:
        d = w.galois(a) - w
        prod = d if prod is None else prod * d
    v_big = prod.v_L()
    scale = ring.p ** (ring.n - i)
    if v_big % scale:
        raise TheoremViolation(
            f"conjugate-difference product has v_L = {v_big}, not divisible "
            f"by e(L/K_{i + 1}) = {scale}")
    return v_big // scale


def empirical_tower_different(ring: TowerRing, alternate: bool = False) -> int:
    """v_L of prod_(sigma != e in G) (sigma pi - pi) for pi = zeta - 1."""
    pi = _step_uniformizer(ring, ring.n, alternate)
    total = 0
    for a in ring.units:
        if a == 1:
            continue
        total += (pi.galois(a) - pi).v_L()
    return total


def lower_number(ring: TowerRing, a: int, alternate: bool = False) -> int:
    """i_G(sigma_a) = v_L(sigma_a w - w), brute force."""
    if a % ring.pn1 == 1:
        raise ValueError("lower number of the identity is not defined")
    w = _step_uniformizer(ring, ring.n, alternate)
    return (w.galois(a) - w).v_L()


def expected_lower_number(p: int, n: int, a: int) -> int:
    """p^(v_p(a-1)) with the tame convention p^0 = 1."""
    d = (a - 1) % p ** (n + 1)
    if d == 0:
        raise ValueError("identity element")
    v = 0
    while d % p == 0:
        v += 1
        d //= p
    return p ** v


@dataclass
class RamificationFiltration:
    upper_jumps: list[int]
    groups: dict[int, list[int]]        # jump j -> sorted a with sigma_a in G^j
    lower_numbers: dict[int, int]       # a -> i_G(sigma_a), a != 1


def predicted_filtration(ring: TowerRing) -> RamificationFiltration:
    groups = {0: sorted(ring.units)}
    for j in range(1, ring.n + 1):
        groups[j] = sorted(a for a in ring.units if (a - 1) % ring.p ** j == 0)
    lower = {a: expected_lower_number(ring.p, ring.n, a)
             for a in ring.units if a != 1}
    return RamificationFiltration(list(range(ring.n + 1)), groups, lower)


def lower_numbering_empirical(ring: TowerRing,
                              alternate: bool = False) -> RamificationFiltration:
    """Measure i_G(sigma) = v_L(sigma pi - pi) for every sigma != e and check
    the whole filtration against the predicted jumps; the filtration object
    returned carries the empirical numbers."""
    predicted = predicted_filtration(ring)
    empirical: dict[int, int] = {}
    for a in ring.units:
        if a == 1:
            continue
        got = lower_number(ring, a, alternate)
        want = predicted.lower_numbers[a]
        if got != want:
            raise TheoremViolation(
                f"i_G(sigma_{a}) = {got}, predicted p^v_p(a-1) = {want}")
        empirical[a] = got
    # tame quotient of order p-1 only at the 0-jump
    tame_count = len(predicted.groups[0]) - len(predicted.groups.get(1, []))
    if ring.n >= 1 and tame_count != len(ring.units) - ring.pn:
        raise TheoremViolation("tame quotient size mismatch at jump 0")
    # sum of lower numbers reproduces the tower different
    if sum(empirical.values()) != tower_different_exponent(ring.p, ring.n):
        raise TheoremViolation(
            "sum of empirical lower numbers does not match the tower different")
    return RamificationFiltration(predicted.upper_jumps, predicted.groups,
                                  empirical)


# ---------------------------------------------------------------------------
# trace ideals


def trace_ideal_image(ring: TowerRing, i: int, k: int) -> Valuation:
    """v_p of Tr_(i+1/i)(m^k_(i+1)): minimum over the module spanning set
    {w^j : k <= j <= k + p - 1}; the value is 1 (the ideal is p O_(K_i))."""
    if not 1 <= i <= ring.n:
        raise ValueError(f"step index {i} out of range 1..{ring.n}")
    if not 0 <= k <= ring.p - 1:
        raise ValueError(f"exponent {k} out of range 0..{ring.p - 1}")
    w = _step_uniformizer(ring, i, alternate=False)
    best: Valuation | None = None
    x = w ** k
    for j in range(ring.p):
        v = ring.step_trace(x, i).valuation()
        if v.is_finite and (best is None or not best.is_finite
                            or v.value < best.value):
            best = v
        elif best is None:
            best = v
        x = x * w
    if best is None or not best.equals(Fraction(1)):
        raise TheoremViolation(
            f"Tr(m^{k}) at step {i} has generator valuation {best}, expected 1")
    return best


def trace_one_check(ring: TowerRing, a: int, alpha: RingElement,
                    beta: RingElement) -> bool:
    """v_p(Tr_{L/K}((sigma_a alpha - alpha) beta)) >= n+1 for sigma_a in G^n."""
    if (a - 1) % ring.p ** ring.n != 0:
        raise ValueError(
            f"sigma_{a} is not in G^{ring.n} (need a = 1 mod p^{ring.n})")
    diff = alpha.galois(a) - alpha
    tr = ring.trace_to_layer(diff * beta, 0)
    return tr.valuation().at_least(Fraction(ring.n + 1))


def deep_trace_bounds_check(ring: TowerRing) -> dict[str, bool]:
    """Tr_{L/K} on the two critical ideals: contained in p^(n+1) O_K on
    M_1 = m^(p^n), exactly p^n O_K on m^(p^n - 1)."""
    n, e = ring.n, ring.e
    pn = ring.pn
    x = ring.pi_pow(pn - 1)
    vals: list[Valuation] = []
    for j in range(pn - 1, pn + e):
        vals.append(ring.trace_to_layer(x, 0).valuation())
        x = x * ring.uniformizer()
    head = vals[0:1 + e - 1]           # spans m^(p^n - 1)
    tail = vals[1:]                    # spans M_1 = m^(p^n)
    exact = [v.value for v in head if v.is_finite]
    ok_exact = bool(exact) and min(exact) == n and all(
        v.at_least(Fraction(n)) for v in head)
    ok_deep = all(v.at_least(Fraction(n + 1)) for v in tail)
    return {"trace_m_pn_minus_1_exact": ok_exact,
            "trace_M1_contained": ok_deep}
