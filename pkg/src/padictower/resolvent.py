"""Resolvents: character-twisted Galois sums and their valuation theorems.

A character of Gal(K(zeta_{p^(n+1)})/K) = (Z/p^(n+1))^x is split along
(Z/p^(n+1))^x = Delta x Gamma into a tame exponent t (on the order-(p-1)
Teichmuller part Delta) and a wild exponent c (on Gamma = 1 + pZ_p, with
gamma = 1 + p as generator). Values live inside the ring itself: the tame
values are Teichmuller units of W, the wild values are p^n-th roots of
unity zeta^(p c m).

The resolvent of alpha against chi is <alpha | chi> = sum_sigma
chi(sigma) alpha^sigma, over the full group or over Gamma only. The facts
checked downstream:

  * integrality bound: v_p(<alpha|chi>) >= (n+1)/2 for integral alpha and
    chi of conductor p^(n+1);
  * equality for suitably normalized uniformizer data, exhibited by an
    explicit dual element beta with
    v_p(<alpha|chi>) + v_p(<beta|chi^{-1}>) = n+1;
  * the interpolation identity
    sum_tau chi(tau) Tr(alpha^tau beta) = <alpha|chi> <beta|chi^{-1}>.

The dual element comes from a residue computation: on V = O/m^(p^n), a
k-linear functional w is chosen that is 1 on y and 0 on the Gamma-orbit
y^(gamma^j), 0 < j < p^(n-1); the trace-pairing Gram matrix
G[i,j] = p^(-n) Tr(pi^(i+j)) mod p then converts w into an actual ring
element beta with p^(-n) Tr(x beta) = w(x) mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .linalg import ResidueField
from .padic import Valuation
from .tower import ExactDivisionError, RingElement, TowerRing


class TheoremViolation(AssertionError):
    """A mechanically verified statement came out false."""


# ---------------------------------------------------------------------------
# characters


@dataclass(frozen=True)
class GaloisCharacter:
    """Character chi with chi(delta) = teich(g0)^tame, chi(gamma) = zeta_{p^n}^wild."""

    ring: TowerRing
    tame: int
    wild: int

    def __post_init__(self):
        object.__setattr__(self, "tame", self.tame % (self.ring.p - 1))
        object.__setattr__(self, "wild", self.wild % self.ring.pn)

    @property
    def is_trivial(self) -> bool:
        return self.tame == 0 and self.wild == 0

    @property
    def order(self) -> int:
        p, pn = self.ring.p, self.ring.pn
        t_ord = (p - 1) // np.gcd(self.tame, p - 1) if self.tame else 1
        w_ord = pn // np.gcd(self.wild, pn) if self.wild else 1
        return int(np.lcm(t_ord, w_ord))

    @property
    def conductor_exponent(self) -> int:
        """m with conductor p^m: 0 trivial, 1 tame-only, n+1-v_p(wild) else."""
        if self.wild:
            v = 0
            c = self.wild
            while c % self.ring.p == 0:
                v += 1
                c //= self.ring.p
            return self.ring.n + 1 - v
        return 1 if self.tame else 0

    @property
    def parity(self) -> int:
        """chi at the inversion automorphism: -1 is Teichmuller of order 2,
        so the sign is determined by the tame index alone."""
        return 1 if self.tame % 2 == 0 else -1

    def inverse(self) -> "GaloisCharacter":
        return GaloisCharacter(self.ring, -self.tame, -self.wild)

    def mirror(self) -> "GaloisCharacter":
        """The character whose values are the sigma_(-1)-images of this one's.

        sigma_(-1) inverts every p-power root of unity but fixes the
        Teichmuller values (they lie in Z_p), so only the wild exponent
        flips. For wild-only characters this coincides with inverse()."""
        return GaloisCharacter(self.ring, self.tame, -self.wild)

    def twist_term(self, x: RingElement, s: int, m: int) -> RingElement:
        """chi(delta^s gamma^m) * x."""
        ring = self.ring
        out = ring.monomial_mul(x, (ring.p * self.wild * m) % ring.pn1)
        ts = (self.tame * s) % (ring.p - 1)
        if ts:
            out = out.w_scale([ring.teich_pows[ts]])
        return out

    def value_at(self, a: int) -> RingElement:
        s, m = self.ring.dlog(a)
        return self.twist_term(self.ring.one(), s, m)


def all_tame_characters(ring: TowerRing) -> list[GaloisCharacter]:
    return [GaloisCharacter(ring, t, 0) for t in range(ring.p - 1)]


def random_character(ring: TowerRing, rng: np.random.Generator,
                     conductor_exponent: int | None = None) -> GaloisCharacter:
    """Uniform character, optionally with prescribed exact conductor p^m."""
    p, n, pn = ring.p, ring.n, ring.pn
    if conductor_exponent is None:
        return GaloisCharacter(ring, int(rng.integers(0, p - 1)),
                               int(rng.integers(0, pn)))
    m = conductor_exponent
    if m == 0:
        return GaloisCharacter(ring, 0, 0)
    if m == 1:
        return GaloisCharacter(ring, int(rng.integers(1, p - 1)), 0)
    if not 2 <= m <= n + 1:
        raise ValueError(f"conductor exponent {m} out of range for n={n}")
    v = n + 1 - m
    wild = (p ** v) * (int(rng.integers(1, p))
                       + p * int(rng.integers(0, p ** max(n - v - 1, 0))))
    return GaloisCharacter(ring, int(rng.integers(0, p - 1)), wild % pn)


# ---------------------------------------------------------------------------
# resolvents


def resolvent(alpha: RingElement, chi: GaloisCharacter,
              group: str = "full") -> RingElement:
    """<alpha | chi> = sum_sigma chi(sigma) alpha^sigma.

    group="gamma" sums over Gamma = <gamma> only (p^n terms); group="full"
    sums over all of (Z/p^(n+1))^x (p^n (p-1) terms), factored through the
    Delta x Gamma decomposition so each conjugate costs one Galois action.
    """
    ring = alpha.ring
    if chi.ring is not ring:
        raise ValueError("character belongs to a different ring")
    if group == "gamma":
        return _resolvent_gamma(alpha, chi)
    if group != "full":
        raise ValueError("group must be 'full' or 'gamma'")
    acc = ring.zero(alpha.prec)
    base = alpha
    for s in range(ring.p - 1):
        inner = _resolvent_gamma(base, chi)
        ts = (chi.tame * s) % (ring.p - 1)
        if ts:
            inner = inner.w_scale([ring.teich_pows[ts]])
        acc = acc + inner
        if s + 1 < ring.p - 1:
            base = base.galois(ring.delta_gen)
    return acc


def _resolvent_gamma(alpha: RingElement, chi: GaloisCharacter) -> RingElement:
    ring = alpha.ring
    acc = ring.zero(alpha.prec)
    conj = alpha
    for k in range(ring.pn):
        acc = acc + ring.monomial_mul(conj, (ring.p * chi.wild * k) % ring.pn1)
        if k + 1 < ring.pn:
            conj = conj.galois(ring.gamma)
    return acc


def omega_twist(alpha: RingElement, tame: int) -> RingElement:
    """sum_s teich(g0)^(tame s) alpha^(delta^s): the Delta-isotypic slice."""
    ring = alpha.ring
    acc = ring.zero(alpha.prec)
    base = alpha
    for s in range(ring.p - 1):
        ts = (tame * s) % (ring.p - 1)
        acc = acc + (base.w_scale([ring.teich_pows[ts]]) if ts else base)
        if s + 1 < ring.p - 1:
            base = base.galois(ring.delta_gen)
    return acc


def conjugation_mirror(alpha: RingElement) -> RingElement:
    """iota(alpha) = alpha^(sigma_{-1}), matching chi -> chi^{-1} in valuation."""
    return alpha.galois(-1)


def interpolation_identity_check(alpha: RingElement, beta: RingElement,
                                 chi: GaloisCharacter) -> bool:
    """sum_tau chi(tau) Tr(alpha^tau beta) == <alpha|chi> <beta|chi^{-1}>."""
    ring = alpha.ring
    lhs = ring.zero(min(alpha.prec, beta.prec))
    for a in ring.units:
        s, m = ring.dlog(a)
        tr = ring.trace_to_layer(alpha.galois(a) * beta, 0)
        lhs = lhs + chi.twist_term(tr, s, m)
    rhs = resolvent(alpha, chi) * resolvent(beta, chi.inverse())
    return lhs == rhs


# ---------------------------------------------------------------------------
# dual elements (wild case, n >= 1)


@dataclass
class DualBeta:
    beta: RingElement
    functional: np.ndarray          # w in k^(p^n), shape (p^n, f)
    nilpotency_index: int           # least j with N^j y = 0 in V
    trace_sum_valuation: Valuation  # v_p of sum_{j<p^(n-1)} Tr(y^(gamma^j) beta)


def _digit_coords(x: RingElement, count: int) -> np.ndarray:
    """First `count` pi-digits of x, reduced mod p: k-coordinates on V."""
    return np.asarray(x.pi_digits(1)[:count], dtype=np.int64) % x.ring.p


def _in_V_zero(x: RingElement, pn: int) -> bool:
    v = x.valuation()
    if not v.is_finite:
        return True
    return v.value * x.ring.e >= pn


def gram_matrix(ring: TowerRing, size: int, shift: int = 0,
                scale: int | None = None) -> np.ndarray:
    """G[i,j] = p^(-scale) Tr(pi^(i+j+shift)) mod p, shape (size, size, f).

    scale defaults to n (the pairing on O/m^(p^n)); the tame construction
    passes scale=1 for the pairing (1/p) Tr on m/(p) x m/m^(p-1).
    """
    n = ring.n if scale is None else scale
    k = ResidueField(ring.p, ring.f, ring.c or None)
    tr_digits = []
    for m in range(2 * size - 1):
        tr = ring.trace_to_layer(ring.pi_pow(m + shift), 0)
        try:
            scaled = tr.divide_by_p(n)
        except ExactDivisionError as exc:
            raise TheoremViolation(
                f"Tr(pi^{m + shift}) is not divisible by p^{n}") from exc
        tr_digits.append(np.asarray(scaled.coeffs[0], dtype=np.int64) % ring.p)
    G = k.zeros(size, size)
    for i in range(size):
        for j in range(size):
            G[i, j] = tr_digits[i + j]
    return G


def find_dual_beta(y: RingElement) -> DualBeta:
    """Construct beta with p^(-n) Tr(x beta) = w(x) mod p, where the
    functional w is 1 on y and 0 on y^(gamma^j) for 0 < j < p^(n-1).

    Requires n >= 1 and y integral with v_L(y) < p. Raises TheoremViolation
    when a step the theory guarantees (nilpotency index, Gram regularity,
    the final trace-sum valuation) fails numerically.
    """
    ring = y.ring
    p, n, pn = ring.p, ring.n, ring.pn
    if n < 1:
        raise ValueError("dual-element construction needs n >= 1")
    vy = y.valuation()
    if not (vy.is_finite and 0 <= vy.value * ring.e < p):
        raise ValueError(f"y must be integral with v_L(y) < p; got {vy}")
    k = ResidueField(p, ring.f, ring.c or None)
    s1 = p ** (n - 1)

    # Gamma-orbit of y and the nilpotency index of N = gamma - 1 on V
    orbit = [y]
    for _ in range(s1 - 1):
        orbit.append(orbit[-1].galois(ring.gamma))
    z = y
    idx = 0
    while idx <= s1 and not _in_V_zero(z, pn):
        z = z.galois(ring.gamma) - z
        idx += 1
    if idx != s1:
        raise TheoremViolation(
            f"(gamma-1)-nilpotency index of y on O/m^(p^n) is {idx}, "
            f"expected p^(n-1) = {s1}")

    # functional w: w(y) = 1, w(y^(gamma^j)) = 0 for 0 < j < p^(n-1)
    A = k.zeros(s1, pn)
    for j, el in enumerate(orbit):
        A[j] = _digit_coords(el, pn)
    b = k.zeros(s1)
    b[0] = k.one()
    w = k.solve(A, b)
    if w is None:
        raise TheoremViolation(
            "no functional separates y from its Gamma-orbit on O/m^(p^n)")

    G = gram_matrix(ring, pn)
    coeffs = k.solve(G, w)
    if coeffs is None:
        raise TheoremViolation("trace-pairing Gram matrix is singular mod p")

    beta = ring.zero()
    for i in range(pn):
        if not k.is_zero(coeffs[i]):
            beta = beta + ring.pi_pow(i).w_scale([int(t) for t in coeffs[i]])

    total = ring.zero()
    for el in orbit:
        total = total + ring.trace_to_layer(el * beta, 0)
    v = total.valuation()
    if not v.equals(Fraction(n)):
        raise TheoremViolation(
            f"v_p(sum_j Tr(y^(gamma^j) beta)) = {v}, expected {n}")
    return DualBeta(beta, w, idx, v)


# ---------------------------------------------------------------------------
# admissible uniformizer data and the equality case


@dataclass
class AdmissiblePair:
    """alpha with its normalization y used for the dual-element search."""

    alpha: RingElement
    y: RingElement
    tame: int
    j0: int | None                  # v_L(y) target for the twisted case
    shift: RingElement | None       # subtracted average, trivial-tame case


def admissible_pair(ring: TowerRing, chi: GaloisCharacter) -> AdmissiblePair:
    """The uniformizer-flavored alpha realizing the resolvent equality for chi.

    Trivial tame part: alpha = pi_n (Frobenius-system uniformizer of Psi_n),
    recentered by its trace average a = Tr(alpha)/(p^n (p-1)) so that
    y = alpha - a has trace 0. Nontrivial tame exponent t: alpha = pi^j0
    with j0 = -t mod (p-1) in [1, p-1], and y its Delta-twist, which keeps
    v_L(y) = j0 < p.
    """
    p, n = ring.p, ring.n
    t = chi.tame % (p - 1)
    if t == 0:
        alpha = ring.psi_uniformizer(n)
        tr = ring.trace_to_layer(alpha, 0)
        try:
            scaled = tr.divide_by_p(n)
        except ExactDivisionError as exc:
            raise TheoremViolation(
                "Tr(pi_n) is not divisible by p^n") from exc
        inv = pow(p - 1, -1, p ** scaled.prec)
        a = scaled * inv
        y = alpha - a
        vy = y.valuation()
        if not (vy.is_finite and vy.value * ring.e < p):
            raise TheoremViolation(
                f"recentred pi_n has v_p = {vy}, expected v_L < p")
        return AdmissiblePair(alpha, y, t, None, a)
    j0 = (-t) % (p - 1) or (p - 1)
    alpha = ring.pi_pow(j0)
    y = omega_twist(alpha, t)
    if not y.valuation().equals(Fraction(j0, ring.e)):
        raise TheoremViolation(
            f"Delta-twist of pi^{j0} has v_p {y.valuation()}, "
            f"expected {j0}/{ring.e}")
    return AdmissiblePair(alpha, y, t, j0, None)


@dataclass
class EqualityReport:
    chi: GaloisCharacter
    pair: AdmissiblePair
    dual: DualBeta
    v_alpha: Valuation
    v_beta: Valuation

    @property
    def bound_holds(self) -> bool:
        half = Fraction(self.chi.ring.n + 1, 2)
        return self.v_alpha.at_least(half) and self.v_beta.at_least(half)

    @property
    def equality_holds(self) -> bool:
        n = self.chi.ring.n
        return (self.v_alpha.is_finite and self.v_beta.is_finite
                and self.v_alpha.value + self.v_beta.value == n + 1)


def equality_report(ring: TowerRing, chi: GaloisCharacter) -> EqualityReport:
    """Build the (alpha, beta) dual pair for chi and measure both resolvents.

    Preconditions: n >= 1 and chi of exact conductor p^(n+1)."""
    if chi.conductor_exponent != ring.n + 1:
        raise ValueError(
            f"equality case needs conductor p^{ring.n + 1}, got "
            f"p^{chi.conductor_exponent}")
    pair = admissible_pair(ring, chi)
    dual = find_dual_beta(pair.y)
    v_a = resolvent(pair.alpha, chi).valuation()
    v_b = resolvent(dual.beta, chi.inverse()).valuation()
    return EqualityReport(chi, pair, dual, v_a, v_b)


# ---------------------------------------------------------------------------
# tame case (n = 0)


@dataclass
class TamePair:
    alpha: RingElement
    beta: RingElement
    sigma0: int                     # the conjugate the functional singles out
    tries: int


def normal_basis_certificate(alpha: RingElement) -> bool:
    """det over k of the conjugate-coordinate matrix (pi-digit rows) != 0."""
    ring = alpha.ring
    k = ResidueField(ring.p, ring.f, ring.c or None)
    e = ring.e
    M = k.zeros(e, e)
    for col, a in enumerate(ring.units):
        M[:, col] = _digit_coords(alpha.galois(a), e)
    return not k.is_zero(k.det(M))


def tame_dual_pair(ring: TowerRing, rng: np.random.Generator,
                   max_tries: int = 64) -> TamePair:
    """Normal-basis generator alpha and its dual beta for the n = 0 layer.

    beta is supported on pi, ..., pi^(p-2) and satisfies
    (1/p) Tr((alpha^sigma - alpha) beta) = [sigma = sigma0] mod p, whence
    v_p(<alpha|omega>) + v_p(<beta|omega^{-1}>) = 1 for every tame
    omega != 1.
    """
    if ring.n != 0:
        raise ValueError("tame pair construction is the n = 0 case")
    p = ring.p
    k = ResidueField(p, ring.f, ring.c or None)
    for tries in range(1, max_tries + 1):
        alpha = ring.random_element(rng)
        if not normal_basis_certificate(alpha):
            continue
        sigma0 = next(a for a in ring.units if a != 1)
        diffs = [alpha.galois(a) - alpha for a in ring.units if a != 1]
        A = k.zeros(p - 2, p - 2)
        for row, d in enumerate(diffs):
            A[row] = _digit_coords(d, p - 1)[1:]
        b = k.zeros(p - 2)
        b[0] = k.one()   # diffs[0] corresponds to sigma0
        w = k.solve(A, b)
        if w is None:
            raise TheoremViolation(
                "conjugate differences of a normal-basis generator do not "
                "span m/(p)")
        G = gram_matrix(ring, p - 2, shift=2, scale=1)
        coeffs = k.solve(G, w)
        if coeffs is None:
            raise TheoremViolation("tame Gram matrix is singular mod p")
        beta = ring.zero()
        for i in range(p - 2):
            if not k.is_zero(coeffs[i]):
                beta = beta + ring.pi_pow(i + 1).w_scale(
                    [int(t) for t in coeffs[i]])
        return TamePair(alpha, beta, sigma0, tries)
    raise TheoremViolation(
        f"no normal-basis generator found in {max_tries} random draws")
