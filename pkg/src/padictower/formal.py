"""Truncated power series over Q with p-power denominators: the Honda
logarithm lambda(t) = sum_i (-1)^i t^(p^(2i)) / p^i, its compositional
inverse, the induced formal group law F(X, Y) = lambda^(-1)(lambda X +
lambda Y), and the Coates-Wiles logarithmic derivative for the
multiplicative group.

Series evaluation at ring elements defers every division by p to the
ring's exact division, so results carry certified precision; when the
truncation tail cannot be pushed below the working precision the
evaluation refuses (PrecisionDemand) rather than silently truncating.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .padic import Valuation
from .resolvent import GaloisCharacter, TheoremViolation, resolvent
from .tower import ExactDivisionError, RingElement, TowerRing


class PrecisionDemand(ArithmeticError):
    """The truncation degree is too small for the requested precision."""


def _p_power_denominator(c: Fraction, p: int) -> int:
    """b with denominator(c) = p^b; rejects other denominators."""
    d = c.denominator
    b = 0
    while d % p == 0:
        d //= p
        b += 1
    if d != 1:
        raise ValueError(f"denominator {c.denominator} is not a power of {p}")
    return b


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c_0..c_D; tail_exponents lists the exponent/p-power
    pairs of the first few omitted terms (empty for exact polynomials)."""

    p: int
    coeffs: tuple[Fraction, ...]
    tail_exponents: tuple[tuple[int, int], ...] = ()

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, j: int) -> Fraction:
        return self.coeffs[j] if j <= self.degree else Fraction(0)

    def derivative(self) -> "TruncatedSeries":
        d = tuple(j * self.coeffs[j] for j in range(1, len(self.coeffs)))
        return TruncatedSeries(self.p, d)

    def tail_floor(self, v_alpha: Fraction) -> Fraction | None:
        """Lower bound on v_p of the omitted tail at arguments of valuation
        v_alpha; None when the series is an exact polynomial."""
        if not self.tail_exponents:
            return None
        return min(exp * v_alpha - b for exp, b in self.tail_exponents)

    def evaluate(self, alpha: RingElement) -> RingElement:
        """Exact evaluation; requires v_p(alpha) > 0 and each term's
        p-division to be exact (guaranteed on the contract domain)."""
        ring = alpha.ring
        v = alpha.valuation()
        if not (v.is_finite and v.value > 0) and not v.is_at_precision:
            raise ValueError(f"series evaluation needs v_p(alpha) > 0, got {v}")
        res_prec = min((alpha.prec - _p_power_denominator(c, self.p)
                        for c in self.coeffs if c), default=alpha.prec)
        if self.tail_exponents and v.is_finite:
            floor = self.tail_floor(v.value)
            if floor < res_prec:
                raise PrecisionDemand(
                    f"omitted tail only has v_p >= {floor} but the result "
                    f"would be carried mod p^{res_prec}; raise the truncation "
                    f"degree beyond {self.tail_exponents[0][0]}")
        acc = ring.zero(alpha.prec)
        pw: dict[int, RingElement] = {}
        cur = ring.one(alpha.prec)
        for j, c in enumerate(self.coeffs):
            if c == 0:
                if j:
                    cur = cur * alpha
                continue
            if j:
                cur = cur * alpha
            b = _p_power_denominator(c, self.p)
            num = int(c * self.p ** b)
            term = (cur * num).divide_by_p(b)
            acc = acc + term
        return acc


def honda_log(p: int, D: int) -> TruncatedSeries:
    """lambda(t) = sum_(i>=0) (-1)^i t^(p^(2i)) / p^i, truncated past D."""
    if D < 1:
        raise ValueError("truncation degree must be >= 1")
    coeffs = [Fraction(0)] * (D + 1)
    i = 0
    while p ** (2 * i) <= D:
        coeffs[p ** (2 * i)] = Fraction((-1) ** i, p ** i)
        i += 1
    tail = tuple((p ** (2 * j), j) for j in range(i, i + 4))
    return TruncatedSeries(p, tuple(coeffs), tail)


def multiplicative_log(p: int, D: int) -> TruncatedSeries:
    """log(1 + t) truncated at D (denominators prime to p keep this off the
    ring-evaluation path; used only for series-level identities)."""
    coeffs = [Fraction(0)] + [Fraction((-1) ** (j + 1), j) for j in range(1, D + 1)]
    return TruncatedSeries(p, tuple(coeffs))


def _series_mul(a: list[Fraction], b: list[Fraction], D: int) -> list[Fraction]:
    out = [Fraction(0)] * (D + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > D:
            continue
        for j, bj in enumerate(b):
            if bj == 0 or i + j > D:
                continue
            out[i + j] += ai * bj
    return out


def series_inverse(s: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse of s (s(0) = 0, s'(0) a unit) to the same
    truncation degree, by triangular back-substitution on s-powers."""
    D = s.degree
    if s.coefficient(0) != 0:
        raise ValueError("series must have zero constant term")
    a1 = s.coefficient(1)
    if a1 == 0:
        raise ValueError("series must have invertible linear coefficient")
    powers = [[Fraction(0)] * (D + 1)]
    powers[0][0] = Fraction(1)
    base = [s.coefficient(j) for j in range(D + 1)]
    for _ in range(D):
        powers.append(_series_mul(powers[-1], base, D))
    b = [Fraction(0)] * (D + 1)
    for m in range(1, D + 1):
        target = Fraction(1) if m == 1 else Fraction(0)
        acc = sum((b[j] * powers[j][m] for j in range(1, m)), Fraction(0))
        b[m] = (target - acc) / powers[m][m]
    return TruncatedSeries(s.p, tuple(b))


def composition_check(s: TruncatedSeries, t: TruncatedSeries) -> bool:
    """t(s(x)) == x to the common truncation degree."""
    D = min(s.degree, t.degree)
    base = [s.coefficient(j) for j in range(D + 1)]
    cur = [Fraction(0)] * (D + 1)
    cur[0] = Fraction(1)
    out = [Fraction(0)] * (D + 1)
    for j in range(0, D + 1):
        c = t.coefficient(j)
        if j:
            cur = _series_mul(cur, base, D)
        if c:
            for m, u in enumerate(cur):
                out[m] += c * u
    return out[1] == 1 and all(out[m] == 0 for m in range(D + 1) if m != 1)


# ---------------------------------------------------------------------------
# the formal group law


Bivariate = dict[tuple[int, int], Fraction]


def _biv_mul(a: Bivariate, b: Bivariate, D: int) -> Bivariate:
    out: Bivariate = {}
    for (i1, j1), u in a.items():
        for (i2, j2), v in b.items():
            i, j = i1 + i2, j1 + j2
            if i + j > D:
                continue
            key = (i, j)
            w = out.get(key, Fraction(0)) + u * v
            if w:
                out[key] = w
            elif key in out:
                del out[key]
    return out


def group_law(p: int, D: int | None = None) -> Bivariate:
    """F(X,Y) = lambda^(-1)(lambda(X) + lambda(Y)) to total degree D."""
    D = D or p * p + 1
    lam = honda_log(p, D)
    lam_inv = series_inverse(lam)
    A: Bivariate = {}
    for j in range(1, D + 1):
        c = lam.coefficient(j)
        if c:
            A[(j, 0)] = c
            A[(0, j)] = c
    out: Bivariate = {}
    cur: Bivariate = {(0, 0): Fraction(1)}
    for j in range(0, D + 1):
        if j:
            cur = _biv_mul(cur, A, D)
        c = lam_inv.coefficient(j)
        if c:
            for key, u in cur.items():
                w = out.get(key, Fraction(0)) + c * u
                if w:
                    out[key] = w
                elif key in out:
                    del out[key]
    return out


def group_law_integrality_check(p: int, D: int | None = None) -> bool:
    """All coefficients of F up to total degree D are p-integral (their
    denominators, p-powers by construction, are 1)."""
    return all(c.denominator == 1 for c in group_law(p, D).values())


def group_law_associativity_check(p: int, D: int | None = None) -> bool:
    """F(F(X,Y),Z) == F(X,F(Y,Z)) to total degree D, assembled from cached
    bivariate powers so no trivariate product of trivariates is formed."""
    D = D or p * p + 1
    F = group_law(p, D)

    def powers(base: Bivariate) -> list[Bivariate]:
        out = [{(0, 0): Fraction(1)}]
        for _ in range(D):
            out.append(_biv_mul(out[-1], base, D))
        return out

    Upow = powers(F)     # F(X, Y) powers, in variables (X, Y)
    lhs: dict[tuple[int, int, int], Fraction] = {}
    rhs: dict[tuple[int, int, int], Fraction] = {}
    for (i, j), c in F.items():
        for (a, b), u in Upow[i].items():
            if a + b + j > D:
                continue
            key = (a, b, j)
            w = lhs.get(key, Fraction(0)) + c * u
            if w:
                lhs[key] = w
            elif key in lhs:
                del lhs[key]
        for (b, cc), u in Upow[j].items():   # F(Y, Z) powers reuse Upow
            if i + b + cc > D:
                continue
            key = (i, b, cc)
            w = rhs.get(key, Fraction(0)) + c * u
            if w:
                rhs[key] = w
            elif key in rhs:
                del rhs[key]
    return lhs == rhs


def evaluate_group_law(F: Bivariate, a: RingElement, b: RingElement) -> RingElement:
    """F(a, b) for ring elements of positive valuation (integer F only)."""
    ring = a.ring
    amax = max(i for i, _ in F)
    bmax = max(j for _, j in F)
    apow = [ring.one(a.prec)]
    for _ in range(amax):
        apow.append(apow[-1] * a)
    bpow = [ring.one(b.prec)]
    for _ in range(bmax):
        bpow.append(bpow[-1] * b)
    acc = ring.zero(min(a.prec, b.prec))
    for (i, j), c in F.items():
        if c.denominator != 1:
            raise ValueError("group law must be integral before evaluation")
        acc = acc + (apow[i] * bpow[j]) * int(c)
    return acc


# ---------------------------------------------------------------------------
# lambda-compatibility of resolvents


@dataclass
class GaussLambdaReport:
    v_alpha: Valuation
    v_lambda_alpha: Valuation
    quotient_integral: bool

    @property
    def ok(self) -> bool:
        return self.quotient_integral and self.v_alpha == self.v_lambda_alpha


def gauss_lambda_check(alpha: RingElement, chi: GaloisCharacter,
                       D: int | None = None) -> GaussLambdaReport:
    """For a uniformizer alpha of Psi_n and chi of exact order p^n:
    both <alpha|chi> and <lambda(alpha)|chi> have v_p = (n+1)/2, and
    (<lambda(alpha)|chi> - <alpha|chi>) / (p <alpha|chi>) is integral."""
    ring = alpha.ring
    p, n = ring.p, ring.n
    if n < 1:
        raise ValueError("lambda-compatibility needs n >= 1")
    if chi.order != ring.pn:
        raise ValueError(f"chi must have exact order p^{n}, got {chi.order}")
    v = alpha.valuation()
    if not v.equals(Fraction(1, ring.pn)):
        raise ValueError(f"alpha is not a uniformizer of Psi_{n}: v_p = {v}")
    if not ring.in_psi(alpha, n):
        raise ValueError(f"alpha does not lie in Psi_{n}")
    lam = honda_log(p, D or p * p + 1)
    lam_alpha = lam.evaluate(alpha)
    r_alpha = resolvent(alpha, chi, group="gamma")
    r_lambda = resolvent(lam_alpha, chi, group="gamma")
    va, vl = r_alpha.valuation(), r_lambda.valuation()
    half = Fraction(n + 1, 2)
    if not (va.equals(half) and vl.equals(half)):
        raise TheoremViolation(
            f"resolvent valuations ({va}, {vl}) differ from (n+1)/2 = {half}")
    try:
        q = ring.exact_divide(r_lambda - r_alpha, r_alpha).divide_by_p(1)
        integral = True
    except ExactDivisionError:
        integral = False
    return GaussLambdaReport(va, vl, integral)


# ---------------------------------------------------------------------------
# Coates-Wiles logarithmic derivative (multiplicative group)


def _eval_w_poly(ring: TowerRing, coeffs, point: RingElement) -> RingElement:
    """sum_k c_k point^k with W-scalar coefficients (ints or length-f lists)."""
    acc = ring.zero(point.prec)
    cur = ring.one(point.prec)
    for k, c in enumerate(coeffs):
        if k:
            cur = cur * point
        if isinstance(c, int):
            if c:
                acc = acc + cur * c
        else:
            acc = acc + cur.w_scale(list(c))
    return acc


def _derivative_coeffs(coeffs):
    out = []
    for k, c in enumerate(coeffs[1:], start=1):
        out.append(k * c if isinstance(c, int) else [k * t for t in c])
    return out


def coates_wiles_delta_mult(ring: TowerRing, f_coeffs) -> RingElement:
    """delta_n = (1/log'(v)) f'(v)/f(v) at v = zeta - 1 for the multiplicative
    group (log(1+t), so 1/log'(v) = 1 + v = zeta). f must be a unit series."""
    v = ring.uniformizer()
    fv = _eval_w_poly(ring, f_coeffs, v)
    dfv = _eval_w_poly(ring, _derivative_coeffs(f_coeffs), v)
    try:
        inv = ring.invert_unit(fv)
    except ExactDivisionError as exc:
        raise ValueError("f(zeta - 1) is not a unit") from exc
    return ring.zeta() * dfv * inv


def coates_wiles_equivariance_check(ring: TowerRing, f_coeffs, a: int) -> bool:
    """delta_n^sigma_a == the same formula evaluated at the conjugate point."""
    delta = coates_wiles_delta_mult(ring, f_coeffs)
    v_conj = ring.zeta(a) - ring.one()
    fv = _eval_w_poly(ring, f_coeffs, v_conj)
    dfv = _eval_w_poly(ring, _derivative_coeffs(f_coeffs), v_conj)
    rhs = ring.zeta(a) * dfv * ring.invert_unit(fv)
    return delta.galois(a) == rhs


@dataclass
class DeltaChi:
    """delta_chi = resolvent(delta_n, chi)_Gamma / (-p)^(n+1), kept as an
    exact numerator plus the power shift."""

    numerator: RingElement
    shift: int

    def valuation(self) -> Valuation:
        v = self.numerator.valuation()
        if v.is_finite:
            return Valuation.finite(v.value - self.shift)
        if v.is_at_precision:
            return Valuation.at_precision(v.bound - self.shift)
        return v


def delta_chi(ring: TowerRing, f_coeffs, chi: GaloisCharacter) -> DeltaChi:
    delta_n = coates_wiles_delta_mult(ring, f_coeffs)
    r = resolvent(delta_n, chi, group="gamma")
    if (ring.n + 1) % 2:
        r = -r
    return DeltaChi(r, ring.n + 1)
