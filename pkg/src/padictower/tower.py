"""Cyclotomic towers over unramified p-adic base fields.

The ring modeled here is O_L/p^N for L = K(zeta_{p^(n+1)}), where K is the
unramified extension of Q_p of degree f in {1, 2}. Elements are coefficient
vectors of length e = p^n(p-1) over W = (Z/p^N)[Y]/(Y^2 - c) (f = 2) or
Z/p^N (f = 1), on the monomial basis 1, zeta, ..., zeta^(e-1), reduced by
the Eisenstein-after-shift relation Phi_{p^(n+1)}(zeta) = 0.

pi = zeta - 1 is a uniformizer with v_p(pi) = 1/e. Valuations are extracted
exactly from the pi-adic digit expansion: rewriting x = sum c_i zeta^i in
the basis pi^j (a Taylor shift by 1) gives digits d_j in W, and since the
terms d_j pi^j have pairwise distinct valuations mod 1/e,

    v_p(x) = min_j (v_p(d_j) + j/e)

holds exactly, with no precision loss. An element that is 0 mod p^M yields
the distinguished infinite-at-precision outcome.

Layers are never given their own rings: Psi_m (the fixed field of
Delta x Gamma^(p^m)) and K_m = K(zeta_{p^m}) live inside the top ring, with
membership meaning "invariant under the layer's Galois group to working
precision".
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .padic import (
    PrimeProfile,
    Valuation,
    primitive_root,
    smallest_nonresidue,
    teichmuller_int,
)


class ExactDivisionError(ArithmeticError):
    """Division that was required to be exact left a remainder."""


class PrecisionExhausted(ArithmeticError):
    """An operation demanded more p-digits than the element carries."""


@dataclass(frozen=True)
class GaloisElement:
    """(a, b): zeta -> zeta^a and Frobenius^b on the coefficient ring W."""

    a: int
    b: int = 0


_INT64_SAFE = 2 ** 62


def _trailing_p_valuations(flat: np.ndarray, p: int, cap: int) -> np.ndarray:
    """Elementwise max k <= cap with p^k dividing the entry (cap for 0)."""
    vals = np.zeros(flat.shape, dtype=np.int64)
    y = flat.copy()
    zero = y == 0
    vals[zero] = cap
    active = ~zero
    for _ in range(cap):
        if not active.any():
            break
        div = np.zeros_like(active)
        div[active] = (y[active] % p) == 0
        vals[div] += 1
        y[div] //= p
        active = div
    return vals


class TowerRing:
    """Arithmetic context for O_{K(zeta_{p^(n+1)})} mod p^N.

    Instances are immutable and cached; use :meth:`get`.
    """

    _cache: dict[tuple[int, int, int, int], "TowerRing"] = {}

    def __init__(self, profile: PrimeProfile):
        self.profile = profile
        p, f, n, N = profile.p, profile.f, profile.n, profile.N
        self.p, self.f, self.n, self.N = p, f, n, N
        self.pn = p ** n
        self.pn1 = p ** (n + 1)
        self.e = self.pn * (p - 1)
        self.degree = f * self.e
        self.modulus = p ** N
        self.c = smallest_nonresidue(p) if f == 2 else 0

        # int64 convolutions are exact iff accumulated sums cannot overflow
        self._int64_ok = (1 + self.c) * self.e * (p ** (2 * N)) < _INT64_SAFE
        self._dtype = np.int64 if self._int64_ok else object

        g0 = primitive_root(p)
        self.delta_gen = teichmuller_int(g0, p, n + 1) % self.pn1
        self.gamma = (1 + p) % self.pn1
        self.gamma_pows = self._cycle(self.gamma, self.pn)
        self.delta_list = sorted(
            teichmuller_int(u, p, n + 1) % self.pn1 for u in range(1, p))
        self.units = [a for a in range(self.pn1) if a % p != 0]
        # discrete log a = delta_gen^s * gamma^m
        self._dlog: dict[int, tuple[int, int]] = {}
        dpows = self._cycle(self.delta_gen, p - 1)
        for s in range(p - 1):
            for m in range(self.pn):
                self._dlog[(dpows[s] * self.gamma_pows[m]) % self.pn1] = (s, m)
        # Teichmuller unit of W of exact order p-1 (lift of g0), as powers
        t = teichmuller_int(g0, p, N)
        self.teich_pows = self._cycle(t, p - 1, mod=self.modulus)

        self._shift_matrix: np.ndarray | None = None
        self._pi_pow_cache: dict[int, "RingElement"] = {}

    @classmethod
    def get(cls, p: int, f: int = 1, n: int = 0, N: int | None = None) -> "TowerRing":
        profile = PrimeProfile(p, f, n, N)
        key = (profile.p, profile.f, profile.n, profile.N)
        ring = cls._cache.get(key)
        if ring is None:
            ring = cls._cache[key] = cls(profile)
        return ring

    @staticmethod
    def _cycle(g: int, order: int, mod: int | None = None) -> list[int]:
        out = [1]
        for _ in range(order - 1):
            out.append(out[-1] * g % mod if mod else out[-1] * g)
        if mod is None:
            return out
        return out

    def __repr__(self) -> str:
        return (f"TowerRing(p={self.p}, f={self.f}, n={self.n}, N={self.N}, "
                f"degree={self.degree})")

    # -- raw coefficient helpers (arrays of shape (e, f)) -------------------

    def _zeros(self) -> np.ndarray:
        if self._dtype is object:
            return np.array([[0] * self.f for _ in range(self.e)], dtype=object)
        return np.zeros((self.e, self.f), dtype=np.int64)

    def _as_array(self, coeffs) -> np.ndarray:
        arr = np.array(coeffs, dtype=self._dtype)
        if arr.ndim == 1:
            arr = arr[:, None]
        if arr.shape != (self.e, self.f):
            raise ValueError(f"coefficient shape {arr.shape} != {(self.e, self.f)}")
        return arr % self.modulus

    def _convolve(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self._dtype is object:
            out = np.array([0] * (len(a) + len(b) - 1), dtype=object)
            for i, ai in enumerate(a):
                if ai:
                    out[i:i + len(b)] += ai * b
            return out
        return np.convolve(a, b)

    def _mul_arrays(self, A: np.ndarray, B: np.ndarray, mod: int) -> np.ndarray:
        if self.f == 1:
            conv = self._convolve(A[:, 0], B[:, 0])[:, None]
        else:
            a0, a1, b0, b1 = A[:, 0], A[:, 1], B[:, 0], B[:, 1]
            c0 = self._convolve(a0, b0) + self.c * self._convolve(a1, b1)
            c1 = self._convolve(a0, b1) + self._convolve(a1, b0)
            conv = np.stack([c0, c1], axis=-1)
        return self._fold(conv, mod)

    def _fold(self, conv: np.ndarray, mod: int) -> np.ndarray:
        """Reduce a coefficient array indexed by exponents 0..L-1 (L <= 2e-1)
        to the monomial basis, using zeta^(p^(n+1)) = 1 and the Eisenstein
        relation zeta^(e+s) = -sum_k zeta^(k p^n + s)."""
        e, pn, pn1 = self.e, self.pn, self.pn1
        L = conv.shape[0]
        out = conv[:e].copy()
        if L > e:
            hi = conv[e:min(L, pn1)]
            m = hi.shape[0]
            for k in range(self.p - 1):
                out[k * pn:k * pn + m] -= hi
        if L > pn1:
            wrap = conv[pn1:]
            out[:wrap.shape[0]] += wrap
        return out % mod

    def _map_exponents(self, A: np.ndarray, tgt: np.ndarray, mod: int) -> np.ndarray:
        """Send coefficient at basis exponent i to exponent tgt[i] (< p^(n+1),
        all distinct) and rereduce. Used for Galois action and monomial shifts."""
        e, pn = self.e, self.pn
        out = np.zeros_like(A)
        small = tgt < e
        out[tgt[small]] = A[small]
        big = ~small
        if big.any():
            s = tgt[big] - e
            V = A[big]
            for k in range(self.p - 1):
                out[k * pn + s] -= V
        return out % mod

    def _w_mul(self, u: np.ndarray, v: np.ndarray, mod: int) -> np.ndarray:
        if self.f == 1:
            return (u * v) % mod
        r0 = (u[..., 0] * v[..., 0] + self.c * (u[..., 1] * v[..., 1])) % mod
        r1 = (u[..., 0] * v[..., 1] + u[..., 1] * v[..., 0]) % mod
        return np.stack([r0, r1], axis=-1)

    def _w_inv(self, w: Sequence[int], mod: int) -> np.ndarray:
        """Inverse of a unit W-scalar mod p^mod-value."""
        if self.f == 1:
            return np.array([pow(int(w[0]), -1, mod)], dtype=self._dtype)
        a, b = int(w[0]), int(w[1])
        nrm = (a * a - self.c * b * b) % mod
        ninv = pow(nrm, -1, mod)
        return np.array([a * ninv % mod, (-b * ninv) % mod], dtype=self._dtype)

    def _shift_mat(self) -> np.ndarray:
        """Matrix S with S[k, i] = C(i, k) mod p^N: pi-digits d = S @ coeffs."""
        if self._shift_matrix is None:
            e, mod = self.e, self.modulus
            T = np.zeros((e, e), dtype=self._dtype)  # T[i, k] = C(i, k)
            T[0, 0] = 1
            for i in range(1, e):
                T[i, 0] = 1
                T[i, 1:] = (T[i - 1, 1:] + T[i - 1, :-1]) % mod
            self._shift_matrix = T.T.copy()
        return self._shift_matrix

    def _matvec(self, M: np.ndarray, v: np.ndarray, mod: int) -> np.ndarray:
        if self._dtype is object:
            return np.dot(M, v) % mod
        return (M @ v) % mod

    # -- element constructors ------------------------------------------------

    def zero(self, prec: int | None = None) -> "RingElement":
        return RingElement(self, self._zeros(), prec or self.N)

    def one(self, prec: int | None = None) -> "RingElement":
        return self.integer(1, prec)

    def integer(self, value: int, prec: int | None = None) -> "RingElement":
        arr = self._zeros()
        arr[0, 0] = value % self.modulus
        return RingElement(self, arr, prec or self.N)

    def w_scalar(self, coords: Sequence[int], prec: int | None = None) -> "RingElement":
        arr = self._zeros()
        for t, v in enumerate(coords):
            arr[0, t] = v % self.modulus
        return RingElement(self, arr, prec or self.N)

    def zeta(self, power: int = 1, prec: int | None = None) -> "RingElement":
        arr = self._zeros()
        k = power % self.pn1
        if k < self.e:
            arr[k, 0] = 1
        else:
            s = k - self.e
            for t in range(self.p - 1):
                arr[t * self.pn + s, 0] -= 1
        return RingElement(self, arr, prec or self.N)

    def uniformizer(self, prec: int | None = None) -> "RingElement":
        return self.zeta(1, prec) - self.one(prec)

    def pi_pow(self, j: int) -> "RingElement":
        """pi^j at full precision, cached."""
        if j < 0:
            raise ValueError("negative pi power")
        el = self._pi_pow_cache.get(j)
        if el is None:
            el = self.uniformizer() ** j
            self._pi_pow_cache[j] = el
        return el

    def from_coeffs(self, coeffs, prec: int | None = None) -> "RingElement":
        return RingElement(self, self._as_array(coeffs), prec or self.N)

    def random_element(self, rng: np.random.Generator,
                       prec: int | None = None) -> "RingElement":
        digits = rng.integers(0, self.p, size=(self.N, self.e, self.f))
        arr = self._zeros()
        for d in range(self.N):
            arr += (self.p ** d) * digits[d].astype(self._dtype, copy=False)
        return RingElement(self, arr % self.modulus, prec or self.N)

    # -- Galois machinery ----------------------------------------------------

    def check_galois(self, g: GaloisElement) -> GaloisElement:
        if g.a % self.p == 0:
            raise ValueError(f"a={g.a} is not a unit mod p^(n+1)")
        return GaloisElement(g.a % self.pn1, g.b % self.f)

    def galois(self, x: "RingElement", a: int, b: int = 0) -> "RingElement":
        g = self.check_galois(GaloisElement(a, b))
        A = x.coeffs
        if g.b and self.f == 2:
            A = A.copy()
            A[:, 1] = (-A[:, 1]) % x._mod
        tgt = (g.a * np.arange(self.e, dtype=np.int64)) % self.pn1
        return RingElement(self, self._map_exponents(A, tgt, x._mod), x.prec)

    def monomial_mul(self, x: "RingElement", m: int) -> "RingElement":
        """x * zeta^m via exponent shifting (O(e·p), no convolution)."""
        tgt = (np.arange(self.e, dtype=np.int64) + m) % self.pn1
        return RingElement(self, self._map_exponents(x.coeffs, tgt, x._mod), x.prec)

    def dlog(self, a: int) -> tuple[int, int]:
        """(s, m) with a = delta_gen^s * gamma^m in (Z/p^(n+1))^x."""
        return self._dlog[a % self.pn1]

    # -- traces --------------------------------------------------------------

    def trace_to_layer(self, x: "RingElement", m: int) -> "RingElement":
        """Trace from K_(n+1) to K_m = K(zeta_{p^m}), inside the top ring.

        Closed form on the monomial basis: for m >= 1 the subgroup
        {a = 1 mod p^m} sends zeta^i to an orbit summing to
        p^(n+1-m) zeta^i when p^(n+1-m) | i and to 0 otherwise; for m = 0 the
        unit-group orbit sums are Ramanujan sums (e, -p^n, or 0).
        """
        if not 0 <= m <= self.n + 1:
            raise ValueError(f"layer index {m} out of range 0..{self.n + 1}")
        if m == self.n + 1:
            return x
        A = x.coeffs
        out = self._zeros()
        if m >= 1:
            q = self.p ** (self.n + 1 - m)
            new_prec = min(self.N, x.prec + self.n + 1 - m)
            mod = self.p ** new_prec
            idx = np.arange(0, self.e, q)
            out[idx] = (q * A[idx]) % mod
            return RingElement(self, out, new_prec)
        # m = 0: Tr(zeta^i) = e, -p^n, 0 for order(zeta^i) = 1, p, >p.
        # Every orbit sum carries a factor p^n, so n digits of precision
        # are recovered exactly.
        new_prec = min(self.N, x.prec + self.n)
        mod = self.p ** new_prec
        out[0] = (self.e * A[0]) % mod
        for k in range(1, self.p - 1):
            out[0] = (out[0] - self.pn * A[k * self.pn]) % mod
        return RingElement(self, out, new_prec)

    def step_trace(self, x: "RingElement", i: int) -> "RingElement":
        """Trace K_(i+1) -> K_i applied to x (x must lie in K_(i+1))."""
        if not 0 <= i <= self.n:
            raise ValueError(f"step index {i} out of range 0..{self.n}")
        if i == 0:
            reps = self.delta_list
        else:
            reps = [(1 + t * self.p ** i) % self.pn1 for t in range(self.p)]
        return self.sum_conjugates(x, reps)

    def psi_step_trace(self, x: "RingElement", m: int) -> "RingElement":
        """Trace Psi_(m+1) -> Psi_m applied to x (x must lie in Psi_(m+1))."""
        if not 0 <= m <= self.n - 1:
            raise ValueError(f"psi step {m} out of range 0..{self.n - 1}")
        reps = [self.gamma_pows[(t * self.p ** m) % self.pn] for t in range(self.p)]
        return self.sum_conjugates(x, reps)

    def trace_to_psi(self, x: "RingElement", m: int) -> "RingElement":
        """Trace from K_(n+1) to Psi_m (fixed field of Delta x Gamma^(p^m))."""
        if not 0 <= m <= self.n:
            raise ValueError(f"psi layer {m} out of range 0..{self.n}")
        y = self.trace_to_layer(x, m + 1)
        return self.sum_conjugates(y, self.delta_list)

    def sum_conjugates(self, x: "RingElement", a_values: Iterable[int]) -> "RingElement":
        acc = self.zero(x.prec)
        for a in a_values:
            acc = acc + self.galois(x, a)
        return acc

    def norm_to_base(self, x: "RingElement") -> "RingElement":
        acc = None
        for a in self.units:
            conj = self.galois(x, a)
            acc = conj if acc is None else acc * conj
        return acc

    # -- layer membership ----------------------------------------------------

    def in_layer(self, x: "RingElement", m: int) -> bool:
        """x in K_m = K(zeta_{p^m}), to working precision."""
        if m >= self.n + 1:
            return True
        if m == 0:
            return self.in_psi(x, 0)
        gen = (1 + self.p ** m) % self.pn1
        return self.galois(x, gen) == x

    def in_psi(self, x: "RingElement", m: int) -> bool:
        """x in Psi_m (Delta-invariant and Gamma^(p^m)-invariant)."""
        if self.galois(x, self.delta_gen) != x:
            return False
        if m >= self.n:
            return True
        sub_gen = self.gamma_pows[self.p ** m % self.pn]
        return self.galois(x, sub_gen) == x

    # -- uniformizer system ---------------------------------------------------

    def psi_uniformizer(self, m: int) -> "RingElement":
        """pi_m = Tr_{K_(m+1)/Psi_m}(zeta_{p^(m+1)} - 1), a uniformizer of Psi_m.

        Computed as the Delta-orbit sum of zeta^(p^(n-m)) - 1 in the top ring.
        """
        if not 0 <= m <= self.n:
            raise ValueError(f"psi layer {m} out of range 0..{self.n}")
        x = self.zeta(self.p ** (self.n - m)) - self.one()
        return self.sum_conjugates(x, self.delta_list)

    def frobenius_uniformizer_system(self) -> list["RingElement"]:
        """[pi_0, ..., pi_n] with pi_(m+1)^p = pi_m mod p R_(m+1), verified."""
        system = [self.psi_uniformizer(m) for m in range(self.n + 1)]
        for m, el in enumerate(system):
            v = el.valuation()
            if not v.equals(Fraction(1, self.p ** m)):
                raise AssertionError(
                    f"pi_{m} is not a uniformizer of Psi_{m}: v_p = {v}")
        for m in range(self.n):
            ok, _ = self.frobenius_congruence_parts(system[m + 1], m + 1,
                                                    expected=system[m])
            if not ok:
                raise AssertionError(
                    f"Frobenius congruence pi_{m + 1}^p = pi_{m} mod p R_{m + 1} failed")
        return system

    def frobenius_congruence_parts(self, x: "RingElement", layer: int,
                                   expected: "RingElement | None" = None
                                   ) -> tuple[bool, "RingElement | None"]:
        """Decompose x^p = p*(integral) + (element of Psi_(layer-1)).

        Projects x^p onto the lower layer by r = (1/p) Tr_{Psi_layer/Psi_(layer-1)}(x^p)
        and tests that the remainder x^p - r is divisible by p. Returns
        (holds, r). When ``expected`` is given, additionally requires
        x^p - expected to be divisible by p (the stronger system congruence).
        """
        if not 1 <= layer <= self.n:
            raise ValueError(f"layer {layer} out of range 1..{self.n}")
        xp = x ** self.p
        tr = self.psi_step_trace(xp, layer - 1)
        try:
            r = tr.divide_by_p(1)
        except ExactDivisionError:
            return False, None
        try:
            (xp - r).divide_by_p(1)
        except ExactDivisionError:
            return False, r
        if expected is not None:
            try:
                (xp - expected).divide_by_p(1)
            except ExactDivisionError:
                return False, r
        return True, r

    def frobenius_congruence_check(self, x: "RingElement", layer: int) -> bool:
        """Cor-style check: x a uniformizer of Psi_layer has
        x^p in p R_layer + R_(layer-1)."""
        v = x.valuation()
        if not v.equals(Fraction(1, self.p ** layer)):
            raise ValueError(
                f"x is not a uniformizer of Psi_{layer}: v_p = {v}")
        if not self.in_psi(x, layer):
            raise ValueError(f"x does not lie in Psi_{layer}")
        ok, _ = self.frobenius_congruence_parts(x, layer)
        return ok

    # -- division ------------------------------------------------------------

    def invert_unit(self, x: "RingElement") -> "RingElement":
        """Newton inverse of a unit (nonzero residue image)."""
        res = x.residue_image()
        if not any(int(t) for t in res):
            raise ExactDivisionError("element is not a unit (residue image 0)")
        seed = self._w_inv([int(t) for t in res] + [0] * (self.f - len(res)),
                           self.p ** x.prec)
        y = self.w_scalar([int(t) for t in seed], x.prec)
        one = self.one(x.prec)
        for _ in range(2 * (x.prec * self.e).bit_length() + 4):
            err = one - x * y
            if err.is_zero():
                return y
            y = y + y * err
        raise AssertionError("unit inversion did not converge")

    def exact_divide(self, x: "RingElement", g: "RingElement") -> "RingElement":
        """x / g when the quotient is integral; raises ExactDivisionError
        otherwise. Costs q+2 precision digits for v_p(g) = q + r/e."""
        vg = g.valuation()
        if not vg.is_finite:
            raise ExactDivisionError("division by (numerical) zero")
        w = int(vg.value * self.e)
        q, r = divmod(w, self.e)
        shift = self.e - r if r else 0
        lift = g * self.pi_pow(shift) if shift else g
        u = lift.divide_by_p(q + (1 if r else 0))
        uinv = self.invert_unit(u)
        num = (x * self.pi_pow(shift)) if shift else x
        return (num * uinv).divide_by_p(q + (1 if r else 0))


class RingElement:
    """Element of a TowerRing with a precision ledger (known mod p^prec)."""

    __slots__ = ("ring", "coeffs", "prec", "_mod")

    def __init__(self, ring: TowerRing, coeffs: np.ndarray, prec: int):
        if prec < 1:
            raise PrecisionExhausted("element has no remaining precision")
        prec = min(prec, ring.N)
        self.ring = ring
        self.prec = prec
        self._mod = ring.p ** prec
        self.coeffs = coeffs % self._mod

    # -- arithmetic ----------------------------------------------------------

    def _join(self, other: "RingElement") -> int:
        if other.ring is not self.ring:
            raise ValueError("elements from different rings")
        return min(self.prec, other.prec)

    def __add__(self, other: "RingElement") -> "RingElement":
        prec = self._join(other)
        return RingElement(self.ring, self.coeffs + other.coeffs, prec)

    def __sub__(self, other: "RingElement") -> "RingElement":
        prec = self._join(other)
        return RingElement(self.ring, self.coeffs - other.coeffs, prec)

    def __neg__(self) -> "RingElement":
        return RingElement(self.ring, -self.coeffs, self.prec)

    def __mul__(self, other) -> "RingElement":
        if isinstance(other, int):
            return RingElement(self.ring, self.coeffs * (other % self._mod), self.prec)
        prec = self._join(other)
        mod = self.ring.p ** prec
        return RingElement(self.ring,
                           self.ring._mul_arrays(self.coeffs % mod,
                                                 other.coeffs % mod, mod),
                           prec)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RingElement":
        if k < 0:
            raise ValueError("negative ring powers are not defined")
        result = self.ring.one(self.prec)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def w_scale(self, coords: Sequence[int]) -> "RingElement":
        """Multiply by a W-scalar (length-f coordinate list)."""
        w = np.array(list(coords) + [0] * (self.ring.f - len(coords)),
                     dtype=self.ring._dtype)
        return RingElement(self.ring,
                           self.ring._w_mul(self.coeffs, w, self._mod),
                           self.prec)

    def divide_by_p(self, k: int = 1) -> "RingElement":
        if k == 0:
            return self
        pk = self.ring.p ** k
        if (self.coeffs % pk != 0).any():
            raise ExactDivisionError(f"coefficients not divisible by p^{k}")
        return RingElement(self.ring, self.coeffs // pk, self.prec - k)

    def multiply_by_p(self, k: int = 1) -> "RingElement":
        new_prec = min(self.ring.N, self.prec + k)
        return RingElement(self.ring, (self.coeffs * self.ring.p ** k), new_prec)

    def galois(self, a: int, b: int = 0) -> "RingElement":
        return self.ring.galois(self, a, b)

    def apply(self, g: GaloisElement) -> "RingElement":
        return self.ring.galois(self, g.a, g.b)

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not (self.coeffs % self._mod).any()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("RingElement is unhashable (precision-sensitive equality)")

    def residue_image(self) -> tuple[int, ...]:
        """Image in the residue field k = F_{p^f} under zeta -> 1, mod p."""
        s = self.coeffs.sum(axis=0) % self.ring.p
        return tuple(int(t) for t in s)

    def pi_digits(self, mod_exponent: int | None = None) -> np.ndarray:
        """Digits d_j of the expansion x = sum_j d_j pi^j, shape (e, f),
        reduced mod p^mod_exponent (default: full working precision)."""
        S = self.ring._shift_mat()
        m = self.ring.p ** (mod_exponent or self.prec)
        return self.ring._matvec(S % m, self.coeffs % m, m)

    def valuation(self) -> Valuation:
        """Exact v_p via the pi-adic digit expansion (see module docstring)."""
        e, p, M = self.ring.e, self.ring.p, self.prec
        digits = self.pi_digits()
        flat = digits.reshape(-1)
        vals = _trailing_p_valuations(flat.astype(object, copy=False)
                                      if self.ring._dtype is object else flat,
                                      p, M)
        vals = vals.reshape(digits.shape)
        best = None
        for j in range(e):
            for t in range(self.ring.f):
                v = int(vals[j, t])
                if v >= M:
                    continue
                cand = v * e + j
                if best is None or cand < best:
                    best = cand
        if best is None:
            return Valuation.at_precision(M)
        return Valuation.finite(Fraction(best, e))

    def v_L(self) -> int:
        """Valuation in v_L units (v_L(pi) = 1); raises on the infinite cases."""
        v = self.valuation()
        if not v.is_finite:
            raise PrecisionExhausted("element is zero to working precision")
        return int(v.value * self.ring.e)

    # -- serialization --------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "p": self.ring.p,
            "f": self.ring.f,
            "n": self.ring.n,
            "N": self.prec,
            "coeffs": [[str(int(c)) for c in row] for row in self.coeffs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True,
                          separators=(",", ":"))

    @staticmethod
    def from_json_dict(data: dict, ring: TowerRing | None = None) -> "RingElement":
        p, f, n, N = int(data["p"]), int(data["f"]), int(data["n"]), int(data["N"])
        if ring is None:
            ring = TowerRing.get(p, f, n, max(N, n + 3))
        elif (ring.p, ring.f, ring.n) != (p, f, n):
            raise ValueError("element does not belong to the given ring")
        coeffs = [[int(c) for c in row] for row in data["coeffs"]]
        arr = np.array(coeffs, dtype=ring._dtype)
        if arr.shape != (ring.e, ring.f):
            raise ValueError(
                f"coefficient block must be {ring.e} x {ring.f} for this ring")
        return RingElement(ring, arr, min(N, ring.N))

    @staticmethod
    def from_json(text: str, ring: TowerRing | None = None) -> "RingElement":
        return RingElement.from_json_dict(json.loads(text), ring)

    def __repr__(self) -> str:
        v = self.valuation()
        return (f"RingElement(p={self.ring.p}, f={self.ring.f}, n={self.ring.n}, "
                f"prec={self.prec}, v_p={v})")
