"""Exact arithmetic substrate for the tower modules.

Everything here is exact: valuations are `fractions.Fraction` values (or the
distinguished infinite outcomes), polynomials are plain integer coefficient
lists, and residue helpers work modulo p^N with arbitrary-precision ints.
No floating point is used anywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]

_FINITE = "finite"
_INFINITE = "infinite"
_AT_PRECISION = "infinite-at-precision"


def canonical_rational(x: RationalLike) -> str:
    """Format a rational as the canonical string ``a/b`` (always with slash).

    >>> canonical_rational(Fraction(3, 2))
    '3/2'
    >>> canonical_rational(-1)
    '-1/1'
    """
    fr = Fraction(x)
    return f"{fr.numerator}/{fr.denominator}"


class Valuation:
    """A p-adic valuation, normalized so v_p(p) = 1.

    Three kinds of outcome:

    * finite: an exact rational value (denominator divides the ramification
      index of the ambient ring),
    * infinite: the element is exactly zero,
    * infinite-at-precision: the element is indistinguishable from zero at
      the working precision; ``bound`` is a certified lower bound in v_p
      units (the true valuation is >= bound).
    """

    __slots__ = ("kind", "value", "bound")

    def __init__(self, kind: str, value: Fraction | None = None,
                 bound: Fraction | None = None):
        self.kind = kind
        self.value = value
        self.bound = bound

    # -- constructors ------------------------------------------------------

    @classmethod
    def finite(cls, value: RationalLike) -> "Valuation":
        return cls(_FINITE, Fraction(value))

    @classmethod
    def infinite(cls) -> "Valuation":
        return cls(_INFINITE)

    @classmethod
    def at_precision(cls, bound: RationalLike) -> "Valuation":
        return cls(_AT_PRECISION, bound=Fraction(bound))

    # -- predicates --------------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self.kind == _FINITE

    @property
    def is_infinite(self) -> bool:
        return self.kind == _INFINITE

    @property
    def is_at_precision(self) -> bool:
        return self.kind == _AT_PRECISION

    def at_least(self, threshold: RationalLike) -> bool:
        """True when the valuation is certified >= threshold.

        Conservative for the at-precision outcome: only true when the
        certified bound already clears the threshold.
        """
        t = Fraction(threshold)
        if self.is_finite:
            return self.value >= t
        if self.is_infinite:
            return True
        return self.bound >= t

    def equals(self, threshold: RationalLike) -> bool:
        return self.is_finite and self.value == Fraction(threshold)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Valuation") -> "Valuation":
        if not isinstance(other, Valuation):
            return NotImplemented
        if self.is_infinite or other.is_infinite:
            return Valuation.infinite()
        if self.is_at_precision or other.is_at_precision:
            a = self.bound if self.is_at_precision else self.value
            b = other.bound if other.is_at_precision else other.value
            return Valuation.at_precision(a + b)
        return Valuation.finite(self.value + other.value)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.equals(other)
        if not isinstance(other, Valuation):
            return NotImplemented
        return (self.kind, self.value, self.bound) == (
            other.kind, other.value, other.bound)

    def __hash__(self) -> int:
        return hash((self.kind, self.value, self.bound))

    def __str__(self) -> str:
        if self.is_finite:
            return canonical_rational(self.value)
        if self.is_infinite:
            return "inf"
        return f">={canonical_rational(self.bound)}"

    def __repr__(self) -> str:
        return f"Valuation({self})"


def rational_valuation(x: RationalLike, p: int) -> Valuation:
    """Exact p-adic valuation of a rational number.

    >>> rational_valuation(25, 5).value
    Fraction(2, 1)
    >>> rational_valuation(Fraction(3, 5), 5).value
    Fraction(-1, 1)
    >>> rational_valuation(0, 5).is_infinite
    True
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    fr = Fraction(x)
    if fr == 0:
        return Valuation.infinite()
    v = 0
    num, den = fr.numerator, fr.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return Valuation.finite(v)


# ---------------------------------------------------------------------------
# small number theory helpers


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def _check_odd_prime(p: int) -> None:
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")


def cyclotomic_poly(p: int, k: int) -> list[int]:
    """Coefficients (ascending) of the p^k-th cyclotomic polynomial.

    Phi_{p^k}(X) = sum_{i=0}^{p-1} X^{i p^(k-1)}: degree p^(k-1)(p-1), monic,
    exactly p nonzero coefficients, all equal to 1, and Eisenstein after the
    substitution X -> X+1.
    """
    _check_odd_prime(p)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    step = p ** (k - 1)
    coeffs = [0] * (step * (p - 1) + 1)
    for i in range(p):
        coeffs[i * step] = 1
    return coeffs


def poly_eval_int(coeffs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def primitive_root(p: int) -> int:
    """Smallest primitive root mod p."""
    _check_odd_prime(p)
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise AssertionError("no primitive root found")  # unreachable for prime p


def _prime_factors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def smallest_nonresidue(p: int) -> int:
    """Smallest positive quadratic non-residue mod p."""
    _check_odd_prime(p)
    for c in range(2, p):
        if pow(c, (p - 1) // 2, p) == p - 1:
            return c
    raise AssertionError("no non-residue below p")  # unreachable


def teichmuller_int(a: int, p: int, N: int) -> int:
    """Teichmuller lift of a mod p^N, by iterated p-th powering.

    Returns the unique x with x ≡ a (mod p) and x^(p-1) ≡ 1 (mod p^N)
    (x = 0 for a ≡ 0).
    """
    mod = p ** N
    x = a % mod
    for _ in range(N + 1):
        x = pow(x, p, mod)
    return x


@dataclass(frozen=True)
class PrimeProfile:
    """Parameters fixing a tower: prime p, base residue degree f, level n,
    and the coefficient precision exponent N (elements known mod p^N)."""

    p: int
    f: int = 1
    n: int = 0
    N: int | None = None

    def __post_init__(self):
        _check_odd_prime(self.p)
        if self.f not in (1, 2):
            raise ValueError(f"residue degree f must be 1 or 2, got {self.f}")
        if self.n < 0:
            raise ValueError(f"tower level n must be >= 0, got {self.n}")
        if self.N is None:
            object.__setattr__(self, "N", self.n + 6)
        if self.N < self.n + 3:
            raise ValueError(
                f"precision N={self.N} too small; need at least n+3={self.n + 3}")

    @property
    def ramification_index(self) -> int:
        return self.p ** self.n * (self.p - 1)

    @property
    def degree(self) -> int:
        return self.f * self.ramification_index
