"""Exact counts of invariants: the closed formula and its two oracles.

The closed count of degree-(D*m) invariants of a class of order D is

    phi(D)/(D*m) * (c + sum over d | m, gcd(d, D) = 1 of
                        mu(d) * (q^(m/d) + eta(m/d)))

with per-type constants (c, eta).  The brute-force oracle scans the monic
irreducibles directly; the criterion oracle counts degree-(D*m) factors of
the criterion polynomials of the powers A^j with gcd(j, D) = 1.

Types 3 and 4 share the alternating eta: in both cases the criterion
polynomial carries exactly one extra irreducible quadratic factor (x^2 - b,
resp. x^2 + c^-1 x - c^-1) precisely when m is even, and stripping its two
roots from the degree count is what the (-1)^(m+1) correction records.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd

from .numutil import divisors, factorization
from .polynomials import Poly, divides, enumerate_monic_irreducibles
from .projective import (IDENTITY, TYPE1, TYPE2, TYPE3, TYPE4, Mat2, ProjMat,
                         TypeInfo, classify, reduced_type4)
from .action import F_poly, invariant_set


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi requires n >= 1")
    out = n
    for p in factorization(n):
        out -= out // p
    return out


def moebius_mu(n: int) -> int:
    if n < 1:
        raise ValueError("moebius_mu requires n >= 1")
    fac = factorization(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def principal_character(D: int, n: int) -> int:
    """1 when n is coprime to D, else 0."""
    if D < 1 or n < 1:
        raise ValueError("character arguments must be >= 1")
    return 1 if int_gcd(D, n) == 1 else 0


def mobius_inversion(chi, L, n: int) -> int:
    """K(n) = sum over d | n of chi(d) * mu(d) * L(n/d), for completely
    multiplicative chi."""
    return sum(chi(d) * moebius_mu(d) * L(n // d) for d in divisors(n))


ETA_MINUS_ONE = "minus-one"
ETA_ZERO = "zero"
ETA_ALTERNATING = "alternating"


@dataclass(frozen=True)
class CountParams:
    c: int
    eta_kind: str

    def eta(self, t: int) -> int:
        if self.eta_kind == ETA_MINUS_ONE:
            return -1
        if self.eta_kind == ETA_ZERO:
            return 0
        return 1 if t % 2 else -1


_PARAMS = {
    TYPE1: CountParams(0, ETA_MINUS_ONE),
    TYPE2: CountParams(0, ETA_ZERO),
    TYPE3: CountParams(0, ETA_ALTERNATING),
    TYPE4: CountParams(0, ETA_ALTERNATING),
}


def count_params(info: TypeInfo) -> CountParams:
    if info.kind == IDENTITY:
        raise ValueError("no counting constants for the identity class")
    return _PARAMS[info.kind]


def count_invariants_formula(m: Mat2, n: int) -> int:
    """Closed count of invariants of degree n > 2; zero off multiples of the
    class order."""
    if n <= 2:
        raise ValueError("the closed formula applies only for n > 2")
    cls = ProjMat(m)
    if cls.is_identity():
        raise ValueError("the identity class is outside the formula's domain")
    D = cls.order()
    if n % D:
        return 0
    mm = n // D
    params = count_params(classify(m))
    q = m.spec.order
    total = params.c
    for d in divisors(mm):
        if int_gcd(d, D) == 1:
            total += moebius_mu(d) * (q ** (mm // d) + params.eta(mm // d))
    total *= euler_phi(D)
    assert total % (D * mm) == 0, "formula value must be an integer"
    return total // (D * mm)


def count_invariants_bruteforce(cls: ProjMat, n: int) -> int:
    """Oracle: scan every monic irreducible of degree n for invariance."""
    if n < 2:
        raise ValueError("invariants have degree >= 2")
    return len(invariant_set(cls, n))


def count_factors_of_degree(F: Poly, k: int) -> int:
    """Distinct monic irreducible degree-k divisors of F, by trial division."""
    if not F:
        raise ValueError("factor counting needs a nonzero polynomial")
    if k < 1:
        raise ValueError("factor degree must be >= 1")
    return sum(1 for f in enumerate_monic_irreducibles(F.ring, k)
               if divides(f, F))


def count_via_criterion(m: Mat2, mm: int) -> int:
    """Second oracle: invariants of degree D*mm are the degree-(D*mm)
    factors of the criterion polynomials of A^j over j prime to D."""
    cls = ProjMat(m)
    if cls.is_identity():
        raise ValueError("criterion counting excludes the identity class")
    D = cls.order()
    if D * mm <= 2:
        raise ValueError("criterion counting requires D*m > 2")
    total = 0
    for j in range(1, D):
        if int_gcd(j, D) == 1:
            total += count_factors_of_degree(F_poly(m**j, mm), D * mm)
    return total


def quadratic_factor_of_F(c, j: int, mm: int):
    """The quadratic irreducible factor x^2 + c^-1 x - c^-1 of the criterion
    polynomial of [[0,1],[c,1]]^j at exponent mm, present exactly when mm is
    even; asserts the degree and linear-freeness facts along the way."""
    spec = c.spec
    base = reduced_type4(spec, c)
    D = ProjMat(base).order()
    if j < 1 or j >= D or int_gcd(j, D) != 1:
        raise ValueError("j must lie in [1, D-1] and be prime to D")
    F = F_poly(base**j, mm)
    q = spec.order
    assert F.degree == q**mm + 1, "criterion polynomial has degree q^m + 1"
    assert not any(F(x) == spec.zero for x in spec.elements()), \
        "criterion polynomial must be free of linear factors"
    cinv = c.inverse()
    quad = Poly(spec, (-cinv, cinv, spec.one))
    if mm % 2 == 0:
        assert divides(quad, F), "even exponent must admit the quadratic factor"
        return quad
    assert count_factors_of_degree(F, 2) == 0, \
        "odd exponent admits no quadratic factor"
    return None


def asymptotic_ratio(m: Mat2, mm: int) -> Fraction:
    """The exact ratio count * D * m / (q^m * phi(D)), which tends to 1."""
    cls = ProjMat(m)
    D = cls.order()
    if D * mm <= 2:
        raise ValueError("ratio requires D*m > 2")
    count = count_invariants_formula(m, D * mm)
    q = m.spec.order
    return Fraction(count * D * mm, q**mm * euler_phi(D))
