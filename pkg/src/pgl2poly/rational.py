"""Degree-D rational maps whose transforms generate every invariant.

For a non-identity class of order D there is a rational function
Q = num/den of degree D, fixed by the Moebius substitution of the class,
such that the invariants of degree D*m are exactly the monic rescalings of
den^m * F(num/den) with F of degree m.  The map is assembled per type from
the two linear forms of the conjugator; type 4 additionally builds a pair
of polynomials over GF(q^2) from the eigenvalue and descends them.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .fields import embed, frobenius_q, make_ext, try_descend
from .polynomials import (Poly, divrem, gcd, is_irreducible, monic_polys,
                          monicize)
from .projective import (TYPE1, TYPE2, TYPE3, TYPE4, Mat2, ProjMat,
                         ReducedForm, reduce)
from .action import act


@dataclass(frozen=True)
class RationalMap:
    num: Poly
    den: Poly
    degree: int

    def normalized(self) -> "RationalMap":
        """Lowest terms with the pair scaled so the denominator is monic."""
        g = gcd(self.num, self.den)
        num, den = divrem(self.num, g)[0], divrem(self.den, g)[0]
        inv = den.lc().inverse()
        return RationalMap(num.scale(inv), den.scale(inv),
                           max(num.degree, den.degree))

    def __repr__(self):
        return f"({self.num!r})/({self.den!r})"


@dataclass(frozen=True)
class QConstruction:
    map: RationalMap
    source: ReducedForm


def _linear_forms(p: Mat2) -> tuple[Poly, Poly]:
    # the two columns of the conjugator, read as a*x + c and b*x + d
    spec = p.spec
    return Poly(spec, (p.c, p.a)), Poly(spec, (p.d, p.b))


def _type4_reduced_pair(rf: ReducedForm, D: int) -> tuple[Poly, Poly]:
    """g = (T(x+T)^D - t(x+t)^D)/(T-t) and h = ((x+T)^D - (x+t)^D)/(T-t)
    for t the eigenvalue and T its conjugate; both descend to GF(q)."""
    spec = rf.reduced.spec
    ext = make_ext(spec)
    theta = rf.eigenvalue
    theta_q = frobenius_q(theta)
    assert try_descend(theta**D) is not None, "theta^D must lie in GF(q)"
    lin_t = Poly(ext, (theta, ext.one))
    lin_tq = Poly(ext, (theta_q, ext.one))
    dinv = (theta_q - theta).inverse()
    g_ext = ((lin_tq**D).scale(theta_q) - (lin_t**D).scale(theta)).scale(dinv)
    h_ext = ((lin_tq**D) - (lin_t**D)).scale(dinv)
    def down(f_ext):
        coeffs = [try_descend(c) for c in f_ext.coeffs]
        assert all(c is not None for c in coeffs), "coefficients must descend"
        return Poly(spec, coeffs)
    g, h = down(g_ext), down(h_ext)
    assert g.degree == D and g.is_monic and h.degree == D - 1
    return g, h


def q_map(m: Mat2) -> QConstruction:
    """The degree-D rational map attached to the class of m."""
    cls = ProjMat(m)
    if cls.is_identity():
        raise ValueError("the identity class has no rational map")
    D = cls.order()
    rf = reduce(m)
    l1, l2 = _linear_forms(rf.conjugator)
    kind = rf.info.kind
    if kind == TYPE1:
        num, den = l1**D, l2**D
    elif kind == TYPE2:
        p = m.spec.p
        num = l1**p - l1 * l2 ** (p - 1)
        den = l2**p
    elif kind == TYPE3:
        num = l1 * l1 + (l2 * l2).scale(rf.info.param)
        den = l1 * l2
    else:
        g, h = _type4_reduced_pair(rf, D)
        num = act(rf.conjugator, g)
        den = l2 * act(rf.conjugator, h)

    # one scalar on the pair: make the degree-D side monic
    anchor = den if den.degree == D else num
    assert anchor.degree == D, "neither side realizes the map degree"
    inv = anchor.lc().inverse()
    num, den = num.scale(inv), den.scale(inv)

    out = RationalMap(num, den, D)
    assert gcd(num, den) == Poly.one(m.spec), "num and den must be coprime"
    assert substitute_mobius(out, m) == out.normalized(), \
        "map must be fixed by its own Moebius substitution"
    return QConstruction(out, rf)


def substitute_mobius(Q: RationalMap, m: Mat2) -> RationalMap:
    """Q((ax+c)/(bx+d)) in lowest terms, denominator monic."""
    spec = m.spec
    n = Q.degree
    u = Poly(spec, (m.c, m.a))
    v = Poly(spec, (m.d, m.b))
    upow = [Poly.one(spec)]
    vpow = [Poly.one(spec)]
    for _ in range(n):
        upow.append(upow[-1] * u)
        vpow.append(vpow[-1] * v)
    def homogenize(f):
        out = Poly.zero(spec)
        for i, c in enumerate(f.coeffs):
            if c:
                out = out + (upow[i] * vpow[n - i]).scale(c)
        return out
    return RationalMap(homogenize(Q.num), homogenize(Q.den), n).normalized()


def transform(F: Poly, Q: RationalMap) -> Poly:
    """den^m * F(num/den) for m = deg F; linear in F and not monicized."""
    if not F:
        raise ValueError("transform of the zero polynomial")
    mdeg = F.degree
    npow = [Poly.one(F.ring)]
    dpow = [Poly.one(F.ring)]
    for _ in range(mdeg):
        npow.append(npow[-1] * Q.num)
        dpow.append(dpow[-1] * Q.den)
    out = Poly.zero(F.ring)
    for i, c in enumerate(F.coeffs):
        if c:
            out = out + (npow[i] * dpow[mdeg - i]).scale(c)
    return out


def generate_invariants(m: Mat2, mdeg: int) -> list[Poly]:
    """All invariants of degree D*mdeg, produced as monic rescalings of
    transforms of the q^mdeg monic polynomials of degree mdeg; sorted by
    encoding."""
    cls = ProjMat(m)
    if cls.is_identity():
        raise ValueError("the identity class fixes everything")
    D = cls.order()
    if D * mdeg <= 2:
        raise ValueError("generation requires D*m > 2")
    Q = q_map(m).map
    found = set()
    for F in monic_polys(m.spec, mdeg):
        t = transform(F, Q)
        assert t, "transform of a nonzero polynomial vanished"
        t = monicize(t)[1]
        if t.degree == D * mdeg and is_irreducible(t):
            found.add(t)
    return sorted(found, key=lambda f: f.encode())


def decompose(f: Poly, Q: RationalMap) -> Poly:
    """The monic F with monicize(transform(F, Q)) = f, recovered by solving
    the linear system in the coefficients of F; raises when f is not a
    transform (which signals non-invariance)."""
    if not f:
        raise ValueError("cannot decompose the zero polynomial")
    D = Q.degree
    if f.degree % D:
        raise ValueError(f"degree {f.degree} is not a multiple of {D}")
    mdeg = f.degree // D
    npow = [Poly.one(f.ring)]
    dpow = [Poly.one(f.ring)]
    for _ in range(mdeg):
        npow.append(npow[-1] * Q.num)
        dpow.append(dpow[-1] * Q.den)
    cols = [npow[j] * dpow[mdeg - j] for j in range(mdeg + 1)]
    rows = [[col.coeff(i) for col in cols] for i in range(f.degree + 1)]
    rhs = [f.coeff(i) for i in range(f.degree + 1)]
    sol = linalg.solve(f.ring, rows, rhs)
    if sol is None:
        raise ValueError("polynomial is not a transform under this map")
    F = Poly(f.ring, sol)
    assert F, "decomposition produced the zero polynomial"
    return monicize(F)[1]
